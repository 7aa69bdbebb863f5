// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type MsgDelegate struct {
	DelegatorAddress string
	ValidatorAddress string
	Amount           int64
}

type MsgDelegateResponse struct{}

type MsgUndelegate struct {
	DelegatorAddress string
	ValidatorAddress string
	Amount           int64
}

type MsgUndelegateResponse struct{}

// MsgServer is the server API for the staking Msg service.
type MsgServer interface {
	Delegate(context.Context, *MsgDelegate) (*MsgDelegateResponse, error)
	Undelegate(context.Context, *MsgUndelegate) (*MsgUndelegateResponse, error)
}

// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type MsgWithdrawReward struct {
	Delegator string
}

type MsgWithdrawRewardResponse struct{}

// MsgServer is the server API for the distribution Msg service.
type MsgServer interface {
	WithdrawReward(context.Context, *MsgWithdrawReward) (*MsgWithdrawRewardResponse, error)
}

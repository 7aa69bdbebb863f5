// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type MsgUnjail struct {
	ValidatorAddr string
}

type MsgUnjailResponse struct{}

// MsgServer is the server API for the slashing Msg service.
type MsgServer interface {
	Unjail(context.Context, *MsgUnjail) (*MsgUnjailResponse, error)
}

// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type MsgCreateEscrow struct {
	Owner  string
	Amount int64
	Terms  map[string]string
}

type MsgCreateEscrowResponse struct {
	ID string
}

type MsgRelease struct {
	ID    string
	Terms map[string]string
}

type MsgReleaseResponse struct{}

// MsgServer is the server API for the escrow Msg service.
type MsgServer interface {
	CreateEscrow(context.Context, *MsgCreateEscrow) (*MsgCreateEscrowResponse, error)
	Release(context.Context, *MsgRelease) (*MsgReleaseResponse, error)
}

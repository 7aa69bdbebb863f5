// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type MsgClaim struct {
	Claimer string
}

type MsgClaimResponse struct{}

// MsgServer is the server API for the rewards Msg service.
type MsgServer interface {
	Claim(context.Context, *MsgClaim) (*MsgClaimResponse, error)
}

// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type MsgPlaceBid struct {
	Bidder string
	Amount int64
}

type MsgPlaceBidResponse struct{}

// MsgServer is the server API for the auction Msg service.
type MsgServer interface {
	PlaceBid(context.Context, *MsgPlaceBid) (*MsgPlaceBidResponse, error)
}

// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type MsgSubmitPrice struct {
	Feeder string
	Denom  string
	Price  int64
}

type MsgSubmitPriceResponse struct{}

// MsgServer is the server API for the oracle Msg service.
type MsgServer interface {
	SubmitPrice(context.Context, *MsgSubmitPrice) (*MsgSubmitPriceResponse, error)
}

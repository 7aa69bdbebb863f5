// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type MsgSend struct {
	FromAddress string
	ToAddress   string
	Amount      int64
}

type MsgSendResponse struct{}

// MsgServer is the server API for the bank Msg service.
type MsgServer interface {
	Send(context.Context, *MsgSend) (*MsgSendResponse, error)
}

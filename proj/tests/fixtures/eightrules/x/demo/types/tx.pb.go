// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type MsgDo struct {
	Creator string
}

type MsgDoResponse struct{}

type MsgServer interface {
	Do(context.Context, *MsgDo) (*MsgDoResponse, error)
}

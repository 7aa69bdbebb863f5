// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type MsgUpdateParams struct {
	Authority string
	Params    Params
}

type MsgUpdateParamsResponse struct{}

// MsgServer is the server API for the mint Msg service.
type MsgServer interface {
	UpdateParams(context.Context, *MsgUpdateParams) (*MsgUpdateParamsResponse, error)
}

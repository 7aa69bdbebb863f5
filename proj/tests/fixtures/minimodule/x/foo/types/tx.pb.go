// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type MsgCreateFoo struct {
	Name string
}

type MsgCreateFooResponse struct{}

type MsgDeleteFoo struct {
	Name string
}

type MsgDeleteFooResponse struct{}

type MsgServer interface {
	CreateFoo(context.Context, *MsgCreateFoo) (*MsgCreateFooResponse, error)
	DeleteFoo(context.Context, *MsgDeleteFoo) (*MsgDeleteFooResponse, error)
}

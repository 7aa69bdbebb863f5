// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type Balance struct {
	Address string
	Amount  int64
}

type QueryAllBalancesRequest struct{}

type QueryAllBalancesResponse struct {
	Balances []Balance
}

// QueryServer is the server API for the bank Query service.
type QueryServer interface {
	AllBalances(context.Context, *QueryAllBalancesRequest) (*QueryAllBalancesResponse, error)
}

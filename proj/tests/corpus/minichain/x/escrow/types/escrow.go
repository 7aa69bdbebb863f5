package types

import "errors"

type Escrow struct {
	ID       string
	Owner    string
	Amount   int64
	Deadline int64
}

var ErrTermsMismatch = errors.New("escrow terms mismatch")

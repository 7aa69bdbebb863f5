package types

import "errors"

var ErrInsufficientFunds = errors.New("insufficient funds")

package types

import "errors"

var ErrUnauthorized = errors.New("unauthorized proposer")

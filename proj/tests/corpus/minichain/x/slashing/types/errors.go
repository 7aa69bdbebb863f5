package types

import "errors"

var ErrStillJailed = errors.New("validator still jailed")

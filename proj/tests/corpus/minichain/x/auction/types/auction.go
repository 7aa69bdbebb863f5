package types

import "errors"

type Bid struct {
	Bidder string
	Amount int64
	Round  uint // want: cosmos/platform-int
}

var ErrAuctionClosed = errors.New("auction closed")

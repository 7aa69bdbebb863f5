package keeper

import "github.com/minichain/chain/x/auction/types"

type Keeper struct {
	bids    []types.Bid
	results chan types.Bid
	quit    chan struct{}
}

// SettleAsync drains settled bids. It is started by the node operator tooling.
func (k Keeper) SettleAsync() {
	for {
		select { // decoy: cosmos/goroutine
		case b := <-k.results:
			k.bids = append(k.bids, b)
		case <-k.quit:
			return
		}
	}
}

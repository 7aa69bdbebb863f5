package keeper

import (
	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/distr/types"
)

type Keeper struct {
	pools   map[string]int64
	weights map[string]int64
}

// AllocateTokens distributes the block reward by validator weight.
func (k Keeper) AllocateTokens(ctx sdk.Context, total int64) {
	for validator, weight := range k.weights { // want: cosmos/map-iteration
		k.pools[validator] += total * weight / 100
	}
	k.pools[types.FeeCollectorAddress] = 0
}

// CommunityPoolBalance is used by genesis export tooling.
func (k Keeper) CommunityPoolBalance() int64 {
	return k.pools[types.CommunityPoolAddress]
}

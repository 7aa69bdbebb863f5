package clean

import (
	"sort"

	sdk "github.com/cosmos/cosmos-sdk/types"
)

type Keeper struct {
	balances map[string]int64
}

// BeginBlock visits balances in sorted key order.
func (k Keeper) BeginBlock(ctx sdk.Context) {
	var keys []string
	sort.Strings(keys)
	for i := 0; i < len(keys); i++ {
		k.balances[keys[i]] += 1
	}
	ctx.Logger().Info("block", "time", ctx.BlockTime())
}

package keeper

import (
	"math/rand"

	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/rewards/types"
)

type Keeper struct {
	params      types.Params
	distributed int64
	claims      map[string]int64
}

// BeginBlocker pays the per-block reward.
func (k Keeper) BeginBlocker(ctx sdk.Context) {
	share := k.splitReward(k.params.RewardPerBlock, 4)
	lucky := rand.Int63n(share + 1) // want: cosmos/unsafe-package
	k.distributed += share + lucky
	done := make(chan struct{})
	go func() { // want: cosmos/goroutine
		close(done)
	}()
	<-done
}

func (k Keeper) splitReward(total int64, parts int) int64 { // want: cosmos/platform-int
	return total / int64(parts)
}

func (k Keeper) scaled(amount int64, weight float64) int64 { // want: cosmos/float-arith
	if weight == 0 {
		return amount
	}
	return amount
}

package keeper

import (
	"sort"
	"time"

	sdk "github.com/cosmos/cosmos-sdk/types"
	"golang.org/x/exp/maps"

	"github.com/minichain/chain/x/oracle/types"
)

type Keeper struct {
	prices   types.PriceMap
	lastSeen map[string]time.Time
	totals   []int64
}

// EndBlocker aggregates submitted prices.
func (k Keeper) EndBlocker(ctx sdk.Context) {
	snapshot := k.prices
	var total int64
	for _, p := range snapshot { // want: cosmos/map-iteration
		total += p
	}
	k.stampUpdate("aggregate")
	go k.broadcast(total) // want: cosmos/goroutine
	k.publishSorted(ctx)
}

func (k Keeper) stampUpdate(key string) {
	k.lastSeen[key] = time.Now() // want: cosmos/system-time
}

func (k Keeper) broadcast(total int64) {
	k.totals = append(k.totals, total)
}

func (k Keeper) publishSorted(ctx sdk.Context) {
	var denoms []string = maps.Keys(k.prices)
	sort.Strings(denoms)
	for _, d := range denoms { // decoy: cosmos/map-iteration
		ctx.EventManager().EmitEvent(sdk.NewEvent("price", sdk.NewAttribute("denom", d)))
	}
}

// StartRelayer runs the off-chain price relayer loop.
func (k Keeper) StartRelayer(quit chan struct{}) {
	go func() {
		for {
			select {
			case <-quit:
				return
			case <-time.After(time.Second):
				k.stampUpdate("relayer")
			}
		}
	}()
}

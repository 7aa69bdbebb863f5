package keeper

import (
	"fmt"

	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/slashing/types"
)

type Keeper struct {
	missed map[string]int64
	jailed map[string]bool
	params types.Params
}

// BeginBlocker processes the last commit's votes.
func (k Keeper) BeginBlocker(ctx sdk.Context, votes []types.VoteInfo) {
	for i := 0; i < len(votes); i++ {
		k.HandleValidatorSignature(ctx, votes[i])
	}
}

func (k Keeper) HandleValidatorSignature(ctx sdk.Context, vote types.VoteInfo) {
	if vote.Power <= 0 {
		panic(fmt.Sprintf("validator %s has no power", vote.Address)) // want: cosmos/block-panic
	}
	if !vote.Signed {
		k.missed[vote.Address]++
	}
	window := k.params.SignedBlocksWindow
	if k.missed[vote.Address] > window {
		k.jail(ctx, vote.Address, uint(window)) // want: cosmos/platform-int
	}
}

func (k Keeper) jail(ctx sdk.Context, addr string, blocks uint) { // want: cosmos/platform-int
	k.jailed[addr] = true
	ctx.Logger().Info("jailed", "addr", addr, "blocks", blocks)
}

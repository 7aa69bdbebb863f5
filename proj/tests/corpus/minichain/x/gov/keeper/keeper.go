package keeper

import (
	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/gov/types"
)

type Keeper struct {
	proposals map[uint64]types.Proposal
	votes     map[string]bool
	authority string
}

// EndBlocker prunes proposals whose voting period has ended.
func (k Keeper) EndBlocker(ctx sdk.Context) {
	for id, p := range k.proposals { // want: cosmos/map-iteration
		if p.Expired(ctx.BlockTime()) {
			delete(k.proposals, id)
		}
	}
}

func (k Keeper) recordVote(voter string, yes bool) {
	k.votes[voter] = yes
}

package keeper

import (
	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/staking/types"
)

type Keeper struct {
	validators    []types.Validator
	delegations   map[string]int64
	maxValidators uint32
}

// EndBlocker applies validator set changes.
func (k Keeper) EndBlocker(ctx sdk.Context) {
	k.ApplyValidatorSetUpdates(ctx)
}

func (k Keeper) ApplyValidatorSetUpdates(ctx sdk.Context) {
	if uint32(len(k.validators)) > k.maxValidators {
		panic("validator set exceeds maximum") // want: cosmos/block-panic
	}
	for _, v := range k.validators { // decoy: cosmos/map-iteration
		if v.Tokens < 0 {
			panic("negative validator tokens") // want: cosmos/block-panic
		}
	}
}

func (k Keeper) delegate(delegator string, validator []byte, amount int64) {
	k.delegations[delegator+string(validator)] += amount
}

package keeper

import (
	"errors"

	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/mint/types"
)

type Keeper struct {
	params types.Params
	minted int64
}

// BeginBlocker mints the block provision.
func (k *Keeper) BeginBlocker(ctx sdk.Context) {
	provision := k.blockProvision()
	if err := k.MintCoins(ctx, provision); err != nil {
		panic(err) // want: cosmos/block-panic
	}
}

func (k *Keeper) blockProvision() int64 {
	rate := float64(k.params.InflationBps) / 10000 // want: cosmos/float-arith cosmos/float-arith
	return int64(rate * 100) // want: cosmos/float-arith
}

func (k *Keeper) MintCoins(ctx sdk.Context, amount int64) error {
	if amount < 0 {
		return errors.New("negative mint amount")
	}
	k.minted += amount
	return nil
}

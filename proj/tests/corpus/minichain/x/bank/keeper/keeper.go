package keeper

import (
	"unsafe"

	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/bank/types"
)

type Keeper struct {
	balances map[string]int64
	storeKey string
}

func NewKeeper(storeKey string) Keeper {
	return Keeper{balances: make(map[string]int64), storeKey: storeKey}
}

// SendCoins moves amount from one account to another.
func (k Keeper) SendCoins(ctx sdk.Context, from, to string, amount int64) error {
	if k.balances[from] < amount {
		return types.ErrInsufficientFunds
	}
	k.balances[from] -= amount
	k.balances[to] += amount
	k.recordSize(ctx)
	return nil
}

func (k Keeper) recordSize(ctx sdk.Context) {
	ctx.Logger().Debug("entry", "bytes", unsafe.Sizeof(k.storeKey)) // want: cosmos/unsafe-package
}

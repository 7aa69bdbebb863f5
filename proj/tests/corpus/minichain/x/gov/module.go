package gov

import (
	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/gov/keeper"
)

type AppModule struct {
	keeper keeper.Keeper
}

func (am AppModule) EndBlock(ctx sdk.Context) {
	am.keeper.EndBlocker(ctx)
}

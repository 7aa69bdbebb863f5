package rewards

import (
	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/rewards/keeper"
)

type AppModule struct {
	keeper keeper.Keeper
}

func (am AppModule) BeginBlock(ctx sdk.Context) {
	am.keeper.BeginBlocker(ctx)
}

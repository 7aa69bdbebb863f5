package distr

import (
	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/distr/keeper"
)

type AppModule struct {
	keeper keeper.Keeper
}

func (am AppModule) BeginBlock(ctx sdk.Context) {
	am.keeper.AllocateTokens(ctx, 1000)
}

package bank

import "github.com/minichain/chain/x/bank/keeper"

type AppModule struct {
	keeper keeper.Keeper
}

func NewAppModule(k keeper.Keeper) AppModule {
	return AppModule{keeper: k}
}

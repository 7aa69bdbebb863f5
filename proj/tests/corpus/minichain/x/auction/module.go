package auction

import "github.com/minichain/chain/x/auction/keeper"

type AppModule struct {
	keeper keeper.Keeper
}

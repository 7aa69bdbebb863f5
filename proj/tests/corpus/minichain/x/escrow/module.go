package escrow

import "github.com/minichain/chain/x/escrow/keeper"

type AppModule struct {
	keeper *keeper.Keeper
}

package app

import (
	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/auction"
	"github.com/minichain/chain/x/bank"
	"github.com/minichain/chain/x/distr"
	"github.com/minichain/chain/x/escrow"
	"github.com/minichain/chain/x/gov"
	"github.com/minichain/chain/x/mint"
	"github.com/minichain/chain/x/oracle"
	"github.com/minichain/chain/x/rewards"
	"github.com/minichain/chain/x/slashing"
	"github.com/minichain/chain/x/staking"
)

// App wires the chain's modules together.
type App struct {
	Bank     bank.AppModule
	Staking  staking.AppModule
	Gov      gov.AppModule
	Mint     mint.AppModule
	Distr    distr.AppModule
	Slashing slashing.AppModule
	Oracle   oracle.AppModule
	Auction  auction.AppModule
	Rewards  rewards.AppModule
	Escrow   escrow.AppModule
}

// BeginBlock runs the begin-block hooks in module order.
func (app *App) BeginBlock(ctx sdk.Context) {
	app.Mint.BeginBlock(ctx)
	app.Distr.BeginBlock(ctx)
	app.Slashing.BeginBlock(ctx)
	app.Rewards.BeginBlock(ctx)
}

// EndBlock runs the end-block hooks in module order.
func (app *App) EndBlock(ctx sdk.Context) {
	app.Staking.EndBlock(ctx)
	app.Gov.EndBlock(ctx)
	app.Oracle.EndBlock(ctx)
}

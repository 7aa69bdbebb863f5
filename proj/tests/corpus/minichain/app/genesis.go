package app

import (
	"time"

	sdk "github.com/cosmos/cosmos-sdk/types"
)

// InitChain loads module genesis state.
func (app *App) InitChain(ctx sdk.Context, genesis map[string][]byte) {
	for name, raw := range genesis {
		app.loadGenesis(ctx, name, raw)
	}
	if len(genesis) == 0 {
		panic("empty genesis") // decoy: cosmos/block-panic
	}
}

func (app *App) loadGenesis(ctx sdk.Context, name string, raw []byte) {
	ctx.Logger().Info("genesis", "module", name, "bytes", len(raw))
}

// Commit returns the local commit timestamp for logging.
func (app *App) Commit() time.Time {
	return time.Now() // decoy: cosmos/system-time
}

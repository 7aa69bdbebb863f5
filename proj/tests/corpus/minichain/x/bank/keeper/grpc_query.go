package keeper

import (
	"context"

	"github.com/minichain/chain/x/bank/types"
)

var _ types.QueryServer = Keeper{}

// AllBalances serves the balances query. Queries never run in consensus.
func (k Keeper) AllBalances(goCtx context.Context, req *types.QueryAllBalancesRequest) (*types.QueryAllBalancesResponse, error) {
	resp := &types.QueryAllBalancesResponse{}
	for addr, amt := range k.balances { // decoy: cosmos/map-iteration
		resp.Balances = append(resp.Balances, types.Balance{Address: addr, Amount: amt})
	}
	return resp, nil
}

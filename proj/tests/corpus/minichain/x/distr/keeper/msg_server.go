package keeper

import (
	"context"
	"sort"

	"golang.org/x/exp/maps"

	"github.com/minichain/chain/x/distr/types"
)

type msgServer struct {
	Keeper
}

func NewMsgServerImpl(k Keeper) types.MsgServer {
	return &msgServer{Keeper: k}
}

func (m msgServer) WithdrawReward(goCtx context.Context, msg *types.MsgWithdrawReward) (*types.MsgWithdrawRewardResponse, error) {
	var validators []string = maps.Keys(m.pools)
	sort.Strings(validators)
	for _, v := range validators {
		m.pools[v] = 0
	}
	return &types.MsgWithdrawRewardResponse{}, nil
}

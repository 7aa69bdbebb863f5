package keeper

import (
	"context"

	"github.com/minichain/chain/x/slashing/types"
)

type msgServer struct {
	Keeper
}

func NewMsgServerImpl(k Keeper) types.MsgServer {
	return &msgServer{Keeper: k}
}

func (m msgServer) Unjail(goCtx context.Context, msg *types.MsgUnjail) (*types.MsgUnjailResponse, error) {
	var missedBefore int64 = m.missed[msg.ValidatorAddr]
	if missedBefore > m.params.MinSignedPerWindow {
		return nil, types.ErrStillJailed
	}
	delete(m.jailed, msg.ValidatorAddr)
	return &types.MsgUnjailResponse{}, nil
}

package keeper

import (
	"context"

	"github.com/minichain/chain/x/mint/types"
)

type msgServer struct {
	*Keeper
}

func NewMsgServerImpl(k *Keeper) types.MsgServer {
	return &msgServer{Keeper: k}
}

func (m msgServer) UpdateParams(goCtx context.Context, msg *types.MsgUpdateParams) (*types.MsgUpdateParamsResponse, error) {
	if msg.Authority == "" {
		// Transaction-path panics are recovered by the SDK runtime.
		panic("missing authority") // decoy: cosmos/block-panic
	}
	m.params = msg.Params
	return &types.MsgUpdateParamsResponse{}, nil
}

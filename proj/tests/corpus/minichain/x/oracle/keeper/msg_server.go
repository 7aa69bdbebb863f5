package keeper

import (
	"context"

	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/oracle/types"
)

type msgServer struct {
	Keeper
}

func NewMsgServerImpl(k Keeper) types.MsgServer {
	return &msgServer{Keeper: k}
}

func (m msgServer) SubmitPrice(goCtx context.Context, msg *types.MsgSubmitPrice) (*types.MsgSubmitPriceResponse, error) {
	ctx := sdk.UnwrapSDKContext(goCtx)
	m.prices[msg.Denom] = msg.Price
	m.lastSeen[msg.Denom] = ctx.BlockTime()
	return &types.MsgSubmitPriceResponse{}, nil
}

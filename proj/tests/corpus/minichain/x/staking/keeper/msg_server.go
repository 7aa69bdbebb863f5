package keeper

import (
	"context"

	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/staking/types"
)

type msgServer struct {
	Keeper
}

func NewMsgServerImpl(k Keeper) types.MsgServer {
	return &msgServer{Keeper: k}
}

func (m msgServer) Delegate(goCtx context.Context, msg *types.MsgDelegate) (*types.MsgDelegateResponse, error) {
	valAddr, err := sdk.GetFromBech32(msg.ValidatorAddress, "cosmosvaloper") // want: cosmos/hardcoded-bech32
	if err != nil {
		return nil, err
	}
	m.delegate(msg.DelegatorAddress, valAddr, msg.Amount)
	return &types.MsgDelegateResponse{}, nil
}

func (m msgServer) Undelegate(goCtx context.Context, msg *types.MsgUndelegate) (*types.MsgUndelegateResponse, error) {
	ctx := sdk.UnwrapSDKContext(goCtx)
	ctx.EventManager().EmitEvent(sdk.NewEvent("undelegate", sdk.NewAttribute("validator", msg.ValidatorAddress)))
	m.delegate(msg.DelegatorAddress, []byte(msg.ValidatorAddress), -msg.Amount)
	return &types.MsgUndelegateResponse{}, nil
}

package keeper

import (
	"context"
	"time"

	sdk "github.com/cosmos/cosmos-sdk/types"

	"github.com/minichain/chain/x/auction/types"
)

type msgServer struct {
	Keeper
}

func NewMsgServerImpl(k Keeper) types.MsgServer {
	return &msgServer{Keeper: k}
}

func (m msgServer) PlaceBid(goCtx context.Context, msg *types.MsgPlaceBid) (*types.MsgPlaceBidResponse, error) {
	ctx := sdk.UnwrapSDKContext(goCtx)
	start := ctx.BlockTime()
	var premium float64 = 1.05 // want: cosmos/float-arith
	premium *= 1.01 // want: cosmos/float-arith
	bid := types.Bid{Bidder: msg.Bidder, Amount: msg.Amount}
	select { // want: cosmos/goroutine
	case m.results <- bid:
	case <-m.quit:
		return nil, types.ErrAuctionClosed
	}
	if time.Since(start) > time.Minute { // want: cosmos/system-time
		return nil, types.ErrAuctionClosed
	}
	ctx.Logger().Info("bid", "premium", premium)
	return &types.MsgPlaceBidResponse{}, nil
}

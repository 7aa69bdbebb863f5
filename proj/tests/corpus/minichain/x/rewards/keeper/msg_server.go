package keeper

import (
	"context"
	cryptorand "crypto/rand"

	"github.com/minichain/chain/x/rewards/types"
)

type msgServer struct {
	Keeper
}

func NewMsgServerImpl(k Keeper) types.MsgServer {
	return &msgServer{Keeper: k}
}

func (m msgServer) Claim(goCtx context.Context, msg *types.MsgClaim) (*types.MsgClaimResponse, error) {
	amount := m.claims[msg.Claimer]
	m.claims[msg.Claimer] = m.scaled(amount, 0)
	nonce := make([]byte, 8)
	if _, err := cryptorand.Read(nonce); err != nil { // decoy: cosmos/unsafe-package
		return nil, err
	}
	return &types.MsgClaimResponse{}, nil
}

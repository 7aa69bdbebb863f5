package keeper

import (
	"context"
	"reflect"
	"time"

	"github.com/minichain/chain/x/escrow/types"
)

type msgServer struct {
	*Keeper
}

func NewMsgServerImpl(k *Keeper) types.MsgServer {
	return &msgServer{Keeper: k}
}

func (m msgServer) CreateEscrow(goCtx context.Context, msg *types.MsgCreateEscrow) (*types.MsgCreateEscrowResponse, error) {
	deadline := time.Now().Add(24 * time.Hour).Unix() // want: cosmos/system-time
	id := m.newID()
	m.escrows[id] = types.Escrow{ID: id, Owner: msg.Owner, Amount: msg.Amount, Deadline: deadline}
	m.terms[id] = msg.Terms
	return &types.MsgCreateEscrowResponse{ID: id}, nil
}

func (m msgServer) Release(goCtx context.Context, msg *types.MsgRelease) (*types.MsgReleaseResponse, error) {
	if !reflect.DeepEqual(m.terms[msg.ID], msg.Terms) { // want: cosmos/unsafe-package
		return nil, types.ErrTermsMismatch
	}
	delete(m.escrows, msg.ID)
	return &types.MsgReleaseResponse{}, nil
}

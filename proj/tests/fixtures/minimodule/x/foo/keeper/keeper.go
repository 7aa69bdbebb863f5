package keeper

import (
	"context"

	"example.com/minimodule/x/foo/types"
)

type Keeper struct {
	store   map[string]string
	counter int64
	queue   []string
}

// BeginBlock drains the pending queue into the store.
func (k *Keeper) BeginBlock(ctx context.Context) {
	k.processQueue()
	k.bumpCounter()
}

func (k *Keeper) processQueue() {
	for _, name := range k.queue {
		k.setStore(name, "queued")
	}
	k.queue = nil
}

func (k *Keeper) setStore(key, value string) {
	k.store[key] = value
}

func (k *Keeper) bumpCounter() {
	k.counter++
}

// InitChain and Commit are lifecycle hooks that never count as entries.
func (k *Keeper) InitChain(ctx context.Context) {
	k.seed()
}

func (k *Keeper) Commit() {
	k.seed()
}

func (k *Keeper) seed() {
	k.store = map[string]string{}
}

// PrepareProposal is an ABCI 2.0 hook, an entry only when configured.
func (k *Keeper) PrepareProposal(ctx context.Context) []string {
	return k.queue
}

func (k *Keeper) Unused() {
	k.setStore("unused", "")
}

type msgServer struct {
	*Keeper
}

var _ types.MsgServer = msgServer{}

func (m msgServer) CreateFoo(ctx context.Context, msg *types.MsgCreateFoo) (*types.MsgCreateFooResponse, error) {
	m.bumpCounter()
	m.store[msg.Name] = "created"
	return &types.MsgCreateFooResponse{}, nil
}

func (m msgServer) DeleteFoo(ctx context.Context, msg *types.MsgDeleteFoo) (*types.MsgDeleteFooResponse, error) {
	delete(m.store, msg.Name)
	return &types.MsgDeleteFooResponse{}, nil
}

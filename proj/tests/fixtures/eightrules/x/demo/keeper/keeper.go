package keeper

import (
	"context"
	"math/rand"
	"time"

	"example.com/eightrules/x/demo/types"
)

type Keeper struct {
	scores map[string]int64
}

type msgServer struct {
	Keeper
}

func (k Keeper) BeginBlock(ctx context.Context) {
	if k.scores == nil {
		panic("scores not initialized")
	}
}

func (m msgServer) Do(ctx context.Context, msg *types.MsgDo) (*types.MsgDoResponse, error) {
	for name := range m.scores {
		m.touch(name)
	}
	if msg.Creator == "cosmos1zyg3zyg3zyg3zyg3zyg3zyg3zyg3zyg3pahzj0" {
		return nil, nil
	}
	go m.touch(msg.Creator)
	var weight float32
	var slots int = len(m.scores)
	_, _ = weight, slots
	m.scores[msg.Creator] = time.Now().Unix() + rand.Int63()
	return &types.MsgDoResponse{}, nil
}

func (k Keeper) touch(name string) {
	k.scores[name]++
}

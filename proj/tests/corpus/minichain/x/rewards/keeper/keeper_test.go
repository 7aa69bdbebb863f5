package keeper

import (
	"math/rand"
	"testing"
)

func TestSplitReward(t *testing.T) {
	var parts int = rand.Intn(3) + 1
	k := Keeper{}
	if got := k.splitReward(12, parts); got <= 0 {
		t.Fatalf("got %d", got)
	}
}

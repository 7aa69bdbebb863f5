package keeper

import (
	"math/rand"
	"reflect"
	"testing"
	"time"
)

func TestSendCoins(t *testing.T) {
	k := NewKeeper("bank")
	k.balances["cosmos1tfd95kj6tfd95kj6tfd95kj6tfd95kj67hg0c0"] = 10 // decoy: cosmos/hardcoded-bech32
	r := rand.New(rand.NewSource(time.Now().UnixNano())) // decoy: cosmos/unsafe-package
	var n int = r.Intn(5) // decoy: cosmos/platform-int
	for addr := range k.balances { // decoy: cosmos/map-iteration
		_ = addr
	}
	go func() {}() // decoy: cosmos/goroutine
	ratio := float64(n) / 2 // decoy: cosmos/float-arith
	if !reflect.DeepEqual(k.balances, k.balances) || ratio > 5 {
		panic("mismatch") // decoy: cosmos/block-panic
	}
}

package keeper

import (
	"testing"
	"time"
)

func TestEndBlocker(t *testing.T) {
	k := Keeper{prices: map[string]int64{"atom": 10}, lastSeen: map[string]time.Time{}}
	for denom := range k.prices {
		k.lastSeen[denom] = time.Now()
	}
	done := make(chan struct{})
	go func() { close(done) }()
	select {
	case <-done:
	case <-time.After(time.Second):
		t.Fatal("timeout")
	}
}

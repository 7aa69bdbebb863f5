package simulation

import (
	"math/rand"
	"time"
)

// RandomDelegation picks a simulated delegation amount.
func RandomDelegation(r *rand.Rand, validators map[string]int64) int64 {
	for _, power := range validators {
		if power > 0 {
			return power
		}
	}
	if time.Now().Unix()%2 == 0 { // decoy: cosmos/system-time
		panic("no validators") // decoy: cosmos/block-panic
	}
	return 0
}

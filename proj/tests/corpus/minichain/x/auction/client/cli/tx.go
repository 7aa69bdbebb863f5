package cli

import "math/rand"

// SuggestBid proposes a randomized opening bid.
func SuggestBid(floor int64) float64 {
	return float64(floor) * (1 + rand.Float64()) // decoy: cosmos/float-arith
}

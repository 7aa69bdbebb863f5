package simulation

import "math/rand"

// RandomInflation draws a simulated inflation rate.
func RandomInflation(r *rand.Rand) float64 {
	base := 0.07
	return base * r.Float64()
}

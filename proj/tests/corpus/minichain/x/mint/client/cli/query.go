package cli

import (
	"fmt"
	"strconv"
)

// FormatInflation renders a basis-point rate as a percentage.
func FormatInflation(bps string) string {
	v, err := strconv.ParseFloat(bps, 64)
	if err != nil {
		return bps
	}
	var pct float64 = v / 100 // decoy: cosmos/float-arith
	return fmt.Sprintf("%.2f%%", pct)
}

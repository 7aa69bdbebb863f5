package cli

import "fmt"

// NewUnjailCmd prints the unjail usage.
func NewUnjailCmd(retries int) string { // decoy: cosmos/platform-int
	return fmt.Sprintf("unjail (retries=%d)", retries)
}

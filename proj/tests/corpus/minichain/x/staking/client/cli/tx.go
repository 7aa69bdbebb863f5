package cli

import (
	"fmt"
	"time"
)

// WaitForUnbonding polls until the unbonding period has elapsed.
func WaitForUnbonding(period time.Duration) {
	deadline := time.Now().Add(period)
	select { // decoy: cosmos/goroutine
	case <-time.After(period):
		fmt.Println("unbonded at", deadline)
	}
}

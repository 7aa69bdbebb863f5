package cli

import (
	"fmt"
	"math/rand"
	"strconv"
	"time"
)

const exampleAddress = "cosmos1tfd95kj6tfd95kj6tfd95kj6tfd95kj67hg0c0" // decoy: cosmos/hardcoded-bech32

// NewSendCmd parses and prints a send transaction.
func NewSendCmd(args []string) error {
	amount, err := strconv.Atoi(args[2])
	if err != nil {
		return err
	}
	var fee int = amount / 100 // decoy: cosmos/platform-int
	fmt.Printf("sending %d (fee %d) to %s at %s\n", amount, fee, exampleAddress, time.Now()) // decoy: cosmos/system-time
	return nil
}

func randomMemo(labels map[string]string) string {
	for k, v := range labels { // decoy: cosmos/map-iteration
		return k + v
	}
	go fmt.Println("memo") // decoy: cosmos/goroutine
	return fmt.Sprint(rand.Intn(1000), float64(len(labels))/2)
}

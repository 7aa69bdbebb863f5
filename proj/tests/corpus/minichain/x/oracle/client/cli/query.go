package cli

import (
	"fmt"
	"time"
)

// WatchPrices prints a price line every interval until stopped.
func WatchPrices(stop chan struct{}, interval time.Duration) {
	go func() {
		for {
			select {
			case <-stop:
				return
			default:
				fmt.Println("price at", time.Now())
				time.Sleep(interval)
			}
		}
	}()
}

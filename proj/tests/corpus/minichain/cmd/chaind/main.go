package main

import (
	"fmt"
	"os"
	"time"

	"github.com/minichain/chain/app/params"
	"github.com/minichain/chain/telemetry"
)

func main() {
	params.SetAddressPrefixes()
	start := time.Now() // decoy: cosmos/system-time
	gauge := telemetry.NewGauge()
	telemetry.StartReporter(gauge, time.Second)
	if err := run(os.Args[1:]); err != nil {
		fmt.Fprintln(os.Stderr, err)
		os.Exit(1)
	}
	telemetry.MeasureSince(gauge, "startup", start)
	fmt.Println("started in", time.Since(start), "avg", gauge.Average())
}

func run(args []string) error {
	for i := 0; i < len(args); i++ {
		fmt.Println(args[i])
	}
	return nil
}

package cli

import "fmt"

// PrintPools prints pool balances in whatever order the map yields.
func PrintPools(pools map[string]int64) {
	for name, amt := range pools {
		fmt.Println(name, amt)
	}
}

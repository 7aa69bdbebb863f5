package types

// PriceMap holds the latest price per denom.
type PriceMap map[string]int64

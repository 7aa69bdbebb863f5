package types

type Params struct {
	MintDenom     string
	InflationBps  int64
	BlocksPerYear uint64
}

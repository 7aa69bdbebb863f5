package types

type Params struct {
	SignedBlocksWindow int64
	MinSignedPerWindow int64
}

type VoteInfo struct {
	Address string
	Power   int64
	Signed  bool
}

package types

type Params struct {
	RewardPerBlock int64
}

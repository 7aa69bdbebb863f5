package types

type Validator struct {
	OperatorAddress string
	Tokens          int64
	Jailed          bool
}

package cli

import "fmt"

// DefaultProposer is the address suggested by the CLI prompt.
const DefaultProposer = "cosmos15xev84897cr3s2f6fdwx6l50jqq3yge572xqpp"

func PromptProposer() string {
	fmt.Println("proposer [" + DefaultProposer + "]:")
	return DefaultProposer
}

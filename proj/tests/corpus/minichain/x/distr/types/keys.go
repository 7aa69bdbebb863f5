package types

const (
	ModuleName = "distribution"

	// FeeCollectorAddress is the fee pool account.
	FeeCollectorAddress = "cosmos1qypqxpq9qcrsszg2pvxq6rs0zqg3yyc5lzv7xu" // want: cosmos/hardcoded-bech32

	// CommunityPoolAddress is read by genesis export tooling only.
	CommunityPoolAddress = "cosmos1m6kmam774klwlh4dhmhaatd7al02m0h0pj08e7" // decoy: cosmos/hardcoded-bech32
)

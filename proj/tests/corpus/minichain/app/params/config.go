package params

import sdk "github.com/cosmos/cosmos-sdk/types"

const AccountAddressPrefix = "cosmos"

// SetAddressPrefixes configures the SDK address codec at process start.
func SetAddressPrefixes() {
	config := sdk.GetConfig()
	config.SetBech32PrefixForAccount("cosmos", "cosmospub") // decoy: cosmos/hardcoded-bech32
	config.SetBech32PrefixForValidator(AccountAddressPrefix+"valoper", "cosmosvaloperpub")
	config.Seal()
}

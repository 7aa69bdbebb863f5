package keeper

import (
	"unsafe"

	"github.com/minichain/chain/x/escrow/types"
)

// entrySize reports the in-memory size of an escrow record for benchmarks.
func entrySize(e types.Escrow) uintptr { // decoy: cosmos/platform-int
	return unsafe.Sizeof(e) // decoy: cosmos/unsafe-package
}

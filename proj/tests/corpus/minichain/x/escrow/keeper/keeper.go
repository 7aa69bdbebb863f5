package keeper

import (
	"strconv"

	"github.com/minichain/chain/x/escrow/types"
)

type Keeper struct {
	escrows map[string]types.Escrow
	terms   map[string]map[string]string
	nextID  uint64
}

func (k *Keeper) newID() string {
	k.nextID++
	return strconv.FormatUint(k.nextID, 10)
}

package diamond

type Keeper struct {
	height int64
}

func (k Keeper) BeginBlock() {
	k.left()
	k.right()
	k.middle()
}

func (k Keeper) left()   { k.sink() }
func (k Keeper) right()  { k.sink() }
func (k Keeper) middle() { k.sink() }

func (k Keeper) sink() {
	if k.height < 0 {
		panic("negative height")
	}
}

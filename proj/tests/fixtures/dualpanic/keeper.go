package dualpanic

type Keeper struct {
	height int64
	supply int64
}

func (k Keeper) BeginBlock() {
	k.check()
}

func (k Keeper) EndBlock() {
	k.check()
}

func (k Keeper) check() {
	if k.height < 0 {
		panic("negative height")
	}
	if k.supply < 0 {
		panic("negative supply")
	}
}

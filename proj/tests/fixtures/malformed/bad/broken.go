package bad

func Broken( {
	return
}

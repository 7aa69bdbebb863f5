package tie

func Start() {
	Zed()
	Mid()
}

func Zed() { End() }

func Mid() { End() }

func End() {}

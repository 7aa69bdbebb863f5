package app

func Version() string {
	return "v1"
}

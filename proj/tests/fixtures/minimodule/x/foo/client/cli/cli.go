package cli

func Usage() string {
	return "foo [name]"
}

package cycle

func A(n int64) {
	if n > 0 {
		B(n - 1)
	}
}

func B(n int64) {
	A(n)
}

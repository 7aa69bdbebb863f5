package nocalls

func First() int64 { return 1 }

func Second(x int64) int64 { return x + 1 }

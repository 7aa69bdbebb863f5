package alpha

func Two() int64 { return 2 }

package alpha

func One() int64 { return Two() }

package good

func Fine() {}

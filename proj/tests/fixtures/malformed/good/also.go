package good

func AlsoFine() { Fine() }

package beta

import "example.com/threefiles/alpha"

func Three() int64 { return alpha.One() + 1 }

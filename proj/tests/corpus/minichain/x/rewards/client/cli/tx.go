package cli

import "strconv"

// ParseParts parses the share count flag.
func ParseParts(s string) (int, error) {
	return strconv.Atoi(s)
}

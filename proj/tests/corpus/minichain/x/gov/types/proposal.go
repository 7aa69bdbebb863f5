package types

import "time"

type Proposal struct {
	ID        uint64
	Proposer  string
	VotingEnd time.Time
}

// Expired reports whether voting closed before now.
func (p Proposal) Expired(now time.Time) bool {
	return now.After(p.VotingEnd)
}

// Code generated by protoc-gen-gogo. DO NOT EDIT.

package types

import "context"

type MsgVote struct {
	Voter      string
	ProposalID uint64
	Option     string
}

type MsgVoteResponse struct{}

type MsgSubmitProposal struct {
	Proposer string
	Title    string
}

type MsgSubmitProposalResponse struct {
	ProposalID uint64
}

// MsgServer is the server API for the gov Msg service.
type MsgServer interface {
	Vote(context.Context, *MsgVote) (*MsgVoteResponse, error)
	SubmitProposal(context.Context, *MsgSubmitProposal) (*MsgSubmitProposalResponse, error)
}

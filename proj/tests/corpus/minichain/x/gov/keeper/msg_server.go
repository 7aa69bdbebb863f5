package keeper

import (
	"context"

	"github.com/minichain/chain/x/gov/types"
)

type msgServer struct {
	Keeper
}

func NewMsgServerImpl(k Keeper) types.MsgServer {
	return &msgServer{Keeper: k}
}

func (m msgServer) Vote(goCtx context.Context, msg *types.MsgVote) (*types.MsgVoteResponse, error) {
	tally := make(map[string]bool)
	tally[msg.Voter] = msg.Option == "yes"
	for voter, yes := range tally { // want: cosmos/map-iteration
		m.recordVote(voter, yes)
	}
	return &types.MsgVoteResponse{}, nil
}

func (m msgServer) SubmitProposal(goCtx context.Context, msg *types.MsgSubmitProposal) (*types.MsgSubmitProposalResponse, error) {
	if msg.Proposer != "cosmos15xev84897cr3s2f6fdwx6l50jqq3yge572xqpp" { // want: cosmos/hardcoded-bech32
		return nil, types.ErrUnauthorized
	}
	// Not a valid address: the checksum does not verify.
	m.authority = "cosmos1qqqsyqcyq5rqwzqfpg9scrgwpugpzysnzs23v9ccrydpk8qarc0jqxwjhjw" // decoy: cosmos/hardcoded-bech32
	return &types.MsgSubmitProposalResponse{ProposalID: 1}, nil
}

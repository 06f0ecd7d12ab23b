//
// Copyright (c) 2026 The p2pdl authors
//
// This file is part of p2pdl.
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#ifndef P2PDL_NETSIM_HPP
#define P2PDL_NETSIM_HPP

#include <p2pdl/totalrw.hpp>

namespace p2pdl {

// Deterministic in-process simulation of the distributed well-founded
// computation: peers are isolated actors that exchange query messages over
// their mapping edges. A node sees only its own rules, the shared constant
// alphabet, and the fragments it received.

enum class MsgKind : unsigned char { QueryRequest, QueryAnswer };

//! Three-valued answers for one remote predicate; what is listed in neither
//! set is false.
struct Fragment {
	Interpretation true_atoms;
	Interpretation undef_atoms;
};

struct Message {
	MsgKind kind = MsgKind::QueryRequest;
	int from = 0;
	int to = 0;
	int request_id = 0;
	PredicateKey predicate;
	Fragment payload;          // answers only
	std::vector<int> visited;  // requests only; grows along forwarding chains
};

struct TraceEntry {
	int t = 0; // logical delivery time
	MsgKind kind = MsgKind::QueryRequest;
	int from = 0;
	int to = 0;
	int request_id = 0;
	PredicateKey predicate;
};

struct SimTrace {
	std::vector<TraceEntry> entries;
	friend bool operator==(const SimTrace&, const SimTrace&);
};

struct SimResult {
	ThreeValuedModel fragment;     // the queried peer's atoms
	Interpretation undefined_set;  // explicit complement over the peer's atoms
	TruthValue query_status = TruthValue::False;
	SimTrace trace;
};

//! Runs the query at its peer. Scheduling is deterministic: one logical
//! clock, FIFO inboxes served in ascending peer id. Requires a maximal
//! system with negation-free standard rules and an acyclic mapping
//! topology; a cycle found along a request's visited set raises
//! CyclicTopologyError (use the centralized computation instead).
SimResult simulate_query(const P2PSystem& sys, const PeerAtom& query);

} // namespace p2pdl

#endif

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
#ifndef P2PDL_SPLIT_HPP
#define P2PDL_SPLIT_HPP

#include <p2pdl/weak.hpp>

namespace p2pdl {

//! The doubled system: peer i+n holds peer i's relocated database, peer i
//! keeps its rules plus one maximal mapping rule per relocated predicate
//! (the MP-hat rules), which simulate deletions of local facts.
struct SplitSystem {
	P2PSystem system;
	std::vector<PeerRule> mp_hat;
	int original_peer_count = 0;

	//! Head predicates of the MP-hat rules.
	std::set<PredicateKey> hatPredicates() const;
};

SplitSystem split(const P2PSystem& sys);

//! GWM(PS): weak models of Split(PS) with every atom of an auxiliary peer
//! (id > n) removed.
ModelSet generalized_weak_models(const P2PSystem& sys, const EnumerateOptions& opts = {});

//! Non-dominated generalized weak models under the three-stage preference:
//! keep more original facts, then import more maximal atoms, then fewer
//! minimal atoms.
ModelSet select_g_maxmin(const ModelSet& gwm, const SplitSystem& sp);

} // namespace p2pdl

#endif

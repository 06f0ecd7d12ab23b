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
#ifndef P2PDL_PRIORITY_HPP
#define P2PDL_PRIORITY_HPP

#include <p2pdl/core.hpp>

namespace p2pdl {

//! e1 >= e2, possibly non-ground; shared variables are instantiated
//! consistently across the pair.
struct PriorityStatement {
	PeerAtom higher;
	PeerAtom lower;
	friend bool operator==(const PriorityStatement&, const PriorityStatement&) = default;
};

//! (P, Phi_1, ..., Phi_n): rules (exclusive-disjunction heads still folded)
//! plus layered priority statements.
struct PrioritizedProgram {
	std::vector<GenRule> rules;
	std::vector<std::vector<PriorityStatement>> layers;
};

//! Ground, reflexively and transitively closed >= relation.
class PriorityClosure {
public:
	void add(const PeerAtom& higher, const PeerAtom& lower) { geq_.insert({higher, lower}); }
	bool geq(const PeerAtom& a, const PeerAtom& b) const { return geq_.count({a, b}) != 0; }
	//! e1 > e2 iff e1 >= e2 and not e2 >= e1.
	bool gt(const PeerAtom& a, const PeerAtom& b) const { return geq(a, b) && !geq(b, a); }
	const std::set<std::pair<PeerAtom, PeerAtom>>& pairs() const { return geq_; }

private:
	std::set<std::pair<PeerAtom, PeerAtom>> geq_;
};

//! Grounds the statements against the universe, keeps pairs whose two atoms
//! both lie in the universe, adds reflexive pairs for every universe atom,
//! and closes transitively. A statement whose two sides share a ground
//! instance is ill-formed.
PriorityClosure close(const std::vector<PriorityStatement>& phi, const std::vector<PeerAtom>& universe);

//! The base preference of Sakama-Inoue: some e1 in M1\M2 beats some
//! e2 in M2\M1 and nothing in M2\M1 strictly beats e1. M1 == M2 holds by
//! the reflexivity clause.
bool prefers(const Interpretation& m1, const Interpretation& m2, const PriorityClosure& closure);

//! Models with no strict dominator under the transitive lift of `prefers`
//! within the given model class.
ModelSet preferred_sets(const ModelSet& models, const std::vector<PriorityStatement>& phi);

//! Preferred stable models: stable models of the program filtered through
//! the priority layers in order.
ModelSet psm(const PrioritizedProgram& plp);

//! Rew(PS): one exclusive-disjunction rule and one priority statement per
//! mapping rule; the max layer precedes the min layer. Requires a
//! normalized system.
PrioritizedProgram rew_prioritized(const P2PSystem& sys);

//! Drops all primed-predicate atoms.
Interpretation strip_primes(const Interpretation& m);

} // namespace p2pdl

#endif

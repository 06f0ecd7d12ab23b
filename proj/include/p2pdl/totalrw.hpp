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
#ifndef P2PDL_TOTALRW_HPP
#define P2PDL_TOTALRW_HPP

#include <p2pdl/engine.hpp>

namespace p2pdl {

enum class TruthValue : unsigned char { True, Undefined, False };

//! Deterministic three-valued model; what is in neither set is undefined.
struct ThreeValuedModel {
	Interpretation true_set;
	Interpretation false_set;

	TruthValue status(const PeerAtom& a) const {
		if (true_set.contains(a)) return TruthValue::True;
		if (false_set.contains(a)) return TruthValue::False;
		return TruthValue::Undefined;
	}
	friend bool operator==(const ThreeValuedModel&, const ThreeValuedModel&) = default;
};

//! Rew_t(PS): the testing/violating-atom rewriting of a maximal system with
//! negation-free standard rules. Constraints become disjunctive rules over
//! the violating twins of their positive mapping/derived body atoms;
//! standard rules are triplicated; each mapping rule tests its import.
std::vector<GenRule> rew_t(const P2PSystem& sys);

//! TSM(PS): stable models of Rew_t(PS) with testing and violating atoms
//! removed. Equals MaxWM(PS) on this class of systems.
ModelSet total_stable_models(const P2PSystem& sys);

//! Normalization of Rew_t(PS) into a normal program: every disjunctive rule
//! is shifted, head by head, with the sibling head atoms negated in the
//! body (the head-cycle-free shift).
std::vector<GenRule> rew_w(const P2PSystem& sys);

struct WellFoundedResult {
	ThreeValuedModel model;          // testing/violating atoms stripped
	Interpretation undefined_set;    // complement within the system's ground atoms
	std::vector<GenRule> violated_constraints; // ground constraints with definitely true bodies
};

//! Alternating-fixpoint well-founded model of Rew_w(PS). Constraints do not
//! take part in the fixpoint; ones whose body is definitely true are
//! reported back.
WellFoundedResult well_founded(const P2PSystem& sys);

//! (K, U) of the alternating fixpoint on a ground normal program without
//! constraints: K holds the true atoms, U the not-definitely-false ones.
std::pair<Interpretation, Interpretation> well_founded_fixpoint(const NormalProgram& rules);

std::string to_string(TruthValue v);

} // namespace p2pdl

#endif

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
#ifndef P2PDL_ENGINE_HPP
#define P2PDL_ENGINE_HPP

#include <p2pdl/core.hpp>

namespace p2pdl {

//! A ground rule with at most one head atom; no head means constraint.
//! Facts are bodyless rules.
struct EngineRule {
	std::optional<PeerAtom> head;
	std::vector<PeerAtom> pos;
	std::vector<PeerAtom> neg;
	friend std::strong_ordering operator<=>(const EngineRule&, const EngineRule&) = default;
	friend bool operator==(const EngineRule&, const EngineRule&) = default;
};

struct NormalProgram {
	std::vector<EngineRule> rules;

	std::vector<EngineRule> definite() const;    // rules with a head
	std::vector<EngineRule> constraints() const; // headless rules
};

//! A ground rule whose head is a set of atoms (size >= 0).
struct DisjEngineRule {
	std::vector<PeerAtom> heads;
	std::vector<PeerAtom> pos;
	std::vector<PeerAtom> neg;
};

struct DisjunctiveProgram {
	std::vector<DisjEngineRule> rules;
};

//! Least fixpoint of T_P for a negation-free, constraint-free program.
Interpretation minimal_model_positive(const NormalProgram& p);

//! True iff M satisfies the ground constraint under negation as failure
//! (the body is not true in M).
bool satisfies_constraint(const Interpretation& m, const EngineRule& c);

//! First (in canonical order) ground constraint violated by M, or nullopt.
std::optional<EngineRule> check_constraints(const Interpretation& m, const std::vector<EngineRule>& constraints);

//! All stable models, canonically ordered. Constraints are headless rules
//! of p. An empty result encodes inconsistency.
ModelSet stable_models_normal(const NormalProgram& p);

//! Stable models of a head-cycle-free disjunctive program, via shifting.
//! Throws NotHeadCycleFree when two head atoms of some rule share a cycle
//! of the positive dependency graph.
ModelSet stable_models_disjunctive_hcf(const DisjunctiveProgram& p);

//! A ⊕ A' <- B  becomes  A <- B, not A';  A' <- B, not A;  <- A, A'.
//! The input must have exactly two head atoms.
std::vector<GenRule> expand_xor(const GenRule& r);

//! Conversion helpers; inputs must be ground and builtin-free.
EngineRule to_engine_rule(const PeerRule& r);                 // mapping rules via St(.)
NormalProgram to_normal_program(const std::vector<GenRule>& ground_rules);
DisjunctiveProgram to_disjunctive_program(const std::vector<GenRule>& ground_rules);

} // namespace p2pdl

#endif

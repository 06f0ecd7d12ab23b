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
#ifndef P2PDL_GROUND_HPP
#define P2PDL_GROUND_HPP

#include <p2pdl/core.hpp>

#include <functional>

namespace p2pdl {

//! The ground image of a (normalized) system. Rules are ground and
//! builtin-free; instances whose builtins evaluated to false are absent.
//! Facts appear as bodyless standard rules.
struct GroundSystem {
	P2PSystem origin;
	std::vector<PeerRule> rules;
	std::vector<Term> herbrand;              // sorted constants
	Interpretation candidate_mapping_atoms;  // heads of ground mapping rules

	std::vector<PeerRule> standardRules() const;  // facts included
	std::vector<PeerRule> mappingRules() const;
	std::vector<PeerRule> constraints() const;
};

//! Rewrites each mapping predicate defined by n > 1 rules into n fresh
//! single-rule mapping predicates p__1..p__n plus bridging standard rules
//! p(X) <- p__k(X); p becomes derived. Identity when already normalized.
P2PSystem normalize_mappings(const P2PSystem& sys);

//! Evaluates a ground builtin under the term order; '='/'!=' are syntactic.
bool eval_builtin(const BuiltinAtom& b);

//! Full grounding over the system's constant set. Requires a normalized,
//! safe system.
GroundSystem ground_system(const P2PSystem& sys);

using Substitution = std::map<std::string, Term>;

Term substitute(const Term& t, const Substitution& s);
PeerAtom substitute(const PeerAtom& a, const Substitution& s);
Literal substitute(const Literal& l, const Substitution& s);
BuiltinAtom substitute(const BuiltinAtom& b, const Substitution& s);

//! All constants occurring in the system (facts, rule atoms, builtins).
std::vector<Term> constant_universe(const P2PSystem& sys);

//! Enumerates substitutions of `vars` over `constants` in canonical order,
//! pruning branches as soon as a builtin becomes ground and false. Calls
//! `fn` once per surviving full substitution.
void for_each_grounding(const std::vector<std::string>& vars,
                        const std::vector<Term>& constants,
                        const std::vector<BuiltinAtom>& builtins,
                        const std::function<void(const Substitution&)>& fn);

//! Ground instances of a rewritten rule over `constants`, builtins evaluated
//! and removed.
std::vector<GenRule> ground_gen_rules(const std::vector<GenRule>& rules, const std::vector<Term>& constants);

//! Variables of a rule body/head, sorted by name.
std::vector<std::string> rule_variables(const PeerRule& r);
std::vector<std::string> rule_variables(const GenRule& r);

} // namespace p2pdl

#endif

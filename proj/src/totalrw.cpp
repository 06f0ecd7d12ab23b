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
#include <p2pdl/totalrw.hpp>

#include <p2pdl/ground.hpp>

#include <algorithm>

namespace p2pdl {

namespace {

void requireInScope(const P2PSystem& sys) {
	if (!sys.minMappingRules().empty()) {
		throw SemanticsError("the testing-atom rewriting is defined for maximal systems only");
	}
	if (sys.lpHasNegation()) {
		throw SemanticsError("the testing-atom rewriting requires negation-free standard rules");
	}
}

PeerAtom suffixed(const PeerAtom& a, const char* suffix) {
	PeerAtom out = a;
	out.predicate += suffix;
	return out;
}

bool isAux(const PeerAtom& a) {
	return has_suffix(a.predicate, kTestingSuffix) || has_suffix(a.predicate, kViolatingSuffix);
}

struct Rewriter {
	explicit Rewriter(const P2PSystem& sys) : roles(sys.roleMap()) {
		for (const auto& [key, role] : roles) {
			if (role == PredicateRole::Base) continue;
			if (roles.count({key.first, key.second + kTestingSuffix}) || roles.count({key.first, key.second + kViolatingSuffix})) {
				throw RewriteError("testing/violating twin of " + std::to_string(key.first) + ":" + key.second + " collides with an existing predicate");
			}
		}
	}

	bool tracked(const PeerAtom& a) const {
		auto it = roles.find({a.peer, a.predicate});
		return it != roles.end() && it->second != PredicateRole::Base;
	}

	// B^t: mapping and derived atoms get their testing twin, base atoms and
	// builtins stay unchanged.
	std::vector<Literal> testBody(const std::vector<Literal>& body) const {
		std::vector<Literal> out;
		for (const auto& l : body) {
			out.push_back({l.positive, tracked(l.atom) ? suffixed(l.atom, kTestingSuffix) : l.atom});
		}
		return out;
	}

	// Violating twins of the positive mapping/derived atoms of a body.
	std::vector<PeerAtom> violatingHeads(const std::vector<Literal>& body) const {
		std::vector<PeerAtom> out;
		for (const auto& l : body) {
			if (l.positive && tracked(l.atom)) out.push_back(suffixed(l.atom, kViolatingSuffix));
		}
		return out;
	}

	std::map<PredicateKey, PredicateRole> roles;
};

} // namespace

std::vector<GenRule> rew_t(const P2PSystem& sys) {
	requireInScope(sys);
	Rewriter rw(sys);
	std::vector<GenRule> out;
	for (const auto& f : sys.facts()) out.push_back({{f}, false, {}, {}});
	for (const auto& s : sys.standardRules()) {
		// { H <- B;  H^t <- B^t;  A_1^v v ... v A_h^v <- B^t, H^v }
		out.push_back({{*s.head}, false, s.body, s.builtins});
		out.push_back({{suffixed(*s.head, kTestingSuffix)}, false, rw.testBody(s.body), s.builtins});
		GenRule guard{rw.violatingHeads(s.body), false, rw.testBody(s.body), s.builtins};
		guard.body.push_back({true, suffixed(*s.head, kViolatingSuffix)});
		out.push_back(std::move(guard));
	}
	for (const auto& m : sys.mappingRules()) {
		// { H^t <- B;  H <- H^t, not H^v }
		out.push_back({{suffixed(*m.head, kTestingSuffix)}, false, m.body, m.builtins});
		GenRule imp{{*m.head}, false, {}, {}};
		imp.body.push_back({true, suffixed(*m.head, kTestingSuffix)});
		imp.body.push_back({false, suffixed(*m.head, kViolatingSuffix)});
		out.push_back(std::move(imp));
	}
	for (const auto& c : sys.constraints()) {
		// A_1^v v ... v A_h^v <- B^t
		out.push_back({rw.violatingHeads(c.body), false, rw.testBody(c.body), c.builtins});
	}
	return out;
}

ModelSet total_stable_models(const P2PSystem& sys) {
	const P2PSystem normalized = normalize_mappings(sys);
	auto rules = rew_t(normalized);
	auto ground = ground_gen_rules(rules, constant_universe(normalized));
	ModelSet stable = stable_models_disjunctive_hcf(to_disjunctive_program(ground));
	std::vector<Interpretation> total;
	for (const auto& m : stable) {
		std::vector<PeerAtom> kept;
		for (const auto& a : m) {
			if (!isAux(a)) kept.push_back(a);
		}
		total.push_back(Interpretation::of(std::move(kept)));
	}
	return ModelSet::of(std::move(total));
}

std::vector<GenRule> rew_w(const P2PSystem& sys) {
	auto rules = rew_t(sys);
	std::vector<GenRule> out;
	for (auto& r : rules) {
		if (r.heads.size() <= 1) {
			out.push_back(std::move(r));
			continue;
		}
		for (std::size_t i = 0; i < r.heads.size(); ++i) {
			GenRule shifted{{r.heads[i]}, false, r.body, r.builtins};
			for (std::size_t j = 0; j < r.heads.size(); ++j) {
				if (j != i) shifted.body.push_back({false, r.heads[j]});
			}
			out.push_back(std::move(shifted));
		}
	}
	return out;
}

std::pair<Interpretation, Interpretation> well_founded_fixpoint(const NormalProgram& rules) {
	// Gamma(S): least model of the reduct of the rules w.r.t. S.
	auto gamma = [&rules](const Interpretation& s) {
		NormalProgram reduct;
		for (const auto& r : rules.rules) {
			bool blocked = std::any_of(r.neg.begin(), r.neg.end(), [&s](const PeerAtom& a) { return s.contains(a); });
			if (blocked) continue;
			reduct.rules.push_back({r.head, r.pos, {}});
		}
		return minimal_model_positive(reduct);
	};
	Interpretation k;
	Interpretation u = gamma(k);
	for (;;) {
		Interpretation k2 = gamma(u);
		Interpretation u2 = gamma(k2);
		if (k2 == k && u2 == u) break;
		k = std::move(k2);
		u = std::move(u2);
	}
	return {k, u};
}

namespace {

// All ground atoms over the system's declared predicate signature.
std::vector<PeerAtom> systemHerbrandBase(const P2PSystem& sys) {
	auto constants = constant_universe(sys);
	std::map<PredicateKey, std::size_t> arity;
	for (const auto& p : sys.peers) {
		auto claim = [&arity](const PeerAtom& a) { arity.try_emplace({a.peer, a.predicate}, a.args.size()); };
		for (const auto& f : p.database) claim(f);
		auto claimRule = [&](const PeerRule& r) {
			if (r.head) claim(*r.head);
			for (const auto& l : r.body) claim(l.atom);
		};
		for (const auto& r : p.standard_rules) claimRule(r);
		for (const auto& r : p.mapping_rules) claimRule(r);
		for (const auto& r : p.constraints) claimRule(r);
	}
	std::vector<PeerAtom> out;
	for (const auto& [key, n] : arity) {
		std::vector<std::string> vars;
		for (std::size_t i = 0; i < n; ++i) vars.push_back("X" + std::to_string(i));
		if (n > 0 && constants.empty()) continue;
		for_each_grounding(vars, constants, {}, [&](const Substitution& s) {
			PeerAtom a{key.first, key.second, {}};
			for (const auto& v : vars) a.args.push_back(s.at(v));
			out.push_back(std::move(a));
		});
	}
	return out;
}

} // namespace

WellFoundedResult well_founded(const P2PSystem& sys) {
	const P2PSystem normalized = normalize_mappings(sys);
	auto ground = ground_gen_rules(rew_w(normalized), constant_universe(normalized));
	NormalProgram rules;
	std::vector<GenRule> constraints;
	for (const auto& r : ground) {
		if (r.heads.empty()) {
			constraints.push_back(r);
			continue;
		}
		EngineRule er;
		er.head = r.heads.front();
		for (const auto& l : r.body) (l.positive ? er.pos : er.neg).push_back(l.atom);
		rules.rules.push_back(std::move(er));
	}
	auto [k, u] = well_founded_fixpoint(rules);

	WellFoundedResult result;
	std::vector<PeerAtom> trueStripped;
	for (const auto& a : k) {
		if (!isAux(a)) trueStripped.push_back(a);
	}
	result.model.true_set = Interpretation::of(std::move(trueStripped));

	std::vector<PeerAtom> falseSet, undefSet;
	for (const auto& a : systemHerbrandBase(normalized)) {
		if (!u.contains(a)) falseSet.push_back(a);
		else if (!k.contains(a)) undefSet.push_back(a);
	}
	result.model.false_set = Interpretation::of(std::move(falseSet));
	result.undefined_set = Interpretation::of(std::move(undefSet));

	// A constraint fires when its body is definitely true: positive atoms
	// true, negated atoms definitely false.
	for (const auto& c : constraints) {
		bool fires = true;
		for (const auto& l : c.body) {
			if (l.positive ? !k.contains(l.atom) : u.contains(l.atom)) { fires = false; break; }
		}
		if (fires) result.violated_constraints.push_back(c);
	}
	return result;
}

std::string to_string(TruthValue v) {
	switch (v) {
		case TruthValue::True: return "true";
		case TruthValue::Undefined: return "undefined";
		case TruthValue::False: return "false";
	}
	return {};
}

} // namespace p2pdl

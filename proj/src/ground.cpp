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
#include <p2pdl/ground.hpp>

#include <algorithm>
#include <set>

namespace p2pdl {

std::vector<PeerRule> GroundSystem::standardRules() const {
	std::vector<PeerRule> out;
	for (const auto& r : rules) {
		if (r.kind == RuleKind::Standard) out.push_back(r);
	}
	return out;
}

std::vector<PeerRule> GroundSystem::mappingRules() const {
	std::vector<PeerRule> out;
	for (const auto& r : rules) {
		if (r.isMapping()) out.push_back(r);
	}
	return out;
}

std::vector<PeerRule> GroundSystem::constraints() const {
	std::vector<PeerRule> out;
	for (const auto& r : rules) {
		if (r.kind == RuleKind::Constraint) out.push_back(r);
	}
	return out;
}

P2PSystem normalize_mappings(const P2PSystem& sys) {
	// Which mapping predicates are defined by more than one rule?
	std::map<PredicateKey, int> defCount;
	for (const auto& r : sys.mappingRules()) {
		++defCount[{r.head->peer, r.head->predicate}];
	}
	bool anyMulti = std::any_of(defCount.begin(), defCount.end(), [](const auto& kv) { return kv.second > 1; });
	if (!anyMulti) return sys;

	std::set<PredicateKey> used;
	auto touch = [&used](const PeerAtom& a) { used.insert({a.peer, a.predicate}); };
	for (const auto& p : sys.peers) {
		for (const auto& f : p.database) touch(f);
		auto touchRule = [&](const PeerRule& r) {
			if (r.head) touch(*r.head);
			for (const auto& l : r.body) touch(l.atom);
		};
		for (const auto& r : p.standard_rules) touchRule(r);
		for (const auto& r : p.mapping_rules) touchRule(r);
		for (const auto& r : p.constraints) touchRule(r);
	}

	P2PSystem out = sys;
	for (auto& peer : out.peers) {
		std::vector<PeerRule> mappings;
		std::map<PredicateKey, int> counter;
		for (auto& r : peer.mapping_rules) {
			PredicateKey key{r.head->peer, r.head->predicate};
			if (defCount.at(key) == 1) {
				mappings.push_back(std::move(r));
				continue;
			}
			int k = ++counter[key];
			std::string fresh = r.head->predicate + "__" + std::to_string(k);
			if (used.count({peer.id, fresh})) {
				throw NormalizationError("fresh mapping predicate " + std::to_string(peer.id) + ":" + fresh + " collides with an existing predicate");
			}
			// i:p__k(X) <=_k j_k:B_k plus bridge i:p(X) <- i:p__k(X).
			PeerRule renamed = std::move(r);
			PeerAtom origHead = *renamed.head;
			renamed.head->predicate = fresh;
			mappings.push_back(std::move(renamed));

			PeerRule bridge;
			bridge.kind = RuleKind::Standard;
			PeerAtom freshHead = origHead;
			freshHead.predicate = fresh;
			std::vector<Term> vars;
			for (std::size_t i = 0; i < origHead.args.size(); ++i) {
				vars.push_back(Term::var("X__" + std::to_string(i + 1)));
			}
			origHead.args = vars;
			freshHead.args = vars;
			bridge.head = origHead;
			bridge.body.push_back({true, freshHead});
			peer.standard_rules.push_back(std::move(bridge));
		}
		peer.mapping_rules = std::move(mappings);
	}
	return out;
}

bool eval_builtin(const BuiltinAtom& b) {
	if (b.lhs.isVariable() || b.rhs.isVariable()) {
		throw ContractViolation("eval_builtin: operands must be constants");
	}
	auto cmp = b.lhs <=> b.rhs;
	switch (b.op) {
		case BuiltinOp::Lt: return cmp < 0;
		case BuiltinOp::Gt: return cmp > 0;
		case BuiltinOp::Le: return cmp <= 0;
		case BuiltinOp::Ge: return cmp >= 0;
		case BuiltinOp::Eq: return cmp == 0;
		case BuiltinOp::Ne: return cmp != 0;
	}
	return false;
}

Term substitute(const Term& t, const Substitution& s) {
	if (!t.isVariable()) return t;
	auto it = s.find(t.text());
	return it == s.end() ? t : it->second;
}

PeerAtom substitute(const PeerAtom& a, const Substitution& s) {
	PeerAtom out = a;
	for (auto& t : out.args) t = substitute(t, s);
	return out;
}

Literal substitute(const Literal& l, const Substitution& s) {
	return {l.positive, substitute(l.atom, s)};
}

BuiltinAtom substitute(const BuiltinAtom& b, const Substitution& s) {
	return {b.op, substitute(b.lhs, s), substitute(b.rhs, s)};
}

std::vector<Term> constant_universe(const P2PSystem& sys) {
	std::set<Term> consts;
	auto addTerm = [&consts](const Term& t) {
		if (t.isConstant()) consts.insert(t);
	};
	auto addAtom = [&addTerm](const PeerAtom& a) {
		for (const auto& t : a.args) addTerm(t);
	};
	for (const auto& p : sys.peers) {
		for (const auto& f : p.database) addAtom(f);
		auto addRule = [&](const PeerRule& r) {
			if (r.head) addAtom(*r.head);
			for (const auto& l : r.body) addAtom(l.atom);
			for (const auto& b : r.builtins) { addTerm(b.lhs); addTerm(b.rhs); }
		};
		for (const auto& r : p.standard_rules) addRule(r);
		for (const auto& r : p.mapping_rules) addRule(r);
		for (const auto& r : p.constraints) addRule(r);
	}
	return {consts.begin(), consts.end()};
}

namespace {

void enumerate(const std::vector<std::string>& vars, std::size_t next,
               const std::vector<Term>& constants,
               const std::vector<BuiltinAtom>& builtins,
               std::vector<bool>& builtinDone,
               Substitution& current,
               const std::function<void(const Substitution&)>& fn) {
	// Check builtins that just became ground; prune on the first false one.
	std::vector<std::size_t> checkedHere;
	for (std::size_t i = 0; i < builtins.size(); ++i) {
		if (builtinDone[i]) continue;
		BuiltinAtom g = substitute(builtins[i], current);
		if (g.lhs.isVariable() || g.rhs.isVariable()) continue;
		builtinDone[i] = true;
		checkedHere.push_back(i);
		if (!eval_builtin(g)) {
			for (std::size_t j : checkedHere) builtinDone[j] = false;
			return;
		}
	}
	if (next == vars.size()) {
		fn(current);
	} else {
		for (const auto& c : constants) {
			current[vars[next]] = c;
			enumerate(vars, next + 1, constants, builtins, builtinDone, current, fn);
		}
		current.erase(vars[next]);
	}
	for (std::size_t j : checkedHere) builtinDone[j] = false;
}

} // namespace

void for_each_grounding(const std::vector<std::string>& vars,
                        const std::vector<Term>& constants,
                        const std::vector<BuiltinAtom>& builtins,
                        const std::function<void(const Substitution&)>& fn) {
	Substitution current;
	std::vector<bool> builtinDone(builtins.size(), false);
	enumerate(vars, 0, constants, builtins, builtinDone, current, fn);
}

std::vector<std::string> rule_variables(const PeerRule& r) {
	std::set<std::string> vars;
	auto addAtom = [&vars](const PeerAtom& a) {
		for (const auto& t : a.args) {
			if (t.isVariable()) vars.insert(t.text());
		}
	};
	if (r.head) addAtom(*r.head);
	for (const auto& l : r.body) addAtom(l.atom);
	for (const auto& b : r.builtins) {
		if (b.lhs.isVariable()) vars.insert(b.lhs.text());
		if (b.rhs.isVariable()) vars.insert(b.rhs.text());
	}
	return {vars.begin(), vars.end()};
}

std::vector<std::string> rule_variables(const GenRule& r) {
	std::set<std::string> vars;
	auto addAtom = [&vars](const PeerAtom& a) {
		for (const auto& t : a.args) {
			if (t.isVariable()) vars.insert(t.text());
		}
	};
	for (const auto& h : r.heads) addAtom(h);
	for (const auto& l : r.body) addAtom(l.atom);
	for (const auto& b : r.builtins) {
		if (b.lhs.isVariable()) vars.insert(b.lhs.text());
		if (b.rhs.isVariable()) vars.insert(b.rhs.text());
	}
	return {vars.begin(), vars.end()};
}

GroundSystem ground_system(const P2PSystem& sys) {
	GroundSystem gs;
	gs.origin = sys;
	gs.herbrand = constant_universe(sys);

	std::vector<PeerAtom> candidates;
	auto groundRule = [&](const PeerRule& r) {
		auto vars = rule_variables(r);
		if (!vars.empty() && gs.herbrand.empty()) {
			throw GroundingError("cannot ground a non-ground rule over an empty constant universe");
		}
		for_each_grounding(vars, gs.herbrand, r.builtins, [&](const Substitution& s) {
			PeerRule g;
			g.kind = r.kind;
			if (r.head) g.head = substitute(*r.head, s);
			for (const auto& l : r.body) g.body.push_back(substitute(l, s));
			if (g.isMapping()) candidates.push_back(*g.head);
			gs.rules.push_back(std::move(g));
		});
	};

	for (const auto& peer : sys.peers) {
		for (const auto& f : peer.database) {
			PeerRule fact;
			fact.kind = RuleKind::Standard;
			fact.head = f;
			gs.rules.push_back(std::move(fact));
		}
		for (const auto& r : peer.standard_rules) groundRule(r);
		for (const auto& r : peer.mapping_rules) groundRule(r);
		for (const auto& r : peer.constraints) groundRule(r);
	}
	std::sort(gs.rules.begin(), gs.rules.end());
	gs.rules.erase(std::unique(gs.rules.begin(), gs.rules.end()), gs.rules.end());
	gs.candidate_mapping_atoms = Interpretation::of(std::move(candidates));
	return gs;
}

std::vector<GenRule> ground_gen_rules(const std::vector<GenRule>& rules, const std::vector<Term>& constants) {
	std::vector<GenRule> out;
	for (const auto& r : rules) {
		auto vars = rule_variables(r);
		if (!vars.empty() && constants.empty()) {
			throw GroundingError("cannot ground a non-ground rule over an empty constant universe");
		}
		for_each_grounding(vars, constants, r.builtins, [&](const Substitution& s) {
			GenRule g;
			g.exclusive = r.exclusive;
			for (const auto& h : r.heads) g.heads.push_back(substitute(h, s));
			for (const auto& l : r.body) g.body.push_back(substitute(l, s));
			out.push_back(std::move(g));
		});
	}
	return out;
}

} // namespace p2pdl

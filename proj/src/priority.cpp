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
#include <p2pdl/priority.hpp>

#include <p2pdl/engine.hpp>
#include <p2pdl/ground.hpp>

#include <algorithm>

namespace p2pdl {

namespace {

std::vector<std::string> statementVariables(const PriorityStatement& st) {
	std::set<std::string> vars;
	for (const auto* atom : {&st.higher, &st.lower}) {
		for (const auto& t : atom->args) {
			if (t.isVariable()) vars.insert(t.text());
		}
	}
	return {vars.begin(), vars.end()};
}

} // namespace

PriorityClosure close(const std::vector<PriorityStatement>& phi, const std::vector<PeerAtom>& universe) {
	std::set<PeerAtom> uni(universe.begin(), universe.end());
	std::set<Term> constSet;
	for (const auto& a : universe) {
		for (const auto& t : a.args) constSet.insert(t);
	}
	std::vector<Term> constants(constSet.begin(), constSet.end());

	PriorityClosure closure;
	for (const auto& st : phi) {
		if (st.higher.peer == st.lower.peer && st.higher.predicate == st.lower.predicate &&
		    st.higher.args.size() == st.lower.args.size()) {
			// p(x) and p(y) must not have common ground instances (e >= e with
			// e not>= e would be required at once).
			bool overlap = true;
			for (std::size_t i = 0; i < st.higher.args.size() && overlap; ++i) {
				const Term& a = st.higher.args[i];
				const Term& b = st.lower.args[i];
				if (a.isConstant() && b.isConstant() && a != b) overlap = false;
			}
			if (overlap) {
				throw PriorityError("ill-formed priority: " + to_string(st.higher) + " >= " + to_string(st.lower) + " relates overlapping ground instances");
			}
		}
		auto vars = statementVariables(st);
		for_each_grounding(vars, constants, {}, [&](const Substitution& s) {
			PeerAtom h = substitute(st.higher, s);
			PeerAtom l = substitute(st.lower, s);
			if (uni.count(h) && uni.count(l)) closure.add(h, l);
		});
	}
	for (const auto& a : universe) closure.add(a, a);

	// Transitive closure over the universe.
	bool changed = true;
	while (changed) {
		changed = false;
		auto pairs = closure.pairs();
		for (const auto& [a, b] : pairs) {
			for (const auto& [c, d] : pairs) {
				if (b == c && !closure.geq(a, d)) {
					closure.add(a, d);
					changed = true;
				}
			}
		}
	}
	return closure;
}

bool prefers(const Interpretation& m1, const Interpretation& m2, const PriorityClosure& closure) {
	if (m1 == m2) return true;
	Interpretation only1 = m1.minus(m2);
	Interpretation only2 = m2.minus(m1);
	for (const auto& e1 : only1) {
		bool beaten = false;
		for (const auto& e3 : only2) {
			if (closure.gt(e3, e1)) { beaten = true; break; }
		}
		if (beaten) continue;
		for (const auto& e2 : only2) {
			if (closure.geq(e1, e2)) return true;
		}
	}
	return false;
}

ModelSet preferred_sets(const ModelSet& models, const std::vector<PriorityStatement>& phi) {
	const std::size_t n = models.size();
	if (n <= 1) return models;
	std::vector<PeerAtom> universe;
	for (const auto& m : models) universe.insert(universe.end(), m.begin(), m.end());
	std::sort(universe.begin(), universe.end());
	universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
	PriorityClosure closure = close(phi, universe);

	std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j) {
			geq[i][j] = prefers(models.models()[i], models.models()[j], closure);
		}
	}
	// The relation is transitive by definition over the model class.
	for (std::size_t k = 0; k < n; ++k) {
		for (std::size_t i = 0; i < n; ++i) {
			if (!geq[i][k]) continue;
			for (std::size_t j = 0; j < n; ++j) {
				if (geq[k][j]) geq[i][j] = true;
			}
		}
	}
	std::vector<Interpretation> out;
	for (std::size_t i = 0; i < n; ++i) {
		bool dominated = false;
		for (std::size_t j = 0; j < n && !dominated; ++j) {
			dominated = geq[j][i] && !geq[i][j];
		}
		if (!dominated) out.push_back(models.models()[i]);
	}
	return ModelSet::of(std::move(out));
}

ModelSet psm(const PrioritizedProgram& plp) {
	std::set<Term> constSet;
	auto addAtom = [&constSet](const PeerAtom& a) {
		for (const auto& t : a.args) {
			if (t.isConstant()) constSet.insert(t);
		}
	};
	for (const auto& r : plp.rules) {
		for (const auto& h : r.heads) addAtom(h);
		for (const auto& l : r.body) addAtom(l.atom);
		for (const auto& b : r.builtins) {
			if (b.lhs.isConstant()) constSet.insert(b.lhs);
			if (b.rhs.isConstant()) constSet.insert(b.rhs);
		}
	}
	std::vector<Term> constants(constSet.begin(), constSet.end());

	std::vector<GenRule> ground = ground_gen_rules(plp.rules, constants);
	std::vector<GenRule> expanded;
	for (auto& r : ground) {
		if (r.exclusive) {
			auto three = expand_xor(r);
			expanded.insert(expanded.end(), three.begin(), three.end());
		} else {
			expanded.push_back(std::move(r));
		}
	}
	ModelSet current = stable_models_normal(to_normal_program(expanded));
	for (const auto& layer : plp.layers) {
		current = preferred_sets(current, layer);
	}
	return current;
}

PrioritizedProgram rew_prioritized(const P2PSystem& sys) {
	std::set<PredicateKey> existing;
	for (const auto& [key, role] : sys.roleMap()) existing.insert(key);

	PrioritizedProgram plp;
	for (const auto& f : sys.facts()) plp.rules.push_back({{f}, false, {}, {}});
	for (const auto& r : sys.standardRules()) plp.rules.push_back({{*r.head}, false, r.body, r.builtins});

	std::vector<PriorityStatement> maxLayer, minLayer;
	for (const auto& r : sys.mappingRules()) {
		PeerAtom primed = *r.head;
		primed.predicate += kPrimedSuffix;
		if (existing.count({primed.peer, primed.predicate})) {
			throw RewriteError("primed predicate " + std::to_string(primed.peer) + ":" + primed.predicate + " collides with an existing predicate");
		}
		plp.rules.push_back({{*r.head, primed}, true, r.body, r.builtins});
		if (r.kind == RuleKind::MaxMapping) maxLayer.push_back({*r.head, primed});
		else minLayer.push_back({primed, *r.head});
	}
	for (const auto& r : sys.constraints()) plp.rules.push_back({{}, false, r.body, r.builtins});

	if (!maxLayer.empty()) plp.layers.push_back(std::move(maxLayer));
	if (!minLayer.empty()) plp.layers.push_back(std::move(minLayer));
	return plp;
}

Interpretation strip_primes(const Interpretation& m) {
	std::vector<PeerAtom> out;
	for (const auto& a : m) {
		if (!has_suffix(a.predicate, kPrimedSuffix)) out.push_back(a);
	}
	return Interpretation::of(std::move(out));
}

} // namespace p2pdl

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
#include <p2pdl/weak.hpp>

#include <algorithm>
#include <thread>

namespace p2pdl {

namespace {

bool glDrops(const PeerRule& r, const Interpretation& m) {
	return std::any_of(r.body.begin(), r.body.end(), [&m](const Literal& l) { return !l.positive && m.contains(l.atom); });
}

EngineRule stripNegatives(const PeerRule& r) {
	EngineRule er;
	er.head = r.head;
	for (const auto& l : r.body) {
		if (l.positive) er.pos.push_back(l.atom);
	}
	return er;
}

Interpretation projectPreds(const Interpretation& m, const std::set<PredicateKey>& preds) {
	std::vector<PeerAtom> out;
	for (const auto& a : m) {
		if (preds.count({a.peer, a.predicate})) out.push_back(a);
	}
	return Interpretation::of(std::move(out));
}

std::set<PredicateKey> mappingPredicates(const P2PSystem& sys) {
	std::set<PredicateKey> out;
	for (const auto& [key, role] : sys.roleMap()) {
		if (role == PredicateRole::Mapping) out.insert(key);
	}
	return out;
}

} // namespace

NormalProgram reduct_full(const GroundSystem& gs, const Interpretation& m) {
	NormalProgram out;
	for (const auto& r : gs.rules) {
		if (r.isMapping() && !m.contains(*r.head)) continue;
		if (glDrops(r, m)) continue;
		out.rules.push_back(stripNegatives(r));
	}
	return out;
}

bool is_weak_model(const GroundSystem& gs, const Interpretation& m) {
	NormalProgram reduct = reduct_full(gs, m);
	NormalProgram definite{reduct.definite()};
	Interpretation n = minimal_model_positive(definite);
	if (n != m) return false;
	const auto constraints = reduct.constraints();
	return std::all_of(constraints.begin(), constraints.end(), [&n](const EngineRule& c) { return satisfies_constraint(n, c); });
}

bool is_weak_model_pos_lp(const GroundSystem& gs, const Interpretation& m) {
	if (gs.origin.lpHasNegation()) {
		throw ContractViolation("is_weak_model_pos_lp: LP contains negation");
	}
	NormalProgram definite;
	std::vector<EngineRule> constraints;
	for (const auto& r : gs.rules) {
		switch (r.kind) {
			case RuleKind::Standard: definite.rules.push_back(to_engine_rule(r)); break;
			case RuleKind::Constraint: constraints.push_back(to_engine_rule(r)); break;
			default:
				if (m.contains(*r.head)) definite.rules.push_back(stripNegatives(r));
				break;
		}
	}
	Interpretation n = minimal_model_positive(definite);
	if (n != m) return false;
	return std::all_of(constraints.begin(), constraints.end(), [&m](const EngineRule& c) { return satisfies_constraint(m, c); });
}

ModelSet enumerate_weak_models(const GroundSystem& gs, const EnumerateOptions& opts) {
	const auto& candidates = gs.candidate_mapping_atoms.atoms();
	const std::size_t k = candidates.size();
	if (k > opts.cap) {
		throw CapExceeded("system has " + std::to_string(k) + " candidate mapping atoms, above the cap of " + std::to_string(opts.cap));
	}
	const auto mapPreds = mappingPredicates(gs.origin);

	// Shared skeleton: facts, standard rules and constraints are in every
	// subset program; mapping rules are toggled by head membership.
	NormalProgram base;
	std::vector<std::pair<PeerAtom, EngineRule>> mappingByHead;
	for (const auto& r : gs.rules) {
		if (r.isMapping()) mappingByHead.emplace_back(*r.head, stripNegatives(r));
		else base.rules.push_back(to_engine_rule(r));
	}

	const std::uint64_t total = k >= 64 ? 0 : (std::uint64_t{1} << k);
	auto solveRange = [&](std::uint64_t from, std::uint64_t to, std::vector<Interpretation>& out) {
		for (std::uint64_t mask = from; mask < to; ++mask) {
			std::vector<PeerAtom> subset;
			for (std::size_t i = 0; i < k; ++i) {
				if (mask & (std::uint64_t{1} << i)) subset.push_back(candidates[i]);
			}
			Interpretation s = Interpretation::of(subset);
			NormalProgram prog = base;
			for (const auto& [head, rule] : mappingByHead) {
				if (s.contains(head)) prog.rules.push_back(rule);
			}
			for (const auto& m : stable_models_normal(prog)) {
				if (projectPreds(m, mapPreds) != s) continue;
				if (!is_weak_model(gs, m)) continue;
				out.push_back(m);
			}
		}
	};

	std::vector<Interpretation> found;
	int threads = std::max(1, opts.threads);
	if (threads == 1 || total < 64) {
		solveRange(0, total, found);
	} else {
		std::vector<std::vector<Interpretation>> parts(threads);
		std::vector<std::thread> workers;
		std::uint64_t chunk = (total + threads - 1) / threads;
		for (int t = 0; t < threads; ++t) {
			std::uint64_t from = t * chunk;
			std::uint64_t to = std::min(total, from + chunk);
			if (from >= to) break;
			workers.emplace_back([&, from, to, t] { solveRange(from, to, parts[t]); });
		}
		for (auto& w : workers) w.join();
		for (auto& p : parts) found.insert(found.end(), p.begin(), p.end());
	}
	return ModelSet::of(std::move(found));
}

ModelSet select_max(const ModelSet& wm, const P2PSystem& sys) {
	if (!sys.minMappingRules().empty()) {
		throw SemanticsError("the max weak model semantics requires a maximal system (no minimal mapping rules)");
	}
	const auto preds = mappingPredicates(sys);
	std::vector<Interpretation> proj;
	for (const auto& m : wm) proj.push_back(projectPreds(m, preds));
	std::vector<Interpretation> out;
	for (std::size_t i = 0; i < wm.size(); ++i) {
		bool dominated = false;
		for (std::size_t j = 0; j < wm.size() && !dominated; ++j) {
			dominated = proj[i].properSubsetOf(proj[j]);
		}
		if (!dominated) out.push_back(wm.models()[i]);
	}
	return ModelSet::of(std::move(out));
}

ModelSet select_min(const ModelSet& wm, const P2PSystem& sys) {
	if (!sys.maxMappingRules().empty()) {
		throw SemanticsError("the min weak model semantics requires a minimal system (no maximal mapping rules)");
	}
	const auto preds = mappingPredicates(sys);
	std::vector<Interpretation> proj;
	for (const auto& m : wm) proj.push_back(projectPreds(m, preds));
	std::vector<Interpretation> out;
	for (std::size_t i = 0; i < wm.size(); ++i) {
		bool dominated = false;
		for (std::size_t j = 0; j < wm.size() && !dominated; ++j) {
			dominated = proj[j].properSubsetOf(proj[i]);
		}
		if (!dominated) out.push_back(wm.models()[i]);
	}
	return ModelSet::of(std::move(out));
}

ModelSet select_maxmin(const ModelSet& wm, const P2PSystem& sys) {
	const auto maxPreds = sys.maxMappingPredicates();
	const auto minPreds = sys.minMappingPredicates();
	std::vector<Interpretation> maxProj, minProj;
	for (const auto& m : wm) {
		maxProj.push_back(projectPreds(m, maxPreds));
		minProj.push_back(projectPreds(m, minPreds));
	}
	// M >= N iff M[MP-max] ⊃ N[MP-max], or equal max parts and M[MP-min] ⊆ N[MP-min].
	auto geq = [&](std::size_t a, std::size_t b) {
		if (maxProj[b].properSubsetOf(maxProj[a])) return true;
		return maxProj[a] == maxProj[b] && minProj[a].subsetOf(minProj[b]);
	};
	std::vector<Interpretation> out;
	for (std::size_t i = 0; i < wm.size(); ++i) {
		bool dominated = false;
		for (std::size_t j = 0; j < wm.size() && !dominated; ++j) {
			dominated = geq(j, i) && !geq(i, j);
		}
		if (!dominated) out.push_back(wm.models()[i]);
	}
	return ModelSet::of(std::move(out));
}

} // namespace p2pdl

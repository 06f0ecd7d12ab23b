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
#include <p2pdl/query.hpp>

#include <p2pdl/split.hpp>

#include <algorithm>

namespace p2pdl {

ModelSet models_for(const P2PSystem& sys, QuerySemantics sem, const EnumerateOptions& opts) {
	if (sem == QuerySemantics::Wf) {
		throw SemanticsError("the well-founded semantics is three-valued; it has no model set");
	}
	if (sem == QuerySemantics::GMaxMin) {
		SplitSystem sp = split(sys);
		GroundSystem gs = ground_system(normalize_mappings(sp.system));
		ModelSet wm = enumerate_weak_models(gs, opts);
		std::vector<Interpretation> projected;
		for (const auto& m : wm) {
			std::vector<PeerAtom> kept;
			for (const auto& a : m) {
				if (a.peer <= sp.original_peer_count) kept.push_back(a);
			}
			projected.push_back(Interpretation::of(std::move(kept)));
		}
		return select_g_maxmin(ModelSet::of(std::move(projected)), sp);
	}
	const P2PSystem normalized = normalize_mappings(sys);
	GroundSystem gs = ground_system(normalized);
	if (sem == QuerySemantics::Fol) {
		// Minimal-model semantics of D u LP u St(MP) u IC; with negation the
		// stable models serve as the closed-world baseline.
		NormalProgram prog;
		for (const auto& r : gs.rules) prog.rules.push_back(to_engine_rule(r));
		return stable_models_normal(prog);
	}
	ModelSet wm = enumerate_weak_models(gs, opts);
	switch (sem) {
		case QuerySemantics::Weak: return wm;
		case QuerySemantics::Max: return select_max(wm, normalized);
		case QuerySemantics::Min: return select_min(wm, normalized);
		case QuerySemantics::MaxMin: return select_maxmin(wm, normalized);
		default: break;
	}
	throw Error("unreachable semantics");
}

bool matches_pattern(const PeerAtom& pattern, const PeerAtom& atom) {
	if (pattern.peer != atom.peer || pattern.predicate != atom.predicate || pattern.args.size() != atom.args.size()) {
		return false;
	}
	std::map<std::string, Term> binding;
	for (std::size_t i = 0; i < pattern.args.size(); ++i) {
		const Term& p = pattern.args[i];
		const Term& a = atom.args[i];
		if (p.isConstant()) {
			if (p != a) return false;
			continue;
		}
		auto [it, inserted] = binding.try_emplace(p.text(), a);
		if (!inserted && it->second != a) return false;
	}
	return true;
}

namespace {

Interpretation matching(const Interpretation& m, const PeerAtom& pattern) {
	std::vector<PeerAtom> out;
	for (const auto& a : m) {
		if (matches_pattern(pattern, a)) out.push_back(a);
	}
	return Interpretation::of(std::move(out));
}

} // namespace

QueryResult answer(const P2PSystem& sys, const PeerAtom& query, Mode mode, QuerySemantics sem,
                   const EnumerateOptions& opts) {
	if (!sys.roleMap().count({query.peer, query.predicate})) {
		throw RoleError("query predicate " + std::to_string(query.peer) + ":" + query.predicate + " is not declared in the system");
	}
	QueryResult result;
	result.mode = mode;
	result.semantics = sem;
	if (sem == QuerySemantics::Wf) {
		WellFoundedResult wf = well_founded(sys);
		result.model_count = 1;
		result.wf_true = matching(wf.model.true_set, query);
		result.wf_undefined = matching(wf.undefined_set, query);
		result.answers = mode == Mode::Cautious ? result.wf_true : result.wf_true.unionWith(result.wf_undefined);
		return result;
	}
	ModelSet models = models_for(sys, sem, opts);
	result.model_count = static_cast<int>(models.size());
	if (models.empty()) return result; // inconsistency is a value, not an exception
	if (mode == Mode::Brave) {
		Interpretation all;
		for (const auto& m : models) all = all.unionWith(m);
		result.answers = matching(all, query);
	} else {
		Interpretation common = models.models().front();
		for (const auto& m : models) common = common.intersect(m);
		result.answers = matching(common, query);
	}
	return result;
}

std::string to_string(Mode m) { return m == Mode::Brave ? "brave" : "cautious"; }

std::string to_string(QuerySemantics s) {
	switch (s) {
		case QuerySemantics::Fol: return "fol";
		case QuerySemantics::Weak: return "weak";
		case QuerySemantics::Max: return "max";
		case QuerySemantics::Min: return "min";
		case QuerySemantics::MaxMin: return "maxmin";
		case QuerySemantics::GMaxMin: return "gmaxmin";
		case QuerySemantics::Wf: return "wf";
	}
	return {};
}

std::optional<QuerySemantics> semantics_from_string(const std::string& name) {
	if (name == "fol") return QuerySemantics::Fol;
	if (name == "weak") return QuerySemantics::Weak;
	if (name == "max") return QuerySemantics::Max;
	if (name == "min") return QuerySemantics::Min;
	if (name == "maxmin") return QuerySemantics::MaxMin;
	if (name == "gmaxmin") return QuerySemantics::GMaxMin;
	if (name == "wf") return QuerySemantics::Wf;
	return std::nullopt;
}

} // namespace p2pdl

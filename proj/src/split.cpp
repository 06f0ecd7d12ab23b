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
#include <p2pdl/split.hpp>

#include <algorithm>
#include <limits>

namespace p2pdl {

std::set<PredicateKey> SplitSystem::hatPredicates() const {
	std::set<PredicateKey> out;
	for (const auto& r : mp_hat) out.insert({r.head->peer, r.head->predicate});
	return out;
}

SplitSystem split(const P2PSystem& sys) {
	const int n = sys.peerCount();
	if (n > std::numeric_limits<int>::max() / 2) {
		throw Error("split: peer id space overflow");
	}
	SplitSystem out;
	out.original_peer_count = n;
	std::vector<Peer> auxPeers;
	for (const auto& p : sys.peers) {
		Peer aux;
		aux.id = p.id + n;
		for (const auto& f : p.database) {
			PeerAtom moved = f;
			moved.peer = aux.id;
			aux.database.push_back(moved);
		}
		std::sort(aux.database.begin(), aux.database.end());
		auxPeers.push_back(std::move(aux));

		Peer shell;
		shell.id = p.id;
		shell.standard_rules = p.standard_rules;
		shell.mapping_rules = p.mapping_rules;
		shell.constraints = p.constraints;
		std::map<std::string, std::size_t> relocated;
		for (const auto& f : p.database) relocated.try_emplace(f.predicate, f.args.size());
		for (const auto& [pred, arity] : relocated) {
			PeerRule hat;
			hat.kind = RuleKind::MaxMapping;
			PeerAtom head{p.id, pred, {}};
			PeerAtom source{p.id + n, pred, {}};
			for (std::size_t i = 0; i < arity; ++i) {
				Term v = Term::var("X__" + std::to_string(i + 1));
				head.args.push_back(v);
				source.args.push_back(v);
			}
			hat.head = head;
			hat.body.push_back({true, source});
			shell.mapping_rules.push_back(hat);
			out.mp_hat.push_back(std::move(hat));
		}
		out.system.peers.push_back(std::move(shell));
	}
	out.system.peers.insert(out.system.peers.end(), auxPeers.begin(), auxPeers.end());
	return out;
}

namespace {

Interpretation dropAuxiliary(const Interpretation& m, int n) {
	std::vector<PeerAtom> kept;
	for (const auto& a : m) {
		if (a.peer <= n) kept.push_back(a);
	}
	return Interpretation::of(std::move(kept));
}

Interpretation projectPreds(const Interpretation& m, const std::set<PredicateKey>& preds) {
	std::vector<PeerAtom> out;
	for (const auto& a : m) {
		if (preds.count({a.peer, a.predicate})) out.push_back(a);
	}
	return Interpretation::of(std::move(out));
}

} // namespace

ModelSet generalized_weak_models(const P2PSystem& sys, const EnumerateOptions& opts) {
	SplitSystem sp = split(sys);
	GroundSystem gs = ground_system(normalize_mappings(sp.system));
	ModelSet wm = enumerate_weak_models(gs, opts);
	std::vector<Interpretation> projected;
	for (const auto& m : wm) projected.push_back(dropAuxiliary(m, sp.original_peer_count));
	return ModelSet::of(std::move(projected));
}

ModelSet select_g_maxmin(const ModelSet& gwm, const SplitSystem& sp) {
	const auto hatPreds = sp.hatPredicates();
	std::set<PredicateKey> maxPreds;
	for (const auto& key : sp.system.maxMappingPredicates()) {
		if (!hatPreds.count(key)) maxPreds.insert(key);
	}
	const auto minPreds = sp.system.minMappingPredicates();

	std::vector<Interpretation> hat, maxp, minp;
	for (const auto& m : gwm) {
		hat.push_back(projectPreds(m, hatPreds));
		maxp.push_back(projectPreds(m, maxPreds));
		minp.push_back(projectPreds(m, minPreds));
	}
	auto geq = [&](std::size_t a, std::size_t b) {
		if (hat[b].properSubsetOf(hat[a])) return true;
		if (hat[a] != hat[b]) return false;
		if (maxp[b].properSubsetOf(maxp[a])) return true;
		if (maxp[a] != maxp[b]) return false;
		return minp[a].subsetOf(minp[b]);
	};
	std::vector<Interpretation> out;
	for (std::size_t i = 0; i < gwm.size(); ++i) {
		bool dominated = false;
		for (std::size_t j = 0; j < gwm.size() && !dominated; ++j) {
			dominated = geq(j, i) && !geq(i, j);
		}
		if (!dominated) out.push_back(gwm.models()[i]);
	}
	return ModelSet::of(std::move(out));
}

} // namespace p2pdl

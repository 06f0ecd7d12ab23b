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
#include <p2pdl/netsim.hpp>

#include <p2pdl/ground.hpp>

#include <algorithm>
#include <deque>

namespace p2pdl {

bool operator==(const SimTrace& a, const SimTrace& b) {
	auto key = [](const TraceEntry& e) { return std::tuple(e.t, e.kind, e.from, e.to, e.request_id, e.predicate); };
	if (a.entries.size() != b.entries.size()) return false;
	for (std::size_t i = 0; i < a.entries.size(); ++i) {
		if (key(a.entries[i]) != key(b.entries[i])) return false;
	}
	return true;
}

namespace {

constexpr const char* kUndefSuffix = "__u";

bool auxAtom(const PeerAtom& a) {
	return has_suffix(a.predicate, kTestingSuffix) || has_suffix(a.predicate, kViolatingSuffix) ||
	       has_suffix(a.predicate, kUndefSuffix);
}

// One isolated actor: its peer's rules, the shared constant alphabet, and
// the peer's predicate signature. Remote knowledge arrives as fragments.
class PeerNode {
public:
	PeerNode(const Peer& peer, std::vector<Term> constants, std::map<std::string, std::size_t> signature)
		: peer_(peer), constants_(std::move(constants)), signature_(std::move(signature)) {
		std::set<PredicateKey> needs;
		for (const auto& r : peer_.mapping_rules) {
			for (const auto& l : r.body) needs.insert({l.atom.peer, l.atom.predicate});
		}
		needed_.assign(needs.begin(), needs.end());
	}

	const std::vector<PredicateKey>& needed() const { return needed_; }
	bool computed() const { return computed_; }

	bool haveAllFragments() const {
		return std::all_of(needed_.begin(), needed_.end(), [this](const PredicateKey& k) { return cache_.count(k) != 0; });
	}
	bool haveFragment(const PredicateKey& k) const { return cache_.count(k) != 0; }
	void storeFragment(const PredicateKey& k, Fragment f) { cache_[k] = std::move(f); }

	void addPending(int requestId, int from, const PredicateKey& predicate) {
		pending_.push_back({requestId, from, predicate});
	}
	std::vector<std::tuple<int, int, PredicateKey>> takePending() {
		auto out = std::move(pending_);
		pending_.clear();
		return out;
	}

	//! Local portion of the normalized rewriting plus the received remote
	//! fragments, evaluated under the well-founded semantics.
	void compute() {
		P2PSystem local;
		local.peers.push_back(peer_);
		std::vector<GenRule> rules = rew_w(local);
		for (const auto& [key, frag] : cache_) {
			for (const auto& a : frag.true_atoms) rules.push_back({{a}, false, {}, {}});
			for (const auto& a : frag.undef_atoms) {
				PeerAtom twin = a;
				twin.predicate += kUndefSuffix;
				rules.push_back({{a}, false, {{false, twin}}, {}});
				rules.push_back({{twin}, false, {{false, a}}, {}});
			}
		}
		NormalProgram prog;
		for (const auto& g : ground_gen_rules(rules, constants_)) {
			if (g.heads.empty()) continue; // constraints do not join the fixpoint
			EngineRule er;
			er.head = g.heads.front();
			for (const auto& l : g.body) (l.positive ? er.pos : er.neg).push_back(l.atom);
			prog.rules.push_back(std::move(er));
		}
		std::tie(k_, u_) = well_founded_fixpoint(prog);
		computed_ = true;
	}

	Fragment fragmentFor(const std::string& predicate) const {
		Fragment out;
		std::vector<PeerAtom> t, u;
		for (const auto& a : k_) {
			if (a.peer == peer_.id && a.predicate == predicate) t.push_back(a);
		}
		for (const auto& a : u_.minus(k_)) {
			if (a.peer == peer_.id && a.predicate == predicate) u.push_back(a);
		}
		out.true_atoms = Interpretation::of(std::move(t));
		out.undef_atoms = Interpretation::of(std::move(u));
		return out;
	}

	//! The node's whole three-valued model over its peer's declared atoms.
	std::pair<ThreeValuedModel, Interpretation> localModel() const {
		std::vector<PeerAtom> trueSet, falseSet, undefSet;
		for (const auto& a : k_) {
			if (a.peer == peer_.id && !auxAtom(a)) trueSet.push_back(a);
		}
		for (const auto& [pred, arity] : signature_) {
			std::vector<std::string> vars;
			for (std::size_t i = 0; i < arity; ++i) vars.push_back("X" + std::to_string(i));
			if (arity > 0 && constants_.empty()) continue;
			for_each_grounding(vars, constants_, {}, [&](const Substitution& s) {
				PeerAtom a{peer_.id, pred, {}};
				for (const auto& v : vars) a.args.push_back(s.at(v));
				if (!u_.contains(a)) falseSet.push_back(std::move(a));
				else if (!k_.contains(a)) undefSet.push_back(std::move(a));
			});
		}
		ThreeValuedModel model;
		model.true_set = Interpretation::of(std::move(trueSet));
		model.false_set = Interpretation::of(std::move(falseSet));
		return {model, Interpretation::of(std::move(undefSet))};
	}

private:
	Peer peer_;
	std::vector<Term> constants_;
	std::map<std::string, std::size_t> signature_;
	std::vector<PredicateKey> needed_;
	std::map<PredicateKey, Fragment> cache_;
	std::vector<std::tuple<int, int, PredicateKey>> pending_;
	bool computed_ = false;
	Interpretation k_, u_;
};

class Simulator {
public:
	Simulator(const P2PSystem& sys, const PeerAtom& query) : sys_(normalize_mappings(sys)), query_(query) {
		if (!sys_.minMappingRules().empty()) {
			throw SemanticsError("the distributed computation is defined for maximal systems only");
		}
		if (sys_.lpHasNegation()) {
			throw SemanticsError("the distributed computation requires negation-free standard rules");
		}
		if (!sys_.roleMap().count({query.peer, query.predicate})) {
			throw RoleError("query predicate " + std::to_string(query.peer) + ":" + query.predicate + " is not declared in the system");
		}
		auto constants = constant_universe(sys_);
		// Per-peer predicate signatures from the whole system's declarations.
		std::map<int, std::map<std::string, std::size_t>> signatures;
		for (const auto& p : sys_.peers) {
			auto claim = [&signatures](const PeerAtom& a) { signatures[a.peer].try_emplace(a.predicate, a.args.size()); };
			for (const auto& f : p.database) claim(f);
			auto claimRule = [&](const PeerRule& r) {
				if (r.head) claim(*r.head);
				for (const auto& l : r.body) claim(l.atom);
			};
			for (const auto& r : p.standard_rules) claimRule(r);
			for (const auto& r : p.mapping_rules) claimRule(r);
			for (const auto& r : p.constraints) claimRule(r);
		}
		for (const auto& p : sys_.peers) {
			nodes_.emplace(p.id, PeerNode(p, constants, signatures[p.id]));
			inboxes_[p.id];
		}
	}

	SimResult run() {
		SimResult result;
		// The user's query is an external request, not part of the trace.
		process(query_.peer, Message{MsgKind::QueryRequest, 0, query_.peer, 0, {query_.peer, query_.predicate}, {}, {}});
		while (deliverOne()) {}
		PeerNode& node = nodes_.at(query_.peer);
		auto [model, undef] = node.localModel();
		result.fragment = std::move(model);
		result.undefined_set = std::move(undef);
		result.query_status = query_.ground()
		                          ? (result.fragment.true_set.contains(query_) ? TruthValue::True
		                             : result.undefined_set.contains(query_)   ? TruthValue::Undefined
		                                                                       : TruthValue::False)
		                          : TruthValue::False;
		result.trace = std::move(trace_);
		return result;
	}

private:
	void send(Message msg) { inboxes_.at(msg.to).push_back(std::move(msg)); }

	bool deliverOne() {
		for (auto& [id, box] : inboxes_) { // ascending peer id
			if (box.empty()) continue;
			Message msg = std::move(box.front());
			box.pop_front();
			trace_.entries.push_back({++clock_, msg.kind, msg.from, msg.to, msg.request_id, msg.predicate});
			process(msg.to, msg);
			return true;
		}
		return false;
	}

	void process(int nodeId, const Message& msg) {
		PeerNode& node = nodes_.at(nodeId);
		if (msg.kind == MsgKind::QueryAnswer) {
			node.storeFragment(msg.predicate, msg.payload);
			if (node.haveAllFragments() && !node.computed()) {
				node.compute();
				answerPending(node);
			}
			return;
		}
		// A request. Answer from the cached model, or fetch what is missing.
		if (node.computed()) {
			if (msg.from != 0) reply(node, msg.request_id, msg.from, msg.predicate);
			return;
		}
		node.addPending(msg.request_id, msg.from, msg.predicate);
		std::vector<int> visited = msg.visited;
		visited.push_back(nodeId);
		bool waiting = false;
		for (const auto& key : node.needed()) {
			if (node.haveFragment(key)) continue;
			waiting = true;
			if (requested_.count({nodeId, key})) continue;
			if (std::find(visited.begin(), visited.end(), key.first) != visited.end()) {
				throw CyclicTopologyError("mapping cycle through peer " + std::to_string(key.first) +
				                          "; run the centralized computation instead");
			}
			requested_.insert({nodeId, key});
			send(Message{MsgKind::QueryRequest, nodeId, key.first, ++nextRequest_, key, {}, visited});
		}
		if (!waiting) {
			node.compute();
			answerPending(node);
		}
	}

	void answerPending(PeerNode& node) {
		for (const auto& [requestId, from, predicate] : node.takePending()) {
			if (from != 0) reply(node, requestId, from, predicate);
		}
	}

	void reply(PeerNode& node, int requestId, int to, const PredicateKey& predicate) {
		Message answer;
		answer.kind = MsgKind::QueryAnswer;
		answer.from = predicate.first;
		answer.to = to;
		answer.request_id = requestId;
		answer.predicate = predicate;
		answer.payload = node.fragmentFor(predicate.second);
		send(std::move(answer));
	}

	P2PSystem sys_;
	PeerAtom query_;
	std::map<int, PeerNode> nodes_;
	std::map<int, std::deque<Message>> inboxes_;
	std::set<std::pair<int, PredicateKey>> requested_;
	SimTrace trace_;
	int clock_ = 0;
	int nextRequest_ = 0;
};

} // namespace

SimResult simulate_query(const P2PSystem& sys, const PeerAtom& query) {
	Simulator sim(sys, query);
	return sim.run();
}

} // namespace p2pdl

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
#include <p2pdl/engine.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace p2pdl {

std::vector<EngineRule> NormalProgram::definite() const {
	std::vector<EngineRule> out;
	for (const auto& r : rules) {
		if (r.head) out.push_back(r);
	}
	return out;
}

std::vector<EngineRule> NormalProgram::constraints() const {
	std::vector<EngineRule> out;
	for (const auto& r : rules) {
		if (!r.head) out.push_back(r);
	}
	return out;
}

namespace {

enum : char { kUnknown = 0, kIn = 1, kOut = 2 };

// Integer-indexed view of a normal program for the fixpoint and the
// stable-model search.
class IdProgram {
public:
	explicit IdProgram(const NormalProgram& p) {
		for (const auto& r : p.rules) {
			IdRule ir;
			ir.head = r.head ? atomId(*r.head) : -1;
			for (const auto& a : r.pos) ir.pos.push_back(atomId(a));
			for (const auto& a : r.neg) ir.neg.push_back(atomId(a));
			if (ir.head >= 0) rules_.push_back(std::move(ir));
			else constraints_.push_back(std::move(ir));
		}
	}

	int atomCount() const { return static_cast<int>(atoms_.size()); }
	const PeerAtom& atom(int id) const { return atoms_[id]; }

	// Atoms occurring in a negative body literal of a rule with a head.
	std::vector<int> negAtoms() const {
		std::set<int> out;
		for (const auto& r : rules_) out.insert(r.neg.begin(), r.neg.end());
		return {out.begin(), out.end()};
	}

	// Least fixpoint of the definite rules admitted by `active`.
	std::vector<char> lfp(const std::function<bool(const std::vector<int>&)>& active) const {
		std::vector<char> in(atoms_.size(), 0);
		bool changed = true;
		while (changed) {
			changed = false;
			for (const auto& r : rules_) {
				if (in[r.head]) continue;
				if (!active(r.neg)) continue;
				bool fire = true;
				for (int a : r.pos) {
					if (!in[a]) { fire = false; break; }
				}
				if (fire) {
					in[r.head] = 1;
					changed = true;
				}
			}
		}
		return in;
	}

	bool violatesConstraints(const std::vector<char>& model) const {
		for (const auto& c : constraints_) {
			bool bodyTrue = true;
			for (int a : c.pos) {
				if (!model[a]) { bodyTrue = false; break; }
			}
			if (bodyTrue) {
				for (int a : c.neg) {
					if (model[a]) { bodyTrue = false; break; }
				}
			}
			if (bodyTrue) return true;
		}
		return false;
	}

	Interpretation toInterpretation(const std::vector<char>& model) const {
		std::vector<PeerAtom> atoms;
		for (std::size_t i = 0; i < model.size(); ++i) {
			if (model[i]) atoms.push_back(atoms_[i]);
		}
		return Interpretation::of(std::move(atoms));
	}

private:
	struct IdRule {
		int head = -1;
		std::vector<int> pos, neg;
	};

	int atomId(const PeerAtom& a) {
		auto [it, inserted] = ids_.try_emplace(a, static_cast<int>(atoms_.size()));
		if (inserted) atoms_.push_back(a);
		return it->second;
	}

	std::vector<PeerAtom> atoms_;
	std::map<PeerAtom, int> ids_;
	std::vector<IdRule> rules_;
	std::vector<IdRule> constraints_;
};

// Complete search for stable models: branch over the truth of atoms that
// occur in negative body literals, with propagation from a lower bound
// (rules whose negative literals are all settled false) and an upper bound
// (rules not blocked by a settled-true literal). A candidate is the least
// model of its own reduct by construction once every such atom is settled.
class StableSearch {
public:
	explicit StableSearch(const NormalProgram& p) : prog_(p), negAtoms_(prog_.negAtoms()) {}

	std::vector<Interpretation> run() {
		std::vector<char> assign(prog_.atomCount(), kUnknown);
		search(assign);
		return std::move(found_);
	}

private:
	std::vector<char> lower(const std::vector<char>& assign) const {
		return prog_.lfp([&assign](const std::vector<int>& neg) {
			return std::all_of(neg.begin(), neg.end(), [&assign](int a) { return assign[a] == kOut; });
		});
	}
	std::vector<char> upper(const std::vector<char>& assign) const {
		return prog_.lfp([&assign](const std::vector<int>& neg) {
			return std::none_of(neg.begin(), neg.end(), [&assign](int a) { return assign[a] == kIn; });
		});
	}

	void search(std::vector<char>& assign) {
		std::vector<char> lo, hi;
		for (;;) {
			lo = lower(assign);
			hi = upper(assign);
			bool changed = false;
			for (int a : negAtoms_) {
				if (assign[a] == kIn && !hi[a]) return; // cannot be derived
				if (assign[a] == kOut && lo[a]) return; // derived regardless
				if (assign[a] == kUnknown) {
					if (lo[a]) { assign[a] = kIn; changed = true; }
					else if (!hi[a]) { assign[a] = kOut; changed = true; }
				}
			}
			if (!changed) break;
		}
		int branch = -1;
		for (int a : negAtoms_) {
			if (assign[a] == kUnknown) { branch = a; break; }
		}
		if (branch < 0) {
			// All negative atoms settled: lo is the least model of the reduct.
			if (!prog_.violatesConstraints(lo)) found_.push_back(prog_.toInterpretation(lo));
			return;
		}
		std::vector<char> out = assign;
		out[branch] = kOut;
		search(out);
		std::vector<char> in = assign;
		in[branch] = kIn;
		search(in);
	}

	IdProgram prog_;
	std::vector<int> negAtoms_;
	std::vector<Interpretation> found_;
};

} // namespace

Interpretation minimal_model_positive(const NormalProgram& p) {
	for (const auto& r : p.rules) {
		if (!r.neg.empty()) throw ContractViolation("minimal_model_positive: program contains a negative literal");
		if (!r.head) throw ContractViolation("minimal_model_positive: program contains a constraint");
	}
	IdProgram prog(p);
	auto model = prog.lfp([](const std::vector<int>&) { return true; });
	return prog.toInterpretation(model);
}

bool satisfies_constraint(const Interpretation& m, const EngineRule& c) {
	bool bodyTrue = std::all_of(c.pos.begin(), c.pos.end(), [&m](const PeerAtom& a) { return m.contains(a); }) &&
	                std::none_of(c.neg.begin(), c.neg.end(), [&m](const PeerAtom& a) { return m.contains(a); });
	return !bodyTrue;
}

std::optional<EngineRule> check_constraints(const Interpretation& m, const std::vector<EngineRule>& constraints) {
	std::vector<EngineRule> sorted = constraints;
	std::sort(sorted.begin(), sorted.end());
	for (const auto& c : sorted) {
		if (!satisfies_constraint(m, c)) return c;
	}
	return std::nullopt;
}

ModelSet stable_models_normal(const NormalProgram& p) {
	StableSearch search(p);
	return ModelSet::of(search.run());
}

namespace {

// Strongly connected components of the positive dependency graph
// (edges: positive body atom -> head atom).
std::vector<int> positiveSccs(const DisjunctiveProgram& p, std::map<PeerAtom, int>& ids) {
	std::vector<PeerAtom> atoms;
	auto id = [&](const PeerAtom& a) {
		auto [it, inserted] = ids.try_emplace(a, static_cast<int>(atoms.size()));
		if (inserted) atoms.push_back(a);
		return it->second;
	};
	std::vector<std::vector<int>> adj;
	auto ensure = [&adj](int v) {
		if (static_cast<int>(adj.size()) <= v) adj.resize(v + 1);
	};
	for (const auto& r : p.rules) {
		for (const auto& h : r.heads) ensure(id(h));
		for (const auto& b : r.pos) ensure(id(b));
		for (const auto& b : r.neg) ensure(id(b));
		for (const auto& b : r.pos) {
			for (const auto& h : r.heads) adj[ids[b]].push_back(ids[h]);
		}
	}
	int n = static_cast<int>(adj.size());
	// Tarjan, iterative.
	std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stackPos(n, 0);
	std::vector<int> stack;
	int counter = 0, comps = 0;
	for (int s = 0; s < n; ++s) {
		if (num[s] >= 0) continue;
		std::vector<std::pair<int, std::size_t>> call{{s, 0}};
		while (!call.empty()) {
			auto& [v, idx] = call.back();
			if (idx == 0) {
				num[v] = low[v] = counter++;
				stack.push_back(v);
				stackPos[v] = 1;
			}
			if (idx < adj[v].size()) {
				int w = adj[v][idx++];
				if (num[w] < 0) {
					call.push_back({w, 0});
				} else if (stackPos[w]) {
					low[v] = std::min(low[v], num[w]);
				}
			} else {
				int done = v;
				if (low[done] == num[done]) {
					for (;;) {
						int w = stack.back();
						stack.pop_back();
						stackPos[w] = 0;
						comp[w] = comps;
						if (w == done) break;
					}
					++comps;
				}
				call.pop_back();
				if (!call.empty()) {
					int parent = call.back().first;
					low[parent] = std::min(low[parent], low[done]);
				}
			}
		}
	}
	return comp;
}

} // namespace

ModelSet stable_models_disjunctive_hcf(const DisjunctiveProgram& p) {
	std::map<PeerAtom, int> ids;
	auto comp = positiveSccs(p, ids);
	for (const auto& r : p.rules) {
		for (std::size_t i = 0; i < r.heads.size(); ++i) {
			for (std::size_t j = i + 1; j < r.heads.size(); ++j) {
				if (comp[ids.at(r.heads[i])] == comp[ids.at(r.heads[j])]) {
					throw NotHeadCycleFree("head atoms " + to_string(r.heads[i]) + " and " + to_string(r.heads[j]) + " share a positive cycle");
				}
			}
		}
	}
	NormalProgram shifted;
	for (const auto& r : p.rules) {
		if (r.heads.empty()) {
			shifted.rules.push_back({std::nullopt, r.pos, r.neg});
			continue;
		}
		for (std::size_t i = 0; i < r.heads.size(); ++i) {
			EngineRule nr;
			nr.head = r.heads[i];
			nr.pos = r.pos;
			nr.neg = r.neg;
			for (std::size_t j = 0; j < r.heads.size(); ++j) {
				if (j != i) nr.neg.push_back(r.heads[j]);
			}
			shifted.rules.push_back(std::move(nr));
		}
	}
	return stable_models_normal(shifted);
}

std::vector<GenRule> expand_xor(const GenRule& r) {
	if (!r.exclusive || r.heads.size() != 2) {
		throw ContractViolation("expand_xor: rule must have an exclusive head of exactly two atoms");
	}
	const PeerAtom& a = r.heads[0];
	const PeerAtom& b = r.heads[1];
	GenRule first{{a}, false, r.body, r.builtins};
	first.body.push_back({false, b});
	GenRule second{{b}, false, r.body, r.builtins};
	second.body.push_back({false, a});
	GenRule mutex{{}, false, {{true, a}, {true, b}}, {}};
	return {std::move(first), std::move(second), std::move(mutex)};
}

EngineRule to_engine_rule(const PeerRule& r) {
	if (!r.builtins.empty()) throw ContractViolation("engine rules must be builtin-free");
	EngineRule out;
	out.head = r.head;
	for (const auto& l : r.body) {
		if (!l.atom.ground()) throw ContractViolation("engine rules must be ground");
		(l.positive ? out.pos : out.neg).push_back(l.atom);
	}
	return out;
}

NormalProgram to_normal_program(const std::vector<GenRule>& ground_rules) {
	NormalProgram out;
	for (const auto& r : ground_rules) {
		if (r.heads.size() > 1) throw ContractViolation("normal program rules have at most one head atom");
		if (!r.builtins.empty()) throw ContractViolation("engine rules must be builtin-free");
		EngineRule er;
		if (!r.heads.empty()) er.head = r.heads.front();
		for (const auto& l : r.body) (l.positive ? er.pos : er.neg).push_back(l.atom);
		out.rules.push_back(std::move(er));
	}
	return out;
}

DisjunctiveProgram to_disjunctive_program(const std::vector<GenRule>& ground_rules) {
	DisjunctiveProgram out;
	for (const auto& r : ground_rules) {
		if (!r.builtins.empty()) throw ContractViolation("engine rules must be builtin-free");
		DisjEngineRule dr;
		dr.heads = r.heads;
		for (const auto& l : r.body) (l.positive ? dr.pos : dr.neg).push_back(l.atom);
		out.rules.push_back(std::move(dr));
	}
	return out;
}

} // namespace p2pdl

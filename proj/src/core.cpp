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
#include <p2pdl/core.hpp>

#include <algorithm>
#include <sstream>

namespace p2pdl {

bool PeerAtom::ground() const {
	return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.isVariable(); });
}

std::strong_ordering canonical_order(const PeerAtom& a, const PeerAtom& b) {
	if (!a.ground() || !b.ground()) {
		throw ContractViolation("canonical_order: both atoms must be ground");
	}
	return a <=> b;
}

bool PeerRule::ground() const {
	if (head && !head->ground()) return false;
	for (const auto& l : body) {
		if (!l.atom.ground()) return false;
	}
	for (const auto& b : builtins) {
		if (b.lhs.isVariable() || b.rhs.isVariable()) return false;
	}
	return true;
}

int PeerRule::ownerPeer() const {
	if (head) return head->peer;
	if (!body.empty()) return body.front().atom.peer;
	return 0;
}

const Peer& P2PSystem::peer(int id) const {
	for (const auto& p : peers) {
		if (p.id == id) return p;
	}
	throw Error("no peer with id " + std::to_string(id));
}

std::vector<PeerAtom> P2PSystem::facts() const {
	std::vector<PeerAtom> out;
	for (const auto& p : peers) out.insert(out.end(), p.database.begin(), p.database.end());
	return out;
}

std::vector<PeerRule> P2PSystem::standardRules() const {
	std::vector<PeerRule> out;
	for (const auto& p : peers) out.insert(out.end(), p.standard_rules.begin(), p.standard_rules.end());
	return out;
}

std::vector<PeerRule> P2PSystem::mappingRules() const {
	std::vector<PeerRule> out;
	for (const auto& p : peers) out.insert(out.end(), p.mapping_rules.begin(), p.mapping_rules.end());
	return out;
}

std::vector<PeerRule> P2PSystem::constraints() const {
	std::vector<PeerRule> out;
	for (const auto& p : peers) out.insert(out.end(), p.constraints.begin(), p.constraints.end());
	return out;
}

std::vector<PeerRule> P2PSystem::maxMappingRules() const {
	std::vector<PeerRule> out;
	for (const auto& r : mappingRules()) {
		if (r.kind == RuleKind::MaxMapping) out.push_back(r);
	}
	return out;
}

std::vector<PeerRule> P2PSystem::minMappingRules() const {
	std::vector<PeerRule> out;
	for (const auto& r : mappingRules()) {
		if (r.kind == RuleKind::MinMapping) out.push_back(r);
	}
	return out;
}

bool P2PSystem::lpHasNegation() const {
	for (const auto& r : standardRules()) {
		for (const auto& l : r.body) {
			if (!l.positive) return true;
		}
	}
	return false;
}

std::map<PredicateKey, PredicateRole> P2PSystem::roleMap() const {
	std::map<PredicateKey, PredicateRole> roles;
	auto declare = [&roles](const PeerAtom& a, PredicateRole r) {
		roles.insert_or_assign({a.peer, a.predicate}, r);
	};
	// Body-only predicates default to base; heads override.
	for (const auto& p : peers) {
		auto touch = [&roles](const PeerAtom& a) { roles.try_emplace({a.peer, a.predicate}, PredicateRole::Base); };
		for (const auto& f : p.database) touch(f);
		auto touchRule = [&](const PeerRule& r) {
			if (r.head) touch(*r.head);
			for (const auto& l : r.body) touch(l.atom);
		};
		for (const auto& r : p.standard_rules) touchRule(r);
		for (const auto& r : p.mapping_rules) touchRule(r);
		for (const auto& r : p.constraints) touchRule(r);
	}
	for (const auto& p : peers) {
		for (const auto& r : p.standard_rules) declare(*r.head, PredicateRole::Derived);
		for (const auto& r : p.mapping_rules) declare(*r.head, PredicateRole::Mapping);
	}
	return roles;
}

std::set<PredicateKey> P2PSystem::maxMappingPredicates() const {
	std::set<PredicateKey> out;
	for (const auto& r : maxMappingRules()) out.insert({r.head->peer, r.head->predicate});
	return out;
}

std::set<PredicateKey> P2PSystem::minMappingPredicates() const {
	std::set<PredicateKey> out;
	for (const auto& r : minMappingRules()) out.insert({r.head->peer, r.head->predicate});
	return out;
}

Interpretation Interpretation::of(std::vector<PeerAtom> atoms) {
	for (const auto& a : atoms) {
		if (!a.ground()) throw ContractViolation("interpretation atoms must be ground: " + to_string(a));
	}
	std::sort(atoms.begin(), atoms.end());
	atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
	Interpretation m;
	m.atoms_ = std::move(atoms);
	return m;
}

bool Interpretation::contains(const PeerAtom& a) const {
	return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

Interpretation Interpretation::unionWith(const Interpretation& other) const {
	std::vector<PeerAtom> out;
	out.reserve(size() + other.size());
	std::set_union(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(), std::back_inserter(out));
	Interpretation m;
	m.atoms_ = std::move(out);
	return m;
}

Interpretation Interpretation::minus(const Interpretation& other) const {
	std::vector<PeerAtom> out;
	std::set_difference(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(), std::back_inserter(out));
	Interpretation m;
	m.atoms_ = std::move(out);
	return m;
}

Interpretation Interpretation::intersect(const Interpretation& other) const {
	std::vector<PeerAtom> out;
	std::set_intersection(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(), std::back_inserter(out));
	Interpretation m;
	m.atoms_ = std::move(out);
	return m;
}

bool Interpretation::subsetOf(const Interpretation& other) const {
	return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(), atoms_.end());
}

ModelSet ModelSet::of(std::vector<Interpretation> models) {
	std::sort(models.begin(), models.end());
	models.erase(std::unique(models.begin(), models.end()), models.end());
	ModelSet s;
	s.models_ = std::move(models);
	return s;
}

bool ModelSet::contains(const Interpretation& m) const {
	return std::binary_search(models_.begin(), models_.end(), m);
}

Interpretation project(const Interpretation& m, Role role, const P2PSystem& sys) {
	const auto roles = sys.roleMap();
	const auto maxPreds = sys.maxMappingPredicates();
	const auto minPreds = sys.minMappingPredicates();
	std::vector<PeerAtom> out;
	for (const auto& a : m) {
		auto it = roles.find({a.peer, a.predicate});
		if (it == roles.end()) {
			throw RoleError("predicate " + std::to_string(a.peer) + ":" + a.predicate + " is not declared in the system");
		}
		bool keep = false;
		switch (role) {
			case Role::D: keep = it->second == PredicateRole::Base; break;
			case Role::LP: keep = it->second == PredicateRole::Derived; break;
			case Role::MP: keep = it->second == PredicateRole::Mapping; break;
			case Role::MPmax: keep = maxPreds.count({a.peer, a.predicate}) != 0; break;
			case Role::MPmin: keep = minPreds.count({a.peer, a.predicate}) != 0; break;
		}
		if (keep) out.push_back(a);
	}
	return Interpretation::of(std::move(out));
}

std::string to_string(const Term& t) {
	switch (t.kind()) {
		case TermKind::Int: return std::to_string(t.intValue());
		case TermKind::Ident:
		case TermKind::Var: return t.text();
		case TermKind::Str: {
			std::string out = "\"";
			for (char c : t.text()) {
				if (c == '"' || c == '\\') out.push_back('\\');
				out.push_back(c);
			}
			out.push_back('"');
			return out;
		}
	}
	return {};
}

std::string to_string(const PeerAtom& a) {
	std::ostringstream os;
	os << a.peer << ':' << a.predicate;
	if (!a.args.empty()) {
		os << '(';
		for (std::size_t i = 0; i < a.args.size(); ++i) {
			if (i) os << ',';
			os << to_string(a.args[i]);
		}
		os << ')';
	}
	return os.str();
}

std::string to_string(const Literal& l) {
	return l.positive ? to_string(l.atom) : "not " + to_string(l.atom);
}

std::string to_string(BuiltinOp op) {
	switch (op) {
		case BuiltinOp::Lt: return "<";
		case BuiltinOp::Gt: return ">";
		case BuiltinOp::Le: return "<=";
		case BuiltinOp::Ge: return ">=";
		case BuiltinOp::Eq: return "=";
		case BuiltinOp::Ne: return "!=";
	}
	return {};
}

std::string to_string(const BuiltinAtom& b) {
	return to_string(b.lhs) + ' ' + to_string(b.op) + ' ' + to_string(b.rhs);
}

std::string to_string(const Interpretation& m) {
	std::string out = "{";
	bool first = true;
	for (const auto& a : m) {
		if (!first) out += ", ";
		first = false;
		out += to_string(a);
	}
	out += "}";
	return out;
}

bool has_suffix(const std::string& name, const char* suffix) {
	std::string_view s(suffix);
	return name.size() > s.size() && name.compare(name.size() - s.size(), s.size(), s) == 0;
}

std::string display_atom(const PeerAtom& a) {
	PeerAtom shown = a;
	auto rename = [&shown](const char* suffix, const char* marker) {
		if (!has_suffix(shown.predicate, suffix)) return false;
		shown.predicate.resize(shown.predicate.size() - std::string_view(suffix).size());
		shown.predicate += marker;
		return true;
	};
	rename(kPrimedSuffix, "'") || rename(kTestingSuffix, "^t") || rename(kViolatingSuffix, "^v");
	return to_string(shown);
}

std::string display_gen_rule(const GenRule& r) {
	std::ostringstream os;
	for (std::size_t i = 0; i < r.heads.size(); ++i) {
		if (i) os << (r.exclusive ? " (+) " : " | ");
		os << display_atom(r.heads[i]);
	}
	if (!r.body.empty() || !r.builtins.empty()) {
		os << (r.heads.empty() ? ":- " : " :- ");
		bool first = true;
		for (const auto& l : r.body) {
			if (!first) os << ", ";
			first = false;
			if (!l.positive) os << "not ";
			os << display_atom(l.atom);
		}
		for (const auto& b : r.builtins) {
			if (!first) os << ", ";
			first = false;
			os << to_string(b.lhs) << ' ' << to_string(b.op) << ' ' << to_string(b.rhs);
		}
	}
	os << '.';
	return os.str();
}

} // namespace p2pdl

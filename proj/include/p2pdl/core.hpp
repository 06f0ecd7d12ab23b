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
#ifndef P2PDL_CORE_HPP
#define P2PDL_CORE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace p2pdl {

class Error : public std::runtime_error {
public:
	explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
// Precondition of an operation violated by the caller.
class ContractViolation : public Error { public: using Error::Error; };
// A semantics was requested for a system whose rule mix does not support it.
class SemanticsError : public Error { public: using Error::Error; };
// More candidate mapping atoms than the enumeration cap allows.
class CapExceeded : public Error { public: using Error::Error; };
class GroundingError : public Error { public: using Error::Error; };
class NormalizationError : public Error { public: using Error::Error; };
class RewriteError : public Error { public: using Error::Error; };
class NotHeadCycleFree : public Error { public: using Error::Error; };
class PriorityError : public Error { public: using Error::Error; };
class CyclicTopologyError : public Error { public: using Error::Error; };
class RoleError : public Error { public: using Error::Error; };

//! Kind tag of a term. The declaration order fixes the cross-kind precedence
//! used by the canonical order and by comparison builtins:
//! integers < identifiers < strings (variables sort last, only relevant for
//! structural comparison of non-ground objects).
enum class TermKind : unsigned char { Int = 0, Ident, Str, Var };

//! A term is either a constant (integer, identifier or quoted string) or a
//! variable. Immutable value type.
class Term {
public:
	Term() : kind_(TermKind::Ident), num_(0) {}
	static Term integer(std::int64_t v) { return Term(TermKind::Int, v, {}); }
	static Term ident(std::string s) { return Term(TermKind::Ident, 0, std::move(s)); }
	static Term str(std::string s) { return Term(TermKind::Str, 0, std::move(s)); }
	static Term var(std::string name) { return Term(TermKind::Var, 0, std::move(name)); }

	TermKind kind() const { return kind_; }
	bool isVariable() const { return kind_ == TermKind::Var; }
	bool isConstant() const { return kind_ != TermKind::Var; }
	std::int64_t intValue() const { return num_; }
	//! Identifier symbol, string contents, or variable name.
	const std::string& text() const { return text_; }

	// Member order realizes the kind-precedence total order.
	friend std::strong_ordering operator<=>(const Term&, const Term&) = default;
	friend bool operator==(const Term&, const Term&) = default;

private:
	Term(TermKind k, std::int64_t n, std::string t) : kind_(k), num_(n), text_(std::move(t)) {}
	TermKind kind_;
	std::int64_t num_;
	std::string text_;
};

//! An atom i:p(t1,...,tk) tagged with its peer identifier i >= 1.
struct PeerAtom {
	int peer = 0;
	std::string predicate;
	std::vector<Term> args;

	bool ground() const;
	friend std::strong_ordering operator<=>(const PeerAtom&, const PeerAtom&) = default;
	friend bool operator==(const PeerAtom&, const PeerAtom&) = default;
};

//! Total order on ground peer atoms: peer id, then predicate, then arguments
//! left to right under the term order. Both atoms must be ground.
std::strong_ordering canonical_order(const PeerAtom& a, const PeerAtom& b);

struct Literal {
	bool positive = true;
	PeerAtom atom;
	friend std::strong_ordering operator<=>(const Literal&, const Literal&) = default;
	friend bool operator==(const Literal&, const Literal&) = default;
};

enum class BuiltinOp : unsigned char { Lt, Gt, Le, Ge, Eq, Ne };

struct BuiltinAtom {
	BuiltinOp op = BuiltinOp::Eq;
	Term lhs, rhs;
	friend std::strong_ordering operator<=>(const BuiltinAtom&, const BuiltinAtom&) = default;
	friend bool operator==(const BuiltinAtom&, const BuiltinAtom&) = default;
};

enum class RuleKind : unsigned char { Standard, Constraint, MaxMapping, MinMapping };

//! One peer rule of any of the four kinds. Constraints have no head; mapping
//! rules have a single-peer positive body whose peer differs from the head's.
struct PeerRule {
	RuleKind kind = RuleKind::Standard;
	std::optional<PeerAtom> head;
	std::vector<Literal> body;
	std::vector<BuiltinAtom> builtins;

	bool isMapping() const { return kind == RuleKind::MaxMapping || kind == RuleKind::MinMapping; }
	bool ground() const;
	//! Peer id the rule belongs to (head peer, or body peer for constraints).
	int ownerPeer() const;
	friend std::strong_ordering operator<=>(const PeerRule&, const PeerRule&) = default;
	friend bool operator==(const PeerRule&, const PeerRule&) = default;
};

//! A peer <D_i, LP_i, MP_i, IC_i>.
struct Peer {
	int id = 0;
	std::vector<PeerAtom> database;      // D_i, ground facts
	std::vector<PeerRule> standard_rules; // LP_i
	std::vector<PeerRule> mapping_rules;  // MP_i
	std::vector<PeerRule> constraints;    // IC_i
	friend bool operator==(const Peer&, const Peer&) = default;
};

enum class PredicateRole : unsigned char { Base, Derived, Mapping };

using PredicateKey = std::pair<int, std::string>; // (peer id, predicate)

//! A P2P system: peers sorted by id, ids contiguous from 1.
struct P2PSystem {
	std::vector<Peer> peers;

	int peerCount() const { return static_cast<int>(peers.size()); }
	const Peer& peer(int id) const;

	std::vector<PeerAtom> facts() const;            // D
	std::vector<PeerRule> standardRules() const;    // LP
	std::vector<PeerRule> mappingRules() const;     // MP
	std::vector<PeerRule> constraints() const;      // IC
	std::vector<PeerRule> maxMappingRules() const;  // MP-max
	std::vector<PeerRule> minMappingRules() const;  // MP-min

	bool isMaximal() const { return minMappingRules().empty(); }
	bool isMinimal() const { return maxMappingRules().empty(); }
	bool lpHasNegation() const;

	//! Role of every predicate occurring in the system. Facts declare base
	//! predicates, standard-rule heads derived ones, mapping-rule heads
	//! mapping ones; body-only predicates are base.
	std::map<PredicateKey, PredicateRole> roleMap() const;
	//! Predicates that head at least one maximal (resp. minimal) mapping rule.
	std::set<PredicateKey> maxMappingPredicates() const;
	std::set<PredicateKey> minMappingPredicates() const;

	friend bool operator==(const P2PSystem&, const P2PSystem&) = default;
};

//! A set of ground peer facts in canonical order. Immutable once built.
class Interpretation {
public:
	Interpretation() = default;
	//! Sorts, deduplicates; every atom must be ground.
	static Interpretation of(std::vector<PeerAtom> atoms);

	bool contains(const PeerAtom& a) const;
	bool empty() const { return atoms_.empty(); }
	std::size_t size() const { return atoms_.size(); }
	const std::vector<PeerAtom>& atoms() const { return atoms_; }
	auto begin() const { return atoms_.begin(); }
	auto end() const { return atoms_.end(); }

	Interpretation unionWith(const Interpretation& other) const;
	Interpretation minus(const Interpretation& other) const;
	Interpretation intersect(const Interpretation& other) const;
	bool subsetOf(const Interpretation& other) const;
	bool properSubsetOf(const Interpretation& other) const { return subsetOf(other) && size() < other.size(); }

	friend std::strong_ordering operator<=>(const Interpretation&, const Interpretation&) = default;
	friend bool operator==(const Interpretation&, const Interpretation&) = default;

private:
	std::vector<PeerAtom> atoms_;
};

//! A deduplicated, canonically sorted list of interpretations.
class ModelSet {
public:
	ModelSet() = default;
	static ModelSet of(std::vector<Interpretation> models);

	bool contains(const Interpretation& m) const;
	bool empty() const { return models_.empty(); }
	std::size_t size() const { return models_.size(); }
	const std::vector<Interpretation>& models() const { return models_; }
	auto begin() const { return models_.begin(); }
	auto end() const { return models_.end(); }

	friend bool operator==(const ModelSet&, const ModelSet&) = default;

private:
	std::vector<Interpretation> models_;
};

enum class Role : unsigned char { D, LP, MP, MPmax, MPmin };

//! Facts of M whose predicate has the requested role in sys.
//! Unknown predicates raise RoleError.
Interpretation project(const Interpretation& m, Role role, const P2PSystem& sys);

//! A rule produced by one of the program rewritings: zero or more head atoms
//! (zero = constraint), optionally an exclusive-disjunction pair, plus body.
//! Not part of the surface syntax.
struct GenRule {
	std::vector<PeerAtom> heads;
	bool exclusive = false; // heads form an exclusive disjunction (exactly two)
	std::vector<Literal> body;
	std::vector<BuiltinAtom> builtins;
	friend bool operator==(const GenRule&, const GenRule&) = default;
};

// Canonical text forms: "i:p(t1,...,tk)" for atoms, "{a, b, c}" for
// interpretations (atoms in canonical order).
std::string to_string(const Term& t);
std::string to_string(const PeerAtom& a);
std::string to_string(const Literal& l);
std::string to_string(const BuiltinAtom& b);
std::string to_string(const Interpretation& m);
std::string to_string(BuiltinOp op);

// Internal predicate-name suffixes used by the program rewritings. The
// display_* functions render them back as p', p^t and p^v.
inline constexpr const char* kPrimedSuffix = "__not";
inline constexpr const char* kTestingSuffix = "__t";
inline constexpr const char* kViolatingSuffix = "__v";

bool has_suffix(const std::string& name, const char* suffix);
std::string display_atom(const PeerAtom& a);
std::string display_gen_rule(const GenRule& r);

} // namespace p2pdl

#endif

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
#include <p2pdl/gen.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace p2pdl {

namespace {

PeerAtom atom(int peer, std::string pred, std::vector<Term> args = {}) {
	return {peer, std::move(pred), std::move(args)};
}

Term id(const std::string& s) { return Term::ident(s); }
Term var(const std::string& s) { return Term::var(s); }

PeerRule rule(PeerAtom head, std::vector<Literal> body) {
	PeerRule r;
	r.kind = RuleKind::Standard;
	r.head = std::move(head);
	r.body = std::move(body);
	return r;
}

PeerRule constraint(std::vector<Literal> body, std::vector<BuiltinAtom> builtins = {}) {
	PeerRule r;
	r.kind = RuleKind::Constraint;
	r.body = std::move(body);
	r.builtins = std::move(builtins);
	return r;
}

} // namespace

P2PSystem encode_sat(const CnfFormula& f) {
	if (f.num_vars < 0) throw Error("encode_sat: negative variable count");
	for (const auto& c : f.clauses) {
		if (c.empty()) throw Error("encode_sat: clauses must be non-empty");
		for (int lit : c) {
			if (lit == 0 || std::abs(lit) > f.num_vars) throw Error("encode_sat: literal out of range");
		}
	}
	auto varName = [](int i) { return "x" + std::to_string(i); };
	auto clauseName = [](std::size_t j) { return "c" + std::to_string(j + 1); };

	Peer p1;
	p1.id = 1;
	for (int i = 1; i <= f.num_vars; ++i) p1.database.push_back(atom(1, "variable", {id(varName(i))}));
	p1.database.push_back(atom(1, "truthValue", {id("true")}));
	p1.database.push_back(atom(1, "truthValue", {id("false")}));

	Peer p2;
	p2.id = 2;
	for (int i = 1; i <= f.num_vars; ++i) p2.database.push_back(atom(2, "variable", {id(varName(i))}));
	for (std::size_t j = 0; j < f.clauses.size(); ++j) {
		for (int lit : f.clauses[j]) {
			const char* pred = lit > 0 ? "positive" : "negated";
			p2.database.push_back(atom(2, pred, {id(varName(std::abs(lit))), id(clauseName(j))}));
		}
	}

	PeerRule assign;
	assign.kind = RuleKind::MaxMapping;
	assign.head = atom(2, "assign", {var("X"), var("V")});
	assign.body = {{true, atom(1, "variable", {var("X")})}, {true, atom(1, "truthValue", {var("V")})}};
	p2.mapping_rules.push_back(std::move(assign));

	p2.standard_rules.push_back(rule(atom(2, "clause", {var("C")}), {{true, atom(2, "positive", {var("X"), var("C")})}}));
	p2.standard_rules.push_back(rule(atom(2, "clause", {var("C")}), {{true, atom(2, "negated", {var("X"), var("C")})}}));
	p2.standard_rules.push_back(rule(atom(2, "holds", {var("C")}),
	                                 {{true, atom(2, "positive", {var("X"), var("C")})}, {true, atom(2, "assign", {var("X"), id("true")})}}));
	p2.standard_rules.push_back(rule(atom(2, "holds", {var("C")}),
	                                 {{true, atom(2, "negated", {var("X"), var("C")})}, {true, atom(2, "assign", {var("X"), id("false")})}}));
	p2.standard_rules.push_back(rule(atom(2, "assignment"), {{true, atom(2, "assign", {var("X"), var("V")})}}));

	p2.constraints.push_back(constraint({{true, atom(2, "assign", {var("X"), id("true")})}, {true, atom(2, "assign", {var("X"), id("false")})}}));
	p2.constraints.push_back(constraint({{true, atom(2, "clause", {var("C")})}, {false, atom(2, "holds", {var("C")})}, {true, atom(2, "assignment")}}));
	p2.constraints.push_back(constraint({{true, atom(2, "variable", {var("X")})},
	                                     {false, atom(2, "assign", {var("X"), id("true")})},
	                                     {false, atom(2, "assign", {var("X"), id("false")})},
	                                     {true, atom(2, "assignment")}}));

	std::sort(p1.database.begin(), p1.database.end());
	std::sort(p2.database.begin(), p2.database.end());
	P2PSystem sys;
	sys.peers = {std::move(p1), std::move(p2)};
	return sys;
}

P2PSystem encode_three_col(const std::vector<std::string>& nodes,
                           const std::vector<std::string>& colors,
                           const std::vector<std::pair<std::string, std::string>>& edges) {
	if (colors.empty()) throw Error("encode_three_col: at least one color is required");
	Peer p1;
	p1.id = 1;
	for (const auto& n : nodes) p1.database.push_back(atom(1, "node", {id(n)}));
	for (const auto& c : colors) p1.database.push_back(atom(1, "color", {id(c)}));

	Peer p2;
	p2.id = 2;
	for (const auto& [a, b] : edges) p2.database.push_back(atom(2, "edge", {id(a), id(b)}));

	PeerRule colored;
	colored.kind = RuleKind::MaxMapping;
	colored.head = atom(2, "colored", {var("X"), var("C")});
	colored.body = {{true, atom(1, "node", {var("X")})}, {true, atom(1, "color", {var("C")})}};
	p2.mapping_rules.push_back(std::move(colored));

	p2.constraints.push_back(constraint({{true, atom(2, "colored", {var("X"), var("C1")})}, {true, atom(2, "colored", {var("X"), var("C2")})}},
	                                    {{BuiltinOp::Ne, var("C1"), var("C2")}}));
	p2.constraints.push_back(constraint({{true, atom(2, "edge", {var("X"), var("Y")})},
	                                     {true, atom(2, "colored", {var("X"), var("C")})},
	                                     {true, atom(2, "colored", {var("Y"), var("C")})}}));

	std::sort(p1.database.begin(), p1.database.end());
	std::sort(p2.database.begin(), p2.database.end());
	P2PSystem sys;
	sys.peers = {std::move(p1), std::move(p2)};
	return sys;
}

CnfFormula parse_dimacs(std::string_view text) {
	CnfFormula f;
	std::istringstream in{std::string(text)};
	std::string token;
	bool headerSeen = false;
	std::vector<int> clause;
	while (in >> token) {
		if (token == "c") {
			std::string rest;
			std::getline(in, rest);
			continue;
		}
		if (token == "p") {
			std::string kind;
			int clauses = 0;
			if (!(in >> kind >> f.num_vars >> clauses) || kind != "cnf") {
				throw Error("parse_dimacs: malformed problem line");
			}
			headerSeen = true;
			continue;
		}
		int lit = 0;
		try {
			lit = std::stoi(token);
		} catch (const std::exception&) {
			throw Error("parse_dimacs: unexpected token '" + token + "'");
		}
		if (!headerSeen) throw Error("parse_dimacs: clause before the problem line");
		if (lit == 0) {
			if (clause.empty()) throw Error("parse_dimacs: empty clause");
			f.clauses.push_back(std::move(clause));
			clause.clear();
		} else {
			if (std::abs(lit) > f.num_vars) throw Error("parse_dimacs: literal out of range");
			clause.push_back(lit);
		}
	}
	if (!clause.empty()) throw Error("parse_dimacs: unterminated clause");
	if (!headerSeen) throw Error("parse_dimacs: missing problem line");
	return f;
}

} // namespace p2pdl

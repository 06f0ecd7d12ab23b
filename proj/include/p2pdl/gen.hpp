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
#ifndef P2PDL_GEN_HPP
#define P2PDL_GEN_HPP

#include <p2pdl/core.hpp>

namespace p2pdl {

struct CnfFormula {
	int num_vars = 0;
	// Signed 1-based variable indexes; clauses are non-empty.
	std::vector<std::vector<int>> clauses;
};

//! Two-peer encoding of SAT: peer 1 offers variables and truth values, peer
//! 2 holds the clause structure, an assign mapping rule, and the three
//! consistency constraints. The formula is satisfiable iff the no-import
//! model is not a max-min weak model of the encoding.
P2PSystem encode_sat(const CnfFormula& f);

//! Two-peer encoding of graph coloring: peer 1 offers nodes and colors,
//! peer 2 holds edges, a colored mapping rule, and the two constraints.
//! Each maximal weak model colors a maximal properly colorable subgraph.
P2PSystem encode_three_col(const std::vector<std::string>& nodes,
                           const std::vector<std::string>& colors,
                           const std::vector<std::pair<std::string, std::string>>& edges);

//! DIMACS CNF reader ("p cnf V C" header, clauses terminated by 0).
CnfFormula parse_dimacs(std::string_view text);

} // namespace p2pdl

#endif

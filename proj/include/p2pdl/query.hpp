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
#ifndef P2PDL_QUERY_HPP
#define P2PDL_QUERY_HPP

#include <p2pdl/totalrw.hpp>
#include <p2pdl/weak.hpp>

namespace p2pdl {

enum class Mode : unsigned char { Brave, Cautious };

enum class QuerySemantics : unsigned char { Fol, Weak, Max, Min, MaxMin, GMaxMin, Wf };

struct QueryResult {
	Mode mode = Mode::Brave;
	QuerySemantics semantics = QuerySemantics::MaxMin;
	Interpretation answers;    // ground atoms matching the query pattern
	int model_count = 0;
	// Three-valued detail, filled for the wf semantics only.
	Interpretation wf_true;
	Interpretation wf_undefined;
};

//! Model set of the chosen semantics (wf excluded; it is three-valued).
ModelSet models_for(const P2PSystem& sys, QuerySemantics sem, const EnumerateOptions& opts = {});

//! Does the ground atom match the (possibly non-ground) pattern? Variables
//! bind consistently across repeated occurrences.
bool matches_pattern(const PeerAtom& pattern, const PeerAtom& atom);

//! Brave: matching atoms in the union of the models; cautious: in their
//! intersection. Under wf, brave reads true or undefined, cautious reads
//! true, and the per-status breakdown is reported alongside.
QueryResult answer(const P2PSystem& sys, const PeerAtom& query, Mode mode, QuerySemantics sem,
                   const EnumerateOptions& opts = {});

std::string to_string(Mode m);
std::string to_string(QuerySemantics s);
std::optional<QuerySemantics> semantics_from_string(const std::string& name);

} // namespace p2pdl

#endif

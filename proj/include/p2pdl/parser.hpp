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
#ifndef P2PDL_PARSER_HPP
#define P2PDL_PARSER_HPP

#include <p2pdl/core.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace p2pdl {

// Surface syntax of a .p2p file:
//
//   system   := peerblock*
//   peerblock:= "peer" INT "{" item* "}"
//   item     := "fact" atom "."
//             | "rule" atom ":-" body "."
//             | "ic" ":-" body "."
//             | "maxmap" atom "<~" qbody "."
//             | "minmap" atom "<-" qbody "."
//   body     := lit ("," lit)*      lit   := ["not"] [INT ":"] atom | builtin
//   qbody    := qlit ("," qlit)*    qlit  := INT ":" atom | builtin
//   atom     := IDENT "(" term ("," term)* ")" | IDENT
//   builtin  := term ("<"|">"|"<="|">="|"="|"!=") term
//
// Unqualified atoms carry the enclosing block's peer id. Comments run from
// '%' to end of line.

struct SourceSpan {
	std::string file;
	int line = 1;
	int column = 1;
};

enum class ParseErrorKind : unsigned char { Lexical, Syntactic, Semantic };

struct ParseError {
	SourceSpan span;
	ParseErrorKind kind = ParseErrorKind::Syntactic;
	std::string message;
};

//! "file:line:col: kind: message"
std::string to_string(const ParseError& e);

struct ParseResult {
	std::optional<P2PSystem> system;
	std::vector<ParseError> errors;
	bool ok() const { return system.has_value() && errors.empty(); }
};

//! Parses and validates a whole system. All diagnostics of one pass are
//! collected; `system` is set only when there are no errors.
ParseResult parse_system(std::string_view text, const std::string& file = "<input>");

struct QueryParse {
	std::optional<PeerAtom> atom;
	std::vector<ParseError> errors;
	bool ok() const { return atom.has_value() && errors.empty(); }
};

//! Parses "i:p(t1,...,tk)"; variables are allowed (pattern queries).
QueryParse parse_query(std::string_view text, const std::string& file = "<query>");

//! Renders sys in the surface grammar; parse_system(print_system(sys))
//! is structurally equal to sys.
std::string print_system(const P2PSystem& sys);

//! One grammar item line for a rule ("fact ...", "rule ...", "ic ...",
//! "maxmap ...", "minmap ..."), as printed inside its peer block.
std::string print_rule(const PeerRule& rule, int block_peer);

} // namespace p2pdl

#endif

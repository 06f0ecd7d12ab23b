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
#ifndef P2PDL_WEAK_HPP
#define P2PDL_WEAK_HPP

#include <p2pdl/engine.hpp>
#include <p2pdl/ground.hpp>

namespace p2pdl {

enum class Selection : unsigned char { None, Max, Min, MaxMin, GMaxMin };

struct WeakModelSet {
	ModelSet all;      // WM(PS)
	ModelSet selected;
	Selection selection = Selection::None;
};

struct EnumerateOptions {
	std::size_t cap = 24; // hard limit on candidate mapping atoms
	int threads = 1;
};

//! St(PS^M): the ground system after (i) dropping rules whose body holds a
//! negative literal 'not A' with A in M (the standard reduct of Section 2;
//! the weak-model definition's opposite wording breaks the paper's own
//! examples), (ii) stripping remaining negative literals, (iii) dropping
//! mapping rules whose head is not in M, (iv) turning surviving mapping
//! rules into standard rules. Headless rules of the result are the
//! (now positive) constraint part.
NormalProgram reduct_full(const GroundSystem& gs, const Interpretation& m);

//! {M} = MM(St(PS^M))?
bool is_weak_model(const GroundSystem& gs, const Interpretation& m);

//! The negation-free-LP shortcut: only mapping rules with head outside M
//! are removed; constraints keep their negative literals and are checked
//! against M directly. Agrees with is_weak_model on its domain.
bool is_weak_model_pos_lp(const GroundSystem& gs, const Interpretation& m);

//! WM(PS), by enumerating subsets of the candidate mapping atoms.
ModelSet enumerate_weak_models(const GroundSystem& gs, const EnumerateOptions& opts = {});

//! Weak models whose imported mapping atoms are set-inclusion maximal.
//! The system must be maximal (no minimal mapping rules).
ModelSet select_max(const ModelSet& wm, const P2PSystem& sys);

//! Dual selection for minimal systems.
ModelSet select_min(const ModelSet& wm, const P2PSystem& sys);

//! Non-dominated models under the max-min preference: more maximal imports
//! first, fewer minimal imports as the tie-breaker.
ModelSet select_maxmin(const ModelSet& wm, const P2PSystem& sys);

} // namespace p2pdl

#endif

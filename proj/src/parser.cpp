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
#include <p2pdl/parser.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace p2pdl {

namespace {

enum class Tok : unsigned char {
	KwPeer, KwFact, KwRule, KwIc, KwMaxmap, KwMinmap, KwNot,
	Ident, Var, Int, Str,
	LBrace, RBrace, LParen, RParen, Comma, Dot, Colon, ColonDash,
	MaxArrow, MinArrow, Lt, Gt, Le, Ge, Eq, Ne,
	End, Invalid
};

struct Token {
	Tok kind = Tok::End;
	std::string text;
	std::int64_t num = 0;
	int line = 1, col = 1;
};

const char* tokName(Tok t) {
	switch (t) {
		case Tok::KwPeer: return "'peer'";
		case Tok::KwFact: return "'fact'";
		case Tok::KwRule: return "'rule'";
		case Tok::KwIc: return "'ic'";
		case Tok::KwMaxmap: return "'maxmap'";
		case Tok::KwMinmap: return "'minmap'";
		case Tok::KwNot: return "'not'";
		case Tok::Ident: return "identifier";
		case Tok::Var: return "variable";
		case Tok::Int: return "integer";
		case Tok::Str: return "string";
		case Tok::LBrace: return "'{'";
		case Tok::RBrace: return "'}'";
		case Tok::LParen: return "'('";
		case Tok::RParen: return "')'";
		case Tok::Comma: return "','";
		case Tok::Dot: return "'.'";
		case Tok::Colon: return "':'";
		case Tok::ColonDash: return "':-'";
		case Tok::MaxArrow: return "'<~'";
		case Tok::MinArrow: return "'<-'";
		case Tok::Lt: return "'<'";
		case Tok::Gt: return "'>'";
		case Tok::Le: return "'<='";
		case Tok::Ge: return "'>='";
		case Tok::Eq: return "'='";
		case Tok::Ne: return "'!='";
		case Tok::End: return "end of input";
		case Tok::Invalid: return "invalid token";
	}
	return "?";
}

class Lexer {
public:
	Lexer(std::string_view src, std::string file, std::vector<ParseError>& errs)
		: src_(src), file_(std::move(file)), errs_(errs) {}

	std::vector<Token> run() {
		std::vector<Token> out;
		for (;;) {
			skipWs();
			Token t = next();
			out.push_back(t);
			if (t.kind == Tok::End) break;
		}
		return out;
	}

private:
	void skipWs() {
		while (pos_ < src_.size()) {
			char c = src_[pos_];
			if (c == '%') {
				while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
			} else if (c == '\n') {
				++pos_;
				++line_;
				col_ = 1;
			} else if (std::isspace(static_cast<unsigned char>(c))) {
				++pos_;
				++col_;
			} else {
				break;
			}
		}
	}

	char cur() const { return src_[pos_]; }
	bool more() const { return pos_ < src_.size(); }
	void bump() { ++pos_; ++col_; }

	Token make(Tok k, std::string text = {}) {
		Token t;
		t.kind = k;
		t.text = std::move(text);
		t.line = startLine_;
		t.col = startCol_;
		return t;
	}

	Token next() {
		startLine_ = line_;
		startCol_ = col_;
		if (!more()) return make(Tok::End);
		char c = cur();
		if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
			std::string digits;
			if (c == '-') { digits.push_back('-'); bump(); }
			while (more() && std::isdigit(static_cast<unsigned char>(cur()))) { digits.push_back(cur()); bump(); }
			Token t = make(Tok::Int, digits);
			t.num = std::stoll(digits);
			return t;
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			std::string word;
			while (more() && (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_')) { word.push_back(cur()); bump(); }
			if (word == "peer") return make(Tok::KwPeer);
			if (word == "fact") return make(Tok::KwFact);
			if (word == "rule") return make(Tok::KwRule);
			if (word == "ic") return make(Tok::KwIc);
			if (word == "maxmap") return make(Tok::KwMaxmap);
			if (word == "minmap") return make(Tok::KwMinmap);
			if (word == "not") return make(Tok::KwNot);
			bool isVar = std::isupper(static_cast<unsigned char>(word[0]));
			return make(isVar ? Tok::Var : Tok::Ident, word);
		}
		if (c == '"') {
			bump();
			std::string text;
			bool closed = false;
			while (more()) {
				char d = cur();
				if (d == '"') { bump(); closed = true; break; }
				if (d == '\\' && pos_ + 1 < src_.size()) { bump(); text.push_back(cur()); bump(); continue; }
				if (d == '\n') break;
				text.push_back(d);
				bump();
			}
			if (!closed) {
				errs_.push_back({{file_, startLine_, startCol_}, ParseErrorKind::Lexical, "unterminated string literal"});
				return make(Tok::Invalid);
			}
			return make(Tok::Str, text);
		}
		bump();
		switch (c) {
			case '{': return make(Tok::LBrace);
			case '}': return make(Tok::RBrace);
			case '(': return make(Tok::LParen);
			case ')': return make(Tok::RParen);
			case ',': return make(Tok::Comma);
			case '.': return make(Tok::Dot);
			case ':':
				if (more() && cur() == '-') { bump(); return make(Tok::ColonDash); }
				return make(Tok::Colon);
			case '<':
				if (more() && cur() == '~') { bump(); return make(Tok::MaxArrow); }
				if (more() && cur() == '-') { bump(); return make(Tok::MinArrow); }
				if (more() && cur() == '=') { bump(); return make(Tok::Le); }
				return make(Tok::Lt);
			case '>':
				if (more() && cur() == '=') { bump(); return make(Tok::Ge); }
				return make(Tok::Gt);
			case '=': return make(Tok::Eq);
			case '!':
				if (more() && cur() == '=') { bump(); return make(Tok::Ne); }
				break;
			default: break;
		}
		errs_.push_back({{file_, startLine_, startCol_}, ParseErrorKind::Lexical, std::string("unexpected character '") + c + "'"});
		return make(Tok::Invalid);
	}

	std::string_view src_;
	std::string file_;
	std::vector<ParseError>& errs_;
	std::size_t pos_ = 0;
	int line_ = 1, col_ = 1;
	int startLine_ = 1, startCol_ = 1;
};

// A body literal as written: optionally negated, optionally peer-qualified.
struct RawLiteral {
	bool positive = true;
	std::optional<int> peer; // explicit qualifier, if any
	PeerAtom atom;           // atom.peer filled in after qualification
	int line = 1, col = 1;
};

struct RawItem {
	RuleKind kind = RuleKind::Standard;
	bool isFact = false;
	std::optional<PeerAtom> head; // peer filled with block id
	std::vector<RawLiteral> body;
	std::vector<BuiltinAtom> builtins;
	int line = 1, col = 1;
};

struct RawBlock {
	int peerId = 0;
	std::vector<RawItem> items;
	int line = 1, col = 1;
};

class Parser {
public:
	Parser(std::vector<Token> toks, std::string file, std::vector<ParseError>& errs)
		: toks_(std::move(toks)), file_(std::move(file)), errs_(errs) {}

	std::vector<RawBlock> parseSystem() {
		std::vector<RawBlock> blocks;
		while (peek().kind != Tok::End) {
			if (peek().kind != Tok::KwPeer) {
				err(peek(), std::string("expected 'peer', got ") + tokName(peek().kind));
				syncToPeer();
				continue;
			}
			blocks.push_back(parseBlock());
		}
		return blocks;
	}

	std::optional<PeerAtom> parseQueryAtom() {
		if (peek().kind != Tok::Int) {
			err(peek(), "expected peer id before ':' (queries are of the form i:p(...))");
			return std::nullopt;
		}
		int id = static_cast<int>(peek().num);
		advance();
		if (!expect(Tok::Colon, "expected ':' after peer id")) return std::nullopt;
		auto a = parseAtom();
		if (!a) return std::nullopt;
		a->peer = id;
		if (peek().kind != Tok::End) {
			err(peek(), std::string("unexpected trailing input: ") + tokName(peek().kind));
			return std::nullopt;
		}
		return a;
	}

private:
	const Token& peek(std::size_t k = 0) const {
		std::size_t i = pos_ + k;
		return i < toks_.size() ? toks_[i] : toks_.back();
	}
	void advance() { if (pos_ + 1 < toks_.size()) ++pos_; }

	void err(const Token& at, std::string msg, ParseErrorKind kind = ParseErrorKind::Syntactic) {
		errs_.push_back({{file_, at.line, at.col}, kind, std::move(msg)});
	}

	bool expect(Tok k, const std::string& msg) {
		if (peek().kind == k) { advance(); return true; }
		err(peek(), msg + ", got " + tokName(peek().kind));
		return false;
	}

	void syncToPeer() {
		while (peek().kind != Tok::End && peek().kind != Tok::KwPeer) advance();
	}
	// After a malformed item, skip to the end of it (or the end of the block).
	void syncToDot() {
		while (peek().kind != Tok::End && peek().kind != Tok::Dot && peek().kind != Tok::RBrace) advance();
		if (peek().kind == Tok::Dot) advance();
	}

	RawBlock parseBlock() {
		RawBlock block;
		block.line = peek().line;
		block.col = peek().col;
		advance(); // 'peer'
		if (peek().kind == Tok::Int) {
			block.peerId = static_cast<int>(peek().num);
			advance();
		} else {
			err(peek(), std::string("expected peer id, got ") + tokName(peek().kind));
		}
		if (!expect(Tok::LBrace, "expected '{' after peer id")) {
			syncToPeer();
			return block;
		}
		while (peek().kind != Tok::RBrace && peek().kind != Tok::End) {
			if (peek().kind == Tok::KwPeer) {
				err(peek(), "missing '}' before next peer block");
				return block;
			}
			auto item = parseItem();
			if (item) block.items.push_back(std::move(*item));
		}
		expect(Tok::RBrace, "expected '}' closing peer block");
		return block;
	}

	std::optional<RawItem> parseItem() {
		RawItem item;
		item.line = peek().line;
		item.col = peek().col;
		switch (peek().kind) {
			case Tok::KwFact: {
				advance();
				item.kind = RuleKind::Standard;
				item.isFact = true;
				auto a = parseAtom();
				if (!a) { syncToDot(); return std::nullopt; }
				item.head = std::move(*a);
				if (!expect(Tok::Dot, "expected '.' after fact")) syncToDot();
				return item;
			}
			case Tok::KwRule: {
				advance();
				item.kind = RuleKind::Standard;
				auto a = parseAtom();
				if (!a) { syncToDot(); return std::nullopt; }
				item.head = std::move(*a);
				if (!expect(Tok::ColonDash, "expected ':-' after rule head")) { syncToDot(); return std::nullopt; }
				if (!parseBody(item)) { syncToDot(); return std::nullopt; }
				if (!expect(Tok::Dot, "expected '.' after rule body")) syncToDot();
				return item;
			}
			case Tok::KwIc: {
				advance();
				item.kind = RuleKind::Constraint;
				if (!expect(Tok::ColonDash, "expected ':-' after 'ic'")) { syncToDot(); return std::nullopt; }
				if (!parseBody(item)) { syncToDot(); return std::nullopt; }
				if (!expect(Tok::Dot, "expected '.' after constraint body")) syncToDot();
				return item;
			}
			case Tok::KwMaxmap:
			case Tok::KwMinmap: {
				bool isMax = peek().kind == Tok::KwMaxmap;
				advance();
				item.kind = isMax ? RuleKind::MaxMapping : RuleKind::MinMapping;
				auto a = parseAtom();
				if (!a) { syncToDot(); return std::nullopt; }
				item.head = std::move(*a);
				Tok arrow = isMax ? Tok::MaxArrow : Tok::MinArrow;
				if (!expect(arrow, isMax ? "expected '<~' after maxmap head" : "expected '<-' after minmap head")) {
					syncToDot();
					return std::nullopt;
				}
				if (!parseBody(item, /*requireQualified=*/true)) { syncToDot(); return std::nullopt; }
				if (!expect(Tok::Dot, "expected '.' after mapping body")) syncToDot();
				return item;
			}
			default:
				err(peek(), std::string("expected 'fact', 'rule', 'ic', 'maxmap' or 'minmap', got ") + tokName(peek().kind));
				syncToDot();
				return std::nullopt;
		}
	}

	bool parseBody(RawItem& item, bool requireQualified = false) {
		for (;;) {
			if (!parseBodyElement(item, requireQualified)) return false;
			if (peek().kind == Tok::Comma) { advance(); continue; }
			return true;
		}
	}

	static bool startsTermOnly(Tok t) { return t == Tok::Var || t == Tok::Str; }

	bool parseBodyElement(RawItem& item, bool requireQualified) {
		const Token& t = peek();
		// A builtin starts with a term; disambiguate by looking at what follows.
		if (startsTermOnly(t.kind) || (t.kind == Tok::Int && peek(1).kind != Tok::Colon) ||
		    (t.kind == Tok::Ident && isCmp(peek(1).kind))) {
			return parseBuiltin(item);
		}
		RawLiteral lit;
		lit.line = t.line;
		lit.col = t.col;
		if (peek().kind == Tok::KwNot) {
			lit.positive = false;
			advance();
		}
		if (peek().kind == Tok::Int && peek(1).kind == Tok::Colon) {
			lit.peer = static_cast<int>(peek().num);
			advance();
			advance();
		} else if (requireQualified) {
			err(peek(), "mapping-rule body atoms must be peer-qualified (j:atom)");
			return false;
		}
		auto a = parseAtom();
		if (!a) return false;
		lit.atom = std::move(*a);
		item.body.push_back(std::move(lit));
		return true;
	}

	static bool isCmp(Tok t) {
		return t == Tok::Lt || t == Tok::Gt || t == Tok::Le || t == Tok::Ge || t == Tok::Eq || t == Tok::Ne;
	}

	bool parseBuiltin(RawItem& item) {
		auto lhs = parseTerm();
		if (!lhs) return false;
		BuiltinOp op;
		switch (peek().kind) {
			case Tok::Lt: op = BuiltinOp::Lt; break;
			case Tok::Gt: op = BuiltinOp::Gt; break;
			case Tok::Le: op = BuiltinOp::Le; break;
			case Tok::Ge: op = BuiltinOp::Ge; break;
			case Tok::Eq: op = BuiltinOp::Eq; break;
			case Tok::Ne: op = BuiltinOp::Ne; break;
			default:
				err(peek(), std::string("expected comparison operator, got ") + tokName(peek().kind));
				return false;
		}
		advance();
		auto rhs = parseTerm();
		if (!rhs) return false;
		item.builtins.push_back({op, std::move(*lhs), std::move(*rhs)});
		return true;
	}

	std::optional<PeerAtom> parseAtom() {
		if (peek().kind != Tok::Ident) {
			err(peek(), std::string("expected predicate name, got ") + tokName(peek().kind));
			return std::nullopt;
		}
		PeerAtom a;
		a.predicate = peek().text;
		advance();
		if (peek().kind == Tok::LParen) {
			advance();
			for (;;) {
				auto t = parseTerm();
				if (!t) return std::nullopt;
				a.args.push_back(std::move(*t));
				if (peek().kind == Tok::Comma) { advance(); continue; }
				break;
			}
			if (!expect(Tok::RParen, "expected ')' closing argument list")) return std::nullopt;
		}
		return a;
	}

	std::optional<Term> parseTerm() {
		const Token& t = peek();
		switch (t.kind) {
			case Tok::Int: { Term out = Term::integer(t.num); advance(); return out; }
			case Tok::Ident: { Term out = Term::ident(t.text); advance(); return out; }
			case Tok::Str: { Term out = Term::str(t.text); advance(); return out; }
			case Tok::Var: { Term out = Term::var(t.text); advance(); return out; }
			default:
				err(t, std::string("expected term, got ") + tokName(t.kind));
				return std::nullopt;
		}
	}

	std::vector<Token> toks_;
	std::string file_;
	std::vector<ParseError>& errs_;
	std::size_t pos_ = 0;
};

class Validator {
public:
	Validator(const std::vector<RawBlock>& blocks, std::string file, std::vector<ParseError>& errs)
		: blocks_(blocks), file_(std::move(file)), errs_(errs) {}

	std::optional<P2PSystem> run() {
		checkPeerIds();
		if (!errs_.empty() && declared_.empty()) return std::nullopt;
		P2PSystem sys;
		for (const auto& block : blocks_) {
			Peer peer;
			peer.id = block.peerId;
			for (const auto& item : block.items) buildItem(block, item, peer);
			sys.peers.push_back(std::move(peer));
		}
		std::sort(sys.peers.begin(), sys.peers.end(), [](const Peer& a, const Peer& b) { return a.id < b.id; });
		for (auto& peer : sys.peers) {
			std::sort(peer.database.begin(), peer.database.end());
			peer.database.erase(std::unique(peer.database.begin(), peer.database.end()), peer.database.end());
		}
		checkRoles(sys);
		checkArities(sys);
		if (!errs_.empty()) return std::nullopt;
		return sys;
	}

private:
	void semErr(int line, int col, std::string msg) {
		errs_.push_back({{file_, line, col}, ParseErrorKind::Semantic, std::move(msg)});
	}

	void checkPeerIds() {
		std::set<int> seen;
		int maxId = 0;
		for (const auto& b : blocks_) {
			if (b.peerId < 1) {
				semErr(b.line, b.col, "peer id must be a positive integer");
				continue;
			}
			if (!seen.insert(b.peerId).second) {
				semErr(b.line, b.col, "duplicate peer block for peer " + std::to_string(b.peerId));
			}
			maxId = std::max(maxId, b.peerId);
		}
		if (!seen.empty() && maxId != static_cast<int>(seen.size())) {
			semErr(1, 1, "peer ids must be contiguous 1.." + std::to_string(seen.size()));
		}
		declared_ = std::move(seen);
	}

	void buildItem(const RawBlock& block, const RawItem& item, Peer& peer) {
		PeerRule rule;
		rule.kind = item.kind;
		rule.builtins = item.builtins;
		if (item.head) {
			PeerAtom h = *item.head;
			h.peer = block.peerId;
			rule.head = std::move(h);
		}
		std::optional<int> bodyPeer;
		for (const auto& raw : item.body) {
			Literal lit;
			lit.positive = raw.positive;
			lit.atom = raw.atom;
			int p = raw.peer.value_or(block.peerId);
			lit.atom.peer = p;
			if (raw.peer && !declared_.count(*raw.peer)) {
				semErr(raw.line, raw.col, "source peer " + std::to_string(*raw.peer) + " out of range");
			}
			switch (item.kind) {
				case RuleKind::Standard:
					if (p != block.peerId) {
						semErr(raw.line, raw.col, "head/body peer mismatch in a standard rule (body atom of peer " + std::to_string(p) + " in peer " + std::to_string(block.peerId) + ")");
					}
					break;
				case RuleKind::Constraint:
					if (p != block.peerId) {
						semErr(raw.line, raw.col, "constraint body atoms must all belong to peer " + std::to_string(block.peerId));
					}
					break;
				case RuleKind::MaxMapping:
				case RuleKind::MinMapping:
					if (!lit.positive) {
						semErr(raw.line, raw.col, "mapping rule with negative body literal");
					}
					if (!bodyPeer) bodyPeer = p;
					else if (*bodyPeer != p) {
						semErr(raw.line, raw.col, "mapping-rule body atoms must share one source peer");
					}
					break;
			}
			rule.body.push_back(std::move(lit));
		}
		if (rule.isMapping()) {
			if (bodyPeer && *bodyPeer == block.peerId) {
				semErr(item.line, item.col, "mapping-rule source peer must differ from its target peer");
			}
			if (rule.body.empty()) {
				semErr(item.line, item.col, "mapping rule needs at least one body atom");
			}
		}
		checkSafety(item, rule);
		if (item.isFact) {
			if (!rule.head->ground()) {
				semErr(item.line, item.col, "facts must be ground");
			} else {
				peer.database.push_back(*rule.head);
			}
			return;
		}
		switch (item.kind) {
			case RuleKind::Standard: peer.standard_rules.push_back(std::move(rule)); break;
			case RuleKind::Constraint: peer.constraints.push_back(std::move(rule)); break;
			default: peer.mapping_rules.push_back(std::move(rule)); break;
		}
	}

	void checkSafety(const RawItem& item, const PeerRule& rule) {
		if (item.isFact) return;
		std::set<std::string> positives;
		for (const auto& l : rule.body) {
			if (!l.positive) continue;
			for (const auto& t : l.atom.args) {
				if (t.isVariable()) positives.insert(t.text());
			}
		}
		auto require = [&](const Term& t, const char* where) {
			if (t.isVariable() && !positives.count(t.text())) {
				semErr(item.line, item.col, "unsafe rule: variable " + t.text() + " occurs " + where + " but in no positive body literal");
			}
		};
		if (rule.head) {
			for (const auto& t : rule.head->args) require(t, "in the head");
		}
		for (const auto& l : rule.body) {
			if (l.positive) continue;
			for (const auto& t : l.atom.args) require(t, "in a negated literal");
		}
		for (const auto& b : rule.builtins) {
			require(b.lhs, "in a builtin");
			require(b.rhs, "in a builtin");
		}
	}

	void checkRoles(const P2PSystem& sys) {
		std::map<PredicateKey, std::pair<PredicateRole, std::string>> roles;
		auto claim = [&](const PeerAtom& a, PredicateRole r, const char* how) {
			auto [it, inserted] = roles.try_emplace(PredicateKey{a.peer, a.predicate}, std::pair{r, std::string(how)});
			if (!inserted && it->second.first != r) {
				semErr(1, 1, "predicate " + std::to_string(a.peer) + ":" + a.predicate + " used with two roles (" + it->second.second + " and " + how + ")");
			}
		};
		for (const auto& p : sys.peers) {
			for (const auto& f : p.database) claim(f, PredicateRole::Base, "base");
			for (const auto& r : p.standard_rules) claim(*r.head, PredicateRole::Derived, "derived");
			for (const auto& r : p.mapping_rules) claim(*r.head, PredicateRole::Mapping, "mapping");
		}
	}

	void checkArities(const P2PSystem& sys) {
		std::map<PredicateKey, std::size_t> arity;
		auto claim = [&](const PeerAtom& a) {
			auto [it, inserted] = arity.try_emplace(PredicateKey{a.peer, a.predicate}, a.args.size());
			if (!inserted && it->second != a.args.size()) {
				semErr(1, 1, "arity clash for predicate " + std::to_string(a.peer) + ":" + a.predicate + " (" + std::to_string(it->second) + " vs " + std::to_string(a.args.size()) + ")");
			}
		};
		for (const auto& p : sys.peers) {
			for (const auto& f : p.database) claim(f);
			auto claimRule = [&](const PeerRule& r) {
				if (r.head) claim(*r.head);
				for (const auto& l : r.body) claim(l.atom);
			};
			for (const auto& r : p.standard_rules) claimRule(r);
			for (const auto& r : p.mapping_rules) claimRule(r);
			for (const auto& r : p.constraints) claimRule(r);
		}
	}

	const std::vector<RawBlock>& blocks_;
	std::string file_;
	std::vector<ParseError>& errs_;
	std::set<int> declared_;
};

std::string termText(const Term& t) { return to_string(t); }

void printAtom(std::ostream& os, const PeerAtom& a, int blockPeer, bool forceQualified) {
	if (forceQualified || a.peer != blockPeer) os << a.peer << ':';
	os << a.predicate;
	if (!a.args.empty()) {
		os << '(';
		for (std::size_t i = 0; i < a.args.size(); ++i) {
			if (i) os << ',';
			os << termText(a.args[i]);
		}
		os << ')';
	}
}

void printBody(std::ostream& os, const PeerRule& r, int blockPeer, bool qualified) {
	bool first = true;
	for (const auto& l : r.body) {
		if (!first) os << ", ";
		first = false;
		if (!l.positive) os << "not ";
		printAtom(os, l.atom, blockPeer, qualified);
	}
	for (const auto& b : r.builtins) {
		if (!first) os << ", ";
		first = false;
		os << termText(b.lhs) << ' ' << to_string(b.op) << ' ' << termText(b.rhs);
	}
}

} // namespace

std::string to_string(const ParseError& e) {
	const char* kind = e.kind == ParseErrorKind::Lexical ? "lexical" : e.kind == ParseErrorKind::Syntactic ? "syntactic" : "semantic";
	std::ostringstream os;
	os << e.span.file << ':' << e.span.line << ':' << e.span.column << ": " << kind << ": " << e.message;
	return os.str();
}

ParseResult parse_system(std::string_view text, const std::string& file) {
	ParseResult result;
	Lexer lexer(text, file, result.errors);
	auto tokens = lexer.run();
	Parser parser(std::move(tokens), file, result.errors);
	auto blocks = parser.parseSystem();
	Validator validator(blocks, file, result.errors);
	auto sys = validator.run();
	if (result.errors.empty()) result.system = std::move(sys);
	return result;
}

QueryParse parse_query(std::string_view text, const std::string& file) {
	QueryParse result;
	Lexer lexer(text, file, result.errors);
	auto tokens = lexer.run();
	Parser parser(std::move(tokens), file, result.errors);
	auto atom = parser.parseQueryAtom();
	if (result.errors.empty()) result.atom = std::move(atom);
	return result;
}

std::string print_rule(const PeerRule& rule, int block_peer) {
	std::ostringstream os;
	switch (rule.kind) {
		case RuleKind::Standard:
			os << "rule ";
			printAtom(os, *rule.head, block_peer, false);
			os << " :- ";
			printBody(os, rule, block_peer, false);
			break;
		case RuleKind::Constraint:
			os << "ic :- ";
			printBody(os, rule, block_peer, false);
			break;
		case RuleKind::MaxMapping:
			os << "maxmap ";
			printAtom(os, *rule.head, block_peer, false);
			os << " <~ ";
			printBody(os, rule, block_peer, true);
			break;
		case RuleKind::MinMapping:
			os << "minmap ";
			printAtom(os, *rule.head, block_peer, false);
			os << " <- ";
			printBody(os, rule, block_peer, true);
			break;
	}
	os << '.';
	return os.str();
}

std::string print_system(const P2PSystem& sys) {
	std::ostringstream os;
	bool firstBlock = true;
	for (const auto& peer : sys.peers) {
		if (!firstBlock) os << '\n';
		firstBlock = false;
		os << "peer " << peer.id << " {\n";
		for (const auto& f : peer.database) {
			os << "  fact ";
			printAtom(os, f, peer.id, false);
			os << ".\n";
		}
		for (const auto& r : peer.standard_rules) os << "  " << print_rule(r, peer.id) << '\n';
		for (const auto& r : peer.mapping_rules) os << "  " << print_rule(r, peer.id) << '\n';
		for (const auto& r : peer.constraints) os << "  " << print_rule(r, peer.id) << '\n';
		os << "}\n";
	}
	return os.str();
}

} // namespace p2pdl

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
#include <p2pdl/ground.hpp>
#include <p2pdl/netsim.hpp>
#include <p2pdl/parser.hpp>
#include <p2pdl/priority.hpp>
#include <p2pdl/query.hpp>
#include <p2pdl/split.hpp>
#include <p2pdl/totalrw.hpp>
#include <p2pdl/weak.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace p2pdl;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitCap = 4;

struct Failure {
	int code;
	explicit Failure(int c) : code(c) {}
};

std::string readFile(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		std::cerr << "error: cannot open " << path << '\n';
		throw Failure(kExitUsage);
	}
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

P2PSystem loadSystem(const std::string& path) {
	auto result = parse_system(readFile(path), path);
	if (!result.ok()) {
		for (const auto& e : result.errors) std::cerr << to_string(e) << '\n';
		throw Failure(kExitParse);
	}
	return *result.system;
}

PeerAtom loadQuery(const std::string& text) {
	auto q = parse_query(text);
	if (!q.ok()) {
		for (const auto& e : q.errors) std::cerr << to_string(e) << '\n';
		throw Failure(kExitParse);
	}
	return *q.atom;
}

QuerySemantics parseSemantics(const std::string& name) {
	auto s = semantics_from_string(name);
	if (!s) {
		std::cerr << "error: unknown semantics '" << name << "'\n";
		throw Failure(kExitUsage);
	}
	return *s;
}

EnumerateOptions makeOptions(std::size_t cap, int threads) {
	EnumerateOptions opts;
	opts.cap = cap;
	opts.threads = threads;
	return opts;
}

std::size_t capFromEnv(std::size_t fallback) {
	if (const char* env = std::getenv("P2PDL_MAX_CANDIDATES")) {
		char* end = nullptr;
		long v = std::strtol(env, &end, 10);
		if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
	}
	return fallback;
}

json modelToJson(const Interpretation& m) {
	json arr = json::array();
	for (const auto& a : m) arr.push_back(to_string(a));
	return arr;
}

void dumpGround(const GroundSystem& gs) {
	std::map<int, std::vector<const PeerRule*>> byPeer;
	for (const auto& r : gs.rules) byPeer[r.ownerPeer()].push_back(&r);
	auto unqualified = [](const PeerAtom& a) {
		std::string s = to_string(a);
		return s.substr(s.find(':') + 1);
	};
	for (const auto& [peerId, rules] : byPeer) {
		std::cout << "peer " << peerId << " {\n";
		for (const PeerRule* r : rules) {
			if (r->kind == RuleKind::Standard && r->body.empty() && r->builtins.empty()) {
				std::cout << "  fact " << unqualified(*r->head) << ".\n";
			} else {
				std::cout << "  " << print_rule(*r, peerId) << '\n';
			}
		}
		std::cout << "}\n";
	}
}

int cmdModels(const std::string& file, const std::string& semantics, bool asJson, std::size_t cap, int threads) {
	P2PSystem sys = loadSystem(file);
	QuerySemantics sem = parseSemantics(semantics);
	if (sem == QuerySemantics::Wf) {
		WellFoundedResult wf = well_founded(sys);
		for (const auto& c : wf.violated_constraints) {
			std::cerr << "warning: constraint violated by the well-founded model: " << display_gen_rule(c) << '\n';
		}
		if (asJson) {
			json out;
			out["true"] = modelToJson(wf.model.true_set);
			out["undefined"] = modelToJson(wf.undefined_set);
			std::cout << out.dump() << '\n';
		} else {
			std::cout << "true: " << to_string(wf.model.true_set) << " undefined: " << to_string(wf.undefined_set) << '\n';
		}
		return kExitOk;
	}
	ModelSet models = models_for(sys, sem, makeOptions(cap, threads));
	if (asJson) {
		json arr = json::array();
		for (const auto& m : models) arr.push_back(modelToJson(m));
		std::cout << arr.dump() << '\n';
	} else {
		for (const auto& m : models) std::cout << to_string(m) << '\n';
	}
	return models.empty() ? kExitFalse : kExitOk;
}

int cmdQuery(const std::string& file, const std::string& queryText, const std::string& modeName,
             const std::string& semantics, bool asJson, std::size_t cap, int threads) {
	P2PSystem sys = loadSystem(file);
	PeerAtom query = loadQuery(queryText);
	Mode mode = modeName == "brave" ? Mode::Brave : Mode::Cautious;
	if (modeName != "brave" && modeName != "cautious") {
		std::cerr << "error: --mode must be brave or cautious\n";
		return kExitUsage;
	}
	QuerySemantics sem = parseSemantics(semantics);
	QueryResult result = answer(sys, query, mode, sem, makeOptions(cap, threads));
	if (asJson) {
		json out;
		out["answers"] = modelToJson(result.answers);
		out["models"] = result.model_count;
		if (sem == QuerySemantics::Wf) {
			out["true"] = modelToJson(result.wf_true);
			out["undefined"] = modelToJson(result.wf_undefined);
		}
		std::cout << out.dump() << '\n';
	} else if (query.ground()) {
		if (sem == QuerySemantics::Wf) {
			TruthValue v = result.wf_true.contains(query) ? TruthValue::True
			               : result.wf_undefined.contains(query) ? TruthValue::Undefined
			                                                     : TruthValue::False;
			std::cout << to_string(v) << '\n';
		} else {
			std::cout << (result.answers.contains(query) ? "true" : "false") << '\n';
		}
	} else {
		if (sem == QuerySemantics::Wf) {
			std::cout << "true: " << to_string(result.wf_true) << " undefined: " << to_string(result.wf_undefined) << '\n';
		} else {
			std::cout << to_string(result.answers) << '\n';
		}
	}
	bool truthy = query.ground() ? result.answers.contains(query) : !result.answers.empty();
	return truthy ? kExitOk : kExitFalse;
}

int cmdRewrite(const std::string& file, bool plp, bool dumpGroundFlag, bool normal, bool dumpSplit) {
	P2PSystem sys = loadSystem(file);
	P2PSystem normalized = normalize_mappings(sys);
	if (dumpGroundFlag) {
		dumpGround(ground_system(normalized));
		return kExitOk;
	}
	if (normal) {
		for (const auto& r : rew_w(normalized)) std::cout << display_gen_rule(r) << '\n';
		return kExitOk;
	}
	if (dumpSplit) {
		std::cout << print_system(split(sys).system);
		return kExitOk;
	}
	(void)plp;
	PrioritizedProgram rew = rew_prioritized(normalized);
	for (const auto& r : rew.rules) std::cout << display_gen_rule(r) << '\n';
	for (std::size_t k = 0; k < rew.layers.size(); ++k) {
		for (const auto& st : rew.layers[k]) {
			std::cout << "priority[" << (k + 1) << "]: " << display_atom(st.higher) << " >= " << display_atom(st.lower) << ".\n";
		}
	}
	return kExitOk;
}

int cmdSplit(const std::string& file) {
	P2PSystem sys = loadSystem(file);
	std::cout << print_system(split(sys).system);
	return kExitOk;
}

int cmdCheck(const std::string& file) {
	P2PSystem sys = loadSystem(file);
	bool allConsistent = true;
	for (const auto& peer : sys.peers) {
		// SM(D_i u LP_i u IC_i) over the peer's own rules.
		P2PSystem local;
		Peer probe = peer;
		probe.mapping_rules.clear();
		local.peers.push_back(std::move(probe));
		GroundSystem gs = ground_system(local);
		NormalProgram prog;
		for (const auto& r : gs.rules) prog.rules.push_back(to_engine_rule(r));
		bool consistent = !stable_models_normal(prog).empty();
		allConsistent = allConsistent && consistent;
		std::cout << "peer " << peer.id << ": locally " << (consistent ? "consistent" : "INCONSISTENT") << '\n';
	}
	return allConsistent ? kExitOk : kExitFalse;
}

int cmdSimulate(const std::string& file, const std::string& queryText, const std::string& tracePath) {
	P2PSystem sys = loadSystem(file);
	PeerAtom query = loadQuery(queryText);
	SimResult result = simulate_query(sys, query);
	if (!tracePath.empty()) {
		std::ofstream out(tracePath);
		if (!out) {
			std::cerr << "error: cannot write " << tracePath << '\n';
			return kExitUsage;
		}
		for (const auto& e : result.trace.entries) {
			json line;
			line["t"] = e.t;
			line["kind"] = e.kind == MsgKind::QueryRequest ? "request" : "answer";
			line["from"] = e.from;
			line["to"] = e.to;
			line["request_id"] = e.request_id;
			line["predicate"] = std::to_string(e.predicate.first) + ":" + e.predicate.second;
			out << line.dump() << '\n';
		}
	}
	if (query.ground()) {
		std::cout << "status: " << to_string(result.query_status) << '\n';
	}
	std::cout << "true: " << to_string(result.fragment.true_set) << " undefined: " << to_string(result.undefined_set) << '\n';
	std::cout << "messages: " << result.trace.entries.size() << '\n';
	return query.ground() && result.query_status == TruthValue::False ? kExitFalse : kExitOk;
}

int cmdGenSat(const std::string& dimacsPath) {
	CnfFormula f = parse_dimacs(readFile(dimacsPath));
	std::cout << print_system(encode_sat(f));
	return kExitOk;
}

std::vector<std::string> splitList(const std::string& csv) {
	std::vector<std::string> out;
	std::string item;
	std::istringstream in(csv);
	while (std::getline(in, item, ',')) {
		if (!item.empty()) out.push_back(item);
	}
	return out;
}

int cmdGen3Col(const std::string& nodesCsv, const std::string& colorsCsv, const std::string& edgesCsv) {
	auto nodes = splitList(nodesCsv);
	auto colors = splitList(colorsCsv);
	std::vector<std::pair<std::string, std::string>> edges;
	for (const auto& e : splitList(edgesCsv)) {
		auto dash = e.find('-');
		if (dash == std::string::npos) {
			std::cerr << "error: edges are written a-b\n";
			return kExitUsage;
		}
		edges.emplace_back(e.substr(0, dash), e.substr(dash + 1));
	}
	std::cout << print_system(encode_three_col(nodes, colors, edges));
	return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"p2pdl - deductive peer-to-peer database engine"};
	app.require_subcommand(1);

	std::string file, queryText, semantics = "maxmin", mode = "cautious", tracePath;
	std::string dimacsPath, nodesCsv, colorsCsv, edgesCsv;
	bool asJson = false;
	std::size_t cap = capFromEnv(24);
	int threads = 1;
	bool dumpPlp = false, dumpGroundFlag = false, dumpNormal = false, dumpSplitFlag = false;

	auto* models = app.add_subcommand("models", "print the selected model set");
	models->add_option("file", file)->required();
	models->add_option("--semantics", semantics, "fol|weak|max|min|maxmin|gmaxmin|wf");
	models->add_flag("--json", asJson);
	models->add_option("--max-candidates", cap);
	models->add_option("--threads", threads);

	auto* query = app.add_subcommand("query", "answer a brave/cautious query");
	query->add_option("file", file)->required();
	query->add_option("-q,--query", queryText)->required();
	query->add_option("--mode", mode, "brave|cautious");
	query->add_option("--semantics", semantics);
	query->add_flag("--json", asJson);
	query->add_option("--max-candidates", cap);
	query->add_option("--threads", threads);

	auto* rewrite = app.add_subcommand("rewrite", "print a rewriting of the system");
	rewrite->add_option("file", file)->required();
	rewrite->add_flag("--dump-plp", dumpPlp, "prioritized program (default)");
	rewrite->add_flag("--dump-ground", dumpGroundFlag, "ground program");
	rewrite->add_flag("--dump-normal", dumpNormal, "normalized testing-atom rewriting");
	rewrite->add_flag("--dump-split", dumpSplitFlag, "doubled system");

	auto* splitCmd = app.add_subcommand("split", "print the doubled system");
	splitCmd->add_option("file", file)->required();

	auto* check = app.add_subcommand("check", "validate and report local consistency per peer");
	check->add_option("file", file)->required();

	auto* simulate = app.add_subcommand("simulate", "run the distributed well-founded computation");
	simulate->add_option("file", file)->required();
	simulate->add_option("-q,--query", queryText)->required();
	simulate->add_option("--trace", tracePath, "write the message trace as JSON lines");

	auto* gen = app.add_subcommand("gen", "emit generated instances");
	auto* genSat = gen->add_subcommand("sat", "SAT reduction instance");
	genSat->add_option("--dimacs", dimacsPath)->required();
	auto* gen3col = gen->add_subcommand("3col", "graph coloring instance");
	gen3col->add_option("--nodes", nodesCsv)->required();
	gen3col->add_option("--colors", colorsCsv)->required();
	gen3col->add_option("--edges", edgesCsv);
	gen->require_subcommand(1);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int rc = app.exit(e);
		return rc == 0 ? kExitOk : kExitUsage;
	}

	try {
		if (models->parsed()) return cmdModels(file, semantics, asJson, cap, threads);
		if (query->parsed()) return cmdQuery(file, queryText, mode, semantics, asJson, cap, threads);
		if (rewrite->parsed()) return cmdRewrite(file, dumpPlp, dumpGroundFlag, dumpNormal, dumpSplitFlag);
		if (splitCmd->parsed()) return cmdSplit(file);
		if (check->parsed()) return cmdCheck(file);
		if (simulate->parsed()) return cmdSimulate(file, queryText, tracePath);
		if (gen->parsed()) {
			if (genSat->parsed()) return cmdGenSat(dimacsPath);
			if (gen3col->parsed()) return cmdGen3Col(nodesCsv, colorsCsv, edgesCsv);
		}
	} catch (const Failure& f) {
		return f.code;
	} catch (const CapExceeded& e) {
		std::cerr << "error: " << e.what() << '\n';
		return kExitCap;
	} catch (const Error& e) {
		std::cerr << "error: " << e.what() << '\n';
		return kExitParse;
	}
	return kExitUsage;
}

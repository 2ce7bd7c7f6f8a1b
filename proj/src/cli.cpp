#include "opo/cli.hpp"

#include "opo/catalog.hpp"
#include "opo/clique_cover.hpp"
#include "opo/cobipartite.hpp"
#include "opo/cograph.hpp"
#include "opo/io.hpp"
#include "opo/oracle.hpp"
#include "opo/recognition.hpp"
#include "opo/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace opo::cli {

namespace {

using json = nlohmann::ordered_json;

class InputError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

class Report
{
  public:
	explicit Report(std::string command) : command_(std::move(command)) {}

	void verdict(const std::string &name, bool value) { verdicts_[name] = value; }
	void witness(const std::string &name, json value) { witnesses_[name] = std::move(value); }

	template <class F>
	auto timed(const std::string &phase, F &&f)
	{
		auto start = std::chrono::steady_clock::now();
		auto finish = [&] {
			timings_[phase] =
			    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
		};
		if constexpr (std::is_void_v<decltype(f())>) {
			f();
			finish();
		} else {
			auto r = f();
			finish();
			return r;
		}
	}

	json to_json() const
	{
		json j;
		j["command"] = command_;
		j["verdicts"] = verdicts_;
		j["witnesses"] = witnesses_.is_null() ? json::object() : witnesses_;
		j["timings_ms"] = timings_;
		return j;
	}

  private:
	std::string command_;
	std::map<std::string, bool> verdicts_;
	json witnesses_;
	std::map<std::string, double> timings_;
};

struct Common
{
	std::string format = "edgelist";
	bool as_json = false;
	std::string out_path;
	int guard = default_oracle_guard;
};

struct Context
{
	std::istream &in;
	std::ostream &out;
	bool stdin_used = false;
};

GraphFormat format_of(const std::string &name)
{
	if (name == "edgelist")
		return GraphFormat::EdgeList;
	if (name == "graph6")
		return GraphFormat::Graph6;
	throw InputError("unknown format '" + name + "'");
}

std::string read_source(Context &ctx, const std::string &path)
{
	std::ostringstream buf;
	if (path == "-") {
		if (ctx.stdin_used)
			throw InputError("stdin can be used for only one argument");
		ctx.stdin_used = true;
		buf << ctx.in.rdbuf();
		return buf.str();
	}
	std::ifstream f(path, std::ios::binary);
	if (!f)
		throw InputError("cannot read '" + path + "'");
	buf << f.rdbuf();
	return buf.str();
}

Graph read_graph(Context &ctx, const std::string &path, const Common &c)
{
	std::string text = read_source(ctx, path);
	try {
		return parse_graph(text, format_of(c.format));
	} catch (const ParseError &e) {
		throw InputError(path + ": " + e.what());
	}
}

void write_file(const std::string &path, const std::string &text)
{
	std::ofstream f(path, std::ios::binary);
	if (!f || !(f << text))
		throw InputError("cannot write '" + path + "'");
}

json arcs_json(const Orientation &d)
{
	json a = json::array();
	for (const Arc &arc : d.arcs())
		a.push_back({arc.tail, arc.head});
	return a;
}

json sets_json(const VertexSets &s)
{
	json a = json::array();
	for (const auto &set : s.sets)
		a.push_back(set);
	return a;
}

// Witnesses are re-validated here before they leave the process.
void require(bool ok, const std::string &what)
{
	if (!ok)
		throw std::logic_error("witness failed re-validation: " + what);
}

int finish(const Report &r, const Common &c, Context &ctx, bool holds, const std::string &text)
{
	if (c.as_json)
		ctx.out << r.to_json().dump(2) << "\n";
	else
		ctx.out << text;
	return holds ? Holds : Refuted;
}

std::vector<int> parse_int_list(const std::string &s, std::size_t expected, const std::string &what)
{
	std::vector<int> v;
	std::string token;
	std::istringstream is(s);
	while (std::getline(is, token, ',')) {
		try {
			std::size_t used = 0;
			v.push_back(std::stoi(token, &used));
			if (used != token.size())
				throw std::invalid_argument(token);
		} catch (const std::exception &) {
			throw InputError(what + ": '" + token + "' is not an integer");
		}
	}
	if (expected && v.size() != expected)
		throw InputError(what + " expects " + std::to_string(expected) + " comma-separated labels");
	return v;
}

int cmd_recognize(Context &ctx, const Common &c, const std::string &path, bool print_orientation)
{
	Report r(print_orientation ? "orient" : "recognize");
	Graph g = r.timed("parse", [&] { return read_graph(ctx, path, c); });
	auto d = r.timed("recognize", [&] { return recognize(g); });
	r.verdict("1po", d.has_value());
	std::string text;
	if (d) {
		require(verify_1perfect(*d), "1-perfect orientation");
		r.witness("orientation", arcs_json(*d));
		if (!c.out_path.empty())
			write_file(c.out_path, to_arc_list(*d));
		text = "1-perfectly orientable\n";
		if (print_orientation && c.out_path.empty())
			text += to_arc_list(*d);
	} else {
		text = "not 1-perfectly orientable\n";
	}
	return finish(r, c, ctx, d.has_value(), text);
}

int cmd_verify(Context &ctx, const Common &c, const std::string &graph_path, const std::string &orient_path)
{
	Report r("verify");
	Graph g = read_graph(ctx, graph_path, c);
	std::string text = read_source(ctx, orient_path);
	Orientation d = [&] {
		try {
			return parse_arc_list(text, g);
		} catch (const ParseError &e) {
			throw InputError(orient_path + ": " + e.what());
		} catch (const GraphError &e) {
			throw InputError(orient_path + ": " + e.what());
		}
	}();
	bool ok = r.timed("verify", [&] { return verify_1perfect(d); });
	r.verdict("1perfect", ok);
	return finish(r, c, ctx, ok, ok ? "1-perfect orientation\n" : "not a 1-perfect orientation\n");
}

int cmd_cover(Context &ctx, const Common &c, const std::string &path)
{
	Report r("cover");
	Graph g = read_graph(ctx, path, c);
	auto d = r.timed("recognize", [&] { return recognize(g); });
	r.verdict("1po", d.has_value());
	if (!d)
		return finish(r, c, ctx, false, "not 1-perfectly orientable\n");
	EdgeCliqueCover cover = r.timed("cover", [&] { return cover_from_orientation(*d); });
	require(cover.size() == g.order(), "cover has one set per vertex");
	require(validate_cover(g, cover, CoverMode::Exclusive), "exclusive edge clique cover");
	r.verdict("exclusive", true);
	r.verdict("inclusive", validate_cover(g, cover, CoverMode::Inclusive));
	r.witness("cover", sets_json(cover));
	std::string text = to_cover_text(cover);
	if (!c.out_path.empty()) {
		write_file(c.out_path, text);
		text = "edge clique cover with " + std::to_string(cover.size()) + " sets written\n";
	}
	return finish(r, c, ctx, true, text);
}

int cmd_from_cover(Context &ctx, const Common &c, const std::string &graph_path, const std::string &cover_path)
{
	Report r("from-cover");
	Graph g = read_graph(ctx, graph_path, c);
	std::string text = read_source(ctx, cover_path);
	EdgeCliqueCover cover = [&] {
		try {
			return parse_cover(text, g.order());
		} catch (const ParseError &e) {
			throw InputError(cover_path + ": " + e.what());
		}
	}();
	bool valid = validate_cover(g, cover, CoverMode::Inclusive);
	r.verdict("inclusive", valid);
	r.verdict("exclusive", validate_cover(g, cover, CoverMode::Exclusive));
	if (!valid)
		return finish(r, c, ctx, false, "invalid edge clique cover\n");
	Orientation d = orientation_from_cover(g, cover);
	require(verify_1perfect(d), "orientation from cover");
	r.witness("orientation", arcs_json(d));
	std::string out = to_arc_list(d);
	if (!c.out_path.empty()) {
		write_file(c.out_path, out);
		out = "1-perfect orientation written\n";
	}
	return finish(r, c, ctx, true, out);
}

struct TransformArgs
{
	std::string op;
	std::vector<std::string> graphs;
	int vertex = -1;
	std::string set;
	std::string branch;
	std::string edge;
};

int cmd_transform(Context &ctx, const Common &c, const TransformArgs &t)
{
	Report r("transform");
	const std::set<std::string> binary{"union", "join"};
	const std::size_t needed = binary.count(t.op) ? 2 : 1;
	if (t.graphs.size() != needed)
		throw InputError("--op " + t.op + " takes " + std::to_string(needed) + " graph operand(s)");
	std::vector<Graph> gs;
	for (const auto &p : t.graphs)
		gs.push_back(read_graph(ctx, p, c));

	auto witness_for = [&](const Graph &g) -> std::optional<Orientation> { return recognize(g); };

	std::optional<Orientation> result;
	if (t.op == "dup2branch") {
		auto br = parse_int_list(t.branch, 3, "--branch");
		Branch2 b{br[0], br[1], br[2]};
		if (!is_2branch(complement(gs[0]), b))
			throw InputError("--branch is not a 2-branch of the complement");
		if (!is_1po(gs[0])) {
			r.verdict("input_1po", false);
			return finish(r, c, ctx, false, "input is not 1-perfectly orientable\n");
		}
		auto dup = r.timed("transform", [&] { return duplicate_2branch_in_complement(gs[0], b); });
		r.witness("cover", sets_json(dup.cover));
		result = dup.orientation;
	} else {
		std::vector<Orientation> ds;
		for (const Graph &g : gs) {
			auto d = witness_for(g);
			if (!d) {
				r.verdict("input_1po", false);
				return finish(r, c, ctx, false, "input is not 1-perfectly orientable\n");
			}
			ds.push_back(std::move(*d));
		}
		r.verdict("input_1po", true);
		const Graph &g = gs[0];
		result = r.timed("transform", [&]() -> std::optional<Orientation> {
			if (t.op == "union")
				return orient_disjoint_union(ds[0], ds[1]);
			if (t.op == "universal")
				return orient_add_universal(ds[0]);
			if (t.op == "twin") {
				if (!g.contains(t.vertex))
					throw InputError("--vertex out of range");
				return orient_add_true_twin(ds[0], t.vertex);
			}
			if (t.op == "simplicial") {
				auto s = t.set.empty() ? std::vector<int>{} : parse_int_list(t.set, 0, "--set");
				for (int v : s)
					if (!g.contains(v))
						throw InputError("--set label out of range");
				if (!g.is_clique(s))
					throw InputError("--set is not a clique");
				return orient_add_simplicial(ds[0], s);
			}
			if (t.op == "contract") {
				auto e = parse_int_list(t.edge, 2, "--edge");
				if (!g.contains(e[0]) || !g.contains(e[1]) || e[0] == e[1] || !g.adjacent(e[0], e[1]))
					throw InputError("--edge is not an edge");
				return orient_contract_edge(ds[0], Edge(e[0], e[1]));
			}
			if (t.op == "join") {
				if (!join_is_1po(gs[0], gs[1]))
					return std::nullopt;
				return orient_join(ds[0], ds[1]);
			}
			throw InputError("unknown --op '" + t.op + "'");
		});
	}
	r.verdict("output_1po", result.has_value());
	if (!result)
		return finish(r, c, ctx, false, "result is not 1-perfectly orientable\n");
	require(verify_1perfect(*result), "transformed orientation");
	r.witness("graph", to_edge_list(result->base()));
	r.witness("orientation", arcs_json(*result));
	if (!c.out_path.empty())
		write_file(c.out_path, to_arc_list(*result));
	std::string text = serialize_graph(result->base(), format_of(c.format));
	if (c.out_path.empty() && !c.as_json)
		text += "# orientation\n" + to_arc_list(*result);
	return finish(r, c, ctx, true, text);
}

json partition_json(const CliqueBipartition &p) { return {{"U", p.u}, {"U_prime", p.u_prime}}; }

int cmd_cobip(Context &ctx, Common c, const std::string &path)
{
	c.as_json = true;
	Report r("cobip");
	Graph g = read_graph(ctx, path, c);
	auto parts = find_clique_bipartition(g);
	if (!parts)
		throw InputError("graph is not co-bipartite");
	r.witness("partition", partition_json(*parts));
	CobipartiteReport rep = r.timed("equivalence", [&] { return cobipartite_equivalence(g, c.guard); });
	r.verdict("1po", rep.is_1po);
	r.verdict("c4_cyclic_orientation", rep.has_c4_cyclic_orientation);
	r.verdict("good_coloring", rep.has_good_coloring);
	r.verdict("agree", rep.agree());
	if (auto col = good_coloring_exists(g, *parts)) {
		require(is_good_coloring(g, *parts, *col), "good coloring");
		json a = json::array();
		for (std::size_t i = 0; i < col->crossing.size(); ++i)
			a.push_back({{"edge", {col->crossing[i].u, col->crossing[i].v}},
			             {"color", col->colors[i] == EdgeColor::Red ? "red" : "blue"}});
		r.witness("coloring", a);
	}
	return finish(r, c, ctx, rep.is_1po, "");
}

int cmd_cograph(Context &ctx, const Common &c, const std::string &path)
{
	Report r("cograph");
	Graph g = read_graph(ctx, path, c);
	if (g.order() == 0)
		throw InputError("graph has no vertices");
	CotreeResult ct = r.timed("cotree", [&] { return build_cotree(g); });
	r.verdict("cograph", ct.cotree.has_value());
	if (!ct) {
		require(ct.p4.has_value(), "induced P4");
		const auto &p = *ct.p4;
		require(g.adjacent(p[0], p[1]) && g.adjacent(p[1], p[2]) && g.adjacent(p[2], p[3]) &&
		            !g.adjacent(p[0], p[2]) && !g.adjacent(p[0], p[3]) && !g.adjacent(p[1], p[3]),
		        "induced P4");
		r.witness("p4", std::vector<Vertex>(p.begin(), p.end()));
		std::string text = "not a cograph; induced P4:";
		for (Vertex v : p)
			text += " " + std::to_string(v);
		return finish(r, c, ctx, false, text + "\n");
	}
	require(rebuild(*ct.cotree, g.order()) == g, "cotree reconstruction");
	bool po = r.timed("recognize", [&] { return is_1po(g); });
	auto k23 = r.timed("k23", [&] { return contains_k23(g); });
	bool structural = r.timed("structural", [&] { return cograph_is_1po_structural(g); });
	r.verdict("1po", po);
	r.verdict("k23_free", !k23);
	r.verdict("structural", structural);
	r.witness("cotree", ct.cotree->to_sexpr());
	std::string text = "cotree: " + ct.cotree->to_sexpr() + "\n";
	text += std::string("1-perfectly orientable: ") + (po ? "yes" : "no") + "\n";
	text += std::string("K_{2,3}-free: ") + (k23 ? "no" : "yes");
	if (k23) {
		const auto &w = *k23;
		Graph sub = g.induced(std::vector<Vertex>(w.begin(), w.end()));
		require(sub == complete_bipartite(2, 3), "induced K_{2,3}");
		r.witness("k23", std::vector<Vertex>(w.begin(), w.end()));
		text += " (";
		for (std::size_t i = 0; i < w.size(); ++i)
			text += (i ? " " : "") + std::to_string(w[i]);
		text += ")";
	}
	text += std::string("\nstructural condition: ") + (structural ? "yes" : "no") + "\n";
	return finish(r, c, ctx, po, text);
}

struct CatalogArgs
{
	bool list = false;
	std::string emit;
	int k = -1;
	std::string verify_minimal;
};

int cmd_catalog(Context &ctx, const Common &c, const CatalogArgs &a)
{
	Report r("catalog");
	int modes = int(a.list) + int(!a.emit.empty()) + int(!a.verify_minimal.empty());
	if (modes != 1)
		throw InputError("catalog needs exactly one of --list, --emit, --verify-minimal");
	if (a.list) {
		json names = json::array();
		std::string text;
		for (const auto &n : bundled_names()) {
			names.push_back(n);
			text += n + "\tbundled\n";
		}
		names.push_back("F3");
		names.push_back("F4");
		text += "F3\tgenerated, --k >= 3\nF4\tgenerated, --k >= 1\n";
		r.witness("entries", names);
		return finish(r, c, ctx, true, text);
	}
	if (!a.emit.empty()) {
		Graph g = [&] {
			try {
				if (a.emit == "F3" || a.emit == "F4") {
					if (a.k < 0)
						throw InputError("--emit " + a.emit + " requires --k");
					return a.emit == "F3" ? gen_f3(a.k) : gen_f4(a.k);
				}
				return load_bundled(a.emit).graph;
			} catch (const std::invalid_argument &e) {
				throw InputError(e.what());
			} catch (const CatalogError &e) {
				throw InputError(e.what());
			}
		}();
		r.witness("graph", to_edge_list(g));
		return finish(r, c, ctx, true, serialize_graph(g, format_of(c.format)));
	}
	Graph g = read_graph(ctx, a.verify_minimal, c);
	MinimalityReport m = r.timed("minimality", [&] { return verify_minimal_forbidden(g); });
	r.verdict("forbidden", m.forbidden);
	r.verdict("minimal", m.minimal());
	json fd = json::array(), fc = json::array();
	for (Vertex v : m.failing_deletions)
		fd.push_back(v);
	for (const Edge &e : m.failing_contractions)
		fc.push_back({e.u, e.v});
	r.witness("failing_deletions", fd);
	r.witness("failing_contractions", fc);
	std::ostringstream text;
	text << (m.forbidden ? "not 1-perfectly orientable" : "not forbidden: graph is 1-perfectly orientable")
	     << "\n"
	     << "deletions checked: " << m.deletions_checked << ", not 1-p.o.: " << m.failing_deletions.size()
	     << "\n"
	     << "contractions checked: " << m.contractions_checked
	     << ", not 1-p.o.: " << m.failing_contractions.size() << "\n"
	     << (m.minimal() ? "minimal forbidden induced minor\n" : "not minimal\n");
	return finish(r, c, ctx, m.minimal(), text.str());
}

int cmd_oracle(Context &ctx, const Common &c, const std::string &path, bool count)
{
	Report r("oracle");
	Graph g = read_graph(ctx, path, c);
	auto d = r.timed("scan", [&] { return is_1po_bruteforce(g, c.guard); });
	r.verdict("1po", d.has_value());
	std::string text = d ? "1-perfectly orientable\n" : "not 1-perfectly orientable\n";
	if (d) {
		require(verify_1perfect(*d), "oracle witness");
		r.witness("orientation", arcs_json(*d));
		if (!c.out_path.empty())
			write_file(c.out_path, to_arc_list(*d));
	}
	if (count) {
		long long total = 0;
		r.timed("count", [&] {
			for_each_1perfect_orientation(
			    g,
			    [&](const Orientation &) {
				    ++total;
				    return true;
			    },
			    c.guard);
		});
		r.witness("count", total);
		text += "1-perfect orientations: " + std::to_string(total) + "\n";
	}
	return finish(r, c, ctx, d.has_value(), text);
}

int cmd_contains_minor(Context &ctx, const Common &c, const std::string &gp, const std::string &hp,
                       MinorGuard guard)
{
	Report r("contains-minor");
	Graph g = read_graph(ctx, gp, c);
	Graph h = read_graph(ctx, hp, c);
	auto m = r.timed("search", [&] { return contains_induced_minor(g, h, guard); });
	r.verdict("contains", m.has_value());
	if (!m)
		return finish(r, c, ctx, false, "no induced minor model\n");
	require(is_minor_model(g, h, *m), "induced minor model");
	json parts = json::array();
	std::string text = "induced minor model:\n";
	for (std::size_t i = 0; i < m->size(); ++i) {
		parts.push_back((*m)[i]);
		text += std::to_string(i) + ":";
		for (Vertex v : (*m)[i])
			text += " " + std::to_string(v);
		text += "\n";
	}
	r.witness("model", parts);
	return finish(r, c, ctx, true, text);
}

void add_common(CLI::App *sub, Common &c, bool with_out, bool with_guard)
{
	sub->add_option("--format", c.format, "Graph format: edgelist or graph6")
	    ->check(CLI::IsMember({"edgelist", "graph6"}));
	sub->add_flag("--json", c.as_json, "Emit a JSON report");
	if (with_out)
		sub->add_option("--out", c.out_path, "Write the witness to this file");
	if (with_guard)
		sub->add_option("--guard", c.guard, "Edge limit for exhaustive searches")->check(CLI::Range(0, 62));
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Recognize, certify and refute 1-perfectly orientable graphs", "opo"};
	app.require_subcommand(1);
	Common c;
	std::string g1, g2;
	bool count = false;
	TransformArgs t;
	CatalogArgs cat;
	MinorGuard mg;

	auto *recognize_cmd = app.add_subcommand("recognize", "Decide 1-perfect orientability");
	recognize_cmd->add_option("graph", g1)->required();
	add_common(recognize_cmd, c, true, false);

	auto *orient_cmd = app.add_subcommand("orient", "Print a 1-perfect orientation");
	orient_cmd->add_option("graph", g1)->required();
	add_common(orient_cmd, c, true, false);

	auto *verify_cmd = app.add_subcommand("verify", "Check that an orientation is 1-perfect");
	verify_cmd->add_option("graph", g1)->required();
	verify_cmd->add_option("orientation", g2)->required();
	add_common(verify_cmd, c, false, false);

	auto *cover_cmd = app.add_subcommand("cover", "Emit a vertex-indexed edge clique cover");
	cover_cmd->add_option("graph", g1)->required();
	add_common(cover_cmd, c, true, false);

	auto *from_cover_cmd = app.add_subcommand("from-cover", "Orientation from an edge clique cover");
	from_cover_cmd->add_option("graph", g1)->required();
	from_cover_cmd->add_option("cover", g2)->required();
	add_common(from_cover_cmd, c, true, false);

	auto *transform_cmd = app.add_subcommand("transform", "Apply a closure operation with its orientation");
	transform_cmd->add_option("--op", t.op, "union|universal|twin|simplicial|dup2branch|contract|join")
	    ->required()
	    ->check(CLI::IsMember({"union", "universal", "twin", "simplicial", "dup2branch", "contract", "join"}));
	transform_cmd->add_option("graphs", t.graphs)->required();
	transform_cmd->add_option("--vertex", t.vertex, "Vertex for twin");
	transform_cmd->add_option("--set", t.set, "Clique for simplicial, e.g. 0,1");
	transform_cmd->add_option("--branch", t.branch, "2-branch a,b,c of the complement");
	transform_cmd->add_option("--edge", t.edge, "Edge u,v to contract");
	add_common(transform_cmd, c, true, false);

	auto *cobip_cmd = app.add_subcommand("cobip", "Three-way report for a co-bipartite graph (JSON)");
	cobip_cmd->add_option("graph", g1)->required();
	add_common(cobip_cmd, c, false, true);

	auto *cograph_cmd = app.add_subcommand("cograph", "Cotree and the three cograph conditions");
	cograph_cmd->add_option("graph", g1)->required();
	add_common(cograph_cmd, c, false, false);

	auto *catalog_cmd = app.add_subcommand("catalog", "Forbidden induced minors");
	catalog_cmd->add_flag("--list", cat.list, "List catalog entries");
	catalog_cmd->add_option("--emit", cat.emit, "Print an entry (F1, F2, F3, F4, F5..F12)");
	catalog_cmd->add_option("--k", cat.k, "Family parameter for F3 and F4");
	catalog_cmd->add_option("--verify-minimal", cat.verify_minimal, "Check minimality of a graph file");
	add_common(catalog_cmd, c, false, false);

	auto *oracle_cmd = app.add_subcommand("oracle", "Exhaustive search over all orientations");
	oracle_cmd->add_option("graph", g1)->required();
	oracle_cmd->add_flag("--count", count, "Count all 1-perfect orientations");
	add_common(oracle_cmd, c, true, true);

	auto *minor_cmd = app.add_subcommand("contains-minor", "Induced minor containment");
	minor_cmd->add_option("graph", g1)->required();
	minor_cmd->add_option("minor", g2)->required();
	minor_cmd->add_option("--max-minor", mg.max_minor_order, "Largest minor order searched");
	minor_cmd->add_option("--max-host", mg.max_host_order, "Largest host order searched");
	add_common(minor_cmd, c, false, false);

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e, out, err);
		return code == 0 ? Holds : UsageError;
	}

	Context ctx{in, out};
	try {
		if (recognize_cmd->parsed())
			return cmd_recognize(ctx, c, g1, false);
		if (orient_cmd->parsed())
			return cmd_recognize(ctx, c, g1, true);
		if (verify_cmd->parsed())
			return cmd_verify(ctx, c, g1, g2);
		if (cover_cmd->parsed())
			return cmd_cover(ctx, c, g1);
		if (from_cover_cmd->parsed())
			return cmd_from_cover(ctx, c, g1, g2);
		if (transform_cmd->parsed())
			return cmd_transform(ctx, c, t);
		if (cobip_cmd->parsed())
			return cmd_cobip(ctx, c, g1);
		if (cograph_cmd->parsed())
			return cmd_cograph(ctx, c, g1);
		if (catalog_cmd->parsed())
			return cmd_catalog(ctx, c, cat);
		if (oracle_cmd->parsed())
			return cmd_oracle(ctx, c, g1, count);
		if (minor_cmd->parsed())
			return cmd_contains_minor(ctx, c, g1, g2, mg);
	} catch (const InputError &e) {
		err << "error: " << e.what() << "\n";
		return UsageError;
	} catch (const GuardExceeded &e) {
		err << "error: " << e.what() << "\n";
		return UsageError;
	} catch (const MinorGuardExceeded &e) {
		err << "error: " << e.what() << "\n";
		return UsageError;
	} catch (const std::exception &e) {
		err << "internal error: " << e.what() << "\n";
		return UsageError;
	}
	err << "error: no subcommand\n";
	return UsageError;
}

} // namespace opo::cli

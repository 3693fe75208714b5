#include "walklab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "walklab/constructions.hpp"
#include "walklab/enumeration.hpp"
#include "walklab/equivalence.hpp"
#include "walklab/fixtures.hpp"
#include "walklab/graph6.hpp"
#include "walklab/irreducibility.hpp"
#include "walklab/matrix.hpp"
#include "walklab/recurrence.hpp"
#include "walklab/theorems.hpp"
#include "walklab/walk_matrix.hpp"
#include "walklab/walks.hpp"

namespace walklab {

namespace {

struct GraphInput {
  std::string fixture_name;
  std::string graph6_text;
  std::string file_path;

  Fixture load(const std::string& role) const {
    int sources = (!fixture_name.empty()) + (!graph6_text.empty()) + (!file_path.empty());
    if (sources != 1)
      throw CLI::ValidationError(role, "give exactly one of --fixture/--graph6/--input");
    if (!fixture_name.empty()) return fixture(fixture_name);
    if (!graph6_text.empty())
      return Fixture{"graph6", from_graph6(graph6_text), {}};
    std::ifstream in(file_path);
    if (!in) throw CLI::ValidationError(role, "cannot open " + file_path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    // JSON graph schema or a bare graph6 line
    size_t start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{')
      return fixture_from_json(file_path, text);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return Fixture{file_path, from_graph6(text), {}};
  }
};

int resolve_vertex(const Fixture& f, const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("missing vertex");
  auto it = f.marks.find(spec);
  if (it != f.marks.end()) return it->second;
  size_t used = 0;
  int v = std::stoi(spec, &used);
  if (used != spec.size() || v < 0 || v >= f.graph.n())
    throw std::invalid_argument("unknown vertex '" + spec + "'");
  return v;
}

ExactMatrix adjacency_of(const Graph& g) {
  ExactMatrix a(g.n(), g.n());
  for (auto [u, v] : g.edges()) {
    a.at(u, v) = 1;
    a.at(v, u) = 1;
  }
  return a;
}

std::string join_counts(const std::vector<Int>& counts) {
  std::string s;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += dec(counts[i]);
  }
  return s;
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output);
  if (!file) throw std::invalid_argument("cannot write " + output);
  file << text;
}

int cmd_invariants(const GraphInput& input, const std::string& vertex_spec, int k,
                   bool all_vertices, const std::string& format,
                   const std::string& output, std::ostream& out) {
  Fixture f = input.load("invariants");
  const Graph& g = f.graph;
  const int upto = k >= 0 ? k : default_profile_length(g);
  if (all_vertices) {
    emit(profiles_to_csv(walk_counts_all(g, upto)), output, out);
    return 0;
  }
  int v = resolve_vertex(f, vertex_spec.empty() ? "0" : vertex_spec);

  auto w = walk_counts(g, v, upto);
  auto r = closed_walk_counts(g, v, upto);
  auto triple = closed_triple(g, v);
  Poly charp = char_poly(adjacency_of(g));
  Poly mainp = main_polynomial(g);

  if (format == "json") {
    nlohmann::json j;
    j["graph"] = to_graph6(g);
    j["name"] = f.name;
    j["vertex"] = v;
    j["walks"] = nlohmann::json::parse(profile_row_json(w.counts));
    j["closed_walks"] = nlohmann::json::parse(profile_row_json(r.counts));
    j["triple"] = {dec(triple.r2), dec(triple.r3), dec(triple.r4)};
    j["char_poly"] = charp.str();
    j["main_poly"] = mainp.str();
    emit(j.dump() + "\n", output, out);
  } else if (format == "csv") {
    std::ostringstream os;
    os << "series,k,count\n";
    for (size_t i = 0; i < w.counts.size(); ++i)
      os << "walk," << i << "," << dec(w.counts[i]) << "\n";
    for (size_t i = 0; i < r.counts.size(); ++i)
      os << "closed," << i << "," << dec(r.counts[i]) << "\n";
    emit(os.str(), output, out);
  } else {
    std::ostringstream os;
    os << "graph " << f.name << " (" << to_graph6(g) << "), vertex " << v << "\n";
    os << "walks: " << join_counts(w.counts) << "\n";
    os << "closed walks: " << join_counts(r.counts) << "\n";
    os << "triple: " << dec(triple.r2) << "," << dec(triple.r3) << "," << dec(triple.r4)
       << "\n";
    os << "char poly: " << charp.str() << "\n";
    os << "main poly: " << mainp.str() << "\n";
    emit(os.str(), output, out);
  }
  return 0;
}

int cmd_classify(const GraphInput& a, const GraphInput& b, const std::string& pair,
                 std::string va, std::string vb, const std::string& format,
                 std::ostream& out) {
  Fixture fa = a.load("classify");
  bool two_graphs = !b.fixture_name.empty() || !b.graph6_text.empty() || !b.file_path.empty();
  if (!pair.empty()) {
    auto comma = pair.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("classify", "--pair expects 'x,y'");
    va = pair.substr(0, comma);
    vb = pair.substr(comma + 1);
  }
  Fixture fb = two_graphs ? b.load("classify") : fa;
  int x = resolve_vertex(fa, va);
  int y = resolve_vertex(fb, vb);
  PairVerdict verdict = two_graphs ? classify_pair(fa.graph, x, fb.graph, y)
                                   : classify_pair(fa.graph, x, y);
  if (format == "json") {
    nlohmann::json j;
    j["graph_a"] = to_graph6(fa.graph);
    j["graph_b"] = to_graph6(fb.graph);
    j["x"] = x;
    j["y"] = y;
    j["walk_eq"] = verdict.walk_eq;
    j["closed_walk_eq"] = verdict.closed_walk_eq;
    j["removal_similar"] = verdict.removal_similar;
    j["similar"] = verdict.similar;
    j["cospectral"] = verdict.cospectral;
    out << j.dump() << "\n";
  } else {
    out << verdict.str() << "\n";
  }
  return 0;
}

int cmd_census(const std::string& universe, const std::string& mode, int n, int max_n,
               const std::string& cross, int small_max, int large_max,
               const std::string& format, std::ostream& out) {
  if (universe != "trees" && universe != "graphs")
    throw CLI::ValidationError("census", "universe must be trees or graphs");
  if (universe == "graphs") {
    if (mode != "decisive")
      throw CLI::ValidationError("census", "graph censuses support --mode decisive");
    auto report = decisive_census(n);
    if (format == "json") {
      for (const auto& row : report.rows) {
        nlohmann::json j;
        j["graph6"] = row.graph6;
        j["ds"] = row.determined_by_spectrum;
        j["irreducible"] = row.irreducible;
        j["decisive_vertices"] = row.decisive_vertices;
        out << j.dump() << "\n";
      }
    }
    out << "n=" << report.n << " graphs=" << report.graphs << " ds=" << report.ds_count
        << " irreducible=" << report.irreducible_count
        << " hypothesis=" << report.hypothesis_count
        << " violations=" << report.violations << "\n";
    return report.violations == 0 ? 0 : 1;
  }
  if (mode == "list") {
    // one census record per isomorphism class, as JSON lines
    int index = 0;
    enumerate_trees(n, [&](const Graph& t) {
      auto all = walk_counts_all(t, 2 * n - 1);
      std::string key;
      std::vector<std::string> rows;
      for (const auto& p : all) {
        std::string row;
        for (const Int& x : p.counts) {
          row += dec(x);
          row += ',';
        }
        rows.push_back(std::move(row));
      }
      std::sort(rows.begin(), rows.end());
      uint64_t h = 14695981039346656037ull;
      for (const auto& r : rows)
        for (unsigned char ch : r) {
          h ^= ch;
          h *= 1099511628211ull;
        }
      std::ostringstream hex;
      hex << std::hex << h;
      CensusRecord rec{"tree", n, index++, to_graph6(t), hex.str()};
      out << rec.to_json_line() << "\n";
    });
    return 0;
  }
  if (mode == "identifiability") {
    auto report = walk_identifiability_census(max_n);
    for (const auto& c : report.collisions) {
      out << "collision n=" << c.n << ":";
      for (const auto& g6 : c.graph6) out << " " << g6;
      out << "\n";
    }
    out << "n_max=" << report.n_max << " collisions=" << report.collisions.size()
        << "\n";
    return 0;
  }
  if (mode == "ambivalent") {
    auto matches = ambivalent_vertex_census(n);
    for (const auto& m : matches) {
      if (format == "json") {
        nlohmann::json j;
        j["t"] = m.t_graph6;
        j["x"] = m.x;
        j["s"] = m.s_graph6;
        j["y"] = m.y;
        j["same_tree"] = m.same_tree;
        j["strong"] = m.strong;
        out << j.dump() << "\n";
      } else {
        out << m.t_graph6 << ":" << m.x << " ~ " << m.s_graph6 << ":" << m.y
            << (m.strong ? " strong" : " walk-only") << (m.same_tree ? " same-tree" : "")
            << "\n";
      }
    }
    out << "n=" << n << " matches=" << matches.size() << "\n";
    return 0;
  }
  if (mode == "cross-size") {
    CrossMode cm;
    if (cross == "walk")
      cm = CrossMode::Walk;
    else if (cross == "closed")
      cm = CrossMode::Closed;
    else if (cross == "strong")
      cm = CrossMode::Strong;
    else
      throw CLI::ValidationError("census", "--cross must be walk|closed|strong");
    auto matches = cross_size_census(small_max, large_max, cm);
    for (const auto& m : matches)
      out << m.small_graph6 << ":" << m.small_vertex << " (" << m.n_small << ") ~ "
          << m.large_graph6 << ":" << m.large_vertex << " (" << m.n_large << ")\n";
    out << "pairs=" << distinct_tree_pairs(matches) << " matches=" << matches.size()
        << "\n";
    return 0;
  }
  throw CLI::ValidationError("census", "unknown mode " + mode);
}

int cmd_verify(const std::string& family, int n, int s, int t, std::ostream& out) {
  BoundReport rep;
  if (family == "pn-yn")
    rep = verify_pn_yn(n);
  else if (family == "kv")
    rep = verify_krebs_verbitsky(s, t);
  else if (family == "part3")
    rep = verify_part3_bound(n);
  else
    throw CLI::ValidationError("verify", "family must be pn-yn|kv|part3");
  out << rep.to_json() << "\n";
  return rep.ok ? 0 : 1;
}

int cmd_trial(const std::string& kind, int n, const std::string& curve, int trials,
              uint64_t seed, int threads, const std::string& format,
              const std::string& output, std::ostream& out) {
  if (kind == "triples") {
    if (!curve.empty()) {
      std::vector<int> ns;
      std::stringstream ss(curve);
      std::string item;
      while (std::getline(ss, item, ',')) ns.push_back(std::stoi(item));
      auto reports = rate_curve(ns, trials, seed, threads);
      if (format == "csv") {
        emit(rate_curve_csv(reports), output, out);
      } else {
        std::string text;
        for (const auto& r : reports) text += r.to_json("triples") + "\n";
        emit(text, output, out);
      }
      return 0;
    }
    auto rep = random_triple_trial(n, trials, seed, threads);
    emit(rep.to_json("triples") + "\n", output, out);
    return 0;
  }
  if (kind == "tree-ambivalence") {
    auto rep = random_tree_ambivalence_trial(n, trials, seed, threads);
    emit(rep.to_json("tree-ambivalence") + "\n", output, out);
    return 0;
  }
  throw CLI::ValidationError("trial", "kind must be triples|tree-ambivalence");
}

int cmd_fixtures(const std::string& name, const std::string& format, std::ostream& out) {
  if (name.empty()) {
    for (const auto& fname : fixture_names()) {
      Fixture f = fixture(fname);
      out << fname << " n=" << f.graph.n() << " " << to_graph6(f.graph);
      for (const auto& [mark, v] : f.marks) out << " " << mark << "=" << v;
      out << "\n";
    }
    return 0;
  }
  Fixture f = fixture(name);
  if (format == "graph6")
    out << to_graph6(f.graph) << "\n";
  else
    out << fixture_to_json(f) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact walk-invariant laboratory"};
  app.require_subcommand(1);

  // invariants
  auto* inv = app.add_subcommand("invariants", "walk profiles and polynomials of one vertex");
  GraphInput inv_in;
  std::string inv_vertex, inv_format = "text", inv_output;
  int inv_k = -1;
  inv->add_option("--fixture", inv_in.fixture_name);
  inv->add_option("--graph6", inv_in.graph6_text);
  inv->add_option("--input", inv_in.file_path);
  inv->add_option("--vertex", inv_vertex);
  inv->add_option("--k", inv_k);
  bool inv_all = false;
  inv->add_flag("--all", inv_all);
  inv->add_option("--format", inv_format)->check(CLI::IsMember({"text", "json", "csv"}));
  inv->add_option("--output", inv_output);

  // classify
  auto* cls = app.add_subcommand("classify", "pair verdict for two rooted graphs");
  GraphInput cls_a, cls_b;
  std::string cls_pair, cls_va, cls_vb, cls_format = "text";
  cls->add_option("--fixture", cls_a.fixture_name);
  cls->add_option("--graph6", cls_a.graph6_text);
  cls->add_option("--input", cls_a.file_path);
  cls->add_option("--pair", cls_pair);
  cls->add_option("--fixture-b", cls_b.fixture_name);
  cls->add_option("--graph6-b", cls_b.graph6_text);
  cls->add_option("--input-b", cls_b.file_path);
  cls->add_option("--vertex", cls_va);
  cls->add_option("--vertex-b", cls_vb);
  cls->add_option("--format", cls_format)->check(CLI::IsMember({"text", "json"}));

  // census
  auto* cen = app.add_subcommand("census", "tree and graph censuses");
  std::string cen_universe, cen_mode = "ambivalent", cen_cross = "walk",
              cen_format = "text";
  int cen_n = 0, cen_max_n = 0, cen_small = 0, cen_large = 0;
  cen->add_option("universe", cen_universe)->required();
  cen->add_option("--mode", cen_mode)
      ->check(CLI::IsMember(
          {"identifiability", "ambivalent", "cross-size", "decisive", "list"}));
  cen->add_option("--n", cen_n);
  cen->add_option("--max-n", cen_max_n);
  cen->add_option("--cross", cen_cross);
  cen->add_option("--small-max", cen_small);
  cen->add_option("--large-max", cen_large);
  cen->add_option("--format", cen_format)->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* ver = app.add_subcommand("verify", "tightness-family verifiers");
  std::string ver_family;
  int ver_n = 0, ver_s = 0, ver_t = 0;
  ver->add_option("family", ver_family)->required();
  ver->add_option("--n", ver_n);
  ver->add_option("--s", ver_s);
  ver->add_option("--t", ver_t);

  // trial
  auto* tri = app.add_subcommand("trial", "randomized experiments");
  std::string tri_kind, tri_curve, tri_format = "json", tri_output;
  int tri_n = 0, tri_trials = 0, tri_threads = 1;
  uint64_t tri_seed = 0;
  bool tri_seed_set = false;
  tri->add_option("kind", tri_kind)->required();
  tri->add_option("--n", tri_n);
  tri->add_option("--curve", tri_curve);
  tri->add_option("--trials", tri_trials)->required();
  tri->add_option_function<uint64_t>(
         "--seed",
         [&](const uint64_t& v) {
           tri_seed = v;
           tri_seed_set = true;
         })
      ->required();
  tri->add_option("--threads", tri_threads);
  tri->add_option("--format", tri_format)->check(CLI::IsMember({"json", "csv"}));
  tri->add_option("--output", tri_output);

  // fixtures
  auto* fix = app.add_subcommand("fixtures", "list or emit the named graphs");
  std::string fix_name, fix_format = "json";
  fix->add_option("--name", fix_name);
  fix->add_option("--format", fix_format)->check(CLI::IsMember({"json", "graph6"}));

  // optional JSON config: values fill in flags of the active subcommand
  // that the command line leaves out
  CLI::App* active = nullptr;
  for (const auto& token : args) {
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
      if (sub->get_name() == token) active = sub;
    if (active) break;
  }
  std::vector<std::string> expanded;
  try {
    for (size_t i = 0; i < args.size(); ++i) {
      if (args[i] != "--config") {
        expanded.push_back(args[i]);
        continue;
      }
      if (i + 1 >= args.size() || !active) {
        err << "usage error: --config needs a file and a subcommand\n";
        return 2;
      }
      std::ifstream in(args[++i]);
      if (!in) {
        err << "usage error: cannot open config " << args[i] << "\n";
        return 2;
      }
      nlohmann::json conf = nlohmann::json::parse(in);
      for (auto it = conf.begin(); it != conf.end(); ++it) {
        std::string flag = "--" + it.key();
        if (!active->get_option_no_throw(flag)) continue;
        if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
        expanded.push_back(flag);
        if (it.value().is_string())
          expanded.push_back(it.value().get<std::string>());
        else
          expanded.push_back(it.value().dump());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    err << "usage error: bad config: " << e.what() << "\n";
    return 2;
  }

  std::vector<std::string> argv(expanded);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (inv->parsed())
      return cmd_invariants(inv_in, inv_vertex, inv_k, inv_all, inv_format,
                            inv_output, out);
    if (cls->parsed())
      return cmd_classify(cls_a, cls_b, cls_pair, cls_va, cls_vb, cls_format, out);
    if (cen->parsed())
      return cmd_census(cen_universe, cen_mode, cen_n, cen_max_n, cen_cross, cen_small,
                        cen_large, cen_format, out);
    if (ver->parsed()) return cmd_verify(ver_family, ver_n, ver_s, ver_t, out);
    if (tri->parsed()) {
      (void)tri_seed_set;
      return cmd_trial(tri_kind, tri_n, tri_curve, tri_trials, tri_seed, tri_threads,
                       tri_format, tri_output, out);
    }
    if (fix->parsed()) return cmd_fixtures(fix_name, fix_format, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const graph6_error& e) {
    err << "graph6 parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    err << "budget error: " << e.what() << "\n";
    return 1;
  } catch (const integrity_error& e) {
    err << "integrity failure: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace walklab

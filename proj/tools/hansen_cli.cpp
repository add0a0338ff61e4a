// Command-line front door: graph ingestion, face counting/classification,
// single-graph verification, family sweeps, the P_4 ⋉ T series, Hanner
// cross-checks, and seeded generators. JSON reports are byte-stable across
// runs except for the trailing wall-time field.
//
// Exit codes: 0 pass, 1 usage/parse error, 2 identity failure, 3 face
// budget overflow.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hansen/faces.hpp"
#include "hansen/families.hpp"
#include "hansen/graph.hpp"
#include "hansen/hanner.hpp"
#include "hansen/incidence.hpp"
#include "hansen/json_io.hpp"
#include "hansen/partition.hpp"

namespace {

using namespace hansen;

constexpr int kOk = 0, kUsage = 1, kIdentity = 2, kBudget = 3;

struct Options {
  bool json = false;
  bool assume_perfect = false;
  bool want_fvec = false;
  bool dump_faces = false;
  std::uint64_t budget = kDefaultFaceBudget;
  std::uint64_t seed = 0;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Node sets are 0-based in files and JSON, 1-based in human-readable text.
std::string display_set(NodeSet s) {
  std::string out = "{";
  bool first = true;
  for_each_node(s, [&](int v) {
    if (!first) out += ",";
    out += std::to_string(v + 1);
    first = false;
  });
  return out + "}";
}

std::string display_fvec(const std::vector<std::uint64_t>& fv) {
  std::string out = "[";
  for (std::size_t i = 0; i < fv.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(fv[i]);
  }
  return out + "]";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// The graph descriptor echoed into reports: node count, edges, and the
// canonical split partition whenever one exists.
json graph_echo(const Graph& g, const std::optional<SplitCert>& cert) {
  if (cert) return graph_to_json(g, &*cert);
  auto found = recognize_split(g);
  return graph_to_json(g, found ? &*found : nullptr);
}

// Certificate for certified pipelines: the file's, else the canonical one.
SplitCert need_cert(const LoadedGraph& lg, const char* cmd) {
  if (lg.cert) return *lg.cert;
  auto cert = recognize_split(lg.graph);
  if (!cert)
    throw hansen::ParseError(std::string(cmd) +
                             " needs a split graph (none of the clique/"
                             "stable partitions work)");
  return *cert;
}

int run_count(const Options& opt, const std::string& file) {
  auto lg = load_graph_file(file);
  auto t0 = Clock::now();
  IncidenceStructure inc = build_incidence(lg.graph, opt.assume_perfect);
  FaceCensus census = enumerate_faces(inc, opt.budget);
  if (opt.want_fvec) compute_f_vector(inc, census);
  if (opt.json) {
    json j;
    j["command"] = "count";
    j["graph"] = graph_echo(lg.graph, lg.cert);
    j["d"] = inc.d;
    j["num_vertices"] = inc.num_vertices();
    j["num_facets"] = inc.num_facets();
    j["s"] = census.total;
    if (census.fvec) j["f_vector"] = *census.fvec;
    j["wall_ms"] = ms_since(t0);
    emit(j);
  } else {
    std::cout << "graph: n=" << lg.graph.n << " edges=" << lg.graph.edge_count()
              << "\n"
              << "d=" << inc.d << " vertices=" << inc.num_vertices()
              << " facets=" << inc.num_facets() << "\n"
              << "s = " << census.total << "\n";
    if (census.fvec)
      std::cout << "f_vector = " << display_fvec(*census.fvec) << "\n";
  }
  return kOk;
}

int run_verify(const Options& opt, const std::string& file) {
  auto lg = load_graph_file(file);
  SplitCert cert = need_cert(lg, "verify");
  auto t0 = Clock::now();
  VerifyReport r = verify_main_theorem(lg.graph, cert, opt.budget,
                                       opt.want_fvec);
  if (opt.json) {
    json j;
    j["command"] = "verify";
    json body = report_to_json(r, graph_to_json(lg.graph, &cert));
    for (auto& [key, value] : body.items()) j[key] = value;
    j["pass"] = r.all_pass();
    j["wall_ms"] = ms_since(t0);
    emit(j);
  } else {
    std::cout << "graph: n=" << lg.graph.n << " edges=" << lg.graph.edge_count()
              << " clique=" << display_set(cert.clique)
              << " stable=" << display_set(cert.stable) << "\n"
              << "d=" << r.d << " s=" << r.s << " p_G=" << r.p_g
              << " |Pi_A|=" << r.pi_a << " |Pi_B|=" << r.pi_b << "\n"
              << "classes: primitive=" << r.classes.primitive
              << " positive=" << r.classes.positive
              << " negative=" << r.classes.negative
              << " small=" << r.classes.small << "\n";
    if (r.fvec) std::cout << "f_vector = " << display_fvec(*r.fvec) << "\n";
    auto word = [](bool b) { return b ? "ok" : "FAIL"; };
    std::cout << "identities: main=" << word(r.main)
              << " fplus=" << word(r.fplus) << " fp_piA=" << word(r.fp_piA)
              << " fp_piB=" << word(r.fp_piB) << " mod16=" << word(r.mod16)
              << "\n"
              << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  }
  return r.all_pass() ? kOk : kIdentity;
}

int run_classify(const Options& opt, const std::string& file) {
  auto lg = load_graph_file(file);
  SplitCert cert = need_cert(lg, "classify");
  auto t0 = Clock::now();
  IncidenceStructure inc = build_incidence(lg.graph);
  FaceCensus census = enumerate_faces(inc, opt.budget);
  classify_faces(inc, cert, census);
  if (opt.want_fvec) compute_f_vector(inc, census);
  if (opt.json) {
    json j;
    j["command"] = "classify";
    j["graph"] = graph_to_json(lg.graph, &cert);
    j["d"] = inc.d;
    json body = census_to_json(census, opt.dump_faces);
    for (auto& [key, value] : body.items()) j[key] = value;
    j["wall_ms"] = ms_since(t0);
    emit(j);
  } else {
    const ClassCounts& c = *census.by_class;
    std::cout << "graph: n=" << lg.graph.n
              << " clique=" << display_set(cert.clique)
              << " stable=" << display_set(cert.stable) << "\n"
              << "s = " << census.total << "\n"
              << "classes: primitive=" << c.primitive
              << " positive=" << c.positive << " negative=" << c.negative
              << " small=" << c.small << "\n";
    if (census.fvec)
      std::cout << "f_vector = " << display_fvec(*census.fvec) << "\n";
  }
  return kOk;
}

int run_pg(const Options& opt, const std::string& file) {
  auto lg = load_graph_file(file);
  SplitCert cert = need_cert(lg, "pg");
  auto t0 = Clock::now();
  int d = lg.graph.n + 1;
  std::uint64_t p = count_pg(lg.graph, cert);
  std::uint64_t pi_a = count_pi(lg.graph, cert, PiSide::A);
  std::uint64_t pi_b = count_pi(lg.graph, cert, PiSide::B);
  bool pi_ok = pi_a + pi_b - (p + 1) == pow3(d - 1);
  bool mod16 = p % 16 == 0;
  if (opt.json) {
    json j;
    j["command"] = "pg";
    j["graph"] = graph_to_json(lg.graph, &cert);
    j["d"] = d;
    j["p_g"] = p;
    j["pi_a"] = pi_a;
    j["pi_b"] = pi_b;
    j["identities"] = {{"pi", pi_ok}, {"mod16", mod16}};
    j["wall_ms"] = ms_since(t0);
    emit(j);
  } else {
    std::cout << "graph: n=" << lg.graph.n
              << " clique=" << display_set(cert.clique)
              << " stable=" << display_set(cert.stable) << "\n"
              << "p_G = " << p << "  |Pi_A| = " << pi_a
              << "  |Pi_B| = " << pi_b << "\n"
              << "|Pi_A|+|Pi_B|-(p_G+1) = 3^" << d - 1 << ": "
              << (pi_ok ? "ok" : "FAIL") << "  mod16: "
              << (mod16 ? "ok" : "FAIL") << "\n";
  }
  return pi_ok && mod16 ? kOk : kIdentity;
}

int run_series(const Options& opt, int m, std::uint64_t t_seed) {
  auto t0 = Clock::now();
  ThresholdSeq tseq = random_threshold_sequence(m, t_seed);
  Graph t = build_threshold(tseq);
  Graph p4 = path_graph(4);
  SplitCert p4cert = *recognize_split(p4);
  auto [g, cert] = ltimes(p4, p4cert, t, tseq);
  VerifyReport r = verify_main_theorem(g, cert, opt.budget, opt.want_fvec);
  std::uint64_t predicted = pow3(m + 5) + 16;
  bool pass = r.s == predicted && r.all_pass();
  if (opt.json) {
    json j;
    j["command"] = "series";
    j["m"] = m;
    j["t_seed"] = t_seed;
    j["t_sequence"] = seq_to_string(tseq);
    json body = report_to_json(r, graph_to_json(g, &cert));
    for (auto& [key, value] : body.items()) j[key] = value;
    j["predicted"] = predicted;
    j["pass"] = pass;
    j["wall_ms"] = ms_since(t0);
    emit(j);
  } else {
    std::cout << "P_4 ltimes T, m=" << m << " t_seed=" << t_seed << " T=\""
              << seq_to_string(tseq) << "\"\n"
              << "d=" << r.d << " s=" << r.s << " predicted=" << predicted
              << " p_G=" << r.p_g << "\n"
              << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kIdentity;
}

int run_sweep(const Options& opt, int max_nodes) {
  auto t0 = Clock::now();
  auto graphs = split_graphs_upto_iso(max_nodes);
  std::uint64_t failures = 0;
  json rows = json::array();
  for (const Graph& g : graphs) {
    SplitCert cert = *recognize_split(g);
    IncidenceStructure inc = build_incidence(g);
    FaceCensus census = enumerate_faces(inc, opt.budget);
    std::uint64_t p = count_pg(g, cert);
    std::uint64_t bound = pow3(inc.d);
    bool lower_ok = census.total >= bound;
    bool main_ok = census.total == bound + p;
    if (!lower_ok || !main_ok) ++failures;
    if (opt.json) {
      json row = graph_to_json(g, &cert);
      row["d"] = inc.d;
      row["s"] = census.total;
      row["p_g"] = p;
      row["lower_bound_ok"] = lower_ok;
      row["main_ok"] = main_ok;
      rows.push_back(std::move(row));
    } else {
      std::cout << "n=" << g.n << " edges=" << g.edge_count()
                << " s=" << census.total << " 3^d=" << bound << " p_G=" << p
                << (lower_ok && main_ok ? "" : "  FAIL") << "\n";
    }
  }
  if (opt.json) {
    json j;
    j["command"] = "sweep";
    j["max_nodes"] = max_nodes;
    j["graphs"] = std::move(rows);
    j["checked"] = graphs.size();
    j["failures"] = failures;
    j["wall_ms"] = ms_since(t0);
    emit(j);
  } else {
    std::cout << "checked=" << graphs.size() << " failures=" << failures
              << "\n";
  }
  return failures == 0 ? kOk : kIdentity;
}

int run_hanner_check(const Options& opt, const std::string& file,
                     const std::string& seq_str) {
  auto t0 = Clock::now();
  ThresholdSeq seq;
  if (!seq_str.empty()) {
    seq = seq_from_string(seq_str);
  } else if (!file.empty()) {
    auto lg = load_graph_file(file);
    if (!lg.seq)
      throw hansen::ParseError(
          "hanner-check needs --seq or a graph file with a "
          "threshold_sequence");
    seq = *lg.seq;
  } else {
    throw hansen::ParseError("hanner-check needs --seq or a graph file");
  }
  Graph g = build_threshold(seq);
  FVector predicted = hanner_from_threshold(seq);
  IncidenceStructure inc = build_incidence(g);
  FaceCensus census = enumerate_faces(inc, opt.budget);
  compute_f_vector(inc, census);
  bool pass = *census.fvec == predicted &&
              census.total == pow3(inc.d) &&
              fvec_sum(predicted) == census.total;
  if (opt.json) {
    json j;
    j["command"] = "hanner-check";
    j["sequence"] = seq_to_string(seq);
    j["d"] = inc.d;
    j["predicted_f_vector"] = predicted;
    j["enumerated_f_vector"] = *census.fvec;
    j["s"] = census.total;
    j["pass"] = pass;
    j["wall_ms"] = ms_since(t0);
    emit(j);
  } else {
    std::cout << "sequence \"" << seq_to_string(seq) << "\" d=" << inc.d
              << "\npredicted  = " << display_fvec(predicted)
              << "\nenumerated = " << display_fvec(*census.fvec)
              << "\ns = " << census.total << " (3^d = " << pow3(inc.d)
              << ")\n"
              << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kIdentity;
}

void write_out(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    emit(j);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw hansen::ParseError("cannot write " + out_path);
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hansen polytopes of split graphs: faces, classes, p_G"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit JSON reports");
  app.add_flag("--assume-perfect", opt.assume_perfect,
               "use the clique facet description without a split certificate");
  app.add_flag("--f-vector", opt.want_fvec, "compute exact f-vectors");
  app.add_flag("--dump-faces", opt.dump_faces,
               "include the face list (classify only)");
  app.add_option("--budget", opt.budget, "face-count budget")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for generator commands")
      ->capture_default_str();

  int rc = kOk;
  std::string file, seq_str, out_path;
  int m = 0, max_nodes = 5;
  std::uint64_t t_seed = 0;
  bool t_seed_given = false;
  int gen_k = 3, gen_l = 3, gen_m = 0;
  double gen_p = 0.5;

  auto* count = app.add_subcommand("count", "enumerate all nonempty faces");
  count->add_option("file", file, "graph file (JSON or edge list)")
      ->required();
  count->callback([&] { rc = run_count(opt, file); });

  auto* verify = app.add_subcommand(
      "verify", "check the face-count identities on one split graph");
  verify->add_option("file", file, "graph file")->required();
  verify->callback([&] { rc = run_verify(opt, file); });

  auto* classify =
      app.add_subcommand("classify", "count faces by class");
  classify->add_option("file", file, "graph file")->required();
  classify->callback([&] { rc = run_classify(opt, file); });

  auto* pg = app.add_subcommand("pg", "partition invariant only (no faces)");
  pg->add_option("file", file, "graph file")->required();
  pg->callback([&] { rc = run_pg(opt, file); });

  auto* series = app.add_subcommand(
      "series", "s(H(P_4 ltimes T)) against the predicted 3^(m+5)+16");
  series->add_option("--p4-ltimes-t", m, "number of nodes of T")
      ->required();
  series->add_option("--t-seed", t_seed, "seed for T's creation sequence")
      ->each([&](const std::string&) { t_seed_given = true; });
  series->callback([&] {
    rc = run_series(opt, m, t_seed_given ? t_seed : opt.seed);
  });

  auto* sweep = app.add_subcommand(
      "sweep", "verify every split graph up to isomorphism");
  sweep->add_option("--max-nodes", max_nodes, "largest node count")
      ->capture_default_str();
  sweep->callback([&] { rc = run_sweep(opt, max_nodes); });

  auto* hanner = app.add_subcommand(
      "hanner-check", "threshold sequence: recursion vs enumeration");
  hanner->add_option("file", file, "graph file with threshold_sequence");
  hanner->add_option("--seq", seq_str, "sequence like IID");
  hanner->callback([&] { rc = run_hanner_check(opt, file, seq_str); });

  auto* gen = app.add_subcommand("gen", "seeded graph generators");
  gen->require_subcommand(1);
  auto* gen_split = gen->add_subcommand("split", "random split graph");
  gen_split->add_option("--k", gen_k, "clique size")->capture_default_str();
  gen_split->add_option("--l", gen_l, "stable set size")
      ->capture_default_str();
  gen_split->add_option("--p", gen_p, "cross-edge probability")
      ->capture_default_str();
  gen_split->add_option("-o,--out", out_path, "output file (default stdout)");
  gen_split->callback([&] {
    auto [g, cert] = random_split(gen_k, gen_l, gen_p, opt.seed);
    write_out(graph_to_json(g, &cert), out_path);
  });
  auto* gen_thresh = gen->add_subcommand("threshold", "random threshold graph");
  gen_thresh->add_option("--m", gen_m, "node count")->capture_default_str();
  gen_thresh->add_option("-o,--out", out_path, "output file");
  gen_thresh->callback([&] {
    ThresholdSeq seq = random_threshold_sequence(gen_m, opt.seed);
    Graph g = build_threshold(seq);
    auto cert = recognize_split(g);
    write_out(graph_to_json(g, cert ? &*cert : nullptr, &seq), out_path);
  });
  auto* gen_p4 = gen->add_subcommand("p4", "the 4-node path");
  gen_p4->add_option("-o,--out", out_path, "output file");
  gen_p4->callback([&] {
    Graph g = path_graph(4);
    auto cert = *recognize_split(g);
    write_out(graph_to_json(g, &cert), out_path);
  });
  auto* gen_series = gen->add_subcommand("p4-series", "P_4 ltimes random T");
  gen_series->add_option("--m", gen_m, "number of nodes of T")
      ->capture_default_str();
  gen_series->add_option("--t-seed", t_seed, "seed for T")
      ->each([&](const std::string&) { t_seed_given = true; });
  gen_series->add_option("-o,--out", out_path, "output file");
  gen_series->callback([&] {
    ThresholdSeq tseq =
        random_threshold_sequence(gen_m, t_seed_given ? t_seed : opt.seed);
    Graph t = build_threshold(tseq);
    Graph p4 = path_graph(4);
    auto [g, cert] = ltimes(p4, *recognize_split(p4), t, tseq);
    write_out(graph_to_json(g, &cert), out_path);
  });

  for (auto* sub : {count, verify, classify, pg, series, sweep, hanner, gen,
                    gen_split, gen_thresh, gen_p4, gen_series})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: face budget of " << e.budget
              << " exceeded; raise --budget\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}

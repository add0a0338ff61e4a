#include "hansen/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hansen {

json graph_to_json(const Graph& g, const SplitCert* cert,
                   const ThresholdSeq* seq) {
  json j;
  j["n"] = g.n;
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (cert) {
    j["split"] = {{"clique", set_to_vector(cert->clique)},
                  {"stable", set_to_vector(cert->stable)}};
  }
  if (seq) {
    json steps = json::array();
    for (char c : seq_to_string(*seq)) steps.push_back(std::string(1, c));
    j["threshold_sequence"] = steps;
  }
  return j;
}

LoadedGraph graph_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
      throw ParseError("graph JSON needs an integer \"n\"");
    int n = j["n"].get<int>();
    if (n < 0 || n > kMaxNodes)
      throw ParseError("node count out of range 0..63");
    LoadedGraph out{Graph(n), std::nullopt, std::nullopt};
    if (j.contains("edges")) {
      for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
          throw ParseError("each edge must be a [u,v] pair");
        out.graph.add_edge(e[0].get<int>(), e[1].get<int>());
      }
    }
    if (j.contains("split")) {
      SplitCert cert;
      for (int v : j["split"].at("clique").get<std::vector<int>>())
        cert.clique |= node_bit(v);
      for (int v : j["split"].at("stable").get<std::vector<int>>())
        cert.stable |= node_bit(v);
      if (!cert_valid(out.graph, cert))
        throw ParseError("\"split\" is not a valid clique/stable partition");
      out.cert = cert;
    }
    if (j.contains("threshold_sequence")) {
      std::string s;
      for (const auto& step : j["threshold_sequence"])
        s += step.get<std::string>();
      out.seq = seq_from_string(s);
      if (static_cast<int>(out.seq->size()) != n)
        throw ParseError("threshold sequence length differs from n");
    }
    return out;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
}

LoadedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int n = -1;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<long> nums;
    long x;
    while (ls >> x) nums.push_back(x);
    std::string leftover;
    ls.clear();
    if (ls >> leftover)
      throw ParseError("unparseable line in edge list: " + line);
    if (nums.empty()) continue;
    if (n < 0) {
      if (nums.size() != 1)
        throw ParseError("first line of an edge list is the node count");
      if (nums[0] < 0 || nums[0] > kMaxNodes)
        throw ParseError("node count out of range 0..63");
      n = static_cast<int>(nums[0]);
    } else {
      if (nums.size() != 2)
        throw ParseError("edge lines are \"u v\": " + line);
      edges.emplace_back(static_cast<int>(nums[0]),
                         static_cast<int>(nums[1]));
    }
  }
  if (n < 0) throw ParseError("edge list is missing the node count");
  if (n > kMaxNodes) throw ParseError("node count out of range 0..63");
  LoadedGraph out{Graph(n), std::nullopt, std::nullopt};
  try {
    for (auto [u, v] : edges) out.graph.add_edge(u, v);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad edge: ") + e.what());
  }
  return out;
}

LoadedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
    return graph_from_json(j);
  }
  return parse_graph_text(text);
}

namespace {

json signed_set_to_json(const SignedSet& s) {
  return {{"sign", s.sign > 0 ? "+" : "-"},
          {"members", set_to_vector(s.members)}};
}

}  // namespace

json incidence_to_json(const IncidenceStructure& inc) {
  json j;
  j["n"] = inc.n;
  j["d"] = inc.d;
  j["num_vertices"] = inc.num_vertices();
  j["num_facets"] = inc.num_facets();
  j["vertices"] = json::array();
  for (const auto& v : inc.vertices) j["vertices"].push_back(signed_set_to_json(v));
  j["facets"] = json::array();
  for (const auto& f : inc.facets) j["facets"].push_back(signed_set_to_json(f));
  j["rows"] = json::array();
  for (const auto& row : inc.vrow) j["rows"].push_back(row.to_hex());
  return j;
}

json classes_to_json(const ClassCounts& c) {
  return {{"primitive", c.primitive},
          {"positive", c.positive},
          {"negative", c.negative},
          {"small", c.small}};
}

json census_to_json(const FaceCensus& census, bool include_faces) {
  json j;
  j["s"] = census.total;
  if (census.by_class) j["classes"] = classes_to_json(*census.by_class);
  if (census.fvec) j["f_vector"] = *census.fvec;
  if (include_faces) {
    json faces = json::array();
    for (const Face& f : census.faces) faces.push_back(f.vset.to_hex());
    j["faces"] = faces;
  }
  return j;
}

json report_to_json(const VerifyReport& r, json graph_echo) {
  json j;
  j["graph"] = std::move(graph_echo);
  j["d"] = r.d;
  j["num_vertices"] = r.num_vertices;
  j["num_facets"] = r.num_facets;
  j["s"] = r.s;
  j["p_g"] = r.p_g;
  j["pi_a"] = r.pi_a;
  j["pi_b"] = r.pi_b;
  j["classes"] = classes_to_json(r.classes);
  if (r.fvec) j["f_vector"] = *r.fvec;
  j["identities"] = {{"main", r.main},
                     {"fplus", r.fplus},
                     {"fp_piA", r.fp_piA},
                     {"fp_piB", r.fp_piB},
                     {"mod16", r.mod16}};
  return j;
}

}  // namespace hansen

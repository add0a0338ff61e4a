#include "hansen/partition.hpp"

#include <stdexcept>

namespace hansen {

bool partition_valid(const SplitCert& cert, const TriPartition& t) {
  NodeSet all[6] = {t.cplus, t.cminus, t.czero, t.splus, t.sminus, t.szero};
  NodeSet seen = 0;
  for (NodeSet part : all) {
    if (part & seen) return false;
    seen |= part;
  }
  return (t.cplus | t.cminus | t.czero) == cert.clique &&
         (t.splus | t.sminus | t.szero) == cert.stable;
}

bool condition_A(const Graph& g, const SplitCert&, const TriPartition& t) {
  NodeSet sides = t.splus | t.sminus;
  bool ok = true;
  for_each_node(t.cplus | t.cminus, [&](int c) {
    if (!(g.adj[c] & sides)) ok = false;
  });
  return ok;
}

bool condition_B(const Graph& g, const SplitCert&, const TriPartition& t) {
  NodeSet sides = t.cplus | t.cminus;
  bool ok = true;
  for_each_node(t.splus | t.sminus, [&](int s) {
    if (!(sides & ~g.adj[s])) ok = false;
  });
  return ok;
}

namespace {

// Visit all 3^n sign assignments over the certificate's nodes.
template <class F>
void for_each_tripartition(const SplitCert& cert, F f) {
  auto cnodes = set_to_vector(cert.clique);
  auto snodes = set_to_vector(cert.stable);
  std::size_t total = cnodes.size() + snodes.size();
  std::vector<int> digit(total, 0);  // 0 -> zero, 1 -> plus, 2 -> minus
  for (;;) {
    TriPartition t;
    for (std::size_t i = 0; i < cnodes.size(); ++i) {
      NodeSet b = node_bit(cnodes[i]);
      (digit[i] == 0 ? t.czero : digit[i] == 1 ? t.cplus : t.cminus) |= b;
    }
    for (std::size_t i = 0; i < snodes.size(); ++i) {
      NodeSet b = node_bit(snodes[i]);
      int dg = digit[cnodes.size() + i];
      (dg == 0 ? t.szero : dg == 1 ? t.splus : t.sminus) |= b;
    }
    f(t);
    std::size_t pos = 0;
    while (pos < total && digit[pos] == 2) digit[pos++] = 0;
    if (pos == total) break;
    ++digit[pos];
  }
}

}  // namespace

std::uint64_t count_pg(const Graph& g, const SplitCert& cert) {
  std::uint64_t count = 0;
  for_each_tripartition(cert, [&](const TriPartition& t) {
    if (!t.trivial() && condition_A(g, cert, t) && condition_B(g, cert, t))
      ++count;
  });
  return count;
}

std::uint64_t count_pi(const Graph& g, const SplitCert& cert, PiSide side) {
  std::uint64_t count = 0;
  for_each_tripartition(cert, [&](const TriPartition& t) {
    bool ok = side == PiSide::A ? condition_A(g, cert, t)
                                : condition_B(g, cert, t);
    if (ok) ++count;
  });
  return count;
}

std::map<std::pair<NodeSet, NodeSet>, std::uint64_t> count_pi_a_refined(
    const Graph& g, const SplitCert& cert) {
  std::map<std::pair<NodeSet, NodeSet>, std::uint64_t> out;
  for_each_tripartition(cert, [&](const TriPartition& t) {
    if (condition_A(g, cert, t)) ++out[{t.splus, t.sminus}];
  });
  return out;
}

namespace {

BitVec type1_facet_mask(const IncidenceStructure& inc, const SplitCert& cert) {
  BitVec mask(inc.num_facets());
  for (std::size_t f = 0; f < inc.num_facets(); ++f)
    if ((inc.facets[f].members & ~cert.clique) == 0) mask.set(f);
  return mask;
}

}  // namespace

TriPartition psi(const Graph& g, const SplitCert& cert,
                 const IncidenceStructure& inc, const Face& face) {
  if (face.fset.intersects(type1_facet_mask(inc, cert)))
    throw std::invalid_argument("psi: face is not primitive");

  // Read S^± off the type-(1) vertices; collect per-sign member unions to
  // decide the "no vertex of the other sign contains c" clause.
  NodeSet splus = cert.stable, sminus = cert.stable;
  NodeSet union_plus = 0, union_minus = 0;
  bool saw_plus = false, saw_minus = false;
  face.vset.for_each_set([&](std::size_t vi) {
    const SignedSet& v = inc.vertices[vi];
    (v.sign > 0 ? union_plus : union_minus) |= v.members;
    if ((v.members & ~cert.stable) == 0) {
      if (v.sign > 0) {
        splus &= v.members;
        saw_plus = true;
      } else {
        sminus &= v.members;
        saw_minus = true;
      }
    }
  });
  if (!saw_plus || !saw_minus)
    throw std::logic_error("psi: primitive face without type-(1) vertices of both signs");
  if ((splus | sminus) == 0)
    throw std::invalid_argument("psi: trivial stratum (S+ and S- both empty)");
  if (splus & sminus)
    throw std::logic_error("psi: overlapping S+ and S-");

  TriPartition t;
  t.splus = splus;
  t.sminus = sminus;
  t.szero = cert.stable & ~(splus | sminus);
  for_each_node(cert.clique, [&](int c) {
    NodeSet b = node_bit(c);
    int vp = inc.vertex_index({+1, (splus & ~g.adj[c]) | b});
    if (vp >= 0 && face.vset.test(vp) && !(union_minus & b)) {
      t.cplus |= b;
      return;
    }
    int vm = inc.vertex_index({-1, (sminus & ~g.adj[c]) | b});
    if (vm >= 0 && face.vset.test(vm) && !(union_plus & b)) t.cminus |= b;
  });
  t.czero = cert.clique & ~(t.cplus | t.cminus);

  if (!condition_A(g, cert, t))
    throw std::logic_error("psi: result violates condition (A)");
  return t;
}

Face phi(const Graph& g, const SplitCert& cert, const IncidenceStructure& inc,
         const TriPartition& t) {
  if (!partition_valid(cert, t))
    throw std::invalid_argument("phi: partition does not fit the certificate");
  if ((t.splus | t.sminus) == 0)
    throw std::invalid_argument("phi: S+ and S- both empty");
  if (!condition_A(g, cert, t))
    throw std::invalid_argument("phi: partition violates condition (A)");

  BitVec vset(inc.num_vertices(), true);
  auto cut = [&](int sign, NodeSet members) {
    int f = inc.facet_index({sign, members});
    if (f < 0) throw std::logic_error("phi: facet lookup failed");
    vset &= inc.frow[f];
  };
  for_each_node(t.splus, [&](int s) {
    NodeSet b = node_bit(s);
    cut(+1, (t.cplus & g.adj[s]) | b);
    cut(+1, (g.adj[s] & ~t.cminus) | b);
  });
  for_each_node(t.sminus, [&](int s) {
    NodeSet b = node_bit(s);
    cut(-1, (t.cminus & g.adj[s]) | b);
    cut(-1, (g.adj[s] & ~t.cplus) | b);
  });
  if (vset.none()) throw std::logic_error("phi: empty intersection");

  // vset is an intersection of facet rows, hence already closed.
  Face face;
  face.fset = BitVec(inc.num_facets());
  for (std::size_t f = 0; f < inc.num_facets(); ++f)
    if (vset.is_subset_of(inc.frow[f])) face.fset.set(f);
  face.vset = std::move(vset);
  return face;
}

VerifyReport verify_main_theorem(const Graph& g, const SplitCert& cert,
                                 std::uint64_t budget, bool want_fvec) {
  if (!cert_valid(g, cert))
    throw std::invalid_argument("verify: invalid split certificate");

  IncidenceStructure inc = build_incidence(g);
  FaceCensus census = enumerate_faces(inc, budget);
  classify_faces(inc, cert, census);
  if (want_fvec) compute_f_vector(inc, census);

  VerifyReport r;
  r.d = inc.d;
  r.num_vertices = inc.num_vertices();
  r.num_facets = inc.num_facets();
  r.s = census.total;
  r.p_g = count_pg(g, cert);
  r.pi_a = count_pi(g, cert, PiSide::A);
  r.pi_b = count_pi(g, cert, PiSide::B);
  r.classes = *census.by_class;
  r.fvec = census.fvec;
  r.main = r.s == pow3(r.d) + r.p_g;
  r.fplus = r.classes.positive == pow3(r.d - 1) &&
            r.classes.negative == pow3(r.d - 1);
  r.fp_piA = r.classes.primitive == r.pi_a;
  r.fp_piB = r.classes.small == r.pi_b - 1;
  r.mod16 = r.p_g % 16 == 0;
  return r;
}

}  // namespace hansen

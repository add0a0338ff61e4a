#include "hansen/faces.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace hansen {

namespace {

// Facet set of a vertex set: all facets whose row contains it.
BitVec facets_above(const IncidenceStructure& inc, const BitVec& vset) {
  BitVec fset(inc.num_facets());
  for (std::size_t f = 0; f < inc.num_facets(); ++f)
    if (vset.is_subset_of(inc.frow[f])) fset.set(f);
  return fset;
}

FaceCensus census_from_vsets(const IncidenceStructure& inc,
                             std::vector<BitVec> vsets) {
  std::sort(vsets.begin(), vsets.end());
  FaceCensus census;
  census.total = vsets.size();
  census.faces.reserve(vsets.size());
  for (auto& vs : vsets) {
    Face face;
    face.fset = facets_above(inc, vs);
    face.vset = std::move(vs);
    census.faces.push_back(std::move(face));
  }
  return census;
}

}  // namespace

Face closure(const IncidenceStructure& inc, const BitVec& seed) {
  if (seed.none()) throw std::invalid_argument("closure of an empty seed");
  BitVec fset(inc.num_facets(), true);
  seed.for_each_set([&](std::size_t v) { fset &= inc.vrow[v]; });
  BitVec vset(inc.num_vertices(), true);
  fset.for_each_set([&](std::size_t f) { vset &= inc.frow[f]; });
  return Face{std::move(vset), std::move(fset)};
}

FaceCensus enumerate_faces(const IncidenceStructure& inc,
                           std::uint64_t budget) {
  std::unordered_set<BitVec, BitVecHash> seen;
  std::deque<BitVec> frontier;
  auto discover = [&](BitVec vs) {
    if (seen.insert(vs).second) {
      if (seen.size() > budget) throw BudgetExceeded(budget);
      frontier.push_back(std::move(vs));
    }
  };

  discover(BitVec(inc.num_vertices(), true));  // the polytope itself
  for (std::size_t v = 0; v < inc.num_vertices(); ++v) {
    BitVec seed(inc.num_vertices());
    seed.set(v);
    discover(closure(inc, seed).vset);
  }

  // A face's vertex set is an intersection of facet rows, so intersecting
  // with one more row lands on another (possibly empty) face; every face is
  // reachable from the polytope this way, one facet of its fset at a time.
  BitVec w(inc.num_vertices());
  while (!frontier.empty()) {
    BitVec cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t f = 0; f < inc.num_facets(); ++f) {
      BitVec::and_into(w, cur, inc.frow[f]);
      if (w.any() && !(w == cur) && !seen.contains(w)) discover(w);
    }
  }

  return census_from_vsets(inc, {seen.begin(), seen.end()});
}

namespace {

void brute_rec(const IncidenceStructure& inc, std::size_t next,
               const BitVec& cur,
               std::unordered_set<BitVec, BitVecHash>& seen) {
  seen.insert(cur);
  BitVec w(inc.num_vertices());
  for (std::size_t f = next; f < inc.num_facets(); ++f) {
    BitVec::and_into(w, cur, inc.frow[f]);
    // Adding f either empties the set (then so does every superset), or
    // leaves it unchanged (the subsets with and without f have the same
    // intersection, already counted), or strictly shrinks it.
    if (w.any() && !(w == cur)) brute_rec(inc, f + 1, w, seen);
  }
}

}  // namespace

FaceCensus brute_force_faces(const IncidenceStructure& inc) {
  if (inc.num_facets() > 24)
    throw std::invalid_argument("brute_force_faces: more than 24 facets");
  std::unordered_set<BitVec, BitVecHash> seen;
  brute_rec(inc, 0, BitVec(inc.num_vertices(), true), seen);
  return census_from_vsets(inc, {seen.begin(), seen.end()});
}

void classify_faces(const IncidenceStructure& inc, const SplitCert& cert,
                    FaceCensus& census) {
  if ((cert.clique & cert.stable) != 0 ||
      (cert.clique | cert.stable) != full_node_set(inc.n) ||
      inc.facet_index({+1, cert.clique}) < 0 ||
      inc.vertex_index({+1, cert.stable}) < 0)
    throw std::invalid_argument("classify_faces: certificate mismatch");

  // Type-(1) facets are those whose member set lies inside the clique side.
  BitVec type1_plus(inc.num_facets()), type1_minus(inc.num_facets());
  for (std::size_t f = 0; f < inc.num_facets(); ++f)
    if ((inc.facets[f].members & ~cert.clique) == 0)
      (inc.facets[f].sign > 0 ? type1_plus : type1_minus).set(f);

  census.face_class.resize(census.faces.size());
  ClassCounts counts;
  for (std::size_t i = 0; i < census.faces.size(); ++i) {
    bool plus = census.faces[i].fset.intersects(type1_plus);
    bool minus = census.faces[i].fset.intersects(type1_minus);
    FaceClass cls = plus ? (minus ? FaceClass::Small : FaceClass::Positive)
                         : (minus ? FaceClass::Negative : FaceClass::Primitive);
    census.face_class[i] = cls;
    switch (cls) {
      case FaceClass::Primitive: ++counts.primitive; break;
      case FaceClass::Positive: ++counts.positive; break;
      case FaceClass::Negative: ++counts.negative; break;
      case FaceClass::Small: ++counts.small; break;
    }
  }
  census.by_class = counts;
}

namespace {

// Incremental affine-rank computation over the rationals in fraction-free
// integer form. Rows are kept gcd-reduced, so entries stay tiny for the
// ±1-coordinate points we feed in; should a 64-bit product still overflow,
// the caller retries the face with arbitrary-precision integers.
struct Int64Overflow {};

template <class Int>
struct RankAccum {
  explicit RankAccum(int cols) : cols_(cols) {}

  // Returns true if the row extended the span.
  bool add(std::vector<Int> row) {
    for (auto& basis_row : rows_) {
      int p = pivot_of(basis_row);
      if (row[p] == 0) continue;
      eliminate(row, basis_row, p);
    }
    reduce(row);
    int p = pivot_of_or_end(row);
    if (p == cols_) return false;
    rows_.push_back(std::move(row));
    std::sort(rows_.begin(), rows_.end(),
              [&](const std::vector<Int>& a, const std::vector<Int>& b) {
                return pivot_of(a) < pivot_of(b);
              });
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int pivot_of(const std::vector<Int>& r) const {
    return pivot_of_or_end(r);
  }
  int pivot_of_or_end(const std::vector<Int>& r) const {
    for (int i = 0; i < cols_; ++i)
      if (r[i] != 0) return i;
    return cols_;
  }

  static Int mul(const Int& a, const Int& b) {
    if constexpr (std::is_same_v<Int, std::int64_t>) {
      Int out;
      if (__builtin_mul_overflow(a, b, &out)) throw Int64Overflow{};
      return out;
    } else {
      return a * b;
    }
  }
  static Int sub(const Int& a, const Int& b) {
    if constexpr (std::is_same_v<Int, std::int64_t>) {
      Int out;
      if (__builtin_sub_overflow(a, b, &out)) throw Int64Overflow{};
      return out;
    } else {
      return a - b;
    }
  }

  void eliminate(std::vector<Int>& row, const std::vector<Int>& basis,
                 int p) const {
    Int a = basis[p], b = row[p];
    for (int i = 0; i < cols_; ++i)
      row[i] = sub(mul(a, row[i]), mul(b, basis[i]));
    reduce(row);
  }

  void reduce(std::vector<Int>& row) const {
    Int g = 0;
    for (const Int& x : row) g = gcd_of(g, x);
    if (g > 1)
      for (Int& x : row) x /= g;
  }

  static Int gcd_of(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  int cols_;
  std::vector<std::vector<Int>> rows_;
};

template <class Int>
int face_dimension(const IncidenceStructure& inc, const Face& face) {
  RankAccum<Int> accum(inc.d);
  std::vector<int> base;
  int rank_cap = inc.d;
  int rank = 0;
  bool done = false;
  face.vset.for_each_set([&](std::size_t v) {
    if (done) return;
    auto pt = vertex_point(inc.vertices[v], inc.n);
    if (base.empty()) {
      base = std::move(pt);
      return;
    }
    std::vector<Int> row(inc.d);
    for (int i = 0; i < inc.d; ++i) row[i] = Int(pt[i] - base[i]);
    if (accum.add(std::move(row))) {
      rank = accum.rank();
      if (rank == rank_cap) done = true;
    }
  });
  return rank;
}

}  // namespace

void compute_f_vector(const IncidenceStructure& inc, FaceCensus& census) {
  std::vector<std::uint64_t> fvec(inc.d + 1, 0);
  for (const Face& face : census.faces) {
    int dim;
    try {
      dim = face_dimension<std::int64_t>(inc, face);
    } catch (const Int64Overflow&) {
      dim = face_dimension<boost::multiprecision::cpp_int>(inc, face);
    }
    ++fvec[dim];
  }
  census.fvec = std::move(fvec);
}

}  // namespace hansen

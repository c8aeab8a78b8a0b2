#include "wallcx/builders.hpp"

#include "wallcx/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace wallcx {

namespace {

/* Lexicographic odometer over [-bound, bound]^n. Seed with the all -bound
   vector, process, then call until it reports the wrap. */
bool next_box(std::vector<coeff_t>& v, coeff_t bound) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < bound) {
      ++v[i];
      std::fill(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.end(), -bound);
      return true;
    }
  }
  return false;
}

bool next_bits(std::vector<std::uint8_t>& t) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (!t[i]) {
      t[i] = 1;
      std::fill(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end(), 0);
      return true;
    }
  }
  return false;
}

bool primitive(const std::vector<coeff_t>& c) {
  long long d = 0;
  for (coeff_t v : c) d = std::gcd(d, static_cast<long long>(v < 0 ? -v : v));
  return d == 1;
}

std::vector<Int> int_row(const XVector& x) { return std::vector<Int>(x.c.begin(), x.c.end()); }

bool unimodular_x(const std::vector<std::vector<Int>>& rows) {
  return is_unimodular_sequence(rows);
}

void guard_faces(std::size_t count, std::size_t budget, const char* what) {
  if (count > budget)
    throw ComplexTooLarge(std::string(what) + ": " + std::to_string(count) +
                          " faces exceed the budget " + std::to_string(budget));
}

/* Candidate sweeps cost (2B+1)^dims * 2^bits evaluations; refuse upfront
   rather than grind through a box that cannot fit the budget anyway. */
void guard_sweep(std::size_t dims, std::size_t bits, coeff_t bound, std::size_t budget,
                 const char* what) {
  long double cand = 1;
  for (std::size_t i = 0; i < dims; ++i) cand *= static_cast<long double>(2 * bound + 1);
  for (std::size_t i = 0; i < bits; ++i) cand *= 2;
  if (cand > 64.0L * static_cast<long double>(budget))
    throw ComplexTooLarge(std::string(what) + ": candidate sweep exceeds the face budget");
}

void guard_pair_scan(std::size_t n, std::size_t budget, const char* what) {
  if (n < 2) return;
  long double pairs = 0.5L * static_cast<long double>(n) * static_cast<long double>(n - 1);
  if (pairs > 16.0L * static_cast<long double>(budget))
    throw ComplexTooLarge(std::string(what) + ": pairwise scan exceeds the face budget");
}

using Pair = std::pair<XVector, YVector>;

/* Edge relation of the pair complex: the two cross pairings vanish and the
   y parts q-pair to zero. Positions never enter, so the relation is
   symmetric. */
bool kpi_compatible(const StandardWallPairing& p, const Pair& a, const Pair& b) {
  return p.lambda(a.first, b.second) == 0 && p.lambda(b.first, a.second) == 0 &&
         p.qform(a.second, b.second) == 0;
}

/* Cross conditions of the zero-allowing poset. A nonzero y answers only to
   its own x; x independence is a separate, k-wise test. */
bool m_cross_ok(const StandardWallPairing& p, const Pair& a, const Pair& b) {
  if (!a.second.is_zero() && p.lambda(b.first, a.second) != 0) return false;
  if (!b.second.is_zero() && p.lambda(a.first, b.second) != 0) return false;
  return p.qform(a.second, b.second) == 0;
}

struct AdjacencyBits {
  std::size_t n = 0, words = 0;
  std::vector<std::uint64_t> bits;

  explicit AdjacencyBits(std::size_t count)
      : n(count), words((count + 63) / 64), bits(count * ((count + 63) / 64), 0) {}

  void set_pair(std::size_t i, std::size_t j) {
    bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    bits[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
  }
  bool get(std::size_t i, std::size_t j) const {
    return (bits[i * words + j / 64] >> (j % 64)) & 1;
  }

  /* Ids above face.back() adjacent to every member, ascending. */
  std::vector<std::size_t> extensions(const std::vector<std::size_t>& face) const {
    std::vector<std::uint64_t> acc(bits.begin() + static_cast<std::ptrdiff_t>(face[0] * words),
                                   bits.begin() + static_cast<std::ptrdiff_t>((face[0] + 1) * words));
    for (std::size_t m = 1; m < face.size(); ++m)
      for (std::size_t w = 0; w < words; ++w) acc[w] &= bits[face[m] * words + w];
    std::vector<std::size_t> out;
    std::size_t floor_id = face.back() + 1;
    for (std::size_t w = floor_id / 64; w < words; ++w) {
      std::uint64_t word = acc[w];
      if (w == floor_id / 64 && floor_id % 64) word &= ~std::uint64_t{0} << (floor_id % 64);
      while (word) {
        std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(word));
        out.push_back(w * 64 + bit);
        word &= word - 1;
      }
    }
    return out;
  }
};

using Levels = std::vector<std::vector<std::vector<std::size_t>>>;

/* Cliques listed by size (level s holds the ascending id sets of size
   s + 1), grown one vertex at a time. Every produced set counts against
   the budget. */
Levels grow_cliques(const AdjacencyBits& adj, std::size_t max_size, std::size_t budget,
                    const char* what) {
  Levels levels;
  if (adj.n == 0 || max_size == 0) return levels;
  guard_faces(adj.n, budget, what);
  std::size_t used = adj.n;
  levels.emplace_back();
  for (std::size_t i = 0; i < adj.n; ++i) levels[0].push_back({i});
  for (std::size_t s = 1; s < max_size; ++s) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& face : levels[s - 1]) {
      for (std::size_t v : adj.extensions(face)) {
        auto bigger = face;
        bigger.push_back(v);
        guard_faces(++used, budget, what);
        next.push_back(std::move(bigger));
      }
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

SimplicialComplex complex_from_levels(std::vector<std::string> labels, const Levels& levels) {
  SimplicialComplex c;
  c.vertex_labels = std::move(labels);
  for (const auto& level : levels)
    c.faces_by_dim.emplace_back(level.begin(), level.end());
  c.validate();
  return c;
}

/* All orderings of each id set become poset elements. The defining
   conditions are order independent, so enumerating sorted sets first and
   fanning out afterwards is exact. */
std::set<Seq> permutation_closure(const Levels& levels, std::size_t budget, const char* what) {
  std::set<Seq> elements;
  std::size_t used = 0;
  for (const auto& level : levels) {
    for (const auto& face : level) {
      Seq s = face;
      do {
        guard_faces(++used, budget, what);
        elements.insert(s);
      } while (std::next_permutation(s.begin(), s.end()));
    }
  }
  return elements;
}

/* The model identity q(y, y) = 0; a violation would mean the pairing
   arithmetic is broken, not that a candidate fails the filter. */
void assert_q_self_zero(const StandardWallPairing& p, const YVector& y) {
  if (p.qform(y, y) != 0)
    throw std::logic_error("pair enumeration: q(y, y) nonzero in the standard model");
}

}  // namespace

void EnumerationBounds::validate() const {
  if (coeff_bound < 1) throw std::invalid_argument("bounds: coeff_bound must be at least 1");
  if (face_budget == 0) throw std::invalid_argument("bounds: face budget must be positive");
}

std::size_t EnumerationBounds::seq_cap(std::size_t rank) const {
  if (max_seq_len) return max_seq_len;
  return std::min<std::size_t>(rank, 4);
}

std::string pair_label(const XVector& x, const YVector& y) {
  return x.to_string() + "|" + y.to_string();
}

std::vector<Pair> enumerate_kpi_vertices(const StandardWallPairing& p,
                                         const EnumerationBounds& b) {
  b.validate();
  const std::size_t g = p.rank();
  std::vector<Pair> out;
  if (g == 0) return out;
  guard_sweep(2 * g, g, b.coeff_bound, b.face_budget, "pair enumeration");
  std::vector<coeff_t> x(g, -b.coeff_bound);
  do {
    std::vector<coeff_t> f(g, -b.coeff_bound);
    do {
      coeff_t dot = 0;
      for (std::size_t i = 0; i < g; ++i) dot += x[i] * f[i];
      if (dot != 1) continue;
      std::vector<std::uint8_t> t(g, 0);
      do {
        YVector y{f, t};
        if (p.alpha(y) != 0) continue;
        XVector xv{x};
        if (p.lambda(xv, y) != 1)
          throw std::logic_error("pair enumeration: lambda disagrees with the coordinate dot");
        assert_q_self_zero(p, y);
        guard_faces(out.size() + 1, b.face_budget, "pair enumeration");
        out.emplace_back(std::move(xv), std::move(y));
      } while (next_bits(t));
    } while (next_box(f, b.coeff_bound));
  } while (next_box(x, b.coeff_bound));
  return out;
}

SimplicialComplex build_kpi(const StandardWallPairing& p, const EnumerationBounds& b) {
  b.validate();
  auto verts = enumerate_kpi_vertices(p, b);
  const std::size_t n = verts.size();
  guard_pair_scan(n, b.face_budget, "pair complex");
  AdjacencyBits adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (kpi_compatible(p, verts[i], verts[j])) adj.set_pair(i, j);
  auto levels = grow_cliques(adj, std::min(b.max_dim + 1, n), b.face_budget, "pair complex");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& v : verts) labels.push_back(pair_label(v.first, v.second));
  return complex_from_levels(std::move(labels), levels);
}

SimplicialComplex build_unimodular_complex(std::size_t rank, const EnumerationBounds& b) {
  b.validate();
  std::vector<XVector> verts;
  if (rank) {
    guard_sweep(rank, 0, b.coeff_bound, b.face_budget, "unimodular complex");
    std::vector<coeff_t> x(rank, -b.coeff_bound);
    do {
      if (!primitive(x)) continue;
      guard_faces(verts.size() + 1, b.face_budget, "unimodular complex");
      verts.push_back(XVector{x});
    } while (next_box(x, b.coeff_bound));
  }
  const std::size_t n = verts.size();
  std::vector<std::vector<Int>> rows;
  rows.reserve(n);
  for (const auto& v : verts) rows.push_back(int_row(v));

  /* Pairwise unimodularity is only a prefilter here; faces need the full
     k-wise test because joint independence can fail where all pairs pass. */
  guard_pair_scan(n, b.face_budget, "unimodular complex");
  AdjacencyBits adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (unimodular_x({rows[i], rows[j]})) adj.set_pair(i, j);

  const std::size_t max_size = std::min({b.max_dim + 1, rank, n});
  Levels levels;
  std::size_t used = 0;
  if (n) {
    guard_faces(n, b.face_budget, "unimodular complex");
    used = n;
    levels.emplace_back();
    for (std::size_t i = 0; i < n; ++i) levels[0].push_back({i});
  }
  for (std::size_t s = 1; s < max_size; ++s) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& face : levels[s - 1]) {
      for (std::size_t v : adj.extensions(face)) {
        std::vector<std::vector<Int>> sub;
        sub.reserve(face.size() + 1);
        for (std::size_t id : face) sub.push_back(rows[id]);
        sub.push_back(rows[v]);
        if (!unimodular_x(sub)) continue;
        auto bigger = face;
        bigger.push_back(v);
        guard_faces(++used, b.face_budget, "unimodular complex");
        next.push_back(std::move(bigger));
      }
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& v : verts) labels.push_back(v.to_string());
  return complex_from_levels(std::move(labels), levels);
}

Frame PairSequencePoset::frame_of(const Seq& s) const {
  Frame f;
  f.pairs.reserve(s.size());
  for (std::size_t id : s) f.pairs.push_back(ground_pairs.at(id));
  return f;
}

std::optional<std::size_t> PairSequencePoset::ground_index(const XVector& x,
                                                           const YVector& y) const {
  const Pair key{x, y};
  auto it = std::lower_bound(ground_pairs.begin(), ground_pairs.end(), key);
  if (it == ground_pairs.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - ground_pairs.begin());
}

std::optional<Seq> PairSequencePoset::seq_of(const Frame& f) const {
  Seq s;
  s.reserve(f.pairs.size());
  for (const auto& e : f.pairs) {
    auto id = ground_index(e.first, e.second);
    if (!id) return std::nullopt;
    s.push_back(*id);
  }
  return s;
}

PairSequencePoset build_L(const StandardWallPairing& p, const EnumerationBounds& b) {
  b.validate();
  auto ground = enumerate_kpi_vertices(p, b);
  const std::size_t n = ground.size();
  guard_pair_scan(n, b.face_budget, "dual pair poset");
  AdjacencyBits adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (kpi_compatible(p, ground[i], ground[j])) adj.set_pair(i, j);
  auto levels =
      grow_cliques(adj, std::min(b.seq_cap(p.rank()), n), b.face_budget, "dual pair poset");
  PairSequencePoset out;
  out.rank = p.rank();
  out.ground_pairs = std::move(ground);
  for (const auto& v : out.ground_pairs)
    out.poset.ground.push_back(pair_label(v.first, v.second));
  out.poset.elements = permutation_closure(levels, b.face_budget, "dual pair poset");
  out.poset.validate();
  return out;
}

PairSequencePoset build_M(const StandardWallPairing& p, const EnumerationBounds& b,
                          DualityReading reading) {
  b.validate();
  const std::size_t g = p.rank();
  PairSequencePoset out;
  out.rank = g;
  if (g == 0) return out;
  guard_sweep(2 * g, g, b.coeff_bound, b.face_budget, "zero-allowing poset");

  /* Ground sweep shares the lexicographic order of the pair enumeration
     but admits y = 0 over any primitive x. Under the default reading a
     nonzero y makes its x primitive for free (lambda(x, y) = 1); the
     orthogonal reading has to ask. */
  const coeff_t diag = reading == DualityReading::dual_to_own ? 1 : 0;
  std::vector<coeff_t> x(g, -b.coeff_bound);
  do {
    std::vector<coeff_t> f(g, -b.coeff_bound);
    do {
      std::vector<std::uint8_t> t(g, 0);
      do {
        XVector xv{x};
        YVector y{f, t};
        if (y.is_zero()) {
          if (!primitive(x)) continue;
        } else {
          if (p.lambda(xv, y) != diag || p.alpha(y) != 0 || !primitive(x)) continue;
        }
        assert_q_self_zero(p, y);
        guard_faces(out.ground_pairs.size() + 1, b.face_budget, "zero-allowing poset");
        out.ground_pairs.emplace_back(std::move(xv), std::move(y));
      } while (next_bits(t));
    } while (next_box(f, b.coeff_bound));
  } while (next_box(x, b.coeff_bound));

  const std::size_t n = out.ground_pairs.size();
  std::vector<std::vector<Int>> rows;
  rows.reserve(n);
  for (const auto& e : out.ground_pairs) rows.push_back(int_row(e.first));

  guard_pair_scan(n, b.face_budget, "zero-allowing poset");
  AdjacencyBits adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m_cross_ok(p, out.ground_pairs[i], out.ground_pairs[j]) &&
          unimodular_x({rows[i], rows[j]}))
        adj.set_pair(i, j);

  /* Same grow-and-retest scheme as the unimodular complex: adjacency cuts
     the candidates, the k-wise test on the x parts decides. */
  const std::size_t max_size = std::min({b.seq_cap(g), g, n});
  Levels levels;
  if (n) {
    levels.emplace_back();
    for (std::size_t i = 0; i < n; ++i) levels[0].push_back({i});
  }
  std::size_t used = n;
  guard_faces(used, b.face_budget, "zero-allowing poset");
  for (std::size_t s = 1; s < max_size; ++s) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& face : levels[s - 1]) {
      for (std::size_t v : adj.extensions(face)) {
        std::vector<std::vector<Int>> sub;
        sub.reserve(face.size() + 1);
        for (std::size_t id : face) sub.push_back(rows[id]);
        sub.push_back(rows[v]);
        if (!unimodular_x(sub)) continue;
        auto bigger = face;
        bigger.push_back(v);
        guard_faces(++used, b.face_budget, "zero-allowing poset");
        next.push_back(std::move(bigger));
      }
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }

  for (const auto& e : out.ground_pairs)
    out.poset.ground.push_back(pair_label(e.first, e.second));
  out.poset.elements = permutation_closure(levels, b.face_budget, "zero-allowing poset");
  out.poset.validate();
  return out;
}

PairSequencePoset filtration(const PairSequencePoset& m, std::size_t i) {
  std::vector<char> zero_y(m.ground_pairs.size());
  for (std::size_t id = 0; id < m.ground_pairs.size(); ++id)
    zero_y[id] = m.ground_pairs[id].second.is_zero();
  PairSequencePoset out;
  out.rank = m.rank;
  out.ground_pairs = m.ground_pairs;
  out.poset.ground = m.poset.ground;
  for (const Seq& s : m.poset.elements) {
    bool has_nonzero = false;
    for (std::size_t id : s)
      if (!zero_y[id]) {
        has_nonzero = true;
        break;
      }
    if (has_nonzero || s.size() <= i) out.poset.elements.insert(s);
  }
  return out;
}

Frame retraction_h(const Frame& w) {
  Frame out;
  for (const auto& e : w.pairs)
    if (!e.second.is_zero()) out.pairs.push_back(e);
  if (out.pairs.empty())
    throw std::invalid_argument("retraction: every y in the sequence is zero");
  return out;
}

namespace {

/* Down- and up-conversion between ambient coordinates and the complement
   bases. The free solves are exact over Z; the torsion residual is solved
   over Z/2 against the torsion basis. */
struct ComplementCoords {
  const ComplementResult& comp;
  std::size_t g = 0, r = 0;
  IntMatrix x_cols, y_free_cols;
  F2Matrix z_tor_cols;

  ComplementCoords(const ComplementResult& c, std::size_t ambient_rank)
      : comp(c), g(ambient_rank), r(c.x_basis.size()) {
    x_cols = IntMatrix::dense(g, r);
    y_free_cols = IntMatrix::dense(g, r);
    z_tor_cols = F2Matrix(g, r);
    for (std::size_t m = 0; m < r; ++m) {
      for (std::size_t row = 0; row < g; ++row) {
        x_cols.set(row, m, c.x_basis[m].c[row]);
        y_free_cols.set(row, m, c.y_basis[m].free[row]);
        z_tor_cols.set(row, m, c.z_basis[m].tor[row]);
      }
    }
  }

  std::optional<std::vector<Int>> x_down(const XVector& a) const {
    return solve_integer(x_cols, std::vector<Int>(a.c.begin(), a.c.end()));
  }

  struct YDown {
    std::vector<Int> free;
    std::vector<std::uint8_t> tor;
  };

  std::optional<YDown> y_down(const YVector& c) const {
    auto gamma = solve_integer(y_free_cols, std::vector<Int>(c.free.begin(), c.free.end()));
    if (!gamma) return std::nullopt;
    std::vector<std::uint8_t> residual = c.tor;
    for (std::size_t m = 0; m < r; ++m) {
      if ((*gamma)[m] % 2 == 0) continue;
      for (std::size_t row = 0; row < g; ++row) residual[row] ^= comp.y_basis[m].tor[row];
    }
    auto tau = z_tor_cols.solve(residual);
    if (!tau) return std::nullopt;
    return YDown{std::move(*gamma), std::move(*tau)};
  }

  XVector x_up(const XVector& small) const {
    XVector out{std::vector<coeff_t>(g, 0)};
    for (std::size_t m = 0; m < r; ++m) out = out + small.c[m] * comp.x_basis[m];
    return out;
  }

  YVector y_up(const YVector& small) const {
    YVector out{std::vector<coeff_t>(g, 0), std::vector<std::uint8_t>(g, 0)};
    for (std::size_t m = 0; m < r; ++m) out = out + small.free[m] * comp.y_basis[m];
    for (std::size_t m = 0; m < r; ++m)
      if (small.tor[m]) out = out + comp.z_basis[m];
    return out;
  }
};

bool ints_in_box(const std::vector<Int>& v, coeff_t bound) {
  for (const Int& x : v)
    if (x > bound || x < -bound) return false;
  return true;
}

std::vector<coeff_t> to_coeffs(const std::vector<Int>& v) {
  std::vector<coeff_t> out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(x.convert_to<coeff_t>());
  return out;
}

bool coeffs_in_box(const std::vector<coeff_t>& v, coeff_t bound) {
  for (coeff_t x : v)
    if (x > bound || x < -bound) return false;
  return true;
}

template <typename T>
bool is_subseq(const std::vector<T>& a, const std::vector<T>& b) {
  std::size_t i = 0;
  for (const auto& x : b)
    if (i < a.size() && a[i] == x) ++i;
  return i == a.size();
}

enum class MapStatus { ok, out_of_box, mismatch };

/* One complement sequence with a (coefficients over v, bits over rho(v))
   tag on every entry. */
struct TaggedElt {
  Seq s;
  std::vector<std::vector<coeff_t>> beta;
  std::vector<std::vector<std::uint8_t>> eps;

  auto operator<=>(const TaggedElt&) const = default;
};

}  // namespace

BijectionReport equivalence1_map(const StandardWallPairing& p, const std::vector<XVector>& v,
                                 const std::vector<YVector>& w_partner,
                                 const EnumerationBounds& b) {
  b.validate();
  const std::size_t g = p.rank(), k = v.size();
  if (k == 0) throw std::invalid_argument("splitting check: v must be nonempty");
  if (w_partner.size() != k)
    throw std::invalid_argument("splitting check: v and w lengths differ");
  if (k > g) throw std::invalid_argument("splitting check: more vectors than the rank");
  for (std::size_t l = 0; l < k; ++l) {
    if (p.alpha(w_partner[l]) != 0)
      throw std::invalid_argument("splitting check: alpha(w) nonzero");
    for (std::size_t m = 0; m < k; ++m) {
      if (p.lambda(v[l], w_partner[m]) != (l == m ? 1 : 0))
        throw std::invalid_argument("splitting check: lambda(v, w) is not the identity");
      if (p.qform(w_partner[l], w_partner[m]) != 0)
        throw std::invalid_argument("splitting check: q(w, w) nonzero");
    }
  }

  const auto comp = complement(p, SubspacePair{v, w_partner});
  const ComplementCoords coords(comp, g);
  const auto lp = build_L(p, b);
  const auto lc = build_L(comp.pairing, b);
  const coeff_t B = b.coeff_bound;

  /* Left side: sequences that stay valid after appending ((v_1, 0), ...):
     joint unimodularity of the x parts with v, and every y orthogonal to
     every v_l. */
  auto left_valid = [&](const Frame& u) {
    std::vector<std::vector<Int>> all;
    for (const auto& e : u.pairs) all.push_back(int_row(e.first));
    for (const auto& vl : v) all.push_back(int_row(vl));
    if (!unimodular_x(all)) return false;
    for (const auto& e : u.pairs)
      for (const auto& vl : v)
        if (p.lambda(vl, e.second) != 0) return false;
    return true;
  };

  std::vector<Frame> left;
  for (const Seq& s : lp.poset.elements) {
    Frame u = lp.frame_of(s);
    if (left_valid(u)) left.push_back(std::move(u));
  }
  std::set<std::vector<Pair>> left_set;
  for (const auto& u : left) left_set.insert(u.pairs);

  /* Right side: every complement sequence with every bounded tag. */
  std::set<TaggedElt> right;
  for (const Seq& s : lc.poset.elements) {
    const std::size_t len = s.size();
    std::vector<coeff_t> beta_flat(len * k, -B);
    do {
      std::vector<std::uint8_t> eps_flat(len * k, 0);
      do {
        TaggedElt te;
        te.s = s;
        for (std::size_t j = 0; j < len; ++j) {
          te.beta.emplace_back(beta_flat.begin() + static_cast<std::ptrdiff_t>(j * k),
                               beta_flat.begin() + static_cast<std::ptrdiff_t>((j + 1) * k));
          te.eps.emplace_back(eps_flat.begin() + static_cast<std::ptrdiff_t>(j * k),
                              eps_flat.begin() + static_cast<std::ptrdiff_t>((j + 1) * k));
        }
        guard_faces(right.size() + 1, b.face_budget, "splitting check");
        right.insert(std::move(te));
      } while (next_bits(eps_flat));
    } while (next_box(beta_flat, B));
  }

  struct FwdOut {
    MapStatus st = MapStatus::ok;
    TaggedElt te;
    std::string err;
  };
  auto forward = [&](const Frame& u) -> FwdOut {
    FwdOut out;
    for (const auto& [x, y] : u.pairs) {
      for (std::size_t l = 0; l < k; ++l)
        if (p.lambda(v[l], y) != 0)
          throw std::logic_error("splitting check: middle component did not vanish");
      std::vector<Int> beta_raw;
      for (std::size_t l = 0; l < k; ++l) beta_raw.push_back(p.lambda(x, w_partner[l]));
      if (!ints_in_box(beta_raw, B)) return {MapStatus::out_of_box, {}, {}};
      auto beta = to_coeffs(beta_raw);
      std::vector<std::uint8_t> eps;
      for (std::size_t l = 0; l < k; ++l)
        eps.push_back(p.qform(y, w_partner[l]) ? 1 : 0);

      XVector a = x;
      for (std::size_t l = 0; l < k; ++l) a = a - beta[l] * v[l];
      YVector c = y;
      for (std::size_t l = 0; l < k; ++l)
        if (eps[l]) c = c - p.rho(v[l]);

      auto alpha_raw = coords.x_down(a);
      if (!alpha_raw) return {MapStatus::mismatch, {}, "x part leaves the complement span"};
      auto cdown = coords.y_down(c);
      if (!cdown) return {MapStatus::mismatch, {}, "y part leaves the complement span"};
      if (!ints_in_box(*alpha_raw, B) || !ints_in_box(cdown->free, B))
        return {MapStatus::out_of_box, {}, {}};
      XVector as{to_coeffs(*alpha_raw)};
      YVector cs{to_coeffs(cdown->free), cdown->tor};
      auto gid = lc.ground_index(as, cs);
      if (!gid)
        return {MapStatus::mismatch, {}, "image pair is not a valid complement vertex"};
      out.te.s.push_back(*gid);
      out.te.beta.push_back(std::move(beta));
      out.te.eps.push_back(std::move(eps));
    }
    if (!out.te.s.empty() && !lc.poset.contains(out.te.s))
      return {MapStatus::mismatch, {}, "image sequence violates the complement conditions"};
    return out;
  };

  auto backward = [&](const TaggedElt& te) -> std::pair<MapStatus, Frame> {
    Frame u;
    for (std::size_t j = 0; j < te.s.size(); ++j) {
      const auto& [as, cs] = lc.ground_pairs[te.s[j]];
      XVector x = coords.x_up(as);
      for (std::size_t l = 0; l < k; ++l) x = x + te.beta[j][l] * v[l];
      YVector y = coords.y_up(cs);
      for (std::size_t l = 0; l < k; ++l)
        if (te.eps[j][l]) y = y + p.rho(v[l]);
      if (!coeffs_in_box(x.c, B) || !coeffs_in_box(y.free, B)) return {MapStatus::out_of_box, {}};
      u.pairs.emplace_back(std::move(x), std::move(y));
    }
    return {MapStatus::ok, std::move(u)};
  };

  BijectionReport rep;
  std::vector<std::pair<const Frame*, TaggedElt>> mapped;
  for (const auto& u : left) {
    auto f = forward(u);
    if (f.st == MapStatus::out_of_box) {
      ++rep.bound_insufficient;
      continue;
    }
    if (f.st == MapStatus::mismatch) {
      rep.failure = f.err;
      return rep;
    }
    if (!right.count(f.te)) {
      rep.failure = "image missing from the tagged complement enumeration";
      return rep;
    }
    auto bk = backward(f.te);
    if (bk.first != MapStatus::ok || !(bk.second == u)) {
      rep.failure = "round trip does not return the input sequence";
      return rep;
    }
    mapped.emplace_back(&u, f.te);
    ++rep.forward_checked;
  }
  for (const auto& te : right) {
    auto bk = backward(te);
    if (bk.first == MapStatus::out_of_box) {
      ++rep.bound_insufficient;
      continue;
    }
    if (!left_set.count(bk.second.pairs)) {
      rep.failure = "preimage is not a compatible sequence";
      return rep;
    }
    auto f = forward(bk.second);
    if (f.st != MapStatus::ok || !(f.te == te)) {
      rep.failure = "round trip does not return the tagged element";
      return rep;
    }
    ++rep.backward_checked;
  }

  /* Order preservation, both ways, on everything that mapped. Entries map
     one to one, so the sublist relations must agree exactly. */
  if (mapped.size() <= 4000) {
    for (const auto& [ua, ta] : mapped) {
      for (const auto& [ub, tb] : mapped) {
        std::vector<std::tuple<std::size_t, std::vector<coeff_t>, std::vector<std::uint8_t>>>
            ea, eb;
        for (std::size_t j = 0; j < ta.s.size(); ++j) ea.emplace_back(ta.s[j], ta.beta[j], ta.eps[j]);
        for (std::size_t j = 0; j < tb.s.size(); ++j) eb.emplace_back(tb.s[j], tb.beta[j], tb.eps[j]);
        if (is_subseq(ua->pairs, ub->pairs) != is_subseq(ea, eb)) {
          rep.failure = "order is not preserved";
          return rep;
        }
      }
    }
  }

  rep.ok = rep.failure.empty();
  return rep;
}

BijectionReport link_identification_check(const StandardWallPairing& p, const Frame& vw,
                                          const EnumerationBounds& b) {
  b.validate();
  const std::size_t g = p.rank(), k = vw.length();
  if (k == 0) throw std::invalid_argument("link check: vw must be nonempty");
  for (std::size_t i = 0; i < k; ++i) {
    const auto& [xi, yi] = vw.pairs[i];
    if (p.lambda(xi, yi) != 1 || p.alpha(yi) != 0)
      throw std::invalid_argument("link check: vw entry fails the vertex conditions");
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (p.lambda(xi, vw.pairs[j].second) != 0 || p.qform(yi, vw.pairs[j].second) != 0)
        throw std::invalid_argument("link check: vw fails the pairwise conditions");
    }
  }

  std::vector<XVector> v;
  std::vector<YVector> w;
  for (const auto& e : vw.pairs) {
    v.push_back(e.first);
    w.push_back(e.second);
  }
  const auto comp = complement(p, SubspacePair{v, w});
  const ComplementCoords coords(comp, g);
  const auto lp = build_L(p, b);
  const auto lc = build_L(comp.pairing, b);
  const coeff_t B = b.coeff_bound;

  auto cross_ok = [&](const Frame& u) {
    for (const auto& e : u.pairs)
      for (const auto& f : vw.pairs)
        if (!kpi_compatible(p, e, f)) return false;
    return true;
  };

  std::vector<Frame> left;
  for (const Seq& s : lp.poset.elements) {
    Frame u = lp.frame_of(s);
    if (cross_ok(u)) left.push_back(std::move(u));
  }
  std::set<std::vector<Pair>> left_set;
  for (const auto& u : left) left_set.insert(u.pairs);

  struct FwdOut {
    MapStatus st = MapStatus::ok;
    Seq s;
    std::string err;
  };
  auto forward = [&](const Frame& u) -> FwdOut {
    FwdOut out;
    for (const auto& [x, y] : u.pairs) {
      auto alpha_raw = coords.x_down(x);
      if (!alpha_raw) return {MapStatus::mismatch, {}, "x part leaves the complement span"};
      auto cdown = coords.y_down(y);
      if (!cdown) return {MapStatus::mismatch, {}, "y part leaves the complement span"};
      if (!ints_in_box(*alpha_raw, B) || !ints_in_box(cdown->free, B))
        return {MapStatus::out_of_box, {}, {}};
      XVector as{to_coeffs(*alpha_raw)};
      YVector cs{to_coeffs(cdown->free), cdown->tor};
      auto gid = lc.ground_index(as, cs);
      if (!gid)
        return {MapStatus::mismatch, {}, "image pair is not a valid complement vertex"};
      out.s.push_back(*gid);
    }
    if (!out.s.empty() && !lc.poset.contains(out.s))
      return {MapStatus::mismatch, {}, "image sequence violates the complement conditions"};
    return out;
  };

  auto backward = [&](const Seq& s) -> std::pair<MapStatus, Frame> {
    Frame u;
    for (std::size_t id : s) {
      const auto& [as, cs] = lc.ground_pairs[id];
      XVector x = coords.x_up(as);
      YVector y = coords.y_up(cs);
      if (!coeffs_in_box(x.c, B) || !coeffs_in_box(y.free, B)) return {MapStatus::out_of_box, {}};
      u.pairs.emplace_back(std::move(x), std::move(y));
    }
    return {MapStatus::ok, std::move(u)};
  };

  BijectionReport rep;
  std::vector<std::pair<const Frame*, Seq>> mapped;
  for (const auto& u : left) {
    auto f = forward(u);
    if (f.st == MapStatus::out_of_box) {
      ++rep.bound_insufficient;
      continue;
    }
    if (f.st == MapStatus::mismatch) {
      rep.failure = f.err;
      return rep;
    }
    auto bk = backward(f.s);
    if (bk.first != MapStatus::ok || !(bk.second == u)) {
      rep.failure = "round trip does not return the input sequence";
      return rep;
    }
    mapped.emplace_back(&u, f.s);
    ++rep.forward_checked;
  }
  for (const Seq& s : lc.poset.elements) {
    auto bk = backward(s);
    if (bk.first == MapStatus::out_of_box) {
      ++rep.bound_insufficient;
      continue;
    }
    if (!left_set.count(bk.second.pairs)) {
      rep.failure = "preimage is not a compatible sequence";
      return rep;
    }
    auto f = forward(bk.second);
    if (f.st != MapStatus::ok || !(f.s == s)) {
      rep.failure = "round trip does not return the complement sequence";
      return rep;
    }
    ++rep.backward_checked;
  }

  if (mapped.size() <= 4000) {
    for (const auto& [ua, sa] : mapped)
      for (const auto& [ub, sb] : mapped)
        if (is_subseq(ua->pairs, ub->pairs) != is_subseq(sa, sb)) {
          rep.failure = "order is not preserved";
          return rep;
        }
  }

  rep.ok = rep.failure.empty();
  return rep;
}

VertexLinkReport wcm_vertex_link_report(const StandardWallPairing& p,
                                        const EnumerationBounds& b) {
  b.validate();
  auto verts = enumerate_kpi_vertices(p, b);
  const std::size_t n = verts.size();
  guard_pair_scan(n, b.face_budget, "link report");
  std::vector<std::size_t> counts(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (kpi_compatible(p, verts[i], verts[j])) {
        ++counts[i];
        ++counts[j];
      }
  VertexLinkReport rep;
  rep.all_nonempty = true;
  for (std::size_t i = 0; i < n; ++i) {
    rep.neighbor_counts.emplace_back(pair_label(verts[i].first, verts[i].second), counts[i]);
    if (counts[i] == 0) rep.all_nonempty = false;
  }
  return rep;
}

}  // namespace wallcx

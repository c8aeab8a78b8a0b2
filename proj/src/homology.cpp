#include "wallcx/homology.hpp"

#include "wallcx/lattice.hpp"
#include "wallcx/normal_form.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wallcx {

namespace {

std::string group_to_string(const HomologyGroup& g) {
  if (g.trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (g.rank == 1) {
    os << "Z";
    first = false;
  } else if (g.rank > 1) {
    os << "Z^" << g.rank;
    first = false;
  }
  for (const auto& t : g.torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t(0));
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ChainBoundaryStack::ChainBoundaryStack(const SimplicialComplex& c) {
  c.validate();
  faces_.resize(c.faces_by_dim.size());
  for (std::size_t d = 0; d < c.faces_by_dim.size(); ++d)
    faces_[d].assign(c.faces_by_dim[d].begin(), c.faces_by_dim[d].end());

  for (std::size_t d = 1; d < faces_.size(); ++d) {
    IntMatrix b = IntMatrix::sparse(faces_[d - 1].size(), faces_[d].size());
    for (std::size_t j = 0; j < faces_[d].size(); ++j) {
      const auto& face = faces_[d][j];
      Int sign = 1;
      for (std::size_t skip = 0; skip < face.size(); ++skip) {
        std::vector<std::size_t> facet;
        for (std::size_t i = 0; i < face.size(); ++i)
          if (i != skip) facet.push_back(face[i]);
        b.set(face_index(d - 1, facet), j, sign);
        sign = -sign;
      }
    }
    boundaries_.push_back(std::move(b));
  }

  /* Boundary of boundary vanishes, checked column by column. */
  for (std::size_t d = 2; d < faces_.size(); ++d) {
    for (const auto& face : faces_[d]) {
      std::map<std::size_t, Int> acc;
      Int outer = 1;
      for (std::size_t skip = 0; skip < face.size(); ++skip) {
        std::vector<std::size_t> facet;
        for (std::size_t i = 0; i < face.size(); ++i)
          if (i != skip) facet.push_back(face[i]);
        Int inner = 1;
        for (std::size_t skip2 = 0; skip2 < facet.size(); ++skip2) {
          std::vector<std::size_t> ridge;
          for (std::size_t i = 0; i < facet.size(); ++i)
            if (i != skip2) ridge.push_back(facet[i]);
          acc[face_index(d - 2, ridge)] += outer * inner;
          inner = -inner;
        }
        outer = -outer;
      }
      for (const auto& [idx, v] : acc) {
        (void)idx;
        if (v != 0) throw std::logic_error("boundary stack: boundary squared is nonzero");
      }
    }
  }
}

const std::vector<std::vector<std::size_t>>& ChainBoundaryStack::faces(std::size_t d) const {
  static const std::vector<std::vector<std::size_t>> none;
  return d < faces_.size() ? faces_[d] : none;
}

std::size_t ChainBoundaryStack::face_index(std::size_t d,
                                           const std::vector<std::size_t>& face) const {
  if (d >= faces_.size()) throw std::invalid_argument("face_index: dimension out of range");
  auto it = std::lower_bound(faces_[d].begin(), faces_[d].end(), face);
  if (it == faces_[d].end() || *it != face)
    throw std::invalid_argument("face_index: no such face");
  return static_cast<std::size_t>(it - faces_[d].begin());
}

IntMatrix ChainBoundaryStack::boundary(std::size_t d) const {
  if (d == 0) throw std::invalid_argument("boundary: dimension must be at least one");
  if (d - 1 < boundaries_.size()) return boundaries_[d - 1];
  return IntMatrix::sparse(chain_rank(d - 1), 0);
}

bool ChainBoundaryStack::is_cycle(std::size_t d, const std::vector<Int>& chain) const {
  if (chain.size() != chain_rank(d)) throw std::invalid_argument("is_cycle: wrong chain length");
  if (d == 0 || d - 1 >= boundaries_.size()) return true;
  for (const Int& v : boundaries_[d - 1].apply(chain))
    if (v != 0) return false;
  return true;
}

bool ChainBoundaryStack::is_boundary(std::size_t d, const std::vector<Int>& chain) const {
  if (chain.size() != chain_rank(d))
    throw std::invalid_argument("is_boundary: wrong chain length");
  if (!is_cycle(d, chain)) throw std::invalid_argument("is_boundary: chain is not a cycle");
  if (d >= boundaries_.size()) {
    for (const Int& v : chain)
      if (v != 0) return false;
    return true;
  }
  return solve_integer(boundaries_[d], chain).has_value();
}

const HomologyGroup& HomologyResult::at(long long d) const {
  static const HomologyGroup trivial{};
  if (d == -1) return minus_one;
  if (d >= 0 && d < static_cast<long long>(groups.size())) return groups[d];
  return trivial;
}

std::string HomologyResult::to_string() const {
  std::ostringstream os;
  if (reduced && !minus_one.trivial()) os << "H_-1 = " << group_to_string(minus_one) << "\n";
  for (std::size_t d = 0; d < groups.size(); ++d)
    os << "H_" << d << " = " << group_to_string(groups[d]) << "\n";
  return os.str();
}

HomologyResult homology(const SimplicialComplex& c, bool reduced, long long max_dim) {
  ChainBoundaryStack s(c);
  const long long top = s.top_dim();
  const long long lim = max_dim >= 0 ? max_dim : top;

  HomologyResult out;
  out.reduced = reduced;
  if (c.empty()) {
    if (reduced) out.minus_one.rank = 1;
    return out;
  }

  /* factors[d] = invariant factors of boundary(d). */
  std::map<long long, std::vector<Int>> factors;
  auto rank_of = [&](long long d) -> long long {
    if (d < 1 || d > top) return 0;
    auto it = factors.find(d);
    if (it == factors.end()) it = factors.emplace(d, snf_invariant_factors(s.boundary(d))).first;
    return static_cast<long long>(it->second.size());
  };

  for (long long d = 0; d <= lim; ++d) {
    HomologyGroup g;
    const long long n = d <= top ? static_cast<long long>(s.chain_rank(d)) : 0;
    g.rank = n - rank_of(d) - rank_of(d + 1);
    if (d + 1 >= 1 && d + 1 <= top) {
      rank_of(d + 1);
      for (const Int& f : factors.at(d + 1))
        if (f > 1) g.torsion.push_back(f);
    }
    out.groups.push_back(std::move(g));
  }
  if (reduced) out.groups[0].rank -= 1;
  return out;
}

HomologyClassSet homology_generators(const ChainBoundaryStack& s, std::size_t d) {
  HomologyClassSet out;
  out.degree = d;
  const std::size_t n = s.chain_rank(d);
  if (n == 0) return out;

  std::vector<std::vector<Int>> cycles;
  if (d == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Int> e(n, 0);
      e[i] = 1;
      cycles.push_back(std::move(e));
    }
  } else {
    cycles = kernel_basis(s.boundary(d));
  }
  const std::size_t rz = cycles.size();
  if (rz == 0) return out;

  IntMatrix zt(n, rz);  // columns are the cycle basis
  for (std::size_t i = 0; i < rz; ++i)
    for (std::size_t j = 0; j < n; ++j) zt.set(j, i, cycles[i][j]);

  IntMatrix bnd = s.boundary(d + 1);
  IntMatrix y(rz, bnd.cols());
  for (std::size_t col = 0; col < bnd.cols(); ++col) {
    std::vector<Int> b(n, 0);
    for (std::size_t row = 0; row < n; ++row) b[row] = bnd.get(row, col);
    auto sol = solve_integer(zt, b);
    if (!sol) throw std::logic_error("homology_generators: boundary escaped the cycle space");
    for (std::size_t row = 0; row < rz; ++row) y.set(row, col, (*sol)[row]);
  }

  SmithDecomposition dec = snf(y);
  IntMatrix linv = inverse_unimodular(dec.l);
  auto chain_of = [&](std::size_t col) {
    std::vector<Int> coords(rz, 0);
    for (std::size_t row = 0; row < rz; ++row) coords[row] = linv.get(row, col);
    return zt.apply(coords);
  };
  const std::size_t nf = dec.invariant_factors.size();
  for (std::size_t i = 0; i < nf; ++i) {
    if (dec.invariant_factors[i] > 1)
      out.torsion_reps.emplace_back(chain_of(i), dec.invariant_factors[i]);
  }
  for (std::size_t i = nf; i < rz; ++i) out.free_reps.push_back(chain_of(i));
  return out;
}

std::vector<std::size_t> vertex_map_by_label(const SimplicialComplex& from,
                                             const SimplicialComplex& to) {
  std::map<std::string, std::size_t> lookup;
  for (std::size_t i = 0; i < to.vertex_labels.size(); ++i) lookup[to.vertex_labels[i]] = i;
  std::vector<std::size_t> out;
  for (const auto& l : from.vertex_labels) {
    auto it = lookup.find(l);
    if (it == lookup.end())
      throw std::invalid_argument("vertex_map_by_label: label missing in target: " + l);
    out.push_back(it->second);
  }
  return out;
}

std::vector<IntMatrix> simplicial_chain_maps(const SimplicialComplex& from,
                                             const SimplicialComplex& to,
                                             const std::vector<std::size_t>& vertex_map,
                                             std::size_t up_to_dim) {
  if (vertex_map.size() != from.vertex_labels.size())
    throw std::invalid_argument("chain map: vertex map has wrong length");
  ChainBoundaryStack dummy_from(from), dummy_to(to);  // face orders
  std::vector<IntMatrix> out;
  for (std::size_t d = 0; d <= up_to_dim; ++d) {
    const auto& src = dummy_from.faces(d);
    const auto& dst = dummy_to.faces(d);
    IntMatrix m = IntMatrix::sparse(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      std::vector<std::size_t> image;
      for (std::size_t v : src[j]) image.push_back(vertex_map.at(v));
      /* Orientation: parity of the sort that orders the image. */
      int inversions = 0;
      bool degenerate = false;
      for (std::size_t a = 0; a < image.size() && !degenerate; ++a)
        for (std::size_t b = a + 1; b < image.size(); ++b) {
          if (image[a] == image[b]) {
            degenerate = true;
            break;
          }
          if (image[a] > image[b]) ++inversions;
        }
      if (degenerate) continue;
      std::sort(image.begin(), image.end());
      std::size_t row;
      try {
        row = dummy_to.face_index(d, image);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("chain map: image of a face is not a face");
      }
      m.set(row, j, (inversions % 2 == 0) ? 1 : -1);
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

std::vector<std::vector<Int>> cycle_basis(const ChainBoundaryStack& s, std::size_t d,
                                          bool reduced) {
  const std::size_t n = s.chain_rank(d);
  if (d == 0) {
    if (!reduced) {
      std::vector<std::vector<Int>> out;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> e(n, 0);
        e[i] = 1;
        out.push_back(std::move(e));
      }
      return out;
    }
    IntMatrix aug(1, n);
    for (std::size_t i = 0; i < n; ++i) aug.set(0, i, 1);
    return kernel_basis(aug);
  }
  return kernel_basis(s.boundary(d));
}

HomologyGroup group_at(const ChainBoundaryStack& s, std::size_t d) {
  HomologyGroup g;
  const long long n = static_cast<long long>(s.chain_rank(d));
  long long r_lo = 0;
  if (d >= 1) r_lo = static_cast<long long>(snf_invariant_factors(s.boundary(d)).size());
  auto up = snf_invariant_factors(s.boundary(d + 1));
  g.rank = n - r_lo - static_cast<long long>(up.size());
  for (const Int& f : up)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

}  // namespace

bool induced_map_is_zero(const ChainBoundaryStack& from, const ChainBoundaryStack& to,
                         const IntMatrix& map_d, std::size_t d, bool reduced) {
  for (const auto& z : cycle_basis(from, d, reduced)) {
    std::vector<Int> image = map_d.apply(z);
    if (!to.is_cycle(d, image))
      throw std::logic_error("induced map: image of a cycle is not a cycle");
    if (!to.is_boundary(d, image)) return false;
  }
  return true;
}

bool induced_map_is_iso(const ChainBoundaryStack& from, const ChainBoundaryStack& to,
                        const IntMatrix& map_d, std::size_t d) {
  if (!(group_at(from, d) == group_at(to, d))) return false;

  auto za = cycle_basis(from, d, false);
  auto zb = cycle_basis(to, d, false);
  const std::size_t rb = zb.size();
  if (rb == 0) return true;  // both groups trivial by the equality above

  const std::size_t nb = to.chain_rank(d);
  IntMatrix zbt(nb, rb);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < nb; ++j) zbt.set(j, i, zb[i][j]);

  IntMatrix bnd = to.boundary(d + 1);
  IntMatrix s(rb, za.size() + bnd.cols());
  auto put_in_coords = [&](const std::vector<Int>& v, std::size_t col) {
    auto sol = solve_integer(zbt, v);
    if (!sol) throw std::logic_error("induced map: cycle escaped the target cycle space");
    for (std::size_t row = 0; row < rb; ++row) s.set(row, col, (*sol)[row]);
  };
  for (std::size_t i = 0; i < za.size(); ++i) {
    std::vector<Int> image = map_d.apply(za[i]);
    if (!to.is_cycle(d, image))
      throw std::logic_error("induced map: image of a cycle is not a cycle");
    put_in_coords(image, i);
  }
  for (std::size_t col = 0; col < bnd.cols(); ++col) {
    std::vector<Int> b(nb, 0);
    for (std::size_t row = 0; row < nb; ++row) b[row] = bnd.get(row, col);
    put_in_coords(b, za.size() + col);
  }

  auto factors = snf_invariant_factors(s);
  if (factors.size() != rb) return false;
  for (const Int& f : factors)
    if (f != 1) return false;
  return true;
}

std::pair<std::vector<std::size_t>, std::size_t> components(const SimplicialComplex& c) {
  const std::size_t n = c.vertex_labels.size();
  UnionFind uf(n);
  if (c.faces_by_dim.size() > 1)
    for (const auto& e : c.faces_by_dim[1]) uf.unite(e[0], e[1]);
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::map<std::size_t, std::size_t> roots;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = uf.find(v);
    auto [it, fresh] = roots.emplace(r, roots.size());
    comp[v] = it->second;
    (void)fresh;
  }
  return {comp, roots.size()};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

std::string ProbeResult::to_string() const {
  std::ostringstream os;
  os << "verdict " << wallcx::to_string(verdict) << "; base bound " << base_bound << "\n";
  for (const auto& d : degrees) {
    os << "degree " << d.degree << ": " << wallcx::to_string(d.verdict);
    if (d.settled_bound >= 0) os << " at bound " << d.settled_bound;
    if (!d.note.empty()) os << " (" << d.note << ")";
    os << "\n";
  }
  for (const auto& b : bounds) {
    os << "bound " << b.bound << ": vertices " << b.vertices << ", faces " << b.total_faces;
    if (b.over_cap) os << ", over work cap";
    os << "\n";
  }
  return os.str();
}

ProbeResult connectivity_probe(const ComplexFamily& family, const ProbeOptions& opt) {
  if (opt.target_degree < -1)
    throw std::invalid_argument("connectivity_probe: degree below -1");
  ProbeResult res;

  std::vector<std::size_t> bound_list;
  for (std::size_t b = opt.initial_bound; b <= opt.initial_bound + opt.budget; ++b)
    bound_list.push_back(b);
  const std::size_t nb = bound_list.size();

  std::vector<std::optional<SimplicialComplex>> built(nb);
  std::vector<bool> attempted(nb, false), unbuildable(nb, false);
  auto attempt = [&](std::size_t i) {
    if (attempted[i]) return;
    attempted[i] = true;
    try {
      built[i] = family(bound_list[i]);
      res.bounds.push_back({bound_list[i], built[i]->vertex_labels.size(),
                            built[i]->total_faces(),
                            built[i]->total_faces() > opt.max_faces});
    } catch (const ComplexTooLarge&) {
      unbuildable[i] = true;
      res.bounds.push_back({bound_list[i], 0, 0, true});
    }
  };
  auto have = [&](std::size_t i) {
    attempt(i);
    return !unbuildable[i];
  };
  auto get = [&](std::size_t i) -> const SimplicialComplex& {
    attempt(i);
    return *built[i];
  };
  auto over_cap = [&](std::size_t i) {
    attempt(i);
    return unbuildable[i] || built[i]->total_faces() > opt.max_faces;
  };
  auto cap_note = [&](std::size_t i) {
    return "work cap reached at bound " + std::to_string(bound_list[i]);
  };

  /* Degree -1: the family must become nonempty. A complex too large to
     build certainly is. */
  std::size_t base = SIZE_MAX;
  bool base_overflow = false;
  for (std::size_t i = 0; i < nb; ++i) {
    attempt(i);
    if (unbuildable[i]) {
      base = i;
      base_overflow = true;
      break;
    }
    if (!built[i]->empty()) {
      base = i;
      break;
    }
  }
  {
    DegreeVerdict dv;
    dv.degree = -1;
    if (base != SIZE_MAX) {
      dv.verdict = Verdict::PASS;
      dv.settled_bound = static_cast<long long>(bound_list[base]);
      res.base_bound = dv.settled_bound;
    } else {
      dv.verdict = Verdict::FAIL;
      dv.note = "empty at every probed bound";
    }
    res.degrees.push_back(dv);
  }

  if (base == SIZE_MAX) {
    for (long long k = 0; k <= opt.target_degree; ++k)
      res.degrees.push_back({k, Verdict::FAIL, -1, "family stayed empty"});
  } else if (base_overflow) {
    for (long long k = 0; k <= opt.target_degree; ++k)
      res.degrees.push_back({k, Verdict::INCONCLUSIVE, -1, cap_note(base)});
  } else {
    /* Degree 0 works on the 1-skeleton; any complex that could be built
       at all is cheap to scan, so only unbuildable bounds stop it. */
    if (opt.target_degree >= 0) {
      DegreeVerdict dv;
      dv.degree = 0;
      auto [base_comp, base_count] = components(get(base));
      (void)base_comp;
      if (base_count <= 1) {
        dv.verdict = Verdict::PASS;
        dv.settled_bound = static_cast<long long>(bound_list[base]);
      } else {
        dv.verdict = Verdict::FAIL;
        dv.note = "components stayed separated";
        for (std::size_t i = base + 1; i < nb; ++i) {
          if (!have(i)) {
            dv.verdict = Verdict::INCONCLUSIVE;
            dv.note = cap_note(i);
            break;
          }
          auto vmap = vertex_map_by_label(get(base), get(i));
          auto [comp, count] = components(get(i));
          (void)count;
          bool one = true;
          for (std::size_t v = 1; v < vmap.size() && one; ++v)
            one = comp[vmap[v]] == comp[vmap[0]];
          if (one) {
            dv.verdict = Verdict::PASS;
            dv.settled_bound = static_cast<long long>(bound_list[i]);
            dv.note.clear();
            break;
          }
        }
      }
      res.degrees.push_back(dv);
    }

    /* Higher degrees need boundary matrices, hence the cap. */
    if (opt.target_degree >= 1) {
      if (over_cap(base)) {
        for (long long k = 1; k <= opt.target_degree; ++k)
          res.degrees.push_back({k, Verdict::INCONCLUSIVE, -1, cap_note(base)});
      } else {
        ChainBoundaryStack base_stack(get(base));
        std::vector<std::optional<ChainBoundaryStack>> stacks(nb);
        for (long long k = 1; k <= opt.target_degree; ++k) {
          DegreeVerdict dv;
          dv.degree = k;
          HomologyClassSet gens = homology_generators(base_stack, static_cast<std::size_t>(k));
          if (gens.class_count() == 0) {
            dv.verdict = Verdict::PASS;
            dv.settled_bound = static_cast<long long>(bound_list[base]);
            res.degrees.push_back(dv);
            continue;
          }
          dv.verdict = Verdict::FAIL;
          dv.note = "classes persisted through the budget";
          for (std::size_t i = base + 1; i < nb; ++i) {
            if (over_cap(i)) {
              dv.verdict = Verdict::INCONCLUSIVE;
              dv.note = cap_note(i);
              break;
            }
            if (!stacks[i]) stacks[i].emplace(get(i));
            auto vmap = vertex_map_by_label(get(base), get(i));
            auto maps = simplicial_chain_maps(get(base), get(i), vmap,
                                              static_cast<std::size_t>(k));
            bool all_die = true;
            auto check = [&](const std::vector<Int>& gen) {
              std::vector<Int> image = maps[static_cast<std::size_t>(k)].apply(gen);
              if (!stacks[i]->is_cycle(static_cast<std::size_t>(k), image))
                throw std::logic_error("connectivity probe: image of a cycle is not a cycle");
              return stacks[i]->is_boundary(static_cast<std::size_t>(k), image);
            };
            for (const auto& gen : gens.free_reps)
              if (!(all_die = all_die && check(gen))) break;
            if (all_die)
              for (const auto& [gen, order] : gens.torsion_reps) {
                (void)order;
                if (!(all_die = all_die && check(gen))) break;
              }
            if (all_die) {
              dv.verdict = Verdict::PASS;
              dv.settled_bound = static_cast<long long>(bound_list[i]);
              dv.note.clear();
              break;
            }
          }
          res.degrees.push_back(dv);
        }
      }
    }
  }

  res.verdict = Verdict::PASS;
  for (const auto& d : res.degrees) {
    if (d.verdict == Verdict::FAIL) {
      res.verdict = Verdict::FAIL;
      break;
    }
    if (d.verdict == Verdict::INCONCLUSIVE) res.verdict = Verdict::INCONCLUSIVE;
  }
  return res;
}

}  // namespace wallcx

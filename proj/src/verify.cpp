#include "wallcx/verify.hpp"

#include "wallcx/lattice.hpp"
#include "wallcx/seq_poset.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wallcx {

namespace {

const char* verdict_word(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

/* Collects a verdict. Keeps the first failure note; a resource cap only
   downgrades PASS, never hides a FAIL. An untouched recorder fails, so a
   check that silently enumerates nothing cannot slip through green. */
struct Recorder {
  CheckResult res;
  std::size_t checked = 0;

  Recorder(std::string id, std::string claim, std::string params) {
    res.id = std::move(id);
    res.claim = std::move(claim);
    res.parameters = std::move(params);
    res.verdict = Verdict::PASS;
  }
  void fail(const std::string& note) {
    if (res.verdict != Verdict::FAIL) {
      res.verdict = Verdict::FAIL;
      res.note = note;
    }
  }
  void capped(const std::string& note) {
    if (res.verdict == Verdict::PASS) {
      res.verdict = Verdict::INCONCLUSIVE;
      res.note = note;
    }
  }
  void require(bool ok, const std::string& note) {
    ++checked;
    if (!ok) fail(note);
  }
  CheckResult done() {
    if (checked == 0 && res.verdict == Verdict::PASS)
      fail("the check never examined anything");
    return res;
  }
};

bool next_box(std::vector<coeff_t>& c, coeff_t bound) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < bound) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = -bound;
      return true;
    }
  }
  return false;
}

bool next_bits(std::vector<std::uint8_t>& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) {
      t[i] = 1;
      for (std::size_t j = 0; j < i; ++j) t[j] = 0;
      return true;
    }
  }
  return false;
}

std::vector<XVector> x_box(std::size_t g, coeff_t bound) {
  std::vector<XVector> out;
  std::vector<coeff_t> c(g, -bound);
  do {
    out.push_back(XVector{c});
  } while (next_box(c, bound));
  return out;
}

std::vector<YVector> y_box(std::size_t g, coeff_t bound) {
  std::vector<YVector> out;
  std::vector<coeff_t> f(g, -bound);
  do {
    std::vector<std::uint8_t> t(g, 0);
    do {
      out.push_back(YVector{f, t});
    } while (next_bits(t));
  } while (next_box(f, bound));
  return out;
}

std::string range_str(coeff_t bound) {
  std::ostringstream o;
  o << "coeffs=[-" << bound << "," << bound << "]";
  return o.str();
}

}  // namespace

bool VerificationReport::any(Verdict v) const {
  for (const auto& c : checks)
    if (c.verdict == v) return true;
  return false;
}

int VerificationReport::exit_code() const {
  if (any(Verdict::FAIL)) return 1;
  if (any(Verdict::INCONCLUSIVE)) return 2;
  return 0;
}

std::string VerificationReport::to_text(bool timings) const {
  std::ostringstream o;
  o << "suite: " << suite << "\n";
  o << "seed: " << seed << "\n";
  o << "budget: " << budget << "\n";
  o << "checks: " << checks.size() << "\n";
  std::size_t pass = 0, fail = 0, inc = 0;
  for (const auto& c : checks) {
    (c.verdict == Verdict::PASS ? pass : c.verdict == Verdict::FAIL ? fail : inc) += 1;
    o << "[" << verdict_word(c.verdict) << "] " << c.id << "\n";
    o << "    claim: " << c.claim << "\n";
    o << "    params: " << c.parameters << "\n";
    if (!c.note.empty()) o << "    note: " << c.note << "\n";
    if (timings)
      o << "    time: " << std::fixed << std::setprecision(3) << c.seconds << "s\n";
  }
  o << "summary: pass=" << pass << " fail=" << fail << " inconclusive=" << inc << "\n";
  int code = exit_code();
  o << "verdict: " << (code == 0 ? "PASS" : code == 1 ? "FAIL" : "INCONCLUSIVE") << "\n";
  return o.str();
}

CheckResult check_generator_tables(std::size_t max_g) {
  Recorder r("algebra.generator-tables",
             "the standard dual bases satisfy the defining pairing tables",
             "g<=" + std::to_string(max_g));
  for (std::size_t g = 0; g <= max_g; ++g) {
    StandardWallPairing p(g);
    std::ostringstream at;
    for (std::size_t i = 0; i < g; ++i) {
      r.require(p.alpha(p.y_gen(i)) == 0, "alpha(y) nonzero at g=" + std::to_string(g));
      r.require(p.alpha(p.z_gen(i)) == 0, "alpha(z) nonzero at g=" + std::to_string(g));
      for (std::size_t j = 0; j < g; ++j) {
        const Int want = (i == j) ? 1 : 0;
        const int wantq = (i == j) ? 1 : 0;
        std::string where = " at g=" + std::to_string(g) + " i=" + std::to_string(i) +
                            " j=" + std::to_string(j);
        r.require(p.lambda(p.x_gen(i), p.y_gen(j)) == want, "lambda(x,y) table" + where);
        r.require(p.lambda(p.x_gen(i), p.z_gen(j)) == 0, "lambda(x,z) table" + where);
        r.require(p.qform(p.y_gen(i), p.z_gen(j)) == wantq, "q(y,z) table" + where);
        r.require(p.qform(p.z_gen(j), p.y_gen(i)) == wantq, "q(z,y) table" + where);
        r.require(p.qform(p.y_gen(i), p.y_gen(j)) == 0, "q(y,y) table" + where);
        r.require(p.qform(p.z_gen(i), p.z_gen(j)) == 0, "q(z,z) table" + where);
      }
    }
    if (g == 0) ++r.checked;  // rank zero holds vacuously
  }
  return r.done();
}

CheckResult check_lambda_bilinear(std::size_t max_g, coeff_t bound) {
  Recorder r("algebra.lambda-bilinear",
             "the main pairing is bilinear over bounded coefficient vectors",
             "g<=" + std::to_string(max_g) + " " + range_str(bound) +
                 " pairs exhaustive, sum triples exhaustive at g<=2");
  for (std::size_t g = 0; g <= max_g; ++g) {
    StandardWallPairing p(g);
    const auto xs = x_box(g, bound);
    const auto ys = y_box(g, bound);
    for (const auto& x : xs) {
      std::vector<Int> row(g);
      for (std::size_t j = 0; j < g; ++j) row[j] = p.lambda(x, p.y_gen(j));
      for (const auto& y : ys) {
        const Int direct = p.lambda(x, y);
        Int via_x = 0, via_y = 0;
        for (std::size_t i = 0; i < g; ++i) via_x += Int(x.c[i]) * p.lambda(p.x_gen(i), y);
        for (std::size_t j = 0; j < g; ++j) via_y += Int(y.free[j]) * row[j];
        r.require(direct == via_x && direct == via_y,
                  "generator expansion broke at g=" + std::to_string(g) + " x=" +
                      x.to_string() + " y=" + y.to_string());
      }
    }
    if (g <= 2) {
      for (const auto& x : xs)
        for (const auto& xp : xs) {
          const XVector sum = x + xp;
          for (const auto& y : ys)
            r.require(p.lambda(sum, y) == p.lambda(x, y) + p.lambda(xp, y),
                      "additivity in the first slot broke at g=" + std::to_string(g));
        }
      for (const auto& y : ys)
        for (const auto& yp : ys) {
          const YVector sum = y + yp;
          for (const auto& x : xs)
            r.require(p.lambda(x, sum) == p.lambda(x, y) + p.lambda(x, yp),
                      "additivity in the second slot broke at g=" + std::to_string(g));
        }
    }
  }
  return r.done();
}

CheckResult check_q_bilinear(std::size_t max_g, coeff_t bound) {
  Recorder r("algebra.q-bilinear",
             "the torsion pairing is symmetric, biadditive, and alternating",
             "g<=" + std::to_string(max_g) + " " + range_str(bound) +
                 " pairs exhaustive, sum triples exhaustive at g<=2");
  for (std::size_t g = 0; g <= max_g; ++g) {
    StandardWallPairing p(g);
    const auto ys = y_box(g, bound);
    for (const auto& a : ys)
      r.require(p.qform(a, a) == 0, "q(a,a) nonzero at g=" + std::to_string(g));
    for (const auto& b : ys) {
      std::vector<int> qy(g), qz(g);
      for (std::size_t j = 0; j < g; ++j) {
        qy[j] = p.qform(p.y_gen(j), b);
        qz[j] = p.qform(p.z_gen(j), b);
      }
      for (const auto& a : ys) {
        int expand = 0;
        for (std::size_t j = 0; j < g; ++j) {
          expand ^= (static_cast<int>(a.free[j] & 1) * qy[j]) & 1;
          expand ^= (a.tor[j] * qz[j]) & 1;
        }
        const int direct = p.qform(a, b);
        r.require(direct == p.qform(b, a), "symmetry broke at g=" + std::to_string(g));
        r.require(direct == expand,
                  "generator expansion broke at g=" + std::to_string(g) + " a=" +
                      a.to_string() + " b=" + b.to_string());
      }
    }
    if (g <= 2) {
      for (const auto& a : ys)
        for (const auto& b : ys) {
          const YVector sum = a + b;
          for (const auto& c : ys)
            r.require(p.qform(sum, c) == (p.qform(a, c) ^ p.qform(b, c)),
                      "additivity broke at g=" + std::to_string(g));
        }
    }
  }
  return r.done();
}

CheckResult check_alpha_summation(std::size_t max_g, coeff_t bound) {
  Recorder r("algebra.alpha-summation",
             "the quadratic map picks up the torsion pairing under addition",
             "g<=" + std::to_string(max_g) + " " + range_str(bound) + " pairs exhaustive");
  for (std::size_t g = 0; g <= max_g; ++g) {
    StandardWallPairing p(g);
    const auto ys = y_box(g, bound);
    for (const auto& a : ys)
      for (const auto& b : ys)
        r.require(p.alpha(a + b) == (p.alpha(a) ^ p.alpha(b) ^ p.qform(a, b)),
                  "sum formula broke at g=" + std::to_string(g) + " a=" + a.to_string() +
                      " b=" + b.to_string());
  }
  return r.done();
}

CheckResult check_rho_uniqueness(std::size_t max_g) {
  Recorder r("algebra.rho-uniqueness",
             "exactly one torsion-valued homomorphism is dual to the main pairing",
             "g<=" + std::to_string(max_g) + " all 2^(g*g) candidates");
  for (std::size_t g = 0; g <= max_g; ++g)
    r.require(verify_rho_uniqueness(StandardWallPairing(g)),
              "uniqueness broke at g=" + std::to_string(g));
  return r.done();
}

CheckResult check_complement_rank(std::size_t g, std::size_t trials, coeff_t bound,
                                  std::uint64_t seed) {
  std::ostringstream params;
  params << "g=" << g << " trials=" << trials << " " << range_str(bound)
         << " seed=" << seed;
  Recorder r("algebra.complement-rank",
             "splitting off dual pairs leaves a standard pairing of complementary rank",
             params.str());
  StandardWallPairing p(g);
  Rng rng(seed);

  auto in_box = [&](const std::vector<coeff_t>& c) {
    for (coeff_t v : c)
      if (v < -bound || v > bound) return false;
    return true;
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t k = 1 + rng.index(g);

    /* Seed pair: signed coordinate axes on a random permutation. Moves
       below keep the pairing matrix equal to the identity and are skipped
       whenever they would leave the coefficient box. */
    std::vector<std::size_t> perm(g);
    for (std::size_t i = 0; i < g; ++i) perm[i] = i;
    rng.shuffle(perm);
    std::vector<XVector> v;
    std::vector<YVector> w;
    for (std::size_t i = 0; i < k; ++i) {
      const coeff_t s = rng.bit() ? 1 : -1;
      XVector x = p.zero_x();
      YVector y = p.zero_y();
      x.c[perm[i]] = s;
      y.free[perm[i]] = s;
      v.push_back(x);
      w.push_back(y);
    }
    for (std::size_t step = 0; step < 6 * g; ++step) {
      const std::size_t op = rng.index(3);
      std::size_t i = rng.index(k), j = rng.index(k);
      if (op == 0 && k >= 2 && i != j) {
        const coeff_t s = rng.bit() ? 1 : -1;
        XVector xi = v[i] + s * v[j];
        YVector yj = w[j] + (-s) * w[i];
        if (in_box(xi.c) && in_box(yj.free)) {
          v[i] = xi;
          w[j] = yj;
        }
      } else if (op == 1 && i != j) {
        std::swap(v[i], v[j]);
        std::swap(w[i], w[j]);
      } else if (op == 2) {
        v[i] = coeff_t(-1) * v[i];
        w[i] = coeff_t(-1) * w[i];
      }
    }
    /* Duals keep their pairing when shifted along the kernel of V. */
    if (k < g) {
      IntMatrix vm(k, g);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < g; ++c) vm.set(i, c, v[i].c[c]);
      const auto ker = kernel_basis(vm);
      for (std::size_t j = 0; j < k; ++j)
        for (const auto& u : ker) {
          const coeff_t s = static_cast<coeff_t>(rng.uniform(-1, 1));
          if (s == 0) continue;
          YVector cand = w[j];
          for (std::size_t c = 0; c < g; ++c)
            cand.free[c] += s * static_cast<coeff_t>(u[c].convert_to<long long>());
          if (in_box(cand.free)) w[j] = cand;
        }
    }
    for (auto& y : w)
      for (std::size_t c = 0; c < g; ++c) y.tor[c] = static_cast<std::uint8_t>(rng.bit());

    SubspacePair sub;
    sub.v = v;
    sub.w = w;
    std::optional<ComplementResult> got;
    try {
      got.emplace(complement(p, sub));
    } catch (const std::exception& e) {
      r.fail("trial " + std::to_string(trial) + ": " + e.what());
      ++r.checked;
      continue;
    }
    const ComplementResult& out = *got;

    const std::size_t m = g - k;
    const std::string at = "trial " + std::to_string(trial) + ": ";
    r.require(out.pairing.rank() == m && out.x_basis.size() == m &&
                  out.y_basis.size() == m && out.z_basis.size() == m,
              at + "complement has the wrong rank");
    for (std::size_t i = 0; i < m; ++i) {
      r.require(p.alpha(out.y_basis[i]) == 0, at + "alpha nonzero on the new basis");
      for (std::size_t j = 0; j < m; ++j) {
        r.require(p.lambda(out.x_basis[i], out.y_basis[j]) == Int(i == j ? 1 : 0),
                  at + "lambda tables broke on the new bases");
        r.require(p.qform(out.y_basis[i], out.y_basis[j]) == 0,
                  at + "q nonzero between new free vectors");
      }
      for (std::size_t l = 0; l < k; ++l) {
        r.require(p.lambda(sub.v[l], out.y_basis[i]) == 0,
                  at + "new free vectors fail to annihilate the split part");
        r.require(p.qform(out.y_basis[i], sub.w[l]) == 0,
                  at + "new free vectors fail to q-annihilate the split part");
        r.require(p.lambda(out.x_basis[i], sub.w[l]) == 0,
                  at + "new X vectors fail to annihilate the split part");
      }
    }
    PairingPresentation induced =
        presentation_from_bases(p, out.x_basis, out.y_basis, out.z_basis);
    StandardizeResult sr = standardize(induced);
    r.require(sr.ok, at + "presentation does not standardize: " + sr.reason);
    if (sr.ok) {
      PairingPresentation normal = apply_witness(induced, sr.witness);
      PairingPresentation expect = presentation_of(StandardWallPairing(m));
      r.require(normal.lambda_matrix == expect.lambda_matrix &&
                    normal.q_matrix == expect.q_matrix &&
                    normal.alpha_gens == expect.alpha_gens,
                at + "standardized presentation is not the standard one");
    }
  }
  return r.done();
}

CheckResult check_torsion_duality(std::size_t max_g, std::size_t trials,
                                  std::uint64_t seed) {
  std::ostringstream params;
  params << "g<=" << max_g << " trials=" << trials << " seed=" << seed;
  Recorder r("algebra.torsion-duality",
             "the torsion pairing against a free complement has an invertible matrix",
             params.str());
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t g = 1 + rng.index(max_g);
    StandardWallPairing p(g);
    IntMatrix m = IntMatrix::identity(g);
    for (std::size_t step = 0; step < 4 * g; ++step) {
      std::size_t i = rng.index(g), j = rng.index(g);
      switch (rng.index(3)) {
        case 0:
          if (i != j) {
            const Int s = rng.bit() ? 1 : -1;
            for (std::size_t c = 0; c < g; ++c) m.add_to(i, c, s * m.get(j, c));
          }
          break;
        case 1:
          if (i != j)
            for (std::size_t c = 0; c < g; ++c) {
              Int tmp = m.get(i, c);
              m.set(i, c, m.get(j, c));
              m.set(j, c, tmp);
            }
          break;
        default:
          for (std::size_t c = 0; c < g; ++c) m.set(i, c, -m.get(i, c));
      }
    }
    std::vector<YVector> ys;
    for (std::size_t i = 0; i < g; ++i) {
      YVector y = p.zero_y();
      for (std::size_t c = 0; c < g; ++c)
        y.free[c] = static_cast<coeff_t>(m.get(i, c).convert_to<long long>());
      for (std::size_t c = 0; c < g; ++c) y.tor[c] = static_cast<std::uint8_t>(rng.bit());
      ys.push_back(y);
    }
    try {
      r.require(torsion_duality(p, ys),
                "matrix not invertible at trial " + std::to_string(trial) + " g=" +
                    std::to_string(g));
    } catch (const std::exception& e) {
      r.fail("trial " + std::to_string(trial) + ": " + e.what());
      ++r.checked;
    }
  }
  return r.done();
}

SequencePoset random_chain_poset(Rng& rng, std::size_t max_ground) {
  if (max_ground < 3 || max_ground > 26)
    throw std::invalid_argument("random_chain_poset: ground size must be in [3,26]");
  const std::size_t n = 3 + rng.index(max_ground - 2);
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < n; ++i) ground.push_back(std::string(1, char('a' + i)));
  const std::size_t gens = 2 + rng.index(2);
  std::vector<Seq> generators;
  for (std::size_t t = 0; t < gens; ++t) {
    const std::size_t len = std::min(n, std::size_t(2) + rng.index(2));
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    rng.shuffle(idx);
    generators.push_back(Seq(idx.begin(), idx.begin() + static_cast<long>(len)));
  }
  return closure(std::move(ground), generators);
}

namespace {

std::vector<HomologyGroup> trimmed_groups(const SimplicialComplex& c) {
  auto groups = homology(c).groups;
  while (!groups.empty() && groups.back().trivial()) groups.pop_back();
  return groups;
}

std::string groups_str(const std::vector<HomologyGroup>& gs) {
  std::ostringstream o;
  o << "[";
  for (std::size_t d = 0; d < gs.size(); ++d) {
    if (d) o << ", ";
    o << "rank " << gs[d].rank;
    if (!gs[d].torsion.empty()) {
      o << " torsion (";
      for (std::size_t i = 0; i < gs[d].torsion.size(); ++i)
        o << (i ? " " : "") << gs[d].torsion[i];
      o << ")";
    }
  }
  o << "]";
  return o.str();
}

std::size_t vertex_id_of(const SimplicialComplex& c, const std::string& label) {
  for (std::size_t i = 0; i < c.vertex_labels.size(); ++i)
    if (c.vertex_labels[i] == label) return i;
  throw std::logic_error("poset element is missing from its order complex");
}

}  // namespace

CheckResult check_link_suspension(std::size_t instances, std::uint64_t seed) {
  std::ostringstream params;
  params << "instances=" << instances << " ground<=6 v-length<=2 seed=" << seed;
  Recorder r("posets.link-suspension",
             "vertex links in chain posets match the suspended extension poset in homology",
             params.str());
  Rng rng(seed);
  std::size_t nonempty_links = 0;
  for (std::size_t inst = 0; inst < instances; ++inst) {
    const SequencePoset f = random_chain_poset(rng, 6);
    const SimplicialComplex oc = order_complex(f);
    for (const auto& v : f.elements) {
      if (v.size() > 2) continue;
      const SimplicialComplex link = vertex_link(oc, vertex_id_of(oc, f.label_of(v)));
      SequencePoset fv = below(f, v);
      SimplicialComplex rhs = order_complex(adjoin(fv, v.size()));
      for (std::size_t i = 1; i < v.size(); ++i) rhs = suspension(rhs);
      const auto left = trimmed_groups(link);
      const auto right = trimmed_groups(rhs);
      if (!link.empty()) ++nonempty_links;
      r.require(left == right, "instance " + std::to_string(inst) + " v=" +
                                   f.label_of(v) + ": link " + groups_str(left) +
                                   " vs suspension " + groups_str(right));
    }
  }
  if (nonempty_links == 0) r.fail("every probed link was empty");
  return r.done();
}

CheckResult check_extendable_inclusion(std::size_t instances, std::uint64_t seed) {
  std::ostringstream params;
  params << "instances=" << instances << " ground<=6 v-length<=2 seed=" << seed;
  Recorder r("posets.extendable-inclusion",
             "inclusions of extendable-prefix subposets vanish on reduced homology",
             params.str());
  Rng rng(seed);
  std::size_t nontrivial = 0;
  for (std::size_t inst = 0; inst < instances; ++inst) {
    const SequencePoset f = random_chain_poset(rng, 6);
    const SimplicialComplex oc = order_complex(f);
    const ChainBoundaryStack to_stack(oc);
    for (const auto& v : f.elements) {
      if (v.size() > 2) continue;
      const SequencePoset fv = below(f, v);
      if (fv.elements.empty()) {
        ++r.checked;
        continue;
      }
      const SimplicialComplex from_c = order_complex(fv);
      const std::string at =
          "instance " + std::to_string(inst) + " v=" + f.label_of(v);
      std::vector<std::size_t> vmap;
      try {
        vmap = vertex_map_by_label(from_c, oc);
      } catch (const std::exception&) {
        r.fail(at + ": the extendable subposet is not a subposet");
        continue;
      }
      const std::size_t top = static_cast<std::size_t>(from_c.dim());
      const auto maps = simplicial_chain_maps(from_c, oc, vmap, top);
      const ChainBoundaryStack from_stack(from_c);
      const HomologyResult hred = homology(from_c, true);
      for (std::size_t d = 0; d <= top; ++d) {
        /* A trivial reduced group maps to zero with nothing to verify. */
        if (hred.at(static_cast<long long>(d)).trivial()) {
          ++r.checked;
          continue;
        }
        ++nontrivial;
        r.require(induced_map_is_zero(from_stack, to_stack, maps[d], d, true),
                  at + ": inclusion is nonzero in degree " + std::to_string(d));
      }
    }
  }
  if (nontrivial == 0) r.fail("no instance produced a subposet with reduced cycles");
  return r.done();
}

CheckResult check_retraction(std::size_t max_g, const EnumerationBounds& b) {
  std::ostringstream params;
  params << "g<=" << max_g << " bound=" << b.coeff_bound;
  Recorder r("posets.retraction",
             "dropping unpaired entries retracts the mixed poset onto the fully paired part",
             params.str());
  for (std::size_t g = 0; g <= max_g; ++g) {
    StandardWallPairing p(g);
    PairSequencePoset m = build_M(p, b);
    PairSequencePoset l = build_L(p, b);
    PairSequencePoset f0 = filtration(m, 0);
    const std::string at = "g=" + std::to_string(g) + ": ";

    for (const auto& s : l.poset.elements) {
      const Frame fr = l.frame_of(s);
      r.require(m.seq_of(fr).has_value(), at + "paired element missing from the mixed poset");
      r.require(retraction_h(fr) == fr, at + "retraction moves a fully paired element");
    }

    std::vector<std::pair<Seq, Seq>> h_map;  // (element, retracted element in l's indexing)
    for (const auto& s : f0.poset.elements) {
      const Frame fr = f0.frame_of(s);
      const Frame h = retraction_h(fr);
      auto ls = l.seq_of(h);
      r.require(ls.has_value() && l.poset.contains(*ls),
                at + "retracted frame left the paired poset");
      bool shrinks = h.pairs.size() <= fr.pairs.size();
      if (shrinks) {
        /* j(h(z)) <= z: the retracted pair list embeds in the original. */
        std::size_t i = 0;
        for (const auto& pr : fr.pairs)
          if (i < h.pairs.size() && h.pairs[i] == pr) ++i;
        shrinks = (i == h.pairs.size());
      }
      r.require(shrinks, at + "retraction does not sit below the identity");
      if (ls) h_map.push_back({s, *ls});
    }
    for (const auto& [sa, ha] : h_map)
      for (const auto& [sb, hb] : h_map)
        if (is_ordered_sublist(sa, sb))
          r.require(is_ordered_sublist(ha, hb), at + "retraction is not monotone");
    if (g == 0) ++r.checked;
  }
  return r.done();
}

CheckResult check_restriction_identities(std::size_t max_g, const EnumerationBounds& b) {
  std::ostringstream params;
  params << "g<=" << max_g << " bound=" << b.coeff_bound;
  Recorder r("posets.restriction-identities",
             "the mixed poset restricts to the unimodular complex and the paired poset",
             params.str());
  for (std::size_t g = 0; g <= max_g; ++g) {
    StandardWallPairing p(g);
    PairSequencePoset m = build_M(p, b);
    PairSequencePoset l = build_L(p, b);
    SimplicialComplex u = build_unimodular_complex(g, b);
    const std::string at = "g=" + std::to_string(g) + ": ";

    std::set<std::vector<std::string>> zero_slices, u_faces;
    std::set<std::vector<std::string>> mixed_pure, l_frames;
    for (const auto& s : m.poset.elements) {
      const Frame fr = m.frame_of(s);
      bool all_zero = true, none_zero = true;
      for (const auto& [x, y] : fr.pairs) (y.is_zero() ? none_zero : all_zero) = false;
      if (all_zero) {
        std::vector<std::string> xs;
        for (const auto& [x, y] : fr.pairs) xs.push_back(x.to_string());
        std::sort(xs.begin(), xs.end());
        zero_slices.insert(xs);
      }
      if (none_zero) {
        std::vector<std::string> ps;
        for (const auto& [x, y] : fr.pairs) ps.push_back(pair_label(x, y));
        mixed_pure.insert(ps);
      }
    }
    for (const auto& layer : u.faces_by_dim)
      for (const auto& face : layer) {
        std::vector<std::string> xs;
        for (std::size_t id : face) xs.push_back(u.vertex_labels[id]);
        std::sort(xs.begin(), xs.end());
        u_faces.insert(xs);
      }
    for (const auto& s : l.poset.elements) {
      const Frame fr = l.frame_of(s);
      std::vector<std::string> ps;
      for (const auto& [x, y] : fr.pairs) ps.push_back(pair_label(x, y));
      l_frames.insert(ps);
    }
    r.require(zero_slices == u_faces,
              at + "zero-partner slice disagrees with the unimodular complex");
    r.require(mixed_pure == l_frames,
              at + "fully paired slice disagrees with the paired poset");
  }
  return r.done();
}

CheckResult check_splitting_bijection(std::size_t g, const EnumerationBounds& b) {
  std::ostringstream params;
  params << "g=" << g << " bound=" << b.coeff_bound;
  Recorder r("posets.splitting-bijection",
             "splitting off a dual pair matches the tagged complement poset both ways",
             params.str());
  StandardWallPairing p(g);
  std::vector<std::pair<std::vector<XVector>, std::vector<YVector>>> cases;
  for (std::size_t i = 0; i < g; ++i)
    cases.push_back({{p.x_gen(i)}, {p.y_gen(i)}});
  {
    std::vector<XVector> v;
    std::vector<YVector> w;
    for (std::size_t i = 0; i < g; ++i) {
      v.push_back(p.x_gen(i));
      w.push_back(p.y_gen(i));
    }
    cases.push_back({v, w});
  }
  std::size_t matched = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const BijectionReport rep = equivalence1_map(p, cases[i].first, cases[i].second, b);
    const std::string at = "case " + std::to_string(i) + ": ";
    r.require(rep.ok, at + rep.failure);
    if (rep.bound_insufficient > 0)
      r.capped(at + std::to_string(rep.bound_insufficient) +
               " images left the coefficient box");
    matched += rep.forward_checked + rep.backward_checked;
  }
  if (matched == 0) r.fail("no elements were matched in either direction");
  return r.done();
}

CheckResult check_link_identification(std::size_t g, const EnumerationBounds& b) {
  std::ostringstream params;
  params << "g=" << g << " bound=" << b.coeff_bound;
  Recorder r("posets.link-identification",
             "elements compatible with a paired simplex match its complement poset",
             params.str());
  StandardWallPairing p(g);
  std::vector<Frame> cases;
  for (std::size_t i = 0; i < g; ++i) cases.push_back(Frame{{{p.x_gen(i), p.y_gen(i)}}});
  {
    Frame full;
    for (std::size_t i = 0; i < g; ++i) full.pairs.push_back({p.x_gen(i), p.y_gen(i)});
    cases.push_back(full);
  }
  std::size_t matched = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const BijectionReport rep = link_identification_check(p, cases[i], b);
    const std::string at = "case " + std::to_string(i) + ": ";
    r.require(rep.ok, at + rep.failure);
    if (rep.bound_insufficient > 0)
      r.capped(at + std::to_string(rep.bound_insufficient) +
               " images left the coefficient box");
    matched += rep.forward_checked + rep.backward_checked;
  }
  if (matched == 0) r.fail("no elements were matched in either direction");
  return r.done();
}

CheckResult check_sphere_boundaries(std::size_t max_k) {
  Recorder r("complexes.sphere-boundaries",
             "simplex boundaries have the homology of spheres",
             "k<=" + std::to_string(max_k));
  for (std::size_t k = 1; k <= max_k; ++k) {
    const HomologyResult h = homology(sphere_boundary(k));
    std::vector<HomologyGroup> expect;
    if (k == 1) {
      expect = {HomologyGroup{2, {}}};
    } else {
      expect.assign(k, HomologyGroup{0, {}});
      expect.front().rank = 1;
      expect.back().rank = 1;
    }
    r.require(h.groups == expect, "wrong homology for the boundary of the " +
                                      std::to_string(k) + "-simplex");
  }
  return r.done();
}

CheckResult check_projective_plane() {
  Recorder r("complexes.projective-plane",
             "the projective plane fixture carries a single order-two class in degree one",
             "six vertex triangulation");
  const HomologyResult h = homology(projective_plane());
  const std::vector<HomologyGroup> expect = {
      HomologyGroup{1, {}}, HomologyGroup{0, {Int(2)}}, HomologyGroup{0, {}}};
  r.require(h.groups == expect, "wrong homology for the projective plane");
  return r.done();
}

CheckResult check_euler_identity() {
  Recorder r("complexes.euler-identity",
             "the face-count Euler characteristic equals the alternating Betti sum",
             "fixture roster");
  EnumerationBounds b1;
  b1.coeff_bound = 1;
  std::vector<std::pair<std::string, SimplicialComplex>> roster;
  for (std::size_t k = 2; k <= 4; ++k)
    roster.push_back({"simplex boundary " + std::to_string(k), sphere_boundary(k)});
  roster.push_back({"projective plane", projective_plane()});
  roster.push_back({"suspended projective plane", suspension(projective_plane())});
  roster.push_back({"pair complex g=1", build_kpi(StandardWallPairing(1), b1)});
  roster.push_back({"pair complex g=2", build_kpi(StandardWallPairing(2), b1)});
  roster.push_back({"unimodular complex rank 2", build_unimodular_complex(2, b1)});
  roster.push_back({"unimodular complex rank 3", build_unimodular_complex(3, b1)});
  roster.push_back(
      {"paired order complex g=2", order_complex(build_L(StandardWallPairing(2), b1).poset)});
  for (const auto& [name, c] : roster) {
    const HomologyResult h = homology(c);
    long long alt = 0, sign = 1;
    for (const auto& grp : h.groups) {
      alt += sign * grp.rank;
      sign = -sign;
    }
    r.require(alt == euler_characteristic(c), "identity broke on: " + name);
  }
  return r.done();
}

CheckResult check_family_connectivity(ProbeFamily fam, std::size_t g, long long degree,
                                      std::size_t initial_bound, std::size_t budget) {
  const std::string fam_word = fam == ProbeFamily::unimodular ? "unimodular" : "pair";
  const std::string id = "connectivity." + fam_word + "-rank" + std::to_string(g) +
                         (degree < 0 ? "-nonempty" : "-connected");
  const std::string claim =
      fam == ProbeFamily::unimodular
          ? (degree < 0 ? "the rank-" + std::to_string(g) +
                              " unimodular complex is nonempty at the base bound"
                        : "the rank-" + std::to_string(g) +
                              " unimodular complex is path connected under expanding bounds")
          : (degree < 0 ? "the rank-" + std::to_string(g) +
                              " pair complex is nonempty at the base bound"
                        : "the rank-" + std::to_string(g) +
                              " pair complex is path connected under expanding bounds");
  const std::size_t maxdim = degree <= 0 ? 1 : 3;
  std::ostringstream params;
  params << "g=" << g << " start=" << initial_bound << " budget=" << budget
         << " maxdim=" << maxdim;
  Recorder r(id, claim, params.str());

  ComplexFamily family = [fam, g, maxdim](std::size_t bound) {
    EnumerationBounds eb;
    eb.coeff_bound = static_cast<coeff_t>(bound);
    eb.max_dim = maxdim;
    if (fam == ProbeFamily::unimodular) return build_unimodular_complex(g, eb);
    return build_kpi(StandardWallPairing(g), eb);
  };
  ProbeOptions po;
  po.target_degree = degree;
  po.initial_bound = initial_bound;
  po.budget = budget;
  const ProbeResult res = connectivity_probe(family, po);
  r.checked += res.degrees.size();
  if (res.verdict != Verdict::PASS) {
    std::string note;
    for (const auto& d : res.degrees)
      if (d.verdict != Verdict::PASS) {
        if (!note.empty()) note += "; ";
        note += "degree " + std::to_string(d.degree) + ": " + d.note;
      }
    if (res.verdict == Verdict::FAIL)
      r.fail(note);
    else
      r.capped(note);
  }
  return r.done();
}

std::vector<std::string> suite_names() {
  return {"algebra", "posets", "complexes", "connectivity", "all"};
}

namespace {

std::uint64_t salted(std::uint64_t seed, const char* tag) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char* c = tag; *c; ++c) {
    h ^= static_cast<unsigned char>(*c);
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

std::size_t pool_size(const SuiteOptions& opt, std::size_t jobs) {
  std::size_t w = opt.workers;
  if (w == 0) {
    if (const char* env = std::getenv("WALLCX_WORKERS")) {
      char* end = nullptr;
      const unsigned long parsed = std::strtoul(env, &end, 10);
      if (end && *end == '\0' && parsed > 0) w = static_cast<std::size_t>(parsed);
    }
    if (w == 0) w = 1;
  }
  return std::min(std::max<std::size_t>(w, 1), std::max<std::size_t>(jobs, 1));
}

}  // namespace

VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite: " + suite);

  EnumerationBounds b1;
  b1.coeff_bound = 1;
  const std::uint64_t seed = opt.seed;

  std::vector<std::function<CheckResult()>> jobs;
  std::vector<std::string> ids;
  auto add = [&](std::string id, std::function<CheckResult()> fn) {
    ids.push_back(std::move(id));
    jobs.push_back(std::move(fn));
  };
  const bool all = suite == "all";

  if (all || suite == "algebra") {
    add("algebra.generator-tables", [] { return check_generator_tables(3); });
    add("algebra.lambda-bilinear", [] { return check_lambda_bilinear(3, 2); });
    add("algebra.q-bilinear", [] { return check_q_bilinear(3, 2); });
    add("algebra.alpha-summation", [] { return check_alpha_summation(3, 2); });
    add("algebra.rho-uniqueness", [] { return check_rho_uniqueness(3); });
    add("algebra.complement-rank", [seed] {
      return check_complement_rank(5, 100, 2, salted(seed, "algebra.complement-rank"));
    });
    add("algebra.torsion-duality", [seed] {
      return check_torsion_duality(3, 50, salted(seed, "algebra.torsion-duality"));
    });
  }
  if (all || suite == "posets") {
    add("posets.link-suspension", [seed] {
      return check_link_suspension(25, salted(seed, "posets.chain-instances"));
    });
    add("posets.extendable-inclusion", [seed] {
      return check_extendable_inclusion(25, salted(seed, "posets.chain-instances"));
    });
    add("posets.retraction", [b1] { return check_retraction(2, b1); });
    add("posets.restriction-identities",
        [b1] { return check_restriction_identities(2, b1); });
    add("posets.splitting-bijection", [b1] { return check_splitting_bijection(2, b1); });
    add("posets.link-identification", [b1] { return check_link_identification(2, b1); });
  }
  if (all || suite == "complexes") {
    add("complexes.sphere-boundaries", [] { return check_sphere_boundaries(4); });
    add("complexes.projective-plane", [] { return check_projective_plane(); });
    add("complexes.euler-identity", [] { return check_euler_identity(); });
  }
  if (all || suite == "connectivity") {
    const std::size_t budget = opt.budget;
    add("connectivity.unimodular-rank2-nonempty", [] {
      return check_family_connectivity(ProbeFamily::unimodular, 2, -1, 1, 0);
    });
    add("connectivity.unimodular-rank3-connected", [budget] {
      return check_family_connectivity(ProbeFamily::unimodular, 3, 0, 1, budget);
    });
    add("connectivity.pair-rank1-nonempty", [] {
      return check_family_connectivity(ProbeFamily::pair_complex, 1, -1, 1, 0);
    });
    add("connectivity.pair-rank3-connected", [budget] {
      return check_family_connectivity(ProbeFamily::pair_complex, 3, 0, 1, budget);
    });
  }

  std::vector<CheckResult> results(jobs.size());
  const std::size_t workers = pool_size(opt, jobs.size());
  std::atomic<std::size_t> next{0};
  auto run_one = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult res;
    try {
      res = jobs[i]();
    } catch (const ComplexTooLarge& e) {
      res.id = ids[i];
      res.claim = "(check stopped early)";
      res.verdict = Verdict::INCONCLUSIVE;
      res.note = std::string("work cap: ") + e.what();
    } catch (const std::exception& e) {
      res.id = ids[i];
      res.claim = "(check aborted)";
      res.verdict = Verdict::FAIL;
      res.note = std::string("unexpected error: ") + e.what();
    }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results[i] = std::move(res);
  };
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
          run_one(i);
      });
    for (auto& t : pool) t.join();
  }

  VerificationReport report;
  report.suite = suite;
  report.seed = opt.seed;
  report.budget = opt.budget;
  report.checks = std::move(results);
  std::set<std::string> seen;
  for (const auto& c : report.checks)
    if (!seen.insert(c.id).second)
      throw std::logic_error("duplicate check id in suite: " + c.id);
  return report;
}

}  // namespace wallcx

#include "wallcx/wall.hpp"

#include "wallcx/lattice.hpp"
#include "wallcx/normal_form.hpp"

#include <sstream>
#include <stdexcept>

namespace wallcx {

namespace {

int mod2(coeff_t v) { return static_cast<int>(((v % 2) + 2) % 2); }
int mod2_int(const Int& v) { return static_cast<int>(((v % 2) + 2) % 2); }

coeff_t to_coeff(const Int& v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::logic_error("coordinate left the 64-bit range");
  return static_cast<coeff_t>(v);
}

/* Odometer over [lo, hi]^n, lexicographic. Returns false after the last
   tuple wraps back to all-lo. */
bool next_in_box(std::vector<coeff_t>& v, coeff_t lo, coeff_t hi) {
  for (std::size_t i = v.size(); i > 0; --i) {
    if (v[i - 1] < hi) {
      ++v[i - 1];
      return true;
    }
    v[i - 1] = lo;
  }
  return false;
}

}  // namespace

bool XVector::is_zero() const {
  for (coeff_t v : c)
    if (v != 0) return false;
  return true;
}

std::string XVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

bool YVector::is_zero() const {
  for (coeff_t v : free)
    if (v != 0) return false;
  for (auto v : tor)
    if (v) return false;
  return true;
}

std::string YVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < free.size(); ++i) os << (i ? "," : "") << free[i];
  os << ";";
  for (std::size_t i = 0; i < tor.size(); ++i) os << (i ? "," : "") << int(tor[i]);
  os << ")";
  return os.str();
}

XVector operator+(const XVector& a, const XVector& b) {
  if (a.c.size() != b.c.size()) throw std::invalid_argument("XVector add: size mismatch");
  XVector out = a;
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

XVector operator-(const XVector& a, const XVector& b) {
  XVector nb = b;
  for (auto& v : nb.c) v = -v;
  return a + nb;
}

XVector operator*(coeff_t s, const XVector& a) {
  XVector out = a;
  for (auto& v : out.c) v *= s;
  return out;
}

YVector operator+(const YVector& a, const YVector& b) {
  if (a.free.size() != b.free.size() || a.tor.size() != b.tor.size())
    throw std::invalid_argument("YVector add: size mismatch");
  YVector out = a;
  for (std::size_t i = 0; i < b.free.size(); ++i) out.free[i] += b.free[i];
  for (std::size_t i = 0; i < b.tor.size(); ++i) out.tor[i] ^= b.tor[i];
  return out;
}

YVector operator-(const YVector& a, const YVector& b) {
  YVector nb = b;
  for (auto& v : nb.free) v = -v;
  return a + nb;  // torsion is its own negative
}

YVector operator*(coeff_t s, const YVector& a) {
  YVector out = a;
  for (auto& v : out.free) v *= s;
  for (auto& v : out.tor) v = static_cast<std::uint8_t>(v & (s & 1));
  return out;
}

void StandardWallPairing::check_x(const XVector& x) const {
  if (x.c.size() != rank_) throw std::invalid_argument("XVector has wrong rank");
}

void StandardWallPairing::check_y(const YVector& y) const {
  if (y.free.size() != rank_ || y.tor.size() != rank_)
    throw std::invalid_argument("YVector has wrong rank");
  for (auto v : y.tor)
    if (v > 1) throw std::invalid_argument("YVector torsion entries must be 0 or 1");
}

Int StandardWallPairing::lambda(const XVector& x, const YVector& y) const {
  check_x(x);
  check_y(y);
  Int acc = 0;
  for (std::size_t i = 0; i < rank_; ++i) acc += Int(x.c[i]) * y.free[i];
  return acc;
}

int StandardWallPairing::qform(const YVector& a, const YVector& b) const {
  check_y(a);
  check_y(b);
  coeff_t acc = 0;
  for (std::size_t i = 0; i < rank_; ++i) acc += a.free[i] * b.tor[i] + b.free[i] * a.tor[i];
  return mod2(acc);
}

int StandardWallPairing::alpha(const YVector& y) const {
  check_y(y);
  coeff_t acc = 0;
  for (std::size_t i = 0; i < rank_; ++i) acc += y.free[i] * y.tor[i];
  return mod2(acc);
}

YVector StandardWallPairing::rho(const XVector& x) const {
  check_x(x);
  YVector out;
  out.free.assign(rank_, 0);
  out.tor.resize(rank_);
  for (std::size_t i = 0; i < rank_; ++i) out.tor[i] = static_cast<std::uint8_t>(mod2(x.c[i]));
  return out;
}

XVector StandardWallPairing::x_gen(std::size_t i) const {
  XVector x = zero_x();
  x.c.at(i) = 1;
  return x;
}

YVector StandardWallPairing::y_gen(std::size_t i) const {
  YVector y = zero_y();
  y.free.at(i) = 1;
  return y;
}

YVector StandardWallPairing::z_gen(std::size_t i) const {
  YVector y = zero_y();
  y.tor.at(i) = 1;
  return y;
}

XVector StandardWallPairing::zero_x() const { return XVector{std::vector<coeff_t>(rank_, 0)}; }

YVector StandardWallPairing::zero_y() const {
  return YVector{std::vector<coeff_t>(rank_, 0), std::vector<std::uint8_t>(rank_, 0)};
}

bool verify_rho_uniqueness(const StandardWallPairing& p, coeff_t coeff_bound) {
  const std::size_t g = p.rank();
  if (g > 3) throw std::invalid_argument("verify_rho_uniqueness: rank capped at 3");
  if (coeff_bound < 1) throw std::invalid_argument("verify_rho_uniqueness: bound must be >= 1");
  const std::uint64_t candidates = std::uint64_t{1} << (g * g);
  std::uint64_t winners = 0;
  bool identity_wins = false;
  for (std::uint64_t bits = 0; bits < candidates; ++bits) {
    /* Candidate map: column i of m gives the torsion image of the i-th
       X generator. */
    F2Matrix m(g, g);
    for (std::size_t i = 0; i < g * g; ++i)
      if ((bits >> i) & 1u) m.set(i / g, i % g, 1);
    bool ok = true;
    std::vector<coeff_t> xs(g, -coeff_bound);
    do {
      std::vector<std::uint8_t> image(g, 0);
      for (std::size_t row = 0; row < g; ++row) {
        int acc = 0;
        for (std::size_t col = 0; col < g; ++col) acc ^= (m.get(row, col) & mod2(xs[col]));
        image[row] = static_cast<std::uint8_t>(acc);
      }
      std::vector<coeff_t> yf(g, -coeff_bound);
      do {
        /* q(image, y) depends only on the free part of y, so torsion parts
           of y need no enumeration; lambda ignores them too. */
        int lhs = 0;
        coeff_t lam = 0;
        for (std::size_t i = 0; i < g; ++i) {
          lhs ^= (mod2(yf[i]) & image[i]);
          lam += xs[i] * yf[i];
        }
        if (lhs != mod2(lam)) {
          ok = false;
          break;
        }
      } while (next_in_box(yf, -coeff_bound, coeff_bound));
      if (!ok) break;
    } while (next_in_box(xs, -coeff_bound, coeff_bound));
    if (ok) {
      ++winners;
      if (m == F2Matrix::identity(g)) identity_wins = true;
    }
  }
  return winners == 1 && identity_wins;
}

bool torsion_duality(const StandardWallPairing& p, const std::vector<YVector>& yprime_basis) {
  const std::size_t g = p.rank();
  if (yprime_basis.size() != g)
    throw std::invalid_argument("torsion_duality: need exactly rank many vectors");
  std::vector<std::vector<Int>> rows;
  for (const auto& y : yprime_basis) {
    if (y.free.size() != g || y.tor.size() != g)
      throw std::invalid_argument("torsion_duality: vector has wrong rank");
    rows.emplace_back(y.free.begin(), y.free.end());
  }
  if (g == 0) return true;
  if (integer_rank(IntMatrix::from_rows(rows)) != g)
    throw std::invalid_argument("torsion_duality: free parts are linearly dependent");
  /* Matrix of z_i -> q(z_i, y'_j); invertibility over Z/2 is the duality. */
  F2Matrix d(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) d.set(i, j, p.qform(p.z_gen(i), yprime_basis[j]));
  return d.invertible();
}

StandardWallPairing direct_sum(const StandardWallPairing& a, const StandardWallPairing& b) {
  return StandardWallPairing(a.rank() + b.rank());
}

XVector embed_x_first(const XVector& x, std::size_t left_rank, std::size_t right_rank) {
  if (x.c.size() != left_rank) throw std::invalid_argument("embed_x_first: rank mismatch");
  XVector out = x;
  out.c.resize(left_rank + right_rank, 0);
  return out;
}

XVector embed_x_second(const XVector& x, std::size_t left_rank, std::size_t right_rank) {
  if (x.c.size() != right_rank) throw std::invalid_argument("embed_x_second: rank mismatch");
  XVector out;
  out.c.assign(left_rank + right_rank, 0);
  for (std::size_t i = 0; i < right_rank; ++i) out.c[left_rank + i] = x.c[i];
  return out;
}

YVector embed_y_first(const YVector& y, std::size_t left_rank, std::size_t right_rank) {
  if (y.free.size() != left_rank) throw std::invalid_argument("embed_y_first: rank mismatch");
  YVector out = y;
  out.free.resize(left_rank + right_rank, 0);
  out.tor.resize(left_rank + right_rank, 0);
  return out;
}

YVector embed_y_second(const YVector& y, std::size_t left_rank, std::size_t right_rank) {
  if (y.free.size() != right_rank) throw std::invalid_argument("embed_y_second: rank mismatch");
  YVector out;
  out.free.assign(left_rank + right_rank, 0);
  out.tor.assign(left_rank + right_rank, 0);
  for (std::size_t i = 0; i < right_rank; ++i) {
    out.free[left_rank + i] = y.free[i];
    out.tor[left_rank + i] = y.tor[i];
  }
  return out;
}

void PairingPresentation::validate() const {
  if (lambda_matrix.rows() != rank || lambda_matrix.cols() != rank)
    throw std::invalid_argument("presentation: lambda matrix must be rank by rank");
  if (q_matrix.rows() != 2 * rank || q_matrix.cols() != 2 * rank)
    throw std::invalid_argument("presentation: q matrix must be 2*rank square");
  if (!q_matrix.is_symmetric()) throw std::invalid_argument("presentation: q matrix must be symmetric");
  if (alpha_gens.size() != 2 * rank)
    throw std::invalid_argument("presentation: alpha values must cover all 2*rank generators");
  for (auto v : alpha_gens)
    if (v > 1) throw std::invalid_argument("presentation: alpha values must be bits");
}

PairingPresentation presentation_of(const StandardWallPairing& p) {
  const std::size_t g = p.rank();
  PairingPresentation out;
  out.rank = g;
  out.lambda_matrix = IntMatrix::identity(g);
  out.q_matrix = F2Matrix(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    out.q_matrix.set(i, g + i, 1);
    out.q_matrix.set(g + i, i, 1);
  }
  out.alpha_gens.assign(2 * g, 0);
  return out;
}

namespace {

/* alpha of an integer combination of presentation generators, by the
   summation rule. With a vanishing q diagonal only the mod 2 residues of
   the coefficients matter. */
int alpha_of_combination(const PairingPresentation& pres, const std::vector<std::uint8_t>& coeffs) {
  const std::size_t n = 2 * pres.rank;
  int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!coeffs[i]) continue;
    acc ^= pres.alpha_gens[i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (coeffs[j]) acc ^= pres.q_matrix.get(i, j);
  }
  return acc;
}

}  // namespace

StandardizeResult standardize(const PairingPresentation& pres) {
  pres.validate();
  const std::size_t g = pres.rank;
  StandardizeResult res;
  auto fail = [&](const char* why) {
    res.ok = false;
    res.reason = why;
    return res;
  };

  if (g > 0) {
    Int det = determinant(pres.lambda_matrix);
    if (det != 1 && det != -1) return fail("lambda matrix is not unimodular");
  }
  if (!pres.q_matrix.zero_diagonal()) return fail("q(y, y) must vanish for every generator");
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      if (pres.q_matrix.get(g + i, g + j)) return fail("q must vanish on torsion pairs");
  for (std::size_t i = 0; i < g; ++i)
    if (pres.alpha_gens[g + i]) return fail("alpha must vanish on torsion generators");

  /* Duality matrix q(t_i, u_j) between torsion and free generators. */
  F2Matrix qtf(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) qtf.set(i, j, pres.q_matrix.get(g + i, j));
  auto qtf_inv = qtf.inverse();
  if (!qtf_inv) return fail("torsion duality fails for the presentation");

  /* Torsion corrections, one free generator at a time. Writing
     yhat_i = u_i + t_i, the bits c_i of t_i must satisfy c_i * qtf = b_i
     where b_i prescribes q(t_i, u_j) for every j. Torsion pairs with
     torsion vanish, so constraints against already corrected generators
     reduce to constraints against the original ones. */
  F2Matrix corrections(g, g);  // row i = c_i
  F2Matrix qtf_t = qtf.transposed();
  for (std::size_t i = 0; i < g; ++i) {
    std::vector<std::uint8_t> b(g, 0);
    for (std::size_t j = 0; j < i; ++j) {
      /* q(u_i, yhat_j) = q(u_i, u_j) + q(c_j s, u_i) */
      int val = pres.q_matrix.get(i, j);
      for (std::size_t l = 0; l < g; ++l)
        val ^= (corrections.get(j, l) & pres.q_matrix.get(g + l, i));
      b[j] = static_cast<std::uint8_t>(val);
    }
    b[i] = pres.alpha_gens[i];
    auto c = qtf_t.solve(b);
    if (!c) throw std::logic_error("standardize: correction solve failed despite invertible duality");
    for (std::size_t l = 0; l < g; ++l) corrections.set(i, l, (*c)[l]);
  }

  StandardizeWitness w;
  w.x_change = g > 0 ? inverse_unimodular(pres.lambda_matrix) : IntMatrix(0, 0);
  w.y_free_change = IntMatrix::identity(g);
  w.y_tor_correction = corrections;
  w.z_change = *qtf_inv;
  res.witness = w;
  res.ok = true;

  PairingPresentation check = apply_witness(pres, w);
  if (check.lambda_matrix != presentation_of(StandardWallPairing(g)).lambda_matrix ||
      check.q_matrix != presentation_of(StandardWallPairing(g)).q_matrix ||
      check.alpha_gens != presentation_of(StandardWallPairing(g)).alpha_gens)
    throw std::logic_error("standardize: witness failed post-verification");
  return res;
}

PairingPresentation apply_witness(const PairingPresentation& pres, const StandardizeWitness& w) {
  pres.validate();
  const std::size_t g = pres.rank;
  PairingPresentation out;
  out.rank = g;
  out.lambda_matrix = w.x_change * pres.lambda_matrix * w.y_free_change.transposed();

  /* Mod 2 image of the free-part change. */
  F2Matrix b2(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) b2.set(i, j, mod2_int(w.y_free_change.get(i, j)));

  auto q_between = [&](const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    int acc = 0;
    for (std::size_t i = 0; i < 2 * g; ++i)
      if (a[i])
        for (std::size_t j = 0; j < 2 * g; ++j)
          if (b[j]) acc ^= pres.q_matrix.get(i, j);
    return acc;
  };

  /* Coefficient rows (mod 2) of the new generators over the old 2g ones. */
  std::vector<std::vector<std::uint8_t>> gen(2 * g, std::vector<std::uint8_t>(2 * g, 0));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      gen[i][j] = static_cast<std::uint8_t>(b2.get(i, j));
      gen[i][g + j] = static_cast<std::uint8_t>(w.y_tor_correction.get(i, j));
      gen[g + i][g + j] = static_cast<std::uint8_t>(w.z_change.get(i, j));
    }
  }

  out.q_matrix = F2Matrix(2 * g, 2 * g);
  out.alpha_gens.assign(2 * g, 0);
  for (std::size_t i = 0; i < 2 * g; ++i) {
    for (std::size_t j = 0; j < 2 * g; ++j) out.q_matrix.set(i, j, q_between(gen[i], gen[j]));
    int a = alpha_of_combination(pres, gen[i]);
    if (i < g) {
      /* alpha(m * u) picks up binomial(m, 2) * q(u, u), invisible mod 2
         when the coefficient is a bit but not for general integers. */
      for (std::size_t j = 0; j < g; ++j) {
        Int r = ((w.y_free_change.get(i, j) % 4) + 4) % 4;
        if ((r == 2 || r == 3) && pres.q_matrix.get(j, j)) a ^= 1;
      }
    }
    out.alpha_gens[i] = static_cast<std::uint8_t>(a);
  }
  /* q itself only sees mod 2 data: integer free-part changes act through
     their residues on q values. */
  return out;
}

ComplementResult complement(const StandardWallPairing& p, const SubspacePair& sub) {
  const std::size_t g = p.rank();
  const std::size_t k = sub.v.size();
  if (sub.w.size() != k)
    throw std::invalid_argument("complement: V and W must have the same length");
  if (k > g) throw std::invalid_argument("complement: more vectors than the rank allows");
  for (const auto& x : sub.v)
    if (x.c.size() != g) throw std::invalid_argument("complement: X vector of wrong rank");
  for (const auto& y : sub.w)
    if (y.free.size() != g || y.tor.size() != g)
      throw std::invalid_argument("complement: Y vector of wrong rank");

  std::vector<std::vector<Int>> v_rows, w_free_rows;
  for (const auto& x : sub.v) v_rows.emplace_back(x.c.begin(), x.c.end());
  for (const auto& y : sub.w) w_free_rows.emplace_back(y.free.begin(), y.free.end());

  if (k > 0 && !is_unimodular_sequence(v_rows))
    throw std::invalid_argument("complement: V is not a unimodular sequence");
  if (k > 0 && !is_unimodular_sequence(w_free_rows))
    throw std::invalid_argument("complement: W free parts are not a unimodular sequence");

  IntMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram.set(i, j, p.lambda(sub.v[i], sub.w[j]));
  if (k > 0) {
    Int det = determinant(gram);
    if (det != 1 && det != -1)
      throw std::invalid_argument("complement: lambda restricted to V x W is not perfect");
  }

  /* Re-choose the W basis dual to V: w'_j = sum_l c_jl w_l with
     c = (gram^-1)^T, so lambda(v_i, w'_j) = delta_ij. */
  std::vector<YVector> w_dual(k, p.zero_y());
  if (k > 0) {
    IntMatrix c = inverse_unimodular(gram).transposed();
    for (std::size_t j = 0; j < k; ++j) {
      YVector acc = p.zero_y();
      for (std::size_t l = 0; l < k; ++l) acc = acc + to_coeff(c.get(j, l)) * sub.w[l];
      w_dual[j] = acc;
    }
  }

  /* x side: kernel of lambda against W; y side free parts: kernel of
     lambda against V. */
  std::vector<std::vector<Int>> wd_free_rows;
  for (const auto& y : w_dual) wd_free_rows.emplace_back(y.free.begin(), y.free.end());
  IntMatrix a = k > 0 ? IntMatrix::from_rows(wd_free_rows) : IntMatrix(0, g);
  IntMatrix b = k > 0 ? IntMatrix::from_rows(v_rows) : IntMatrix(0, g);
  auto x_ker = kernel_basis(a);
  auto y_ker = kernel_basis(b);
  const std::size_t m = g - k;
  if (x_ker.size() != m || y_ker.size() != m)
    throw std::logic_error("complement: kernel ranks disagree with the expected corank");

  IntMatrix g2(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Int acc = 0;
      for (std::size_t l = 0; l < g; ++l) acc += x_ker[i][l] * y_ker[j][l];
      g2.set(i, j, acc);
    }
  if (m > 0) {
    Int det2 = determinant(g2);
    if (det2 != 1 && det2 != -1)
      throw std::logic_error("complement: restricted pairing between kernels is not perfect");
  }

  ComplementResult out{StandardWallPairing(m), {}, {}, {}, w_dual};
  for (std::size_t i = 0; i < m; ++i) {
    XVector x = p.zero_x();
    for (std::size_t l = 0; l < g; ++l) x.c[l] = to_coeff(x_ker[i][l]);
    out.x_basis.push_back(std::move(x));
  }

  IntMatrix y_rows(m, g);
  if (m > 0) {
    IntMatrix g2inv_t = inverse_unimodular(g2).transposed();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = 0; l < g; ++l) {
        Int acc = 0;
        for (std::size_t t = 0; t < m; ++t) acc += g2inv_t.get(i, t) * y_ker[t][l];
        y_rows.set(i, l, acc);
      }
  }

  for (std::size_t i = 0; i < m; ++i) {
    YVector y = p.zero_y();
    for (std::size_t l = 0; l < g; ++l) y.free[l] = to_coeff(y_rows.get(i, l));
    /* Correction: add rho(v_j) for every j with q(y, w'_j) = 1. */
    for (std::size_t j = 0; j < k; ++j) {
      if (p.qform(y, w_dual[j]) == 1) {
        YVector r = p.rho(sub.v[j]);
        for (std::size_t l = 0; l < g; ++l) y.tor[l] ^= r.tor[l];
      }
    }
    out.y_basis.push_back(std::move(y));
  }

  for (std::size_t i = 0; i < m; ++i) out.z_basis.push_back(p.rho(out.x_basis[i]));

  /* Post-verification of the construction. Failures here are internal
     errors: the hypotheses were checked above. */
  for (std::size_t i = 0; i < m; ++i) {
    if (p.alpha(out.y_basis[i]) != 0 || p.alpha(out.z_basis[i]) != 0)
      throw std::logic_error("complement: alpha does not vanish on the produced basis");
    for (std::size_t j = 0; j < m; ++j) {
      Int lam = p.lambda(out.x_basis[i], out.y_basis[j]);
      if (lam != (i == j ? 1 : 0))
        throw std::logic_error("complement: produced bases are not lambda dual");
      if (p.qform(out.y_basis[i], out.y_basis[j]) != 0)
        throw std::logic_error("complement: q does not vanish between produced free vectors");
      if (p.qform(out.y_basis[i], out.z_basis[j]) != (i == j ? 1 : 0))
        throw std::logic_error("complement: produced bases are not q dual");
      if (p.qform(out.z_basis[i], out.z_basis[j]) != 0)
        throw std::logic_error("complement: q does not vanish between produced torsion vectors");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (p.lambda(sub.v[j], out.y_basis[i]) != 0 || p.lambda(sub.v[j], out.z_basis[i]) != 0)
        throw std::logic_error("complement: produced Y vectors do not annihilate V");
      if (p.qform(out.y_basis[i], w_dual[j]) != 0 || p.qform(out.z_basis[i], w_dual[j]) != 0)
        throw std::logic_error("complement: produced Y vectors do not q-annihilate W");
      if (p.lambda(out.x_basis[i], w_dual[j]) != 0)
        throw std::logic_error("complement: produced X vectors do not annihilate W");
    }
  }
  if (m > 0) {
    F2Matrix ztest(m, g);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = 0; l < g; ++l) ztest.set(i, l, out.z_basis[i].tor[l]);
    if (ztest.rank() != m)
      throw std::logic_error("complement: produced torsion vectors are dependent");
  }
  return out;
}

PairingPresentation presentation_from_bases(const StandardWallPairing& p,
                                            const std::vector<XVector>& xs,
                                            const std::vector<YVector>& ys,
                                            const std::vector<YVector>& zs) {
  const std::size_t k = xs.size();
  if (ys.size() != k || zs.size() != k)
    throw std::invalid_argument("presentation_from_bases: basis sizes differ");
  PairingPresentation out;
  out.rank = k;
  out.lambda_matrix = IntMatrix(k, k);
  out.q_matrix = F2Matrix(2 * k, 2 * k);
  out.alpha_gens.assign(2 * k, 0);
  std::vector<const YVector*> gens;
  for (const auto& y : ys) gens.push_back(&y);
  for (const auto& z : zs) gens.push_back(&z);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.lambda_matrix.set(i, j, p.lambda(xs[i], ys[j]));
  for (std::size_t i = 0; i < 2 * k; ++i) {
    out.alpha_gens[i] = static_cast<std::uint8_t>(p.alpha(*gens[i]));
    for (std::size_t j = 0; j < 2 * k; ++j) out.q_matrix.set(i, j, p.qform(*gens[i], *gens[j]));
  }
  return out;
}

long long stable_range(long long g) {
  long long a = g - 3;
  return a >= 0 ? a / 2 : -((-a + 1) / 2);
}

}  // namespace wallcx

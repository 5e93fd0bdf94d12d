#include "ahe/linear_bach.hpp"

#include <algorithm>

#include "ahe/errors.hpp"

namespace ahe {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) > kMaxDegree + 1)
    throw domain_error("polynomial degree exceeds the cap");
  trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  if (degree < 0 || degree > kMaxDegree) throw domain_error("bad monomial degree");
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

int RatPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

bool RatPoly::is_zero() const { return c_.empty(); }

Rational RatPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    d[k - 1] = c_[k] * Rational(static_cast<long long>(k));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::divide_by_t() const {
  if (is_zero()) return RatPoly();
  if (!c_[0].is_zero())
    throw domain_error("polynomial not divisible by t");
  std::vector<Rational> d(c_.begin() + 1, c_.end());
  return RatPoly(std::move(d));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const Rational& s) {
  std::vector<Rational> c(a.c_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.c_[k] * s;
  return RatPoly(std::move(c));
}

bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = 0; k <= degree(); ++k) {
    if (coeff(k).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += coeff(k).str();
    if (k == 1) s += " t";
    if (k > 1) s += " t^" + std::to_string(k);
  }
  return s;
}

InvariantForm InvariantForm::zero() { return {}; }

InvariantForm InvariantForm::from_constant(const RatMat4& m, int degree) {
  InvariantForm f;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (m[i][j] != m[j][i]) throw domain_error("block matrix not symmetric");
      f.comp[i][j] = RatPoly::monomial(m[i][j], degree);
    }
  return f;
}

void InvariantForm::set(int i, int j, const RatPoly& p) {
  comp[i][j] = p;
  comp[j][i] = p;
}

RatPoly InvariantForm::trace() const {
  return comp[0][0] + comp[1][1] + comp[2][2] + comp[3][3];
}

InvariantForm InvariantForm::dt() const {
  InvariantForm f;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) f.comp[i][j] = comp[i][j].derivative();
  return f;
}

bool InvariantForm::is_zero() const {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!comp[i][j].is_zero()) return false;
  return true;
}

int InvariantForm::max_degree() const {
  int d = -1;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d = std::max(d, comp[i][j].degree());
  return d;
}

InvariantForm operator+(const InvariantForm& a, const InvariantForm& b) {
  InvariantForm f;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) f.comp[i][j] = a.comp[i][j] + b.comp[i][j];
  return f;
}

InvariantForm operator-(const InvariantForm& a, const InvariantForm& b) {
  InvariantForm f;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) f.comp[i][j] = a.comp[i][j] - b.comp[i][j];
  return f;
}

GaugeResidual gauge_check(const InvariantForm& h) {
  GaugeResidual g;
  RatPoly half_tr = h.trace().derivative() * Rational(1, 2);
  g.diag = h.comp[0][0].derivative() - half_tr;
  for (int i = 1; i < 4; ++i) g.mixed[i - 1] = h.comp[0][i].derivative();
  return g;
}

bool GaugeResidual::holds() const {
  return diag.is_zero() && mixed[0].is_zero() && mixed[1].is_zero() &&
         mixed[2].is_zero();
}

LinearizedOps linearized_operators(const InvariantForm& h) {
  LinearizedOps ops;
  InvariantForm h2 = h.dt().dt();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      ops.ric_prime.comp[i][j] = h2.comp[i][j] * Rational(-1, 2);

  RatPoly tr = h.trace();
  RatPoly route_a = tr.derivative().derivative() * Rational(-1, 2);
  RatPoly dtr = tr.derivative();
  if (!dtr.coeff(0).is_zero())
    throw consistency_error(
        "d_t tr h has a constant term: the t^-1 route is not polynomial");
  RatPoly route_b = dtr.divide_by_t() * Rational(-3, 2);
  if (!(route_a == route_b))
    throw consistency_error("scalar linearization routes disagree: " +
                            route_a.str() + " vs " + route_b.str());
  ops.s_prime = route_a;
  return ops;
}

InvariantForm bach_residual(const InvariantForm& h) {
  // (D*D)^2 = d_t^4 componentwise on the flat background; the Hessian of a
  // radial function keeps only the (1,1) slot; the Laplacian is d_t^2.
  InvariantForm h4 = h.dt().dt().dt().dt();
  RatPoly tr4 = h.trace().derivative().derivative().derivative().derivative();
  InvariantForm res = h4;
  res.comp[0][0] = res.comp[0][0] - tr4 * Rational(1, 3);
  for (int i = 0; i < 4; ++i)
    res.comp[i][i] = res.comp[i][i] - tr4 * Rational(1, 6);
  return res;
}

namespace {

Rational mat_trace(const RatMat4& m) {
  return m[0][0] + m[1][1] + m[2][2] + m[3][3];
}

void require_symmetric(const RatMat4& m, const char* name) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (m[i][j] != m[j][i])
        throw domain_error(std::string(name) + " must be symmetric");
}

void require_gauge_block(const RatMat4& m, const char* name) {
  require_symmetric(m, name);
  if (!mat_trace(m).is_zero())
    throw domain_error(std::string(name) + " must be traceless");
  for (int i = 1; i < 4; ++i)
    if (!m[0][i].is_zero())
      throw domain_error(std::string(name) +
                         " must have vanishing (1,i) entries, i >= 2");
  if (!m[0][0].is_zero())
    throw domain_error(std::string(name) + " must have vanishing (1,1) entry");
}

}  // namespace

InvariantForm general_solution(const SolutionBlocks& blocks) {
  require_symmetric(blocks.A0, "A0");
  require_gauge_block(blocks.A1, "A1");
  require_gauge_block(blocks.C2, "C2");
  require_gauge_block(blocks.C3, "C3");

  InvariantForm h;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      RatPoly p = RatPoly::monomial(blocks.A0[i][j], 0);
      if (i == j) p = p + RatPoly::monomial(blocks.c1 * Rational(1, 4), 0);
      p = p + RatPoly::monomial(blocks.A1[i][j], 1);
      p = p + RatPoly::monomial(blocks.C2[i][j], 2);
      p = p + RatPoly::monomial(blocks.C3[i][j], 3);
      // C4 normal form (c0/24) diag(3,1,1,1)
      if (i == j) {
        Rational c4 = blocks.c0 * Rational(i == 0 ? 3 : 1, 24);
        p = p + RatPoly::monomial(c4, 4);
      }
      h.comp[i][j] = p;
    }
  return h;
}

namespace {

// Exact kernel dimension of a rational matrix by Gaussian elimination.
int kernel_dimension(std::vector<std::vector<Rational>> rows, int n_cols) {
  int rank = 0;
  int n_rows = static_cast<int>(rows.size());
  for (int col = 0; col < n_cols && rank < n_rows; ++col) {
    int piv = -1;
    for (int r = rank; r < n_rows; ++r)
      if (!rows[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    Rational inv = Rational(1) / rows[rank][col];
    for (int c = col; c < n_cols; ++c) rows[rank][c] = rows[rank][c] * inv;
    for (int r = 0; r < n_rows; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Rational f = rows[r][col];
      for (int c = col; c < n_cols; ++c)
        rows[r][c] = rows[r][c] - f * rows[rank][c];
    }
    ++rank;
  }
  return n_cols - rank;
}

// flatten index for symmetric entries: pairs (i, j), i <= j
constexpr int kSymPairs[10][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                                  {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};

InvariantForm basis_form(int degree, int pair) {
  InvariantForm h;
  int i = kSymPairs[pair][0], j = kSymPairs[pair][1];
  h.set(i, j, RatPoly::monomial(Rational(1), degree));
  return h;
}

void append_poly_rows(std::vector<std::vector<Rational>>& rows,
                      std::vector<std::vector<RatPoly>>& residuals,
                      int n_basis) {
  // residuals[b] holds the residual polynomials of basis element b; assemble
  // one row per (residual slot, coefficient degree)
  std::size_t n_res = residuals[0].size();
  for (std::size_t s = 0; s < n_res; ++s)
    for (int k = 0; k <= RatPoly::kMaxDegree; ++k) {
      std::vector<Rational> row(n_basis);
      bool nonzero = false;
      for (int b = 0; b < n_basis; ++b) {
        row[b] = residuals[b][s].coeff(k);
        nonzero = nonzero || !row[b].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
}

std::vector<RatPoly> all_residuals(const InvariantForm& h, bool with_trace_ode) {
  std::vector<RatPoly> res;
  InvariantForm bach = bach_residual(h);
  for (int p = 0; p < 10; ++p)
    res.push_back(bach.comp[kSymPairs[p][0]][kSymPairs[p][1]]);
  GaugeResidual g = gauge_check(h);
  res.push_back(g.diag);
  res.push_back(g.mixed[0]);
  res.push_back(g.mixed[1]);
  res.push_back(g.mixed[2]);
  if (with_trace_ode) {
    // t (tr h)'' - 3 (tr h)' = 0, the consistency of the two scalar routes
    RatPoly tr = h.trace();
    RatPoly a = tr.derivative().derivative();
    RatPoly b = tr.derivative();
    // multiply a by t: shift coefficients up
    RatPoly ta;
    for (int k = 0; k <= a.degree(); ++k)
      ta = ta + RatPoly::monomial(a.coeff(k), k + 1);
    res.push_back(ta - b * Rational(3));
  }
  return res;
}

}  // namespace

KernelReport kernel_dimensions() {
  constexpr int kBasis = 50;  // degrees 0..4 times 10 symmetric slots

  std::vector<std::vector<RatPoly>> with_trace(kBasis), without_trace(kBasis);
  for (int d = 0; d <= 4; ++d)
    for (int p = 0; p < 10; ++p) {
      InvariantForm h = basis_form(d, p);
      with_trace[10 * d + p] = all_residuals(h, true);
      without_trace[10 * d + p] = all_residuals(h, false);
    }

  std::vector<std::vector<Rational>> rows_full, rows_gb;
  append_poly_rows(rows_full, with_trace, kBasis);
  append_poly_rows(rows_gb, without_trace, kBasis);

  KernelReport rep;
  rep.brute_force_dimension = kernel_dimension(rows_full, kBasis);
  rep.gauge_bach_only_dimension = kernel_dimension(rows_gb, kBasis);

  // dimension of the span of the general_solution generators: one column per
  // free parameter, coordinates in the 50-dim monomial basis
  std::vector<std::vector<Rational>> gens;
  auto push_gen = [&](const InvariantForm& h) {
    std::vector<Rational> v(kBasis);
    for (int d = 0; d <= 4; ++d)
      for (int p = 0; p < 10; ++p)
        v[10 * d + p] = h.comp[kSymPairs[p][0]][kSymPairs[p][1]].coeff(d);
    gens.push_back(std::move(v));
  };
  {
    SolutionBlocks b;
    b.c0 = Rational(1);
    push_gen(general_solution(b));
  }
  {
    SolutionBlocks b;
    b.c1 = Rational(1);
    push_gen(general_solution(b));
  }
  // A0: all 10 symmetric unit matrices
  for (int p = 0; p < 10; ++p) {
    SolutionBlocks b;
    int i = kSymPairs[p][0], j = kSymPairs[p][1];
    b.A0[i][j] = b.A0[j][i] = Rational(1);
    push_gen(general_solution(b));
  }
  // A1, C2, C3: gauge blocks, 5 generators each
  auto gauge_units = []() {
    std::vector<RatMat4> us;
    for (int p = 0; p < 10; ++p) {
      int i = kSymPairs[p][0], j = kSymPairs[p][1];
      if (i == 0) continue;  // first row fixed to zero
      RatMat4 m{};
      if (i == j) {
        if (i == 3) continue;  // dependent through tracelessness
        m[i][i] = Rational(1);
        m[3][3] = Rational(-1);
      } else {
        m[i][j] = m[j][i] = Rational(1);
      }
      us.push_back(m);
    }
    return us;
  };
  for (const RatMat4& u : gauge_units()) {
    SolutionBlocks b;
    b.A1 = u;
    push_gen(general_solution(b));
    SolutionBlocks b2;
    b2.C2 = u;
    push_gen(general_solution(b2));
    SolutionBlocks b3;
    b3.C3 = u;
    push_gen(general_solution(b3));
  }
  // rank of the generator matrix = 50 - kernel of its transpose rows
  int n_gens = static_cast<int>(gens.size());
  std::vector<std::vector<Rational>> cols(kBasis, std::vector<Rational>(n_gens));
  for (int g = 0; g < n_gens; ++g)
    for (int k = 0; k < kBasis; ++k) cols[k][g] = gens[g][k];
  rep.parameter_dimension = n_gens - kernel_dimension(cols, n_gens);
  return rep;
}

}  // namespace ahe

#ifndef AHE_LINEAR_BACH_HPP
#define AHE_LINEAR_BACH_HPP

#include <array>
#include <vector>

#include "ahe/rational.hpp"

namespace ahe {

// Polynomial in t over exact rationals, degree capped at 8.
class RatPoly {
 public:
  static constexpr int kMaxDegree = 8;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int degree);

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const;
  Rational coeff(int k) const;

  RatPoly derivative() const;
  // divide by t; throws domain_error if the constant term is nonzero
  RatPoly divide_by_t() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const Rational& s);
  friend bool operator==(const RatPoly& a, const RatPoly& b);

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

using RatMat4 = std::array<std::array<Rational, 4>, 4>;

// T^3-invariant symmetric bilinear form on R^+ x T^3 in the parallel
// orthonormal frame (e_1 = d/dt, e_2..e_4 tangent to T^3): a symmetric 4x4
// matrix of polynomials in t.
struct InvariantForm {
  std::array<std::array<RatPoly, 4>, 4> comp;

  static InvariantForm zero();
  static InvariantForm from_constant(const RatMat4& m, int degree);

  void set(int i, int j, const RatPoly& p);  // symmetric assignment
  RatPoly trace() const;
  InvariantForm dt() const;  // componentwise t-derivative
  bool is_zero() const;
  int max_degree() const;

  friend InvariantForm operator+(const InvariantForm& a, const InvariantForm& b);
  friend InvariantForm operator-(const InvariantForm& a, const InvariantForm& b);
};

// Residual polynomials of the Bianchi-gauge equations:
// d_t h_11 - (1/2) d_t tr h and d_t h_1i, i = 2..4.
struct GaugeResidual {
  RatPoly diag;
  std::array<RatPoly, 3> mixed;
  bool holds() const;
};
GaugeResidual gauge_check(const InvariantForm& h);

struct LinearizedOps {
  InvariantForm ric_prime;  // -(1/2) d_t^2 h
  RatPoly s_prime;          // the two routes agree or a consistency_error is thrown
};
LinearizedOps linearized_operators(const InvariantForm& h);

// (D*D)^2 h - (1/3) D^2(Lap tr h) - (1/6)(Lap Lap tr h) g_F, exactly.
InvariantForm bach_residual(const InvariantForm& h);

// Assembles the quartic solution family from its free blocks, validating the
// trace and gauge constraints (throws domain_error naming any violation):
//   h = (A0 + (c1/4) I) + A1 t + C2 t^2 + C3 t^3 + (c0/24) diag(3,1,1,1) t^4.
struct SolutionBlocks {
  Rational c0;
  Rational c1;
  RatMat4 C2{};  // traceless, first row/column zero
  RatMat4 C3{};  // traceless, first row/column zero
  RatMat4 A0{};  // unconstrained symmetric
  RatMat4 A1{};  // traceless, first row/column zero
};
InvariantForm general_solution(const SolutionBlocks& blocks);

struct KernelReport {
  int parameter_dimension = 0;    // span of the general_solution generators
  int brute_force_dimension = 0;  // kernel of gauge + bach + trace equations
  int gauge_bach_only_dimension = 0;  // kernel without the trace equation
};
// Brute-force rational elimination over degree <= 4 monomials x Sym(4).
KernelReport kernel_dimensions();

}  // namespace ahe

#endif

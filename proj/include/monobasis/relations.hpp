#pragma once

#include "monobasis/free_algebra.hpp"
#include "monobasis/sl2.hpp"

#include <string>
#include <utility>
#include <vector>

namespace monobasis {

// Fourier coefficients of sum c_ab phi_a(z) d^m/dz^m phi_b(z).
struct QuadraticSeries {
  TensorVector symbol;
  int derivative = 0;
};

struct RelationComponent {
  int derivative = 0;  // m
  int spin = 0;        // j
  friend bool operator==(const RelationComponent&, const RelationComponent&) = default;
};

using RelationComponentSpec = std::vector<RelationComponent>;

// Degree-d component restricted to modes |n_i - d/2| <= window.
struct WindowedVector {
  int degree = 0;
  int window = 0;
  AlgebraElement terms;
};

WindowedVector dm_fourier(const QuadraticSeries& q, int degree, int window, int k);

// All (m, j) with j = m mod 2, m >= 0 and 2m+5 <= 2j+1 <= 2k+1, sorted by
// (j, m). Throws std::invalid_argument for k < 2.
RelationComponentSpec q2_spec(int k);

struct RelationRow {
  RelationComponent component;
  int weight = 0;  // h1-weight of the weight-basis vector
  WindowedVector vector;
};

std::vector<RelationRow> relation_matrix(int k, int degree, int window);

// Row labels "(m,j,weight)", column labels canonical monomials "a:n|a:n".
std::string relation_matrix_csv(const std::vector<RelationRow>& rows);

// Componentwise coefficient functions of a degree-d element of the span of
// the D^(m) spaces. A function records, for each ordered pair (a, b), the
// coefficient of phi_{a,d-x} phi_{b,x} as a polynomial in x, sampled at
// x = 0..samples-1; samples > max derivative order makes this exact.
class PairFunction {
 public:
  PairFunction(int k, int degree, int samples);

  static PairFunction from_series(const QuadraticSeries& q, int k, int degree, int samples);

  int degree() const { return degree_; }
  int samples() const { return samples_; }

  // Values of the canonical-monomial coefficient: the (a, b, x) and
  // (b, a, d-x) entries are identified with the super-sign.
  std::vector<Rational> symmetrized() const;

  // e0 raises the degree by one, f0 lowers it by one.
  PairFunction act(Sl2Gen x) const;

  Rational value(int a, int b, int x) const;

 private:
  using Poly = std::vector<Rational>;  // coefficients of x^0, x^1, ...

  Poly& slot(int a, int b) { return poly_[static_cast<std::size_t>(a * (k_ + 1) + b)]; }
  const Poly& slot(int a, int b) const { return poly_[static_cast<std::size_t>(a * (k_ + 1) + b)]; }

  int k_;
  int degree_;
  int samples_;
  std::vector<Poly> poly_;  // C_ab(x), exact
};

// Independence of the listed summands via the coefficient functions at
// several degrees.
bool omega_direct_sum_check(int k, int max_derivative);

// Off-parity D^(m) C^{2j+1} lies in the span of D^(l) C^{2j+1}, l < m.
bool omega_redundancy_check(int k, int max_derivative);

// The e0 and f0 images of every weight vector of every listed component lie
// in the span of the listed components at the shifted degree.
bool is_affine_closed(int k, const RelationComponentSpec& components);

// is_affine_closed(k, q2_spec(k)).
bool closure_check(int k);

// phi_a^(m) phi_b - (-1)^m phi_a phi_b^(m) against its binomial expansion,
// coefficient by coefficient on a mode window.
bool binomial_identity_check(int max_derivative, int window);

}  // namespace monobasis

#pragma once

#include "monobasis/free_algebra.hpp"
#include "monobasis/linalg.hpp"
#include "monobasis/polynomial.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace monobasis {

enum class Exec { serial, parallel };

// Normal-ordered s-factor monomials with rightmost mode <= min(a_s - r, 0)
// and total degree d, sorted ascending.
std::vector<Monomial> normal_ordered_monomials(int k, int s, int r, int degree);

// Same set by filtering every canonical monomial; test oracle.
std::vector<Monomial> normal_ordered_monomials_brute(int k, int s, int r, int degree);

// Canonical s-factor monomials (nonzero sign) of color sum A and degree d
// with every factor inside the boundary, sorted ascending.
std::vector<Monomial> boundary_monomials(int k, int s, int r, int color_total, int degree);

// Orbit polynomial of a canonical monomial: one term per distinct placement
// of its factors on the variables, signed by the permutation for odd k.
// Its coefficient at the monomial's own placement is 1.
CorrelationPolynomial orbit_polynomial(const Monomial& m, int k);

// <f, phi_{b_1,n_1} ... phi_{b_s,n_s}> = coefficient of prod t_i^{b_i} z_i^{-n_i}.
Rational pairing(const CorrelationPolynomial& f, const Monomial& mono);
Rational pairing(const CorrelationPolynomial& f, const AlgebraElement& el);

// Solution space of the diagonal conditions inside the span of the orbit
// polynomials of boundary_monomials(k, s, r, A, d). Coordinates are indexed
// like `unknowns`; coordinate i of a basis vector equals its pairing with
// unknowns[i].
struct ConstraintBlock {
  int k = 0, s = 0, r = 0, color_total = 0, degree = 0;
  std::vector<Monomial> unknowns;
  DenseMatrix basis;

  std::size_t dimension() const { return basis.size(); }
  CorrelationPolynomial polynomial(std::size_t i) const;
};

ConstraintBlock constraint_block(int k, int s, int r, int color_total, int degree);

struct ConstraintSpace {
  int k = 0, s = 0, r = 0, degree = 0;
  std::vector<ConstraintBlock> blocks;  // color sums 0..s*k

  std::size_t dimension() const;
  std::vector<CorrelationPolynomial> polynomials() const;
};

ConstraintSpace constraint_space(int k, int s, int r, int degree);

// Condition predicates.
bool has_exchange_symmetry(const CorrelationPolynomial& f, int k);
bool respects_t_degree(const CorrelationPolynomial& f, int k);
bool vanishes_at_origin(const CorrelationPolynomial& f, int r);  // order r at (t_1,z_1)=(0,0)
bool has_z_degree(const CorrelationPolynomial& f, int degree);   // total z-exponent -degree
// Order-k vanishing on the (i,j) diagonal: d_t^j1 d_z^j2 f = 0 there for j1+j2 < order.
bool vanishes_on_diagonal(const CorrelationPolynomial& f, int order, int i = 0, int j = 1);
bool vanishes_on_all_diagonals(const CorrelationPolynomial& f, int order);

// The QR-form conditions and the diagonal conditions cut out the same
// subspace of the r = 0 monomial space of 2-particle polynomials at degree d.
bool diag_equiv_check(int k, int s, int degree);

struct BalancedMonomial {
  std::vector<int> t_exponents;  // a^(1..k)
  std::vector<int> z_exponents;  // m^(1..k), sum = -mode
};

// Unique balanced split of t^a z^{-m} into k factors. Requires 0 <= a <= k
// and m <= 0.
BalancedMonomial balanced_decomposition(int k, int color, int mode);

// Exhaustive search for all splits satisfying both balance chains; oracle.
std::vector<BalancedMonomial> balanced_candidates(int k, int color, int mode);

// prod_j of the signed symmetrization of P^(j)_{a_1,m_1} ... P^(j)_{a_s,m_s}.
CorrelationPolynomial build_f_kappa(int k, const Monomial& kappa);

// Entries <f_kappa, rho> for kappa, rho in the listed monomials.
DenseMatrix pairing_matrix(int k, const std::vector<Monomial>& monomials, Exec exec = Exec::parallel);

struct TriangularityReport {
  bool unit_diagonal = true;
  bool lower_vanishing = true;  // <f_kappa, rho> = 0 whenever rho < kappa
};

TriangularityReport check_triangularity(const std::vector<Monomial>& monomials, const DenseMatrix& pm);

// Level-(n-1) polynomial part of the image of R under the projective-system
// map, with the z-prefactor normalization of the lower level absorbed.
// `particles` must be 2n. Throws std::domain_error when R fails conditions
// (a)(b)(c) or the image does not carry the required z factor.
CorrelationPolynomial restriction_map(int k, const CorrelationPolynomial& numerator);

// Conditions (a)(b)(c) for a numerator polynomial.
bool in_wedge_space(int k, const CorrelationPolynomial& numerator);

}  // namespace monobasis

#pragma once

#include "monobasis/free_algebra.hpp"
#include "monobasis/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace monobasis {

enum class Sl2Gen { e0, e1, f0, f1, h0, h1 };

// Coordinates in the basis phi_0..phi_k of the (k+1)-dimensional module W.
using WVector = std::vector<Rational>;

WVector basis_vector(int k, int a);

// Sparse vector of W (x) W keyed by (a, b).
class TensorVector {
 public:
  using Key = std::pair<int, int>;
  using CoefficientMap = std::map<Key, Rational>;

  TensorVector() = default;

  const CoefficientMap& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add(int a, int b, const Rational& c);
  Rational coefficient(int a, int b) const;

  // phi_a (x) phi_b -> phi_b (x) phi_a.
  TensorVector swapped() const;

  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector& operator*=(const Rational& c);
  friend TensorVector operator+(TensorVector x, const TensorVector& y) { return x += y; }
  friend TensorVector operator-(TensorVector x, const TensorVector& y) { return x -= y; }
  friend TensorVector operator*(TensorVector x, const Rational& c) { return x *= c; }
  friend bool operator==(const TensorVector&, const TensorVector&) = default;

 private:
  CoefficientMap coeffs_;
};

// Componentwise action on Fourier generators. Out-of-range colors give zero.
AlgebraElement act_generator(Sl2Gen x, const Generator& g, int k);

// Derivation action on a product; e and f are even, so no signs arise.
AlgebraElement act(Sl2Gen x, const AlgebraElement& el, int k);

// Action of e1, f1, h1 on W and on W (x) W (as x(x)1 + 1(x)x). The affine
// generators are not defined on W.
WVector act_w(Sl2Gen x, const WVector& w, int k);
TensorVector act_tensor(Sl2Gen x, const TensorVector& v, int k);

struct IrreducibleComponent {
  int spin = 0;  // dimension 2*spin+1
  bool symmetric = true;
  std::vector<TensorVector> basis;  // weights 2j, 2j-2, ..., -2j

  int dimension() const { return 2 * spin + 1; }
};

// Components ordered by decreasing spin k, k-1, ..., 0.
std::vector<IrreducibleComponent> cg_decompose(int k);

// Invariant bilinear form on W: B(phi_a, phi_b) = delta_{a+b,k} (-1)^a C(k,a),
// extended to W (x) W factorwise.
Rational invariant_form(int k, int a, int b);
Rational tensor_coupling(int k, const TensorVector& x, const TensorVector& y);

// Polynomials in t of degree <= k, as coefficient arrays of length k+1.
using DualPolynomial = std::vector<Rational>;

// e1 = t^2 d/dt - k t, f1 = -d/dt, h1 = 2t d/dt - k.
DualPolynomial dual_act(Sl2Gen x, const DualPolynomial& p, int k);

// <t^a, phi_b> = delta_{ab}.
Rational pair_dual(const DualPolynomial& p, const WVector& w);

}  // namespace monobasis

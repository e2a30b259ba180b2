#pragma once

#include "monobasis/rational.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace monobasis {

// Fourier generator phi_{color, mode}.
struct Generator {
  int color = 0;
  int mode = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// (a,m) < (b,n) iff m < n, or m == n and a > b.
bool index_less(const Generator& p, const Generator& q);

// Monomials of B_k in canonical (non-decreasing index) order. Comparison is
// lexicographic in the index order, which is also the order on paths used
// for triangularity.
struct Monomial {
  std::vector<Generator> factors;

  std::size_t size() const { return factors.size(); }
  bool empty() const { return factors.empty(); }
  const Generator& operator[](std::size_t i) const { return factors[i]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& x, const Monomial& y);
};

struct Canonical {
  int sign = 1;  // 0 when the product vanishes (repeated odd generator)
  Monomial monomial;
};

// Sort by index order. The sign is the permutation parity for odd k and +1
// for even k.
Canonical canonicalize(std::span<const Generator> seq, int k);

struct Grade {
  int h1_weight = 0;  // sum of (k - 2a)
  int degree = 0;     // sum of modes
  friend bool operator==(const Grade&, const Grade&) = default;
};

Grade grade(const Monomial& m, int k);
int color_sum(const Monomial& m);

// Finite rational combination of canonical monomials.
class AlgebraElement {
 public:
  using TermMap = std::map<Monomial, Rational>;

  AlgebraElement() = default;
  static AlgebraElement from_monomial(const Monomial& m, const Rational& c = Rational(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Monomial& m, const Rational& c);
  // Canonicalizes `seq` first; the super-sign is folded into the coefficient.
  void add_product(std::span<const Generator> seq, const Rational& c, int k);

  Rational coefficient(const Monomial& m) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  TermMap terms_;
};

// Product in B_k (concatenate then canonicalize).
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, int k);

}  // namespace monobasis

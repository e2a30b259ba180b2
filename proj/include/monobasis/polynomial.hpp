#pragma once

#include "monobasis/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace monobasis {

// Sparse polynomial in t_1..t_s, z_1..z_s with rational coefficients. An
// exponent record stores the s t-exponents followed by the s z-exponents;
// z-exponents may be negative so that (z_1...z_s)^(-N) prefactors can be
// carried explicitly.
class CorrelationPolynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  explicit CorrelationPolynomial(int particles = 1);

  static CorrelationPolynomial constant(int particles, const Rational& c);
  static CorrelationPolynomial monomial(std::span<const int> t, std::span<const int> z,
                                        const Rational& c = Rational(1));

  int particles() const { return particles_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(std::span<const int> t, std::span<const int> z) const;

  CorrelationPolynomial& operator+=(const CorrelationPolynomial& o);
  CorrelationPolynomial& operator-=(const CorrelationPolynomial& o);
  CorrelationPolynomial& operator*=(const Rational& c);

  friend CorrelationPolynomial operator+(CorrelationPolynomial a, const CorrelationPolynomial& b) { return a += b; }
  friend CorrelationPolynomial operator-(CorrelationPolynomial a, const CorrelationPolynomial& b) { return a -= b; }
  friend CorrelationPolynomial operator*(CorrelationPolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const CorrelationPolynomial&, const CorrelationPolynomial&) = default;

  // Partial derivatives with respect to t_var / z_var (0-based variables).
  CorrelationPolynomial d_t(int var, int order = 1) const;
  CorrelationPolynomial d_z(int var, int order = 1) const;

  // Substitute (t_from, z_from) := (t_onto, z_onto) and drop variable
  // `from`; the result has one particle less.
  CorrelationPolynomial identify(int from, int onto) const;

  // Substitute only z_from := z_onto, keeping all t variables. The z slot of
  // `from` is left at exponent zero.
  CorrelationPolynomial identify_z(int from, int onto) const;

  // Set t_v = z_v = 0 for every listed variable and drop those variables.
  CorrelationPolynomial restrict_to_origin(std::span<const int> vars) const;

  // Variable i of the result is variable perm[i] of this polynomial.
  CorrelationPolynomial permuted(std::span<const int> perm) const;

  // Multiply by prod_v z_v^shift[v].
  CorrelationPolynomial shift_z(std::span<const int> shift) const;

  int max_t_degree() const;

 private:
  int particles_;
  TermMap terms_;
};

CorrelationPolynomial poly_multiply(const CorrelationPolynomial& f, const CorrelationPolynomial& g);
inline CorrelationPolynomial operator*(const CorrelationPolynomial& f, const CorrelationPolynomial& g)
{
  return poly_multiply(f, g);
}

Rational coefficient(const CorrelationPolynomial& f, std::span<const int> t, std::span<const int> z);

}  // namespace monobasis

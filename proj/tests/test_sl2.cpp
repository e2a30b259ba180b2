#include "monobasis/linalg.hpp"
#include "monobasis/sl2.hpp"

#include <doctest.h>

#include <vector>

using namespace monobasis;

namespace {

constexpr Sl2Gen finite_gens[] = {Sl2Gen::e1, Sl2Gen::f1, Sl2Gen::h1};

AlgebraElement gen(int a, int n, const Rational& c = Rational(1))
{
  return AlgebraElement::from_monomial(Monomial{{{a, n}}}, c);
}

AlgebraElement bracket(Sl2Gen x, Sl2Gen y, const AlgebraElement& el, int k)
{
  return act(x, act(y, el, k), k) - act(y, act(x, el, k), k);
}

WVector w_bracket(Sl2Gen x, Sl2Gen y, const WVector& w, int k)
{
  const WVector xy = act_w(x, act_w(y, w, k), k);
  const WVector yx = act_w(y, act_w(x, w, k), k);
  WVector out(xy.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = xy[i] - yx[i];
  return out;
}

WVector scaled(WVector w, const Rational& c)
{
  for (auto& x : w)
    x *= c;
  return w;
}

TensorVector t_bracket(Sl2Gen x, Sl2Gen y, const TensorVector& v, int k)
{
  return act_tensor(x, act_tensor(y, v, k), k) - act_tensor(y, act_tensor(x, v, k), k);
}

TensorVector elementary(int a, int b)
{
  TensorVector v;
  v.add(a, b, Rational(1));
  return v;
}

DenseVector flatten(const TensorVector& v, int k)
{
  DenseVector out(static_cast<std::size_t>((k + 1) * (k + 1)));
  for (const auto& [key, c] : v.coefficients())
    out[static_cast<std::size_t>(key.first * (k + 1) + key.second)] = c;
  return out;
}

}  // namespace

TEST_CASE("act_generator examples")
{
  CHECK(act_generator(Sl2Gen::f1, {0, 0}, 2) == gen(1, 0));
  CHECK(act_generator(Sl2Gen::f0, {1, 0}, 2) == gen(0, -1, Rational(2)));
  for (int k = 0; k <= 4; ++k)
    for (int n = -2; n <= 2; ++n)
      CHECK(act_generator(Sl2Gen::e1, {0, n}, k).is_zero());
  CHECK(act_generator(Sl2Gen::e0, {1, 3}, 2) == gen(2, 4, Rational(2)));
  CHECK(act_generator(Sl2Gen::e0, {2, 3}, 2).is_zero());
  CHECK(act_generator(Sl2Gen::h0, {0, 1}, 3) == gen(0, 1, Rational(-3)));
}

TEST_CASE("brackets on Fourier generators")
{
  for (int k = 1; k <= 4; ++k)
    for (int a = 0; a <= k; ++a)
      for (int n = -2; n <= 2; ++n) {
        const auto g = gen(a, n);
        CHECK(bracket(Sl2Gen::e1, Sl2Gen::f1, g, k) == act(Sl2Gen::h1, g, k));
        CHECK(bracket(Sl2Gen::h1, Sl2Gen::e1, g, k) == act(Sl2Gen::e1, g, k) * Rational(2));
        CHECK(bracket(Sl2Gen::h1, Sl2Gen::f1, g, k) == act(Sl2Gen::f1, g, k) * Rational(-2));
        CHECK(bracket(Sl2Gen::e0, Sl2Gen::f1, g, k).is_zero());
        CHECK(bracket(Sl2Gen::e1, Sl2Gen::f0, g, k).is_zero());
      }
}

TEST_CASE("brackets on W and on W (x) W")
{
  for (int k = 1; k <= 4; ++k) {
    for (int a = 0; a <= k; ++a) {
      const auto w = basis_vector(k, a);
      CHECK(w_bracket(Sl2Gen::e1, Sl2Gen::f1, w, k) == act_w(Sl2Gen::h1, w, k));
      CHECK(w_bracket(Sl2Gen::h1, Sl2Gen::e1, w, k) == scaled(act_w(Sl2Gen::e1, w, k), Rational(2)));
      CHECK(w_bracket(Sl2Gen::h1, Sl2Gen::f1, w, k) == scaled(act_w(Sl2Gen::f1, w, k), Rational(-2)));
      for (int b = 0; b <= k; ++b) {
        const auto v = elementary(a, b);
        CHECK(t_bracket(Sl2Gen::e1, Sl2Gen::f1, v, k) == act_tensor(Sl2Gen::h1, v, k));
        CHECK(t_bracket(Sl2Gen::h1, Sl2Gen::e1, v, k) == act_tensor(Sl2Gen::e1, v, k) * Rational(2));
        CHECK(t_bracket(Sl2Gen::h1, Sl2Gen::f1, v, k) == act_tensor(Sl2Gen::f1, v, k) * Rational(-2));
      }
    }
    CHECK_THROWS(act_w(Sl2Gen::e0, basis_vector(k, 0), k));
  }
}

TEST_CASE("cg_decompose dimensions and symmetry classes")
{
  for (int k = 1; k <= 4; ++k) {
    const auto comps = cg_decompose(k);
    REQUIRE(comps.size() == static_cast<std::size_t>(k + 1));
    int total = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& c = comps[i];
      CHECK(c.spin == k - static_cast<int>(i));
      CHECK(c.basis.size() == static_cast<std::size_t>(c.dimension()));
      CHECK(c.symmetric == ((c.spin - k) % 2 == 0));
      total += c.dimension();
    }
    CHECK(total == (k + 1) * (k + 1));
    CHECK(comps[0].basis[0] == elementary(0, 0));
  }
  SUBCASE("k=1: C3 symmetric, C1 antisymmetric")
  {
    const auto c = cg_decompose(1);
    CHECK(c[0].dimension() == 3);
    CHECK(c[0].symmetric);
    CHECK(c[1].dimension() == 1);
    CHECK_FALSE(c[1].symmetric);
  }
  SUBCASE("k=2: S = C5 + C1, A = C3")
  {
    const auto c = cg_decompose(2);
    CHECK(c[0].symmetric);
    CHECK_FALSE(c[1].symmetric);
    CHECK(c[2].symmetric);
  }
}

TEST_CASE("k=2 top orbit is 2 phi0 phi2 + phi1^2")
{
  const auto top = cg_decompose(2)[0];
  // weight-0 vector f1^2 (phi0 (x) phi0)
  const auto& v = top.basis[2];
  TensorVector expected;
  expected.add(0, 2, Rational(2));
  expected.add(1, 1, Rational(2));
  expected.add(2, 0, Rational(2));
  CHECK(v == expected);
  // As a commutative product of fields: (c02 + c20) phi0 phi2 + c11 phi1^2.
  CHECK(v.coefficient(0, 2) + v.coefficient(2, 0) == 2 * v.coefficient(1, 1));
}

TEST_CASE("components: weights, closure, orthogonality")
{
  for (int k = 1; k <= 4; ++k) {
    const auto comps = cg_decompose(k);
    for (const auto& c : comps) {
      EchelonBasis span(static_cast<std::size_t>((k + 1) * (k + 1)));
      for (const auto& b : c.basis)
        span.insert(flatten(b, k));
      CHECK(span.rank() == c.basis.size());
      for (std::size_t i = 0; i < c.basis.size(); ++i) {
        const auto& b = c.basis[i];
        CHECK(act_tensor(Sl2Gen::h1, b, k) == b * Rational(2 * c.spin - 2 * static_cast<int>(i)));
        CHECK(span.contains(flatten(act_tensor(Sl2Gen::e1, b, k), k)));
        CHECK(span.contains(flatten(act_tensor(Sl2Gen::f1, b, k), k)));
        CHECK(b.swapped() == (c.symmetric ? b : b * Rational(-1)));
      }
      CHECK(act_tensor(Sl2Gen::e1, c.basis.front(), k).is_zero());
      CHECK(act_tensor(Sl2Gen::f1, c.basis.back(), k).is_zero());
    }
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j)
        for (const auto& x : comps[i].basis)
          for (const auto& y : comps[j].basis)
            CHECK(tensor_coupling(k, x, y) == 0);
  }
}

TEST_CASE("invariant form is sl2-invariant")
{
  for (int k = 1; k <= 4; ++k)
    for (Sl2Gen x : finite_gens)
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b) {
          const auto xa = act_w(x, basis_vector(k, a), k);
          const auto xb = act_w(x, basis_vector(k, b), k);
          Rational lhs = 0;
          for (int c = 0; c <= k; ++c)
            lhs += xa[static_cast<std::size_t>(c)] * invariant_form(k, c, b) +
                   xb[static_cast<std::size_t>(c)] * invariant_form(k, a, c);
          CHECK(lhs == 0);
        }
  CHECK(invariant_form(2, 1, 1) == Rational(-2));
  CHECK(invariant_form(2, 0, 1) == Rational(0));
}

TEST_CASE("dual_act examples")
{
  for (int k = 1; k <= 4; ++k) {
    DualPolynomial top(static_cast<std::size_t>(k + 1));
    top[static_cast<std::size_t>(k)] = 1;
    for (const auto& c : dual_act(Sl2Gen::e1, top, k))
      CHECK(c == 0);
    for (int a = 0; a <= k; ++a) {
      DualPolynomial p(static_cast<std::size_t>(k + 1));
      p[static_cast<std::size_t>(a)] = 1;
      const auto hp = dual_act(Sl2Gen::h1, p, k);
      CHECK(hp[static_cast<std::size_t>(a)] == 2 * a - k);
    }
  }
  DualPolynomial t{Rational(0), Rational(1), Rational(0)};
  CHECK(dual_act(Sl2Gen::f1, t, 2) == DualPolynomial{Rational(-1), Rational(0), Rational(0)});
}

TEST_CASE("pair_dual and contragredience")
{
  const DualPolynomial t2{Rational(0), Rational(0), Rational(1)};
  CHECK(pair_dual(t2, basis_vector(2, 2)) == 1);
  CHECK(pair_dual(t2, basis_vector(2, 1)) == 0);
  const DualPolynomial t{Rational(0), Rational(1), Rational(0)};
  CHECK(pair_dual(dual_act(Sl2Gen::f1, t, 2), basis_vector(2, 0)) == -1);
  CHECK(pair_dual(t, act_w(Sl2Gen::f1, basis_vector(2, 0), 2)) == 1);

  for (int k = 1; k <= 4; ++k)
    for (Sl2Gen x : finite_gens)
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b) {
          DualPolynomial p(static_cast<std::size_t>(k + 1));
          p[static_cast<std::size_t>(a)] = 1;
          const auto w = basis_vector(k, b);
          CHECK(pair_dual(dual_act(x, p, k), w) + pair_dual(p, act_w(x, w, k)) == 0);
        }
}

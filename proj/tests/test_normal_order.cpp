#include "monobasis/correlation.hpp"
#include "monobasis/normal_order.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace monobasis;

namespace {

Monomial pair(int a, int n, int b, int m)
{
  return Monomial{{{a, n}, {b, m}}};
}

AlgebraElement term(const Monomial& m, long c)
{
  return AlgebraElement::from_monomial(m, Rational(c));
}

}  // namespace

TEST_CASE("local_energy examples")
{
  CHECK(local_energy({2, 0}, {0, 2}, 2) == 4);
  CHECK(local_energy({0, 0}, {2, 0}, 2) == 0);
  CHECK(local_energy({1, 1}, {0, 1}, 1) == 1);
  const EnergyFunction h(3);
  CHECK(h.color(1, 1) == 1);
  CHECK(h.color(3, 0) == 3);
  CHECK(h({3, -1}, {0, 0}) == 4);
}

TEST_CASE("energy function range and color reversal")
{
  for (int k = 0; k <= 5; ++k) {
    const EnergyFunction h(k);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b) {
        CHECK(h.color(a, b) >= 0);
        CHECK(h.color(a, b) <= k);
        CHECK(h.color(a, b) == h.color(k - b, k - a));
      }
  }
}

TEST_CASE("is_normal_ordered examples")
{
  CHECK(is_normal_ordered(pair(2, 0, 0, 2), 2));
  CHECK_FALSE(is_normal_ordered(pair(0, 0, 0, 0), 2));
  CHECK(is_normal_ordered(Monomial{}, 2));
  CHECK(is_normal_ordered(Monomial{{{1, 0}}}, 2));
}

TEST_CASE("normal ordering invariant under color reversal with factor reversal")
{
  // (a_1,n_1)...(a_s,n_s) -> (k-a_s,-n_s)...(k-a_1,-n_1)
  for (int k = 1; k <= 3; ++k)
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int m = -3; m <= 3; ++m)
          for (int n = -3; n <= 3; ++n) {
            const bool fwd = local_energy({a, m}, {b, n}, k) >= k;
            const bool rev = local_energy({k - b, -n}, {k - a, -m}, k) >= k;
            CHECK(fwd == rev);
          }
}

TEST_CASE("satisfies_boundary")
{
  CHECK(satisfies_boundary(pair(0, -1, 1, 0), 0));
  CHECK_FALSE(satisfies_boundary(pair(0, -1, 1, 0), 2));
  CHECK(satisfies_boundary(pair(0, -3, 1, -1), 2));
  CHECK_FALSE(satisfies_boundary(pair(2, -1, 0, 1), 0));
}

TEST_CASE("k=2 closed-form rule for phi_{0,l} phi_{0,l}")
{
  clear_normal_form_cache();
  for (int l = -4; l <= 0; ++l) {
    // -2 sum_{n>=1} phi_{0,l-n} phi_{0,l+n}, keeping l+n <= 0
    AlgebraElement expected;
    for (int n = 1; l + n <= 0; ++n)
      expected += term(pair(0, l - n, 0, l + n), -2);
    const auto nf = normal_form(2, 0, pair(0, l, 0, l));
    CHECK(nf == expected);
    const auto rw = rewrite_pair(2, 0, pair(0, l, 0, l));
    CHECK(rw.output == expected);
    CHECK(leading_index_decreases(rw));
  }
  CHECK(normal_form_cache_size() > 0);
}

TEST_CASE("k=2 closed-form rule for phi_{0,l} phi_{0,l+1}")
{
  for (int l = -5; l <= -1; ++l) {
    AlgebraElement expected;
    for (int n = 1; l + 1 + n <= 0; ++n)
      expected += term(pair(0, l - n, 0, l + 1 + n), -1);
    CHECK(normal_form(2, 0, pair(0, l, 0, l + 1)) == expected);
  }
}

TEST_CASE("k=2 top-color square and color reversal")
{
  for (int l = -4; l <= 0; ++l) {
    const auto m = pair(2, l, 2, l);
    const auto nf = normal_form(2, 0, m);
    for (const auto& [t, c] : nf.terms()) {
      CHECK(is_normal_ordered(t, 2));
      CHECK(color_sum(t) == 4);
      CHECK(grade(t, 2) == grade(m, 2));
    }
    CHECK(preserves_pairings(2, 0, m, nf));
    const auto rw = rewrite_pair(2, 0, m);
    CHECK(leading_index_decreases(rw));
  }
}

TEST_CASE("normal_form identities and vanishing")
{
  const auto no = pair(2, -2, 0, 0);
  REQUIRE(is_normal_ordered(no, 2));
  CHECK(normal_form(2, 0, no) == term(no, 1));
  CHECK(normal_form(1, 0, pair(0, 0, 0, 0)).is_zero());
  // outside the boundary the monomial is zero in the module
  CHECK(normal_form(2, 0, pair(0, -1, 0, 1)).is_zero());
  CHECK_THROWS_AS(rewrite_pair(2, 0, no), std::invalid_argument);
  CHECK_THROWS_AS(rewrite_pair(2, 0, Monomial{{{0, 0}}}), std::invalid_argument);
}

TEST_CASE("normal_form on three factors preserves pairings")
{
  for (int k = 1; k <= 3; ++k)
    for (int r = 0; r <= k; ++r)
      for (int a = 0; a <= 3 * k; ++a)
        for (const auto& m : boundary_monomials(k, 3, r, a, -3)) {
          if (is_normal_ordered(m, k))
            continue;
          const auto nf = normal_form(k, r, m);
          for (const auto& [t, c] : nf.terms())
            CHECK(is_normal_ordered(t, k));
          CHECK(preserves_pairings(k, r, m, nf));
        }
}

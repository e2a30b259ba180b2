#include "monobasis/free_algebra.hpp"

#include <algorithm>

namespace monobasis {

bool index_less(const Generator& p, const Generator& q)
{
  return p.mode < q.mode || (p.mode == q.mode && p.color > q.color);
}

bool operator<(const Monomial& x, const Monomial& y)
{
  return std::lexicographical_compare(x.factors.begin(), x.factors.end(), y.factors.begin(), y.factors.end(),
                                      index_less);
}

Canonical canonicalize(std::span<const Generator> seq, int k)
{
  std::vector<Generator> v(seq.begin(), seq.end());
  // Insertion sort keeps the transposition count for the parity.
  int swaps = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && index_less(v[j], v[j - 1]); --j) {
      std::swap(v[j], v[j - 1]);
      ++swaps;
    }
  Canonical out;
  out.monomial.factors = std::move(v);
  const auto& f = out.monomial.factors;
  if (k % 2 != 0) {
    for (std::size_t i = 1; i < f.size(); ++i)
      if (f[i] == f[i - 1]) {
        out.sign = 0;
        return out;
      }
    out.sign = (swaps % 2 == 0) ? 1 : -1;
  }
  return out;
}

Grade grade(const Monomial& m, int k)
{
  Grade g;
  for (const auto& x : m.factors) {
    g.h1_weight += k - 2 * x.color;
    g.degree += x.mode;
  }
  return g;
}

int color_sum(const Monomial& m)
{
  int a = 0;
  for (const auto& x : m.factors)
    a += x.color;
  return a;
}

AlgebraElement AlgebraElement::from_monomial(const Monomial& m, const Rational& c)
{
  AlgebraElement e;
  e.add(m, c);
  return e;
}

void AlgebraElement::add(const Monomial& m, const Rational& c)
{
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

void AlgebraElement::add_product(std::span<const Generator> seq, const Rational& c, int k)
{
  const Canonical can = canonicalize(seq, k);
  if (can.sign == 0)
    return;
  add(can.monomial, can.sign > 0 ? c : Rational(-c));
}

Rational AlgebraElement::coefficient(const Monomial& m) const
{
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o)
{
  for (const auto& [m, c] : o.terms_)
    add(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o)
{
  for (const auto& [m, c] : o.terms_)
    add(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c)
{
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_)
    v *= c;
  return *this;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, int k)
{
  AlgebraElement out;
  std::vector<Generator> seq;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      seq = mx.factors;
      seq.insert(seq.end(), my.factors.begin(), my.factors.end());
      out.add_product(seq, cx * cy, k);
    }
  return out;
}

}  // namespace monobasis

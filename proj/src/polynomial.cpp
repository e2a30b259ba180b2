#include "monobasis/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace monobasis {

namespace {

Rational falling(int x, int order)
{
  Rational r(1);
  for (int i = 0; i < order; ++i)
    r *= (x - i);
  return r;
}

}  // namespace

CorrelationPolynomial::CorrelationPolynomial(int particles) : particles_(particles)
{
  if (particles < 0)
    throw std::invalid_argument("CorrelationPolynomial: negative particle count");
}

CorrelationPolynomial CorrelationPolynomial::constant(int particles, const Rational& c)
{
  CorrelationPolynomial p(particles);
  p.add_term(Exponents(2 * static_cast<std::size_t>(particles), 0), c);
  return p;
}

CorrelationPolynomial CorrelationPolynomial::monomial(std::span<const int> t, std::span<const int> z,
                                                      const Rational& c)
{
  if (t.size() != z.size())
    throw std::invalid_argument("CorrelationPolynomial::monomial: t/z length mismatch");
  CorrelationPolynomial p(static_cast<int>(t.size()));
  Exponents e(t.begin(), t.end());
  e.insert(e.end(), z.begin(), z.end());
  p.add_term(e, c);
  return p;
}

void CorrelationPolynomial::add_term(const Exponents& e, const Rational& c)
{
  if (e.size() != 2 * static_cast<std::size_t>(particles_))
    throw std::invalid_argument("CorrelationPolynomial::add_term: exponent record length");
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

Rational CorrelationPolynomial::coefficient(std::span<const int> t, std::span<const int> z) const
{
  if (t.size() != static_cast<std::size_t>(particles_) || z.size() != t.size())
    return Rational(0);
  Exponents e(t.begin(), t.end());
  e.insert(e.end(), z.begin(), z.end());
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

CorrelationPolynomial& CorrelationPolynomial::operator+=(const CorrelationPolynomial& o)
{
  if (o.particles_ != particles_)
    throw std::invalid_argument("CorrelationPolynomial: particle count mismatch");
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

CorrelationPolynomial& CorrelationPolynomial::operator-=(const CorrelationPolynomial& o)
{
  if (o.particles_ != particles_)
    throw std::invalid_argument("CorrelationPolynomial: particle count mismatch");
  for (const auto& [e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

CorrelationPolynomial& CorrelationPolynomial::operator*=(const Rational& c)
{
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_)
    v *= c;
  return *this;
}

CorrelationPolynomial CorrelationPolynomial::d_t(int var, int order) const
{
  CorrelationPolynomial out(particles_);
  const auto slot = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[slot] < order)
      continue;
    Exponents f = e;
    f[slot] -= order;
    out.add_term(f, c * falling(e[slot], order));
  }
  return out;
}

CorrelationPolynomial CorrelationPolynomial::d_z(int var, int order) const
{
  CorrelationPolynomial out(particles_);
  const auto slot = static_cast<std::size_t>(particles_ + var);
  for (const auto& [e, c] : terms_) {
    const Rational f = falling(e[slot], order);
    if (sgn(f) == 0)
      continue;
    Exponents g = e;
    g[slot] -= order;
    out.add_term(g, c * f);
  }
  return out;
}

CorrelationPolynomial CorrelationPolynomial::identify(int from, int onto) const
{
  if (from == onto || from < 0 || onto < 0 || from >= particles_ || onto >= particles_)
    throw std::invalid_argument("CorrelationPolynomial::identify: bad variables");
  const int s = particles_;
  CorrelationPolynomial out(s - 1);
  for (const auto& [e, c] : terms_) {
    Exponents f;
    f.reserve(2 * static_cast<std::size_t>(s - 1));
    for (int half = 0; half < 2; ++half)
      for (int v = 0; v < s; ++v) {
        if (v == from)
          continue;
        int x = e[static_cast<std::size_t>(half * s + v)];
        if (v == onto)
          x += e[static_cast<std::size_t>(half * s + from)];
        f.push_back(x);
      }
    out.add_term(f, c);
  }
  return out;
}

CorrelationPolynomial CorrelationPolynomial::identify_z(int from, int onto) const
{
  const auto s = static_cast<std::size_t>(particles_);
  CorrelationPolynomial out(particles_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[s + static_cast<std::size_t>(onto)] += f[s + static_cast<std::size_t>(from)];
    f[s + static_cast<std::size_t>(from)] = 0;
    out.add_term(f, c);
  }
  return out;
}

CorrelationPolynomial CorrelationPolynomial::restrict_to_origin(std::span<const int> vars) const
{
  const int s = particles_;
  std::vector<bool> drop(static_cast<std::size_t>(s), false);
  for (int v : vars)
    drop.at(static_cast<std::size_t>(v)) = true;
  const int kept = s - static_cast<int>(std::count(drop.begin(), drop.end(), true));
  CorrelationPolynomial out(kept);
  for (const auto& [e, c] : terms_) {
    bool survives = true;
    for (int v = 0; v < s && survives; ++v)
      if (drop[static_cast<std::size_t>(v)] &&
          (e[static_cast<std::size_t>(v)] != 0 || e[static_cast<std::size_t>(s + v)] != 0))
        survives = false;
    if (!survives)
      continue;
    Exponents f;
    for (int half = 0; half < 2; ++half)
      for (int v = 0; v < s; ++v)
        if (!drop[static_cast<std::size_t>(v)])
          f.push_back(e[static_cast<std::size_t>(half * s + v)]);
    out.add_term(f, c);
  }
  return out;
}

CorrelationPolynomial CorrelationPolynomial::permuted(std::span<const int> perm) const
{
  const auto s = static_cast<std::size_t>(particles_);
  if (perm.size() != s)
    throw std::invalid_argument("CorrelationPolynomial::permuted: wrong permutation length");
  CorrelationPolynomial out(particles_);
  for (const auto& [e, c] : terms_) {
    Exponents f(2 * s);
    for (std::size_t i = 0; i < s; ++i) {
      f[i] = e[static_cast<std::size_t>(perm[i])];
      f[s + i] = e[s + static_cast<std::size_t>(perm[i])];
    }
    out.add_term(f, c);
  }
  return out;
}

CorrelationPolynomial CorrelationPolynomial::shift_z(std::span<const int> shift) const
{
  const auto s = static_cast<std::size_t>(particles_);
  if (shift.size() != s)
    throw std::invalid_argument("CorrelationPolynomial::shift_z: wrong length");
  CorrelationPolynomial out(particles_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < s; ++i)
      f[s + i] += shift[i];
    out.add_term(f, c);
  }
  return out;
}

int CorrelationPolynomial::max_t_degree() const
{
  int m = 0;
  for (const auto& [e, c] : terms_)
    for (int v = 0; v < particles_; ++v)
      m = std::max(m, e[static_cast<std::size_t>(v)]);
  return m;
}

CorrelationPolynomial poly_multiply(const CorrelationPolynomial& f, const CorrelationPolynomial& g)
{
  if (f.particles() != g.particles())
    throw std::invalid_argument("poly_multiply: particle count mismatch");
  CorrelationPolynomial out(f.particles());
  CorrelationPolynomial::Exponents e;
  for (const auto& [ef, cf] : f.terms())
    for (const auto& [eg, cg] : g.terms()) {
      e = ef;
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += eg[i];
      out.add_term(e, cf * cg);
    }
  return out;
}

Rational coefficient(const CorrelationPolynomial& f, std::span<const int> t, std::span<const int> z)
{
  return f.coefficient(t, z);
}

}  // namespace monobasis

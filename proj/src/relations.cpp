#include "monobasis/relations.hpp"

#include "monobasis/linalg.hpp"
#include "monobasis/serialize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace monobasis {

namespace {

Rational falling(const Rational& x, int order)
{
  Rational r(1);
  for (int i = 0; i < order; ++i)
    r *= x - i;
  return r;
}

using Poly = std::vector<Rational>;

void poly_add(Poly& dst, const Poly& src, const Rational& scale)
{
  if (dst.size() < src.size())
    dst.resize(src.size(), Rational(0));
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[i] += scale * src[i];
}

Poly poly_mul_linear(const Poly& p, const Rational& c0, const Rational& c1)
{
  // p(x) * (c0 + c1 x)
  Poly out(p.size() + 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i] * c0;
    out[i + 1] += p[i] * c1;
  }
  return out;
}

// p(x + shift)
Poly poly_shift(const Poly& p, int shift)
{
  Poly out(p.size(), Rational(0));
  // Horner in the shifted variable.
  for (std::size_t i = p.size(); i-- > 0;) {
    out = poly_mul_linear(out, Rational(shift), Rational(1));
    out.resize(p.size(), Rational(0));
    out[0] += p[i];
  }
  return out;
}

// p(c - x)
Poly poly_reflect(const Poly& p, int c)
{
  Poly out(p.size(), Rational(0));
  for (std::size_t i = p.size(); i-- > 0;) {
    out = poly_mul_linear(out, Rational(c), Rational(-1));
    out.resize(p.size(), Rational(0));
    out[0] += p[i];
  }
  return out;
}

Rational poly_eval(const Poly& p, const Rational& x)
{
  Rational v(0);
  for (std::size_t i = p.size(); i-- > 0;)
    v = v * x + p[i];
  return v;
}

Rational binomial(int n, int r)
{
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return Rational(b);
}

const IrreducibleComponent& component_of_spin(const std::vector<IrreducibleComponent>& comps, int spin)
{
  for (const auto& c : comps)
    if (c.spin == spin)
      return c;
  throw std::out_of_range("no component of requested spin");
}

}  // namespace

WindowedVector dm_fourier(const QuadraticSeries& q, int degree, int window, int k)
{
  WindowedVector out;
  out.degree = degree;
  out.window = window;
  std::vector<Generator> seq(2);
  for (int n1 = degree - window - 1; n1 <= degree + window + 1; ++n1) {
    // |n1 - d/2| <= M  <=>  |2 n1 - d| <= 2M
    if (std::abs(2 * n1 - degree) > 2 * window)
      continue;
    const int n2 = degree - n1;
    const Rational ff = falling(Rational(-n2), q.derivative);
    if (sgn(ff) == 0)
      continue;
    for (const auto& [key, c] : q.symbol.coefficients()) {
      seq[0] = {key.first, n1};
      seq[1] = {key.second, n2};
      out.terms.add_product(seq, c * ff, k);
    }
  }
  return out;
}

RelationComponentSpec q2_spec(int k)
{
  if (k < 2)
    throw std::invalid_argument("q2_spec: relations need level k >= 2");
  RelationComponentSpec spec;
  for (int j = 0; j <= k; ++j)
    for (int m = 0; 2 * m + 5 <= 2 * j + 1; ++m)
      if ((j - m) % 2 == 0)
        spec.push_back({m, j});
  return spec;
}

std::vector<RelationRow> relation_matrix(int k, int degree, int window)
{
  const auto comps = cg_decompose(k);
  std::vector<RelationRow> rows;
  for (const auto& rc : q2_spec(k)) {
    const auto& comp = component_of_spin(comps, rc.spin);
    for (std::size_t i = 0; i < comp.basis.size(); ++i) {
      RelationRow row;
      row.component = rc;
      row.weight = 2 * rc.spin - 2 * static_cast<int>(i);
      row.vector = dm_fourier({comp.basis[i], rc.derivative}, degree, window, k);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string relation_matrix_csv(const std::vector<RelationRow>& rows)
{
  std::set<Monomial> columns;
  for (const auto& r : rows)
    for (const auto& [m, c] : r.vector.terms.terms())
      columns.insert(m);
  std::ostringstream os;
  os << "row";
  for (const auto& m : columns)
    os << ',' << monomial_label(m);
  os << '\n';
  for (const auto& r : rows) {
    os << "\"(" << r.component.derivative << ',' << r.component.spin << ',' << r.weight << ")\"";
    for (const auto& m : columns)
      os << ',' << to_string(r.vector.terms.coefficient(m));
    os << '\n';
  }
  return os.str();
}

PairFunction::PairFunction(int k, int degree, int samples)
    : k_(k), degree_(degree), samples_(samples), poly_(static_cast<std::size_t>((k + 1) * (k + 1)))
{
}

PairFunction PairFunction::from_series(const QuadraticSeries& q, int k, int degree, int samples)
{
  PairFunction f(k, degree, samples);
  // ff(-x, m) = prod_{i<m} (-x - i)
  Poly ff{Rational(1)};
  for (int i = 0; i < q.derivative; ++i)
    ff = poly_mul_linear(ff, Rational(-i), Rational(-1));
  for (const auto& [key, c] : q.symbol.coefficients())
    poly_add(f.slot(key.first, key.second), ff, c);
  return f;
}

std::vector<Rational> PairFunction::symmetrized() const
{
  const Rational eps = (k_ % 2 == 0) ? 1 : -1;
  std::vector<Rational> out;
  out.reserve(poly_.size() * static_cast<std::size_t>(samples_));
  for (int a = 0; a <= k_; ++a)
    for (int b = 0; b <= k_; ++b) {
      const Poly& ab = slot(a, b);
      const Poly ba = poly_reflect(slot(b, a), degree_);
      for (int x = 0; x < samples_; ++x)
        out.push_back(poly_eval(ab, Rational(x)) + eps * poly_eval(ba, Rational(x)));
    }
  return out;
}

Rational PairFunction::value(int a, int b, int x) const
{
  return poly_eval(slot(a, b), Rational(x));
}

PairFunction PairFunction::act(Sl2Gen x) const
{
  if (x == Sl2Gen::e0) {
    PairFunction out(k_, degree_ + 1, samples_);
    for (int a = 0; a <= k_; ++a)
      for (int b = 0; b <= k_; ++b) {
        const Poly& p = slot(a, b);
        if (p.empty())
          continue;
        if (a < k_)
          poly_add(out.slot(a + 1, b), p, Rational(a + 1));
        if (b < k_)
          poly_add(out.slot(a, b + 1), poly_shift(p, -1), Rational(b + 1));
      }
    return out;
  }
  if (x == Sl2Gen::f0) {
    PairFunction out(k_, degree_ - 1, samples_);
    for (int a = 0; a <= k_; ++a)
      for (int b = 0; b <= k_; ++b) {
        const Poly& p = slot(a, b);
        if (p.empty())
          continue;
        if (a > 0)
          poly_add(out.slot(a - 1, b), p, Rational(k_ - a + 1));
        if (b > 0)
          poly_add(out.slot(a, b - 1), poly_shift(p, 1), Rational(k_ - b + 1));
      }
    return out;
  }
  throw std::invalid_argument("PairFunction::act: only e0 and f0 change the degree");
}

namespace {

const int kProbeDegrees[] = {-3, -2, -1, 0, 1, 2, 3};

std::vector<Rational> summand_vector(const TensorVector& w, int m, int k, int degree, int samples)
{
  return PairFunction::from_series({w, m}, k, degree, samples).symmetrized();
}

}  // namespace

bool omega_direct_sum_check(int k, int max_derivative)
{
  const auto comps = cg_decompose(k);
  const int samples = max_derivative + 1;
  for (int d : kProbeDegrees) {
    EchelonBasis span(static_cast<std::size_t>((k + 1) * (k + 1) * samples));
    for (int m = 0; m <= max_derivative; ++m)
      for (const auto& comp : comps) {
        if ((comp.spin - m) % 2 != 0)
          continue;
        for (const auto& w : comp.basis)
          if (!span.insert(summand_vector(w, m, k, d, samples)))
            return false;
      }
  }
  return true;
}

bool omega_redundancy_check(int k, int max_derivative)
{
  const auto comps = cg_decompose(k);
  const int samples = max_derivative + 1;
  for (int d : kProbeDegrees)
    for (const auto& comp : comps)
      for (int m = 1; m <= max_derivative; ++m) {
        if ((comp.spin - m) % 2 == 0)
          continue;
        EchelonBasis lower(static_cast<std::size_t>((k + 1) * (k + 1) * samples));
        for (int l = 0; l < m; ++l)
          for (const auto& w : comp.basis)
            lower.insert(summand_vector(w, l, k, d, samples));
        for (const auto& w : comp.basis)
          if (!lower.contains(summand_vector(w, m, k, d, samples)))
            return false;
      }
  return true;
}

bool closure_check(int k)
{
  return is_affine_closed(k, q2_spec(k));
}

bool is_affine_closed(int k, const RelationComponentSpec& spec)
{
  const auto comps = cg_decompose(k);
  int top = 0;
  for (const auto& rc : spec)
    top = std::max(top, rc.derivative);
  const int samples = top + 2;
  const std::size_t width = static_cast<std::size_t>((k + 1) * (k + 1) * samples);

  auto span_at = [&](int d) {
    EchelonBasis span(width);
    for (const auto& rc : spec)
      for (const auto& w : component_of_spin(comps, rc.spin).basis)
        span.insert(summand_vector(w, rc.derivative, k, d, samples));
    return span;
  };

  for (int d : kProbeDegrees) {
    const EchelonBasis up = span_at(d + 1);
    const EchelonBasis down = span_at(d - 1);
    for (const auto& rc : spec)
      for (const auto& w : component_of_spin(comps, rc.spin).basis) {
        const auto f = PairFunction::from_series({w, rc.derivative}, k, d, samples);
        if (!up.contains(f.act(Sl2Gen::e0).symmetrized()))
          return false;
        if (!down.contains(f.act(Sl2Gen::f0).symmetrized()))
          return false;
      }
  }
  return true;
}

bool binomial_identity_check(int max_derivative, int window)
{
  for (int m = 1; m <= max_derivative; ++m)
    for (int n1 = -window; n1 <= window; ++n1)
      for (int n2 = -window; n2 <= window; ++n2) {
        const Rational sign = (m % 2 == 0) ? 1 : -1;
        const Rational lhs = falling(Rational(-n1), m) - sign * falling(Rational(-n2), m);
        Rational rhs(0);
        for (int j = 0; j < m; ++j) {
          const Rational term =
              binomial(m, j) * falling(Rational(-n2), j) * falling(Rational(-n1 - n2 - j), m - j);
          rhs += (j % 2 == 0) ? term : Rational(-term);
        }
        if (lhs != rhs)
          return false;
      }
  return true;
}

}  // namespace monobasis

#include "monobasis/sl2.hpp"

#include "monobasis/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace monobasis {

namespace {

// Coefficient and image color/mode of one generator under x.
struct Image {
  Rational coeff;
  Generator target;
};

bool image_of(Sl2Gen x, const Generator& g, int k, Image& out)
{
  const int a = g.color;
  switch (x) {
    case Sl2Gen::e0:
      out = {Rational(a + 1), {a + 1, g.mode + 1}};
      break;
    case Sl2Gen::f0:
      out = {Rational(k - a + 1), {a - 1, g.mode - 1}};
      break;
    case Sl2Gen::e1:
      out = {Rational(k - a + 1), {a - 1, g.mode}};
      break;
    case Sl2Gen::f1:
      out = {Rational(a + 1), {a + 1, g.mode}};
      break;
    case Sl2Gen::h1:
      out = {Rational(k - 2 * a), g};
      break;
    case Sl2Gen::h0:
      out = {Rational(2 * a - k), g};
      break;
  }
  return out.target.color >= 0 && out.target.color <= k && sgn(out.coeff) != 0;
}

void require_finite(Sl2Gen x)
{
  if (x == Sl2Gen::e0 || x == Sl2Gen::f0 || x == Sl2Gen::h0)
    throw std::invalid_argument("affine generator has no action on W");
}

Rational binomial(int n, int r)
{
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return Rational(b);
}

}  // namespace

WVector basis_vector(int k, int a)
{
  WVector w(static_cast<std::size_t>(k + 1), Rational(0));
  w.at(static_cast<std::size_t>(a)) = 1;
  return w;
}

void TensorVector::add(int a, int b, const Rational& c)
{
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = coeffs_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      coeffs_.erase(it);
  }
}

Rational TensorVector::coefficient(int a, int b) const
{
  auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

TensorVector TensorVector::swapped() const
{
  TensorVector out;
  for (const auto& [key, c] : coeffs_)
    out.add(key.second, key.first, c);
  return out;
}

TensorVector& TensorVector::operator+=(const TensorVector& o)
{
  for (const auto& [key, c] : o.coeffs_)
    add(key.first, key.second, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o)
{
  for (const auto& [key, c] : o.coeffs_)
    add(key.first, key.second, -c);
  return *this;
}

TensorVector& TensorVector::operator*=(const Rational& c)
{
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [key, v] : coeffs_)
    v *= c;
  return *this;
}

AlgebraElement act_generator(Sl2Gen x, const Generator& g, int k)
{
  AlgebraElement out;
  Image im;
  if (image_of(x, g, k, im))
    out.add(Monomial{{im.target}}, im.coeff);
  return out;
}

AlgebraElement act(Sl2Gen x, const AlgebraElement& el, int k)
{
  AlgebraElement out;
  std::vector<Generator> seq;
  Image im;
  for (const auto& [mono, c] : el.terms())
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (!image_of(x, mono[i], k, im))
        continue;
      seq = mono.factors;
      seq[i] = im.target;
      out.add_product(seq, c * im.coeff, k);
    }
  return out;
}

WVector act_w(Sl2Gen x, const WVector& w, int k)
{
  require_finite(x);
  WVector out(static_cast<std::size_t>(k + 1), Rational(0));
  Image im;
  for (int a = 0; a <= k; ++a) {
    const Rational& c = w.at(static_cast<std::size_t>(a));
    if (sgn(c) != 0 && image_of(x, {a, 0}, k, im))
      out[static_cast<std::size_t>(im.target.color)] += c * im.coeff;
  }
  return out;
}

TensorVector act_tensor(Sl2Gen x, const TensorVector& v, int k)
{
  require_finite(x);
  TensorVector out;
  Image im;
  for (const auto& [key, c] : v.coefficients()) {
    const auto [a, b] = key;
    if (image_of(x, {a, 0}, k, im))
      out.add(im.target.color, b, c * im.coeff);
    if (image_of(x, {b, 0}, k, im))
      out.add(a, im.target.color, c * im.coeff);
  }
  return out;
}

std::vector<IrreducibleComponent> cg_decompose(int k)
{
  if (k < 0)
    throw std::invalid_argument("cg_decompose: negative level");
  std::vector<IrreducibleComponent> out;
  for (int spin = k; spin >= 0; --spin) {
    // Weight 2*spin: pairs with a + b = k - spin, listed by increasing a.
    const int total = k - spin;
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a <= total; ++a)
      cells.emplace_back(a, total - a);
    // Images under e1 live at a + b = total - 1.
    std::map<std::pair<int, int>, std::size_t> rows;
    std::vector<TensorVector> images;
    for (const auto& [a, b] : cells) {
      TensorVector v;
      v.add(a, b, 1);
      images.push_back(act_tensor(Sl2Gen::e1, v, k));
      for (const auto& [key, c] : images.back().coefficients())
        rows.try_emplace(key, rows.size());
    }
    EchelonBasis system(cells.size());
    for (const auto& [key, row] : rows) {
      DenseVector eq(cells.size(), Rational(0));
      for (std::size_t i = 0; i < cells.size(); ++i)
        eq[i] = images[i].coefficient(key.first, key.second);
      system.insert(eq);
    }
    const DenseMatrix null = system.nullspace();
    if (null.size() != 1)
      throw std::logic_error("cg_decompose: highest-weight space is not one-dimensional");
    // Normalize so the first nonzero coordinate (in lexicographic (a,b)
    // order) equals one.
    TensorVector hw;
    for (std::size_t i = 0; i < cells.size(); ++i)
      hw.add(cells[i].first, cells[i].second, null[0][i]);
    const Rational lead = hw.coefficients().begin()->second;
    hw *= Rational(1) / lead;

    IrreducibleComponent comp;
    comp.spin = spin;
    comp.symmetric = (hw.swapped() == hw);
    comp.basis.push_back(hw);
    for (int i = 0; i < 2 * spin; ++i)
      comp.basis.push_back(act_tensor(Sl2Gen::f1, comp.basis.back(), k));
    out.push_back(std::move(comp));
  }
  return out;
}

Rational invariant_form(int k, int a, int b)
{
  if (a + b != k)
    return 0;
  Rational c = binomial(k, a);
  return (a % 2 == 0) ? c : Rational(-c);
}

Rational tensor_coupling(int k, const TensorVector& x, const TensorVector& y)
{
  Rational sum(0);
  for (const auto& [key, c] : x.coefficients()) {
    const Rational other = y.coefficient(k - key.first, k - key.second);
    if (sgn(other) != 0)
      sum += c * other * invariant_form(k, key.first, k - key.first) * invariant_form(k, key.second, k - key.second);
  }
  return sum;
}

DualPolynomial dual_act(Sl2Gen x, const DualPolynomial& p, int k)
{
  require_finite(x);
  const int n = static_cast<int>(p.size()) - 1;
  if (n > k)
    throw std::invalid_argument("dual_act: degree exceeds level");
  DualPolynomial out(static_cast<std::size_t>(k + 1), Rational(0));
  for (int a = 0; a <= n; ++a) {
    const Rational& c = p[static_cast<std::size_t>(a)];
    if (sgn(c) == 0)
      continue;
    switch (x) {
      case Sl2Gen::e1:
        // t^2 d/dt t^a - k t^{a+1} = (a - k) t^{a+1}
        if (a - k != 0) {
          assert(a + 1 <= k);
          out[static_cast<std::size_t>(a + 1)] += c * (a - k);
        }
        break;
      case Sl2Gen::f1:
        if (a > 0)
          out[static_cast<std::size_t>(a - 1)] -= c * a;
        break;
      case Sl2Gen::h1:
        out[static_cast<std::size_t>(a)] += c * (2 * a - k);
        break;
      default:
        break;
    }
  }
  return out;
}

Rational pair_dual(const DualPolynomial& p, const WVector& w)
{
  Rational sum(0);
  for (std::size_t a = 0; a < p.size() && a < w.size(); ++a)
    sum += p[a] * w[a];
  return sum;
}

}  // namespace monobasis

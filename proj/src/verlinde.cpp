#include "monobasis/verlinde.hpp"

#include "monobasis/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace monobasis {

FusionElement fusion(int k, int i, int j)
{
  if (i < 0 || j < 0 || i > k || j > k)
    throw std::invalid_argument("fusion: labels out of range");
  if (j > i)
    std::swap(i, j);
  FusionElement out(static_cast<std::size_t>(k + 1), 0);
  const int top = std::min(i + j, 2 * k - i - j);
  for (int l = i - j; l <= top; l += 2)
    out[static_cast<std::size_t>(l)] += 1;
  return out;
}

VerlindeLabel canonical_label(int k, int j, int r)
{
  if (j < 0 || j > k || r < 0 || r >= 2 * k)
    throw std::invalid_argument("canonical_label: labels out of range");
  if ((j + r) % 2 != 0)
    throw std::invalid_argument("canonical_label: j + r must be even");
  return std::min(VerlindeLabel{j, r}, VerlindeLabel{k - j, (r + k) % (2 * k)});
}

bool AkVerlindeAlgebra::all_checks() const
{
  return fixed_span_closed && ideal_gamma_stable && generator_involutive && identification_holds && commutative &&
         associative && unit_is_vacuum && nonnegative_integral && dimension() == static_cast<std::size_t>(level * (level + 1) / 2);
}

long AkVerlindeAlgebra::coefficient(const VerlindeLabel& x, const VerlindeLabel& y, const VerlindeLabel& z) const
{
  auto it = structure.find({x, y, z});
  return it == structure.end() ? 0 : it->second;
}

namespace {

// V_k (x) E_{2k} with basis pi_j eps^r at index j*2k + r.
class TensorRing {
 public:
  explicit TensorRing(int k) : k_(k), n_(2 * k) {}

  std::size_t size() const { return static_cast<std::size_t>((k_ + 1) * n_); }
  std::size_t index(int j, int r) const { return static_cast<std::size_t>(j * n_ + ((r % n_) + n_) % n_); }
  std::pair<int, int> label(std::size_t i) const { return {static_cast<int>(i) / n_, static_cast<int>(i) % n_}; }

  DenseVector unit_vector(int j, int r) const
  {
    DenseVector v(size(), Rational(0));
    v[index(j, r)] = 1;
    return v;
  }

  DenseVector multiply(const DenseVector& x, const DenseVector& y) const
  {
    DenseVector out(size(), Rational(0));
    for (std::size_t p = 0; p < size(); ++p) {
      if (sgn(x[p]) == 0)
        continue;
      const auto [i, r] = label(p);
      for (std::size_t q = 0; q < size(); ++q) {
        if (sgn(y[q]) == 0)
          continue;
        const auto [j, s] = label(q);
        const FusionElement f = fusion(k_, i, j);
        for (int l = 0; l <= k_; ++l)
          if (f[static_cast<std::size_t>(l)] != 0)
            out[index(l, r + s)] += x[p] * y[q] * f[static_cast<std::size_t>(l)];
      }
    }
    return out;
  }

  // gamma(pi_j eps^r) = (-1)^{j+r} pi_j eps^r
  DenseVector gamma(const DenseVector& x) const
  {
    DenseVector out = x;
    for (std::size_t p = 0; p < size(); ++p) {
      const auto [j, r] = label(p);
      if ((j + r) % 2 != 0)
        out[p] = -out[p];
    }
    return out;
  }

 private:
  int k_, n_;
};

DenseVector subtract(DenseVector a, const DenseVector& b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] -= b[i];
  return a;
}

}  // namespace

AkVerlindeAlgebra ak_verlinde(int k)
{
  if (k < 1)
    throw std::invalid_argument("ak_verlinde: need k >= 1");
  AkVerlindeAlgebra alg;
  alg.level = k;
  const TensorRing ring(k);

  std::vector<VerlindeLabel> fixed;
  for (int j = 0; j <= k; ++j)
    for (int r = 0; r < 2 * k; ++r)
      if ((j + r) % 2 == 0)
        fixed.emplace_back(j, r);

  alg.fixed_span_closed = true;
  for (const auto& [i, r] : fixed)
    for (const auto& [j, s] : fixed) {
      const DenseVector p = ring.multiply(ring.unit_vector(i, r), ring.unit_vector(j, s));
      if (ring.gamma(p) != p)
        alg.fixed_span_closed = false;
    }

  const DenseVector g = ring.unit_vector(k, k);
  const DenseVector one = ring.unit_vector(0, 0);
  alg.generator_involutive = (ring.multiply(g, g) == one);

  // J is spanned by (g - 1) b over the fixed basis; commutativity makes this
  // span an ideal.
  const DenseVector g_minus_one = subtract(g, one);
  EchelonBasis ideal(ring.size());
  std::vector<DenseVector> generators;
  for (const auto& [j, r] : fixed) {
    generators.push_back(ring.multiply(g_minus_one, ring.unit_vector(j, r)));
    ideal.insert(generators.back());
  }
  alg.ideal_gamma_stable = true;
  for (const auto& v : generators) {
    if (!ideal.contains(ring.gamma(v)))
      alg.ideal_gamma_stable = false;
    for (const auto& [j, r] : fixed)
      if (!ideal.contains(ring.multiply(v, ring.unit_vector(j, r))))
        alg.ideal_gamma_stable = false;
  }

  alg.identification_holds = true;
  for (const auto& [j, r] : fixed)
    if (!ideal.contains(subtract(ring.unit_vector(j, r), ring.unit_vector(k - j, (r + k) % (2 * k)))))
      alg.identification_holds = false;

  for (const auto& [j, r] : fixed)
    alg.basis.push_back(canonical_label(k, j, r));
  std::sort(alg.basis.begin(), alg.basis.end());
  alg.basis.erase(std::unique(alg.basis.begin(), alg.basis.end()), alg.basis.end());

  // The representatives must be independent modulo J and span the quotient.
  EchelonBasis with_reps = ideal;
  bool independent = true;
  for (const auto& [j, r] : alg.basis)
    independent = with_reps.insert(ring.unit_vector(j, r)) && independent;
  if (!independent || with_reps.rank() != fixed.size())
    alg.identification_holds = false;

  alg.nonnegative_integral = true;
  for (const auto& x : alg.basis)
    for (const auto& y : alg.basis) {
      const DenseVector p = ring.multiply(ring.unit_vector(x.first, x.second), ring.unit_vector(y.first, y.second));
      DenseVector residual = p;
      std::map<VerlindeLabel, Rational> coeffs;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (sgn(p[i]) == 0)
          continue;
        const auto [j, r] = ring.label(i);
        coeffs[canonical_label(k, j, r)] += p[i];
      }
      for (const auto& [z, c] : coeffs)
        residual[ring.index(z.first, z.second)] -= c;
      if (!ideal.contains(residual))
        alg.nonnegative_integral = false;
      for (const auto& [z, c] : coeffs) {
        if (c.get_den() != 1 || sgn(c) < 0)
          alg.nonnegative_integral = false;
        if (sgn(c) != 0)
          alg.structure[{x, y, z}] = c.get_num().get_si();
      }
    }

  alg.commutative = true;
  alg.associative = true;
  alg.unit_is_vacuum = true;
  const VerlindeLabel unit{0, 0};
  for (const auto& x : alg.basis) {
    for (const auto& z : alg.basis)
      if (alg.coefficient(unit, x, z) != (z == x ? 1 : 0))
        alg.unit_is_vacuum = false;
    for (const auto& y : alg.basis) {
      for (const auto& z : alg.basis)
        if (alg.coefficient(x, y, z) != alg.coefficient(y, x, z))
          alg.commutative = false;
      for (const auto& w : alg.basis) {
        for (const auto& t : alg.basis) {
          long lhs = 0, rhs = 0;
          for (const auto& u : alg.basis) {
            lhs += alg.coefficient(x, y, u) * alg.coefficient(u, w, t);
            rhs += alg.coefficient(y, w, u) * alg.coefficient(x, u, t);
          }
          if (lhs != rhs)
            alg.associative = false;
        }
      }
    }
  }
  return alg;
}

}  // namespace monobasis

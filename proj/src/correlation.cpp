#include "monobasis/correlation.hpp"

#include "monobasis/normal_order.hpp"
#include "monobasis/relations.hpp"
#include "monobasis/sl2.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace monobasis {

namespace {

Rational falling(int x, int order)
{
  Rational r(1);
  for (int i = 0; i < order; ++i)
    r *= x - i;
  return r;
}

int permutation_sign(const std::vector<int>& p)
{
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// DFS from the rightmost factor; `rev` holds factors right to left.
void extend_normal_ordered(int k, int s, int degree, int partial, std::vector<Generator>& rev,
                           std::vector<Monomial>& out)
{
  if (static_cast<int>(rev.size()) == s) {
    if (partial == degree)
      out.push_back(Monomial{{rev.rbegin(), rev.rend()}});
    return;
  }
  const Generator next = rev.back();
  for (int a = 0; a <= k; ++a)
    for (int n = degree - partial; n <= 0; ++n) {
      const Generator g{a, n};
      if (local_energy(g, next, k) < k)
        break;  // energy decreases with n
      rev.push_back(g);
      extend_normal_ordered(k, s, degree, partial + n, rev, out);
      rev.pop_back();
    }
}

// Nondecreasing (strictly increasing for odd k) sequences of cells.
void extend_canonical(const std::vector<Generator>& cells, int k, int s, std::size_t from, int color_left,
                      int degree_left, std::vector<Generator>& cur, std::vector<Monomial>& out, bool fixed_color)
{
  if (static_cast<int>(cur.size()) == s) {
    if (degree_left == 0 && (!fixed_color || color_left == 0))
      out.push_back(Monomial{cur});
    return;
  }
  for (std::size_t i = from; i < cells.size(); ++i) {
    const Generator& g = cells[i];
    // Modes are non-positive and non-decreasing along the sequence, so the
    // remaining factors sum to a value in [left * g.mode, g.mode].
    const int left = s - static_cast<int>(cur.size());
    if (g.mode * left > degree_left)
      break;
    if (g.mode < degree_left)
      continue;
    if (fixed_color && g.color > color_left)
      continue;
    cur.push_back(g);
    extend_canonical(cells, k, s, (k % 2 == 0) ? i : i + 1, color_left - g.color, degree_left - g.mode, cur, out,
                     fixed_color);
    cur.pop_back();
  }
}

std::vector<Generator> sorted_cells(int k, int r, int degree, bool boundary)
{
  std::vector<Generator> cells;
  for (int a = 0; a <= k; ++a)
    for (int n = degree; n <= (boundary ? std::min(a - r, 0) : 0); ++n)
      cells.push_back({a, n});
  std::sort(cells.begin(), cells.end(), index_less);
  return cells;
}

CorrelationPolynomial::Exponents placement_key(const Monomial& m, const std::vector<int>& to_var)
{
  const std::size_t s = m.size();
  CorrelationPolynomial::Exponents e(2 * s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    const auto v = static_cast<std::size_t>(to_var[i]);
    e[v] = m[i].color;
    e[s + v] = -m[i].mode;
  }
  return e;
}

// Equations d_t1^j1 d_z1^j2 g |_{(t1,z1)=(t2,z2)} for j1 + j2 < order, one per
// (j1, j2, resulting exponent record).
void diagonal_equations(const CorrelationPolynomial& g, int order, std::size_t column,
                        std::map<std::vector<int>, SparseRow>& rows)
{
  const int s = g.particles();
  const auto su = static_cast<std::size_t>(s);
  for (const auto& [e, c] : g.terms()) {
    const int a1 = e[0], m1 = e[su];
    for (int j1 = 0; j1 <= std::min(a1, order - 1); ++j1)
      for (int j2 = 0; j1 + j2 < order; ++j2) {
        const Rational f = falling(m1, j2);
        if (sgn(f) == 0)
          continue;
        std::vector<int> key{j1, j2};
        for (int half = 0; half < 2; ++half)
          for (int v = 1; v < s; ++v) {
            int x = e[static_cast<std::size_t>(half * s + v)];
            if (v == 1)
              x += (half == 0) ? a1 - j1 : m1 - j2;
            key.push_back(x);
          }
        rows[key].emplace_back(column, c * falling(a1, j1) * f);
      }
  }
}

EchelonBasis equations_to_echelon(std::map<std::vector<int>, SparseRow>& rows, std::size_t columns)
{
  EchelonBasis eb(columns);
  for (auto& [key, row] : rows) {
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseRow merged;
    for (auto& [col, v] : row) {
      if (!merged.empty() && merged.back().first == col)
        merged.back().second += v;
      else
        merged.emplace_back(col, v);
    }
    std::erase_if(merged, [](const auto& p) { return sgn(p.second) == 0; });
    if (!merged.empty())
      eb.insert(std::move(merged));
  }
  return eb;
}

std::vector<int> balanced_split(int total, int k)
{
  std::vector<int> out(static_cast<std::size_t>(k), total / k);
  for (int j = 0; j < total % k; ++j)
    ++out[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace

std::vector<Monomial> normal_ordered_monomials(int k, int s, int r, int degree)
{
  std::vector<Monomial> out;
  if (s <= 0 || degree > 0)
    return out;
  std::vector<Generator> rev;
  for (int a = 0; a <= k; ++a)
    for (int n = degree; n <= std::min(a - r, 0); ++n) {
      rev.assign(1, Generator{a, n});
      extend_normal_ordered(k, s, degree, n, rev, out);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> normal_ordered_monomials_brute(int k, int s, int r, int degree)
{
  std::vector<Monomial> all;
  if (s <= 0 || degree > 0)
    return all;
  const auto cells = sorted_cells(k, r, degree, false);
  std::vector<Generator> cur;
  extend_canonical(cells, k, s, 0, 0, degree, cur, all, false);
  std::vector<Monomial> out;
  for (auto& m : all) {
    const Generator& last = m.factors.back();
    if (last.mode <= std::min(last.color - r, 0) && is_normal_ordered(m, k))
      out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> boundary_monomials(int k, int s, int r, int color_total, int degree)
{
  std::vector<Monomial> out;
  if (s <= 0 || degree > 0)
    return out;
  const auto cells = sorted_cells(k, r, degree, true);
  std::vector<Generator> cur;
  extend_canonical(cells, k, s, 0, color_total, degree, cur, out, true);
  std::sort(out.begin(), out.end());
  return out;
}

CorrelationPolynomial orbit_polynomial(const Monomial& m, int k)
{
  const int s = static_cast<int>(m.size());
  CorrelationPolynomial out(s);
  std::vector<int> perm(static_cast<std::size_t>(s));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<CorrelationPolynomial::Exponents, int> seen;
  do {
    const auto key = placement_key(m, perm);
    const int sign = (k % 2 == 0) ? 1 : permutation_sign(perm);
    auto [it, inserted] = seen.try_emplace(key, sign);
    if (!inserted && it->second != sign)
      throw std::invalid_argument("orbit_polynomial: monomial vanishes by super-commutativity");
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& [key, sign] : seen)
    out.add_term(key, Rational(sign));
  return out;
}

Rational pairing(const CorrelationPolynomial& f, const Monomial& mono)
{
  if (static_cast<int>(mono.size()) != f.particles())
    throw std::invalid_argument("pairing: particle count mismatch");
  std::vector<int> t, z;
  for (const auto& g : mono.factors) {
    t.push_back(g.color);
    z.push_back(-g.mode);
  }
  return f.coefficient(t, z);
}

Rational pairing(const CorrelationPolynomial& f, const AlgebraElement& el)
{
  Rational sum(0);
  for (const auto& [m, c] : el.terms())
    if (static_cast<int>(m.size()) == f.particles())
      sum += c * pairing(f, m);
  return sum;
}

CorrelationPolynomial ConstraintBlock::polynomial(std::size_t i) const
{
  CorrelationPolynomial f(s);
  const DenseVector& coords = basis.at(i);
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (sgn(coords[u]) != 0)
      f += orbit_polynomial(unknowns[u], k) * coords[u];
  return f;
}

ConstraintBlock constraint_block(int k, int s, int r, int color_total, int degree)
{
  ConstraintBlock block;
  block.k = k;
  block.s = s;
  block.r = r;
  block.color_total = color_total;
  block.degree = degree;
  block.unknowns = boundary_monomials(k, s, r, color_total, degree);
  const std::size_t n = block.unknowns.size();
  if (n == 0)
    return block;
  if (s == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      DenseVector v(n, Rational(0));
      v[i] = 1;
      block.basis.push_back(std::move(v));
    }
    return block;
  }
  std::map<std::vector<int>, SparseRow> rows;
  for (std::size_t i = 0; i < n; ++i)
    diagonal_equations(orbit_polynomial(block.unknowns[i], k), k, i, rows);
  block.basis = equations_to_echelon(rows, n).nullspace();
  return block;
}

std::size_t ConstraintSpace::dimension() const
{
  std::size_t d = 0;
  for (const auto& b : blocks)
    d += b.dimension();
  return d;
}

std::vector<CorrelationPolynomial> ConstraintSpace::polynomials() const
{
  std::vector<CorrelationPolynomial> out;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.dimension(); ++i)
      out.push_back(b.polynomial(i));
  return out;
}

ConstraintSpace constraint_space(int k, int s, int r, int degree)
{
  if (r < 0 || r > k || s < 1)
    throw std::invalid_argument("constraint_space: need 0 <= r <= k and s >= 1");
  ConstraintSpace space;
  space.k = k;
  space.s = s;
  space.r = r;
  space.degree = degree;
  for (int a = 0; a <= s * k; ++a)
    space.blocks.push_back(constraint_block(k, s, r, a, degree));
  return space;
}

bool has_exchange_symmetry(const CorrelationPolynomial& f, int k)
{
  const int s = f.particles();
  std::vector<int> perm(static_cast<std::size_t>(s));
  for (int i = 0; i + 1 < s; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
    const CorrelationPolynomial g = f.permuted(perm);
    if (k % 2 == 0 ? !(g == f) : !((g + f).is_zero()))
      return false;
  }
  return true;
}

bool respects_t_degree(const CorrelationPolynomial& f, int k)
{
  for (const auto& [e, c] : f.terms())
    for (int v = 0; v < f.particles(); ++v) {
      const int x = e[static_cast<std::size_t>(v)];
      if (x < 0 || x > k)
        return false;
    }
  return true;
}

bool vanishes_at_origin(const CorrelationPolynomial& f, int r)
{
  const auto s = static_cast<std::size_t>(f.particles());
  for (const auto& [e, c] : f.terms())
    if (e[0] >= 0 && e[s] >= 0 && e[0] + e[s] < r)
      return false;
  return true;
}

bool has_z_degree(const CorrelationPolynomial& f, int degree)
{
  const auto s = static_cast<std::size_t>(f.particles());
  for (const auto& [e, c] : f.terms()) {
    int total = 0;
    for (std::size_t v = 0; v < s; ++v)
      total += e[s + v];
    if (total != -degree)
      return false;
  }
  return true;
}

bool vanishes_on_diagonal(const CorrelationPolynomial& f, int order, int i, int j)
{
  for (int j1 = 0; j1 < order; ++j1) {
    const CorrelationPolynomial dt = f.d_t(i, j1);
    for (int j2 = 0; j1 + j2 < order; ++j2)
      if (!dt.d_z(i, j2).identify(i, j).is_zero())
        return false;
  }
  return true;
}

bool vanishes_on_all_diagonals(const CorrelationPolynomial& f, int order)
{
  for (int i = 0; i < f.particles(); ++i)
    for (int j = i + 1; j < f.particles(); ++j)
      if (!vanishes_on_diagonal(f, order, i, j))
        return false;
  return true;
}

bool diag_equiv_check(int k, int s, int degree)
{
  if (s < 2)
    throw std::invalid_argument("diag_equiv_check: needs at least two particles");
  const auto comps = cg_decompose(k);
  const RelationComponentSpec spec = (k >= 2) ? q2_spec(k) : RelationComponentSpec{};
  const auto su = static_cast<std::size_t>(s);
  for (int a = 0; a <= s * k; ++a) {
    const auto unknowns = boundary_monomials(k, s, 0, a, degree);
    const std::size_t n = unknowns.size();
    if (n == 0)
      continue;
    std::map<std::vector<int>, SparseRow> diag_rows, qr_rows;
    for (std::size_t u = 0; u < n; ++u) {
      const CorrelationPolynomial g = orbit_polynomial(unknowns[u], k);
      diagonal_equations(g, k, u, diag_rows);
      for (std::size_t c = 0; c < spec.size(); ++c) {
        const CorrelationPolynomial h = g.d_z(0, spec[c].derivative).identify_z(0, 1);
        const auto& basis = std::find_if(comps.begin(), comps.end(), [&](const IrreducibleComponent& ic) {
                              return ic.spin == spec[c].spin;
                            })->basis;
        for (std::size_t w = 0; w < basis.size(); ++w)
          for (const auto& [e, coeff] : h.terms()) {
            const Rational cw = basis[w].coefficient(e[0], e[1]);
            if (sgn(cw) == 0)
              continue;
            std::vector<int> key{static_cast<int>(c), static_cast<int>(w)};
            for (std::size_t x = 2; x < 2 * su; ++x)
              if (x != su)
                key.push_back(e[x]);
            qr_rows[key].emplace_back(u, coeff * cw);
          }
      }
    }
    auto both = diag_rows;
    for (const auto& [key, row] : qr_rows) {
      auto k2 = key;
      k2.insert(k2.begin(), -1);  // keep the two families apart
      both[k2] = row;
    }
    const std::size_t rd = equations_to_echelon(diag_rows, n).rank();
    const std::size_t rq = equations_to_echelon(qr_rows, n).rank();
    const std::size_t rb = equations_to_echelon(both, n).rank();
    if (rd != rb || rq != rb)
      return false;
  }
  return true;
}

BalancedMonomial balanced_decomposition(int k, int color, int mode)
{
  if (k < 1 || color < 0 || color > k || mode > 0)
    throw std::invalid_argument("balanced_decomposition: need 0 <= a <= k, m <= 0, k >= 1");
  BalancedMonomial b;
  const auto zs = balanced_split(-mode, k);
  const auto both = balanced_split(-mode + color, k);
  b.z_exponents = zs;
  for (int j = 0; j < k; ++j)
    b.t_exponents.push_back(both[static_cast<std::size_t>(j)] - zs[static_cast<std::size_t>(j)]);
  return b;
}

std::vector<BalancedMonomial> balanced_candidates(int k, int color, int mode)
{
  std::vector<BalancedMonomial> out;
  const int total = -mode;
  std::vector<int> a(static_cast<std::size_t>(k), 0), m(static_cast<std::size_t>(k), 0);
  auto chain_ok = [k](const std::vector<int>& v) {
    for (int j = 0; j + 1 < k; ++j)
      if (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(j + 1)])
        return false;
    return v.back() >= v.front() - 1;
  };
  // Odometer over a in [0, color]^k and m in [0, total]^k.
  std::function<void(int)> rec_m;
  std::function<void(int)> rec_a = [&](int j) {
    if (j == k) {
      if (std::accumulate(a.begin(), a.end(), 0) == color)
        rec_m(0);
      return;
    }
    for (int x = 0; x <= color; ++x) {
      a[static_cast<std::size_t>(j)] = x;
      rec_a(j + 1);
    }
  };
  rec_m = [&](int j) {
    if (j == k) {
      if (std::accumulate(m.begin(), m.end(), 0) != total || !chain_ok(m))
        return;
      std::vector<int> sum(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        sum[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + m[static_cast<std::size_t>(i)];
      if (chain_ok(sum))
        out.push_back({a, m});
      return;
    }
    for (int x = 0; x <= total; ++x) {
      m[static_cast<std::size_t>(j)] = x;
      rec_m(j + 1);
    }
  };
  rec_a(0);
  return out;
}

CorrelationPolynomial build_f_kappa(int k, const Monomial& kappa)
{
  const int s = static_cast<int>(kappa.size());
  std::vector<BalancedMonomial> parts;
  for (const auto& g : kappa.factors)
    parts.push_back(balanced_decomposition(k, g.color, g.mode));

  std::vector<std::vector<int>> perms;
  std::vector<int> signs;
  std::vector<int> perm(static_cast<std::size_t>(s));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
    signs.push_back(permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));

  const auto su = static_cast<std::size_t>(s);
  CorrelationPolynomial f = CorrelationPolynomial::constant(s, Rational(1));
  for (int j = 0; j < k; ++j) {
    CorrelationPolynomial odot(s);
    for (std::size_t p = 0; p < perms.size(); ++p) {
      CorrelationPolynomial::Exponents e(2 * su, 0);
      for (std::size_t l = 0; l < su; ++l) {
        const auto v = static_cast<std::size_t>(perms[p][l]);
        e[v] += parts[l].t_exponents[static_cast<std::size_t>(j)];
        e[su + v] += parts[l].z_exponents[static_cast<std::size_t>(j)];
      }
      odot.add_term(e, Rational(signs[p]));
    }
    f = f * odot;
  }
  return f;
}

DenseMatrix pairing_matrix(int k, const std::vector<Monomial>& monomials, Exec exec)
{
  const long n = static_cast<long>(monomials.size());
  DenseMatrix pm(monomials.size(), DenseVector(monomials.size(), Rational(0)));
  auto fill_row = [&](long i) {
    const CorrelationPolynomial f = build_f_kappa(k, monomials[static_cast<std::size_t>(i)]);
    for (long j = 0; j < n; ++j)
      pm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pairing(f, monomials[static_cast<std::size_t>(j)]);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i)
      fill_row(i);
  } else {
    for (long i = 0; i < n; ++i)
      fill_row(i);
  }
  return pm;
}

TriangularityReport check_triangularity(const std::vector<Monomial>& monomials, const DenseMatrix& pm)
{
  TriangularityReport rep;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      const Rational& v = pm[i][j];
      if (i == j && v != 1)
        rep.unit_diagonal = false;
      if (monomials[j] < monomials[i] && sgn(v) != 0)
        rep.lower_vanishing = false;
    }
  return rep;
}

bool in_wedge_space(int k, const CorrelationPolynomial& numerator)
{
  for (const auto& [e, c] : numerator.terms())
    for (int x : e)
      if (x < 0)
        return false;
  if (!respects_t_degree(numerator, k) || !has_exchange_symmetry(numerator, k))
    return false;
  return numerator.particles() < 2 || vanishes_on_diagonal(numerator, k);
}

CorrelationPolynomial restriction_map(int k, const CorrelationPolynomial& numerator)
{
  const int s = numerator.particles();
  if (s < 2 || s % 2 != 0)
    throw std::domain_error("restriction_map: needs an even, positive particle count");
  if (!in_wedge_space(k, numerator))
    throw std::domain_error("restriction_map: input violates the degree, symmetry or diagonal conditions");
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  const int v = s - 2;
  const std::vector<int> dropped{v, v + 1};
  CorrelationPolynomial image = numerator.d_t(v, k).restrict_to_origin(dropped) * (Rational(1) / Rational(fact));
  std::vector<int> shift(static_cast<std::size_t>(s - 2), -k);
  image = image.shift_z(shift);
  for (const auto& [e, c] : image.terms())
    for (int x : e)
      if (x < 0)
        throw std::domain_error("restriction_map: image lacks the z factor of the lower level");
  return image;
}

}  // namespace monobasis

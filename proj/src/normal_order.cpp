#include "monobasis/normal_order.hpp"

#include "monobasis/correlation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace monobasis {

EnergyFunction::EnergyFunction(int k) : k_(k)
{
  if (k < 0)
    throw std::invalid_argument("EnergyFunction: negative level");
}

int EnergyFunction::color(int a, int b) const
{
  return std::min(a, k_ - b);
}

int EnergyFunction::operator()(const Generator& p, const Generator& q) const
{
  return color(p.color, q.color) - p.mode + q.mode;
}

int local_energy(const Generator& p, const Generator& q, int k)
{
  return EnergyFunction(k)(p, q);
}

bool is_normal_ordered(const Monomial& m, int k)
{
  const EnergyFunction h(k);
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (h(m[i], m[i + 1]) < k)
      return false;
  return true;
}

bool satisfies_boundary(const Monomial& m, int r)
{
  for (const auto& g : m.factors)
    if (g.mode > std::min(g.color - r, 0))
      return false;
  return true;
}

namespace {

struct SolverBlock {
  std::vector<Monomial> targets;  // normal-ordered monomials of the block
  std::map<Monomial, std::size_t> unknown_index;
  DenseMatrix basis;
};

using BlockKey = std::tuple<int, int, int, int, int>;  // k, s, r, A, d

std::shared_mutex cache_mutex;
std::map<BlockKey, std::shared_ptr<const SolverBlock>> cache;

std::shared_ptr<const SolverBlock> solver_block(int k, int s, int r, int a, int d)
{
  const BlockKey key{k, s, r, a, d};
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end())
      return it->second;
  }
  auto blk = std::make_shared<SolverBlock>();
  for (auto& m : normal_ordered_monomials(k, s, r, d))
    if (color_sum(m) == a)
      blk->targets.push_back(std::move(m));
  ConstraintBlock cb = constraint_block(k, s, r, a, d);
  for (std::size_t i = 0; i < cb.unknowns.size(); ++i)
    blk->unknown_index.emplace(cb.unknowns[i], i);
  blk->basis = std::move(cb.basis);
  std::unique_lock lock(cache_mutex);
  auto [it, inserted] = cache.try_emplace(key, std::move(blk));
  return it->second;
}

}  // namespace

AlgebraElement normal_form(int k, int r, const Monomial& mono)
{
  const Canonical can = canonicalize(mono.factors, k);
  AlgebraElement out;
  if (can.sign == 0 || mono.empty())
    return out;
  const Monomial& m = can.monomial;
  const Rational sign(can.sign);
  if (!satisfies_boundary(m, r))
    return out;
  if (is_normal_ordered(m, k)) {
    out.add(m, sign);
    return out;
  }
  const Grade g = grade(m, k);
  const int s = static_cast<int>(m.size());
  const auto blk = solver_block(k, s, r, color_sum(m), g.degree);
  if (blk->basis.empty())
    return out;

  const auto found = blk->unknown_index.find(m);
  if (found == blk->unknown_index.end())
    throw std::logic_error("normal_form: monomial missing from its correlation block");
  const auto col = found->second;
  DenseMatrix a;
  DenseVector b;
  for (const auto& row : blk->basis) {
    DenseVector eq;
    for (const auto& t : blk->targets)
      eq.push_back(row[blk->unknown_index.at(t)]);
    a.push_back(std::move(eq));
    b.push_back(row[col]);
  }
  const auto x = solve_unique(std::move(a), std::move(b));
  if (!x)
    throw std::logic_error("normal_form: pairing system has no unique solution");
  for (std::size_t i = 0; i < blk->targets.size(); ++i)
    out.add(blk->targets[i], sign * (*x)[i]);
  return out;
}

RewriteResult rewrite_pair(int k, int r, const Monomial& mono)
{
  if (mono.size() != 2)
    throw std::invalid_argument("rewrite_pair: needs a two-factor monomial");
  const Canonical can = canonicalize(mono.factors, k);
  if (can.sign == 0)
    throw std::invalid_argument("rewrite_pair: monomial vanishes");
  if (is_normal_ordered(can.monomial, k))
    throw std::invalid_argument("rewrite_pair: monomial is already normal-ordered");
  if (!satisfies_boundary(can.monomial, r))
    throw std::invalid_argument("rewrite_pair: monomial violates the boundary condition");
  RewriteResult res;
  res.input = can.monomial;
  res.output = normal_form(k, r, can.monomial);
  return res;
}

bool leading_index_decreases(const RewriteResult& result)
{
  for (const auto& [m, c] : result.output.terms())
    if (!index_less(m[0], result.input[0]))
      return false;
  return true;
}

bool preserves_pairings(int k, int r, const Monomial& mono, const AlgebraElement& nf)
{
  const Canonical can = canonicalize(mono.factors, k);
  if (can.sign == 0)
    return nf.is_zero();
  const Grade g = grade(can.monomial, k);
  const int a = color_sum(can.monomial);
  const AlgebraElement lhs = AlgebraElement::from_monomial(can.monomial, Rational(can.sign));
  for (const auto& kappa : normal_ordered_monomials(k, static_cast<int>(mono.size()), r, g.degree)) {
    if (color_sum(kappa) != a)
      continue;
    const CorrelationPolynomial f = build_f_kappa(k, kappa);
    if (pairing(f, lhs) != pairing(f, nf))
      return false;
  }
  return true;
}

std::size_t normal_form_cache_size()
{
  std::shared_lock lock(cache_mutex);
  return cache.size();
}

void clear_normal_form_cache()
{
  std::unique_lock lock(cache_mutex);
  cache.clear();
}

}  // namespace monobasis

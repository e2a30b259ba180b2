#pragma once

#include "monobasis/free_algebra.hpp"

#include <memory>
#include <optional>

namespace monobasis {

class EnergyFunction {
 public:
  explicit EnergyFunction(int k);

  int level() const { return k_; }

  // h_{a,b} = min(a, k - b)
  int color(int a, int b) const;

  // h((a,m),(b,n)) = h_{a,b} - m + n
  int operator()(const Generator& p, const Generator& q) const;

 private:
  int k_;
};

int local_energy(const Generator& p, const Generator& q, int k);

// Every adjacent pair has local energy >= k.
bool is_normal_ordered(const Monomial& m, int k);

// Every factor satisfies mode <= min(color - r, 0).
bool satisfies_boundary(const Monomial& m, int r);

struct RewriteResult {
  Monomial input;
  AlgebraElement output;
};

// Expresses `mono` in the quotient module with boundary r as a combination
// of normal-ordered monomials of the same color sum and degree. The
// coefficients are the unique solution of the pairing system against the
// correlation space of the matching block.
//
// Throws std::invalid_argument when the monomial is not canonical with a
// nonzero sign, and std::logic_error when the pairing system has no unique
// solution.
AlgebraElement normal_form(int k, int r, const Monomial& mono);

// Two-factor rewrite. Throws std::invalid_argument if the pair is already
// normal-ordered or violates the boundary.
RewriteResult rewrite_pair(int k, int r, const Monomial& mono);

// Leading index of every output monomial is strictly below the input's.
bool leading_index_decreases(const RewriteResult& result);

// <f_kappa, mono> = <f_kappa, nf> for every f_kappa of the block of `mono`.
bool preserves_pairings(int k, int r, const Monomial& mono, const AlgebraElement& nf);

// Number of cached correlation blocks; mainly for tests.
std::size_t normal_form_cache_size();
void clear_normal_form_cache();

}  // namespace monobasis

#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace monobasis {

// Multiplicities of pi_0..pi_k.
using FusionElement = std::vector<int>;

// pi_i pi_j = pi_{|i-j|} + pi_{|i-j|+2} + ... + pi_s, s = min(i+j, 2k-i-j).
FusionElement fusion(int k, int i, int j);

using VerlindeLabel = std::pair<int, int>;  // (j, r)

// Lexicographic minimum of (j, r) and (k-j, (r+k) mod 2k). Throws
// std::invalid_argument when j + r is odd or out of range.
VerlindeLabel canonical_label(int k, int j, int r);

struct AkVerlindeAlgebra {
  int level = 0;
  std::vector<VerlindeLabel> basis;  // canonical labels, sorted
  // (x, y, z) -> multiplicity of z in x*y, zeros omitted.
  std::map<std::tuple<VerlindeLabel, VerlindeLabel, VerlindeLabel>, long> structure;

  // Verification results of the construction.
  bool fixed_span_closed = false;   // gamma-fixed span closed under products
  bool ideal_gamma_stable = false;
  bool generator_involutive = false;  // (pi_k eps^k)^2 = 1
  bool identification_holds = false;  // R(j,r) = R(k-j, r+k) in the quotient
  bool commutative = false;
  bool associative = false;
  bool unit_is_vacuum = false;
  bool nonnegative_integral = false;

  std::size_t dimension() const { return basis.size(); }
  bool all_checks() const;
  long coefficient(const VerlindeLabel& x, const VerlindeLabel& y, const VerlindeLabel& z) const;
};

AkVerlindeAlgebra ak_verlinde(int k);

}  // namespace monobasis

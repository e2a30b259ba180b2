#pragma once

#include "monobasis/correlation.hpp"
#include "monobasis/series.hpp"

#include <utility>
#include <vector>

namespace monobasis {

// Entry j (1-based) of the ground-state path with labels (r, r+2l).
int ground_color(int k, int r, int j);
int ground_mode(int k, int r, int l, int j);

// Eventually-ground-state path. Entries 1..horizon are stored; beyond the
// horizon the path follows the ground state.
class Path {
 public:
  Path(int k, int r, int l, std::vector<Generator> prefix);

  int level() const { return k_; }
  int r() const { return r_; }
  int l() const { return l_; }
  int horizon() const { return static_cast<int>(prefix_.size()); }

  Generator entry(int j) const;  // any j >= 1
  const std::vector<Generator>& prefix() const { return prefix_; }

  // Largest j whose entry differs from the ground state, 0 for the ground state.
  int last_deviation() const;

  bool is_valid() const;    // colors in range, adjacent pairs normal-ordered
  bool is_reduced() const;  // every adjacency at energy exactly k

  friend bool operator==(const Path&, const Path&) = default;

 private:
  int k_, r_, l_;
  std::vector<Generator> prefix_;
};

// Asserts (std::logic_error) that each adjacency has energy exactly k.
Path ground_state_path(int k, int r, int l, int horizon);

// Labels (j, lambda) of the extremal vector omega_{j, j+2 lambda} formed by
// the ground-state entries from `position` on; its first entry is
// (k-j, k-j-lambda).
std::pair<int, int> tail_label(int k, int r, int l, int position);

// N_a = h_{a,k-j} - j - l
int vacuum_bound(int k, int j, int l, int a);

// The entry at the last deviation obeys the vacuum bound of the ground-state
// tail after it. The ground state itself passes trivially.
bool respects_vacuum_bound(const Path& p);

// Each ground-state entry saturates the bound of its tail, and prepending it
// moves the tail label from (j, lambda) to (k-j, lambda+j).
bool vacuum_saturation_check(int k, int r, int l, int horizon);

struct PathWeight {
  int alpha1_offset = 0;  // -sum (a_j - a_j^gs)
  int delta_offset = 0;   // sum (n_j - n_j^gs)
};

PathWeight path_weight(const Path& p);

struct PathEnumeration {
  std::vector<Path> paths;
  int horizon = 0;
};

// All paths with energy -delta_offset <= cutoff, deviating from the ground
// state only within the horizon (default 2*cutoff + 4).
PathEnumeration enumerate_paths(int k, int r, int l, int cutoff, bool reduced_only = false, Exec exec = Exec::parallel,
                                int horizon = -1);

// sum (n_j - n^gs_j) against sum j (h_{a_j,a_{j+1}} - h_{gs_j,gs_{j+1}}).
// Throws std::invalid_argument for non-reduced paths.
bool energy_sum_check(const Path& p);

// Generating function sum x^{alpha1 offset} q^{energy}.
BiGradedSeries path_series(const std::vector<Path>& paths, int cutoff);

struct PathCharacter {
  BiGradedSeries full;
  BiGradedSeries reduced;
  bool factorization_holds = false;  // full == reduced * prod (1-q^n)^-1
  bool horizon_stable = false;       // same result with horizon + 2
};

PathCharacter path_character(int k, int r, int l, int cutoff, Exec exec = Exec::parallel);

// Character of the level-k integrable module with highest weight r, times
// the Heisenberg factor when requested, from the alternating Weyl-group sum.
BiGradedSeries kac_character(int k, int r, int cutoff, bool heisenberg = true);

// sum_m x^m q^{m^2} * sum_n p(n) q^n, the level-1 vacuum character.
BiGradedSeries frenkel_kac_level_one(int cutoff);

// Partition numbers p(0..n).
std::vector<std::int64_t> partition_numbers(int n);

}  // namespace monobasis

#include "monobasis/paths.hpp"

#include "monobasis/normal_order.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace monobasis {

int ground_color(int k, int r, int j)
{
  return (j % 2 != 0) ? k - r : r;
}

int ground_mode(int k, int r, int l, int j)
{
  // (j+1)k/2 - r - l for odd j, jk/2 - l for even j; both numerators even.
  return (j % 2 != 0) ? (j + 1) * k / 2 - r - l : j * k / 2 - l;
}

Path::Path(int k, int r, int l, std::vector<Generator> prefix) : k_(k), r_(r), l_(l), prefix_(std::move(prefix))
{
  if (r < 0 || r > k)
    throw std::invalid_argument("Path: need 0 <= r <= k");
}

Generator Path::entry(int j) const
{
  if (j < 1)
    throw std::out_of_range("Path::entry: positions start at 1");
  if (j <= horizon())
    return prefix_[static_cast<std::size_t>(j - 1)];
  return {ground_color(k_, r_, j), ground_mode(k_, r_, l_, j)};
}

int Path::last_deviation() const
{
  for (int j = horizon(); j >= 1; --j) {
    const Generator& g = prefix_[static_cast<std::size_t>(j - 1)];
    if (g.color != ground_color(k_, r_, j) || g.mode != ground_mode(k_, r_, l_, j))
      return j;
  }
  return 0;
}

bool Path::is_valid() const
{
  for (int j = 1; j <= horizon(); ++j) {
    const Generator g = entry(j);
    if (g.color < 0 || g.color > k_)
      return false;
    if (local_energy(g, entry(j + 1), k_) < k_)
      return false;
  }
  return true;
}

bool Path::is_reduced() const
{
  for (int j = 1; j <= horizon(); ++j)
    if (local_energy(entry(j), entry(j + 1), k_) != k_)
      return false;
  return true;
}

Path ground_state_path(int k, int r, int l, int horizon)
{
  std::vector<Generator> prefix;
  for (int j = 1; j <= horizon; ++j)
    prefix.push_back({ground_color(k, r, j), ground_mode(k, r, l, j)});
  Path p(k, r, l, std::move(prefix));
  for (int j = 1; j <= horizon + 1; ++j)
    if (local_energy(p.entry(j), p.entry(j + 1), k) != k)
      throw std::logic_error("ground_state_path: adjacency energy differs from the level");
  return p;
}

std::pair<int, int> tail_label(int k, int r, int l, int position)
{
  const int a = ground_color(k, r, position);
  const int n = ground_mode(k, r, l, position);
  return {k - a, a - n};
}

int vacuum_bound(int k, int j, int l, int a)
{
  return EnergyFunction(k).color(a, k - j) - j - l;
}

bool respects_vacuum_bound(const Path& p)
{
  const int i = p.last_deviation();
  if (i == 0)
    return true;
  const auto [j, lambda] = tail_label(p.level(), p.r(), p.l(), i + 1);
  const Generator g = p.entry(i);
  return g.mode <= vacuum_bound(p.level(), j, lambda, g.color);
}

bool vacuum_saturation_check(int k, int r, int l, int horizon)
{
  for (int p = 1; p <= horizon; ++p) {
    const auto [j, lambda] = tail_label(k, r, l, p + 1);
    if (ground_color(k, r, p) != j || ground_mode(k, r, l, p) != -lambda)
      return false;
    if (vacuum_bound(k, j, lambda, j) != -lambda)
      return false;
    if (tail_label(k, r, l, p) != std::pair<int, int>{k - j, lambda + j})
      return false;
  }
  return true;
}

PathWeight path_weight(const Path& p)
{
  PathWeight w;
  for (int j = 1; j <= p.horizon(); ++j) {
    const Generator g = p.entry(j);
    w.alpha1_offset -= g.color - ground_color(p.level(), p.r(), j);
    w.delta_offset += g.mode - ground_mode(p.level(), p.r(), p.l(), j);
  }
  return w;
}

namespace {

// Backward search state: positions horizon..j+1 are fixed.
struct SearchState {
  int position;  // next position to fill
  int energy;
  std::vector<Generator> suffix;  // entries position+1 .. horizon+1, nearest first
};

class PathSearch {
 public:
  PathSearch(int k, int r, int l, int cutoff, bool reduced_only, int horizon)
      : k_(k), r_(r), l_(l), cutoff_(cutoff), reduced_(reduced_only), horizon_(horizon), h_(k)
  {
    ground_h_.assign(static_cast<std::size_t>(horizon + 1), 0);
    for (int j = 1; j <= horizon; ++j)
      ground_h_[static_cast<std::size_t>(j)] = h_.color(ground_color(k, r, j), ground_color(k, r, j + 1));
    // floor_[j][b]: least energy positions 1..j can contribute when a_{j+1} = b.
    floor_.assign(static_cast<std::size_t>(horizon + 1), std::vector<int>(static_cast<std::size_t>(k + 1), 0));
    for (int j = 1; j <= horizon; ++j)
      for (int b = 0; b <= k; ++b) {
        int best = 0;
        bool first = true;
        for (int a = 0; a <= k; ++a) {
          const int v = floor_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(a)] + cost(j, a, b);
          if (first || v < best)
            best = v;
          first = false;
        }
        floor_[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] = best;
      }
  }

  SearchState root() const
  {
    return {horizon_, 0, {{ground_color(k_, r_, horizon_ + 1), ground_mode(k_, r_, l_, horizon_ + 1)}}};
  }

  // Children of a state, in deterministic order (color, then slack).
  std::vector<SearchState> expand(const SearchState& st) const
  {
    std::vector<SearchState> out;
    const int j = st.position;
    const Generator next = st.suffix.back();
    for (int a = 0; a <= k_; ++a) {
      const int base = st.energy + cost(j, a, next.color);
      for (int slack = 0;; ++slack) {
        const int e = base + j * slack;
        if (e + floor_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(a)] > cutoff_)
          break;
        SearchState child{j - 1, e, st.suffix};
        child.suffix.push_back({a, next.mode + h_.color(a, next.color) - k_ - slack});
        out.push_back(std::move(child));
        if (reduced_)
          break;
      }
    }
    return out;
  }

  void run(const SearchState& st, std::vector<Path>& out) const
  {
    if (st.position == 0) {
      std::vector<Generator> prefix(st.suffix.rbegin(), st.suffix.rend() - 1);
      out.emplace_back(k_, r_, l_, std::move(prefix));
      return;
    }
    for (const auto& child : expand(st))
      run(child, out);
  }

 private:
  int cost(int j, int a, int b) const
  {
    return j * (ground_h_[static_cast<std::size_t>(j)] - h_.color(a, b));
  }

  int k_, r_, l_, cutoff_;
  bool reduced_;
  int horizon_;
  EnergyFunction h_;
  std::vector<int> ground_h_;
  std::vector<std::vector<int>> floor_;
};

}  // namespace

PathEnumeration enumerate_paths(int k, int r, int l, int cutoff, bool reduced_only, Exec exec, int horizon)
{
  if (r < 0 || r > k || cutoff < 0)
    throw std::invalid_argument("enumerate_paths: need 0 <= r <= k and cutoff >= 0");
  PathEnumeration res;
  res.horizon = horizon >= 0 ? horizon : 2 * cutoff + 4;
  const PathSearch search(k, r, l, cutoff, reduced_only, res.horizon);

  if (exec == Exec::serial) {
    search.run(search.root(), res.paths);
    return res;
  }
  // Breadth-first split until there is enough independent work.
  std::vector<SearchState> frontier{search.root()};
  while (frontier.size() < 256 && !frontier.empty() && frontier.front().position > 0) {
    std::vector<SearchState> next;
    for (const auto& st : frontier)
      for (auto& c : search.expand(st))
        next.push_back(std::move(c));
    frontier = std::move(next);
  }
  std::vector<std::vector<Path>> parts(frontier.size());
  const long n = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i)
    search.run(frontier[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(i)]);
  for (auto& part : parts)
    for (auto& p : part)
      res.paths.push_back(std::move(p));
  return res;
}

bool energy_sum_check(const Path& p)
{
  if (!p.is_reduced())
    throw std::invalid_argument("energy_sum_check: path is not reduced");
  const EnergyFunction h(p.level());
  long lhs = 0, rhs = 0;
  for (int j = 1; j <= p.horizon(); ++j) {
    lhs += p.entry(j).mode - ground_mode(p.level(), p.r(), p.l(), j);
    rhs += static_cast<long>(j) *
           (h.color(p.entry(j).color, p.entry(j + 1).color) -
            h.color(ground_color(p.level(), p.r(), j), ground_color(p.level(), p.r(), j + 1)));
  }
  return lhs == rhs;
}

BiGradedSeries path_series(const std::vector<Path>& paths, int cutoff)
{
  BiGradedSeries s(cutoff);
  for (const auto& p : paths) {
    const PathWeight w = path_weight(p);
    s.add(w.alpha1_offset, -w.delta_offset, 1);
  }
  return s;
}

PathCharacter path_character(int k, int r, int l, int cutoff, Exec exec)
{
  PathCharacter ch{BiGradedSeries(cutoff), BiGradedSeries(cutoff)};
  const PathEnumeration all = enumerate_paths(k, r, l, cutoff, false, exec);
  ch.full = path_series(all.paths, cutoff);
  ch.reduced = path_series(enumerate_paths(k, r, l, cutoff, true, exec).paths, cutoff);
  ch.factorization_holds = (series_multiply(ch.reduced, inverse_euler_factor(cutoff)) == ch.full);
  const auto wider = enumerate_paths(k, r, l, cutoff, false, exec, all.horizon + 2);
  ch.horizon_stable = (path_series(wider.paths, cutoff) == ch.full);
  return ch;
}

namespace {

// Geometric series sum_i x^{step*i} q^{n*i}.
BiGradedSeries geometric(int cutoff, int step, int n)
{
  BiGradedSeries g(cutoff);
  for (int i = 0; n * i <= cutoff; ++i)
    g.add(step * i, n * i, 1);
  return g;
}

}  // namespace

BiGradedSeries kac_character(int k, int r, int cutoff, bool heisenberg)
{
  if (r < 0 || r > k || cutoff < 0)
    throw std::invalid_argument("kac_character: need 0 <= r <= k and cutoff >= 0");
  const int big = k + 2;
  // Alternating sum over the affine Weyl group: translations by m and their
  // reflected partners.
  std::map<int, std::map<int, std::int64_t>> numerator;  // energy -> x -> c
  for (int m = -(cutoff + 1); m <= cutoff + 1; ++m) {
    const int e1 = big * m * m + (r + 1) * m;
    if (e1 >= 0 && e1 <= cutoff)
      numerator[e1][big * m] += 1;
    const int e2 = big * m * m - (r + 1) * m;
    if (e2 >= 0 && e2 <= cutoff)
      numerator[e2][big * m - (r + 1)] -= 1;
  }
  // Exact division by (1 - x^-1) at each energy: q_i = p_i + q_{i+1}.
  BiGradedSeries s(cutoff);
  for (const auto& [e, poly] : numerator) {
    if (poly.empty())
      continue;
    const int hi = poly.rbegin()->first, lo = poly.begin()->first;
    std::int64_t carry = 0;
    for (int i = hi; i >= lo; --i) {
      auto it = poly.find(i);
      carry += (it == poly.end()) ? 0 : it->second;
      if (carry != 0)
        s.add(i, e, carry);
    }
    if (carry != 0)
      throw std::logic_error("kac_character: numerator not divisible by the finite denominator");
  }
  for (int n = 1; n <= cutoff; ++n) {
    s = series_multiply(s, geometric(cutoff, -1, n));
    s = series_multiply(s, geometric(cutoff, 1, n));
    s = series_multiply(s, geometric(cutoff, 0, n));
    if (heisenberg)
      s = series_multiply(s, geometric(cutoff, 0, n));
  }
  return s;
}

std::vector<std::int64_t> partition_numbers(int n)
{
  std::vector<std::int64_t> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int i = part; i <= n; ++i)
      p[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i - part)];
  return p;
}

BiGradedSeries frenkel_kac_level_one(int cutoff)
{
  const auto p = partition_numbers(cutoff);
  BiGradedSeries s(cutoff);
  for (int m = -cutoff; m <= cutoff; ++m)
    for (int n = 0; m * m + n <= cutoff; ++n)
      s.add(m, m * m + n, p[static_cast<std::size_t>(n)]);
  return s;
}

}  // namespace monobasis

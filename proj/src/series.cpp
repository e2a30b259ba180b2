#include "monobasis/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace monobasis {

BiGradedSeries::BiGradedSeries(int cutoff) : cutoff_(cutoff)
{
  if (cutoff < 0)
    throw std::invalid_argument("BiGradedSeries: negative cutoff");
}

BiGradedSeries BiGradedSeries::one(int cutoff)
{
  BiGradedSeries s(cutoff);
  s.add(0, 0, 1);
  return s;
}

void BiGradedSeries::add(int alpha, int grade, std::int64_t c)
{
  if (c == 0 || std::abs(grade) > cutoff_)
    return;
  auto [it, inserted] = coeffs_.try_emplace(Key{alpha, grade}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      coeffs_.erase(it);
  }
}

std::int64_t BiGradedSeries::coefficient(int alpha, int grade) const
{
  auto it = coeffs_.find(Key{alpha, grade});
  return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t BiGradedSeries::grade_total(int grade) const
{
  std::int64_t total = 0;
  for (const auto& [key, c] : coeffs_)
    if (key.second == grade)
      total += c;
  return total;
}

bool BiGradedSeries::non_negative() const
{
  for (const auto& [key, c] : coeffs_)
    if (c < 0)
      return false;
  return true;
}

BiGradedSeries& BiGradedSeries::operator+=(const BiGradedSeries& o)
{
  if (o.cutoff_ != cutoff_)
    throw std::invalid_argument("BiGradedSeries: cutoff mismatch");
  for (const auto& [key, c] : o.coeffs_)
    add(key.first, key.second, c);
  return *this;
}

BiGradedSeries& BiGradedSeries::operator-=(const BiGradedSeries& o)
{
  if (o.cutoff_ != cutoff_)
    throw std::invalid_argument("BiGradedSeries: cutoff mismatch");
  for (const auto& [key, c] : o.coeffs_)
    add(key.first, key.second, -c);
  return *this;
}

std::string BiGradedSeries::to_csv() const
{
  std::vector<std::tuple<int, int, std::int64_t>> rows;
  for (const auto& [key, c] : coeffs_)
    rows.emplace_back(key.second, key.first, c);
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  os << "alpha1_offset,energy,multiplicity\n";
  for (const auto& [g, a, c] : rows)
    os << a << ',' << g << ',' << c << '\n';
  return os.str();
}

BiGradedSeries series_multiply(const BiGradedSeries& a, const BiGradedSeries& b)
{
  if (a.cutoff() != b.cutoff())
    throw std::invalid_argument("series_multiply: cutoff mismatch");
  BiGradedSeries out(a.cutoff());
  for (const auto& [ka, ca] : a.coefficients())
    for (const auto& [kb, cb] : b.coefficients())
      out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BiGradedSeries inverse_euler_factor(int cutoff, int power)
{
  BiGradedSeries s = BiGradedSeries::one(cutoff);
  for (int p = 0; p < power; ++p)
    for (int n = 1; n <= cutoff; ++n) {
      BiGradedSeries geo(cutoff);
      for (int i = 0; n * i <= cutoff; ++i)
        geo.add(0, n * i, 1);
      s = series_multiply(s, geo);
    }
  return s;
}

}  // namespace monobasis

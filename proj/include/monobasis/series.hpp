#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace monobasis {

// Truncated two-variable integer series sum c(x, g) X^x Q^g. The first index
// is an alpha_1-offset, the second a grade (energy in characters); terms
// with |grade| > cutoff are dropped on insertion.
class BiGradedSeries {
 public:
  using Key = std::pair<int, int>;  // (alpha1 offset, grade)
  using CoefficientMap = std::map<Key, std::int64_t>;

  explicit BiGradedSeries(int cutoff);

  static BiGradedSeries one(int cutoff);

  int cutoff() const { return cutoff_; }
  const CoefficientMap& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add(int alpha, int grade, std::int64_t c);
  std::int64_t coefficient(int alpha, int grade) const;

  // Sum of coefficients at a given grade.
  std::int64_t grade_total(int grade) const;
  bool non_negative() const;

  BiGradedSeries& operator+=(const BiGradedSeries& o);
  BiGradedSeries& operator-=(const BiGradedSeries& o);
  friend BiGradedSeries operator+(BiGradedSeries a, const BiGradedSeries& b) { return a += b; }
  friend BiGradedSeries operator-(BiGradedSeries a, const BiGradedSeries& b) { return a -= b; }
  friend bool operator==(const BiGradedSeries&, const BiGradedSeries&) = default;

  // Rows "alpha1_offset,energy,multiplicity", ordered by grade then offset.
  std::string to_csv() const;

 private:
  int cutoff_;
  CoefficientMap coeffs_;
};

// Truncated convolution; throws std::invalid_argument on cutoff mismatch.
BiGradedSeries series_multiply(const BiGradedSeries& a, const BiGradedSeries& b);

// prod_{n=1}^{cutoff} (1 - Q^n)^(-power).
BiGradedSeries inverse_euler_factor(int cutoff, int power = 1);

}  // namespace monobasis

#include "monobasis/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace monobasis {

namespace {

// a - factor * b, both sorted.
SparseRow axpy(const SparseRow& a, const Rational& factor, const SparseRow& b)
{
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -factor * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - factor * b[j].second;
      if (sgn(v) != 0)
        out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow to_sparse(const DenseVector& v)
{
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0)
      row.emplace_back(i, v[i]);
  return row;
}

EchelonBasis::EchelonBasis(std::size_t columns) : columns_(columns), pivot_row_(columns, -1) {}

SparseRow EchelonBasis::reduce(SparseRow row) const
{
  while (!row.empty()) {
    const long p = pivot_row_[row.front().first];
    if (p < 0)
      break;
    const Rational lead = row.front().second;
    row = axpy(row, lead, rows_[static_cast<std::size_t>(p)]);
  }
  return row;
}

bool EchelonBasis::insert(SparseRow row)
{
  for (const auto& [c, v] : row)
    if (c >= columns_)
      throw std::out_of_range("EchelonBasis::insert: column out of range");
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  row = reduce(std::move(row));
  if (row.empty())
    return false;
  const Rational lead = row.front().second;
  for (auto& [c, v] : row)
    v /= lead;
  pivot_row_[row.front().first] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool EchelonBasis::contains(SparseRow row) const
{
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return reduce(std::move(row)).empty();
}

DenseMatrix EchelonBasis::nullspace() const
{
  // Back-substitute into reduced row-echelon form, highest pivot first.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });

  std::vector<SparseRow> reduced(rows_.size());
  for (std::size_t idx : order) {
    SparseRow row = rows_[idx];
    // Eliminate every non-leading entry that sits on another pivot column.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t pos = 1; pos < row.size(); ++pos) {
        const long p = pivot_row_[row[pos].first];
        if (p >= 0) {
          const Rational f = row[pos].second;
          row = axpy(row, f, reduced[static_cast<std::size_t>(p)]);
          changed = true;
          break;
        }
      }
    }
    reduced[idx] = std::move(row);
  }

  DenseMatrix basis;
  for (std::size_t free = 0; free < columns_; ++free) {
    if (pivot_row_[free] >= 0)
      continue;
    DenseVector v(columns_, Rational(0));
    v[free] = 1;
    for (const auto& row : reduced)
      for (const auto& [c, val] : row)
        if (c == free)
          v[row.front().first] = -val;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const DenseMatrix& rows)
{
  if (rows.empty())
    return 0;
  EchelonBasis e(rows.front().size());
  for (const auto& r : rows)
    e.insert(r);
  return e.rank();
}

std::optional<DenseVector> solve_unique(DenseMatrix a, DenseVector b)
{
  const std::size_t m = a.size();
  if (b.size() != m)
    throw std::invalid_argument("solve_unique: dimension mismatch");
  const std::size_t n = m == 0 ? 0 : a.front().size();
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && sgn(a[p][col]) == 0)
      ++p;
    if (p == m)
      continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < n; ++j)
      a[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || sgn(a[i][col]) == 0)
        continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < n; ++j)
        a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (sgn(b[i]) != 0)
      return std::nullopt;
  if (pivot_col.size() != n)
    return std::nullopt;
  DenseVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace monobasis

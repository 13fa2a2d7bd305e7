// Exact convex-hull membership.

#include <algorithm>
#include <optional>

#include "cgeom/constructions.hpp"
#include "cgeom/errors.hpp"

namespace cgeom {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Rank by Bareiss elimination after clearing each row's denominators.
std::size_t integer_rank(const Matrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<Integer>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    Integer scale = 1;
    for (const auto& v : row) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(v));
    std::vector<Integer> r;
    r.reserve(cols);
    for (const auto& v : row)
      r.push_back(boost::multiprecision::numerator(v) * (scale / boost::multiprecision::denominator(v)));
    a.push_back(std::move(r));
  }

  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Solve the (d+1) x k system [S; 1...1] λ = [p; 1] for affinely independent
// S. Returns λ if the system is consistent.
std::optional<std::vector<Rational>> barycentric(const Point& p, std::span<const Point* const> s) {
  const std::size_t d = p.size(), k = s.size();
  Matrix m(d + 1, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = (*s[c])[r];
    m[r][k] = p[r];
  }
  for (std::size_t c = 0; c < k; ++c) m[d][c] = 1;
  m[d][k] = 1;

  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < k && row <= d; ++col) {
    std::size_t piv = row;
    while (piv <= d && m[piv][col] == 0) ++piv;
    if (piv > d) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[row][col];
      for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i <= d; ++i)
    if (m[i][k] != 0) return std::nullopt;
  if (pivot_col.size() != k) return std::nullopt;  // not full column rank
  std::vector<Rational> lambda(k);
  for (std::size_t i = 0; i < k; ++i) lambda[pivot_col[i]] = m[i][k] / m[i][pivot_col[i]];
  return lambda;
}

bool independent(std::span<const Point* const> s) {
  if (s.size() <= 1) return true;
  Matrix diffs;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::vector<Rational> row(s[0]->size());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = (*s[i])[j] - (*s[0])[j];
    diffs.push_back(std::move(row));
  }
  return integer_rank(diffs) == s.size() - 1;
}

}  // namespace

bool affinely_independent(std::span<const Point> xs) {
  std::vector<const Point*> ptrs;
  for (const auto& x : xs) ptrs.push_back(&x);
  return independent(ptrs);
}

bool point_in_hull(const Point& p, std::span<const Point> xs) {
  const std::size_t d = p.size();
  for (const auto& x : xs)
    if (x.size() != d) throw DimensionMismatch("point dimensions differ");
  if (xs.empty()) return false;

  const std::size_t max_k = std::min(d + 1, xs.size());
  std::vector<const Point*> subset;
  for (std::size_t k = 1; k <= max_k; ++k) {
    // Enumerate k-subsets of xs in lexicographic index order.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      subset.clear();
      for (auto i : idx) subset.push_back(&xs[i]);
      if (independent(subset)) {
        if (auto lambda = barycentric(p, subset);
            lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational& v) { return v >= 0; }))
          return true;
      }
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == xs.size() - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return false;
}

}  // namespace cgeom

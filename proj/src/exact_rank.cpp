#include "pathideal/exact_rank.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

namespace pathideal {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

// Checked arithmetic for int64; the arbitrary-precision instantiation uses
// the plain operators.
std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t neg(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return -a;
}
std::int64_t gcd_of(std::int64_t a, std::int64_t b) {
  a = a < 0 ? neg(a) : a;
  b = b < 0 ? neg(b) : b;
  while (b != 0) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
BigInt neg(const BigInt& a) { return -a; }
BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <class T>
using Row = std::vector<std::pair<std::size_t, T>>;

template <class T>
void normalize(Row<T>& row) {
  T g = 0;
  for (const auto& [col, v] : row) {
    g = gcd_of(g, v);
    if (g == 1) break;
  }
  const bool flip = row.front().second < 0;
  if (g != 1 || flip) {
    for (auto& [col, v] : row) {
      v /= g;
      if (flip) v = neg(v);
    }
  }
}

// row <- a*row - b*pivot, where a = pivot lead and b = row lead.
template <class T>
Row<T> eliminate(const Row<T>& row, const Row<T>& pivot) {
  const T a = pivot.front().second;
  const T b = row.front().second;
  Row<T> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1;
  std::size_t j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, mul(a, row[i].second));
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, neg(mul(b, pivot[j].second)));
      ++j;
    } else {
      T v = sub(mul(a, row[i].second), mul(b, pivot[j].second));
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
std::size_t echelon_rank(const std::vector<SparseRow>& rows) {
  std::size_t columns = 0;
  for (const auto& r : rows) {
    if (!r.empty()) columns = std::max(columns, r.back().first + 1);
  }
  std::vector<std::optional<Row<T>>> pivots(columns);
  std::size_t rank = 0;
  for (const auto& input : rows) {
    Row<T> row;
    row.reserve(input.size());
    for (const auto& [col, v] : input) {
      if (v != 0) row.emplace_back(col, T(v));
    }
    while (!row.empty()) {
      auto& slot = pivots[row.front().first];
      if (!slot) {
        normalize(row);
        slot = std::move(row);
        ++rank;
        break;
      }
      row = eliminate(row, *slot);
      if (!row.empty()) normalize(row);
    }
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const std::vector<SparseRow>& rows) {
  try {
    return echelon_rank<std::int64_t>(rows);
  } catch (const Overflow&) {
    return echelon_rank<BigInt>(rows);
  }
}

std::size_t bareiss_rank(const std::vector<std::vector<std::int64_t>>& matrix) {
  if (matrix.empty()) return 0;
  const std::size_t m = matrix.size();
  const std::size_t n = matrix.front().size();
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = matrix[i].at(j);
  }
  BigInt previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / previous;
      }
      a[i][col] = 0;
    }
    previous = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace pathideal

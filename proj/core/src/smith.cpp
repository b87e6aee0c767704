#include "monotop/smith.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "monotop/errors.hpp"

namespace monotop {

void SparseIntMatrix::push(std::size_t i, std::size_t j, long long value) {
  if (i >= rows_ || j >= columns_.size()) throw PreconditionError("matrix index out of range");
  if (value == 0) return;
  auto& col = columns_[j];
  if (!col.empty() && col.back().first >= i) {
    set(i, j, at(i, j) + value);
    return;
  }
  col.emplace_back(static_cast<std::uint32_t>(i), value);
}

void SparseIntMatrix::set(std::size_t i, std::size_t j, long long value) {
  if (i >= rows_ || j >= columns_.size()) throw PreconditionError("matrix index out of range");
  auto& col = columns_[j];
  auto it = std::lower_bound(col.begin(), col.end(), static_cast<std::uint32_t>(i),
                             [](const Entry& e, std::uint32_t r) { return e.first < r; });
  if (it != col.end() && it->first == i) {
    if (value == 0) {
      col.erase(it);
    } else {
      it->second = value;
    }
  } else if (value != 0) {
    col.insert(it, Entry{static_cast<std::uint32_t>(i), value});
  }
}

long long SparseIntMatrix::at(std::size_t i, std::size_t j) const {
  const auto& col = columns_.at(j);
  auto it = std::lower_bound(col.begin(), col.end(), static_cast<std::uint32_t>(i),
                             [](const Entry& e, std::uint32_t r) { return e.first < r; });
  return (it != col.end() && it->first == i) ? it->second : 0;
}

std::vector<std::vector<long long>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols(), 0));
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& [i, v] : columns_[j]) out[i][j] = v;
  }
  return out;
}

std::vector<BigInt> SmithForm::torsion() const {
  std::vector<BigInt> out;
  for (const auto& d : invariant_factors) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

BigInt CokernelImage::free_content() const {
  BigInt g = 0;
  for (const auto& c : free_coordinates) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? BigInt{-g} : g;
}

std::vector<BigInt> invariant_factors_of_diagonal(std::vector<BigInt> diagonal) {
  for (auto& d : diagonal) {
    if (d == 0) throw PreconditionError("invariant factors need nonzero diagonal entries");
    if (d < 0) d = -d;
  }
  std::sort(diagonal.begin(), diagonal.end());
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      const BigInt g = boost::multiprecision::gcd(diagonal[i], diagonal[j]);
      if (g == diagonal[i]) continue;
      const BigInt l = diagonal[i] / g * diagonal[j];
      diagonal[i] = g;
      diagonal[j] = l;
    }
  }
  return diagonal;
}

namespace {

struct Overflow {};

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

class Eliminator {
 public:
  using RowEntry = std::pair<std::uint32_t, long long>;  // (column, value)

  Eliminator(const SparseIntMatrix& m, std::vector<BigInt>* extra)
      : rows_(m.rows()),
        row_removed_(m.rows(), false),
        col_rows_(m.cols()),
        col_removed_(m.cols(), false),
        extra_(extra) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& [i, v] : m.column(j)) {
        rows_[i].emplace_back(static_cast<std::uint32_t>(j), v);
        col_rows_[j].push_back(i);
      }
    }
  }

  void run() {
    sparse_phase();
    dense_phase();
  }

  std::size_t rank() const { return unit_pivots_ + dense_diagonal_.size(); }

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> out(unit_pivots_, BigInt{1});
    out.insert(out.end(), dense_diagonal_.begin(), dense_diagonal_.end());
    return out;
  }

  CokernelImage image() const {
    CokernelImage out;
    const auto& z = *extra_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!row_removed_[r] && !in_dense_[r]) out.free_coordinates.push_back(z[r]);
    }
    for (std::size_t t = 0; t < dense_rows_.size(); ++t) {
      const BigInt& zr = z[dense_rows_[t]];
      if (t < dense_diagonal_.size()) {
        BigInt d = dense_diagonal_[t] < 0 ? BigInt{-dense_diagonal_[t]} : dense_diagonal_[t];
        if (d == 1) continue;
        BigInt c = zr % d;
        if (c < 0) c += d;
        out.torsion_coordinates.emplace_back(c, d);
      } else {
        out.free_coordinates.push_back(zr);
      }
    }
    return out;
  }

 private:
  void sparse_phase() {
    using Key = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
    for (std::uint32_t j = 0; j < col_rows_.size(); ++j) heap.emplace(col_rows_[j].size(), j);
    std::vector<std::uint32_t> deferred;
    bool progress = false;
    while (true) {
      if (heap.empty()) {
        if (!progress || deferred.empty()) break;
        for (auto j : deferred) heap.emplace(col_rows_[j].size(), j);
        deferred.clear();
        progress = false;
        continue;
      }
      auto [len, col] = heap.top();
      heap.pop();
      if (col_removed_[col] || col_rows_[col].empty()) continue;
      if (len != col_rows_[col].size()) {
        heap.emplace(col_rows_[col].size(), col);
        continue;
      }
      std::optional<std::uint32_t> best;
      for (auto r : col_rows_[col]) {
        const long long v = value(r, col);
        if (v != 1 && v != -1) continue;
        if (!best || rows_[r].size() < rows_[*best].size()) best = r;
      }
      if (!best) {
        deferred.push_back(col);
        continue;
      }
      try {
        pivot(*best, col);
      } catch (const Overflow&) {
        // Leave the remaining work to the arbitrary-precision phase.
        return;
      }
      progress = true;
    }
  }

  long long value(std::uint32_t r, std::uint32_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const RowEntry& e, std::uint32_t x) { return e.first < x; });
    return (it != row.end() && it->first == c) ? it->second : 0;
  }

  static void erase_value(std::vector<std::uint32_t>& v, std::uint32_t x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it != v.end()) {
      *it = v.back();
      v.pop_back();
    }
  }

  // Eliminates column `c` with the unit entry in row `p`. All new rows are
  // computed before anything is committed, so an overflow leaves the matrix
  // untouched.
  void pivot(std::uint32_t p, std::uint32_t c) {
    const long long u = value(p, c);
    const auto& prow = rows_[p];
    std::vector<std::pair<std::uint32_t, std::vector<RowEntry>>> updates;
    std::vector<long long> factors;
    for (auto r : col_rows_[c]) {
      if (r == p) continue;
      const long long f = checked_mul(value(r, c), u);
      std::vector<RowEntry> merged;
      const auto& row = rows_[r];
      merged.reserve(row.size() + prow.size());
      std::size_t a = 0;
      std::size_t b = 0;
      while (a < row.size() || b < prow.size()) {
        if (b == prow.size() || (a < row.size() && row[a].first < prow[b].first)) {
          merged.push_back(row[a++]);
        } else if (a == row.size() || prow[b].first < row[a].first) {
          merged.emplace_back(prow[b].first, checked_mul(-f, prow[b].second));
          ++b;
        } else {
          const long long v = checked_sub(row[a].second, checked_mul(f, prow[b].second));
          if (v != 0) merged.emplace_back(row[a].first, v);
          ++a;
          ++b;
        }
      }
      updates.emplace_back(r, std::move(merged));
      factors.push_back(f);
    }

    for (std::size_t k = 0; k < updates.size(); ++k) {
      auto& [r, merged] = updates[k];
      // Column membership changes only on columns of the pivot row.
      for (const auto& [col, v] : prow) {
        if (col == c) continue;
        const bool before = value(r, col) != 0;
        auto it = std::lower_bound(merged.begin(), merged.end(), col,
                                   [](const RowEntry& e, std::uint32_t x) { return e.first < x; });
        const bool after = it != merged.end() && it->first == col;
        if (before && !after) erase_value(col_rows_[col], r);
        if (!before && after) col_rows_[col].push_back(r);
      }
      rows_[r] = std::move(merged);
      if (extra_) (*extra_)[r] -= BigInt(factors[k]) * (*extra_)[p];
    }
    for (const auto& [col, v] : prow) {
      if (col != c) erase_value(col_rows_[col], p);
    }
    col_rows_[c].clear();
    col_removed_[c] = true;
    rows_[p].clear();
    row_removed_[p] = true;
    ++unit_pivots_;
  }

  void dense_phase() {
    in_dense_.assign(rows_.size(), false);
    std::vector<std::uint32_t> cols;
    for (std::uint32_t j = 0; j < col_rows_.size(); ++j) {
      if (!col_removed_[j] && !col_rows_[j].empty()) cols.push_back(j);
    }
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (!row_removed_[r] && !rows_[r].empty()) {
        dense_rows_.push_back(r);
        in_dense_[r] = true;
      }
    }
    if (dense_rows_.empty() || cols.empty()) return;

    std::vector<std::size_t> col_pos(col_rows_.size(), 0);
    for (std::size_t k = 0; k < cols.size(); ++k) col_pos[cols[k]] = k;
    const std::size_t R = dense_rows_.size();
    const std::size_t C = cols.size();
    std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(C, 0));
    for (std::size_t i = 0; i < R; ++i) {
      for (const auto& [col, v] : rows_[dense_rows_[i]]) a[i][col_pos[col]] = v;
    }

    auto abs_less = [](const BigInt& x, const BigInt& y) { return abs(x) < abs(y); };
    auto swap_rows = [&](std::size_t i, std::size_t k) {
      if (i == k) return;
      std::swap(a[i], a[k]);
      std::swap(dense_rows_[i], dense_rows_[k]);
    };
    auto swap_cols = [&](std::size_t j, std::size_t k) {
      if (j == k) return;
      for (auto& row : a) std::swap(row[j], row[k]);
    };

    for (std::size_t t = 0; t < std::min(R, C); ++t) {
      // Global minimum of the trailing submatrix as the first pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < R; ++i) {
        for (std::size_t j = t; j < C; ++j) {
          if (a[i][j] != 0 && (!best || abs_less(a[i][j], a[best->first][best->second]))) {
            best = {i, j};
          }
        }
      }
      if (!best) break;
      swap_rows(t, best->first);
      swap_cols(t, best->second);

      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < R; ++i) {
          if (a[i][t] == 0) continue;
          const BigInt q = a[i][t] / a[t][t];
          if (q != 0) {
            for (std::size_t j = t; j < C; ++j) {
              if (a[t][j] != 0) a[i][j] -= q * a[t][j];
            }
            if (extra_) (*extra_)[dense_rows_[i]] -= q * (*extra_)[dense_rows_[t]];
          }
          if (a[i][t] != 0) clean = false;
        }
        if (clean) {
          for (std::size_t j = t + 1; j < C; ++j) {
            if (a[t][j] == 0) continue;
            const BigInt q = a[t][j] / a[t][t];
            // Column t is zero below the pivot, so only row t changes.
            a[t][j] -= q * a[t][t];
            if (a[t][j] != 0) clean = false;
          }
        }
        if (clean) break;
        // A remainder smaller than the pivot exists in row t or column t.
        std::size_t bi = t;
        std::size_t bj = t;
        for (std::size_t i = t + 1; i < R; ++i) {
          if (a[i][t] != 0 && abs_less(a[i][t], a[bi][bj])) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < C; ++j) {
          if (a[t][j] != 0 && abs_less(a[t][j], a[bi][bj])) {
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
      }
      dense_diagonal_.push_back(a[t][t]);
    }
  }

  std::vector<std::vector<RowEntry>> rows_;
  std::vector<bool> row_removed_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<bool> col_removed_;
  std::vector<BigInt>* extra_;
  std::size_t unit_pivots_ = 0;
  std::vector<std::uint32_t> dense_rows_;
  std::vector<bool> in_dense_;
  std::vector<BigInt> dense_diagonal_;
};

}  // namespace

SmithForm smith_normal_form(const SparseIntMatrix& m) {
  Eliminator e(m, nullptr);
  e.run();
  SmithForm out;
  out.rank = e.rank();
  out.invariant_factors = invariant_factors_of_diagonal(e.diagonal());
  return out;
}

CokernelImage cokernel_image(const SparseIntMatrix& m, std::span<const BigInt> v) {
  if (v.size() != m.rows()) throw PreconditionError("cokernel_image: vector length mismatch");
  std::vector<BigInt> z(v.begin(), v.end());
  Eliminator e(m, &z);
  e.run();
  return e.image();
}

}  // namespace monotop

#include "species/lp.hpp"

#include <cstdint>

#include "species/errors.hpp"

namespace species {

namespace {

using Int = std::int64_t;
using Wide = __int128;

Int narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) throw InvariantError("simplex: tableau entry overflow");
  return static_cast<Int>(v);
}

class Tableau {
 public:
  Tableau(const std::vector<std::vector<int>>& rows, std::size_t nvars)
      : m_(rows.size()), nv_(nvars), cols_(2 * nvars + 2 * rows.size() + 1), basis_(rows.size()) {
    cells_.assign((m_ + 1) * cols_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < nv_; ++k) {
        at(i, k) = rows[i][k];
        at(i, nv_ + k) = -rows[i][k];
      }
      at(i, 2 * nv_ + i) = -1;
      at(i, 2 * nv_ + m_ + i) = 1;
      at(i, rhs()) = 1;
      basis_[i] = 2 * nv_ + m_ + i;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_artificial(j)) continue;
      Int sum = 0;
      for (std::size_t i = 0; i < m_; ++i) sum += at(i, j);
      at(m_, j) = -sum;
    }
  }

  bool run() {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < rhs(); ++j) {
        if (!is_artificial(j) && at(m_, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) break;
      std::size_t leave = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (at(i, enter) <= 0) continue;
        if (leave == m_) {
          leave = i;
          continue;
        }
        const Wide lhs = static_cast<Wide>(at(i, rhs())) * at(leave, enter);
        const Wide rhs_v = static_cast<Wide>(at(leave, rhs())) * at(i, enter);
        if (lhs < rhs_v || (lhs == rhs_v && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == m_) throw InvariantError("simplex: unbounded phase-one problem");
      pivot(leave, enter);
    }
    return at(m_, rhs()) == 0;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(nv_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t j = basis_[i];
      if (j >= 2 * nv_) continue;
      Rational v(static_cast<long>(at(i, rhs())), static_cast<long>(denom_));
      v.canonicalize();
      if (j < nv_) {
        x[j] += v;
      } else {
        x[j - nv_] -= v;
      }
    }
    return x;
  }

 private:
  Int& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  Int at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  std::size_t rhs() const { return cols_ - 1; }
  bool is_artificial(std::size_t j) const { return j >= 2 * nv_ + m_ && j < rhs(); }

  void pivot(std::size_t r, std::size_t c) {
    const Int p = at(r, c);
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const Int q = at(i, c);
      for (std::size_t j = 0; j < cols_; ++j) {
        const Wide v = static_cast<Wide>(at(i, j)) * p - static_cast<Wide>(q) * at(r, j);
        if (v % denom_ != 0) throw InvariantError("simplex: inexact integer pivot");
        at(i, j) = narrow(v / denom_);
      }
    }
    denom_ = p;
    basis_[r] = c;
  }

  std::size_t m_;
  std::size_t nv_;
  std::size_t cols_;
  std::vector<std::size_t> basis_;
  std::vector<Int> cells_;
  Int denom_ = 1;
};

}  // namespace

std::optional<std::vector<Rational>> solve_ge_one(const std::vector<std::vector<int>>& rows,
                                                  std::size_t nvars) {
  for (const auto& row : rows) {
    if (row.size() != nvars) throw DomainError("solve_ge_one: row length mismatch");
  }
  if (rows.empty()) return std::vector<Rational>(nvars, 0);
  Tableau tableau(rows, nvars);
  if (!tableau.run()) return std::nullopt;
  return tableau.solution();
}

}  // namespace species

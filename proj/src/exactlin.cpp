#include "species/exactlin.hpp"

#include <algorithm>

namespace species {

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

IntRow clear_denominators(const SparseRow& row) {
  mpz_class common = 1;
  for (const auto& [j, c] : row) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.re().get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [j, c] : row) {
    mpz_class v = c.re().get_num() * (common / c.re().get_den());
    out.emplace_back(j, std::move(v));
  }
  return out;
}

void remove_content(IntRow& row) {
  mpz_class g = 0;
  for (const auto& [j, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& [j, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// a := p*a - q*b, dropping zeros.
IntRow combine(const IntRow& a, const mpz_class& p, const IntRow& b, const mpz_class& q) {
  IntRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    mpz_class v;
    std::size_t col;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      col = ia->first;
      v = p * ia->second;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      col = ib->first;
      v = -q * ib->second;
      ++ib;
    } else {
      col = ia->first;
      v = p * ia->second - q * ib->second;
      ++ia;
      ++ib;
    }
    if (v != 0) out.emplace_back(col, std::move(v));
  }
  return out;
}

std::size_t integer_rank(const std::vector<SparseRow>& rows) {
  std::map<std::size_t, IntRow> pivots;
  for (const auto& input : rows) {
    IntRow row = clear_denominators(input);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        remove_content(row);
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const IntRow& pivot = it->second;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
      row = combine(row, pivot.front().second / g, pivot, row.front().second / g);
      remove_content(row);
    }
  }
  return pivots.size();
}

// a := a - q*b
void subtract_multiple(SparseRow& a, const Scalar& q, const SparseRow& b) {
  for (const auto& [j, c] : b) {
    auto [it, inserted] = a.emplace(j, Scalar());
    it->second -= q * c;
    if (it->second.is_zero()) a.erase(it);
  }
}

// Reduced row echelon form keyed by pivot column; pivots are 1.
std::map<std::size_t, SparseRow> rref(const std::vector<SparseRow>& rows) {
  std::map<std::size_t, SparseRow> pivots;
  for (SparseRow row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.begin()->first);
      if (it == pivots.end()) break;
      const Scalar q = row.begin()->second;
      subtract_multiple(row, q, it->second);
    }
    if (row.empty()) continue;
    const Scalar inv = row.begin()->second.inverse();
    for (auto& [j, c] : row) c *= inv;
    pivots.emplace(row.begin()->first, std::move(row));
  }
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const std::size_t col = it->first;
    for (auto& [other_col, other] : pivots) {
      if (other_col >= col) break;
      auto hit = other.find(col);
      if (hit == other.end()) continue;
      const Scalar q = hit->second;
      subtract_multiple(other, q, it->second);
    }
  }
  return pivots;
}

}  // namespace

std::size_t rank_of_rows(const std::vector<SparseRow>& rows) {
  const bool real = std::all_of(rows.begin(), rows.end(), [](const SparseRow& r) {
    return std::all_of(r.begin(), r.end(), [](const auto& e) { return e.second.is_real(); });
  });
  if (real) return integer_rank(rows);
  return rref(rows).size();
}

std::vector<SparseRow> kernel_of_columns(const std::vector<SparseRow>& columns) {
  std::map<std::size_t, SparseRow> by_row;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [i, c] : columns[j]) by_row[i].emplace(j, c);
  }
  std::vector<SparseRow> rows;
  rows.reserve(by_row.size());
  for (auto& [i, row] : by_row) rows.push_back(std::move(row));
  const auto pivots = rref(rows);
  std::vector<SparseRow> basis;
  for (std::size_t f = 0; f < columns.size(); ++f) {
    if (pivots.count(f)) continue;
    SparseRow v;
    v.emplace(f, Scalar(1));
    for (const auto& [col, row] : pivots) {
      auto it = row.find(f);
      if (it != row.end()) v.emplace(col, -it->second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace species

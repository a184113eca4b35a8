#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "species/errors.hpp"
#include "species/lincomb.hpp"
#include "species/scalar.hpp"

namespace species {

using SparseRow = std::map<std::size_t, Scalar>;

// Rank of the row space. Real rows go through fraction-free integer
// elimination, anything else through exact field elimination.
std::size_t rank_of_rows(const std::vector<SparseRow>& rows);

// Basis of {x : sum_j x_j * columns[j] = 0}, one SparseRow per basis vector
// indexed by column position.
std::vector<SparseRow> kernel_of_columns(const std::vector<SparseRow>& columns);

template <class K>
std::size_t rank(const std::vector<LinComb<K>>& vectors) {
  std::map<K, std::size_t> index;
  std::vector<SparseRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    SparseRow row;
    for (const auto& [k, c] : v) {
      auto [it, inserted] = index.emplace(k, index.size());
      row.emplace(it->second, c);
    }
    rows.push_back(std::move(row));
  }
  return rank_of_rows(rows);
}

template <class Kin, class Kout>
std::vector<LinComb<Kin>> kernel_basis(const std::vector<std::pair<Kin, LinComb<Kout>>>& linear_map,
                                       const std::vector<Kin>& domain) {
  std::map<Kin, const LinComb<Kout>*> image;
  for (const auto& [k, v] : linear_map) image[k] = &v;
  std::map<Kout, std::size_t> index;
  std::vector<SparseRow> columns;
  columns.reserve(domain.size());
  for (const auto& k : domain) {
    auto it = image.find(k);
    if (it == image.end()) throw DomainError("kernel_basis: map undefined on a domain key");
    SparseRow col;
    for (const auto& [out, c] : *it->second) {
      auto [pos, inserted] = index.emplace(out, index.size());
      col.emplace(pos->second, c);
    }
    columns.push_back(std::move(col));
  }
  std::vector<LinComb<Kin>> basis;
  for (const auto& vec : kernel_of_columns(columns)) {
    LinComb<Kin> v;
    for (const auto& [j, c] : vec) v.add_term(domain[j], c);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace species

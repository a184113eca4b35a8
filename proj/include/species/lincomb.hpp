#pragma once

#include <map>
#include <utility>

#include "species/scalar.hpp"

namespace species {

/// Sparse finite linear combination over an ordered basis-key type.
/// Zero coefficients are never stored.
template <class Key, class Coeff = Scalar>
class LinComb {
 public:
  using Terms = std::map<Key, Coeff>;
  using key_type = Key;
  using coeff_type = Coeff;

  LinComb() = default;

  static LinComb basis(Key key, Coeff coeff = Coeff(1)) {
    LinComb v;
    v.add_term(std::move(key), std::move(coeff));
    return v;
  }

  void add_term(const Key& key, const Coeff& coeff) {
    if (is_zero(coeff)) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Coeff coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff() : it->second;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LinComb& operator*=(const Coeff& c) {
    if (species::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(const LinComb& a) { return LinComb() - a; }
  friend LinComb operator*(const Coeff& c, LinComb a) { return a *= c; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

  // Linear extension of a key-to-LinComb map.
  template <class OutKey, class F>
  LinComb<OutKey, Coeff> transform(F&& f) const {
    LinComb<OutKey, Coeff> out;
    for (const auto& [k, c] : terms_) {
      auto image = f(k);
      image *= c;
      out += image;
    }
    return out;
  }

 private:
  static bool is_zero(const Coeff& c) { return species::is_zero(c); }
  Terms terms_;
};

}  // namespace species

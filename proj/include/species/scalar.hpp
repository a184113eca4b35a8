#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace species {

using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (decimal integers). Throws DomainError.
Rational parse_rational(std::string_view text);
// Always "p/q" with q >= 1.
std::string rational_string(const Rational& q);

/// Gaussian rational re + i*im. Both parts are kept canonical by GMP.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im = 0);

  static Scalar imag_unit() { return Scalar(0, 1); }
  static Scalar fraction(long num, long den);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
std::string to_string(const Scalar& s);

Scalar pow(const Scalar& base, unsigned exponent);
// 1/k! as an exact scalar.
Scalar inverse_factorial(unsigned k);

/// Laurent polynomial in the formal symbol hbar with Gaussian rational
/// coefficients. No zero coefficients are stored.
class Laurent {
 public:
  using Terms = std::map<int, Scalar>;

  Laurent() = default;
  Laurent(long value) : Laurent(Scalar(value)) {}  // NOLINT(google-explicit-constructor)
  Laurent(const Scalar& constant);                  // NOLINT(google-explicit-constructor)

  static Laurent monomial(int power, const Scalar& coeff = 1);
  // 1/(i hbar) = -i hbar^{-1}
  static Laurent inverse_i_hbar();
  // i hbar
  static Laurent i_hbar();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int power) const;
  // Lowest power present; 0 for the zero polynomial.
  int min_power() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  friend Laurent operator-(const Laurent& a) { return Laurent() - a; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

 private:
  void add_term(int power, const Scalar& c);
  Terms terms_;
};

inline bool is_zero(const Laurent& l) { return l.is_zero(); }
Laurent pow(const Laurent& base, unsigned exponent);
std::string to_string(const Laurent& l);

}  // namespace species

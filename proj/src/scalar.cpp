#include "species/scalar.hpp"

#include <cctype>

#include "species/errors.hpp"

namespace species {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-') {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class q(std::string(den[0] == '+' ? den.substr(1) : den), 10);
  if (q == 0) throw DomainError("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::inverse() const {
  const Rational norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw DomainError("division by zero scalar");
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw DomainError("division by zero scalar");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string to_string(const Scalar& s) {
  if (s.is_real()) return s.re().get_str();
  if (sgn(s.re()) == 0) return s.im().get_str() + "i";
  std::string im = s.im().get_str();
  if (im.front() != '-') im = "+" + im;
  return s.re().get_str() + im + "i";
}

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result(1);
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

Scalar inverse_factorial(unsigned k) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return Scalar(Rational(mpz_class(1), f));
}

Laurent::Laurent(const Scalar& constant) { add_term(0, constant); }

Laurent Laurent::monomial(int power, const Scalar& coeff) {
  Laurent l;
  l.add_term(power, coeff);
  return l;
}

Laurent Laurent::inverse_i_hbar() { return monomial(-1, Scalar(0, -1)); }

Laurent Laurent::i_hbar() { return monomial(1, Scalar::imag_unit()); }

Scalar Laurent::coeff(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Scalar() : it->second;
}

int Laurent::min_power() const { return terms_.empty() ? 0 : terms_.begin()->first; }

void Laurent::add_term(int power, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  Laurent result;
  for (const auto& [p, c] : terms_) {
    for (const auto& [q, d] : o.terms_) result.add_term(p + q, c * d);
  }
  *this = std::move(result);
  return *this;
}

Laurent pow(const Laurent& base, unsigned exponent) {
  Laurent result(1);
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

std::string to_string(const Laurent& l) {
  if (l.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : l.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    if (p != 0) out += "*hbar^" + std::to_string(p);
  }
  return out;
}

}  // namespace species

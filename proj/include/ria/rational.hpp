#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ria {

/// Exact rational number. Denominator is always positive and the fraction is
/// kept in lowest terms, so equality is structural. All degrees-of-freedom
/// quantities and slot accounting go through this type; no floating point is
/// involved until a caller explicitly asks for a decimal rendering.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long long num) : q_(make(num, 1)) {}
  Rational(long long num, long long den) : q_(make(num, den)) {}
  Rational(const mpz_class& num, const mpz_class& den) : q_(canonical(num, den)) {}
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  mpz_class floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  mpz_class ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  double to_double() const { return q_.get_d(); }

  /// "3/2", or just "4" when the value is an integer.
  std::string to_string() const {
    std::string s = q_.get_num().get_str();
    if (!is_integer()) s += "/" + q_.get_den().get_str();
    return s;
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  static mpz_class mpz_from_ll(long long v) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
    return mpz_class(static_cast<long>(v));
  }
  static mpq_class make(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q{mpz_from_ll(num), mpz_from_ll(den)};
    q.canonicalize();
    return q;
  }
  static mpq_class canonical(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  mpq_class q_;
};

inline Rational inverse(const Rational& r) { return Rational(1) / r; }

}  // namespace ria

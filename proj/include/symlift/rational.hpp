#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace symlift {

// Exact arbitrary-precision fraction. Always kept in lowest terms with a
// positive denominator; zero is 0/1. Values whose numerator and denominator
// fit in 62 bits are stored inline, larger ones in a GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& value) { assign(mpq_class(value)); }
  explicit Rational(mpq_class value);

  Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  // Accepts "[-]?digits(/digits)?"; throws ParseError otherwise.
  static Rational parse(std::string_view text);

  mpz_class num() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(n_)); }
  mpz_class den() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(d_)); }
  mpq_class raw() const;

  int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }
  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

  // Magnitude bits of max(|num|, den), minimum 1.
  std::size_t bit_length() const;

  std::string str() const;

  Rational operator-() const;
  void negate() {
    if (big_) {
      mpq_neg(big_->get_mpq_t(), big_->get_mpq_t());
    } else {
      n_ = -n_;
    }
  }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  // Division by zero throws InvalidArgument.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (!a.big_ || !b.big_) return false;  // canonical: big values never fit inline
    return *a.big_ == *b.big_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c;
    if (!a.big_ && !b.big_) {
      const __int128 l = static_cast<__int128>(a.n_) * b.d_;
      const __int128 r = static_cast<__int128>(b.n_) * a.d_;
      c = (l > r) - (l < r);
    } else {
      c = cmp(a.raw(), b.raw());
    }
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  // Stores a canonical GMP value, inline when it fits.
  void assign(mpq_class q);
  // Stores num/den (den > 0, any common factor), inline when it fits.
  void assign(__int128 num, __int128 den);

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::unique_ptr<mpq_class> big_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace symlift

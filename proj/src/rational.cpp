#include "symlift/rational.hpp"

#include <cctype>

#include "symlift/error.hpp"

namespace symlift {

namespace {

using u128 = unsigned __int128;

constexpr std::int64_t kInlineLimit = std::int64_t{1} << 62;

bool fits(__int128 v) { return v > -kInlineLimit && v < kInlineLimit; }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      std::uint64_t x = static_cast<std::uint64_t>(a);
      std::uint64_t y = static_cast<std::uint64_t>(b);
      while (y != 0) {
        const std::uint64_t t = x % y;
        x = y;
        y = t;
      }
      return x;
    }
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  std::uint64_t x = static_cast<std::uint64_t>(a < 0 ? -a : a);
  std::uint64_t y = static_cast<std::uint64_t>(b < 0 ? -b : b);
  while (y != 0) {
    const std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return static_cast<std::int64_t>(x);
}

mpz_class to_mpz(__int128 v) {
  const bool neg = v < 0;
  u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::size_t bits_of(const mpz_class& z) {
  if (z == 0) return 1;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

}  // namespace

Rational::Rational(long value) {
  if (fits(value)) {
    n_ = value;
  } else {
    assign(mpq_class(value));
  }
}

Rational::Rational(long num, long den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    assign(-static_cast<__int128>(num), -static_cast<__int128>(den));
  } else {
    assign(static_cast<__int128>(num), static_cast<__int128>(den));
  }
}

Rational::Rational(mpq_class value) {
  if (value.get_den() == 0) throw InvalidArgument("rational with zero denominator");
  value.canonicalize();
  assign(std::move(value));
}

void Rational::assign(mpq_class q) {
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (num.fits_slong_p() && den.fits_slong_p() && fits(num.get_si()) && fits(den.get_si())) {
    n_ = num.get_si();
    d_ = den.get_si();
    big_.reset();
    return;
  }
  n_ = 0;
  d_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::assign(__int128 num, __int128 den) {
  if (num == 0) {
    n_ = 0;
    d_ = 1;
    big_.reset();
    return;
  }
  const u128 g = gcd128(static_cast<u128>(num < 0 ? -num : num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits(num) && fits(den)) {
    n_ = static_cast<std::int64_t>(num);
    d_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  n_ = 0;
  d_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

mpq_class Rational::raw() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_part = body.substr(0, slash);
  std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) {
    throw ParseError("zero denominator in rational literal '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

std::size_t Rational::bit_length() const {
  if (!big_) {
    auto bits = [](std::int64_t v) {
      std::uint64_t m = static_cast<std::uint64_t>(v < 0 ? -v : v);
      std::size_t b = 0;
      while (m != 0) {
        ++b;
        m >>= 1;
      }
      return std::max<std::size_t>(b, 1);
    };
    return std::max(bits(n_), bits(d_));
  }
  mpz_class mag = abs(big_->get_num());
  return std::max(bits_of(mag), bits_of(big_->get_den()));
}

std::string Rational::str() const {
  if (!big_) return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
  return big_->get_str(10);
}

Rational Rational::operator-() const {
  Rational r;
  if (!big_) {
    r.n_ = -n_;
    r.d_ = d_;
  } else {
    r.assign(mpq_class(-*big_));
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (d_ == o.d_) {
      assign(static_cast<__int128>(n_) + o.n_, static_cast<__int128>(d_));
    } else {
      assign(static_cast<__int128>(n_) * o.d_ + static_cast<__int128>(o.n_) * d_,
             static_cast<__int128>(d_) * o.d_);
    }
    return *this;
  }
  assign(mpq_class(raw() + o.raw()));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (d_ == o.d_) {
      assign(static_cast<__int128>(n_) - o.n_, static_cast<__int128>(d_));
    } else {
      assign(static_cast<__int128>(n_) * o.d_ - static_cast<__int128>(o.n_) * d_,
             static_cast<__int128>(d_) * o.d_);
    }
    return *this;
  }
  assign(mpq_class(raw() - o.raw()));
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (n_ == 0 || o.n_ == 0) {
      n_ = 0;
      d_ = 1;
      return *this;
    }
    const std::int64_t g1 = gcd64(n_, o.d_);
    const std::int64_t g2 = gcd64(o.n_, d_);
    const __int128 num = static_cast<__int128>(n_ / g1) * (o.n_ / g2);
    const __int128 den = static_cast<__int128>(d_ / g2) * (o.d_ / g1);
    if (fits(num) && fits(den)) {
      n_ = static_cast<std::int64_t>(num);
      d_ = static_cast<std::int64_t>(den);
    } else {
      assign(num, den);
    }
    return *this;
  }
  assign(mpq_class(raw() * o.raw()));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero rational");
  if (!big_ && !o.big_) {
    Rational inv;
    inv.n_ = o.n_ < 0 ? -o.d_ : o.d_;
    inv.d_ = o.n_ < 0 ? -o.n_ : o.n_;
    return *this *= inv;
  }
  assign(mpq_class(raw() / o.raw()));
  return *this;
}

}  // namespace symlift

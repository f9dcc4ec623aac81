#include "qstack/field.hpp"

#include <numeric>
#include <ostream>

namespace qstack {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMax = static_cast<__int128>(INT64_MAX);

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = make(n, d);
}

Rational Rational::make(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  __int128 g = gcd128(n, d);
  n /= g;
  d /= g;
  if (n > kMax || n < -kMax || d > kMax) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<long long>(n);
  r.den_ = static_cast<long long>(d);
  return r;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (o.num_ == 0) return *this;
  if (num_ == 0) return *this = o;
  if (den_ == 1 && o.den_ == 1) return *this = make(__int128(num_) + o.num_, 1);
  return *this = make(__int128(num_) * o.den_ + __int128(o.num_) * den_, __int128(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (num_ == 0 || o.num_ == 0) return *this = Rational();
  return *this = make(__int128(num_) * o.num_, __int128(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("division by zero");
  return *this = make(__int128(num_) * o.den_, __int128(den_) * o.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void Zp::set_modulus(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 31)) throw std::invalid_argument("modulus must be a prime <= 2^31");
  modulus_ = p;
}

Zp Zp::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in F_p");
  long long a = v_, m = modulus_, x0 = 1, x1 = 0;
  long long b = m;
  while (b != 0) {
    long long q = a / b;
    long long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Zp(x0);
}

std::ostream& operator<<(std::ostream& os, const Zp& x) { return os << x.value(); }

}  // namespace qstack

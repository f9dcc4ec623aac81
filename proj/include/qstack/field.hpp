#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>

namespace qstack {

// Exact rational with 64-bit parts.  Intermediate products go through
// __int128; a result that does not fit throws instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  static Rational make(__int128 n, __int128 d);
  long long num_ = 0;
  long long den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

// Element of F_p.  The modulus is process-wide: set it before building an
// algebra over F_p and keep it fixed while that algebra is alive.
class Zp {
 public:
  Zp() = default;
  Zp(long long v) {
    long long m = static_cast<long long>(modulus_);
    v %= m;
    v_ = static_cast<std::uint32_t>(v < 0 ? v + m : v);
  }

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  static std::uint32_t modulus() { return modulus_; }
  static void set_modulus(std::uint32_t p);

  Zp operator-() const { return raw(v_ ? modulus_ - v_ : 0); }
  Zp& operator+=(const Zp& o) {
    std::uint32_t s = v_ + o.v_;
    v_ = s >= modulus_ ? s - modulus_ : s;
    return *this;
  }
  Zp& operator-=(const Zp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus_ - o.v_;
    return *this;
  }
  Zp& operator*=(const Zp& o) {
    if (modulus_ == 2)
      v_ &= o.v_;
    else
      v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % modulus_);
    return *this;
  }
  Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }
  Zp inverse() const;

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Zp& a, const Zp& b) { return a.v_ != b.v_; }

  std::string str() const { return std::to_string(v_); }

 private:
  static Zp raw(std::uint32_t v) {
    Zp z;
    z.v_ = v;
    return z;
  }
  std::uint32_t v_ = 0;
  static inline std::uint32_t modulus_ = 2;
};

std::ostream& operator<<(std::ostream& os, const Zp& x);

class ScopedModulus {
 public:
  explicit ScopedModulus(std::uint32_t p) : saved_(Zp::modulus()) { Zp::set_modulus(p); }
  ~ScopedModulus() { Zp::set_modulus(saved_); }
  ScopedModulus(const ScopedModulus&) = delete;
  ScopedModulus& operator=(const ScopedModulus&) = delete;

 private:
  std::uint32_t saved_;
};

bool is_prime(std::uint64_t n);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Zp& x) { return x.is_zero(); }

template <class F>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr bool finite = false;
  static std::string name() { return "Q"; }
  static std::uint64_t order() { return 0; }
  // Small integers are enough for generic-position arguments with retries.
  template <class Rng>
  static Rational random(Rng& rng) {
    return Rational(std::uniform_int_distribution<long long>(-9, 9)(rng));
  }
  static Rational element(std::uint64_t i) { return Rational(static_cast<long long>(i)); }
};

template <>
struct field_traits<Zp> {
  static constexpr bool finite = true;
  static std::string name() { return Zp::modulus() == 2 ? "F2" : "F" + std::to_string(Zp::modulus()); }
  static std::uint64_t order() { return Zp::modulus(); }
  template <class Rng>
  static Zp random(Rng& rng) {
    return Zp(std::uniform_int_distribution<long long>(0, Zp::modulus() - 1)(rng));
  }
  static Zp element(std::uint64_t i) { return Zp(static_cast<long long>(i)); }
};

}  // namespace qstack

namespace Eigen {

template <>
struct NumTraits<qstack::Rational> : GenericNumTraits<qstack::Rational> {
  typedef qstack::Rational Real;
  typedef qstack::Rational NonInteger;
  typedef qstack::Rational Literal;
  typedef qstack::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 6
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qstack::Zp> : GenericNumTraits<qstack::Zp> {
  typedef qstack::Zp Real;
  typedef qstack::Zp NonInteger;
  typedef qstack::Zp Literal;
  typedef qstack::Zp Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 2
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

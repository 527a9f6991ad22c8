#ifndef PARETOAPX_RATIONAL_HPP
#define PARETOAPX_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace paretoapx {

/// Exact rational number in lowest terms (thin value wrapper over mpq_class).
class Rat {
 public:
  Rat() = default;
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long n, long d);
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& n, const mpz_class& d);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "a" or "a/b" (optional leading '-'). Throws std::invalid_argument.
  static Rat parse(std::string_view text);
  /// 2^e for any integer e.
  static Rat pow2(long e);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  mpz_class floor() const;
  mpz_class ceil() const;
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  /// Bits of |numerator| and of the denominator.
  std::size_t num_bits() const;
  std::size_t den_bits() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat pow(const Rat& base, unsigned long e);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

/// Simplest rational (smallest denominator, then smallest numerator) in the open interval (lo, hi).
Rat simplest_between(const Rat& lo, const Rat& hi);

/// Largest integer r with r^k <= n (n >= 0).
mpz_class iroot_floor(const mpz_class& n, unsigned long k);

/// Exact k-th root when it is rational.
bool exact_root(const Rat& q, unsigned long k, Rat& out);

}  // namespace paretoapx

#endif

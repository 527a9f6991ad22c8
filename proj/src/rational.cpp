#include "paretoapx/rational.hpp"

#include <stdexcept>

namespace paretoapx {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long n, long d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && body.front() == '-') {
    neg = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view n = body.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(n) || !all_digits(d)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(n), 10);
  mpz_class den(std::string(d), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (neg) num = -num;
  return Rat(num, den);
}

Rat Rat::pow2(long e) {
  mpz_class p = 1;
  const unsigned long a = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), a);
  return e < 0 ? Rat(mpz_class(1), p) : Rat(p);
}

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

mpz_class Rat::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

std::size_t Rat::num_bits() const {
  if (v_.get_num() == 0) return 1;
  return mpz_sizeinbase(v_.get_num_mpz_t(), 2);
}

std::size_t Rat::den_bits() const { return mpz_sizeinbase(v_.get_den_mpz_t(), 2); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.v_ == 0) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, unsigned long e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), e);
  return Rat(n, d);
}

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("empty interval");
  // Shift so the interval is positive, then walk the continued fractions.
  const mpz_class shift = lo.floor();
  const Rat a = lo - Rat(shift);
  const Rat b = hi - Rat(shift);
  // a in [0,1), b > a.
  if (b > Rat(1)) return Rat(mpz_class(shift + 1));
  if (a.sign() == 0 && b > Rat(0)) {
    // (0, b) with b <= 1: 1/q with q the smallest integer having 1/q < b.
    mpz_class q = (Rat(1) / b).floor() + 1;
    return Rat(shift) + Rat(mpz_class(1), q);
  }
  // 0 < a < b <= 1: recurse on reciprocals (1/b, 1/a).
  const Rat inner = simplest_between(Rat(1) / b, Rat(1) / a);
  return Rat(shift) + Rat(1) / inner;
}

mpz_class iroot_floor(const mpz_class& n, unsigned long k) {
  if (n < 0) throw std::invalid_argument("negative radicand");
  mpz_class r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

bool exact_root(const Rat& q, unsigned long k, Rat& out) {
  if (q.sign() < 0) return false;
  mpz_class n, d;
  const bool en = mpz_root(n.get_mpz_t(), q.raw().get_num_mpz_t(), k) != 0;
  const bool ed = mpz_root(d.get_mpz_t(), q.raw().get_den_mpz_t(), k) != 0;
  if (!en || !ed) return false;
  out = Rat(n, d);
  return true;
}

}  // namespace paretoapx

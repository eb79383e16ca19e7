#ifndef TORIMULT_RATIONAL_HPP
#define TORIMULT_RATIONAL_HPP

#include <gmpxx.h>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace torimult {

using Int = mpz_class;

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
/// Every coefficient in the library is one of these; no floating point anywhere.
class Rat {
public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}
  Rat(const Int& n) : q_(n) {}
  Rat(const Int& num, const Int& den) : q_(num, den) { q_.canonicalize(); }
  Rat(long num, long den) : q_(num, den) { q_.canonicalize(); }
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  const Int num() const { return q_.get_num(); }
  const Int den() const { return q_.get_den(); }

  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return q_ == 0; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) { q_ /= o.q_; return *this; }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  /// Largest integer <= value.
  Int floor() const;
  /// Smallest integer >= value.
  Int ceil() const;

  /// Rendered as "p" or "p/q" with q > 1.
  std::string str() const;

  /// Parses "p" or "p/q" (q > 0). Returns nullopt on malformed input.
  static std::optional<Rat> parse(std::string_view s);

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

} // namespace torimult

#endif

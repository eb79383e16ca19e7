#include "torimult/rational.hpp"

#include <cctype>
#include <ostream>

namespace torimult {

Int Rat::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return q;
}

Int Rat::ceil() const {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return q;
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::optional<Rat> Rat::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto is_int = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    size_t i = 0;
    if (allow_sign && (t[0] == '-')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(s, true)) return std::nullopt;
    return Rat(Int(std::string(s)));
  }
  auto nums = s.substr(0, slash);
  auto dens = s.substr(slash + 1);
  if (!is_int(nums, true) || !is_int(dens, false)) return std::nullopt;
  Int den{std::string(dens)};
  if (den == 0) return std::nullopt;
  return Rat(Int(std::string(nums)), den);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

} // namespace torimult

#ifndef MIXMULT_FIELD_HPP
#define MIXMULT_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "mixmult/error.hpp"

namespace mixmult {

// std distributions are implementation-defined, so draws are reduced by hand.
using Rng = std::mt19937_64;

// Z/p for a prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  static constexpr std::uint64_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
    if (p < 2 || p >= (1ULL << 31)) throw InputError("field prime must lie in [2, 2^31)");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  }

  std::uint64_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r);
  }

  value_type add(value_type a, value_type b) const { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }

  value_type inv(value_type a) const {
    if (a == 0) throw InconsistencyError("division by zero in prime field");
    // a^(p-2)
    value_type result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  value_type random_nonzero(Rng& rng) const { return 1 + rng() % (p_ - 1); }

  std::string to_string(value_type a) const { return std::to_string(a); }

  value_type parse(const std::string& s) const {
    // accepts integers and a/b
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_int(parse_int(s));
    value_type den = from_int(parse_int(s.substr(slash + 1)));
    if (den == 0) throw InputError("coefficient '" + s + "' has zero denominator modulo p");
    return mul(from_int(parse_int(s.substr(0, slash))), inv(den));
  }

  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

 private:
  static std::int64_t parse_int(const std::string& s) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos != s.size()) throw InputError("bad integer '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      throw InputError("bad integer '" + s + "'");
    }
  }

  std::uint64_t p_;
};

// Exact rationals, for audit runs.
class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type from_int(std::int64_t v) const { return value_type(v); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw InconsistencyError("division by zero in rational field");
    return value_type(1) / a;
  }

  // Small nonzero integers keep the elimination cheap; genericity over Q only
  // needs avoidance of a proper Zariski-closed set.
  value_type random_nonzero(Rng& rng) const {
    std::int64_t v = static_cast<std::int64_t>(rng() % 2001) - 1000;
    if (v == 0) v = 1001;
    return value_type(v);
  }

  std::string to_string(const value_type& a) const { return a.str(); }

  value_type parse(const std::string& s) const {
    try {
      return value_type(s);
    } catch (const std::exception&) {
      throw InputError("bad rational coefficient '" + s + "'");
    }
  }

  std::string name() const { return "QQ"; }
};

struct PrimeFieldSpec {
  std::uint64_t prime = PrimeField::kDefaultPrime;
};
struct RationalFieldSpec {};
using FieldSpec = std::variant<PrimeFieldSpec, RationalFieldSpec>;

}  // namespace mixmult

#endif  // MIXMULT_FIELD_HPP

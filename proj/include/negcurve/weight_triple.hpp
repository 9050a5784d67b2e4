#ifndef NEGCURVE_WEIGHT_TRIPLE_HPP
#define NEGCURVE_WEIGHT_TRIPLE_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <tuple>

#include "negcurve/exact_arith.hpp"

namespace negcurve {

/// Pairwise coprime positive weights (a, b, c) of k[x, y, z], with
/// xi = abc and eta = a + b + c.
///
/// Each weight is capped at 2^20 so that xi stays below 2^60 and every
/// machine-word product in the library has a checked bound.
class WeightTriple {
public:
  static constexpr std::int64_t kMaxWeight = std::int64_t{1} << 20;

  WeightTriple(std::int64_t a, std::int64_t b, std::int64_t c) : a_(a), b_(b), c_(c) {
    if (a < 1 || b < 1 || c < 1)
      throw ContractViolation("weights must be positive");
    if (a > kMaxWeight || b > kMaxWeight || c > kMaxWeight)
      throw ContractViolation("weights must not exceed 2^20");
    if (std::gcd(a, b) != 1 || std::gcd(b, c) != 1 || std::gcd(c, a) != 1)
      throw ContractViolation("weights must be pairwise coprime");
    xi_ = a * b * c;
    eta_ = a + b + c;
  }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t xi() const { return xi_; }
  std::int64_t eta() const { return eta_; }

  BigInt xi_big() const { return to_big(xi_); }
  BigInt eta_big() const { return to_big(eta_); }

  /// (1,1,1) is accepted but carries no negative curve.
  bool is_degenerate() const { return a_ == 1 && b_ == 1 && c_ == 1; }

  /// (a+b+c)^2 > abc, i.e. (-K_X)^2 > 0.
  bool anticanonical_positive() const { return eta_ * eta_ > xi_; }

  /// sqrt(abc) is an integer.
  bool xi_is_square() const {
    const auto s = isqrt(xi_big());
    return s * s == xi_big();
  }

  std::string str() const {
    return "(" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_) + ")";
  }

  friend bool operator==(const WeightTriple&, const WeightTriple&) = default;
  friend auto operator<=>(const WeightTriple& l, const WeightTriple& r) {
    return std::tie(l.a_, l.b_, l.c_) <=> std::tie(r.a_, r.b_, r.c_);
  }
  friend std::ostream& operator<<(std::ostream& os, const WeightTriple& t) { return os << t.str(); }

private:
  std::int64_t a_, b_, c_;
  std::int64_t xi_ = 0, eta_ = 0;
};

}  // namespace negcurve

#endif  // NEGCURVE_WEIGHT_TRIPLE_HPP

#ifndef NEGCURVE_HILBERT_HPP
#define NEGCURVE_HILBERT_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "negcurve/exact_arith.hpp"
#include "negcurve/weight_triple.hpp"

namespace negcurve {

namespace detail {

/// Largest degree for which the counting tables are built. Keeps every
/// count below (2^31 + 1)^2 < 2^63.
inline constexpr std::int64_t kMaxTableDegree = std::int64_t{1} << 31;

/// dim_k S_m for 0 <= m <= upto by the three-coin recurrence.
inline std::vector<std::int64_t> denumerants(const WeightTriple& t, std::int64_t upto) {
  require(upto >= 0, "denumerants: negative degree");
  require(upto <= kMaxTableDegree, "denumerants: degree too large for a table");
  std::vector<std::int64_t> out(static_cast<std::size_t>(upto) + 1, 0);
  out[0] = 1;
  for (const std::int64_t w : {t.a(), t.b(), t.c()})
    for (std::int64_t m = w; m <= upto; ++m)
      out[static_cast<std::size_t>(m)] += out[static_cast<std::size_t>(m - w)];
  return out;
}

/// Exact quotient p / (1 + t + ... + t^(w-1)) via p(t)(1-t) = q(t)(1-t^w).
/// Throws when the remainder is nonzero or a coefficient overflows 64 bits.
inline std::vector<std::int64_t> divide_by_geometric(const std::vector<std::int64_t>& p, std::int64_t w) {
  const auto len = static_cast<std::int64_t>(p.size());
  ensure(len >= w, "divide_by_geometric: dividend degree below divisor degree");
  const std::int64_t qlen = len - w + 1;
  std::vector<std::int64_t> q(static_cast<std::size_t>(len + 1));
  for (std::int64_t i = 0; i <= len; ++i) {
    std::int64_t d = i < len ? p[static_cast<std::size_t>(i)] : 0;
    bool overflow = false;
    if (i > 0) overflow |= __builtin_sub_overflow(d, p[static_cast<std::size_t>(i - 1)], &d);
    if (i >= w) overflow |= __builtin_add_overflow(d, q[static_cast<std::size_t>(i - w)], &d);
    ensure(!overflow, "divide_by_geometric: coefficient overflow");
    q[static_cast<std::size_t>(i)] = d;
  }
  for (std::int64_t i = qlen; i <= len; ++i)
    ensure(q[static_cast<std::size_t>(i)] == 0, "divide_by_geometric: nonzero remainder");
  q.resize(static_cast<std::size_t>(qlen));
  return q;
}

}  // namespace detail

/// Number of monomials x^i y^j z^k of weighted degree n.
inline BigInt dim_count(const WeightTriple& t, std::int64_t n) {
  require(n >= 0, "dim_count: negative degree");
  return to_big(detail::denumerants(t, n).back());
}

/// dim_k S_v for every residue 0 <= v < xi, together with the numerator
///   g(t) = (1 + ... + t^(xi-1)) / ((1 + ... + t^(a-1))(1 + ... + t^(b-1))(1 + ... + t^(c-1)))
/// of the Hilbert series, which has degree xi - eta + 2.
class HilbertTable {
public:
  explicit HilbertTable(const WeightTriple& t) : triple_(t) {
    require(t.xi() <= detail::kMaxTableDegree, "HilbertTable: abc too large for a table");
    dims_ = detail::denumerants(t, t.xi() - 1);

    std::vector<std::int64_t> poly(static_cast<std::size_t>(t.xi()), 1);
    for (const std::int64_t w : {t.a(), t.b(), t.c()}) poly = detail::divide_by_geometric(poly, w);
    g_ = std::move(poly);
    ensure(static_cast<std::int64_t>(g_.size()) == t.xi() - t.eta() + 3,
           "HilbertTable: g(t) has unexpected degree");
  }

  const WeightTriple& triple() const { return triple_; }

  /// dims()[v] = dim_k S_v, v in [0, xi).
  std::span<const std::int64_t> dims() const { return dims_; }
  BigInt dim(std::int64_t v) const { return to_big(dims_.at(static_cast<std::size_t>(v))); }

  /// Coefficients c_0 .. c_{xi-eta+2} of g(t).
  std::span<const std::int64_t> g_coeffs() const { return g_; }

  std::int64_t max_dim() const {
    std::int64_t m = 0;
    for (auto d : dims_) m = std::max(m, d);
    return m;
  }

private:
  WeightTriple triple_;
  std::vector<std::int64_t> dims_;
  std::vector<std::int64_t> g_;
};

inline HilbertTable build_table(const WeightTriple& t) { return HilbertTable(t); }

/// dim_k S_{xi q + v} = (xi q^2 + (eta + 2v) q) / 2 + dim_k S_v.
inline BigInt dim_formula(const HilbertTable& table, const BigInt& q, std::int64_t v) {
  const auto& t = table.triple();
  require(sgn(q) >= 0, "dim_formula: q must be non-negative");
  require(v >= 0 && v < t.xi(), "dim_formula: v must lie in [0, abc)");
  BigInt twice = t.xi_big() * q * q + (t.eta_big() + 2 * to_big(v)) * q;
  ensure(mpz_even_p(twice.get_mpz_t()) != 0, "dim_formula: odd quadratic part");
  return twice / 2 + table.dim(v);
}

/// b_xi = (xi + eta) / 2.
inline BigInt b_xi(const WeightTriple& t) {
  BigInt s = t.xi_big() + t.eta_big();
  ensure(mpz_even_p(s.get_mpz_t()) != 0, "b_xi: abc + a + b + c is odd");
  return s / 2;
}

/// b_n = a_n - a_{n-xi}, from direct counts.
inline BigInt b_n_by_counts(const WeightTriple& t, std::int64_t n) {
  require(n >= 0, "b_n_by_counts: negative degree");
  const auto counts = detail::denumerants(t, n);
  const std::int64_t prev = n >= t.xi() ? counts[static_cast<std::size_t>(n - t.xi())] : 0;
  return to_big(counts.back() - prev);
}

}  // namespace negcurve

#endif  // NEGCURVE_HILBERT_HPP

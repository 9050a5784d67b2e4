#ifndef NEGCURVE_SYMBOLIC_POWER_HPP
#define NEGCURVE_SYMBOLIC_POWER_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negcurve/exact_arith.hpp"
#include "negcurve/hilbert.hpp"
#include "negcurve/linear_algebra.hpp"
#include "negcurve/weight_triple.hpp"

namespace negcurve {

/// x^i y^j z^k.
struct Monomial {
  std::int64_t i = 0, j = 0, k = 0;

  std::int64_t degree(const WeightTriple& t) const { return t.a() * i + t.b() * j + t.c() * k; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// All monomials of weighted degree n, ordered lexicographically by (i, j).
inline std::vector<Monomial> enumerate_monomials(const WeightTriple& t, std::int64_t n) {
  require(n >= 0, "enumerate_monomials: negative degree");
  std::vector<Monomial> out;
  for (std::int64_t i = 0; i <= n / t.a(); ++i) {
    const std::int64_t e = n - t.a() * i;
    for (std::int64_t j = 0; j <= e / t.b(); ++j) {
      const std::int64_t h = e - t.b() * j;
      if (h % t.c() == 0) out.push_back({i, j, h / t.c()});
    }
  }
  return out;
}

/// Values at (1,1,1) of the partial derivatives d_x^s d_y^t d_z^u of the
/// degree-n monomials. Rows are derivative orders, columns are monomials.
struct DerivativeMatrix {
  std::vector<std::array<std::int64_t, 3>> orders;
  std::vector<Monomial> basis;
  IntegerMatrix values;
};

namespace detail {

inline DerivativeMatrix evaluate_derivatives(std::vector<std::array<std::int64_t, 3>> orders,
                                             std::vector<Monomial> basis) {
  DerivativeMatrix m{std::move(orders), std::move(basis), {}};
  m.values = IntegerMatrix(m.orders.size(), m.basis.size());
  for (std::size_t r = 0; r < m.orders.size(); ++r) {
    const auto [s, t, u] = m.orders[r];
    for (std::size_t c = 0; c < m.basis.size(); ++c) {
      const auto& mono = m.basis[c];
      m.values(r, c) = falling_factorial(to_big(mono.i), s) * falling_factorial(to_big(mono.j), t) *
                       falling_factorial(to_big(mono.k), u);
    }
  }
  return m;
}

}  // namespace detail

/// x,y-partials of total order < r, rows ordered (0,0), (0,1), (1,0), (0,2), ...
/// i.e. by total order, then by x-order. Exactly r(r+1)/2 rows.
inline DerivativeMatrix derivative_matrix(const WeightTriple& t, std::int64_t n, std::int64_t r) {
  require(r >= 1, "derivative_matrix: r must be positive");
  std::vector<std::array<std::int64_t, 3>> orders;
  orders.reserve(static_cast<std::size_t>(r * (r + 1) / 2));
  for (std::int64_t total = 0; total < r; ++total)
    for (std::int64_t s = 0; s <= total; ++s) orders.push_back({s, total - s, 0});
  return detail::evaluate_derivatives(std::move(orders), enumerate_monomials(t, n));
}

/// All three-variable partials of total order < r: r(r+1)(r+2)/6 rows.
inline DerivativeMatrix full_derivative_matrix(const WeightTriple& t, std::int64_t n, std::int64_t r) {
  require(r >= 1, "full_derivative_matrix: r must be positive");
  std::vector<std::array<std::int64_t, 3>> orders;
  for (std::int64_t total = 0; total < r; ++total)
    for (std::int64_t s = 0; s <= total; ++s)
      for (std::int64_t u = 0; s + u <= total; ++u) orders.push_back({s, total - s - u, u});
  return detail::evaluate_derivatives(std::move(orders), enumerate_monomials(t, n));
}

inline std::int64_t rank_exact(const DerivativeMatrix& m) {
  return static_cast<std::int64_t>(rank_exact(m.values));
}

inline std::int64_t rank_mod_p(const DerivativeMatrix& m, std::uint64_t p) {
  return static_cast<std::int64_t>(rank_mod_p(m.values, p));
}

enum class RankMethod { exact, modular_confirmed };

inline const char* to_string(RankMethod m) {
  return m == RankMethod::exact ? "exact" : "modular-confirmed";
}

/// dim_k [p^(r)]_n = w - rank, where w = dim_k S_n.
struct SymbolicDimResult {
  std::int64_t n = 0, r = 0;
  std::int64_t monomial_count = 0;
  std::int64_t rank = 0;
  std::int64_t dim = 0;
  RankMethod method = RankMethod::exact;
};

struct SymbolicDimOptions {
  bool modular_filter = true;
  std::uint64_t seed = 0x6e6567637572ULL;
};

/// Characteristic zero. A modular rank equal to min(w, rows) certifies the
/// rational rank (rank_p <= rank_Q <= min(w, rows)); anything else is decided
/// by exact elimination.
inline SymbolicDimResult symbolic_dim(const WeightTriple& t, std::int64_t n, std::int64_t r,
                                      const SymbolicDimOptions& opts = {}) {
  require(n >= 0, "symbolic_dim: negative degree");
  require(r >= 1, "symbolic_dim: r must be positive");
  const auto m = derivative_matrix(t, n, r);
  SymbolicDimResult res;
  res.n = n;
  res.r = r;
  res.monomial_count = static_cast<std::int64_t>(m.basis.size());
  const std::int64_t ceiling =
      std::min<std::int64_t>(res.monomial_count, static_cast<std::int64_t>(m.orders.size()));
  if (opts.modular_filter && ceiling > 0) {
    const std::int64_t rp = rank_mod_p(m, random_prime(opts.seed ^ static_cast<std::uint64_t>(n * 1000003 + r)));
    if (rp == ceiling) {
      res.rank = rp;
      res.method = RankMethod::modular_confirmed;
    } else {
      res.rank = rank_exact(m);
      ensure(res.rank >= rp, "symbolic_dim: modular rank exceeds rational rank");
    }
  } else {
    res.rank = rank_exact(m);
  }
  ensure(res.rank <= ceiling, "symbolic_dim: rank exceeds row or column count");
  res.dim = res.monomial_count - res.rank;
  return res;
}

/// An element sum coeffs[m] * basis[m] of [p^(r)]_n.
struct NegativeCurveCertificate {
  WeightTriple triple;
  std::int64_t n = 0, r = 0;
  std::vector<Monomial> basis;
  std::vector<Rational> coeffs;
};

/// One kernel vector of the x,y derivative matrix from exact elimination, or
/// nothing when [p^(r)]_n = 0. See first_kernel_vector for normalisation.
inline std::optional<NegativeCurveCertificate> kernel_certificate(const WeightTriple& t, std::int64_t n,
                                                                  std::int64_t r) {
  require(n >= 0, "kernel_certificate: negative degree");
  require(r >= 1, "kernel_certificate: r must be positive");
  auto m = derivative_matrix(t, n, r);
  auto x = first_kernel_vector(fraction_free_echelon(m.values));
  if (x.empty()) return std::nullopt;
  return NegativeCurveCertificate{t, n, r, std::move(m.basis), std::move(x)};
}

struct VerifyResult {
  bool ok = false;
  std::string reason;
  /// First derivative order (alpha, beta, gamma) that does not vanish.
  std::optional<std::array<std::int64_t, 3>> failing_order;

  explicit operator bool() const { return ok; }
};

/// Checks the certificate against every partial d_x^alpha d_y^beta d_z^gamma with
/// alpha + beta + gamma < r, independently of how it was produced, and checks
/// n^2 < r^2 abc.
inline VerifyResult verify_certificate(const NegativeCurveCertificate& cert) {
  const auto& t = cert.triple;
  if (cert.n < 1 || cert.r < 1) return {false, "n and r must be positive", std::nullopt};
  if (cert.basis.size() != cert.coeffs.size() || cert.basis.empty())
    return {false, "basis and coefficient lists differ in length or are empty", std::nullopt};
  for (std::size_t idx = 0; idx < cert.basis.size(); ++idx) {
    const auto& mono = cert.basis[idx];
    if (mono.i < 0 || mono.j < 0 || mono.k < 0 || mono.degree(t) != cert.n)
      return {false, "monomial " + std::to_string(idx) + " does not have degree n", std::nullopt};
    if (!is_reduced(cert.coeffs[idx]))
      return {false, "coefficient " + std::to_string(idx) + " is not reduced", std::nullopt};
  }
  {
    auto sorted = cert.basis;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return {false, "repeated monomial", std::nullopt};
  }
  if (std::all_of(cert.coeffs.begin(), cert.coeffs.end(), [](const Rational& q) { return sgn(q) == 0; }))
    return {false, "all coefficients are zero", std::nullopt};
  if (!lt_r_sqrt_xi(to_big(cert.n), to_big(cert.r), t.xi_big()))
    return {false, "n/r is not below sqrt(abc)", std::nullopt};

  // Clear denominators so each test is an integer sum.
  BigInt lcm = 1;
  for (const auto& q : cert.coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(cert.coeffs.size());
  for (const auto& q : cert.coeffs) ints.push_back(q.get_num() * (lcm / q.get_den()));

  const auto w = cert.basis.size();
  const auto r = static_cast<std::size_t>(cert.r);
  std::vector<std::array<std::vector<BigInt>, 3>> ff(w);
  for (std::size_t m = 0; m < w; ++m) {
    const std::array<std::int64_t, 3> e{cert.basis[m].i, cert.basis[m].j, cert.basis[m].k};
    for (std::size_t v = 0; v < 3; ++v)
      for (std::size_t s = 0; s < r; ++s) ff[m][v].push_back(falling_factorial(to_big(e[v]), static_cast<std::int64_t>(s)));
  }

  BigInt acc, term;
  for (std::size_t total = 0; total < r; ++total)
    for (std::size_t al = 0; al <= total; ++al)
      for (std::size_t ga = 0; al + ga <= total; ++ga) {
        const std::size_t be = total - al - ga;
        acc = 0;
        for (std::size_t m = 0; m < w; ++m) {
          term = ff[m][0][al] * ff[m][1][be];
          term *= ff[m][2][ga];
          acc += term * ints[m];
        }
        if (sgn(acc) != 0) {
          std::array<std::int64_t, 3> order{static_cast<std::int64_t>(al), static_cast<std::int64_t>(be),
                                            static_cast<std::int64_t>(ga)};
          return {false,
                  "derivative (" + std::to_string(order[0]) + "," + std::to_string(order[1]) + "," +
                      std::to_string(order[2]) + ") does not vanish at (1,1,1)",
                  order};
        }
      }
  return {true, "", std::nullopt};
}

}  // namespace negcurve

#endif  // NEGCURVE_SYMBOLIC_POWER_HPP

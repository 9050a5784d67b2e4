#ifndef NEGCURVE_CRITERIA_HPP
#define NEGCURVE_CRITERIA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "negcurve/exact_arith.hpp"
#include "negcurve/hilbert.hpp"
#include "negcurve/symbolic_power.hpp"
#include "negcurve/weight_triple.hpp"

namespace negcurve {

/// The class nA - rE in Cl(X) = ZA + ZE.
struct DivisorClass {
  BigInt n = 0;
  BigInt r = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// (n1 A - r1 E).(n2 A - r2 E) = n1 n2 / abc - r1 r2.
inline Rational intersect(const WeightTriple& t, const DivisorClass& d1, const DivisorClass& d2) {
  return make_rational(d1.n * d2.n, t.xi_big()) - Rational(d1.r * d2.r);
}

/// -K_X = (a+b+c) A - E.
inline DivisorClass anticanonical(const WeightTriple& t) { return {t.eta_big(), 1}; }

enum class Condition { C1, C2, C3 };
enum class Verdict { satisfied, unsatisfied, trivially_satisfied };

inline const char* to_string(Condition c) {
  switch (c) {
    case Condition::C1: return "C1";
    case Condition::C2: return "C2";
    case Condition::C3: return "C3";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::unsatisfied: return "unsatisfied";
    case Verdict::trivially_satisfied: return "trivially-satisfied";
  }
  return "?";
}

struct Witness {
  BigInt n, r;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ConditionReport {
  Condition condition = Condition::C2;
  Verdict verdict = Verdict::unsatisfied;
  std::optional<Witness> witness;
  /// Exclusive bound on q = floor(n / abc) reached by an exhaustive search.
  std::optional<BigInt> search_bound_used;
  std::string notes;
};

namespace detail {

/// Exact floor(n / sqrt(xi)) for the two integer widths used by the searches.
/// `inv_sqrt_xi` is 1/sqrt(xi) in extended precision.
inline BigInt root_floor(const BigInt& n, const BigInt& xi, long double) { return floor_div_sqrt(n, xi); }

/// Requires 0 <= n and n^2 < 2^126. Below kFastLimit the floating quotient
/// is accurate to about 1e-6, so a fractional part at least 1e-4 away from an
/// integer fixes the floor; otherwise it is settled by exact comparisons.
inline constexpr long double kFastLimit = std::numeric_limits<long double>::digits >= 64 ? 0x1p40L : 0x1p26L;

inline word::i128 root_floor(word::i128 n, word::i128 xi, long double inv_sqrt_xi) {
  if (n < (word::i128{1} << 62)) {
    const long double x = static_cast<long double>(static_cast<std::int64_t>(n)) * inv_sqrt_xi;
    if (x < kFastLimit) {
      const auto m = static_cast<std::int64_t>(x);
      const long double frac = x - static_cast<long double>(m);
      if (frac > 1e-4L && frac < 1 - 1e-4L) return m;
    }
  }
  const word::i128 nn = n * n;
  auto m = static_cast<word::i128>(static_cast<long double>(n) * inv_sqrt_xi);
  while (m > 0 && m * m * xi > nn) --m;
  while ((m + 1) * (m + 1) * xi <= nn) ++m;
  return m;
}

inline BigInt as_big(const BigInt& v) { return v; }
inline BigInt as_big(word::i128 v) { return word::to_big(v); }

/// Lex-least (q, v) with q (sqrt(xi) - eta) < 2 dim S_v and
///   xi q^2 + (eta + 2v) q + 2 dim S_v > r (r + 1),  r = floor((xi q + v) / sqrt(xi)) + 1,
/// or nullopt after the admissible region is exhausted; `q_end` receives the
/// first q for which no v was admissible (or the witness q).
template <class Int>
std::optional<Witness> c2_search(const HilbertTable& table, BigInt& q_end) {
  const auto& t = table.triple();
  const auto dims = table.dims();
  const Int xi = Int(t.xi()), eta = Int(t.eta());
  const long double inv_sqrt_xi = 1.0L / std::sqrt(static_cast<long double>(t.xi()));

  struct Residue {
    std::int64_t v, d;
  };
  std::vector<Residue> order;
  order.reserve(dims.size());
  for (std::size_t v = 0; v < dims.size(); ++v) order.push_back({static_cast<std::int64_t>(v), dims[v]});
  std::stable_sort(order.begin(), order.end(), [](const Residue& l, const Residue& r) { return l.d > r.d; });

  // Admissibility is monotone in dim S_v, so the admissible v form a prefix
  // of `order` that only shrinks as q grows.
  auto admissible = [&](const Int& q, std::int64_t d) {
    const Int twice_d = Int(2 * d);
    if (q == 0) return d > 0;
    const Int lhs = q * eta + twice_d;
    return lhs * lhs > q * q * xi;
  };

  std::size_t prefix = order.size();
  for (Int q = 0;; ++q) {
    while (prefix > 0 && !admissible(q, order[prefix - 1].d)) --prefix;
    if (prefix == 0) {
      q_end = as_big(q);
      return std::nullopt;
    }
    std::optional<std::int64_t> best_v;
    const Int quad = xi * q * q;
    for (std::size_t idx = 0; idx < prefix; ++idx) {
      const std::int64_t v = order[idx].v;
      if (best_v && v > *best_v) continue;
      const Int d = Int(order[idx].d);
      const Int n = xi * q + Int(v);
      const Int r = root_floor(n, xi, inv_sqrt_xi) + 1;
      if (quad + (eta + Int(2 * v)) * q + 2 * d > r * (r + 1)) best_v = v;
    }
    if (best_v) {
      q_end = as_big(q);
      const Int n = xi * q + Int(*best_v);
      return Witness{as_big(n), as_big(root_floor(n, xi, inv_sqrt_xi) + 1)};
    }
  }
}

/// q < 2 max_v dim S_v (sqrt(xi) + eta) / (xi - eta^2) + 1 bounds every
/// admissible q when eta^2 < xi.
inline BigInt c2_q_bound(const HilbertTable& table) {
  const auto& t = table.triple();
  const BigInt gap = t.xi_big() - t.eta_big() * t.eta_big();
  return 2 * to_big(table.max_dim()) * (isqrt(t.xi_big()) + 1 + t.eta_big()) / gap + 1;
}

}  // namespace detail

/// Decides: there exist n, r > 0 with n/r < sqrt(abc) and dim S_n > r(r+1)/2.
/// Trivially satisfied when (a+b+c)^2 > abc; otherwise an exhaustive search
/// over n = abc q + v, bounded by q (sqrt(abc) - a - b - c) < 2 dim S_v.
inline ConditionReport check_c2(const WeightTriple& t) {
  ConditionReport rep;
  rep.condition = Condition::C2;
  if (t.anticanonical_positive()) {
    rep.verdict = Verdict::trivially_satisfied;
    rep.notes = t.is_degenerate() ? "degenerate triple (1,1,1); no negative curve exists"
                                  : "(a+b+c)^2 > abc";
    return rep;
  }
  const HilbertTable table(t);
  BigInt q_end;
  std::optional<Witness> w;
  // n stays below abc (q_bound + 1), so 62 bits keep n^2 inside a signed 128-bit word.
  const BigInt n_bound = t.xi_big() * (detail::c2_q_bound(table) + 1);
  if (n_bound < (BigInt(1) << 62)) {
    w = detail::c2_search<word::i128>(table, q_end);
  } else {
    w = detail::c2_search<BigInt>(table, q_end);
  }
  rep.search_bound_used = q_end;
  if (w) {
    rep.verdict = Verdict::satisfied;
    rep.witness = std::move(w);
    rep.notes = "lex-least witness in (q, v)";
  } else {
    rep.verdict = Verdict::unsatisfied;
    rep.notes = "exhausted all q < " + q_end.get_str();
  }
  return rep;
}

/// Closed-form answer for (C3): eta^2 > abc when sqrt(abc) is irrational,
/// eta^2 > 9 abc when it is an integer.
inline bool c3_closed_form(const WeightTriple& t) {
  const BigInt eta2 = t.eta_big() * t.eta_big();
  return t.xi_is_square() ? eta2 > 9 * t.xi_big() : eta2 > t.xi_big();
}

struct C3Options {
  /// Searched exhaustively for every triple.
  std::int64_t q_limit = 100000;
  /// Hard cap when the closed form promises a witness beyond q_limit.
  std::int64_t q_cap = 100000000;
};

namespace detail {

template <class Int>
std::optional<std::int64_t> c3_search(const WeightTriple& t, std::int64_t q_from, std::int64_t q_to) {
  const Int xi = Int(t.xi()), eta = Int(t.eta());
  const long double inv_sqrt_xi = 1.0L / std::sqrt(static_cast<long double>(t.xi()));
  for (std::int64_t qq = q_from; qq < q_to; ++qq) {
    const Int q = Int(qq);
    const Int r = root_floor(xi * q, xi, inv_sqrt_xi) + 1;
    if (xi * q * q + eta * q + 2 > r * (r + 1)) return qq;
  }
  return std::nullopt;
}

}  // namespace detail

/// Searches n = abc q (v = 0) with the least admissible r = floor(q sqrt(abc)) + 1,
/// and cross-checks against c3_closed_form. Disagreement is a bug.
inline ConditionReport check_c3(const WeightTriple& t, const C3Options& opts = {}) {
  require(!t.is_degenerate(), "check_c3: (1,1,1) is excluded");
  require(opts.q_limit >= 2 && opts.q_cap >= opts.q_limit, "check_c3: invalid search limits");
  const bool closed = c3_closed_form(t);

  // n = abc q < 2^62 keeps n^2 within a signed 128-bit word.
  const bool narrow = t.xi_big() * to_big(opts.q_cap) < (BigInt(1) << 62);
  auto search = [&](std::int64_t from, std::int64_t to) {
    return narrow ? detail::c3_search<word::i128>(t, from, to) : detail::c3_search<BigInt>(t, from, to);
  };

  ConditionReport rep;
  rep.condition = Condition::C3;
  auto found = search(1, opts.q_limit);
  std::int64_t bound = opts.q_limit;
  if (!found && closed) {
    found = search(opts.q_limit, opts.q_cap);
    bound = opts.q_cap;
  }
  const bool searched = found.has_value();
  ensure(searched == closed, "check_c3: search (" + std::string(searched ? "satisfied" : "unsatisfied") +
                                 ") disagrees with closed form for " + t.str());
  if (found) {
    const BigInt q = to_big(*found);
    const BigInt n = t.xi_big() * q;
    rep.verdict = Verdict::satisfied;
    rep.witness = Witness{n, floor_div_sqrt(n, t.xi_big()) + 1};
    rep.notes = "search and closed form agree";
  } else {
    rep.verdict = Verdict::unsatisfied;
    rep.search_bound_used = to_big(bound);
    rep.notes = "no q < " + std::to_string(bound) + "; closed form agrees";
  }
  return rep;
}

/// Outcome of the ascending-degree negative-curve search.
struct CurveSearchResult {
  std::optional<NegativeCurveCertificate> certificate;
  std::optional<SymbolicDimResult> hit;
  std::int64_t max_r = 0;
  /// Degrees 1..n_searched were all examined.
  std::int64_t n_searched = 0;
};

/// Minimal n with [p^(floor(n/sqrt(abc))+1)]_n != 0, scanning n = 1, 2, ...
/// until r = floor(n/sqrt(abc)) + 1 exceeds max_r. The first hit is the class
/// n0 A - r0 E of the negative curve.
inline CurveSearchResult find_negative_curve(const WeightTriple& t, std::int64_t max_r,
                                             const SymbolicDimOptions& opts = {}) {
  require(max_r >= 1, "find_negative_curve: max_r must be positive");
  CurveSearchResult res;
  res.max_r = max_r;
  const BigInt xi = t.xi_big();
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t r = to_int64(floor_div_sqrt(to_big(n), xi)) + 1;
    if (r > max_r) break;
    res.n_searched = n;
    // A lone monomial never vanishes at (1,1,1).
    const auto w = to_int64(dim_count(t, n));
    if (w <= 1) continue;
    auto dim = symbolic_dim(t, n, r, opts);
    if (dim.dim == 0) continue;
    res.hit = dim;
    res.certificate = kernel_certificate(t, n, r);
    ensure(res.certificate.has_value(), "find_negative_curve: positive dimension without kernel vector");
    return res;
  }
  return res;
}

/// For p = (x^b - y^a, z - x^alpha y^beta) in the given order: the degree ab
/// or c of the generator lying below sqrt(abc), as a class with r = 1.
inline std::optional<DivisorClass> complete_intersection_witness(const WeightTriple& t) {
  const BigInt ab = to_big(t.a()) * to_big(t.b());
  const BigInt c = to_big(t.c());
  if (ab == c) return std::nullopt;
  const BigInt deg = ab < c ? ab : c;
  if (!lt_r_sqrt_xi(deg, 1, t.xi_big())) return std::nullopt;
  return DivisorClass{deg, 1};
}

}  // namespace negcurve

#endif  // NEGCURVE_CRITERIA_HPP

#ifndef NEGCURVE_LINEAR_ALGEBRA_HPP
#define NEGCURVE_LINEAR_ALGEBRA_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "negcurve/exact_arith.hpp"

namespace negcurve {

/// Dense row-major matrix of big integers.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

/// Row echelon form over Z with primitive rows. Pivot columns are the
/// lexicographically first independent set of columns, so they do not
/// depend on the row pivoting choices.
struct EchelonForm {
  std::size_t cols = 0;
  std::vector<std::vector<BigInt>> rows;  // rows[k][pivot_cols[k]] != 0
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const { return pivot_cols.size(); }
};

namespace detail {

/// Divides a row by the gcd of its entries and returns that gcd.
inline BigInt strip_content(std::vector<BigInt>& row, std::size_t from = 0) {
  BigInt g = 0;
  for (std::size_t c = from; c < row.size(); ++c) {
    if (sgn(row[c]) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[c].get_mpz_t());
    if (g == 1) return g;
  }
  if (g > 1)
    for (std::size_t c = from; c < row.size(); ++c)
      if (sgn(row[c]) != 0) mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
  return g;
}

}  // namespace detail

/// Fraction-free elimination: every update is row_i <- p * row_i - a * row_k
/// with p, a the cofactors after removing gcd(pivot, entry), followed by
/// division of row_i by its content. All divisions are exact.
inline EchelonForm fraction_free_echelon(const IntegerMatrix& m) {
  EchelonForm out;
  out.cols = m.cols();
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<BigInt> row(m.cols());
    bool nonzero = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row[c] = m(r, c);
      nonzero = nonzero || sgn(row[c]) != 0;
    }
    if (!nonzero) continue;
    detail::strip_content(row);
    rows.push_back(std::move(row));
  }

  std::size_t rank = 0;
  BigInt g, pf, af;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    // smallest nonzero entry in the column keeps cofactors small
    std::size_t best = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      if (best == rows.size() ||
          mpz_sizeinbase(rows[r][col].get_mpz_t(), 2) < mpz_sizeinbase(rows[best][col].get_mpz_t(), 2))
        best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    const auto& piv = rows[rank];

    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      auto& row = rows[r];
      if (sgn(row[col]) == 0) continue;
      mpz_gcd(g.get_mpz_t(), piv[col].get_mpz_t(), row[col].get_mpz_t());
      mpz_divexact(pf.get_mpz_t(), piv[col].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(af.get_mpz_t(), row[col].get_mpz_t(), g.get_mpz_t());
      row[col] = 0;
      for (std::size_t c = col + 1; c < row.size(); ++c) {
        mpz_mul(row[c].get_mpz_t(), row[c].get_mpz_t(), pf.get_mpz_t());
        mpz_submul(row[c].get_mpz_t(), af.get_mpz_t(), piv[c].get_mpz_t());
      }
      detail::strip_content(row, col + 1);
    }
    out.pivot_cols.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

inline std::size_t rank_exact(const IntegerMatrix& m) { return fraction_free_echelon(m).rank(); }

/// Kernel vector with x_f = 1 at the first non-pivot column f, zero on the
/// other non-pivot columns, scaled so that its first nonzero entry is 1.
/// Empty when the columns are independent.
inline std::vector<Rational> first_kernel_vector(const EchelonForm& e) {
  std::size_t f = 0;
  for (std::size_t k = 0; k < e.pivot_cols.size() && e.pivot_cols[k] == f; ++k) ++f;
  if (f >= e.cols) return {};

  std::vector<Rational> x(e.cols, Rational(0));
  x[f] = 1;
  // Pivot rows with pivot column beyond f only see zero unknowns.
  for (std::size_t k = std::min(f, e.pivot_cols.size()); k-- > 0;) {
    const auto& row = e.rows[k];
    const std::size_t pc = e.pivot_cols[k];
    Rational s = 0;
    for (std::size_t c = pc + 1; c <= f; ++c)
      if (sgn(row[c]) != 0 && sgn(x[c]) != 0) s += Rational(row[c]) * x[c];
    x[pc] = -s / Rational(row[pc]);
  }
  for (const auto& v : x) {
    if (sgn(v) == 0) continue;
    const Rational lead = v;
    for (auto& y : x) y /= lead;
    break;
  }
  return x;
}

/// Rank of the entrywise reduction modulo a prime p < 2^63. Never exceeds
/// the rank over Q.
inline std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p) {
  using word::u128;
  require(p >= 2 && p < (std::uint64_t{1} << 63), "rank_mod_p: modulus out of range");
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::uint64_t> a(nr * nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      a[r * nc + c] = mpz_fdiv_ui(m(r, c).get_mpz_t(), p);

  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<u128>(x) * y % p);
  };
  auto inverse = [&](std::uint64_t x) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = mulmod(result, x);
      x = mulmod(x, x);
      e >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t piv = rank;
    while (piv < nr && a[piv * nc + col] == 0) ++piv;
    if (piv == nr) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * nc),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * nc),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * nc));
    const std::uint64_t inv = inverse(a[rank * nc + col]);
    for (std::size_t c = col; c < nc; ++c) a[rank * nc + c] = mulmod(a[rank * nc + c], inv);
    for (std::size_t r = rank + 1; r < nr; ++r) {
      const std::uint64_t f = a[r * nc + col];
      if (f == 0) continue;
      for (std::size_t c = col; c < nc; ++c) {
        const std::uint64_t sub = mulmod(f, a[rank * nc + c]);
        auto& x = a[r * nc + c];
        x = x >= sub ? x - sub : x + (p - sub);
      }
    }
    ++rank;
  }
  return rank;
}

/// A prime in [2^61, 2^62) drawn from a seeded generator.
inline std::uint64_t random_prime(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 61, (std::uint64_t{1} << 62) - 1);
  for (;;) {
    BigInt c(static_cast<unsigned long>(dist(gen)));
    mpz_nextprime(c.get_mpz_t(), c.get_mpz_t());
    if (c < (BigInt(1) << 62)) return c.get_ui();
  }
}

}  // namespace negcurve

#endif  // NEGCURVE_LINEAR_ALGEBRA_HPP

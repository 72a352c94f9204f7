// Brute-force reference implementations used only by the tests. Each one
// takes a route that shares no code with the library algorithm it checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hecke/linalg.hpp"
#include "hecke/partitions.hpp"
#include "hecke/rmatrix.hpp"
#include "hecke/symfunc.hpp"

namespace oracle {

using hecke::DenseMatrix;
using hecke::Integer;
using hecke::Partition;
using hecke::Rational;

/// Fixed-seed source of test inputs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 20261018) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  /// num/den with |num| <= num_bound, 1 <= den <= den_bound.
  Rational rational(int num_bound, int den_bound) {
    Rational r(uniform(-num_bound, num_bound), uniform(1, den_bound));
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(int num_bound, int den_bound) {
    Rational r = 0;
    while (r == 0) r = rational(num_bound, den_bound);
    return r;
  }
  Partition partition(int n) {
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
      int p = uniform(1, parts.empty() ? left : std::min(left, parts.back()));
      parts.push_back(p);
      left -= p;
    }
    return Partition(parts);
  }

 private:
  std::mt19937_64 gen_;
};

/// Partitions of n from the 2^(n-1) compositions, keeping the weakly decreasing ones.
inline std::vector<std::vector<int>> partitions_from_compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) return {{}};
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> comp{1};
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) comp.push_back(1);
      else ++comp.back();
    }
    if (std::is_sorted(comp.begin(), comp.end(), std::greater<>())) out.push_back(comp);
  }
  return out;
}

/// Visits every filling of the shape with entries 1..k, rows weakly increasing
/// and columns strictly increasing.
inline void for_each_ssyt(const Partition& shape, int k, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> t;
  for (int len : shape.parts()) t.emplace_back(static_cast<std::size_t>(len), 0);
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == shape.length()) {
      visit(t);
      return;
    }
    if (c == shape[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= k; ++v) {
      t[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
}

inline Integer ssyt_count(const Partition& shape, const std::vector<int>& content) {
  Integer count = 0;
  const int k = static_cast<int>(content.size());
  for_each_ssyt(shape, k, [&](const auto& t) {
    std::vector<int> seen(content.size(), 0);
    for (const auto& row : t)
      for (int v : row) ++seen[static_cast<std::size_t>(v - 1)];
    if (seen == content) ++count;
  });
  return count;
}

/// Standard tableaux by removing a corner holding the largest entry, recursively.
inline Integer standard_tableaux(const std::vector<int>& shape) {
  if (shape.empty()) return 1;
  Integer total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    auto smaller = shape;
    if (--smaller[i] == 0) smaller.pop_back();
    total += standard_tableaux(smaller);
  }
  return total;
}

/// Matrices with given row sums and column sums; entries in [0, cap] (cap < 0 means unbounded).
inline Integer count_matrices(std::vector<int> rows, std::vector<int> cols, int cap) {
  std::function<Integer(std::size_t, std::size_t)> go = [&](std::size_t r, std::size_t c) -> Integer {
    if (r == rows.size()) {
      for (int x : cols)
        if (x != 0) return 0;
      return 1;
    }
    if (c == cols.size()) return rows[r] == 0 ? go(r + 1, 0) : Integer(0);
    Integer total = 0;
    int hi = std::min(rows[r], cols[c]);
    if (cap >= 0) hi = std::min(hi, cap);
    for (int v = 0; v <= hi; ++v) {
      rows[r] -= v;
      cols[c] -= v;
      total += go(r, c + 1);
      rows[r] += v;
      cols[c] += v;
    }
    return total;
  };
  return go(0, 0);
}

/// Mixed count by splitting each row sum between a nonnegative part and a 0/1 part.
inline Integer count_mixed(const hecke::PartitionPair& pair, const Partition& nu) {
  const auto& lam = pair.first.parts();
  const auto& mu = pair.second.parts();
  const auto rows = static_cast<std::size_t>(nu.length());
  Integer total = 0;
  std::vector<int> split(rows, 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == rows) {
      std::vector<int> a_rows(split), b_rows(rows);
      for (std::size_t r = 0; r < rows; ++r) b_rows[r] = nu.parts()[r] - split[r];
      total += count_matrices(a_rows, lam, -1) * count_matrices(b_rows, mu, 1);
      return;
    }
    for (int v = 0; v <= nu.parts()[i]; ++v) {
      split[i] = v;
      go(i + 1);
    }
  };
  go(0);
  return total;
}

/// Symmetric functions evaluated at a finite point x by summing monomials.
inline Rational monomial_sym(const Partition& lambda, const std::vector<Rational>& x) {
  if (lambda.length() > static_cast<int>(x.size())) return 0;
  std::vector<int> exps(x.size(), 0);
  for (int i = 0; i < lambda.length(); ++i) exps[static_cast<std::size_t>(i)] = lambda[i];
  std::sort(exps.begin(), exps.end());
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int e = 0; e < exps[i]; ++e) term *= x[i];
    total += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return total;
}

inline Rational complete_sym(int n, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& p : hecke::enumerate_partitions(n)) total += monomial_sym(p, x);
  return total;
}

inline Rational elementary_sym(int n, const std::vector<Rational>& x) {
  const auto k = x.size();
  if (n > static_cast<int>(k)) return 0;
  Rational total = 0;
  std::vector<bool> pick(k, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (pick[i]) term *= x[i];
    total += term;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

inline Rational schur_sym(const Partition& lambda, const std::vector<Rational>& x) {
  Rational total = 0;
  for_each_ssyt(lambda, static_cast<int>(x.size()), [&](const auto& t) {
    Rational term = 1;
    for (const auto& row : t)
      for (int v : row) term *= x[static_cast<std::size_t>(v - 1)];
    total += term;
  });
  return total;
}

inline Rational evaluate(const hecke::SymElement& u, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& [lambda, c] : u.terms()) {
    Rational v = 1;
    switch (u.basis()) {
      case hecke::Basis::m: v = monomial_sym(lambda, x); break;
      case hecke::Basis::s: v = schur_sym(lambda, x); break;
      case hecke::Basis::h:
        for (int p : lambda.parts()) v *= complete_sym(p, x);
        break;
      case hecke::Basis::e:
        for (int p : lambda.parts()) v *= elementary_sym(p, x);
        break;
    }
    total += c * v;
  }
  return total;
}

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0)
        for (std::size_t k = 0; k < b.rows(); ++k)
          for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// R_i^(n) as an explicit Kronecker product Id^(i-1) (x) R (x) Id^(n-i-1).
inline DenseMatrix tensor_op_dense(const hecke::HeckeSymmetry& r, int n, int i) {
  const auto d = static_cast<std::size_t>(r.dim());
  DenseMatrix out = DenseMatrix::identity(1);
  for (int k = 1; k < i; ++k) out = kron(out, DenseMatrix::identity(d));
  out = kron(out, r.matrix());
  for (int k = i + 2; k <= n; ++k) out = kron(out, DenseMatrix::identity(d));
  return out;
}

/// Rank by plain row reduction on a dense copy.
inline std::size_t dense_rank(DenseMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(rank, k));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

/// Basis of {x : m x = 0} from the reduced row echelon form, one vector per row of the result.
inline DenseMatrix nullspace(DenseMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(rank, k));
    const Rational lead = m(rank, c);
    for (std::size_t k = 0; k < m.cols(); ++k) m(rank, k) /= lead;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<std::size_t> free;
  for (std::size_t c = 0, p = 0; c < m.cols(); ++c) {
    if (p < pivots.size() && pivots[p] == c) {
      ++p;
      continue;
    }
    free.push_back(c);
  }
  DenseMatrix out(free.size(), m.cols());
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(k, free[k]) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) out(k, pivots[r]) = -m(r, free[k]);
  }
  return out;
}

/// Stacks the rows of several matrices with equal column counts.
inline DenseMatrix stack(const std::vector<DenseMatrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  DenseMatrix out(rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks)
    for (std::size_t r = 0; r < b.rows(); ++r, ++at)
      for (std::size_t c = 0; c < cols; ++c) out(at, c) = b(r, c);
  return out;
}

inline DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace oracle

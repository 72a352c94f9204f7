#include "hecke/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  DenseMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

Rational determinant(DenseMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

DenseMatrix inverse(const DenseMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  DenseMatrix a = m;
  DenseMatrix inv = DenseMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw Error("matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    Rational piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

SparseVector axpy(const SparseVector& x, const Rational& c, const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, c * j->second);
      ++j;
    } else {
      Rational v = i->second + c * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Rational dot(const SparseVector& x, const SparseVector& y) {
  Rational acc = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      acc += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return acc;
}

SparseVector sparse_from_dense(const std::vector<Rational>& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

bool EchelonBasis::insert(SparseVector v) {
  while (!v.empty()) {
    std::size_t lead = v.front().first;
    if (lead >= dim_) throw std::out_of_range("vector index beyond ambient dimension");
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      Rational inv = 1 / v.front().second;
      for (auto& [idx, val] : v) val *= inv;
      rows_.emplace(lead, std::move(v));
      return true;
    }
    v = axpy(v, -v.front().second, it->second);
  }
  return false;
}

void EchelonBasis::fully_reduce(std::map<std::size_t, SparseVector>& rows) const {
  // Back substitution from the last pivot so each pivot column is a unit column.
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    for (auto jt = rows.begin(); jt->first < it->first; ++jt) {
      SparseVector& r = jt->second;
      for (const auto& [idx, val] : r) {
        if (idx == it->first) {
          Rational c = -val;
          r = axpy(r, c, it->second);
          break;
        }
        if (idx > it->first) break;
      }
    }
  }
}

std::vector<SparseVector> EchelonBasis::rows() const {
  std::vector<SparseVector> out;
  for (const auto& [lead, r] : rows_) out.push_back(r);
  return out;
}

std::vector<SparseVector> EchelonBasis::orthogonal_complement() const {
  std::map<std::size_t, SparseVector> rref = rows_;
  fully_reduce(rref);
  // Free coordinate f gives x_f = 1 and x_p = -row_p[f] for each pivot p.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> by_free(dim_);
  for (const auto& [pivot, r] : rref)
    for (const auto& [idx, val] : r)
      if (idx != pivot) by_free[idx].emplace_back(pivot, -val);
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < dim_; ++f) {
    if (rref.count(f)) continue;
    SparseVector x = by_free[f];
    x.emplace_back(f, Rational(1));
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace hecke

#include "hecke/rmatrix.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::size_t checked_power(std::size_t base, int exp, std::size_t cap, const char* what) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
    if (out > cap)
      throw CapExceeded(std::string(what) + " " + std::to_string(base) + "^" + std::to_string(exp) +
                        " exceeds the cap " + std::to_string(cap));
  }
  return out;
}

// Sparse columns of a d^2 x d^2 dense matrix.
std::vector<SparseVector> sparse_columns(const DenseMatrix& m) {
  std::vector<SparseVector> cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) cols[c].emplace_back(r, m(r, c));
  return cols;
}

std::vector<SparseVector> sparse_rows(const DenseMatrix& m) {
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) rows[r].emplace_back(c, m(r, c));
  return rows;
}

// Accumulates c * (d^2 x d^2 column) placed at digits (pos, pos+1) of index base.
struct Accumulator {
  std::map<std::size_t, Rational> entries;
  void add(std::size_t idx, const Rational& c) {
    auto [it, inserted] = entries.try_emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) entries.erase(it);
    }
  }
  SparseVector take() { return SparseVector(entries.begin(), entries.end()); }
};

// Column x of R_i^(n) (0-based position p = i - 1), given the pair-level sparse columns.
template <typename F>
void for_each_in_column(const std::vector<SparseVector>& pair_columns, std::size_t d, int n, int p, std::size_t x,
                        F&& emit) {
  const std::size_t low = ipow(d, n - p - 2);
  const std::size_t pair = (x / low) % (d * d);
  const std::size_t base = x - pair * low;
  for (const auto& [row, val] : pair_columns[pair]) emit(base + row * low, val);
}

std::vector<Rational> r_power_apply(const std::vector<SparseVector>& cols, std::size_t d, int n, int p,
                                    const std::vector<Rational>& v) {
  std::vector<Rational> out(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (v[x] == 0) continue;
    for_each_in_column(cols, d, n, p, x, [&](std::size_t y, const Rational& c) { out[y] += c * v[x]; });
  }
  return out;
}

void validate(int d, const Rational& q, const DenseMatrix& m) {
  if (d < 1) throw ValidationError(ValidationError::Kind::shape, {}, "dimension must be positive");
  if (q == 0) throw ValidationError(ValidationError::Kind::shape, {}, "q must be nonzero");
  const auto dd = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  if (m.rows() != dd || m.cols() != dd)
    throw ValidationError(ValidationError::Kind::shape, {},
                          "matrix must be " + std::to_string(dd) + "x" + std::to_string(dd) + ", got " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  DenseMatrix shifted_minus = m, shifted_plus = m;
  for (std::size_t i = 0; i < dd; ++i) {
    shifted_minus(i, i) -= q;
    shifted_plus(i, i) += 1;
  }
  const DenseMatrix quad = shifted_minus * shifted_plus;
  for (std::size_t c = 0; c < dd; ++c)
    for (std::size_t r = 0; r < dd; ++r)
      if (quad(r, c) != 0) {
        const int i = static_cast<int>(c) / d + 1, j = static_cast<int>(c) % d + 1;
        throw ValidationError(ValidationError::Kind::hecke, {i, j},
                              "(R - q)(R + 1) is nonzero on e_" + std::to_string(i) + " (x) e_" + std::to_string(j));
      }

  const auto cols = sparse_columns(m);
  const auto ud = static_cast<std::size_t>(d);
  const std::size_t dim3 = ud * ud * ud;
  auto r12 = [&](const std::vector<Rational>& v) { return r_power_apply(cols, ud, 3, 0, v); };
  auto r23 = [&](const std::vector<Rational>& v) { return r_power_apply(cols, ud, 3, 1, v); };
  for (std::size_t x = 0; x < dim3; ++x) {
    std::vector<Rational> e(dim3);
    e[x] = 1;
    if (r12(r23(r12(e))) != r23(r12(r23(e)))) {
      const int a = static_cast<int>(x / (ud * ud)) + 1;
      const int b = static_cast<int>((x / ud) % ud) + 1;
      const int c = static_cast<int>(x % ud) + 1;
      throw ValidationError(ValidationError::Kind::braid, {a, b, c},
                            "braid equation fails on e_" + std::to_string(a) + " (x) e_" + std::to_string(b) +
                                " (x) e_" + std::to_string(c));
    }
  }
}

// Basis of Ker(R - q) in V (x) V.
std::vector<SparseVector> eigen_kernel(const HeckeSymmetry& r) {
  const auto dd = r.matrix().rows();
  EchelonBasis rowspace(dd);
  for (std::size_t i = 0; i < dd; ++i) {
    SparseVector row = r.rows()[i];
    row = axpy(row, -r.q(), SparseVector{{i, Rational(1)}});
    if (!row.empty()) rowspace.insert(std::move(row));
  }
  return rowspace.orthogonal_complement();
}

Rational parse_entry(const std::string& token, int line, int column) {
  try {
    return parse_rational(token);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line, column);
  }
}

}  // namespace

HeckeSymmetry load_and_validate(int d, const Rational& q, const DenseMatrix& matrix, bool user_supplied,
                                std::string label) {
  validate(d, q, matrix);
  HeckeSymmetry r;
  r.d_ = d;
  r.q_ = q;
  r.matrix_ = matrix;
  r.columns_ = sparse_columns(matrix);
  r.rows_ = sparse_rows(matrix);
  r.user_supplied_ = user_supplied;
  r.label_ = std::move(label);
  return r;
}

std::string HeckeSymmetry::serialize() const {
  std::ostringstream out;
  out << "hecke-symmetry v1\n";
  out << "d = " << d_ << "\n";
  out << "q = " << q_.get_num().get_str() << "/" << q_.get_den().get_str() << "\n";
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    for (std::size_t c = 0; c < matrix_.cols(); ++c) out << (c ? " " : "") << hecke::to_string(matrix_(r, c));
    out << "\n";
  }
  return out.str();
}

HeckeSymmetry build_super(int r0, int r1, const Rational& q) {
  if (r0 < 0 || r1 < 0 || r0 + r1 < 1) throw std::invalid_argument("super symmetry needs r0, r1 >= 0 and r0 + r1 >= 1");
  if (q == 0) throw std::invalid_argument("q must be nonzero");
  const int d = r0 + r1;
  const auto ud = static_cast<std::size_t>(d);
  DenseMatrix m(ud * ud, ud * ud);
  auto odd = [&](int i) { return i >= r0; };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const auto col = static_cast<std::size_t>(i * d + j);
      const auto swapped = static_cast<std::size_t>(j * d + i);
      const Rational sign = odd(i) && odd(j) ? -1 : 1;
      if (i == j) {
        m(col, col) = odd(i) ? Rational(-1) : q;
      } else if (i < j) {
        m(swapped, col) = sign;
      } else {
        m(swapped, col) = q * sign;
        m(col, col) = q - 1;
      }
    }
  std::ostringstream label;
  label << "super:" << r0 << "," << r1 << ",q=" << hecke::to_string(q);
  return load_and_validate(d, q, m, false, label.str());
}

HeckeSymmetry build_standard(int r, const Rational& q) {
  if (r < 1) throw std::invalid_argument("standard symmetry needs r >= 1");
  HeckeSymmetry s = build_super(r, 0, q);
  return load_and_validate(r, q, s.matrix(), false, "std:r=" + std::to_string(r) + ",q=" + hecke::to_string(q));
}

HeckeSymmetry parse_symmetry(const std::string& text, std::string label) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  auto header_value = [&](const std::string& key) {
    if (!next_line()) throw ParseError("missing '" + key + " = ...' line", line_no + 1, 1);
    const auto eq = line.find('=');
    std::string name = line.substr(0, eq == std::string::npos ? 0 : eq);
    name.erase(name.find_last_not_of(" \t") + 1);
    name.erase(0, name.find_first_not_of(" \t"));
    if (eq == std::string::npos || name != key) throw ParseError("expected '" + key + " = ...'", line_no, 1);
    return std::make_pair(line.substr(eq + 1), static_cast<int>(eq) + 2);
  };

  if (!next_line() || line.find_first_not_of(" \t") == std::string::npos ||
      line.substr(line.find_first_not_of(" \t")).rfind("hecke-symmetry v1", 0) != 0)
    throw ParseError("expected header 'hecke-symmetry v1'", line_no == 0 ? 1 : line_no, 1);

  auto [d_text, d_col] = header_value("d");
  Rational d_value = parse_entry(d_text, line_no, d_col);
  if (!is_integer(d_value) || d_value < 1 || d_value > 64) throw ParseError("d must be an integer in 1..64", line_no, d_col);
  const int d = static_cast<int>(d_value.get_num().get_si());
  auto [q_text, q_col] = header_value("q");
  const Rational q = parse_entry(q_text, line_no, q_col);

  const auto dd = static_cast<std::size_t>(d * d);
  DenseMatrix m(dd, dd);
  for (std::size_t r = 0; r < dd; ++r) {
    if (!next_line()) throw ParseError("expected " + std::to_string(dd) + " matrix rows", line_no + 1, 1);
    std::size_t c = 0, pos = 0;
    while (true) {
      pos = line.find_first_not_of(" \t", pos);
      if (pos == std::string::npos) break;
      const auto end = line.find_first_of(" \t", pos);
      const std::string token = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      if (c >= dd) throw ParseError("too many entries in matrix row", line_no, static_cast<int>(pos) + 1);
      m(r, c++) = parse_entry(token, line_no, static_cast<int>(pos) + 1);
      if (end == std::string::npos) break;
      pos = end;
    }
    if (c != dd)
      throw ParseError("matrix row has " + std::to_string(c) + " entries, expected " + std::to_string(dd), line_no,
                       static_cast<int>(line.size()) + 1);
  }
  if (next_line()) throw ParseError("trailing content after matrix", line_no, 1);
  return load_and_validate(d, q, m, true, std::move(label));
}

HeckeSymmetry load_symmetry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open symmetry file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_symmetry(buffer.str(), "file:" + path);
}

SparseVector apply_tensor_op(const TensorOperator& op, const SparseVector& v) {
  const auto d = static_cast<std::size_t>(op.symmetry->dim());
  if (op.position < 1 || op.position >= op.n) throw std::invalid_argument("tensor position out of range");
  Accumulator acc;
  for (const auto& [x, coeff] : v)
    for_each_in_column(op.symmetry->columns(), d, op.n, op.position - 1, x,
                       [&](std::size_t y, const Rational& c) { acc.add(y, c * coeff); });
  return acc.take();
}

std::vector<Rational> apply_tensor_op(const TensorOperator& op, const std::vector<Rational>& v) {
  const auto d = static_cast<std::size_t>(op.symmetry->dim());
  if (v.size() != ipow(d, op.n))
    throw std::invalid_argument("vector of size " + std::to_string(v.size()) + " does not match d^n = " +
                                std::to_string(ipow(d, op.n)));
  if (op.position < 1 || op.position >= op.n) throw std::invalid_argument("tensor position out of range");
  return r_power_apply(op.symmetry->columns(), d, op.n, op.position - 1, v);
}

std::vector<int> parabolic_positions(const Partition& lambda) {
  std::vector<int> out;
  int offset = 0;
  for (int part : lambda.parts()) {
    for (int k = 1; k < part; ++k) out.push_back(offset + k);
    offset += part;
  }
  return out;
}

std::size_t dim_quotient(const HeckeSymmetry& r, const Partition& lambda, const Partition& mu, std::size_t cap) {
  const int n = lambda.weight() + mu.weight();
  const auto d = static_cast<std::size_t>(r.dim());
  const std::size_t total = checked_power(d, n, cap, "tensor dimension");
  EchelonBasis span(total);
  for (int i : parabolic_positions(lambda)) {
    TensorOperator op{&r, n, i};
    for (std::size_t x = 0; x < total; ++x) {
      SparseVector e{{x, Rational(1)}};
      span.insert(axpy(apply_tensor_op(op, e), -r.q(), e));
    }
  }
  const auto mu_positions = parabolic_positions(mu);
  if (!mu_positions.empty()) {
    const auto kernel = eigen_kernel(r);
    for (int k : mu_positions) {
      const int i = lambda.weight() + k;
      // e_a (x) w (x) e_b with w in Ker(R - q) occupying factors i, i + 1.
      const std::size_t low = ipow(d, n - i - 1);
      const std::size_t high = ipow(d, i - 1);
      for (std::size_t a = 0; a < high; ++a)
        for (std::size_t b = 0; b < low; ++b)
          for (const auto& w : kernel) {
            SparseVector v;
            for (const auto& [pair, c] : w) v.emplace_back((a * d * d + pair) * low + b, c);
            span.insert(std::move(v));
          }
    }
  }
  return total - span.rank();
}

namespace {

struct HomSetup {
  std::size_t src;  // d^n
  std::size_t dst;  // d'^n
  std::size_t unknowns;
};

HomSetup hom_setup(const HeckeSymmetry& r2, const HeckeSymmetry& r, int n, std::size_t cap) {
  if (r2.q() != r.q())
    throw Error("symmetries have different q: " + hecke::to_string(r2.q()) + " and " + hecke::to_string(r.q()));
  const auto d = static_cast<std::size_t>(r.dim());
  const auto d2 = static_cast<std::size_t>(r2.dim());
  const std::size_t unknowns = checked_power(d * d2, n, cap, "hom-space dimension");
  return {ipow(d, n), ipow(d2, n), unknowns};
}

// Row u of R_i^(n) as (column, value) pairs.
template <typename F>
void for_each_in_row(const HeckeSymmetry& r, int n, int p, std::size_t u, F&& emit) {
  const auto d = static_cast<std::size_t>(r.dim());
  const std::size_t low = ipow(d, n - p - 2);
  const std::size_t pair = (u / low) % (d * d);
  const std::size_t base = u - pair * low;
  for (const auto& [col, val] : r.rows()[pair]) emit(base + col * low, val);
}

}  // namespace

std::size_t dim_intertwiner(const HeckeSymmetry& r2, const HeckeSymmetry& r, int n, std::size_t cap) {
  const HomSetup s = hom_setup(r2, r, n, cap);
  if (n <= 1) return s.unknowns;
  const auto d = static_cast<std::size_t>(r.dim());
  // Unknown h(u, x) with u in V'^n, x in V^n has index u * src + x.
  EchelonBasis eqs(s.unknowns);
  for (int p = 0; p + 1 < n; ++p)
    for (std::size_t u = 0; u < s.dst; ++u)
      for (std::size_t x = 0; x < s.src; ++x) {
        Accumulator acc;
        // (h R_i)(u, x) = sum_y h(u, y) R_i(y, x)
        for_each_in_column(r.columns(), d, n, p, x,
                           [&](std::size_t y, const Rational& c) { acc.add(u * s.src + y, c); });
        // (R'_i h)(u, x) = sum_v R'_i(u, v) h(v, x)
        for_each_in_row(r2, n, p, u, [&](std::size_t v, const Rational& c) { acc.add(v * s.src + x, -c); });
        SparseVector eq = acc.take();
        if (!eq.empty()) eqs.insert(std::move(eq));
      }
  return s.unknowns - eqs.rank();
}

std::size_t dim_e_component(const HeckeSymmetry& r2, const HeckeSymmetry& r, int n, std::size_t cap) {
  const HomSetup s = hom_setup(r2, r, n, cap);
  if (n <= 1) return s.unknowns;
  const auto d2 = static_cast<std::size_t>(r2.dim());
  const Rational& q = r.q();
  // R'^{-1} = (R' - (q - 1)) / q by the quadratic relation.
  DenseMatrix inv = r2.matrix();
  for (std::size_t i = 0; i < inv.rows(); ++i) inv(i, i) -= q - 1;
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) inv(i, j) /= q;
  const auto inv_cols = sparse_columns(inv);

  EchelonBasis annihilators(s.unknowns);
  for (int p = 0; p + 1 < n; ++p) {
    EchelonBasis image(s.unknowns);
    for (std::size_t u = 0; u < s.dst; ++u)
      for (std::size_t x = 0; x < s.src; ++x) {
        // R'^{-1}_i E_{ux} R_i - E_{ux}; entry (v, y) = R'^{-1}_i(v, u) R_i(x, y).
        Accumulator acc;
        for_each_in_column(inv_cols, d2, n, p, u, [&](std::size_t v, const Rational& a) {
          for_each_in_row(r, n, p, x, [&](std::size_t y, const Rational& b) { acc.add(v * s.src + y, a * b); });
        });
        acc.add(u * s.src + x, Rational(-1));
        SparseVector w = acc.take();
        if (!w.empty()) image.insert(std::move(w));
      }
    for (auto& w : image.orthogonal_complement()) annihilators.insert(std::move(w));
  }
  return s.unknowns - annihilators.rank();
}

}  // namespace hecke

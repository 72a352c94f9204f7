#include "hecke/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::rectangle(int a, int k) {
  if (a <= 0 || k <= 0) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(k), a));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition Partition::parse(std::string_view text) {
  auto s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("partition must be written as [a,b,...]: '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (s.find_first_not_of(' ') != std::string_view::npos) {
    for (const auto& r : parse_rational_list(s)) {
      if (!is_integer(r)) throw ParseError("partition parts must be integers: '" + std::string(text) + "'");
      parts.push_back(static_cast<int>(r.get_num().get_si()));
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

namespace {

void enumerate_rec(int remaining, int max_part, int slots, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_rec(remaining - p, p, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_len) {
  if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_rec(n, n, max_len.value_or(n), prefix, out);
  return out;
}

std::vector<PartitionPair> enumerate_partition_pairs(int n) {
  std::vector<PartitionPair> out;
  for (int k = n; k >= 0; --k)
    for (const auto& lambda : enumerate_partitions(k))
      for (const auto& mu : enumerate_partitions(n - k)) out.push_back({lambda, mu});
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  for (int j = 0; j < lambda[0]; ++j) {
    int count = 0;
    while (count < lambda.length() && lambda[count] > j) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) throw std::invalid_argument("dominance order compares partitions of equal weight");
  int a = 0, b = 0;
  for (int i = 0; i < std::max(mu.length(), lambda.length()); ++i) {
    a += mu[i];
    b += lambda[i];
    if (a > b) return false;
  }
  return true;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

bool in_hook(const Partition& lambda, int r0, int r1) {
  for (int j = r0; j < lambda.length(); ++j)
    if (lambda[j] > r1) return false;
  return true;
}

Integer standard_tableaux_count(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return factorial(lambda.weight()) / hooks;
}

namespace {

// All shapes obtained from `shape` by adding a horizontal strip of `size`
// cells inside `outer`.
void horizontal_strips(const std::vector<int>& shape, const Partition& outer, int size, std::size_t row,
                       std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (row == shape.size()) {
    if (size == 0) out.push_back(current);
    return;
  }
  int lo = shape[row];
  int hi = outer[static_cast<int>(row)];
  if (row > 0) hi = std::min(hi, shape[row - 1]);
  for (int v = lo; v <= hi && v - lo <= size; ++v) {
    current[row] = v;
    horizontal_strips(shape, outer, size - (v - lo), row + 1, current, out);
  }
  current[row] = shape[row];
}

}  // namespace

Integer skew_kostka(const Partition& outer, const Partition& inner, const std::vector<int>& content) {
  if (!contains(outer, inner)) return 0;
  int total = std::accumulate(content.begin(), content.end(), 0);
  if (total != outer.weight() - inner.weight()) return 0;
  std::vector<int> start(static_cast<std::size_t>(outer.length()), 0);
  for (int i = 0; i < inner.length(); ++i) start[static_cast<std::size_t>(i)] = inner[i];
  std::map<std::vector<int>, Integer> states{{start, 1}};
  for (int letter : content) {
    if (letter < 0) throw std::invalid_argument("content entries must be nonnegative");
    std::map<std::vector<int>, Integer> next;
    for (const auto& [shape, count] : states) {
      std::vector<std::vector<int>> strips;
      std::vector<int> current = shape;
      horizontal_strips(shape, outer, letter, 0, current, strips);
      for (auto& s : strips) next[std::move(s)] += count;
    }
    states = std::move(next);
  }
  Integer result = 0;
  for (const auto& [shape, count] : states) result += count;
  return result;
}

Integer kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("Kostka numbers need partitions of equal weight");
  return skew_kostka(lambda, Partition(), mu.parts());
}

Integer lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.weight() + mu.weight() != nu.weight() || !contains(nu, lambda)) return 0;
  if (mu.empty()) return 1;
  // Cells of nu/lambda in reverse reading order: rows top to bottom, right to left.
  struct Cell {
    int row, col;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < nu.length(); ++i)
    for (int j = nu[i] - 1; j >= lambda[i]; --j) cells.push_back({i, j});
  const int letters = mu.length();
  std::vector<std::vector<int>> filling(static_cast<std::size_t>(nu.length()));
  for (int i = 0; i < nu.length(); ++i) filling[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(nu[i]), 0);
  std::vector<int> used(static_cast<std::size_t>(letters) + 1, 0);
  Integer count = 0;

  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [i, j] = cells[k];
    int hi = letters;
    if (j + 1 < nu[i]) hi = std::min(hi, filling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)]);
    int lo = 1;
    if (i > 0 && j >= lambda[i - 1]) lo = filling[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1;
    for (int v = lo; v <= hi; ++v) {
      auto uv = static_cast<std::size_t>(v);
      if (used[uv] + 1 > mu[v - 1]) continue;
      if (v > 1 && used[uv] + 1 > used[uv - 1]) continue;
      ++used[uv];
      filling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      place(k + 1);
      --used[uv];
    }
    filling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
  };
  place(0);
  return count;
}

Integer lr_coeff_pieri(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.weight() + mu.weight() != nu.weight()) return 0;
  const auto shapes = enumerate_partitions(mu.weight());
  std::vector<Integer> coeff(shapes.size());
  for (std::size_t j = 0; j < shapes.size(); ++j) {
    Integer c = skew_kostka(nu, lambda, shapes[j].parts());
    for (std::size_t i = 0; i < j; ++i)
      if (coeff[i] != 0) c -= kostka(shapes[i], shapes[j]) * coeff[i];
    coeff[j] = c;
    if (shapes[j] == mu) return c;
  }
  throw std::logic_error("partition missing from its own enumeration");
}

namespace {

// Rows of fixed sum distributed over columns with remaining capacities.
void distribute(std::vector<int>& capacity, std::size_t col, int amount, int max_entry,
                const std::function<void()>& emit) {
  if (col == capacity.size()) {
    if (amount == 0) emit();
    return;
  }
  int top = std::min({amount, capacity[col], max_entry});
  for (int x = 0; x <= top; ++x) {
    capacity[col] -= x;
    distribute(capacity, col + 1, amount - x, max_entry, emit);
    capacity[col] += x;
  }
}

}  // namespace

Integer count_row_col_matrices(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) throw std::invalid_argument("row and column sums must have equal weight");
  std::map<std::pair<int, std::vector<int>>, Integer> memo;
  std::function<Integer(int, std::vector<int>&)> rows = [&](int row, std::vector<int>& cols) -> Integer {
    if (row == lambda.length()) return 1;
    auto key = std::make_pair(row, cols);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    distribute(cols, 0, lambda[row], lambda.weight(), [&] { total += rows(row + 1, cols); });
    memo.emplace(std::move(key), total);
    return total;
  };
  std::vector<int> cols = mu.parts();
  return rows(0, cols);
}

Integer count_mixed_matrices(const PartitionPair& pair, const Partition& nu) {
  if (pair.weight() != nu.weight()) throw std::invalid_argument("matrix counts need equal total weight");
  const auto& lambda = pair.first;
  const auto& mu = pair.second;
  std::map<std::pair<int, std::vector<int>>, Integer> memo;
  // State: remaining column sums of A followed by those of B.
  std::function<Integer(int, std::vector<int>&)> rows = [&](int row, std::vector<int>& state) -> Integer {
    if (row == nu.length()) return 1;
    auto key = std::make_pair(row, state);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    std::vector<int> a(state.begin(), state.begin() + lambda.length());
    std::vector<int> b(state.begin() + lambda.length(), state.end());
    for (int from_b = 0; from_b <= std::min(nu[row], static_cast<int>(b.size())); ++from_b) {
      distribute(b, 0, from_b, 1, [&] {
        distribute(a, 0, nu[row] - from_b, nu.weight(), [&] {
          std::vector<int> next = a;
          next.insert(next.end(), b.begin(), b.end());
          total += rows(row + 1, next);
        });
      });
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  std::vector<int> state = lambda.parts();
  state.insert(state.end(), mu.parts().begin(), mu.parts().end());
  return rows(0, state);
}

Integer multinomial(const PartitionPair& pair) {
  Integer denom = 1;
  for (int p : pair.first.parts()) denom *= factorial(p);
  for (int p : pair.second.parts()) denom *= factorial(p);
  return factorial(pair.weight()) / denom;
}

}  // namespace hecke

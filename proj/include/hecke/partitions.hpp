#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

/// Weakly decreasing sequence of positive integers. The empty sequence is the
/// zero partition.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// The rectangle (a^k).
  static Partition rectangle(int a, int k);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// 0-based part access, 0 beyond the length.
  int operator[](int i) const { return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  /// Lexicographic comparison of the part sequences.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  /// "[3,1]"; the zero partition is "[]".
  std::string to_string() const;
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// An element of P^2(n).
struct PartitionPair {
  Partition first;
  Partition second;
  int weight() const { return first.weight() + second.weight(); }
  friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
};

/// All partitions of n (with at most max_len parts when given), in descending
/// lexicographic order: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_len = std::nullopt);

/// P^2(n), ordered by |first| descending, then each component in descending lexicographic order.
std::vector<PartitionPair> enumerate_partition_pairs(int n);

Partition conjugate(const Partition& lambda);

/// mu <= lambda in dominance order. Throws std::invalid_argument on weight mismatch.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// Containment of Young diagrams.
bool contains(const Partition& outer, const Partition& inner);

bool in_hook(const Partition& lambda, int r0, int r1);

/// Number of standard tableaux of shape lambda (hook length formula).
Integer standard_tableaux_count(const Partition& lambda);

/// Semistandard fillings of outer/inner with content given by the composition
/// `content`, built one letter at a time as horizontal strips.
Integer skew_kostka(const Partition& outer, const Partition& inner, const std::vector<int>& content);

/// K_{lambda,mu}. Throws std::invalid_argument on weight mismatch.
Integer kostka(const Partition& lambda, const Partition& mu);

/// c^nu_{lambda,mu} by enumeration of Littlewood-Richardson tableaux of shape
/// nu/lambda and content mu (reverse reading word must be a lattice word).
Integer lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// The same coefficient through iterated Pieri rules: the coefficient of s_nu in
/// s_lambda h_rho is a skew Kostka number, and h_rho = sum K_{mu,rho} s_mu is
/// inverted by unitriangular substitution.
Integer lr_coeff_pieri(const Partition& lambda, const Partition& mu, const Partition& nu);

/// N_{mu,lambda}: nonnegative integer matrices with row sums lambda and column sums mu.
Integer count_row_col_matrices(const Partition& mu, const Partition& lambda);

/// N_{(lambda,mu),nu}: pairs (A, B) of l(nu)-row matrices, A nonnegative with
/// column sums lambda, B 0/1 with column sums mu, joint row sums nu.
Integer count_mixed_matrices(const PartitionPair& pair, const Partition& nu);

/// n! / (prod parts! of both components)
Integer multinomial(const PartitionPair& pair);

}  // namespace hecke

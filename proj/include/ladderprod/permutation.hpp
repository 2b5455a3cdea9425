#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ladderprod/error.hpp"

namespace ladderprod {

/// Element of S_m in one-line notation. Positions and values are 1-based in
/// the public interface.
class Permutation {
 public:
  static constexpr int kMaxSize = 16;

  Permutation() = default;
  /// Throws InvalidArgument unless one_line is a bijection on {1..m}.
  explicit Permutation(const std::vector<int>& one_line);

  static Permutation identity(int m);
  static Permutation longest(int m);

  int size() const { return n_; }
  /// w(i) for 1 <= i <= size().
  int operator()(int i) const { return img_[i - 1] + 1; }
  /// Zero-based access: w(i+1)-1.
  int at0(int i) const { return img_[i]; }
  std::vector<int> one_line() const;

  int length() const;
  int sign() const { return length() % 2 == 0 ? 1 : -1; }
  bool is_identity() const;

  Permutation inverse() const;
  /// Composition (a*b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  /// s_i * w: swaps the values i and i+1.
  Permutation left_mul_simple(int i) const;
  /// w * s_i: swaps the entries at positions i and i+1.
  Permutation right_mul_simple(int i) const;
  bool has_right_descent(int i) const { return img_[i - 1] > img_[i]; }
  bool has_left_descent(int i) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.img_ == b.img_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.img_ <=> b.img_;
  }

 private:
  std::array<std::uint8_t, kMaxSize> img_{};
  std::uint8_t n_ = 0;
};

/// Weakly increasing integer tuple (lambda or mu) together with the blocks of
/// equal entries; stabilized by the parabolic subgroup of S_m it defines.
class BlockStructure {
 public:
  BlockStructure() = default;
  explicit BlockStructure(std::vector<int> values);

  int size() const { return static_cast<int>(values_.size()); }
  /// 1-based entry.
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }
  /// True iff positions i and i+1 lie in the same block.
  bool joined(int i) const { return values_[i - 1] == values_[i]; }
  bool is_strict() const;
  /// Blocks as lists of 1-based positions.
  std::vector<std::vector<int>> blocks() const;

  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
  friend auto operator<=>(const BlockStructure&, const BlockStructure&) = default;

 private:
  std::vector<int> values_;
};

/// Rank-matrix dominance. Throws InvalidArgument on size mismatch.
bool bruhat_leq(const Permutation& x, const Permutation& w);

bool contains_pattern(const Permutation& w, const Permutation& p);
inline bool avoids(const Permutation& w, const Permutation& p) { return !contains_pattern(w, p); }
/// Decreasing pattern (k)(k-1)...1.
Permutation decreasing_pattern(int k);

/// lambda_i <= mu_{w(i)} + 1 for all i.
bool in_Q(const Permutation& w, const BlockStructure& lam, const BlockStructure& mu);
bool is_max_double_coset(const Permutation& w, const BlockStructure& lam, const BlockStructure& mu);
inline bool in_S(const Permutation& w, const BlockStructure& lam, const BlockStructure& mu) {
  return in_Q(w, lam, mu) && is_max_double_coset(w, lam, mu);
}
/// Elements of S(lam,mu) in lexicographic order.
std::vector<Permutation> enumerate_S(const BlockStructure& lam, const BlockStructure& mu);
/// Unique longest element of S^mu w S^lambda.
Permutation longest_double_coset_rep(const Permutation& w, const BlockStructure& lam,
                                     const BlockStructure& mu);

/// Sorted 1-based index sets, one per factor, partitioning {1..m}.
using IndexParts = std::vector<std::vector<int>>;

/// Interleaving: the t-th position of part f goes to the value at index
/// ws[f](t) of the f-th value part.
Permutation star(const std::vector<Permutation>& ws, const IndexParts& pos_parts,
                 const IndexParts& val_parts);
inline Permutation star(const Permutation& w1, const Permutation& w2, const IndexParts& pos_parts,
                        const IndexParts& val_parts) {
  return star({w1, w2}, pos_parts, val_parts);
}
Permutation star_longest(const std::vector<Permutation>& ws, const IndexParts& pos_parts,
                         const IndexParts& val_parts, const BlockStructure& lam,
                         const BlockStructure& mu);
/// Odd positions and values in part 0, even ones in part 1.
IndexParts odd_even_parts(int m);

/// Deletes the entries at the given 1-based positions and relabels.
Permutation flatten(const Permutation& w, const std::vector<int>& remove_positions);

/// All of S_m in lexicographic order.
std::vector<Permutation> all_permutations(int m);
/// Calls visit on every w in S_m avoiding all patterns, in lexicographic order.
void for_each_avoider(int m, const std::vector<Permutation>& patterns,
                      const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_avoiders(int m, const std::vector<Permutation>& patterns);

/// Accepts "3,4,1,2", compact "3412" (m <= 9), or "e" when m is given.
Permutation parse_permutation(std::string_view text, int m = -1);
/// Comma-separated images.
std::string to_string(const Permutation& w);
/// Compact digits when m <= 9, comma-separated otherwise.
std::string to_compact_string(const Permutation& w);
std::string to_string(const BlockStructure& b);

}  // namespace ladderprod

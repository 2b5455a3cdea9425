#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ladderprod/permutation.hpp"
#include "ladderprod/polynomial.hpp"

namespace ladderprod {

/// Index tables for S_m, elements numbered by lexicographic rank (identity 0,
/// longest element m!-1). Simple reflections s_1..s_{m-1} are 1-based.
class SymmetricGroup {
 public:
  static constexpr int kMaxRank = 9;

  explicit SymmetricGroup(int m);

  int rank() const { return m_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(elements_.size()); }
  std::uint32_t index(const Permutation& w) const;
  const Permutation& element(std::uint32_t i) const { return elements_[i]; }
  int length(std::uint32_t i) const { return length_[i]; }
  std::uint32_t inverse(std::uint32_t i) const { return inverse_[i]; }
  std::uint32_t lmul(int s, std::uint32_t i) const { return lmul_[i * stride_ + s - 1]; }
  std::uint32_t rmul(std::uint32_t i, int s) const { return rmul_[i * stride_ + s - 1]; }
  /// Bit s-1 set iff s is a left (resp. right) descent.
  std::uint16_t left_descents(std::uint32_t i) const { return dl_[i]; }
  std::uint16_t right_descents(std::uint32_t i) const { return dr_[i]; }
  /// Longest element of W_I y W_J for descent masks I (left) and J (right).
  std::uint32_t reduce(std::uint32_t y, std::uint16_t left, std::uint16_t right) const;

 private:
  int m_;
  int stride_;
  std::vector<Permutation> elements_;
  std::vector<std::uint8_t> length_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> lmul_;
  std::vector<std::uint32_t> rmul_;
  std::vector<std::uint16_t> dl_;
  std::vector<std::uint16_t> dr_;
};

/// Shared, lazily built tables for S_m (m <= SymmetricGroup::kMaxRank).
const SymmetricGroup& symmetric_group(int m);

/// Kazhdan-Lusztig polynomials of symmetric groups. A column w stores
/// P_{y,w} only for y extremal with respect to the descents of w; all other
/// values are recovered by reducing y inside W_{D_L(w)} y W_{D_R(w)}.
/// Lookups are lock-free once a column exists; computation is serialized.
class KLEngine {
 public:
  KLEngine();
  ~KLEngine();
  KLEngine(const KLEngine&) = delete;
  KLEngine& operator=(const KLEngine&) = delete;

  /// Process-wide engine.
  static KLEngine& shared();

  IntPolynomial kl_poly(const Permutation& x, const Permutation& w);
  std::int64_t kl_at_one(const Permutation& x, const Permutation& w);
  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; 0 unless x < w.
  std::int64_t mu(const Permutation& x, const Permutation& w);

  /// P_{x,w}(1) by group indices; dense tables are used for m <= 6.
  std::int64_t at_one(int m, std::uint32_t x, std::uint32_t w);
  /// Computes every column of S_m.
  void compute_all(int m);
  std::size_t computed_columns(int m) const;
  /// Number of stored (extremal) pairs over all columns of S_m.
  std::size_t stored_pairs(int m) const;

  /// Writes every computed column as "m x w c0 c1 ..." records.
  void save(const std::string& path) const;
  /// Loads records, recomputing spot_checks columns from scratch and
  /// throwing InvalidArgument on a version or value mismatch. Returns the
  /// number of columns loaded.
  std::size_t load(const std::string& path, int spot_checks = 3);

 private:
  struct Column;
  struct GroupState;
  struct PolyStore;

  GroupState& state(int m);
  const Column& column(GroupState& g, std::uint32_t w);
  const Column& compute_locked(GroupState& g, std::uint32_t w);
  std::uint32_t lookup(const GroupState& g, const Column& c, std::uint32_t y) const;
  const IntPolynomial& poly(std::uint32_t id) const;
  std::int64_t poly_at_one(std::uint32_t id) const;
  std::uint32_t intern(const IntPolynomial& p);
  void finish_column(GroupState& g, std::uint32_t w, std::unique_ptr<Column> c);

  mutable std::mutex mutex_;
  std::array<std::atomic<GroupState*>, SymmetricGroup::kMaxRank + 1> states_{};
  std::vector<std::unique_ptr<GroupState>> owned_states_;
  std::unique_ptr<PolyStore> polys_;
};

/// Coefficients c_{x,w}, w in S(lam,mu) with w >= x, of the inverse of the
/// unitriangular matrix (P_{x,w}(1)) over S(lam,mu). Throws InvalidArgument if
/// x is not in S(lam,mu).
std::map<Permutation, std::int64_t> invert_interval(const BlockStructure& lam,
                                                    const BlockStructure& mu, const Permutation& x,
                                                    KLEngine& engine = KLEngine::shared());

}  // namespace ladderprod

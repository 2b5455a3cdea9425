#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ladderprod/error.hpp"

namespace ladderprod {

/// Integer interval [begin, end] on the supercuspidal line identified with Z.
/// The trivial segment is represented by end == begin - 1.
struct Segment {
  int begin = 0;
  int end = -1;

  constexpr Segment() = default;
  constexpr Segment(int b, int e) : begin(b), end(e) {}

  static constexpr Segment trivial(int b) { return Segment(b, b - 1); }

  constexpr bool is_trivial() const { return end < begin; }
  constexpr int length() const { return end - begin + 1; }
  constexpr bool contains(int p) const { return begin <= p && p <= end; }
  /// Set inclusion of the underlying intervals.
  constexpr bool is_inside(const Segment& outer) const {
    return outer.begin <= begin && end <= outer.end;
  }

  friend constexpr auto operator<=>(const Segment&, const Segment&) = default;
};

/// True iff d1 precedes d2: b(d1) <= b(d2)-1 <= e(d1) < e(d2).
constexpr bool precedes(const Segment& d1, const Segment& d2) {
  return d1.begin <= d2.begin - 1 && d2.begin - 1 <= d1.end && d1.end < d2.end;
}

constexpr bool is_linked(const Segment& d1, const Segment& d2) {
  return precedes(d1, d2) || precedes(d2, d1);
}

/// Multiplicity of each point of the line.
using SupportVector = std::map<int, int>;

/// Finite multiset of nontrivial segments, kept sorted by (begin, end).
class Multisegment {
 public:
  Multisegment() = default;
  /// Throws InvalidArgument if any segment is trivial or malformed.
  explicit Multisegment(std::vector<Segment> segments);
  Multisegment(std::initializer_list<Segment> segments)
      : Multisegment(std::vector<Segment>(segments)) {}

  /// Builds from segments dropping trivial ones (used when evaluating coordinates).
  static Multisegment from_segments_dropping_trivial(const std::vector<Segment>& segments);

  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }
  auto begin() const { return segments_.begin(); }
  auto end() const { return segments_.end(); }
  const Segment& operator[](std::size_t i) const { return segments_[i]; }

  std::size_t count(const Segment& s) const;
  /// Distinct segments with multiplicities in canonical order.
  std::vector<std::pair<Segment, int>> entries() const;
  /// Pointwise multiset inclusion.
  bool contains(const Multisegment& other) const;
  /// Total size sum of segment lengths.
  int degree() const;

  Multisegment& operator+=(const Multisegment& other);
  Multisegment& add(const Segment& s);
  /// Removes one copy of s; throws if absent.
  Multisegment& remove(const Segment& s);

  friend Multisegment operator+(Multisegment a, const Multisegment& b) { return a += b; }
  /// Multiset difference; throws if b is not contained in a.
  friend Multisegment operator-(const Multisegment& a, const Multisegment& b);

  friend auto operator<=>(const Multisegment&, const Multisegment&) = default;
  friend bool operator==(const Multisegment&, const Multisegment&) = default;

 private:
  std::vector<Segment> segments_;
};

SupportVector support(const Multisegment& m);
SupportVector support(const Segment& s);
void add_support(SupportVector& acc, const SupportVector& more);

bool is_ladder(const Multisegment& m);
bool is_generic(const Multisegment& m);

/// Width: minimal number of ladders summing to m. Computed as a minimum chain
/// cover and as a longest nested chain; a mismatch throws TheoryViolation.
int width(const Multisegment& m);
/// Minimum chain cover route alone.
int width_by_chain_cover(const Multisegment& m);
/// Longest chain D_1 in D_2 in ... in D_k of entries (copies allowed).
int width_by_nested_chain(const Multisegment& m);

/// Exactly width(m) ladders summing to m. Deterministic.
std::vector<Multisegment> min_ladder_cover(const Multisegment& m);

/// Blocks of entries sharing a begin, in increasing begin order.
std::vector<Multisegment> indicator_shape(const Multisegment& m);

// Text format: "[a,b]" segments joined by "+", "0" for the empty multisegment.
std::string to_string(const Segment& s);
std::string to_string(const Multisegment& m);
Segment parse_segment(std::string_view text);
Multisegment parse_multisegment(std::string_view text);

}  // namespace ladderprod

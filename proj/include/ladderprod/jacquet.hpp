#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ladderprod/multisegment.hpp"
#include "ladderprod/permutation.hpp"

namespace ladderprod {

/// Constituent tau (x) delta of a maximal-parabolic Jacquet module: segment
/// tails sit on the left, heads on the right.
struct JacquetPair {
  Multisegment left;
  Multisegment right;

  friend bool operator==(const JacquetPair&, const JacquetPair&) = default;
};

/// Breakpoints c = b, b-1, ..., a-1 give ([c+1,b], [a,c]). A trivial segment
/// yields the single pair (0, 0).
std::vector<JacquetPair> jacquet_pairs_segment(const Segment& d);

/// One pair per strictly decreasing tuple c_1 > ... > c_k with
/// b(D_j) <= c_j <= e(D_j)+1, where D_1, ..., D_k are the segments by
/// decreasing end: left = sum [c_j, e(D_j)], right = sum [b(D_j), c_j - 1].
/// Throws InvalidArgument unless m is a ladder.
std::vector<JacquetPair> jacquet_pairs_ladder(const Multisegment& m);

/// 1 iff L(d + dhat) occurs in L(n1) x L(n2), for d = [a,b], dhat = [a,c]
/// with a-1 <= c <= b (c = a-1 is the trivial segment). Throws
/// InvalidArgument unless n1, n2 are generic ladders and d, dhat are as above.
int match_two_column(const Segment& d, const Segment& dhat, const Multisegment& n1,
                     const Multisegment& n2);

/// Multiplicity of the indicator of sigma in the matching Jacquet module of
/// L(m1) x L(m2). Always 0 or 1; a larger value throws TheoryViolation.
/// Results are memoized per thread.
int indicator_multiplicity(const Multisegment& sigma, const Multisegment& m1,
                           const Multisegment& m2);

/// Multiplicity of the indicator of sigma in the matching Jacquet module of
/// the standard module M(m^x_{lam,mu}). Throws Unsupported if an indicator
/// block of sigma has three or more segments.
std::int64_t indicator_multiplicity_standard(const Multisegment& sigma, const BlockStructure& lam,
                                             const BlockStructure& mu, const Permutation& x);

/// Same recursion with the standard module given by its segments.
std::int64_t indicator_multiplicity_standard(const Multisegment& sigma,
                                             const std::vector<Segment>& factors);

/// Drops the per-thread memo tables.
void clear_indicator_memo();
std::size_t indicator_memo_size();

}  // namespace ladderprod

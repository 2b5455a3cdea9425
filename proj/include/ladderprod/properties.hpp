#pragma once

#include <cstdint>

#include "ladderprod/verify.hpp"

namespace ladderprod {

/// Every multiset of at most max_segments segments in [0, window-1]: the
/// matching and nested-chain routes to the width agree, and the minimal
/// ladder cover has that many ladders and sums back to the input.
VerificationReport check_dilworth(int max_segments, int window);

/// Stretching every end of both factors by s keeps m_w for w in S(lam,mu).
VerificationReport check_shift_invariance(int max_total, int window, int max_shift,
                                          KLEngine& engine = KLEngine::shared());

/// Two coordinate systems with the same parabolic subgroups and the same
/// factor permutations give the same multiplicities on common keys.
VerificationReport check_coordinate_independence(int max_rank, int samples, std::uint64_t seed,
                                                 KLEngine& engine = KLEngine::shared());

/// Support conservation and distinct left parts for every ladder with at
/// most max_segments segments in [0, window-1].
VerificationReport check_jacquet_properties(int max_segments, int window);

}  // namespace ladderprod

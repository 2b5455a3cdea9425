#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ladderprod/coordinates.hpp"
#include "ladderprod/kl.hpp"

namespace ladderprod {

/// Jordan-Holder multiplicities m_w of irreducibles L(m^w_{lam,mu}),
/// w in S(lam,mu). Zero entries are not stored.
struct DecompositionResult {
  BlockStructure lam;
  BlockStructure mu;
  std::map<Permutation, std::int64_t> mult;

  std::int64_t multiplicity(const Permutation& w) const {
    auto it = mult.find(w);
    return it == mult.end() ? 0 : it->second;
  }
  Multisegment multisegment(const Permutation& w) const { return build_multisegment(lam, mu, w); }
  friend bool operator==(const DecompositionResult&, const DecompositionResult&) = default;
};

/// [M(m^x)] = sum over x <= w in S(lam,mu) of P_{x,w}(1) [L(m^w)].
DecompositionResult expand_standard(const BlockStructure& lam, const BlockStructure& mu,
                                    const Permutation& x, KLEngine& engine = KLEngine::shared());

/// Signed combination of standard modules in fixed coordinates, keyed by
/// longest double-coset representatives, pushed to the irreducible basis.
/// Throws TheoryViolation if a multiplicity comes out negative.
DecompositionResult expand_signed(const BlockStructure& lam, const BlockStructure& mu,
                                  const std::map<Permutation, std::int64_t>& standard_coeffs,
                                  KLEngine& engine = KLEngine::shared());

/// [L(m1)][L(m2)] for two ladders via the determinantal expansion of each
/// factor. Throws InvalidArgument on non-ladder input.
DecompositionResult product_ladders(const Multisegment& m1, const Multisegment& m2,
                                    KLEngine& engine = KLEngine::shared());

/// Same expansion for any number of ladder factors; empty factors are units.
DecompositionResult product_of_ladders(const std::vector<Multisegment>& factors,
                                       KLEngine& engine = KLEngine::shared());

/// [L(m_1)]...[L(m_k)] via the inverse KL expansion of each factor in its own
/// canonical coordinates. Empty factors are units; throws InvalidArgument
/// when no factor is left.
DecompositionResult product_irreducibles(const std::vector<Multisegment>& factors,
                                         KLEngine& engine = KLEngine::shared());

}  // namespace ladderprod

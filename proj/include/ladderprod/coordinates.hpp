#pragma once

#include <string>
#include <vector>

#include "ladderprod/multisegment.hpp"
#include "ladderprod/permutation.hpp"

namespace ladderprod {

/// (lambda, mu, w) with w in S(lambda, mu).
struct CoordinateTriple {
  BlockStructure lam;
  BlockStructure mu;
  Permutation w;

  friend bool operator==(const CoordinateTriple&, const CoordinateTriple&) = default;
};

/// Sum of [lam_i, mu_{w(i)}] with trivial segments dropped. Throws
/// InvalidArgument unless w lies in Q(lam, mu).
Multisegment build_multisegment(const BlockStructure& lam, const BlockStructure& mu,
                                const Permutation& w);
inline Multisegment build_multisegment(const CoordinateTriple& t) {
  return build_multisegment(t.lam, t.mu, t.w);
}

/// lambda = sorted begins, mu = sorted ends, w the S(lambda,mu) element
/// rebuilding m. Throws InvalidArgument on the empty multisegment.
CoordinateTriple canonical_coordinates(const Multisegment& m);

/// Coordinates of a sum of factors, with the positions and values of the
/// combined system that each factor's own canonical coordinates occupy.
struct CombinedCoordinates {
  BlockStructure lam;
  BlockStructure mu;
  /// S(lam,mu) element of the sum.
  Permutation x;
  IndexParts pos_parts;
  IndexParts val_parts;
  std::vector<CoordinateTriple> factors;
};

/// Throws InvalidArgument if any factor is empty.
CombinedCoordinates combine(const std::vector<Multisegment>& factors);
inline CombinedCoordinates combine(const Multisegment& m1, const Multisegment& m2) {
  return combine(std::vector<Multisegment>{m1, m2});
}

/// "(0,1 | 1,2 | 2,1)"
std::string to_string(const CoordinateTriple& t);

}  // namespace ladderprod

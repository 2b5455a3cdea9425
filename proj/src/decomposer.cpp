#include "ladderprod/decomposer.hpp"

#include <functional>

namespace ladderprod {

DecompositionResult expand_standard(const BlockStructure& lam, const BlockStructure& mu,
                                    const Permutation& x, KLEngine& engine) {
  if (!in_S(x, lam, mu)) throw InvalidArgument("x = " + to_string(x) + " is not in S(lambda,mu)");
  return expand_signed(lam, mu, {{x, 1}}, engine);
}

DecompositionResult expand_signed(const BlockStructure& lam, const BlockStructure& mu,
                                  const std::map<Permutation, std::int64_t>& standard_coeffs,
                                  KLEngine& engine) {
  DecompositionResult out{lam, mu, {}};
  const int m = lam.size();
  const SymmetricGroup& G = symmetric_group(m);
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
  for (const auto& [y, c] : standard_coeffs) {
    if (c != 0) terms.emplace_back(G.index(y), c);
  }
  for (const auto& z : enumerate_S(lam, mu)) {
    const std::uint32_t zi = G.index(z);
    std::int64_t total = 0;
    for (const auto& [yi, c] : terms) total += c * engine.at_one(m, yi, zi);
    if (total < 0) {
      throw TheoryViolation("negative multiplicity " + std::to_string(total) + " for " +
                            to_string(build_multisegment(lam, mu, z)));
    }
    if (total > 0) out.mult.emplace(z, total);
  }
  return out;
}

namespace {

DecompositionResult single_factor(const Multisegment& m) {
  const CoordinateTriple t = canonical_coordinates(m);
  return {t.lam, t.mu, {{t.w, 1}}};
}

}  // namespace

DecompositionResult product_ladders(const Multisegment& m1, const Multisegment& m2,
                                    KLEngine& engine) {
  if (m1.empty() && m2.empty()) throw InvalidArgument("product of two empty ladders");
  return product_of_ladders({m1, m2}, engine);
}

DecompositionResult product_of_ladders(const std::vector<Multisegment>& factors,
                                       KLEngine& engine) {
  std::vector<Multisegment> live;
  for (const auto& f : factors) {
    if (!is_ladder(f)) throw InvalidArgument("not a ladder: " + to_string(f));
    if (!f.empty()) live.push_back(f);
  }
  if (live.empty()) throw InvalidArgument("product needs at least one nonempty factor");
  if (live.size() == 1) return single_factor(live.front());
  const CombinedCoordinates cc = combine(live);
  std::vector<std::vector<Permutation>> qs;
  for (const auto& t : cc.factors) {
    qs.emplace_back();
    for (const auto& w : all_permutations(t.lam.size())) {
      if (in_Q(w, t.lam, t.mu)) qs.back().push_back(w);
    }
  }
  std::map<Permutation, std::int64_t> coeffs;
  std::vector<Permutation> chosen(live.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t f, int sign) {
    if (f == live.size()) {
      coeffs[star_longest(chosen, cc.pos_parts, cc.val_parts, cc.lam, cc.mu)] += sign;
      return;
    }
    for (const auto& w : qs[f]) {
      chosen[f] = w;
      rec(f + 1, sign * w.sign());
    }
  };
  rec(0, 1);
  return expand_signed(cc.lam, cc.mu, coeffs, engine);
}

DecompositionResult product_irreducibles(const std::vector<Multisegment>& factors,
                                         KLEngine& engine) {
  std::vector<Multisegment> live;
  for (const auto& f : factors) {
    if (!f.empty()) live.push_back(f);
  }
  if (live.empty()) throw InvalidArgument("product needs at least one nonempty factor");
  if (live.size() == 1) return single_factor(live.front());
  const CombinedCoordinates cc = combine(live);
  std::vector<std::vector<std::pair<Permutation, std::int64_t>>> expansions;
  for (const auto& t : cc.factors) {
    const auto inv = invert_interval(t.lam, t.mu, t.w, engine);
    expansions.emplace_back();
    for (const auto& [w, c] : inv) {
      if (c != 0) expansions.back().emplace_back(w, c);
    }
  }
  std::map<Permutation, std::int64_t> coeffs;
  std::vector<Permutation> chosen(live.size());
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t f, std::int64_t c) {
    if (f == live.size()) {
      coeffs[star_longest(chosen, cc.pos_parts, cc.val_parts, cc.lam, cc.mu)] += c;
      return;
    }
    for (const auto& [w, cw] : expansions[f]) {
      chosen[f] = w;
      rec(f + 1, c * cw);
    }
  };
  rec(0, 1);
  return expand_signed(cc.lam, cc.mu, coeffs, engine);
}

}  // namespace ladderprod

#include "ladderprod/coordinates.hpp"

#include <algorithm>

namespace ladderprod {

Multisegment build_multisegment(const BlockStructure& lam, const BlockStructure& mu,
                                const Permutation& w) {
  if (!in_Q(w, lam, mu)) {
    throw InvalidArgument("w = " + to_string(w) + " is not in Q(" + to_string(lam) + " | " +
                          to_string(mu) + ")");
  }
  std::vector<Segment> segments;
  segments.reserve(w.size());
  for (int i = 1; i <= w.size(); ++i) segments.emplace_back(lam(i), mu(w(i)));
  return Multisegment::from_segments_dropping_trivial(segments);
}

CoordinateTriple canonical_coordinates(const Multisegment& m) {
  if (m.empty()) throw InvalidArgument("empty multisegment has no coordinates");
  std::vector<int> begins, ends;
  for (const auto& s : m) {
    begins.push_back(s.begin);
    ends.push_back(s.end);
  }
  std::sort(ends.begin(), ends.end());
  BlockStructure lam(begins);
  BlockStructure mu(ends);
  std::vector<char> taken(ends.size(), 0);
  std::vector<int> img;
  for (const auto& s : m) {
    auto j = static_cast<std::size_t>(std::lower_bound(ends.begin(), ends.end(), s.end) - ends.begin());
    while (taken[j]) ++j;
    taken[j] = 1;
    img.push_back(static_cast<int>(j) + 1);
  }
  return {lam, mu, longest_double_coset_rep(Permutation(img), lam, mu)};
}

CombinedCoordinates combine(const std::vector<Multisegment>& factors) {
  CombinedCoordinates out;
  std::vector<int> begins, ends;
  for (const auto& f : factors) {
    if (f.empty()) throw InvalidArgument("cannot combine an empty factor");
    out.factors.push_back(canonical_coordinates(f));
    const auto& t = out.factors.back();
    begins.insert(begins.end(), t.lam.values().begin(), t.lam.values().end());
    ends.insert(ends.end(), t.mu.values().begin(), t.mu.values().end());
  }
  std::sort(begins.begin(), begins.end());
  std::sort(ends.begin(), ends.end());
  out.lam = BlockStructure(begins);
  out.mu = BlockStructure(ends);

  // Equal entries go to factors in order, so each part is sorted.
  auto assign = [](const std::vector<int>& combined, auto values_of, std::size_t nf) {
    IndexParts parts(nf);
    std::vector<char> taken(combined.size(), 0);
    for (std::size_t f = 0; f < nf; ++f) {
      for (int v : values_of(f)) {
        auto j = static_cast<std::size_t>(std::lower_bound(combined.begin(), combined.end(), v) -
                                          combined.begin());
        while (taken[j]) ++j;
        taken[j] = 1;
        parts[f].push_back(static_cast<int>(j) + 1);
      }
    }
    return parts;
  };
  out.pos_parts = assign(begins, [&](std::size_t f) { return out.factors[f].lam.values(); },
                         factors.size());
  out.val_parts = assign(ends, [&](std::size_t f) { return out.factors[f].mu.values(); },
                         factors.size());
  std::vector<Permutation> ws;
  for (const auto& t : out.factors) ws.push_back(t.w);
  out.x = star_longest(ws, out.pos_parts, out.val_parts, out.lam, out.mu);
  return out;
}

std::string to_string(const CoordinateTriple& t) {
  return "(" + to_string(t.lam) + " | " + to_string(t.mu) + " | " + to_string(t.w) + ")";
}

}  // namespace ladderprod

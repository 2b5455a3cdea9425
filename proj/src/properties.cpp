#include "ladderprod/properties.hpp"

#include <chrono>
#include <random>
#include <set>

#include "ladderprod/decomposer.hpp"
#include "ladderprod/jacquet.hpp"

namespace ladderprod {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void flag(VerificationReport& r, Json inputs, Json result) {
  ++r.counts["disagreements"];
  r.records.push_back({{"kind", "instance"},
                       {"inputs", std::move(inputs)},
                       {"result", std::move(result)},
                       {"agree", false}});
}

std::vector<Segment> segments_in_window(int window) {
  std::vector<Segment> out;
  for (int a = 0; a < window; ++a) {
    for (int b = a; b < window; ++b) out.emplace_back(a, b);
  }
  return out;
}

Multisegment stretched(const Multisegment& m, int s) {
  std::vector<Segment> segs;
  for (const auto& d : m) segs.emplace_back(d.begin, d.end + s);
  return Multisegment(std::move(segs));
}

// Block values realizing a fixed equality pattern: joined[i] says whether
// entries i and i+1 coincide.
std::vector<int> realize(const std::vector<bool>& joined, int lo, int hi, std::mt19937_64& rng) {
  int blocks = 1;
  for (bool j : joined) blocks += j ? 0 : 1;
  std::vector<int> pool;
  for (int v = lo; v <= hi; ++v) pool.push_back(v);
  for (int i = 0; i < blocks; ++i) {
    const auto j = static_cast<std::size_t>(
        i + static_cast<int>(uniform_below(rng, pool.size() - static_cast<std::size_t>(i))));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  std::vector<int> chosen(pool.begin(), pool.begin() + blocks);
  std::sort(chosen.begin(), chosen.end());
  std::vector<int> out{chosen[0]};
  int b = 0;
  for (bool j : joined) {
    if (!j) ++b;
    out.push_back(chosen[static_cast<std::size_t>(b)]);
  }
  return out;
}

std::vector<int> pick(const std::vector<int>& values, const std::vector<int>& idx) {
  std::vector<int> out;
  for (int i : idx) out.push_back(values[static_cast<std::size_t>(i)]);
  return out;
}

Permutation random_permutation(int k, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  for (int i = k - 1; i > 0; --i) {
    std::swap(v[static_cast<std::size_t>(i)],
              v[uniform_below(rng, static_cast<std::uint64_t>(i + 1))]);
  }
  return Permutation(v);
}

bool all_nontrivial(const BlockStructure& lam, const BlockStructure& mu, const Permutation& w) {
  for (int i = 1; i <= w.size(); ++i) {
    if (lam(i) > mu(w(i))) return false;
  }
  return true;
}

}  // namespace

VerificationReport check_dilworth(int max_segments, int window) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.command = "dilworth";
  r.scope = {{"max_segments", max_segments}, {"window", window}};
  r.counts["instances"] = 0;
  r.counts["disagreements"] = 0;
  const auto types = segments_in_window(window);
  std::vector<Segment> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!cur.empty()) {
      const Multisegment m(cur);
      ++r.counts["instances"];
      const int a = width_by_chain_cover(m);
      const int b = width_by_nested_chain(m);
      const auto cover = min_ladder_cover(m);
      Multisegment sum;
      bool ladders = true;
      for (const auto& l : cover) {
        sum += l;
        ladders = ladders && is_ladder(l);
      }
      if (a != b || static_cast<int>(cover.size()) != a || !(sum == m) || !ladders) {
        flag(r, to_string(m), {{"chain_cover", a}, {"nested_chain", b}, {"cover", cover.size()}});
      }
    }
    if (static_cast<int>(cur.size()) == max_segments) return;
    for (std::size_t t = from; t < types.size(); ++t) {
      cur.push_back(types[t]);
      rec(t);
      cur.pop_back();
    }
  };
  rec(0);
  r.wall_seconds = seconds_since(t0);
  return r;
}

VerificationReport check_shift_invariance(int max_total, int window, int max_shift,
                                          KLEngine& engine) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.command = "shift-invariance";
  r.scope = {{"max_total", max_total}, {"window", window}, {"max_shift", max_shift}};
  r.counts["instances"] = 0;
  r.counts["keys"] = 0;
  r.counts["disagreements"] = 0;
  for (const auto& pair : enumerate_ladder_tuples(2, max_total, window)) {
    const DecompositionResult base = product_ladders(pair[0], pair[1], engine);
    for (int s = 1; s <= max_shift; ++s) {
      ++r.counts["instances"];
      const DecompositionResult moved =
          product_ladders(stretched(pair[0], s), stretched(pair[1], s), engine);
      bool same = base.lam == moved.lam;
      if (same) {
        for (const auto& w : enumerate_S(base.lam, base.mu)) {
          ++r.counts["keys"];
          same = same && in_S(w, moved.lam, moved.mu) &&
                 base.multiplicity(w) == moved.multiplicity(w);
        }
      }
      if (!same) flag(r, {to_string(pair[0]), to_string(pair[1])}, {{"shift", s}});
    }
  }
  r.wall_seconds = seconds_since(t0);
  return r;
}

VerificationReport check_coordinate_independence(int max_rank, int samples, std::uint64_t seed,
                                                 KLEngine& engine) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.command = "coordinate-independence";
  r.scope = {{"max_rank", max_rank}, {"samples", samples}, {"seed", seed}};
  r.counts["instances"] = 0;
  r.counts["keys"] = 0;
  r.counts["disagreements"] = 0;
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < samples) {
    const int m = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_rank - 1)));
    const int k = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(m - 1)));
    std::vector<bool> lam_joined, mu_joined;
    for (int i = 0; i + 1 < m; ++i) {
      lam_joined.push_back(uniform_below(rng, 3) == 0);
      mu_joined.push_back(uniform_below(rng, 3) == 0);
    }
    std::array<std::vector<int>, 2> lam, mu;
    for (int l = 0; l < 2; ++l) {
      lam[l] = realize(lam_joined, 0, m + 1, rng);
      mu[l] = realize(mu_joined, 1, m + 3, rng);
    }
    auto subset = [&](int size) {
      std::vector<int> idx(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
      for (int i = 0; i < size; ++i) {
        std::swap(idx[static_cast<std::size_t>(i)],
                  idx[static_cast<std::size_t>(i) +
                      uniform_below(rng, static_cast<std::uint64_t>(m - i))]);
      }
      std::vector<int> in(idx.begin(), idx.begin() + size), out(idx.begin() + size, idx.end());
      std::sort(in.begin(), in.end());
      std::sort(out.begin(), out.end());
      return std::pair{in, out};
    };
    const auto [lam_i, lam_j] = subset(k);
    const auto [mu_i, mu_j] = subset(k);
    Permutation wi = random_permutation(k, rng);
    Permutation wj = random_permutation(m - k, rng);
    std::array<Multisegment, 2> fi, fj;
    bool usable = true;
    for (int l = 0; l < 2 && usable; ++l) {
      const BlockStructure li(pick(lam[l], lam_i)), mi(pick(mu[l], mu_i));
      const BlockStructure lj(pick(lam[l], lam_j)), mj(pick(mu[l], mu_j));
      if (l == 0) {
        if (!in_Q(wi, li, mi) || !in_Q(wj, lj, mj)) {
          usable = false;
          break;
        }
        wi = longest_double_coset_rep(wi, li, mi);
        wj = longest_double_coset_rep(wj, lj, mj);
      }
      usable = in_S(wi, li, mi) && in_S(wj, lj, mj) && all_nontrivial(li, mi, wi) &&
               all_nontrivial(lj, mj, wj);
      if (usable) {
        fi[l] = build_multisegment(li, mi, wi);
        fj[l] = build_multisegment(lj, mj, wj);
      }
    }
    if (!usable) continue;
    ++done;
    ++r.counts["instances"];
    const DecompositionResult r1 = product_irreducibles({fi[0], fj[0]}, engine);
    const DecompositionResult r2 = product_irreducibles({fi[1], fj[1]}, engine);
    bool same = true;
    for (const auto& z : enumerate_S(r1.lam, r1.mu)) {
      if (!in_S(z, r2.lam, r2.mu)) continue;
      ++r.counts["keys"];
      same = same && r1.multiplicity(z) == r2.multiplicity(z);
    }
    if (!same) {
      flag(r, {{"first", {to_string(fi[0]), to_string(fj[0])}},
               {"second", {to_string(fi[1]), to_string(fj[1])}}},
           nullptr);
    }
  }
  r.wall_seconds = seconds_since(t0);
  return r;
}

VerificationReport check_jacquet_properties(int max_segments, int window) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.command = "jacquet-properties";
  r.scope = {{"max_segments", max_segments}, {"window", window}};
  r.counts["instances"] = 0;
  r.counts["pairs"] = 0;
  r.counts["disagreements"] = 0;
  for (int k = 1; k <= max_segments && k <= window; ++k) {
    for (const auto& m : ladders_in_window(k, window)) {
      ++r.counts["instances"];
      const auto pairs = jacquet_pairs_ladder(m);
      const SupportVector target = support(m);
      std::set<Multisegment> lefts;
      bool conserved = true;
      for (const auto& p : pairs) {
        ++r.counts["pairs"];
        SupportVector s = support(p.left);
        add_support(s, support(p.right));
        conserved = conserved && s == target;
        lefts.insert(p.left);
      }
      if (!conserved || lefts.size() != pairs.size()) {
        flag(r, to_string(m), {{"conserved", conserved}, {"distinct_lefts", lefts.size()},
                               {"pairs", pairs.size()}});
      }
    }
  }
  r.wall_seconds = seconds_since(t0);
  return r;
}

}  // namespace ladderprod

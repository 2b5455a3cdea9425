#include <doctest.h>

#include <functional>
#include <set>

#include "ladderprod/decomposer.hpp"
#include "ladderprod/jacquet.hpp"
#include "ladderprod/verify.hpp"

using namespace ladderprod;

namespace {

Multisegment ms(const char* text) { return parse_multisegment(text); }

std::int64_t multiplicity_in_product(const Multisegment& target,
                                     const std::vector<Multisegment>& ladders) {
  bool any = false;
  for (const auto& l : ladders) any = any || !l.empty();
  if (!any) return target.empty() ? 1 : 0;
  const auto r = product_of_ladders(ladders);
  for (const auto& [w, c] : r.mult) {
    if (r.multisegment(w) == target) return c;
  }
  return 0;
}

// Multiplicity of the indicator of sigma in the Jacquet module of the
// product of the given ladders, from the geometric lemma: the block with the
// smallest begin is matched on the left through the KL decomposer, the rest
// recursively on the right.
std::int64_t indicator_oracle(const Multisegment& sigma, const std::vector<Multisegment>& factors) {
  if (sigma.empty()) {
    for (const auto& f : factors) {
      if (!f.empty()) return 0;
    }
    return 1;
  }
  const int b = sigma[0].begin;
  Multisegment block;
  for (const auto& s : sigma) {
    if (s.begin == b) block.add(s);
  }
  const Multisegment rest = sigma - block;
  const SupportVector target = support(block);
  std::vector<std::vector<JacquetPair>> options;
  for (const auto& f : factors) options.push_back(jacquet_pairs_ladder(f));
  std::vector<Multisegment> lefts(factors.size()), rights(factors.size());
  std::int64_t total = 0;
  std::function<void(std::size_t, SupportVector)> rec = [&](std::size_t i, SupportVector acc) {
    for (const auto& [p, c] : acc) {
      auto it = target.find(p);
      if (it == target.end() || it->second < c) return;
    }
    if (i == factors.size()) {
      if (acc != target) return;
      const std::int64_t top = multiplicity_in_product(block, lefts);
      if (top != 0) total += top * indicator_oracle(rest, rights);
      return;
    }
    for (const auto& pr : options[i]) {
      lefts[i] = pr.left;
      rights[i] = pr.right;
      SupportVector next = acc;
      add_support(next, support(pr.left));
      rec(i + 1, next);
    }
  };
  rec(0, {});
  return total;
}

std::vector<Multisegment> segment_factors(const Multisegment& m) {
  std::vector<Multisegment> out;
  for (const auto& s : m) out.push_back(Multisegment{s});
  return out;
}

}  // namespace

TEST_CASE("segment Jacquet pairs") {
  const auto point = jacquet_pairs_segment({0, 0});
  REQUIRE(point.size() == 2);
  CHECK(point[0].left.empty());
  CHECK(point[0].right == ms("[0,0]"));
  CHECK(point[1].left == ms("[0,0]"));
  CHECK(point[1].right.empty());
  const auto seg = jacquet_pairs_segment({0, 2});
  CHECK(seg.size() == 4);
  std::set<Multisegment> lefts;
  for (const auto& p : seg) lefts.insert(p.left);
  CHECK(lefts == std::set<Multisegment>{Multisegment{}, ms("[2,2]"), ms("[1,2]"), ms("[0,2]")});
  CHECK(jacquet_pairs_segment(Segment::trivial(3)).size() == 1);
}

TEST_CASE("ladder Jacquet pairs") {
  for (const auto& d : ladders_in_window(1, 5)) {
    CHECK(jacquet_pairs_ladder(d) == jacquet_pairs_segment(d[0]));
  }
  const auto pairs = jacquet_pairs_ladder(ms("[0,1]+[1,2]"));
  CHECK(pairs.size() == 6);
  std::set<std::pair<Multisegment, Multisegment>> got;
  for (const auto& p : pairs) got.emplace(p.left, p.right);
  CHECK(got.count({ms("[1,1]+[2,2]"), ms("[0,0]+[1,1]")}) == 1);
  CHECK(got.count({ms("[0,1]+[1,2]"), Multisegment{}}) == 1);
  CHECK(got.count({Multisegment{}, ms("[0,1]+[1,2]")}) == 1);
  CHECK_THROWS_AS(jacquet_pairs_ladder(ms("[0,2]+[1,1]")), InvalidArgument);
}

TEST_CASE("ladder Jacquet pairs are ladders, conserve support and have distinct lefts") {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& m : ladders_in_window(k, 6)) {
      std::set<Multisegment> lefts;
      const auto pairs = jacquet_pairs_ladder(m);
      for (const auto& p : pairs) {
        CHECK(is_ladder(p.left));
        CHECK(is_ladder(p.right));
        SupportVector s = support(p.left);
        add_support(s, support(p.right));
        CHECK(s == support(m));
        lefts.insert(p.left);
      }
      CHECK(lefts.size() == pairs.size());
    }
  }
}

TEST_CASE("two-column matcher examples") {
  CHECK(match_two_column({0, 2}, Segment::trivial(0), ms("[0,1]"), ms("[2,2]")) == 1);
  CHECK(match_two_column({0, 1}, {0, 1}, ms("[0,1]"), ms("[0,1]")) == 1);
  CHECK(match_two_column({0, 1}, Segment::trivial(0), ms("[0,2]"), Multisegment{}) == 0);
  CHECK_THROWS_AS(match_two_column({0, 1}, {1, 1}, ms("[0,1]"), ms("[1,1]")), InvalidArgument);
  CHECK_THROWS_AS(match_two_column({0, 2}, Segment::trivial(0), ms("[0,1]+[1,2]"), Multisegment{}),
                  InvalidArgument);
}

TEST_CASE("two-column matcher against the decomposer") {
  std::vector<Multisegment> generic{Multisegment{}};
  for (int k = 1; k <= 3; ++k) {
    for (const auto& m : ladders_in_window(k, 5)) {
      if (is_generic(m)) generic.push_back(m);
    }
  }
  int positive = 0;
  for (int a = 0; a < 5; ++a) {
    for (int b = a; b < 5; ++b) {
      for (int c = a - 1; c <= b; ++c) {
        const Segment d(a, b), dhat(a, c);
        Multisegment target{d};
        if (!dhat.is_trivial()) target.add(dhat);
        for (const auto& n1 : generic) {
          for (const auto& n2 : generic) {
            const int got = match_two_column(d, dhat, n1, n2);
            CHECK(got == multiplicity_in_product(target, {n1, n2}));
            positive += got;
          }
        }
      }
    }
  }
  CHECK(positive > 100);
}

TEST_CASE("indicator examples") {
  CHECK(indicator_multiplicity(ms("[0,2]+[1,1]"), ms("[0,1]"), ms("[1,2]")) == 1);
  CHECK(indicator_multiplicity(ms("[0,1]+[1,2]"), ms("[0,2]"), ms("[1,1]")) == 0);
  CHECK_THROWS_AS(indicator_multiplicity(ms("[0,1]"), ms("[0,2]+[1,1]"), ms("[1,1]")),
                  InvalidArgument);
  CHECK_THROWS_AS(indicator_multiplicity(Multisegment{}, ms("[0,1]"), ms("[1,1]")),
                  InvalidArgument);
}

TEST_CASE("indicator against the geometric-lemma oracle") {
  for (const auto& pair : enumerate_ladder_tuples(2, 4, 5)) {
    const auto cc = combine(pair[0], pair[1]);
    CHECK(indicator_multiplicity(pair[0] + pair[1], pair[0], pair[1]) == 1);
    for (const auto& w : enumerate_S(cc.lam, cc.mu)) {
      const Multisegment sigma = build_multisegment(cc.lam, cc.mu, w);
      const std::int64_t want = indicator_oracle(sigma, pair);
      CHECK(want <= 1);
      CHECK(indicator_multiplicity(sigma, pair[0], pair[1]) == want);
    }
  }
}

TEST_CASE("standard-module indicator against the geometric-lemma oracle") {
  int compared = 0;
  for (const auto& pair : enumerate_ladder_tuples(2, 5, 4)) {
    const auto cc = combine(pair[0], pair[1]);
    const auto keys = enumerate_S(cc.lam, cc.mu);
    for (const auto& x : keys) {
      const Multisegment standard = build_multisegment(cc.lam, cc.mu, x);
      for (const auto& w : keys) {
        const Multisegment sigma = build_multisegment(cc.lam, cc.mu, w);
        std::int64_t got = 0;
        try {
          got = indicator_multiplicity_standard(sigma, cc.lam, cc.mu, x);
        } catch (const Unsupported&) {
          continue;
        }
        CHECK(got == indicator_oracle(sigma, segment_factors(standard)));
        CHECK(got == indicator_multiplicity_standard(sigma, standard.segments()));
        ++compared;
      }
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("standard-module indicator vanishes off the Bruhat interval") {
  int positive = 0;
  for (const auto& pair : enumerate_ladder_tuples(2, 5, 5)) {
    const auto cc = combine(pair[0], pair[1]);
    const auto keys = enumerate_S(cc.lam, cc.mu);
    for (const auto& x : keys) {
      for (const auto& w : keys) {
        const Multisegment sigma = build_multisegment(cc.lam, cc.mu, w);
        std::int64_t got = 0;
        try {
          got = indicator_multiplicity_standard(sigma, cc.lam, cc.mu, x);
        } catch (const Unsupported&) {
          continue;
        }
        if (got > 0) {
          CHECK(bruhat_leq(x, w));
          ++positive;
        }
        if (x == w) CHECK(got >= 1);
      }
    }
  }
  CHECK(positive > 0);
}

TEST_CASE("standard-module indicator regime") {
  const BlockStructure lam({0, 0, 0}), mu({0, 1, 2});
  CHECK_THROWS_AS(indicator_multiplicity_standard(ms("[0,0]+[0,1]+[0,2]"), lam, mu,
                                                  parse_permutation("321")),
                  Unsupported);
}

TEST_CASE("memo can be cleared") {
  indicator_multiplicity(ms("[0,2]+[1,1]"), ms("[0,1]"), ms("[1,2]"));
  CHECK(indicator_memo_size() > 0);
  clear_indicator_memo();
  CHECK(indicator_memo_size() == 0);
}

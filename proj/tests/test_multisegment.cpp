#include <doctest.h>

#include <functional>
#include <vector>

#include "ladderprod/multisegment.hpp"

using namespace ladderprod;

namespace {

Multisegment ms(const char* text) { return parse_multisegment(text); }

// Largest family of pairwise nested segments, by brute force over subsets.
int brute_width(const Multisegment& m) {
  const auto& s = m.segments();
  const int n = static_cast<int>(s.size());
  int best = 0;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<Segment> pick;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) pick.push_back(s[i]);
    }
    bool chain = true;
    for (std::size_t i = 0; i < pick.size() && chain; ++i) {
      for (std::size_t j = i + 1; j < pick.size() && chain; ++j) {
        const Segment& a = pick[i];
        const Segment& b = pick[j];
        chain = a.is_inside(b) || b.is_inside(a);
      }
    }
    if (chain && static_cast<int>(pick.size()) > best) best = static_cast<int>(pick.size());
  }
  return best;
}

void for_each_multisegment(int max_segments, int window,
                           const std::function<void(const Multisegment&)>& visit) {
  std::vector<Segment> types;
  for (int a = 0; a < window; ++a) {
    for (int b = a; b < window; ++b) types.emplace_back(a, b);
  }
  std::vector<Segment> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!cur.empty()) visit(Multisegment(cur));
    if (static_cast<int>(cur.size()) == max_segments) return;
    for (std::size_t t = from; t < types.size(); ++t) {
      cur.push_back(types[t]);
      rec(t);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

TEST_CASE("precedes") {
  CHECK(precedes({0, 1}, {1, 2}));
  CHECK_FALSE(precedes({0, 2}, {1, 1}));
  CHECK_FALSE(precedes({0, 0}, {2, 3}));
  CHECK(precedes({0, 0}, {1, 1}));
  CHECK_FALSE(precedes({1, 2}, {0, 1}));
  CHECK(is_linked({1, 2}, {0, 1}));
}

TEST_CASE("support") {
  CHECK(support(ms("[0,2]+[1,1]")) == SupportVector{{0, 1}, {1, 2}, {2, 1}});
  CHECK(support(Multisegment{}).empty());
  CHECK(support(ms("[0,1]+[0,1]")) == SupportVector{{0, 2}, {1, 2}});
}

TEST_CASE("ladders") {
  CHECK(is_ladder(ms("[0,1]+[1,2]")));
  CHECK_FALSE(is_ladder(ms("[0,2]+[1,1]")));
  CHECK_FALSE(is_ladder(ms("[0,0]+[0,0]")));
  CHECK(is_ladder(ms("[0,0]+[2,3]")));
  CHECK(is_ladder(Multisegment{}));
}

TEST_CASE("generic") {
  CHECK(is_generic(ms("[0,2]+[1,1]")));
  CHECK_FALSE(is_generic(ms("[0,1]+[1,2]")));
  CHECK(is_generic(ms("[3,5]")));
  CHECK(is_generic(ms("[0,0]+[0,0]")));
}

TEST_CASE("width examples") {
  CHECK(width(ms("[0,1]+[1,2]")) == 1);
  CHECK(width(ms("[0,2]+[1,1]")) == 2);
  for (int n = 1; n <= 6; ++n) {
    Multisegment kato;
    for (int i = 0; i < n; ++i) kato.add({3, 3});
    CHECK(width(kato) == n);
  }
  CHECK(width(ms("[0,0]+[0,0]+[1,1]")) == 2);
}

TEST_CASE("minimal ladder cover") {
  const auto cover = min_ladder_cover(ms("[0,2]+[1,1]"));
  REQUIRE(cover.size() == 2);
  CHECK(((cover[0] == ms("[0,2]") && cover[1] == ms("[1,1]")) ||
         (cover[1] == ms("[0,2]") && cover[0] == ms("[1,1]"))));
  CHECK(min_ladder_cover(ms("[0,1]+[1,2]")) == std::vector<Multisegment>{ms("[0,1]+[1,2]")});
  const Multisegment m = ms("[0,0]+[0,0]+[1,1]");
  const auto c = min_ladder_cover(m);
  CHECK(c.size() == 2);
  Multisegment sum;
  for (const auto& l : c) {
    CHECK(is_ladder(l));
    sum += l;
  }
  CHECK(sum == m);
}

TEST_CASE("indicator shape") {
  CHECK(indicator_shape(ms("[0,2]+[1,1]")) == std::vector<Multisegment>{ms("[0,2]"), ms("[1,1]")});
  CHECK(indicator_shape(ms("[0,1]+[0,3]")) == std::vector<Multisegment>{ms("[0,1]+[0,3]")});
  CHECK(indicator_shape(ms("[0,1]+[0,3]+[2,2]")) ==
        std::vector<Multisegment>{ms("[0,1]+[0,3]"), ms("[2,2]")});
  CHECK_THROWS_AS(indicator_shape(Multisegment{}), InvalidArgument);
}

TEST_CASE("parsing") {
  CHECK(ms(" [0, 2] + [1,1] ") == ms("[1,1]+[0,2]"));
  CHECK(to_string(ms("[1,1]+[0,2]")) == "[0,2]+[1,1]");
  CHECK(to_string(Multisegment{}) == "0");
  CHECK(parse_multisegment("0").empty());
  CHECK(parse_multisegment("[-2,-1]") == Multisegment{{-2, -1}});
  CHECK_THROWS_AS(ms("[2,0]"), InvalidArgument);
  CHECK_THROWS_AS(ms("[0,1"), InvalidArgument);
  CHECK_THROWS_AS(ms("[0,1]+"), InvalidArgument);
  CHECK_THROWS_AS(ms("garbage"), InvalidArgument);
}

TEST_CASE("multiset arithmetic") {
  Multisegment m = ms("[0,1]+[0,1]+[2,2]");
  CHECK(m.count({0, 1}) == 2);
  CHECK(m - ms("[0,1]") == ms("[0,1]+[2,2]"));
  CHECK_THROWS_AS(m - ms("[5,5]"), InvalidArgument);
  CHECK(m.degree() == 5);
  CHECK_THROWS_AS(Multisegment({Segment::trivial(3)}), InvalidArgument);
  CHECK(Multisegment::from_segments_dropping_trivial({{0, 1}, Segment::trivial(1)}) == ms("[0,1]"));
}

TEST_CASE("Dilworth duality against brute force") {
  int checked = 0;
  for_each_multisegment(6, 4, [&](const Multisegment& m) {
    const int a = width_by_chain_cover(m);
    const int b = width_by_nested_chain(m);
    CHECK(a == b);
    CHECK(a == brute_width(m));
    CHECK(static_cast<int>(min_ladder_cover(m).size()) == a);
    ++checked;
  });
  CHECK(checked > 5000);
}

TEST_CASE("width is monotone and subadditive") {
  std::vector<Multisegment> pool;
  for_each_multisegment(3, 4, [&](const Multisegment& m) { pool.push_back(m); });
  for (std::size_t i = 0; i < pool.size(); i += 3) {
    for (std::size_t j = 0; j < pool.size(); j += 5) {
      const Multisegment sum = pool[i] + pool[j];
      const int w = width(sum);
      CHECK(w >= width(pool[i]));
      CHECK(w >= width(pool[j]));
      CHECK(w <= width(pool[i]) + width(pool[j]));
    }
  }
}

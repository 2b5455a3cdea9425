#include <doctest.h>

#include <functional>

#include "ladderprod/coordinates.hpp"

using namespace ladderprod;

namespace {

Multisegment ms(const char* text) { return parse_multisegment(text); }
Permutation P(const char* text) { return parse_permutation(text); }
BlockStructure B(std::vector<int> v) { return BlockStructure(std::move(v)); }

}  // namespace

TEST_CASE("building multisegments") {
  CHECK(build_multisegment(B({0}), B({1}), P("1")) == ms("[0,1]"));
  CHECK(build_multisegment(B({0, 1}), B({0, 1}), P("21")) == ms("[0,1]"));
  CHECK(build_multisegment(B({0, 1}), B({1, 2}), P("21")) == ms("[0,2]+[1,1]"));
  CHECK(build_multisegment(B({0, 1}), B({1, 2}), P("12")) == ms("[0,1]+[1,2]"));
  CHECK_THROWS_AS(build_multisegment(B({0, 3}), B({1, 2}), P("21")), InvalidArgument);
}

TEST_CASE("canonical coordinates") {
  const auto t = canonical_coordinates(ms("[0,2]+[1,1]"));
  CHECK(t.lam == B({0, 1}));
  CHECK(t.mu == B({1, 2}));
  CHECK(t.w == P("21"));
  const auto single = canonical_coordinates(ms("[0,1]"));
  CHECK(single.lam == B({0}));
  CHECK(single.mu == B({1}));
  CHECK(single.w == P("1"));
  const auto kato = canonical_coordinates(ms("[0,0]+[0,0]"));
  CHECK(kato.lam == B({0, 0}));
  CHECK(kato.mu == B({0, 0}));
  CHECK(kato.w == P("21"));
  CHECK(to_string(t) == "(0,1 | 1,2 | 2,1)");
  CHECK_THROWS_AS(canonical_coordinates(Multisegment{}), InvalidArgument);
}

TEST_CASE("canonical coordinates round trip") {
  std::vector<Segment> types;
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) types.emplace_back(a, b);
  }
  std::vector<Segment> cur;
  int checked = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!cur.empty()) {
      const Multisegment m(cur);
      const auto t = canonical_coordinates(m);
      CHECK(in_S(t.w, t.lam, t.mu));
      CHECK(build_multisegment(t) == m);
      // No other element of S(lam,mu) gives m.
      int hits = 0;
      for (const auto& w : enumerate_S(t.lam, t.mu)) hits += build_multisegment(t.lam, t.mu, w) == m;
      CHECK(hits == 1);
      ++checked;
    }
    if (cur.size() == 4) return;
    for (std::size_t i = from; i < types.size(); ++i) {
      cur.push_back(types[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  CHECK(checked == 1000);
}

TEST_CASE("combined coordinates") {
  const auto a = combine(ms("[0,1]"), ms("[1,2]"));
  CHECK(a.lam == B({0, 1}));
  CHECK(a.mu == B({1, 2}));
  CHECK(a.x == P("12"));
  const auto b = combine(ms("[0,0]"), ms("[0,0]"));
  CHECK(b.lam == B({0, 0}));
  CHECK(b.x == P("21"));
  const auto c = combine(ms("[0,2]"), ms("[1,1]"));
  CHECK(c.lam == B({0, 1}));
  CHECK(c.mu == B({1, 2}));
  CHECK(c.x == P("21"));
  CHECK_THROWS_AS(combine(ms("[0,2]"), Multisegment{}), InvalidArgument);
}

TEST_CASE("combined coordinates rebuild the sum") {
  const std::vector<Multisegment> pool{ms("[0,1]+[1,2]"), ms("[0,0]"),       ms("[1,3]+[2,2]"),
                                       ms("[0,2]+[1,3]"), ms("[2,2]+[2,2]"), ms("[1,1]+[3,4]")};
  for (const auto& p : pool) {
    for (const auto& q : pool) {
      for (const auto& r : pool) {
        const auto cc = combine({p, q, r});
        CHECK(in_S(cc.x, cc.lam, cc.mu));
        CHECK(build_multisegment(cc.lam, cc.mu, cc.x) == p + q + r);
        REQUIRE(cc.factors.size() == 3);
        CHECK(build_multisegment(cc.factors[1]) == q);
      }
    }
  }
}

#include <doctest.h>

#include <random>
#include <set>

#include "ladderprod/decomposer.hpp"
#include "ladderprod/properties.hpp"
#include "ladderprod/verify.hpp"

using namespace ladderprod;

namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Ladders with k segments in [0, W-1] by brute force over segment tuples.
std::int64_t brute_ladder_count(int k, int window) {
  std::vector<Segment> segs;
  for (int a = 0; a < window; ++a) {
    for (int b = a; b < window; ++b) segs.emplace_back(a, b);
  }
  std::int64_t count = 0;
  std::vector<Segment> cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == k) {
      ++count;
      return;
    }
    for (const auto& s : segs) {
      if (!cur.empty() && (s.begin <= cur.back().begin || s.end <= cur.back().end)) continue;
      cur.push_back(s);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return count;
}

std::int64_t summed(const VerificationReport& r, const char* key) {
  std::int64_t n = 0;
  for (const auto& rec : r.records) {
    for (const auto& f : rec["result"]["flags"]) {
      for (const auto& issue : f["issues"]) n += issue == key ? 1 : 0;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("ladder counts in a window") {
  const std::vector<std::size_t> expected{36, 336, 1176, 1764, 1176};
  for (int k = 1; k <= 5; ++k) {
    const auto ls = ladders_in_window(k, 8);
    CHECK(ls.size() == expected[static_cast<std::size_t>(k - 1)]);
    CHECK(static_cast<std::int64_t>(ls.size()) == brute_ladder_count(k, 8));
    for (const auto& l : ls) CHECK(is_ladder(l));
  }
  for (int k = 1; k <= 4; ++k) {
    CHECK(static_cast<std::int64_t>(ladders_in_window(k, 6).size()) == brute_ladder_count(k, 6));
  }
  CHECK(binomial(8, 2) == 28);
}

TEST_CASE("tuple enumeration is normalized and deduplicated") {
  const auto tuples = enumerate_ladder_tuples(2, 4, 6);
  CHECK(tuples.size() == 8781);
  std::set<std::vector<Multisegment>> seen;
  for (const auto& t : tuples) {
    REQUIRE(t.size() == 2);
    CHECK(!t[0].empty());
    CHECK(!t[1].empty());
    CHECK(t[0].size() + t[1].size() <= 4);
    int lo = 1000;
    for (const auto& m : t) {
      for (const auto& [p, c] : support(m)) lo = std::min(lo, p);
    }
    CHECK(lo == 0);
    std::vector<Multisegment> key = t;
    std::sort(key.begin(), key.end());
    CHECK(seen.insert(key).second);
  }
  for (const auto& t : enumerate_ladder_tuples(3, 4, 4)) CHECK(t.size() == 3);
}

TEST_CASE("translate to origin") {
  const Multisegment m = parse_multisegment("[3,4]+[4,6]");
  CHECK(translate_to_origin(m, 3) == parse_multisegment("[0,1]+[1,3]"));
}

TEST_CASE("uniform draws and random ladders") {
  std::mt19937_64 rng(5);
  std::vector<int> hist(3, 0);
  for (int i = 0; i < 3000; ++i) ++hist[uniform_below(rng, 3)];
  for (int h : hist) CHECK(h > 850);
  for (int i = 0; i < 200; ++i) {
    const auto l = random_ladder(rng, 3, 6);
    CHECK(l.size() == 3);
    CHECK(is_ladder(l));
    const auto pair = random_ladder_pair(rng, 5, 8);
    CHECK(pair[0].size() + pair[1].size() == 5);
  }
  std::mt19937_64 a(9), b(9);
  CHECK(random_ladder_pair(a, 6, 8) == random_ladder_pair(b, 6, 8));
}

TEST_CASE("conjecture sweep agrees and summary matches records") {
  SweepOptions o;
  o.max_total = 4;
  o.window = 5;
  o.keep_all = true;
  const auto r = verify_conjecture(o);
  CHECK(r.ok());
  CHECK(r.exit_code() == 0);
  CHECK(r.count("instances") == static_cast<std::int64_t>(enumerate_ladder_tuples(2, 4, 5).size()));
  CHECK(static_cast<std::int64_t>(r.records.size()) == r.count("instances"));
  std::int64_t keys = 0, constituents = 0;
  for (const auto& rec : r.records) {
    keys += rec["result"]["keys"].get<std::int64_t>();
    constituents += static_cast<std::int64_t>(rec["result"]["constituents"].size());
    CHECK(rec["agree"] == true);
  }
  CHECK(keys == r.count("keys"));
  CHECK(constituents == r.count("constituents"));
  CHECK(summed(r, "conjecture") == r.count("conjecture_mismatches"));
}

TEST_CASE("sweep output is independent of the worker count") {
  SweepOptions o;
  o.max_total = 4;
  o.window = 5;
  o.keep_all = true;
  const auto one = verify_conjecture(o);
  o.workers = 3;
  const auto three = verify_conjecture(o);
  CHECK(one.json_lines() == three.json_lines());
  SweepOptions w;
  w.factors = 3;
  w.max_total = 4;
  w.window = 4;
  const auto w1 = verify_width_bounds(w);
  w.workers = 2;
  CHECK(w1.json_lines() == verify_width_bounds(w).json_lines());
  CHECK(w1.ok());
}

TEST_CASE("random mode is reproducible") {
  SweepOptions o;
  o.mode = "random";
  o.max_total = 6;
  o.window = 8;
  o.samples = 30;
  o.seed = 11;
  o.keep_all = true;
  const auto a = verify_conjecture(o);
  const auto b = verify_conjecture(o);
  CHECK(a.json_lines() == b.json_lines());
  CHECK(a.count("instances") == 30);
  CHECK(a.ok());
  o.seed = 12;
  CHECK(verify_conjecture(o).json_lines() != a.json_lines());
}

TEST_CASE("json lines round trip and carry the schema") {
  SweepOptions o;
  o.max_total = 3;
  o.window = 4;
  o.keep_all = true;
  const auto lines = verify_conjecture(o).json_lines(true);
  REQUIRE(lines.size() >= 2);
  CHECK(lines.front()["kind"] == "header");
  CHECK(lines.back()["kind"] == "summary");
  CHECK(lines.back()["result"].contains("wall_seconds"));
  for (const auto& l : lines) {
    for (const char* key : {"kind", "inputs", "result", "agree"}) CHECK(l.contains(key));
    CHECK(Json::parse(l.dump()) == l);
  }
  const auto plain = verify_conjecture(o).json_lines();
  CHECK_FALSE(plain.back()["result"].contains("wall_seconds"));
}

TEST_CASE("resource limits abort with exit code 3") {
  SweepOptions o;
  o.max_total = 4;
  o.window = 6;
  o.max_instances = 10;
  const auto r = verify_conjecture(o);
  CHECK(r.aborted);
  CHECK(r.exit_code() == 3);
  CHECK_FALSE(r.ok());
}

TEST_CASE("exit code reflects disagreements") {
  VerificationReport r;
  r.counts["disagreements"] = 2;
  CHECK(r.exit_code() == 1);
  r.counts["disagreements"] = 0;
  CHECK(r.exit_code() == 0);
}

TEST_CASE("alternating identity") {
  const auto two = verify_identity(2, 1, true);
  CHECK(two.ok());
  CHECK(two.count("avoiders") == 2);
  const auto three = verify_identity(3, 1, true);
  CHECK(three.ok());
  CHECK(three.count("avoiders") == 5);
  bool found = false;
  for (const auto& rec : three.records) {
    CHECK(rec["result"]["sum"] == 1);
    if (rec["inputs"]["z"] == "2,1,3") {
      found = true;
      CHECK(rec["result"]["contributing_terms"] == 1);
    }
  }
  CHECK(found);
  for (int n = 1; n <= 6; ++n) CHECK(verify_identity(n).ok());
}

TEST_CASE("census rows") {
  const auto one = census(1);
  CHECK(one.avoid_321 == 1);
  CHECK(one.avoid_321_3412 == 1);
  CHECK(one.agree());
  const auto four = census(4);
  CHECK(four.avoid_321 == 14);
  CHECK(four.avoid_321_3412 == 13);
  CHECK(four.smooth_kl == 22);
  CHECK(four.avoid_3412_4231 == 22);
  CHECK(four.agree());
  const auto five = census(5);
  CHECK(five.avoid_321 == 42);
  CHECK(five.catalan == 42);
  CHECK(five.avoid_321_3412 == 34);
  CHECK(five.fibonacci == 34);
  const auto skipped = census(5, 4);
  CHECK(skipped.smooth_kl == -1);
  CHECK(skipped.agree());
  CHECK(census_report(5, 4).count("kl_skipped") == 1);
}

TEST_CASE("smooth sweep") {
  SweepOptions o;
  o.max_total = 4;
  o.window = 5;
  o.all_x = true;
  const auto r = verify_smooth(o);
  CHECK(r.ok());
  CHECK(r.count("smooth_keys") > 0);
  CHECK(r.count("skipped") > 0);
  CHECK(r.count("standard_checks") > r.count("smooth_keys"));
  CHECK(r.count("standard_unsupported") == 0);
  o.all_x = false;
  const auto cc_only = verify_smooth(o);
  CHECK(cc_only.count("standard_checks") == cc_only.count("smooth_keys"));
}

TEST_CASE("width bounds for three ladders") {
  SweepOptions o;
  o.factors = 3;
  o.max_total = 4;
  o.window = 5;
  const auto r = verify_width_bounds(o);
  CHECK(r.ok());
  CHECK(r.count("constituents") >= r.count("instances"));
}

TEST_CASE("structural property checks") {
  CHECK(check_dilworth(5, 4).ok());
  CHECK(check_shift_invariance(3, 5, 2).ok());
  const auto coords = check_coordinate_independence(5, 60, 3);
  CHECK(coords.ok());
  CHECK(coords.count("instances") == 60);
  CHECK(check_jacquet_properties(4, 6).ok());
}

TEST_CASE("decomposition listing line") {
  const auto r = product_ladders(parse_multisegment("[0,1]"), parse_multisegment("[1,2]"));
  for (const auto& [w, c] : r.mult) {
    const std::string line = describe_factor(r.multisegment(w), c, w, r.lam, r.mu);
    CHECK(line.find("m^") == 0);
    CHECK(line.find("x1") != std::string::npos);
    CHECK(line.find("width=") != std::string::npos);
  }
}

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hecke_oracle.hpp"
#include "ladderprod/kl.hpp"

using namespace ladderprod;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

std::string temp_path(const char* stem) {
  return (std::filesystem::temp_directory_path() /
          (std::string(stem) + "-" + std::to_string(std::random_device{}()) + ".cache"))
      .string();
}

}  // namespace

TEST_CASE("symmetric group indexing") {
  for (int m = 1; m <= 6; ++m) {
    const SymmetricGroup& g = symmetric_group(m);
    CHECK(g.index(Permutation::identity(m)) == 0);
    std::uint32_t i = 0;
    for (const auto& w : all_permutations(m)) {
      CHECK(g.index(w) == i);
      CHECK(g.element(i) == w);
      CHECK(g.length(i) == w.length());
      CHECK(g.element(g.inverse(i)) == w.inverse());
      ++i;
    }
    CHECK(i == g.order());
  }
}

TEST_CASE("KL examples") {
  KLEngine engine;
  CHECK(engine.kl_poly(P("3412"), P("3412")) == IntPolynomial::constant(1));
  CHECK(engine.kl_poly(P("1234"), P("3412")).to_string() == "1 + q");
  CHECK(engine.kl_poly(P("1234"), P("4231")).to_string() == "1 + q");
  CHECK(engine.kl_at_one(P("1234"), P("3412")) == 2);
  CHECK(engine.kl_at_one(P("1234"), P("4231")) == 2);
  CHECK(engine.kl_at_one(P("123"), P("321")) == 1);
  CHECK(engine.kl_poly(P("231"), P("312")).is_zero());
  CHECK(engine.mu(P("1324"), P("3412")) == 1);
  CHECK_THROWS_AS(engine.kl_poly(P("12"), P("123")), InvalidArgument);
}

TEST_CASE("KL polynomials against the Hecke algebra oracle") {
  KLEngine engine;
  for (int m = 1; m <= 5; ++m) {
    const hecke_oracle::Oracle oracle(m);
    for (const auto& w : all_permutations(m)) {
      for (const auto& x : all_permutations(m)) {
        const IntPolynomial p = engine.kl_poly(x, w);
        CHECK(p.coeffs() == oracle.poly(x.one_line(), w.one_line()));
      }
    }
  }
}

TEST_CASE("KL sample in S_6 against the oracle") {
  KLEngine engine;
  const hecke_oracle::Oracle oracle(6);
  const auto all = all_permutations(6);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 3000; ++t) {
    const auto& x = all[rng() % all.size()];
    const auto& w = all[rng() % all.size()];
    CHECK(engine.kl_poly(x, w).coeffs() == oracle.poly(x.one_line(), w.one_line()));
  }
}

TEST_CASE("KL structural identities") {
  KLEngine engine;
  const int m = 5;
  const auto all = all_permutations(m);
  const Permutation w0 = Permutation::longest(m);
  for (const auto& w : all) {
    CHECK(engine.kl_poly(w, w) == IntPolynomial::constant(1));
    for (const auto& x : all) {
      const IntPolynomial p = engine.kl_poly(x, w);
      CHECK(p.is_zero() == !bruhat_leq(x, w));
      CHECK(p == engine.kl_poly(x.inverse(), w.inverse()));
      CHECK(p == engine.kl_poly(w0 * x * w0, w0 * w * w0));
      if (!p.is_zero()) {
        CHECK(p.coeff(0) == 1);
        CHECK(2 * p.degree() <= w.length() - x.length() - 1 + (x == w ? 1 : 0));
      }
    }
  }
}

TEST_CASE("dense values agree with the sparse engine") {
  KLEngine engine;
  const SymmetricGroup& g = symmetric_group(5);
  for (std::uint32_t w = 0; w < g.order(); w += 3) {
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      CHECK(engine.at_one(5, x, w) == engine.kl_at_one(g.element(x), g.element(w)));
    }
  }
}

TEST_CASE("cache round trip") {
  const std::string path = temp_path("kl-roundtrip");
  KLEngine cold;
  cold.compute_all(5);
  cold.kl_poly(P("351624"), P("645312"));
  cold.save(path);
  KLEngine warm;
  CHECK(warm.load(path) == cold.computed_columns(5) + cold.computed_columns(6));
  CHECK(warm.computed_columns(5) == 120);
  for (const auto& w : all_permutations(5)) {
    for (const auto& x : all_permutations(5)) CHECK(warm.kl_poly(x, w) == cold.kl_poly(x, w));
  }
  CHECK(warm.kl_poly(P("351624"), P("645312")) == cold.kl_poly(P("351624"), P("645312")));
  std::filesystem::remove(path);
}

TEST_CASE("cache rejects bad files") {
  const std::string path = temp_path("kl-bad");
  {
    std::ofstream out(path);
    out << "not a cache\n";
  }
  KLEngine engine;
  CHECK_THROWS_AS(engine.load(path), InvalidArgument);

  KLEngine source;
  source.compute_all(4);
  source.save(path);
  std::ifstream in(path);
  std::string header, line, all;
  std::getline(in, header);
  all = header + "\n";
  bool corrupted = false;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string m, x, w;
    fields >> m >> x >> w;
    if (!corrupted && m == "4" && w == "3412") {
      line = m + " " + x + " " + w + " 1 5";
      corrupted = true;
    }
    all += line + "\n";
  }
  REQUIRE(corrupted);
  in.close();
  {
    std::ofstream out(path);
    out << all;
  }
  KLEngine victim;
  CHECK_THROWS_AS(victim.load(path, 24), InvalidArgument);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(engine.load(path), InvalidArgument);
}

TEST_CASE("inverse expansion") {
  KLEngine engine;
  const auto diag = invert_interval(BlockStructure({0, 1}), BlockStructure({1, 2}), P("21"), engine);
  CHECK(diag == std::map<Permutation, std::int64_t>{{P("21"), 1}});
  const auto s2 = invert_interval(BlockStructure({0, 1}), BlockStructure({1, 2}), P("12"), engine);
  CHECK(s2.at(P("21")) == -1);
  CHECK_THROWS_AS(invert_interval(BlockStructure({0, 0}), BlockStructure({0, 0}), P("12"), engine),
                  InvalidArgument);
}

TEST_CASE("ladder coordinates give the determinantal signs") {
  KLEngine engine;
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng() % 5);
    std::vector<int> lam, mu;
    int a = 0, b = 0;
    for (int i = 0; i < m; ++i) {
      a += 1 + static_cast<int>(rng() % 2);
      b = std::max(b + 1, a + static_cast<int>(rng() % 3) - 1);
      lam.push_back(a);
      mu.push_back(b);
    }
    const BlockStructure L(lam), M(mu);
    const auto c = invert_interval(L, M, Permutation::identity(m), engine);
    for (const auto& w : enumerate_S(L, M)) {
      auto it = c.find(w);
      CHECK((it == c.end() ? 0 : it->second) == w.sign());
    }
  }
}

TEST_CASE("smooth elements are the 3412 and 4231 avoiders") {
  KLEngine engine;
  for (int m = 1; m <= 6; ++m) {
    int smooth = 0;
    for (const auto& w : all_permutations(m)) {
      const bool kl_smooth = engine.kl_poly(Permutation::identity(m), w) == IntPolynomial::constant(1);
      CHECK(kl_smooth == (avoids(w, P("3412")) && avoids(w, P("4231"))));
      smooth += kl_smooth ? 1 : 0;
    }
    if (m == 4) CHECK(smooth == 22);
  }
}

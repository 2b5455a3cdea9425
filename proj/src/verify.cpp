#include "ladderprod/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "ladderprod/decomposer.hpp"
#include "ladderprod/error.hpp"
#include "ladderprod/jacquet.hpp"

namespace ladderprod {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Visits every strictly increasing k-tuple from [0, n).
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k > n) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    visit(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

Multisegment ladder_from(const std::vector<int>& begins, const std::vector<int>& ends) {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < begins.size(); ++i) segs.emplace_back(begins[i], ends[i]);
  return Multisegment(std::move(segs));
}

int min_point(const std::vector<Multisegment>& factors) {
  int lo = 0;
  bool first = true;
  for (const auto& f : factors) {
    for (const auto& s : f) {
      if (first || s.begin < lo) lo = s.begin;
      first = false;
    }
  }
  return lo;
}

std::vector<Multisegment> normalized(std::vector<Multisegment> factors) {
  const int lo = min_point(factors);
  for (auto& f : factors) f = translate_to_origin(f, lo);
  return factors;
}

Json factors_json(const std::vector<Multisegment>& factors) {
  Json j = Json::array();
  for (const auto& f : factors) j.push_back(to_string(f));
  return j;
}

// Instances of a sweep, either materialized or indexed into a tuple space.
class InstanceSource {
 public:
  InstanceSource(const SweepOptions& opt) {
    if (opt.factors < 1) throw InvalidArgument("need at least one factor");
    if (opt.window < 1) throw InvalidArgument("window must be positive");
    if (opt.mode == "exhaustive") {
      if (opt.max_total < opt.factors) throw InvalidArgument("max total below factor count");
      const int kmax = opt.max_total - opt.factors + 1;
      for (int k = 0; k <= kmax; ++k) by_size_.push_back(k == 0 ? std::vector<Multisegment>{}
                                                                 : ladders_in_window(k, opt.window));
      factors_ = opt.factors;
      std::vector<int> sizes(static_cast<std::size_t>(opt.factors));
      std::vector<std::uint32_t> cur(static_cast<std::size_t>(opt.factors));
      for (int total = opt.factors; total <= opt.max_total; ++total) {
        std::function<void(int, int, int)> by_sizes = [&](int f, int lo, int left) {
          if (f == opt.factors) {
            if (left == 0) fill(sizes, cur, 0);
            return;
          }
          for (int k = lo; k <= left; ++k) {
            sizes[f] = k;
            by_sizes(f + 1, k, left - k);
          }
        };
        by_sizes(0, 1, total);
      }
    } else if (opt.mode == "random") {
      if (opt.factors != 2) throw InvalidArgument("random mode draws ladder pairs");
      if (opt.max_total < 2) throw InvalidArgument("random mode needs total >= 2");
      std::mt19937_64 rng(opt.seed);
      for (int i = 0; i < opt.samples; ++i) {
        explicit_.push_back(random_ladder_pair(rng, opt.max_total, opt.window));
      }
    } else {
      throw InvalidArgument("unknown mode '" + opt.mode + "'");
    }
  }

  std::size_t size() const {
    return factors_ == 0 ? explicit_.size() : packed_.size() / static_cast<std::size_t>(factors_);
  }

  std::vector<Multisegment> operator[](std::size_t i) const {
    if (factors_ == 0) return explicit_[i];
    std::vector<Multisegment> out;
    for (int f = 0; f < factors_; ++f) {
      const std::uint32_t code = packed_[i * static_cast<std::size_t>(factors_) + f];
      out.push_back(by_size_[code >> 20][code & 0xFFFFF]);
    }
    return out;
  }

 private:
  void fill(const std::vector<int>& sizes, std::vector<std::uint32_t>& cur, std::size_t f) {
    if (f == sizes.size()) {
      bool at_origin = false;
      for (std::size_t g = 0; g < sizes.size(); ++g) {
        const auto& m = by_size_[sizes[g]][cur[g]];
        if (m.segments().front().begin == 0) at_origin = true;
      }
      if (!at_origin) return;
      for (std::size_t g = 0; g < sizes.size(); ++g) {
        packed_.push_back(static_cast<std::uint32_t>(sizes[g]) << 20 | cur[g]);
      }
      return;
    }
    const auto& pool = by_size_[sizes[f]];
    std::uint32_t start = 0;
    if (f > 0 && sizes[f] == sizes[f - 1]) start = cur[f - 1];
    for (std::uint32_t i = start; i < pool.size(); ++i) {
      cur[f] = i;
      fill(sizes, cur, f + 1);
    }
  }

  int factors_ = 0;
  std::vector<std::vector<Multisegment>> by_size_;
  std::vector<std::uint32_t> packed_;
  std::vector<std::vector<Multisegment>> explicit_;
};

struct Tally {
  std::map<std::string, std::int64_t> counts;
  std::vector<std::pair<std::size_t, Json>> records;
};

// Runs check(i, tally) over every instance and merges per-worker tallies in
// instance order.
void sweep(VerificationReport& report, std::size_t count, const SweepOptions& opt,
           const std::function<void(std::size_t, Tally&)>& check) {
  std::size_t limit = count;
  if (opt.max_instances > 0 && opt.max_instances < count) {
    limit = opt.max_instances;
    report.aborted = true;
  }
  const int workers = std::max(1, opt.workers);
  std::vector<Tally> tallies(static_cast<std::size_t>(workers));
  const bool finished = run_indexed(limit, workers, opt.max_seconds, [&](std::size_t i, int wid) {
    try {
      check(i, tallies[static_cast<std::size_t>(wid)]);
    } catch (const std::exception& e) {
      auto& t = tallies[static_cast<std::size_t>(wid)];
      ++t.counts["disagreements"];
      ++t.counts["errors"];
      t.records.emplace_back(i, Json{{"kind", "error"},
                                     {"inputs", Json{{"index", i}}},
                                     {"result", e.what()},
                                     {"agree", false}});
    }
  });
  if (!finished) report.aborted = true;
  std::vector<std::pair<std::size_t, Json>> merged;
  for (auto& t : tallies) {
    for (const auto& [k, v] : t.counts) report.counts[k] += v;
    for (auto& r : t.records) merged.push_back(std::move(r));
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& r : merged) report.records.push_back(std::move(r.second));
}

Json sweep_scope(const SweepOptions& opt) {
  Json s = {{"mode", opt.mode},       {"factors", opt.factors},
            {"max_total", opt.max_total}, {"window", opt.window},
            {"normalization", "translate min support point to 0"}};
  if (opt.mode == "random") {
    s["seed"] = opt.seed;
    s["samples"] = opt.samples;
    s["distribution"] = "factor sizes uniform, each ladder uniform over valid (lam, mu)";
  }
  return s;
}

const Permutation& pattern_321() {
  static const Permutation p = decreasing_pattern(3);
  return p;
}

const Permutation& pattern_3412() {
  static const Permutation p({3, 4, 1, 2});
  return p;
}

const Permutation& pattern_4231() {
  static const Permutation p({4, 2, 3, 1});
  return p;
}

}  // namespace

std::vector<Multisegment> ladders_in_window(int k, int window) {
  if (k < 1 || window < 1) throw InvalidArgument("ladders_in_window needs k, window >= 1");
  std::vector<Multisegment> out;
  for_each_subset(window, k, [&](const std::vector<int>& begins) {
    for_each_subset(window, k, [&](const std::vector<int>& ends) {
      for (int i = 0; i < k; ++i) {
        if (ends[i] < begins[i]) return;
      }
      out.push_back(ladder_from(begins, ends));
    });
  });
  return out;
}

Multisegment translate_to_origin(const Multisegment& m, int shift) {
  std::vector<Segment> segs;
  for (const auto& s : m) segs.emplace_back(s.begin - shift, s.end - shift);
  return Multisegment(std::move(segs));
}

std::vector<std::vector<Multisegment>> enumerate_ladder_tuples(int factors, int max_total,
                                                               int window) {
  SweepOptions opt;
  opt.factors = factors;
  opt.max_total = max_total;
  opt.window = window;
  InstanceSource src(opt);
  std::vector<std::vector<Multisegment>> out;
  out.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) out.push_back(src[i]);
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("uniform_below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  while (true) {
    const std::uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

Multisegment random_ladder(std::mt19937_64& rng, int k, int window) {
  if (k < 1 || k > window) throw InvalidArgument("no ladder with that many segments in window");
  auto subset = [&] {
    // Partial Fisher-Yates, then sort.
    std::vector<int> pool(static_cast<std::size_t>(window));
    for (int i = 0; i < window; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
      const auto j = static_cast<int>(i + uniform_below(rng, static_cast<std::uint64_t>(window - i)));
      std::swap(pool[i], pool[j]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
  };
  while (true) {
    const auto begins = subset();
    const auto ends = subset();
    bool valid = true;
    for (int i = 0; i < k; ++i) valid = valid && begins[i] <= ends[i];
    if (valid) return ladder_from(begins, ends);
  }
}

std::vector<Multisegment> random_ladder_pair(std::mt19937_64& rng, int total, int window) {
  if (total < 2) throw InvalidArgument("a ladder pair needs at least two segments");
  const int k1 = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(total - 1)));
  std::vector<Multisegment> pair{random_ladder(rng, k1, window),
                                 random_ladder(rng, total - k1, window)};
  return normalized(std::move(pair));
}

std::int64_t VerificationReport::count(const std::string& key) const {
  auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

std::vector<Json> VerificationReport::json_lines(bool timing) const {
  std::vector<Json> out;
  Json inputs = scope;
  inputs["command"] = command;
  out.push_back({{"kind", "header"}, {"inputs", inputs}, {"result", nullptr}, {"agree", true}});
  for (const auto& r : records) out.push_back(r);
  Json result = Json::object();
  for (const auto& [k, v] : counts) result[k] = v;
  result["records"] = records.size();
  result["aborted"] = aborted;
  if (timing) result["wall_seconds"] = wall_seconds;
  out.push_back({{"kind", "summary"},
                 {"inputs", {{"command", command}}},
                 {"result", result},
                 {"agree", ok()}});
  return out;
}

std::string VerificationReport::text_summary() const {
  std::ostringstream os;
  os << command << ":";
  for (const auto& [k, v] : counts) os << " " << k << "=" << v;
  if (aborted) os << " (aborted)";
  os << (ok() ? "  OK" : "  FAIL");
  return os.str();
}

bool run_indexed(std::size_t count, int workers, double max_seconds,
                 const std::function<void(std::size_t, int)>& fn) {
  const auto t0 = Clock::now();
  std::atomic<std::size_t> next{0};
  std::atomic<bool> expired{false};
  auto loop = [&](int wid) {
    while (true) {
      if (max_seconds > 0 && seconds_since(t0) > max_seconds) {
        expired = true;
        return;
      }
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i, wid);
    }
  };
  if (workers <= 1) {
    loop(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(loop, w);
    for (auto& t : pool) t.join();
  }
  return !expired;
}

VerificationReport verify_conjecture(const SweepOptions& opt, KLEngine& engine) {
  const auto t0 = Clock::now();
  SweepOptions o = opt;
  o.factors = 2;
  VerificationReport report;
  report.command = "verify-conjecture";
  report.scope = sweep_scope(o);
  const InstanceSource src(o);
  for (const char* key : {"instances", "keys", "constituents", "disagreements",
                          "conjecture_mismatches", "multiplicity_violations",
                          "width_violations", "pattern_violations"}) {
    report.counts[key] = 0;
  }
  sweep(report, src.size(), o, [&](std::size_t i, Tally& t) {
    const auto pair = src[i];
    const auto& m1 = pair[0];
    const auto& m2 = pair[1];
    const DecompositionResult truth = product_ladders(m1, m2, engine);
    Json flags = Json::array();
    Json constituents = Json::array();
    std::int64_t keys = 0;
    for (const auto& z : enumerate_S(truth.lam, truth.mu)) {
      ++keys;
      const std::int64_t mult = truth.multiplicity(z);
      const bool av = avoids(z, pattern_321());
      const Multisegment sigma = truth.multisegment(z);
      const int ind = av ? indicator_multiplicity(sigma, m1, m2) : -1;
      const bool predicted = av && ind == 1;
      std::vector<std::string> issues;
      if (predicted != (mult > 0)) {
        issues.push_back("conjecture");
        ++t.counts["conjecture_mismatches"];
      }
      if (mult > 1 || mult < 0) {
        issues.push_back("multiplicity");
        ++t.counts["multiplicity_violations"];
      }
      if (mult > 0) {
        ++t.counts["constituents"];
        if (width(sigma) > 2) {
          issues.push_back("width");
          ++t.counts["width_violations"];
        }
        if (!av) {
          issues.push_back("pattern");
          ++t.counts["pattern_violations"];
        }
        if (o.keep_all) constituents.push_back(to_string(sigma));
      }
      if (!issues.empty()) {
        ++t.counts["disagreements"];
        flags.push_back({{"w", to_string(z)},
                         {"sigma", to_string(sigma)},
                         {"multiplicity", mult},
                         {"avoids321", av},
                         {"indicator", ind},
                         {"issues", issues}});
      }
    }
    ++t.counts["instances"];
    t.counts["keys"] += keys;
    if (o.keep_all || !flags.empty()) {
      Json result = {{"keys", keys}, {"flags", flags}};
      if (o.keep_all) result["constituents"] = constituents;
      t.records.emplace_back(i, Json{{"kind", "instance"},
                                     {"inputs", factors_json(pair)},
                                     {"result", result},
                                     {"agree", flags.empty()}});
    }
  });
  report.wall_seconds = seconds_since(t0);
  return report;
}

VerificationReport verify_width_bounds(const SweepOptions& opt, KLEngine& engine) {
  const auto t0 = Clock::now();
  VerificationReport report;
  report.command = "verify-width";
  report.scope = sweep_scope(opt);
  const InstanceSource src(opt);
  const int k = opt.factors;
  const Permutation pattern = decreasing_pattern(k + 1);
  for (const char* key : {"instances", "constituents", "disagreements", "width_violations",
                          "pattern_violations"}) {
    report.counts[key] = 0;
  }
  sweep(report, src.size(), opt, [&](std::size_t i, Tally& t) {
    const auto factors = src[i];
    const DecompositionResult truth = product_of_ladders(factors, engine);
    Json flags = Json::array();
    for (const auto& [z, mult] : truth.mult) {
      ++t.counts["constituents"];
      const Multisegment sigma = truth.multisegment(z);
      const int wd = width(sigma);
      const bool av = avoids(z, pattern);
      if (wd > k) ++t.counts["width_violations"];
      if (!av) ++t.counts["pattern_violations"];
      if (wd > k || !av) {
        ++t.counts["disagreements"];
        flags.push_back({{"w", to_string(z)},
                         {"sigma", to_string(sigma)},
                         {"multiplicity", mult},
                         {"width", wd},
                         {"avoids", av}});
      }
    }
    ++t.counts["instances"];
    if (opt.keep_all || !flags.empty()) {
      t.records.emplace_back(i, Json{{"kind", "instance"},
                                     {"inputs", factors_json(factors)},
                                     {"result", {{"constituents", truth.mult.size()}, {"flags", flags}}},
                                     {"agree", flags.empty()}});
    }
  });
  report.wall_seconds = seconds_since(t0);
  return report;
}

VerificationReport verify_identity(int n, int workers, bool keep_all, KLEngine& engine) {
  if (n < 1) throw InvalidArgument("verify_identity needs n >= 1");
  const auto t0 = Clock::now();
  VerificationReport report;
  report.command = "verify-identity";
  report.scope = {{"n", n}, {"interleaving", "odd/even positions and values"}};
  const SymmetricGroup& G = symmetric_group(n);
  const IndexParts parts = odd_even_parts(n);
  std::vector<std::pair<std::uint32_t, int>> terms;
  if (parts.size() < 2 || parts[1].empty()) {
    terms.emplace_back(G.index(Permutation::identity(n)), 1);
  } else {
    for (const auto& w1 : all_permutations(static_cast<int>(parts[0].size()))) {
      for (const auto& w2 : all_permutations(static_cast<int>(parts[1].size()))) {
        terms.emplace_back(G.index(star(w1, w2, parts, parts)), w1.sign() * w2.sign());
      }
    }
  }
  const std::vector<Permutation> zs = enumerate_avoiders(n, {pattern_321()});
  report.counts["avoiders"] = static_cast<std::int64_t>(zs.size());
  report.counts["disagreements"] = 0;
  report.counts["contributing_terms"] = 0;
  SweepOptions o;
  o.workers = workers;
  sweep(report, zs.size(), o, [&](std::size_t i, Tally& t) {
    const std::uint32_t zi = G.index(zs[i]);
    std::int64_t sum = 0;
    std::int64_t contributing = 0;
    for (const auto& [yi, sign] : terms) {
      const std::int64_t p = engine.at_one(n, yi, zi);
      if (p != 0) ++contributing;
      sum += sign * p;
    }
    t.counts["contributing_terms"] += contributing;
    if (sum != 1) ++t.counts["disagreements"];
    if (keep_all || sum != 1) {
      t.records.emplace_back(i, Json{{"kind", "instance"},
                                     {"inputs", {{"z", to_string(zs[i])}}},
                                     {"result", {{"sum", sum}, {"contributing_terms", contributing}}},
                                     {"agree", sum == 1}});
    }
  });
  report.wall_seconds = seconds_since(t0);
  return report;
}

VerificationReport verify_smooth(const SweepOptions& opt, KLEngine& engine) {
  const auto t0 = Clock::now();
  SweepOptions o = opt;
  o.factors = 2;
  VerificationReport report;
  report.command = "verify-smooth";
  report.scope = sweep_scope(o);
  report.scope["standard_x"] = o.all_x ? "every x in S(lam,mu)" : "the product's x";
  const InstanceSource src(o);
  for (const char* key : {"instances", "smooth_keys", "skipped", "disagreements",
                          "indicator_mismatches", "standard_bound_violations",
                          "standard_checks", "standard_unsupported"}) {
    report.counts[key] = 0;
  }
  sweep(report, src.size(), o, [&](std::size_t i, Tally& t) {
    const auto pair = src[i];
    const auto& m1 = pair[0];
    const auto& m2 = pair[1];
    const DecompositionResult truth = product_ladders(m1, m2, engine);
    const CombinedCoordinates cc = combine(m1, m2);
    const std::vector<Permutation> keys = enumerate_S(truth.lam, truth.mu);
    std::vector<Permutation> xs;
    if (o.all_x) {
      xs = keys;
    } else {
      xs.push_back(cc.x);
    }
    Json flags = Json::array();
    for (const auto& z : keys) {
      if (!avoids(z, pattern_321()) || !avoids(z, pattern_3412())) {
        ++t.counts["skipped"];
        continue;
      }
      ++t.counts["smooth_keys"];
      const std::int64_t mult = truth.multiplicity(z);
      const Multisegment sigma = truth.multisegment(z);
      const int ind = indicator_multiplicity(sigma, m1, m2);
      std::vector<std::string> issues;
      if (ind != mult) {
        issues.push_back("indicator");
        ++t.counts["indicator_mismatches"];
      }
      Json standard = Json::array();
      for (const auto& x : xs) {
        try {
          const std::int64_t s = indicator_multiplicity_standard(sigma, truth.lam, truth.mu, x);
          ++t.counts["standard_checks"];
          if (s > 1) {
            issues.push_back("standard_bound");
            ++t.counts["standard_bound_violations"];
            standard.push_back({{"x", to_string(x)}, {"value", s}});
          }
        } catch (const Unsupported&) {
          ++t.counts["standard_unsupported"];
        }
      }
      if (!issues.empty()) {
        ++t.counts["disagreements"];
        flags.push_back({{"w", to_string(z)},
                         {"sigma", to_string(sigma)},
                         {"multiplicity", mult},
                         {"indicator", ind},
                         {"standard", standard},
                         {"issues", issues}});
      }
    }
    ++t.counts["instances"];
    if (o.keep_all || !flags.empty()) {
      t.records.emplace_back(i, Json{{"kind", "instance"},
                                     {"inputs", factors_json(pair)},
                                     {"result", {{"flags", flags}}},
                                     {"agree", flags.empty()}});
    }
  });
  report.wall_seconds = seconds_since(t0);
  return report;
}

bool CensusRow::agree() const {
  return avoid_321 == catalan && avoid_321_3412 == fibonacci &&
         (smooth_kl < 0 || smooth_kl == avoid_3412_4231);
}

CensusRow census(int n, int kl_limit, KLEngine& engine) {
  if (n < 1 || n > SymmetricGroup::kMaxRank) {
    throw InvalidArgument("census needs 1 <= n <= " + std::to_string(SymmetricGroup::kMaxRank));
  }
  CensusRow row;
  row.n = n;
  // C_n = binom(2n, n) / (n + 1); F_{2n-1} with F_1 = F_2 = 1.
  std::int64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  row.catalan = c;
  std::int64_t a = 1, b = 1;
  for (int i = 2; i < 2 * n - 1; ++i) {
    const std::int64_t next = a + b;
    a = b;
    b = next;
  }
  row.fibonacci = b;
  for_each_avoider(n, {pattern_321()}, [&](const Permutation& w) {
    ++row.avoid_321;
    if (avoids(w, pattern_3412())) ++row.avoid_321_3412;
  });
  for_each_avoider(n, {pattern_3412(), pattern_4231()},
                   [&](const Permutation&) { ++row.avoid_3412_4231; });
  if (n <= kl_limit) {
    const SymmetricGroup& G = symmetric_group(n);
    row.smooth_kl = 0;
    for (std::uint32_t w = 0; w < G.order(); ++w) {
      if (engine.at_one(n, 0, w) == 1) ++row.smooth_kl;
    }
  }
  return row;
}

VerificationReport census_report(int n, int kl_limit, KLEngine& engine) {
  const auto t0 = Clock::now();
  VerificationReport report;
  report.command = "census";
  report.scope = {{"n", n}, {"kl_limit", kl_limit}};
  const CensusRow row = census(n, kl_limit, engine);
  Json result = {{"avoid_321", row.avoid_321},
                 {"avoid_321_3412", row.avoid_321_3412},
                 {"smooth_kl", row.smooth_kl < 0 ? Json(nullptr) : Json(row.smooth_kl)},
                 {"avoid_3412_4231", row.avoid_3412_4231},
                 {"catalan", row.catalan},
                 {"fibonacci_2n_minus_1", row.fibonacci}};
  report.records.push_back(
      {{"kind", "census"}, {"inputs", {{"n", n}}}, {"result", result}, {"agree", row.agree()}});
  report.counts["disagreements"] = row.agree() ? 0 : 1;
  report.counts["kl_skipped"] = row.smooth_kl < 0 ? 1 : 0;
  report.wall_seconds = seconds_since(t0);
  return report;
}

std::string describe_factor(const Multisegment& m, std::int64_t mult, const Permutation& w,
                            const BlockStructure& lam, const BlockStructure& mu) {
  std::ostringstream os;
  os << "m^" << to_compact_string(w) << "_{" << to_string(lam) << "; " << to_string(mu)
     << "} = " << to_string(m) << "  x" << mult << "  width=" << width(m)
     << "  avoids321=" << (avoids(w, pattern_321()) ? "true" : "false")
     << "  avoids3412=" << (avoids(w, pattern_3412()) ? "true" : "false");
  return os.str();
}

}  // namespace ladderprod

// Command-line front end for ladder product decompositions and sweeps.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ladderprod/decomposer.hpp"
#include "ladderprod/error.hpp"
#include "ladderprod/jacquet.hpp"
#include "ladderprod/verify.hpp"

namespace lp = ladderprod;

namespace {

constexpr int kOk = 0;
constexpr int kDisagreement = 1;
constexpr int kUsage = 2;

struct Common {
  bool json = false;
  bool timing = false;
  int workers = 1;
  std::uint64_t seed = 1;
  int window = 8;
  std::string cache;
  bool no_cache = false;
  bool all_records = false;
  double max_seconds = 0;
  std::size_t max_instances = 0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "One JSON record per line");
  sub->add_flag("--timing", c.timing, "Include wall time in the summary");
  sub->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "Seed for random mode");
  sub->add_option("--window", c.window, "Support window [0, W-1]")->check(CLI::PositiveNumber);
  sub->add_option("--cache", c.cache, "KL cache file (also LADDERPROD_CACHE)");
  sub->add_flag("--no-cache", c.no_cache, "Ignore any KL cache");
  sub->add_flag("--all-records", c.all_records, "Emit every instance record, not only failures");
  sub->add_option("--max-seconds", c.max_seconds, "Abort after this much wall time");
  sub->add_option("--max-instances", c.max_instances, "Abort after this many instances");
}

std::string cache_path(const Common& c) {
  if (c.no_cache) return {};
  if (!c.cache.empty()) return c.cache;
  if (const char* env = std::getenv("LADDERPROD_CACHE")) return env;
  return {};
}

void load_cache(const Common& c) {
  const std::string path = cache_path(c);
  if (path.empty() || !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0) return;
  lp::KLEngine::shared().load(path);
}

void save_cache(const Common& c) {
  const std::string path = cache_path(c);
  if (path.empty()) return;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  lp::KLEngine::shared().save(path);
}

void emit(const lp::Json& record) { std::cout << record.dump() << '\n'; }

int finish(const lp::VerificationReport& report, const Common& c) {
  if (c.json) {
    for (const auto& line : report.json_lines(c.timing)) emit(line);
  } else {
    for (const auto& r : report.records) std::cout << r.dump() << '\n';
    std::cout << report.text_summary();
    if (c.timing) std::cout << "  (" << report.wall_seconds << " s)";
    std::cout << '\n';
  }
  return report.exit_code();
}

lp::SweepOptions sweep_options(const Common& c, int max_total, const std::string& mode,
                               int samples) {
  lp::SweepOptions o;
  o.mode = mode;
  o.max_total = max_total;
  o.window = c.window;
  o.seed = c.seed;
  o.samples = samples;
  o.workers = c.workers;
  o.keep_all = c.all_records;
  o.max_seconds = c.max_seconds;
  o.max_instances = c.max_instances;
  return o;
}

int cmd_decompose(const std::vector<std::string>& texts, bool with_indicator, const Common& c) {
  std::vector<lp::Multisegment> factors;
  for (const auto& t : texts) factors.push_back(lp::parse_multisegment(t));
  bool ladders = true;
  for (const auto& f : factors) ladders = ladders && lp::is_ladder(f);
  const lp::DecompositionResult r =
      ladders ? lp::product_of_ladders(factors) : lp::product_irreducibles(factors);
  const bool pair = ladders && factors.size() == 2 && !factors[0].empty() && !factors[1].empty();
  if (with_indicator && !pair) {
    throw lp::InvalidArgument("--indicator needs exactly two nonempty ladders");
  }
  for (const auto& [w, mult] : r.mult) {
    const lp::Multisegment m = r.multisegment(w);
    if (c.json) {
      lp::Json result = {{"w", lp::to_string(w)},
                         {"multisegment", lp::to_string(m)},
                         {"multiplicity", mult},
                         {"width", lp::width(m)},
                         {"avoids321", lp::avoids(w, lp::decreasing_pattern(3))},
                         {"avoids3412", lp::avoids(w, lp::Permutation({3, 4, 1, 2}))}};
      if (with_indicator) result["indicator"] = lp::indicator_multiplicity(m, factors[0], factors[1]);
      lp::Json inputs = lp::Json::array();
      for (const auto& t : factors) inputs.push_back(lp::to_string(t));
      emit({{"kind", "factor"}, {"inputs", inputs}, {"result", result}, {"agree", true}});
    } else {
      std::cout << lp::describe_factor(m, mult, w, r.lam, r.mu);
      if (with_indicator) std::cout << "  indicator=" << lp::indicator_multiplicity(m, factors[0], factors[1]);
      std::cout << '\n';
    }
  }
  return kOk;
}

int cmd_kl(const std::string& xt, const std::string& wt, int m, const Common& c) {
  const lp::Permutation w = lp::parse_permutation(wt, m);
  const lp::Permutation x = lp::parse_permutation(xt, w.size());
  const lp::IntPolynomial p = lp::KLEngine::shared().kl_poly(x, w);
  if (c.json) {
    emit({{"kind", "kl"},
          {"inputs", {{"x", lp::to_string(x)}, {"w", lp::to_string(w)}}},
          {"result", {{"polynomial", p.to_string()}, {"coefficients", p.coeffs()}}},
          {"agree", true}});
  } else {
    std::cout << p.to_string() << '\n';
  }
  return kOk;
}

int cmd_kl_table(int m, const Common& c) {
  lp::KLEngine& engine = lp::KLEngine::shared();
  engine.compute_all(m);
  if (c.json) {
    emit({{"kind", "kl-table"},
          {"inputs", {{"m", m}}},
          {"result", {{"columns", engine.computed_columns(m)}, {"stored_pairs", engine.stored_pairs(m)}}},
          {"agree", true}});
  } else {
    std::cout << "S_" << m << ": " << engine.computed_columns(m) << " columns, "
              << engine.stored_pairs(m) << " stored pairs\n";
  }
  return kOk;
}

int cmd_width(const std::string& text, const Common& c) {
  const lp::Multisegment m = lp::parse_multisegment(text);
  const int w = lp::width(m);
  if (c.json) {
    lp::Json cover = lp::Json::array();
    for (const auto& l : lp::min_ladder_cover(m)) cover.push_back(lp::to_string(l));
    emit({{"kind", "width"},
          {"inputs", lp::to_string(m)},
          {"result", {{"width", w}, {"ladder_cover", cover}}},
          {"agree", true}});
  } else {
    std::cout << w << '\n';
  }
  return kOk;
}

int cmd_jacquet(const std::string& text, const Common& c) {
  const lp::Multisegment m = lp::parse_multisegment(text);
  const auto pairs = lp::jacquet_pairs_ladder(m);
  if (c.json) {
    lp::Json list = lp::Json::array();
    for (const auto& p : pairs) list.push_back({lp::to_string(p.left), lp::to_string(p.right)});
    emit({{"kind", "jacquet"}, {"inputs", lp::to_string(m)}, {"result", list}, {"agree", true}});
  } else {
    std::cout << pairs.size() << " pairs\n";
    for (const auto& p : pairs) {
      std::cout << lp::to_string(p.left) << " (x) " << lp::to_string(p.right) << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompositions of products of ladder representations"};
  app.require_subcommand(1);
  Common common;

  auto* decompose = app.add_subcommand("decompose", "Decompose a product of irreducibles");
  std::vector<std::string> factor_texts;
  bool with_indicator = false;
  decompose->allow_extras();
  decompose->footer("Factors are multisegments such as [0,1]+[1,2], one per argument.");
  decompose->add_flag("--indicator", with_indicator, "Also print the indicator multiplicity");
  add_common(decompose, common);

  auto* conj = app.add_subcommand("verify-conjecture", "Sweep ladder pairs against the conjectural rule");
  int conj_total = 4;
  std::string mode = "exhaustive";
  int samples = 200;
  conj->add_option("--max-total", conj_total, "Total segment bound (exact total in random mode)")
      ->check(CLI::Range(2, 12));
  conj->add_option("--mode", mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
  conj->add_option("--samples", samples, "Instances in random mode")->check(CLI::PositiveNumber);
  add_common(conj, common);

  auto* widthsweep = app.add_subcommand("verify-width", "Width and pattern bounds for products of ladders");
  int factors = 3;
  int width_total = 6;
  widthsweep->add_option("--factors", factors, "Ladders per product")->check(CLI::Range(1, 4));
  widthsweep->add_option("--max-total", width_total, "Total segment bound")->check(CLI::Range(1, 9));
  add_common(widthsweep, common);

  auto* identity = app.add_subcommand("verify-identity", "Signed KL sums over odd/even interleavings");
  int n = 7;
  identity->add_option("n", n, "Rank")->required()->check(CLI::Range(1, 9));
  add_common(identity, common);

  auto* smooth = app.add_subcommand("verify-smooth", "Indicator rule on 321/3412-avoiding keys");
  bool all_x = false;
  int smooth_total = 5;
  smooth->add_option("--max-total", smooth_total, "Total segment bound")->check(CLI::Range(2, 8));
  smooth->add_flag("--all-x", all_x, "Bound the standard-module indicator for every x in S(lam,mu)");
  add_common(smooth, common);

  auto* census = app.add_subcommand("census", "Catalan, Fibonacci and smoothness counts in S_n");
  int kl_limit = 8;
  census->add_option("n", n, "Rank")->required()->check(CLI::Range(1, 9));
  census->add_option("--kl-limit", kl_limit, "Largest rank for the KL smoothness count");
  add_common(census, common);

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
  std::string xt, wt;
  int rank = -1;
  kl->add_option("x", xt, "Permutation, or e")->required();
  kl->add_option("w", wt, "Permutation")->required();
  kl->add_option("--rank", rank, "Rank when w is given as e");
  add_common(kl, common);

  auto* kl_table = app.add_subcommand("kl-table", "Compute every KL column of S_m");
  int table_m = 6;
  kl_table->add_option("m", table_m, "Rank")->required()->check(CLI::Range(1, 8));
  add_common(kl_table, common);

  auto* widthcmd = app.add_subcommand("width", "Width of a multisegment");
  std::string mtext;
  widthcmd->add_option("multisegment", mtext)->required();
  add_common(widthcmd, common);

  auto* jacquet = app.add_subcommand("jacquet", "Maximal-parabolic Jacquet pairs of a ladder");
  jacquet->add_option("multisegment", mtext)->required();
  add_common(jacquet, common);

  try {
    app.parse(argc, argv);
    if (decompose->parsed()) {
      factor_texts = decompose->remaining();
      if (factor_texts.empty()) throw CLI::RequiredError("factors");
      for (const auto& t : factor_texts) {
        if (t.size() > 1 && t[0] == '-' && t[1] != '[') throw CLI::ExtrasError({t});
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const bool uses_kl = !widthcmd->parsed() && !jacquet->parsed();
    if (uses_kl) load_cache(common);
    int code = kOk;
    if (decompose->parsed()) {
      code = cmd_decompose(factor_texts, with_indicator, common);
    } else if (conj->parsed()) {
      code = finish(lp::verify_conjecture(sweep_options(common, conj_total, mode, samples)), common);
    } else if (widthsweep->parsed()) {
      auto o = sweep_options(common, width_total, "exhaustive", samples);
      o.factors = factors;
      code = finish(lp::verify_width_bounds(o), common);
    } else if (identity->parsed()) {
      code = finish(lp::verify_identity(n, common.workers, common.all_records), common);
    } else if (smooth->parsed()) {
      auto o = sweep_options(common, smooth_total, "exhaustive", samples);
      o.all_x = all_x;
      code = finish(lp::verify_smooth(o), common);
    } else if (census->parsed()) {
      code = finish(lp::census_report(n, kl_limit), common);
    } else if (kl->parsed()) {
      code = cmd_kl(xt, wt, rank, common);
    } else if (kl_table->parsed()) {
      code = cmd_kl_table(table_m, common);
    } else if (widthcmd->parsed()) {
      code = cmd_width(mtext, common);
    } else if (jacquet->parsed()) {
      code = cmd_jacquet(mtext, common);
    }
    if (uses_kl && code != 3) save_cache(common);
    return code;
  } catch (const lp::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const lp::Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const lp::TheoryViolation& e) {
    std::cerr << "theory violation: " << e.what() << '\n';
    return kDisagreement;
  }
}

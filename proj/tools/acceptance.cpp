// Runs the acceptance checks and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hecke_oracle.hpp"
#include "ladderprod/properties.hpp"
#include "ladderprod/verify.hpp"

namespace lp = ladderprod;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool report_line(int criterion, bool pass, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << "  " << detail
            << std::endl;
  return pass;
}

std::string counts_of(const lp::VerificationReport& r, std::initializer_list<const char*> keys) {
  std::ostringstream os;
  os << r.command << "[";
  bool first = true;
  for (const char* k : keys) {
    os << (first ? "" : " ") << k << "=" << r.count(k);
    first = false;
  }
  os << (r.aborted ? " aborted" : "") << "]";
  return os.str();
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  bool quick = false;
  int workers = 1;
  app.add_flag("--quick", quick, "Reduced scopes for routine test runs");
  app.add_option("--workers", workers, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  lp::KLEngine& engine = lp::KLEngine::shared();
  bool all = true;

  // 1 and 3 and the two-ladder half of 4 share one sweep.
  lp::SweepOptions sweep;
  sweep.max_total = quick ? 4 : 6;
  sweep.window = quick ? 6 : 8;
  sweep.workers = workers;
  auto t0 = Clock::now();
  const lp::VerificationReport conj = lp::verify_conjecture(sweep, engine);
  const double conj_time = since(t0);
  lp::SweepOptions random = sweep;
  random.mode = "random";
  random.max_total = 8;
  random.window = 8;
  random.samples = 200;
  random.seed = 20240601;
  const lp::VerificationReport rnd = lp::verify_conjecture(random, engine);
  const lp::VerificationReport rnd_again = lp::verify_conjecture(random, engine);
  const bool reproducible = rnd.json_lines() == rnd_again.json_lines();
  all &= report_line(
      1,
      conj.ok() && conj.count("conjecture_mismatches") == 0 && rnd.ok() &&
          rnd.count("instances") >= 200 && reproducible,
      "exhaustive total<=" + std::to_string(sweep.max_total) + " window " +
          std::to_string(sweep.window) + " " +
          counts_of(conj, {"instances", "keys", "conjecture_mismatches"}) + " in " +
          secs(conj_time) + "; random total=8 " +
          counts_of(rnd, {"instances", "conjecture_mismatches"}) +
          (reproducible ? " reproducible" : " NOT reproducible"));

  t0 = Clock::now();
  bool identity_ok = true;
  std::int64_t avoiders7 = 0;
  std::string identity_detail;
  const int identity_max = quick ? 7 : 8;
  for (int n = 1; n <= identity_max; ++n) {
    const lp::VerificationReport r = lp::verify_identity(n, workers, false, engine);
    identity_ok &= r.ok();
    if (n == 7) avoiders7 = r.count("avoiders");
    identity_detail += " n=" + std::to_string(n) + ":" + std::to_string(r.count("avoiders")) +
                       "/" + std::to_string(r.count("disagreements"));
  }
  all &= report_line(2, identity_ok && avoiders7 == 429,
                     "sums equal 1 (avoiders/failures)" + identity_detail + " in " + secs(since(t0)));

  all &= report_line(3, conj.count("multiplicity_violations") == 0 && conj.count("errors") == 0,
                     counts_of(conj, {"constituents", "multiplicity_violations"}));

  lp::SweepOptions triple;
  triple.factors = 3;
  triple.max_total = quick ? 5 : 6;
  triple.window = quick ? 5 : 8;
  triple.workers = workers;
  t0 = Clock::now();
  const lp::VerificationReport three = lp::verify_width_bounds(triple, engine);
  all &= report_line(
      4,
      conj.count("width_violations") == 0 && conj.count("pattern_violations") == 0 && three.ok(),
      "two ladders " + counts_of(conj, {"width_violations", "pattern_violations"}) +
          "; three ladders total<=" + std::to_string(triple.max_total) + " window " +
          std::to_string(triple.window) + " " +
          counts_of(three, {"instances", "constituents", "width_violations", "pattern_violations"}) +
          " in " + secs(since(t0)));

  lp::SweepOptions smooth;
  smooth.max_total = quick ? 4 : 5;
  smooth.window = quick ? 6 : 8;
  smooth.all_x = true;
  smooth.workers = workers;
  t0 = Clock::now();
  const lp::VerificationReport sm = lp::verify_smooth(smooth, engine);
  all &= report_line(5, sm.ok() && sm.count("standard_unsupported") == 0,
                     "total<=" + std::to_string(smooth.max_total) + " window " +
                         std::to_string(smooth.window) + " " +
                         counts_of(sm, {"instances", "smooth_keys", "skipped",
                                        "indicator_mismatches", "standard_checks",
                                        "standard_bound_violations"}) +
                         " in " + secs(since(t0)));

  {
    bool ok = true;
    std::ostringstream detail;
    const lp::Permutation p3412({3, 4, 1, 2}), p4231({4, 2, 3, 1});
    for (int m = 1; m <= 6; ++m) {
      std::set<lp::Permutation> smooth_kl, avoiders;
      for (const auto& w : lp::all_permutations(m)) {
        if (engine.kl_at_one(lp::Permutation::identity(m), w) == 1) smooth_kl.insert(w);
      }
      for (const auto& w : lp::enumerate_avoiders(m, {p3412, p4231})) avoiders.insert(w);
      ok &= smooth_kl == avoiders;
      detail << " S_" << m << ":" << smooth_kl.size();
    }
    const hecke_oracle::Oracle oracle(4);
    const std::int64_t o3412 = oracle.at_one({1, 2, 3, 4}, {3, 4, 1, 2});
    const std::int64_t o4231 = oracle.at_one({1, 2, 3, 4}, {4, 2, 3, 1});
    const lp::Permutation e4 = lp::Permutation::identity(4);
    ok &= o3412 == 2 && o4231 == 2 && engine.kl_at_one(e4, p3412) == 2 &&
          engine.kl_at_one(e4, p4231) == 2;
    detail << "; oracle P_e,3412(1)=" << o3412 << " P_e,4231(1)=" << o4231;

    lp::KLEngine cold;
    t0 = Clock::now();
    cold.compute_all(6);
    const double cold_time = since(t0);
    const auto path =
        (std::filesystem::temp_directory_path() / ("ladderprod-acceptance-" +
                                                   std::to_string(Clock::now().time_since_epoch().count()) + ".cache"))
            .string();
    cold.save(path);
    lp::KLEngine warm;
    t0 = Clock::now();
    warm.load(path);
    const double warm_time = since(t0);
    std::filesystem::remove(path);
    const lp::SymmetricGroup& g6 = lp::symmetric_group(6);
    bool same = warm.computed_columns(6) == g6.order();
    for (std::uint32_t w = 0; w < g6.order() && same; w += 7) {
      for (std::uint32_t x = 0; x < g6.order(); x += 5) {
        same = same && warm.kl_poly(g6.element(x), g6.element(w)) ==
                           cold.kl_poly(g6.element(x), g6.element(w));
      }
    }
    ok &= same && cold_time <= 120.0 && warm_time <= 1.0;
    detail << "; S_6 cold " << secs(cold_time) << " warm " << secs(warm_time)
           << (same ? "" : " cache mismatch");
    all &= report_line(6, ok, "smooth counts" + detail.str());
  }

  {
    bool ok = true;
    std::ostringstream detail;
    for (int n = 1; n <= 9; ++n) {
      const lp::CensusRow row = lp::census(n, 8, engine);
      ok &= row.agree();
      detail << " n=" << n << ":" << row.avoid_321 << "/" << row.avoid_321_3412;
    }
    all &= report_line(7, ok, "C_n/F_{2n-1}" + detail.str());
  }

  {
    t0 = Clock::now();
    const auto dil = lp::check_dilworth(quick ? 6 : 8, quick ? 4 : 5);
    const auto shift = lp::check_shift_invariance(4, 6, 2, engine);
    const auto coords = lp::check_coordinate_independence(5, quick ? 100 : 500, 7, engine);
    const auto jac = lp::check_jacquet_properties(5, 8);
    all &= report_line(
        8, dil.ok() && shift.ok() && coords.ok() && jac.ok(),
        counts_of(dil, {"instances", "disagreements"}) + " " +
            counts_of(shift, {"instances", "keys", "disagreements"}) + " " +
            counts_of(coords, {"instances", "keys", "disagreements"}) + " " +
            counts_of(jac, {"instances", "pairs", "disagreements"}) + " in " + secs(since(t0)));
  }

  return all ? 0 : 1;
}

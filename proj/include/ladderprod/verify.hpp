#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "ladderprod/kl.hpp"
#include "ladderprod/multisegment.hpp"

namespace ladderprod {

using Json = nlohmann::ordered_json;

/// All ladders with k segments whose support lies in [0, window-1].
std::vector<Multisegment> ladders_in_window(int k, int window);

/// Shift every segment by -min support point.
Multisegment translate_to_origin(const Multisegment& m, int shift);

/// Unordered tuples of nonempty ladders in [0, window-1] with total segment
/// count <= max_total and minimal support point 0. Ordered by factor sizes,
/// then by position in ladders_in_window.
std::vector<std::vector<Multisegment>> enumerate_ladder_tuples(int factors, int max_total,
                                                               int window);

/// Uniform integer in [0, n) by rejection on raw 64-bit draws.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Ladder with k segments, uniform over valid (lam, mu) in [0, window-1].
Multisegment random_ladder(std::mt19937_64& rng, int k, int window);

/// Pair of ladders with exactly `total` segments, translated to origin.
std::vector<Multisegment> random_ladder_pair(std::mt19937_64& rng, int total, int window);

struct SweepOptions {
  std::string mode = "exhaustive";  // or "random"
  int max_total = 4;
  int window = 6;
  int factors = 2;
  std::uint64_t seed = 1;
  int samples = 200;
  int workers = 1;
  bool keep_all = false;
  bool all_x = false;
  double max_seconds = 0;
  std::size_t max_instances = 0;
};

/// Header, instance records and summary of one verification command.
/// Instance records are kept for disagreements only unless keep_all is set.
struct VerificationReport {
  std::string command;
  Json scope = Json::object();
  std::vector<Json> records;
  std::map<std::string, std::int64_t> counts;
  bool aborted = false;
  double wall_seconds = 0;

  std::int64_t count(const std::string& key) const;
  std::int64_t violations() const { return count("disagreements"); }
  bool ok() const { return violations() == 0 && !aborted; }
  int exit_code() const { return aborted ? 3 : (violations() > 0 ? 1 : 0); }
  std::vector<Json> json_lines(bool timing = false) const;
  std::string text_summary() const;
};

VerificationReport verify_conjecture(const SweepOptions& opt, KLEngine& engine = KLEngine::shared());

/// Products of opt.factors ladders: every constituent has width <= factors
/// and avoids the decreasing pattern of length factors+1.
VerificationReport verify_width_bounds(const SweepOptions& opt,
                                       KLEngine& engine = KLEngine::shared());

VerificationReport verify_identity(int n, int workers = 1, bool keep_all = false,
                                   KLEngine& engine = KLEngine::shared());

VerificationReport verify_smooth(const SweepOptions& opt, KLEngine& engine = KLEngine::shared());

struct CensusRow {
  int n = 0;
  std::int64_t avoid_321 = 0;
  std::int64_t avoid_321_3412 = 0;
  std::int64_t smooth_kl = -1;  // -1 when n exceeds the KL limit
  std::int64_t avoid_3412_4231 = 0;
  std::int64_t catalan = 0;
  std::int64_t fibonacci = 0;  // F_{2n-1}
  bool agree() const;
};

CensusRow census(int n, int kl_limit = 8, KLEngine& engine = KLEngine::shared());
VerificationReport census_report(int n, int kl_limit = 8, KLEngine& engine = KLEngine::shared());

/// One line of a decomposition listing.
std::string describe_factor(const Multisegment& m, std::int64_t mult, const Permutation& w,
                            const BlockStructure& lam, const BlockStructure& mu);

/// Runs fn(i) for i in [0, count) on a pool of threads. Returns false if the
/// deadline passed before every index was handed out.
bool run_indexed(std::size_t count, int workers, double max_seconds,
                 const std::function<void(std::size_t, int)>& fn);

}  // namespace ladderprod

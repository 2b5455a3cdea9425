#include "ladderprod/jacquet.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "ladderprod/coordinates.hpp"

namespace ladderprod {

std::vector<JacquetPair> jacquet_pairs_segment(const Segment& d) {
  if (d.is_trivial()) return {JacquetPair{}};
  std::vector<JacquetPair> out;
  for (int c = d.end; c >= d.begin - 1; --c) {
    out.push_back({Multisegment::from_segments_dropping_trivial({Segment(c + 1, d.end)}),
                   Multisegment::from_segments_dropping_trivial({Segment(d.begin, c)})});
  }
  return out;
}

namespace {

std::vector<JacquetPair> ladder_pairs_unchecked(const Multisegment& m) {
  const int k = static_cast<int>(m.size());
  // canonical order of a ladder is increasing ends; walk it backwards
  std::vector<Segment> by_end(m.segments().rbegin(), m.segments().rend());
  std::vector<JacquetPair> out;
  std::vector<int> c(k);
  std::function<void(int, int)> rec = [&](int j, int bound) {
    if (j == k) {
      std::vector<Segment> left, right;
      for (int t = 0; t < k; ++t) {
        left.emplace_back(c[t], by_end[t].end);
        right.emplace_back(by_end[t].begin, c[t] - 1);
      }
      out.push_back({Multisegment::from_segments_dropping_trivial(left),
                     Multisegment::from_segments_dropping_trivial(right)});
      return;
    }
    const int hi = std::min(by_end[j].end + 1, bound - 1);
    for (int v = hi; v >= by_end[j].begin; --v) {
      c[j] = v;
      rec(j + 1, v);
    }
  };
  rec(0, by_end.empty() ? 0 : by_end[0].end + 2);
  return out;
}

// Breakpoint-shape test, inputs already known to be generic ladders.
bool two_column_shape(const Segment& d, const Segment& dhat, const Multisegment& a_side,
                      const Multisegment& b_side) {
  const int a = d.begin;
  const int b = d.end;
  const int c = dhat.end;
  if (c == b) {
    const Multisegment single{d};
    return a_side == single && b_side == single;
  }
  Multisegment rest = b_side;
  if (!dhat.is_trivial()) {
    if (rest.count(dhat) == 0) return false;
    rest.remove(dhat);
  }
  if (a_side.empty()) return false;
  struct Piece {
    Segment s;
    int owner;
  };
  std::vector<Piece> pieces;
  for (const auto& s : a_side) pieces.push_back({s, 0});
  for (const auto& s : rest) pieces.push_back({s, 1});
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& x, const Piece& y) { return x.s.begin < y.s.begin; });
  if (pieces.front().owner != 0 || pieces.front().s.begin != a) return false;
  if (pieces.front().s.end + 1 <= c + 1) return false;
  int next = a;
  int owner = 0;
  for (const auto& p : pieces) {
    if (p.s.begin != next || p.owner != owner) return false;
    next = p.s.end + 1;
    owner = 1 - owner;
  }
  return next == b + 1;
}

bool two_column(const Segment& d, const Segment& dhat, const Multisegment& n1,
                const Multisegment& n2) {
  if (!is_generic(n1) || !is_generic(n2)) return false;
  return two_column_shape(d, dhat, n1, n2) || two_column_shape(d, dhat, n2, n1);
}

// Supports are dense arrays over a translated window.
constexpr int kWindow = 64;
using Profile = std::array<std::uint8_t, kWindow>;

void add_profile(Profile& p, const Segment& s, int origin) {
  for (int x = s.begin; x <= s.end; ++x) ++p[x - origin];
}

Profile profile(const Multisegment& m, int origin) {
  Profile p{};
  for (const auto& s : m) add_profile(p, s, origin);
  return p;
}

bool profile_leq(const Profile& a, const Profile& b) {
  for (int i = 0; i < kWindow; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

void append_key(std::string& key, const Multisegment& m, int origin) {
  for (const auto& s : m) {
    key += static_cast<char>(s.begin - origin + 1);
    key += static_cast<char>(s.end - origin + 1);
  }
  key += '|';
}

struct LeftInfo {
  const JacquetPair* pair;
  Profile left;
};

class IndicatorMemo {
 public:
  static constexpr std::size_t kMaxEntries = 1u << 22;

  int ladder(const Multisegment& sigma, const Multisegment& m1, const Multisegment& m2) {
    if (sigma.empty()) return m1.empty() && m2.empty() ? 1 : 0;
    const int origin = sigma[0].begin;
    Profile have{};
    for (const auto* m : {&m1, &m2}) {
      for (const auto& s : *m) {
        if (s.begin < origin || s.end >= origin + kWindow) return 0;
        add_profile(have, s, origin);
      }
    }
    if (have != profile(sigma, origin)) return 0;

    const bool swap = m2 < m1;
    const Multisegment& p = swap ? m2 : m1;
    const Multisegment& q = swap ? m1 : m2;
    std::string key;
    append_key(key, sigma, origin);
    append_key(key, p, origin);
    append_key(key, q, origin);
    auto hit = ladder_memo_.find(key);
    if (hit != ladder_memo_.end()) return hit->second;

    std::size_t first = 0;
    while (first < sigma.size() && sigma[first].begin == origin) ++first;
    int result = 0;
    if (first <= 2) {
      const Segment delta = sigma[first - 1];
      const Segment dhat = first == 2 ? sigma[0] : Segment::trivial(origin);
      std::vector<Segment> rest_segments(sigma.begin() + static_cast<long>(first), sigma.end());
      const Multisegment rest(rest_segments);
      Profile target{};
      add_profile(target, delta, origin);
      if (!dhat.is_trivial()) add_profile(target, dhat, origin);
      const auto l1 = usable(p, target, origin);
      const auto l2 = usable(q, target, origin);
      int sum = 0;
      for (const auto& u : l1) {
        for (const auto& v : l2) {
          bool ok = true;
          for (int i = 0; i < kWindow && ok; ++i) ok = u.left[i] + v.left[i] == target[i];
          if (!ok || !two_column(delta, dhat, u.pair->left, v.pair->left)) continue;
          sum += ladder(rest, u.pair->right, v.pair->right);
        }
      }
      if (sum > 1) {
        throw TheoryViolation("indicator multiplicity " + std::to_string(sum) + " > 1 for sigma=" +
                              to_string(sigma) + ", m1=" + to_string(m1) + ", m2=" + to_string(m2));
      }
      result = sum;
    }
    if (ladder_memo_.size() >= kMaxEntries) ladder_memo_.clear();
    ladder_memo_.emplace(std::move(key), static_cast<std::int8_t>(result));
    return result;
  }

  std::int64_t standard(const Multisegment& sigma, std::vector<Segment> factors) {
    std::sort(factors.begin(), factors.end());
    factors.erase(std::remove_if(factors.begin(), factors.end(),
                                 [](const Segment& s) { return s.is_trivial(); }),
                  factors.end());
    if (sigma.empty()) return factors.empty() ? 1 : 0;
    const int origin = sigma[0].begin;
    Profile have{};
    for (const auto& s : factors) {
      if (s.begin < origin || s.end >= origin + kWindow) return 0;
      add_profile(have, s, origin);
    }
    if (have != profile(sigma, origin)) return 0;

    std::string key;
    append_key(key, sigma, origin);
    append_key(key, Multisegment(factors), origin);
    auto hit = standard_memo_.find(key);
    if (hit != standard_memo_.end()) return hit->second;

    std::size_t first = 0;
    while (first < sigma.size() && sigma[first].begin == origin) ++first;
    if (first > 2) throw Unsupported("indicator blocks with three or more segments");
    const Segment delta = sigma[first - 1];
    const Segment dhat = first == 2 ? sigma[0] : Segment::trivial(origin);
    const Multisegment rest(std::vector<Segment>(sigma.begin() + static_cast<long>(first), sigma.end()));
    Profile target{};
    add_profile(target, delta, origin);
    if (!dhat.is_trivial()) add_profile(target, dhat, origin);

    std::int64_t sum = 0;
    std::vector<Segment> lefts, rights;
    Profile acc{};
    std::function<void(std::size_t)> rec = [&](std::size_t f) {
      if (f == factors.size()) {
        if (acc != target || !chains_match(delta, dhat, lefts)) return;
        sum += standard(rest, rights);
        return;
      }
      const Segment& s = factors[f];
      for (int c = s.end; c >= s.begin - 1; --c) {
        const Segment left(c + 1, s.end);
        bool fits = true;
        for (int x = left.begin; x <= left.end && fits; ++x) fits = acc[x - origin] < target[x - origin];
        if (!fits) continue;
        for (int x = left.begin; x <= left.end; ++x) ++acc[x - origin];
        if (!left.is_trivial()) lefts.push_back(left);
        rights.emplace_back(s.begin, c);
        rec(f + 1);
        rights.pop_back();
        if (!left.is_trivial()) lefts.pop_back();
        for (int x = left.begin; x <= left.end; ++x) --acc[x - origin];
      }
    };
    rec(0);
    if (standard_memo_.size() >= kMaxEntries) standard_memo_.clear();
    standard_memo_.emplace(std::move(key), sum);
    return sum;
  }

  void clear() {
    ladder_memo_.clear();
    standard_memo_.clear();
    pair_cache_.clear();
  }
  std::size_t size() const { return ladder_memo_.size() + standard_memo_.size(); }

 private:
  // Left parts sorted into two chains concatenating exactly to delta and dhat.
  static bool chains_match(const Segment& delta, const Segment& dhat, std::vector<Segment> lefts) {
    std::sort(lefts.begin(), lefts.end());
    std::array<int, 2> next{delta.begin, dhat.begin};
    std::array<int, 2> stop{delta.end + 1, dhat.end + 1};
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
      if (i == lefts.size()) return next == stop;
      for (int chain = 0; chain < 2; ++chain) {
        if (next[chain] != lefts[i].begin || lefts[i].end + 1 > stop[chain]) continue;
        const int saved = next[chain];
        next[chain] = lefts[i].end + 1;
        if (place(i + 1)) return true;
        next[chain] = saved;
      }
      return false;
    };
    return place(0);
  }

  std::vector<LeftInfo> usable(const Multisegment& m, const Profile& target, int origin) {
    const std::string key = to_string(m);
    auto it = pair_cache_.find(key);
    if (it == pair_cache_.end()) {
      if (pair_cache_.size() >= kMaxEntries / 16) pair_cache_.clear();
      it = pair_cache_.emplace(key, std::make_unique<std::vector<JacquetPair>>(ladder_pairs_unchecked(m))).first;
    }
    std::vector<LeftInfo> out;
    for (const auto& pair : *it->second) {
      bool inside = true;
      for (const auto& s : pair.left) inside = inside && s.begin >= origin && s.end < origin + kWindow;
      if (!inside) continue;
      Profile p = profile(pair.left, origin);
      if (profile_leq(p, target)) out.push_back({&pair, p});
    }
    return out;
  }

  std::unordered_map<std::string, std::int8_t> ladder_memo_;
  std::unordered_map<std::string, std::int64_t> standard_memo_;
  std::unordered_map<std::string, std::unique_ptr<std::vector<JacquetPair>>> pair_cache_;
};

IndicatorMemo& thread_memo() {
  thread_local IndicatorMemo memo;
  return memo;
}

void check_span(const Multisegment& sigma) {
  int lo = sigma[0].begin;
  int hi = lo;
  for (const auto& s : sigma) hi = std::max(hi, s.end);
  if (hi - lo >= kWindow) throw Unsupported("support span of sigma exceeds 64 points");
}

void check_two_column_args(const Segment& d, const Segment& dhat) {
  if (d.is_trivial()) throw InvalidArgument("two-column target needs a nontrivial segment");
  if (dhat.begin != d.begin || dhat.end < d.begin - 1 || dhat.end > d.end) {
    throw InvalidArgument("second column must be [a,c] with a-1 <= c <= b");
  }
}

}  // namespace

std::vector<JacquetPair> jacquet_pairs_ladder(const Multisegment& m) {
  if (!is_ladder(m)) throw InvalidArgument(to_string(m) + " is not a ladder");
  return ladder_pairs_unchecked(m);
}

int match_two_column(const Segment& d, const Segment& dhat, const Multisegment& n1,
                     const Multisegment& n2) {
  check_two_column_args(d, dhat);
  for (const auto* n : {&n1, &n2}) {
    if (!is_ladder(*n) || !is_generic(*n)) {
      throw InvalidArgument(to_string(*n) + " is not a generic ladder");
    }
  }
  return two_column(d, dhat, n1, n2) ? 1 : 0;
}

int indicator_multiplicity(const Multisegment& sigma, const Multisegment& m1,
                           const Multisegment& m2) {
  if (!is_ladder(m1) || !is_ladder(m2)) {
    throw InvalidArgument("indicator_multiplicity needs ladder factors");
  }
  if (sigma.empty()) throw InvalidArgument("indicator_multiplicity needs a nonempty sigma");
  check_span(sigma);
  return thread_memo().ladder(sigma, m1, m2);
}

std::int64_t indicator_multiplicity_standard(const Multisegment& sigma,
                                             const std::vector<Segment>& factors) {
  if (sigma.empty()) throw InvalidArgument("indicator_multiplicity_standard needs a nonempty sigma");
  check_span(sigma);
  for (const auto& block : indicator_shape(sigma)) {
    if (block.size() >= 3) throw Unsupported("indicator blocks with three or more segments");
  }
  return thread_memo().standard(sigma, factors);
}

std::int64_t indicator_multiplicity_standard(const Multisegment& sigma, const BlockStructure& lam,
                                             const BlockStructure& mu, const Permutation& x) {
  if (!in_S(x, lam, mu)) throw InvalidArgument("x = " + to_string(x) + " is not in S(lambda,mu)");
  const Multisegment m = build_multisegment(lam, mu, x);
  return indicator_multiplicity_standard(sigma, m.segments());
}

void clear_indicator_memo() { thread_memo().clear(); }

std::size_t indicator_memo_size() { return thread_memo().size(); }

}  // namespace ladderprod

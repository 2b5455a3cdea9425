#include "ladderprod/multisegment.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <functional>

namespace ladderprod {

Multisegment::Multisegment(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (const auto& s : segments_) {
    if (s.is_trivial()) {
      throw InvalidArgument("multisegment entries must be nontrivial, got [" +
                            std::to_string(s.begin) + "," + std::to_string(s.end) + "]");
    }
  }
  std::sort(segments_.begin(), segments_.end());
}

Multisegment Multisegment::from_segments_dropping_trivial(const std::vector<Segment>& segments) {
  std::vector<Segment> kept;
  kept.reserve(segments.size());
  for (const auto& s : segments) {
    if (s.end >= s.begin) {
      kept.push_back(s);
    } else if (s.end < s.begin - 1) {
      throw InvalidArgument("segment [" + std::to_string(s.begin) + "," + std::to_string(s.end) +
                            "] is not defined");
    }
  }
  return Multisegment(std::move(kept));
}

std::size_t Multisegment::count(const Segment& s) const {
  auto [lo, hi] = std::equal_range(segments_.begin(), segments_.end(), s);
  return static_cast<std::size_t>(hi - lo);
}

std::vector<std::pair<Segment, int>> Multisegment::entries() const {
  std::vector<std::pair<Segment, int>> out;
  for (const auto& s : segments_) {
    if (!out.empty() && out.back().first == s) {
      ++out.back().second;
    } else {
      out.emplace_back(s, 1);
    }
  }
  return out;
}

bool Multisegment::contains(const Multisegment& other) const {
  return std::includes(segments_.begin(), segments_.end(), other.segments_.begin(),
                       other.segments_.end());
}

int Multisegment::degree() const {
  int total = 0;
  for (const auto& s : segments_) total += s.length();
  return total;
}

Multisegment& Multisegment::operator+=(const Multisegment& other) {
  std::vector<Segment> merged;
  merged.reserve(segments_.size() + other.segments_.size());
  std::merge(segments_.begin(), segments_.end(), other.segments_.begin(), other.segments_.end(),
             std::back_inserter(merged));
  segments_ = std::move(merged);
  return *this;
}

Multisegment& Multisegment::add(const Segment& s) {
  if (s.is_trivial()) return *this;
  segments_.insert(std::upper_bound(segments_.begin(), segments_.end(), s), s);
  return *this;
}

Multisegment& Multisegment::remove(const Segment& s) {
  if (s.is_trivial()) return *this;
  auto it = std::lower_bound(segments_.begin(), segments_.end(), s);
  if (it == segments_.end() || *it != s) {
    throw InvalidArgument("segment " + to_string(s) + " is not an entry of " + to_string(*this));
  }
  segments_.erase(it);
  return *this;
}

Multisegment operator-(const Multisegment& a, const Multisegment& b) {
  if (!a.contains(b)) {
    throw InvalidArgument(to_string(b) + " is not contained in " + to_string(a));
  }
  std::vector<Segment> diff;
  std::set_difference(a.segments_.begin(), a.segments_.end(), b.segments_.begin(),
                      b.segments_.end(), std::back_inserter(diff));
  Multisegment out;
  out.segments_ = std::move(diff);
  return out;
}

SupportVector support(const Segment& s) {
  SupportVector out;
  for (int p = s.begin; p <= s.end; ++p) out[p] += 1;
  return out;
}

SupportVector support(const Multisegment& m) {
  SupportVector out;
  for (const auto& s : m) {
    for (int p = s.begin; p <= s.end; ++p) out[p] += 1;
  }
  return out;
}

void add_support(SupportVector& acc, const SupportVector& more) {
  for (const auto& [p, c] : more) acc[p] += c;
}

bool is_ladder(const Multisegment& m) {
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (!(m[i - 1].begin < m[i].begin && m[i - 1].end < m[i].end)) return false;
  }
  return true;
}

bool is_generic(const Multisegment& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (is_linked(m[i], m[j])) return false;
    }
  }
  return true;
}

namespace {

// Strict part of the ladder order: both endpoints strictly increase.
bool ladder_below(const Segment& a, const Segment& b) { return a.begin < b.begin && a.end < b.end; }

// Maximum matching in the comparability graph, left copy -> right copy.
// Returns successor[i] = j when i is followed by j in its chain, or -1.
std::vector<int> chain_successors(const Multisegment& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> match_right(n, -1);
  std::vector<int> successor(n, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int i) -> bool {
    for (int j = 0; j < n; ++j) {
      if (!ladder_below(m[i], m[j]) || seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] < 0 || augment(match_right[j])) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    seen.assign(n, 0);
    augment(i);
  }
  for (int j = 0; j < n; ++j) {
    if (match_right[j] >= 0) successor[match_right[j]] = j;
  }
#ifndef NDEBUG
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || ladder_below(m[i], m[j]) || ladder_below(m[j], m[i])) continue;
      assert(m[i].is_inside(m[j]) || m[j].is_inside(m[i]));
    }
  }
#endif
  return successor;
}

}  // namespace

int width_by_chain_cover(const Multisegment& m) {
  const auto successor = chain_successors(m);
  const auto matched = std::count_if(successor.begin(), successor.end(), [](int j) { return j >= 0; });
  return static_cast<int>(m.size()) - static_cast<int>(matched);
}

int width_by_nested_chain(const Multisegment& m) {
  std::vector<Segment> order(m.begin(), m.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const Segment& a, const Segment& b) { return a.length() < b.length(); });
  std::vector<int> best(order.size(), 1);
  int result = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (order[j].is_inside(order[i])) best[i] = std::max(best[i], best[j] + 1);
    }
    result = std::max(result, best[i]);
  }
  return result;
}

int width(const Multisegment& m) {
  const int cover = width_by_chain_cover(m);
  const int nested = width_by_nested_chain(m);
  if (cover != nested) {
    throw TheoryViolation("width routes disagree on " + to_string(m) + ": chain cover " +
                          std::to_string(cover) + " vs nested chain " + std::to_string(nested));
  }
  return cover;
}

std::vector<Multisegment> min_ladder_cover(const Multisegment& m) {
  const auto successor = chain_successors(m);
  const int n = static_cast<int>(m.size());
  std::vector<char> has_predecessor(n, 0);
  for (int j : successor) {
    if (j >= 0) has_predecessor[j] = 1;
  }
  std::vector<Multisegment> cover;
  for (int i = 0; i < n; ++i) {
    if (has_predecessor[i]) continue;
    std::vector<Segment> chain;
    for (int k = i; k >= 0; k = successor[k]) chain.push_back(m[k]);
    cover.emplace_back(std::move(chain));
  }
  return cover;
}

std::vector<Multisegment> indicator_shape(const Multisegment& m) {
  if (m.empty()) throw InvalidArgument("empty multisegment has no indicator");
  std::vector<Multisegment> blocks;
  std::vector<Segment> current;
  for (const auto& s : m) {
    if (!current.empty() && current.front().begin != s.begin) {
      blocks.emplace_back(std::move(current));
      current.clear();
    }
    current.push_back(s);
  }
  blocks.emplace_back(std::move(current));
  return blocks;
}

std::string to_string(const Segment& s) {
  return "[" + std::to_string(s.begin) + "," + std::to_string(s.end) + "]";
}

std::string to_string(const Multisegment& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& s : m) {
    if (!out.empty()) out += "+";
    out += to_string(s);
  }
  return out;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InvalidArgument("bad integer '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

Segment parse_compact_segment(const std::string& s) {
  if (s.size() < 5 || s.front() != '[' || s.back() != ']') {
    throw InvalidArgument("expected segment of the form [a,b], got '" + s + "'");
  }
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
    throw InvalidArgument("expected segment of the form [a,b], got '" + s + "'");
  }
  const int a = parse_int(std::string_view(s).substr(1, comma - 1), s);
  const int b = parse_int(std::string_view(s).substr(comma + 1, s.size() - comma - 2), s);
  if (a > b) throw InvalidArgument("segment " + s + " needs begin <= end");
  return Segment(a, b);
}

}  // namespace

Segment parse_segment(std::string_view text) { return parse_compact_segment(strip_spaces(text)); }

Multisegment parse_multisegment(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw InvalidArgument("empty multisegment text (use \"0\")");
  if (s == "0") return {};
  std::vector<Segment> segments;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto close = s.find(']', pos);
    if (close == std::string::npos) throw InvalidArgument("unterminated segment in '" + s + "'");
    segments.push_back(parse_compact_segment(s.substr(pos, close - pos + 1)));
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != '+' || pos + 1 == s.size()) {
        throw InvalidArgument("expected '+' between segments in '" + s + "'");
      }
      ++pos;
    }
  }
  return Multisegment(std::move(segments));
}

}  // namespace ladderprod

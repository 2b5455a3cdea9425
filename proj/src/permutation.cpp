#include "ladderprod/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace ladderprod {

Permutation::Permutation(const std::vector<int>& one_line) {
  const int m = static_cast<int>(one_line.size());
  if (m > kMaxSize) throw InvalidArgument("permutations are limited to 16 letters");
  std::array<bool, kMaxSize> seen{};
  for (int i = 0; i < m; ++i) {
    const int v = one_line[i];
    if (v < 1 || v > m || seen[v - 1]) {
      throw InvalidArgument("not a permutation of 1.." + std::to_string(m));
    }
    seen[v - 1] = true;
    img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  n_ = static_cast<std::uint8_t>(m);
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

Permutation Permutation::longest(int m) {
  std::vector<int> v(m);
  for (int i = 0; i < m; ++i) v[i] = m - i;
  return Permutation(v);
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = img_[i] + 1;
  return out;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) inv += img_[i] > img_[j];
  }
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.n_ = n_;
  for (int i = 0; i < n_; ++i) out.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n_ != b.n_) throw InvalidArgument("cannot compose permutations of different sizes");
  Permutation out;
  out.n_ = a.n_;
  for (int i = 0; i < a.n_; ++i) out.img_[i] = a.img_[b.img_[i]];
  return out;
}

Permutation Permutation::left_mul_simple(int i) const {
  Permutation out = *this;
  for (int p = 0; p < n_; ++p) {
    if (out.img_[p] == i - 1) {
      out.img_[p] = static_cast<std::uint8_t>(i);
    } else if (out.img_[p] == i) {
      out.img_[p] = static_cast<std::uint8_t>(i - 1);
    }
  }
  return out;
}

Permutation Permutation::right_mul_simple(int i) const {
  Permutation out = *this;
  std::swap(out.img_[i - 1], out.img_[i]);
  return out;
}

bool Permutation::has_left_descent(int i) const {
  // value i+1 appears before value i
  for (int p = 0; p < n_; ++p) {
    if (img_[p] == i - 1) return false;
    if (img_[p] == i) return true;
  }
  return false;
}

BlockStructure::BlockStructure(std::vector<int> values) : values_(std::move(values)) {
  if (!std::is_sorted(values_.begin(), values_.end())) {
    throw InvalidArgument("block structure must be weakly increasing");
  }
}

bool BlockStructure::is_strict() const {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

std::vector<std::vector<int>> BlockStructure::blocks() const {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= size(); ++i) {
    if (i == 1 || !joined(i - 1)) out.emplace_back();
    out.back().push_back(i);
  }
  return out;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  const int m = x.size();
  if (w.size() != m) throw InvalidArgument("bruhat_leq needs permutations of equal size");
  // count[j] = |{i' <= i : image >= j}| for the current prefix
  std::array<int, Permutation::kMaxSize + 1> cx{}, cw{};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= x.at0(i); ++j) ++cx[j];
    for (int j = 0; j <= w.at0(i); ++j) ++cw[j];
    for (int j = 0; j < m; ++j) {
      if (cx[j] > cw[j]) return false;
    }
  }
  return true;
}

namespace {

bool contains_from(const Permutation& w, const Permutation& p, int start, int depth,
                   std::array<int, Permutation::kMaxSize>& chosen) {
  const int k = p.size();
  if (depth == k) return true;
  for (int i = start; i <= w.size() - (k - depth); ++i) {
    const int v = w.at0(i);
    bool ok = true;
    for (int d = 0; d < depth && ok; ++d) {
      ok = (p.at0(d) < p.at0(depth)) == (chosen[d] < v);
    }
    if (!ok) continue;
    chosen[depth] = v;
    if (contains_from(w, p, i + 1, depth + 1, chosen)) return true;
  }
  return false;
}

// Pattern occurrence whose last entry sits at position last of the prefix.
bool contains_ending_at(const std::vector<int>& prefix, const Permutation& p, int last) {
  const int k = p.size();
  if (k == 0) return true;
  if (last + 1 < k) return false;
  std::array<int, Permutation::kMaxSize> chosen{};
  std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
    if (depth == k - 1) {
      const int v = prefix[last];
      for (int d = 0; d < depth; ++d) {
        if ((p.at0(d) < p.at0(depth)) != (chosen[d] < v)) return false;
      }
      return true;
    }
    for (int i = start; i <= last - (k - 1 - depth); ++i) {
      const int v = prefix[i];
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) ok = (p.at0(d) < p.at0(depth)) == (chosen[d] < v);
      if (!ok) continue;
      chosen[depth] = v;
      if (rec(i + 1, depth + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

bool contains_pattern(const Permutation& w, const Permutation& p) {
  if (p.size() > w.size()) return false;
  std::array<int, Permutation::kMaxSize> chosen{};
  return contains_from(w, p, 0, 0, chosen);
}

Permutation decreasing_pattern(int k) { return Permutation::longest(k); }

bool in_Q(const Permutation& w, const BlockStructure& lam, const BlockStructure& mu) {
  const int m = w.size();
  if (lam.size() != m || mu.size() != m) throw InvalidArgument("coordinate length mismatch");
  for (int i = 1; i <= m; ++i) {
    if (lam(i) > mu(w(i)) + 1) return false;
  }
  return true;
}

bool is_max_double_coset(const Permutation& w, const BlockStructure& lam, const BlockStructure& mu) {
  const int m = w.size();
  if (lam.size() != m || mu.size() != m) throw InvalidArgument("coordinate length mismatch");
  const Permutation inv = w.inverse();
  for (int i = 1; i < m; ++i) {
    if (lam.joined(i) && w(i) < w(i + 1)) return false;
    if (mu.joined(i) && inv(i) < inv(i + 1)) return false;
  }
  return true;
}

std::vector<Permutation> enumerate_S(const BlockStructure& lam, const BlockStructure& mu) {
  const int m = lam.size();
  if (mu.size() != m) throw InvalidArgument("coordinate length mismatch");
  std::vector<Permutation> out;
  std::vector<int> img;
  std::vector<char> used(m + 2, 0);
  std::function<void()> extend = [&]() {
    const int i = static_cast<int>(img.size()) + 1;
    if (i > m) {
      out.emplace_back(img);
      return;
    }
    for (int v = 1; v <= m; ++v) {
      if (used[v] || lam(i) > mu(v) + 1) continue;
      if (i > 1 && lam.joined(i - 1) && img.back() < v) continue;
      // inside a mu-block the larger value must come first
      if (v < m && mu.joined(v) && !used[v + 1]) continue;
      used[v] = 1;
      img.push_back(v);
      extend();
      img.pop_back();
      used[v] = 0;
    }
  };
  extend();
  return out;
}

Permutation longest_double_coset_rep(const Permutation& w, const BlockStructure& lam,
                                     const BlockStructure& mu) {
  const int m = w.size();
  if (lam.size() != m || mu.size() != m) throw InvalidArgument("coordinate length mismatch");
  Permutation y = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < m; ++i) {
      if (lam.joined(i) && !y.has_right_descent(i)) {
        y = y.right_mul_simple(i);
        changed = true;
      }
      if (mu.joined(i) && !y.has_left_descent(i)) {
        y = y.left_mul_simple(i);
        changed = true;
      }
    }
  }
  return y;
}

Permutation star(const std::vector<Permutation>& ws, const IndexParts& pos_parts,
                 const IndexParts& val_parts) {
  if (ws.size() != pos_parts.size() || ws.size() != val_parts.size()) {
    throw InvalidArgument("star needs one position part and one value part per factor");
  }
  int m = 0;
  for (std::size_t f = 0; f < ws.size(); ++f) {
    const int k = ws[f].size();
    if (static_cast<int>(pos_parts[f].size()) != k || static_cast<int>(val_parts[f].size()) != k) {
      throw InvalidArgument("star part sizes do not match the factor sizes");
    }
    m += k;
  }
  std::vector<int> img(m, 0);
  for (std::size_t f = 0; f < ws.size(); ++f) {
    for (int t = 1; t <= ws[f].size(); ++t) {
      const int pos = pos_parts[f][t - 1];
      if (pos < 1 || pos > m || img[pos - 1] != 0) {
        throw InvalidArgument("star position parts do not partition 1..m");
      }
      img[pos - 1] = val_parts[f][ws[f](t) - 1];
    }
  }
  return Permutation(img);
}

Permutation star_longest(const std::vector<Permutation>& ws, const IndexParts& pos_parts,
                         const IndexParts& val_parts, const BlockStructure& lam,
                         const BlockStructure& mu) {
  return longest_double_coset_rep(star(ws, pos_parts, val_parts), lam, mu);
}

IndexParts odd_even_parts(int m) {
  IndexParts parts(2);
  for (int i = 1; i <= m; ++i) parts[(i + 1) % 2].push_back(i);
  return parts;
}

Permutation flatten(const Permutation& w, const std::vector<int>& remove_positions) {
  std::vector<char> drop(w.size(), 0);
  for (int p : remove_positions) {
    if (p < 1 || p > w.size()) throw InvalidArgument("flatten position out of range");
    drop[p - 1] = 1;
  }
  std::vector<int> kept;
  for (int i = 1; i <= w.size(); ++i) {
    if (!drop[i - 1]) kept.push_back(w(i));
  }
  std::vector<int> sorted = kept;
  std::sort(sorted.begin(), sorted.end());
  for (int& v : kept) {
    v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
  }
  return Permutation(kept);
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

void for_each_avoider(int m, const std::vector<Permutation>& patterns,
                      const std::function<void(const Permutation&)>& visit) {
  if (m < 0) throw InvalidArgument("negative permutation size");
  std::vector<int> prefix;
  std::vector<char> used(m + 1, 0);
  std::function<void()> extend = [&]() {
    if (static_cast<int>(prefix.size()) == m) {
      visit(Permutation(prefix));
      return;
    }
    const int last = static_cast<int>(prefix.size());
    for (int v = 1; v <= m; ++v) {
      if (used[v]) continue;
      prefix.push_back(v);
      bool bad = false;
      for (const auto& p : patterns) {
        if (contains_ending_at(prefix, p, last)) {
          bad = true;
          break;
        }
      }
      if (!bad) {
        used[v] = 1;
        extend();
        used[v] = 0;
      }
      prefix.pop_back();
    }
  };
  extend();
}

std::vector<Permutation> enumerate_avoiders(int m, const std::vector<Permutation>& patterns) {
  std::vector<Permutation> out;
  for_each_avoider(m, patterns, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

Permutation parse_permutation(std::string_view text, int m) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "e") {
    if (m < 0) throw InvalidArgument("identity 'e' needs a known size");
    return Permutation::identity(m);
  }
  if (s.empty()) throw InvalidArgument("empty permutation text");
  std::vector<int> img;
  if (s.find(',') == std::string::npos) {
    for (char c : s) {
      if (c < '1' || c > '9') throw InvalidArgument("bad permutation '" + s + "'");
      img.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const auto comma = std::min(s.find(',', pos), s.size());
      int v = 0;
      auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + comma, v);
      if (ec != std::errc() || ptr != s.data() + comma || comma == pos) {
        throw InvalidArgument("bad permutation '" + s + "'");
      }
      img.push_back(v);
      pos = comma + 1;
    }
  }
  if (m >= 0 && static_cast<int>(img.size()) != m) {
    throw InvalidArgument("permutation '" + s + "' does not have " + std::to_string(m) + " letters");
  }
  return Permutation(img);
}

std::string to_string(const Permutation& w) {
  std::string out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(w(i));
  }
  return out;
}

std::string to_compact_string(const Permutation& w) {
  if (w.size() > 9) return to_string(w);
  std::string out;
  for (int i = 1; i <= w.size(); ++i) out += static_cast<char>('0' + w(i));
  return out;
}

std::string to_string(const BlockStructure& b) {
  std::string out;
  for (int i = 1; i <= b.size(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(b(i));
  }
  return out;
}

}  // namespace ladderprod

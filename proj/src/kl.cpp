#include "ladderprod/kl.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace ladderprod {

SymmetricGroup::SymmetricGroup(int m) : m_(m), stride_(std::max(m - 1, 1)) {
  if (m < 0 || m > kMaxRank) {
    throw InvalidArgument("symmetric group tables support 0 <= m <= " + std::to_string(kMaxRank));
  }
  elements_ = all_permutations(m);
  const std::uint32_t n = order();
  length_.resize(n);
  inverse_.resize(n);
  lmul_.assign(static_cast<std::size_t>(n) * stride_, 0);
  rmul_.assign(static_cast<std::size_t>(n) * stride_, 0);
  dl_.assign(n, 0);
  dr_.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Permutation& w = elements_[i];
    length_[i] = static_cast<std::uint8_t>(w.length());
    inverse_[i] = index(w.inverse());
    for (int s = 1; s < m; ++s) {
      lmul_[i * stride_ + s - 1] = index(w.left_mul_simple(s));
      rmul_[i * stride_ + s - 1] = index(w.right_mul_simple(s));
      if (w.has_left_descent(s)) dl_[i] |= static_cast<std::uint16_t>(1u << (s - 1));
      if (w.has_right_descent(s)) dr_[i] |= static_cast<std::uint16_t>(1u << (s - 1));
    }
  }
}

std::uint32_t SymmetricGroup::index(const Permutation& w) const {
  if (w.size() != m_) throw InvalidArgument("permutation size does not match the group");
  std::uint32_t rank = 0;
  for (int i = 0; i < m_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m_; ++j) smaller += w.at0(j) < w.at0(i);
    rank = rank * static_cast<std::uint32_t>(m_ - i) + static_cast<std::uint32_t>(smaller);
  }
  return rank;
}

std::uint32_t SymmetricGroup::reduce(std::uint32_t y, std::uint16_t left, std::uint16_t right) const {
  bool changed = true;
  while (changed) {
    changed = false;
    const std::uint16_t up_left = static_cast<std::uint16_t>(left & ~dl_[y]);
    if (up_left) {
      const int s = __builtin_ctz(up_left) + 1;
      y = lmul(s, y);
      changed = true;
      continue;
    }
    const std::uint16_t up_right = static_cast<std::uint16_t>(right & ~dr_[y]);
    if (up_right) {
      const int s = __builtin_ctz(up_right) + 1;
      y = rmul(y, s);
      changed = true;
    }
  }
  return y;
}

const SymmetricGroup& symmetric_group(int m) {
  if (m < 0 || m > SymmetricGroup::kMaxRank) {
    throw InvalidArgument("symmetric group tables support 0 <= m <= " +
                          std::to_string(SymmetricGroup::kMaxRank));
  }
  static std::array<std::once_flag, SymmetricGroup::kMaxRank + 1> flags;
  static std::array<std::unique_ptr<SymmetricGroup>, SymmetricGroup::kMaxRank + 1> groups;
  std::call_once(flags[m], [m] { groups[m] = std::make_unique<SymmetricGroup>(m); });
  return *groups[m];
}

namespace {

constexpr std::uint32_t kZero = 0;
constexpr std::uint32_t kOne = 1;
constexpr std::uint32_t kChunkBits = 12;
constexpr std::uint32_t kChunkSize = 1u << kChunkBits;
constexpr std::uint32_t kMaxChunks = 1u << 14;
constexpr const char* kCacheHeader = "ladderprod-kl-cache v1";

}  // namespace

struct KLEngine::Column {
  std::uint16_t dl = 0;
  std::uint16_t dr = 0;
  std::vector<std::uint32_t> extremal;
  std::vector<std::uint32_t> poly;
  std::vector<std::pair<std::uint32_t, std::int64_t>> mu;
};

struct KLEngine::GroupState {
  const SymmetricGroup* group = nullptr;
  std::unique_ptr<std::atomic<const Column*>[]> columns;
  std::vector<std::unique_ptr<Column>> owned;
  std::vector<std::vector<std::uint32_t>> by_left_descents;
  std::once_flag dense_once;
  std::vector<std::int32_t> dense;
};

struct KLEngine::PolyStore {
  struct Chunk {
    std::array<IntPolynomial, kChunkSize> polys;
    std::array<std::int64_t, kChunkSize> at_one{};
  };
  std::unique_ptr<std::atomic<Chunk*>[]> chunks{new std::atomic<Chunk*>[kMaxChunks]};
  std::vector<std::unique_ptr<Chunk>> owned;
  std::unordered_map<IntPolynomial, std::uint32_t, IntPolynomialHash> ids;
  std::uint32_t size = 0;

  PolyStore() {
    for (std::uint32_t i = 0; i < kMaxChunks; ++i) chunks[i].store(nullptr);
  }
};

KLEngine::KLEngine() : polys_(std::make_unique<PolyStore>()) {
  std::lock_guard lock(mutex_);
  intern(IntPolynomial());
  intern(IntPolynomial::constant(1));
}

KLEngine::~KLEngine() = default;

KLEngine& KLEngine::shared() {
  static KLEngine engine;
  return engine;
}

std::uint32_t KLEngine::intern(const IntPolynomial& p) {
  auto it = polys_->ids.find(p);
  if (it != polys_->ids.end()) return it->second;
  const std::uint32_t id = polys_->size;
  const std::uint32_t chunk = id >> kChunkBits;
  if (chunk >= kMaxChunks) throw Unsupported("KL polynomial store exhausted");
  if (polys_->chunks[chunk].load(std::memory_order_relaxed) == nullptr) {
    polys_->owned.push_back(std::make_unique<PolyStore::Chunk>());
    polys_->chunks[chunk].store(polys_->owned.back().get(), std::memory_order_release);
  }
  PolyStore::Chunk* c = polys_->chunks[chunk].load(std::memory_order_relaxed);
  c->polys[id & (kChunkSize - 1)] = p;
  c->at_one[id & (kChunkSize - 1)] = p.at_one();
  polys_->ids.emplace(p, id);
  ++polys_->size;
  return id;
}

const IntPolynomial& KLEngine::poly(std::uint32_t id) const {
  return polys_->chunks[id >> kChunkBits].load(std::memory_order_acquire)->polys[id & (kChunkSize - 1)];
}

std::int64_t KLEngine::poly_at_one(std::uint32_t id) const {
  return polys_->chunks[id >> kChunkBits].load(std::memory_order_acquire)->at_one[id & (kChunkSize - 1)];
}

KLEngine::GroupState& KLEngine::state(int m) {
  if (m < 0 || m > SymmetricGroup::kMaxRank) {
    throw Unsupported("KL engine supports S_m for m <= " + std::to_string(SymmetricGroup::kMaxRank));
  }
  GroupState* g = states_[m].load(std::memory_order_acquire);
  if (g) return *g;
  std::lock_guard lock(mutex_);
  g = states_[m].load(std::memory_order_relaxed);
  if (g) return *g;
  auto fresh = std::make_unique<GroupState>();
  fresh->group = &symmetric_group(m);
  const std::uint32_t n = fresh->group->order();
  fresh->columns.reset(new std::atomic<const Column*>[n]);
  for (std::uint32_t i = 0; i < n; ++i) fresh->columns[i].store(nullptr, std::memory_order_relaxed);
  fresh->by_left_descents.resize(std::size_t{1} << std::max(m - 1, 0));
  for (std::uint32_t i = 0; i < n; ++i) {
    fresh->by_left_descents[fresh->group->left_descents(i)].push_back(i);
  }
  g = fresh.get();
  owned_states_.push_back(std::move(fresh));
  states_[m].store(g, std::memory_order_release);
  return *g;
}

std::uint32_t KLEngine::lookup(const GroupState& g, const Column& c, std::uint32_t y) const {
  const std::uint32_t r = g.group->reduce(y, c.dl, c.dr);
  auto it = std::lower_bound(c.extremal.begin(), c.extremal.end(), r);
  if (it == c.extremal.end() || *it != r) return kZero;
  return c.poly[it - c.extremal.begin()];
}

const KLEngine::Column& KLEngine::column(GroupState& g, std::uint32_t w) {
  if (const Column* c = g.columns[w].load(std::memory_order_acquire)) return *c;
  std::lock_guard lock(mutex_);
  return compute_locked(g, w);
}

void KLEngine::finish_column(GroupState& g, std::uint32_t w, std::unique_ptr<Column> c) {
  const SymmetricGroup& G = *g.group;
  const int lw = G.length(w);
  c->mu.clear();
  for (std::size_t k = 0; k < c->extremal.size(); ++k) {
    const std::uint32_t u = c->extremal[k];
    const int gap = lw - G.length(u);
    if (gap <= 0 || gap % 2 == 0) continue;
    const std::int64_t top = poly(c->poly[k]).coeff((gap - 1) / 2);
    if (top != 0) c->mu.emplace_back(u, top);
  }
  for (int s = 1; s < G.rank(); ++s) {
    const std::uint16_t bit = static_cast<std::uint16_t>(1u << (s - 1));
    if (c->dl & bit) c->mu.emplace_back(G.lmul(s, w), 1);
    if (c->dr & bit) c->mu.emplace_back(G.rmul(w, s), 1);
  }
  std::sort(c->mu.begin(), c->mu.end());
  c->mu.erase(std::unique(c->mu.begin(), c->mu.end()), c->mu.end());
  g.columns[w].store(c.get(), std::memory_order_release);
  g.owned.push_back(std::move(c));
}

const KLEngine::Column& KLEngine::compute_locked(GroupState& g, std::uint32_t w) {
  if (const Column* c = g.columns[w].load(std::memory_order_acquire)) return *c;
  const SymmetricGroup& G = *g.group;
  auto col = std::make_unique<Column>();
  col->dl = G.left_descents(w);
  col->dr = G.right_descents(w);
  if (w == 0) {
    col->extremal = {0};
    col->poly = {kOne};
    finish_column(g, w, std::move(col));
    return *g.columns[w].load(std::memory_order_relaxed);
  }
  const int s = __builtin_ctz(col->dl) + 1;
  const std::uint16_t sbit = static_cast<std::uint16_t>(1u << (s - 1));
  const std::uint32_t v = G.lmul(s, w);
  const Column& cv = compute_locked(g, v);
  std::vector<std::pair<const Column*, std::int64_t>> corrections;
  std::vector<int> shifts;
  const int lw = G.length(w);
  for (const auto& [u, mu] : cv.mu) {
    if (!(G.left_descents(u) & sbit)) continue;
    corrections.emplace_back(&compute_locked(g, u), mu);
    shifts.push_back((lw - G.length(u)) / 2);
  }
  const std::uint16_t free_left =
      static_cast<std::uint16_t>(((1u << std::max(G.rank() - 1, 0)) - 1) & ~col->dl);
  // iterate over every left-descent mask containing dl(w)
  for (std::uint16_t sub = free_left;; sub = static_cast<std::uint16_t>((sub - 1) & free_left)) {
    for (std::uint32_t x : g.by_left_descents[col->dl | sub]) {
      if ((G.right_descents(x) & col->dr) != col->dr) continue;
      const std::uint32_t a = lookup(g, cv, G.lmul(s, x));
      if (a == kZero) continue;
      IntPolynomial p = poly(a);
      p.add_scaled(poly(lookup(g, cv, x)), 1, 1);
      for (std::size_t k = 0; k < corrections.size(); ++k) {
        const std::uint32_t b = lookup(g, *corrections[k].first, x);
        if (b != kZero) p.add_scaled(poly(b), -corrections[k].second, shifts[k]);
      }
      col->extremal.push_back(x);
      col->poly.push_back(intern(p));
    }
    if (sub == 0) break;
  }
  std::vector<std::size_t> order(col->extremal.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return col->extremal[a] < col->extremal[b]; });
  std::vector<std::uint32_t> ex(order.size()), po(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    ex[i] = col->extremal[order[i]];
    po[i] = col->poly[order[i]];
  }
  col->extremal = std::move(ex);
  col->poly = std::move(po);
  finish_column(g, w, std::move(col));
  return *g.columns[w].load(std::memory_order_relaxed);
}

IntPolynomial KLEngine::kl_poly(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) throw InvalidArgument("kl_poly needs permutations of equal size");
  GroupState& g = state(w.size());
  const Column& c = column(g, g.group->index(w));
  return poly(lookup(g, c, g.group->index(x)));
}

std::int64_t KLEngine::kl_at_one(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) throw InvalidArgument("kl_at_one needs permutations of equal size");
  const SymmetricGroup& G = symmetric_group(w.size());
  return at_one(w.size(), G.index(x), G.index(w));
}

std::int64_t KLEngine::mu(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) throw InvalidArgument("mu needs permutations of equal size");
  GroupState& g = state(w.size());
  const Column& c = column(g, g.group->index(w));
  const std::uint32_t xi = g.group->index(x);
  auto it = std::lower_bound(c.mu.begin(), c.mu.end(), std::make_pair(xi, std::int64_t{INT64_MIN}));
  return it != c.mu.end() && it->first == xi ? it->second : 0;
}

std::int64_t KLEngine::at_one(int m, std::uint32_t x, std::uint32_t w) {
  GroupState& g = state(m);
  if (m <= 6) {
    std::call_once(g.dense_once, [&] {
      compute_all(m);
      const std::uint32_t n = g.group->order();
      std::vector<std::int32_t> dense(static_cast<std::size_t>(n) * n, 0);
      for (std::uint32_t wi = 0; wi < n; ++wi) {
        const Column& c = *g.columns[wi].load(std::memory_order_acquire);
        for (std::uint32_t xi = 0; xi < n; ++xi) {
          dense[static_cast<std::size_t>(wi) * n + xi] =
              static_cast<std::int32_t>(poly_at_one(lookup(g, c, xi)));
        }
      }
      g.dense = std::move(dense);
    });
    return g.dense[static_cast<std::size_t>(w) * g.group->order() + x];
  }
  const Column& c = column(g, w);
  return poly_at_one(lookup(g, c, x));
}

void KLEngine::compute_all(int m) {
  GroupState& g = state(m);
  const std::uint32_t n = g.group->order();
  for (std::uint32_t w = 0; w < n; ++w) column(g, w);
}

std::size_t KLEngine::computed_columns(int m) const {
  const GroupState* g = states_[m].load(std::memory_order_acquire);
  if (!g) return 0;
  std::lock_guard lock(mutex_);
  return g->owned.size();
}

std::size_t KLEngine::stored_pairs(int m) const {
  const GroupState* g = states_[m].load(std::memory_order_acquire);
  if (!g) return 0;
  std::lock_guard lock(mutex_);
  std::size_t total = 0;
  for (const auto& c : g->owned) total += c->extremal.size();
  return total;
}

void KLEngine::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write KL cache '" + path + "'");
  out << kCacheHeader << "\n";
  std::lock_guard lock(mutex_);
  for (int m = 0; m <= SymmetricGroup::kMaxRank; ++m) {
    const GroupState* g = states_[m].load(std::memory_order_acquire);
    if (!g) continue;
    std::vector<std::uint32_t> done;
    for (std::uint32_t w = 0; w < g->group->order(); ++w) {
      if (g->columns[w].load(std::memory_order_acquire)) done.push_back(w);
    }
    for (std::uint32_t w : done) {
      const Column& c = *g->columns[w].load(std::memory_order_acquire);
      const std::string ws = to_compact_string(g->group->element(w));
      for (std::size_t k = 0; k < c.extremal.size(); ++k) {
        out << m << ' ' << to_compact_string(g->group->element(c.extremal[k])) << ' ' << ws;
        for (auto coeff : poly(c.poly[k]).coeffs()) out << ' ' << coeff;
        out << '\n';
      }
    }
  }
  if (!out) throw InvalidArgument("failed writing KL cache '" + path + "'");
}

std::size_t KLEngine::load(const std::string& path, int spot_checks) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read KL cache '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) {
    throw InvalidArgument("KL cache '" + path + "' has an unsupported version header");
  }
  struct Pending {
    int m;
    std::uint32_t w;
    std::vector<std::pair<std::uint32_t, IntPolynomial>> entries;
  };
  std::vector<Pending> pending;
  std::map<std::pair<int, std::uint32_t>, std::size_t> where;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    int m = 0;
    std::string xs, ws;
    if (!(fields >> m >> xs >> ws) || m < 0 || m > SymmetricGroup::kMaxRank) {
      throw InvalidArgument("malformed KL cache record at line " + std::to_string(line_no));
    }
    std::vector<IntPolynomial::Coeff> coeffs;
    IntPolynomial::Coeff c = 0;
    while (fields >> c) coeffs.push_back(c);
    if (!fields.eof()) {
      throw InvalidArgument("malformed KL cache record at line " + std::to_string(line_no));
    }
    const SymmetricGroup& G = symmetric_group(m);
    const std::uint32_t x = G.index(parse_permutation(xs, m));
    const std::uint32_t w = G.index(parse_permutation(ws, m));
    auto [it, fresh] = where.emplace(std::make_pair(m, w), pending.size());
    if (fresh) pending.push_back({m, w, {}});
    pending[it->second].entries.emplace_back(x, IntPolynomial(std::move(coeffs)));
  }

  std::size_t loaded = 0;
  {
    std::vector<std::pair<GroupState*, const Pending*>> work;
    for (const auto& p : pending) work.emplace_back(&state(p.m), &p);
    std::lock_guard lock(mutex_);
    for (auto [g, p] : work) {
      if (g->columns[p->w].load(std::memory_order_acquire)) continue;
      auto col = std::make_unique<Column>();
      col->dl = g->group->left_descents(p->w);
      col->dr = g->group->right_descents(p->w);
      auto entries = p->entries;
      std::sort(entries.begin(), entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [x, poly_value] : entries) {
        col->extremal.push_back(x);
        col->poly.push_back(intern(poly_value));
      }
      finish_column(*g, p->w, std::move(col));
      ++loaded;
    }
  }

  if (spot_checks > 0 && !pending.empty()) {
    KLEngine fresh;
    const std::size_t step = std::max<std::size_t>(1, pending.size() / spot_checks);
    for (std::size_t i = 0; i < pending.size(); i += step) {
      const Pending& p = pending[i];
      const SymmetricGroup& G = symmetric_group(p.m);
      for (const auto& [x, value] : p.entries) {
        if (fresh.kl_poly(G.element(x), G.element(p.w)) != value) {
          throw InvalidArgument("KL cache '" + path + "' disagrees with a fresh computation at x=" +
                                to_compact_string(G.element(x)) +
                                ", w=" + to_compact_string(G.element(p.w)));
        }
      }
    }
  }
  return loaded;
}

std::map<Permutation, std::int64_t> invert_interval(const BlockStructure& lam,
                                                    const BlockStructure& mu, const Permutation& x,
                                                    KLEngine& engine) {
  if (!in_S(x, lam, mu)) throw InvalidArgument("x = " + to_string(x) + " is not in S(lambda,mu)");
  const int m = x.size();
  const SymmetricGroup& G = symmetric_group(m);
  std::vector<std::uint32_t> above;
  const std::uint32_t xi = G.index(x);
  for (const auto& w : enumerate_S(lam, mu)) {
    if (bruhat_leq(x, w)) above.push_back(G.index(w));
  }
  std::stable_sort(above.begin(), above.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return G.length(a) < G.length(b); });
  std::vector<std::int64_t> c(above.size(), 0);
  std::map<Permutation, std::int64_t> out;
  for (std::size_t k = 0; k < above.size(); ++k) {
    if (above[k] == xi) {
      c[k] = 1;
    } else {
      std::int64_t sum = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (c[j] != 0) sum += c[j] * engine.at_one(m, above[j], above[k]);
      }
      c[k] = -sum;
    }
    out.emplace(G.element(above[k]), c[k]);
  }
  return out;
}

}  // namespace ladderprod

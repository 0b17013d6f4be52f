#include "sel/cycles.hpp"

#include <algorithm>
#include <bit>
#include <list>
#include <string>
#include <unordered_map>

namespace sel {

namespace {

struct RawCycle {
  std::uint64_t mask;
  std::vector<int> order;
};

// Sorted-vertex-list lexicographic order on masks: the lowest differing bit
// decides, and owning it means being smaller.
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  if (!d) return false;
  return a & (d & -d);
}

struct ChordlessEnum {
  const Graph& g;
  int n;
  std::uint64_t adj[kMaxPackingOrder];
  std::int64_t cap;
  bool truncated = false;
  std::vector<RawCycle> out;
  std::vector<int> path;

  ChordlessEnum(const Graph& g_, std::int64_t cap_) : g(g_), n(g_.order()),
                                                      cap(cap_) {
    for (int v = 0; v < n; ++v) adj[v] = g.row(v)[0];
  }

  void run() {
    for (int s = 0; s + 2 < n && !truncated; ++s) {
      std::uint64_t above = ~0ULL << (s + 1);
      std::uint64_t firsts = adj[s] & above;
      while (firsts && !truncated) {
        int v1 = std::countr_zero(firsts);
        firsts &= firsts - 1;
        path.assign({s, v1});
        extend(s, v1, 1ULL << s | 1ULL << v1, 0, above);
      }
    }
  }

  // interior = path vertices except the endpoints s and `last`; a new vertex
  // adjacent to any of them would be a chord.
  void extend(int s, int last, std::uint64_t used, std::uint64_t interior,
              std::uint64_t above) {
    if (truncated) return;
    std::uint64_t cands = adj[last] & above & ~used;
    std::uint64_t closing = cands & adj[s];
    std::uint64_t growing = cands & ~adj[s];
    while (closing) {
      int w = std::countr_zero(closing);
      closing &= closing - 1;
      if (interior & adj[w]) continue;
      if (path[1] < w) {
        if (static_cast<std::int64_t>(out.size()) >= cap) {
          truncated = true;
          return;
        }
        RawCycle c{used | (1ULL << w), path};
        c.order.push_back(w);
        out.push_back(std::move(c));
      }
    }
    while (growing && !truncated) {
      int w = std::countr_zero(growing);
      growing &= growing - 1;
      if (interior & adj[w]) continue;
      path.push_back(w);
      extend(s, w, used | (1ULL << w), interior | (1ULL << last), above);
      path.pop_back();
    }
  }
};

std::vector<RawCycle> chordless_raw(const Graph& g, std::int64_t cap,
                                    bool* truncated) {
  if (g.order() > kMaxPackingOrder)
    throw UnsupportedSizeError("cycle enumeration supports order <= " +
                               std::to_string(kMaxPackingOrder));
  ChordlessEnum e(g, cap);
  e.run();
  if (truncated) *truncated = e.truncated;
  std::sort(e.out.begin(), e.out.end(), [](const RawCycle& a,
                                           const RawCycle& b) {
    return mask_lex_less(a.mask, b.mask);
  });
  return std::move(e.out);
}

// Bounded memo with least-recently-used eviction.
class LruMemo {
 public:
  explicit LruMemo(std::size_t cap) : cap_(cap) {}

  const int* find(std::uint64_t key) {
    auto it = map_.find(key);
    if (it == map_.end()) return nullptr;
    order_.splice(order_.begin(), order_, it->second.second);
    return &it->second.first;
  }

  void insert(std::uint64_t key, int value) {
    auto it = map_.find(key);
    if (it != map_.end()) {
      it->second.first = value;
      order_.splice(order_.begin(), order_, it->second.second);
      return;
    }
    if (map_.size() >= cap_) {
      map_.erase(order_.back());
      order_.pop_back();
    }
    order_.push_front(key);
    map_.emplace(key, std::make_pair(value, order_.begin()));
  }

 private:
  std::size_t cap_;
  std::unordered_map<std::uint64_t,
                     std::pair<int, std::list<std::uint64_t>::iterator>>
      map_;
  std::list<std::uint64_t> order_;
};

constexpr std::size_t kMemoCap = std::size_t{1} << 24;

struct PackCtx {
  std::vector<std::uint64_t> cyc;       // sorted by (length, set-lex)
  std::vector<int> raw_idx;             // position in the caller's raw list
  std::vector<std::vector<int>> by_vertex;
  int min_len = 3;
  LruMemo memo{kMemoCap};

  explicit PackCtx(int n, const std::vector<RawCycle>& raw) : by_vertex(n) {
    std::vector<int> sorted(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) sorted[i] = static_cast<int>(i);
    std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
      int la = std::popcount(raw[a].mask);
      int lb = std::popcount(raw[b].mask);
      if (la != lb) return la < lb;
      return mask_lex_less(raw[a].mask, raw[b].mask);
    });
    for (int r : sorted) {
      int idx = static_cast<int>(cyc.size());
      cyc.push_back(raw[r].mask);
      raw_idx.push_back(r);
      std::uint64_t m = raw[r].mask;
      while (m) {
        by_vertex[std::countr_zero(m)].push_back(idx);
        m &= m - 1;
      }
    }
    if (!cyc.empty()) min_len = std::popcount(cyc.front());
  }

  // Drop vertices no available cycle can cover; stabilizes memo keys.
  std::uint64_t normalize(std::uint64_t avail) const {
    std::uint64_t covered = 0;
    for (std::uint64_t c : cyc)
      if ((c & ~avail) == 0) covered |= c;
    return covered;
  }

  // Hitting-set bound: grow a core of the most cycle-covered vertices; once
  // every cycle meets the core in >= m vertices, no packing can exceed
  // |core|/m. On join-like graphs this certifies nu = floor(c/2) without
  // touching the exponential branching.
  int static_upper_bound(int n) const {
    if (cyc.empty()) return 0;
    std::vector<int> cnt(static_cast<std::size_t>(n), 0);
    std::uint64_t participating = 0;
    for (std::uint64_t c : cyc) {
      participating |= c;
      std::uint64_t m = c;
      while (m) {
        ++cnt[static_cast<std::size_t>(std::countr_zero(m))];
        m &= m - 1;
      }
    }
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
      if (participating & (1ULL << v)) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return cnt[static_cast<std::size_t>(a)] > cnt[static_cast<std::size_t>(b)];
    });
    int ub = std::popcount(participating) / min_len;
    std::uint64_t core = 0;
    for (std::size_t t = 0; t < order.size(); ++t) {
      core |= 1ULL << order[t];
      int hits = n;
      for (std::uint64_t c : cyc)
        hits = std::min(hits, std::popcount(c & core));
      if (hits == 0) continue;
      ub = std::min(ub, static_cast<int>(t + 1) / hits);
    }
    return ub;
  }

  int global_ub = 0;  // static_upper_bound, set once after construction

  int solve(std::uint64_t avail) {
    avail = normalize(avail);
    if (avail == 0) return 0;
    if (const int* hit = memo.find(avail)) return *hit;
    int v = std::countr_zero(avail);
    int best = solve(avail & ~(1ULL << v));
    int ub = std::min(std::popcount(avail) / min_len, global_ub);
    for (int i : by_vertex[v]) {
      if (best >= ub) break;
      std::uint64_t c = cyc[i];
      if (c & ~avail) continue;
      best = std::max(best, 1 + solve(avail & ~c));
    }
    memo.insert(avail, best);
    return best;
  }

  // Decision variant with early exit: can `need` disjoint cycles fit?
  // Failures are cached per remaining-vertex set as a bitmask over `need`
  // (need <= 21 since every cycle has at least 3 vertices).
  std::unordered_map<std::uint64_t, std::uint32_t> failed;

  bool decide(std::uint64_t avail, int need, std::vector<int>* chosen) {
    if (need == 0) return true;
    avail = normalize(avail);
    if (std::popcount(avail) < need * min_len) return false;
    auto it = failed.find(avail);
    if (it != failed.end() && (it->second >> need) & 1u) return false;
    int v = std::countr_zero(avail);
    for (int i : by_vertex[v]) {
      std::uint64_t c = cyc[i];
      if (c & ~avail) continue;
      if (decide(avail & ~c, need - 1, chosen)) {
        if (chosen) chosen->push_back(i);
        return true;
      }
    }
    if (decide(avail & ~(1ULL << v), need, chosen)) return true;
    if (failed.size() < kMemoCap || failed.count(avail))
      failed[avail] |= 1u << need;
    return false;
  }
};

std::vector<int> cycle_order(const RawCycle& c) { return c.order; }

}  // namespace

std::vector<ChordlessCycle> enumerate_chordless_cycles(const Graph& g,
                                                       std::int64_t cap) {
  bool truncated = false;
  std::vector<RawCycle> raw = chordless_raw(g, cap, &truncated);
  if (truncated)
    throw CapExceededError("chordless cycle count exceeds cap " +
                           std::to_string(cap));
  std::vector<ChordlessCycle> out;
  out.reserve(raw.size());
  for (const RawCycle& c : raw) {
    ChordlessCycle cc;
    cc.vertices = c.order;
    cc.members = VertexSet(g.order());
    for (int v : cc.vertices) cc.members.insert(v);
    out.push_back(std::move(cc));
  }
  return out;
}

PackingResult max_cycle_packing(const Graph& g, std::int64_t cycle_cap) {
  bool truncated = false;
  std::vector<RawCycle> raw = chordless_raw(g, cycle_cap, &truncated);
  PackCtx ctx(g.order(), raw);
  ctx.global_ub = ctx.static_upper_bound(g.order());

  std::uint64_t all = g.order() == 64 ? ~0ULL : (1ULL << g.order()) - 1;
  PackingResult res;
  res.exact = !truncated;
  res.nu = ctx.solve(all);

  // Replay the memoized recursion to extract one optimal packing.
  std::uint64_t avail = all;
  int remaining = res.nu;
  while (remaining > 0) {
    avail = ctx.normalize(avail);
    int v = std::countr_zero(avail);
    if (ctx.solve(avail & ~(1ULL << v)) == remaining) {
      avail &= ~(1ULL << v);
      continue;
    }
    for (int i : ctx.by_vertex[v]) {
      std::uint64_t c = ctx.cyc[i];
      if (c & ~avail) continue;
      if (1 + ctx.solve(avail & ~c) == remaining) {
        res.witness.cycles.push_back(cycle_order(raw[ctx.raw_idx[i]]));
        avail &= ~c;
        --remaining;
        break;
      }
    }
  }
  return res;
}

DisjointCyclesResult has_k_disjoint_cycles(const Graph& g, int k,
                                           std::int64_t cycle_cap) {
  if (k < 1) throw InvalidParameterError("k must be >= 1");
  bool truncated = false;
  std::vector<RawCycle> raw = chordless_raw(g, cycle_cap, &truncated);
  PackCtx ctx(g.order(), raw);
  ctx.global_ub = ctx.static_upper_bound(g.order());

  std::uint64_t all = g.order() == 64 ? ~0ULL : (1ULL << g.order()) - 1;
  std::vector<int> chosen;
  DisjointCyclesResult res;
  res.found = k <= ctx.global_ub && ctx.decide(all, k, &chosen);
  // A packing found over a truncated cycle list is still a valid packing;
  // only a negative answer loses certainty.
  res.exact = res.found || !truncated;
  if (res.found)
    for (int i : chosen)
      res.witness.cycles.push_back(cycle_order(raw[ctx.raw_idx[i]]));
  return res;
}

namespace detail {

namespace {

// Mask-only chordless cycle collection into a caller buffer.
struct MaskEnum {
  const std::uint64_t* adj;
  std::vector<std::uint64_t>& out;
  int second = -1;

  void extend(int s, int last, std::uint64_t used, std::uint64_t interior,
              std::uint64_t above) {
    std::uint64_t cands = adj[last] & above & ~used;
    std::uint64_t closing = cands & adj[s];
    std::uint64_t growing = cands & ~adj[s];
    while (closing) {
      int w = std::countr_zero(closing);
      closing &= closing - 1;
      if (interior & adj[w]) continue;
      if (second < w) out.push_back(used | (1ULL << w));
    }
    while (growing) {
      int w = std::countr_zero(growing);
      growing &= growing - 1;
      if (interior & adj[w]) continue;
      extend(s, w, used | (1ULL << w), interior | (1ULL << last), above);
    }
  }
};

bool disjoint_decide(const std::vector<std::uint64_t>& cyc,
                     std::uint64_t avail, int need) {
  if (need == 0) return true;
  std::uint64_t covered = 0;
  for (std::uint64_t c : cyc)
    if ((c & ~avail) == 0) covered |= c;
  avail = covered;
  if (std::popcount(avail) < 3 * need) return false;
  int v = std::countr_zero(avail);
  for (std::uint64_t c : cyc) {
    if (!(c & (1ULL << v)) || (c & ~avail)) continue;
    if (disjoint_decide(cyc, avail & ~c, need - 1)) return true;
  }
  return disjoint_decide(cyc, avail & ~(1ULL << v), need);
}

}  // namespace

bool small_graph_has_k_disjoint(const Graph& g, int k) {
  const int n = g.order();
  if (n > kMaxPackingOrder)
    throw UnsupportedSizeError("fast path supports order <= 64");
  thread_local std::vector<std::uint64_t> cycles;
  cycles.clear();
  std::uint64_t adj[kMaxPackingOrder];
  for (int v = 0; v < n; ++v) adj[v] = g.row(v)[0];
  MaskEnum e{adj, cycles};
  for (int s = 0; s + 2 < n; ++s) {
    std::uint64_t above = ~0ULL << (s + 1);
    std::uint64_t firsts = adj[s] & above;
    while (firsts) {
      int v1 = std::countr_zero(firsts);
      firsts &= firsts - 1;
      e.second = v1;
      e.extend(s, v1, 1ULL << s | 1ULL << v1, 0, above);
    }
  }
  std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
  return disjoint_decide(cycles, all, k);
}

}  // namespace detail

bool validate_packing(const Graph& g, const CyclePacking& p) {
  VertexSet used(g.order());
  for (const std::vector<int>& cyc : p.cycles) {
    if (cyc.size() < 3) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i];
      int v = cyc[(i + 1) % cyc.size()];
      if (u < 0 || u >= g.order() || !g.has_edge(u, v)) return false;
      if (used.contains(u)) return false;
      used.insert(u);
    }
  }
  return true;
}

}  // namespace sel

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace misere {

/// Handle to an interned game tree. Ids are dense and handed out in interning
/// order; that order doubles as the total order used to normalize option
/// lists, so structural equality of normalized trees is id equality.
struct GameId {
  std::uint32_t raw = 0xFFFFFFFFu;

  friend constexpr bool operator==(GameId, GameId) = default;
  friend constexpr auto operator<=>(GameId, GameId) = default;
  constexpr bool valid() const { return raw != 0xFFFFFFFFu; }
};

struct GameIdHash {
  std::size_t operator()(GameId g) const noexcept {
    return std::hash<std::uint32_t>{}(g.raw);
  }
};

/// Mutex-guarded hash map used for memo tables. All cached values are
/// deterministic functions of their key, so a racing recompute that stores
/// the same value twice is benign.
template <class K, class V>
class SyncMap {
 public:
  std::optional<V> get(const K& key) const {
    std::lock_guard lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void put(const K& key, const V& value) {
    std::lock_guard lock(mu_);
    map_.emplace(key, value);
  }

  template <class F>
  V get_or_compute(const K& key, F&& compute) {
    if (auto hit = get(key)) return *hit;
    V value = compute();  // outside the lock; recursion re-enters get/put
    put(key, value);
    return value;
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return map_.size();
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<K, V> map_;
};

/// Append-only interner for finite game trees plus the structural operations
/// defined on them (sum, conjugate, birthday, followers, shape predicates).
///
/// Storage is chunked and never moves, so resolving an id to its option
/// lists is lock-free; insertion takes a mutex and is idempotent.
class GamePool {
 public:
  GamePool() : dedup_(64, DedupHash{this}, DedupEq{this}) {
    node_chunks_.reserve(kMaxNodeChunks);
    opt_chunks_.reserve(kMaxOptChunks);
    GameId z = intern({}, {});
    GameId s = intern({z}, {z});
    (void)z;
    (void)s;
  }
  GamePool(const GamePool&) = delete;
  GamePool& operator=(const GamePool&) = delete;

  /// The game with no options, id 0.
  GameId zero() const { return GameId{0}; }
  /// The game {0|0}, id 1.
  GameId star() const { return GameId{1}; }

  std::size_t size() const { return count_.load(std::memory_order_acquire); }

  /// Interns the game {left|right}. Option lists are sorted and deduplicated,
  /// so re-interning any normalized tree returns the same id. Total.
  GameId intern(std::vector<GameId> left, std::vector<GameId> right) {
    normalize(left);
    normalize(right);
    std::size_t h = content_hash(left, right);
    std::lock_guard lock(mu_);
    ProbeKey key{{left.data(), left.size()}, {right.data(), right.size()}, h};
    if (auto it = dedup_.find(key); it != dedup_.end()) return *it;
    return append_locked(left, right, h);
  }

  std::span<const GameId> left(GameId g) const {
    const Node& n = node(g);
    return {opt_ptr(n.left_off), n.left_len};
  }

  std::span<const GameId> right(GameId g) const {
    const Node& n = node(g);
    return {opt_ptr(n.right_off), n.right_len};
  }

  bool is_left_end(GameId g) const { return left(g).empty(); }
  bool is_right_end(GameId g) const { return right(g).empty(); }

  /// Disjunctive sum, expanded eagerly into an interned tree.
  GameId sum(GameId a, GameId b) {
    if (a == zero()) return b;
    if (b == zero()) return a;
    if (b < a) std::swap(a, b);  // the sum is commutative by construction
    std::uint64_t key = (std::uint64_t(a.raw) << 32) | b.raw;
    if (auto hit = sum_memo_.get(key)) return GameId{*hit};
    std::vector<GameId> l, r;
    for (GameId o : left(a)) l.push_back(sum(o, b));
    for (GameId o : left(b)) l.push_back(sum(a, o));
    for (GameId o : right(a)) r.push_back(sum(o, b));
    for (GameId o : right(b)) r.push_back(sum(a, o));
    GameId s = intern(std::move(l), std::move(r));
    sum_memo_.put(key, s.raw);
    return s;
  }

  /// Swaps the players' roles throughout the tree.
  GameId conjugate(GameId g) {
    if (auto hit = conj_memo_.get(g.raw)) return GameId{*hit};
    std::vector<GameId> l, r;
    for (GameId o : right(g)) l.push_back(conjugate(o));
    for (GameId o : left(g)) r.push_back(conjugate(o));
    GameId c = intern(std::move(l), std::move(r));
    conj_memo_.put(g.raw, c.raw);
    return c;
  }

  /// Height of the game tree: 0 for the zero game, else one plus the maximum
  /// birthday of the options.
  int birthday(GameId g) {
    if (auto hit = birthday_memo_.get(g.raw)) return *hit;
    int b = 0;
    for (GameId o : left(g)) b = std::max(b, birthday(o) + 1);
    for (GameId o : right(g)) b = std::max(b, birthday(o) + 1);
    birthday_memo_.put(g.raw, b);
    return b;
  }

  /// Every position reachable by any sequence of moves, including g itself.
  /// Sorted by id.
  std::vector<GameId> followers(GameId g) {
    std::vector<GameId> out, stack{g};
    std::unordered_set<GameId, GameIdHash> seen{g};
    while (!stack.empty()) {
      GameId v = stack.back();
      stack.pop_back();
      out.push_back(v);
      for (auto side : {left(v), right(v)})
        for (GameId o : side)
          if (seen.insert(o).second) stack.push_back(o);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Zero, or both players can move everywhere in the tree.
  bool is_dicot(GameId g) {
    return dicot_memo_.get_or_compute(g.raw, [&]() -> std::uint8_t {
      if (g == zero()) return 1;
      if (is_left_end(g) || is_right_end(g)) return 0;
      for (auto side : {left(g), right(g)})
        for (GameId o : side)
          if (!is_dicot(o)) return 0;
      return 1;
    });
  }

  /// At most one option per player, everywhere in the tree.
  bool is_binary(GameId g) {
    return binary_memo_.get_or_compute(g.raw, [&]() -> std::uint8_t {
      if (left(g).size() > 1 || right(g).size() > 1) return 0;
      for (auto side : {left(g), right(g)})
        for (GameId o : side)
          if (!is_binary(o)) return 0;
      return 1;
    });
  }

  /// Both players always have the same options, everywhere in the tree.
  bool is_impartial(GameId g) {
    return impartial_memo_.get_or_compute(g.raw, [&]() -> std::uint8_t {
      auto l = left(g), r = right(g);
      if (l.size() != r.size()) return 0;
      if (!std::equal(l.begin(), l.end(), r.begin())) return 0;
      for (GameId o : l)
        if (!is_impartial(o)) return 0;
      return 1;
    });
  }

  // Memo tables for the modules layered on top of the pool; kept here so a
  // single pool object carries a whole session. Keys are raw ids (pairs are
  // packed into 64 bits), values are raw ids or packed bits.
  SyncMap<std::uint32_t, std::uint8_t> misere_bits_memo;
  SyncMap<std::uint32_t, std::uint8_t> normal_bits_memo;
  SyncMap<std::uint32_t, std::uint32_t> adjoint_memo;
  SyncMap<std::uint64_t, std::uint32_t> tilde_memo;
  SyncMap<std::uint64_t, std::uint8_t> ge_binary_memo;
  SyncMap<std::uint32_t, std::uint32_t> canonical_memo;

 private:
  static constexpr std::uint32_t kNodeShift = 14;
  static constexpr std::uint32_t kNodesPerChunk = 1u << kNodeShift;
  static constexpr std::uint32_t kOptShift = 16;
  static constexpr std::uint32_t kOptsPerChunk = 1u << kOptShift;
  static constexpr std::size_t kMaxNodeChunks = 1u << 12;
  static constexpr std::size_t kMaxOptChunks = 1u << 15;

  struct Node {
    std::uint32_t left_off = 0;
    std::uint32_t right_off = 0;
    std::uint32_t left_len = 0;
    std::uint32_t right_len = 0;
  };

  struct ProbeKey {
    std::span<const GameId> l, r;
    std::size_t h;
  };

  struct DedupHash {
    using is_transparent = void;
    const GamePool* pool;
    std::size_t operator()(GameId g) const { return pool->hashes_[g.raw]; }
    std::size_t operator()(const ProbeKey& k) const { return k.h; }
  };

  struct DedupEq {
    using is_transparent = void;
    const GamePool* pool;
    bool operator()(GameId a, GameId b) const { return a == b; }
    bool operator()(const ProbeKey& k, GameId g) const { return pool->node_equals(g, k.l, k.r); }
    bool operator()(GameId g, const ProbeKey& k) const { return pool->node_equals(g, k.l, k.r); }
  };

  const Node& node(GameId g) const {
    return node_chunks_[g.raw >> kNodeShift][g.raw & (kNodesPerChunk - 1)];
  }

  const GameId* opt_ptr(std::uint32_t off) const {
    return opt_chunks_[off >> kOptShift].get() + (off & (kOptsPerChunk - 1));
  }

  bool node_equals(GameId g, std::span<const GameId> l, std::span<const GameId> r) const {
    auto gl = left(g), gr = right(g);
    return gl.size() == l.size() && gr.size() == r.size() &&
           std::equal(gl.begin(), gl.end(), l.begin()) &&
           std::equal(gr.begin(), gr.end(), r.begin());
  }

  void normalize(std::vector<GameId>& opts) const {
    std::sort(opts.begin(), opts.end());
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
    std::size_t n = size();
    for (GameId o : opts)
      if (o.raw >= n)
        throw std::invalid_argument("intern: option id was never interned");
  }

  static std::size_t content_hash(std::span<const GameId> l, std::span<const GameId> r) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    };
    mix(l.size());
    for (GameId o : l) mix(o.raw + 1);
    mix(0x517cc1b727220a95ull);
    for (GameId o : r) mix(o.raw + 1);
    mix(r.size());
    return static_cast<std::size_t>(h);
  }

  std::uint32_t store_opts_locked(std::span<const GameId> opts) {
    if (opts.empty()) return 0;
    if (opts.size() > kOptsPerChunk)
      throw std::length_error("intern: option list too long");
    if (opt_chunks_.empty() || opt_pos_ + opts.size() > kOptsPerChunk) {
      if (opt_chunks_.size() == kMaxOptChunks)
        throw std::length_error("game pool option storage exhausted");
      opt_chunks_.push_back(std::make_unique<GameId[]>(kOptsPerChunk));
      opt_pos_ = 0;
    }
    std::uint32_t off =
        (std::uint32_t(opt_chunks_.size() - 1) << kOptShift) | opt_pos_;
    std::copy(opts.begin(), opts.end(), opt_chunks_.back().get() + opt_pos_);
    opt_pos_ += static_cast<std::uint32_t>(opts.size());
    return off;
  }

  GameId append_locked(std::span<const GameId> l, std::span<const GameId> r, std::size_t h) {
    std::uint32_t id = count_.load(std::memory_order_relaxed);
    if (id >= kMaxNodeChunks * kNodesPerChunk)
      throw std::length_error("game pool node storage exhausted");
    Node n;
    n.left_len = static_cast<std::uint32_t>(l.size());
    n.right_len = static_cast<std::uint32_t>(r.size());
    n.left_off = store_opts_locked(l);
    n.right_off = store_opts_locked(r);
    if ((id >> kNodeShift) == node_chunks_.size())
      node_chunks_.push_back(std::make_unique<Node[]>(kNodesPerChunk));
    node_chunks_[id >> kNodeShift][id & (kNodesPerChunk - 1)] = n;
    hashes_.push_back(h);
    GameId g{id};
    dedup_.insert(g);
    count_.store(id + 1, std::memory_order_release);
    return g;
  }

  mutable std::mutex mu_;
  std::atomic<std::uint32_t> count_{0};
  std::vector<std::unique_ptr<Node[]>> node_chunks_;
  std::vector<std::unique_ptr<GameId[]>> opt_chunks_;
  std::uint32_t opt_pos_ = 0;
  std::vector<std::size_t> hashes_;  // content hash per id, guarded by mu_
  std::unordered_set<GameId, DedupHash, DedupEq> dedup_;

  SyncMap<std::uint64_t, std::uint32_t> sum_memo_;
  SyncMap<std::uint32_t, std::uint32_t> conj_memo_;
  SyncMap<std::uint32_t, int> birthday_memo_;
  SyncMap<std::uint32_t, std::uint8_t> dicot_memo_;
  SyncMap<std::uint32_t, std::uint8_t> binary_memo_;
  SyncMap<std::uint32_t, std::uint8_t> impartial_memo_;
};

}  // namespace misere

#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "misere/game.hpp"
#include "misere/outcome.hpp"

namespace misere {

enum class Filter : std::uint8_t { All, Dicot, Binary, Impartial, BinaryDicot, ImpartialBinary };

inline const char* filter_name(Filter f) {
  switch (f) {
    case Filter::All: return "all";
    case Filter::Dicot: return "dicot";
    case Filter::Binary: return "binary";
    case Filter::Impartial: return "impartial";
    case Filter::BinaryDicot: return "binary-dicot";
    case Filter::ImpartialBinary: return "impartial-binary";
  }
  return "?";
}

inline std::optional<Filter> filter_from_name(std::string_view name) {
  for (Filter f : {Filter::All, Filter::Dicot, Filter::Binary, Filter::Impartial,
                   Filter::BinaryDicot, Filter::ImpartialBinary})
    if (name == filter_name(f)) return f;
  return std::nullopt;
}

/// All distinct normalized trees satisfying a structural filter, up to a
/// birthday bound. Games are ordered birthday-major; within one birthday the
/// order is the generation order (lexicographic over option subsets of the
/// previous levels), which depends only on the space itself, not on the
/// pool's interning history.
struct EnumSpace {
  Filter filter = Filter::All;
  int bound = 0;
  std::vector<GameId> games;
  std::vector<std::size_t> level_begin;  // games[level_begin[k]..level_begin[k+1]) born exactly k
  std::unordered_set<GameId, GameIdHash> index;

  bool contains(GameId g) const { return index.count(g) != 0; }
  std::size_t size() const { return games.size(); }
};

inline constexpr std::size_t kDefaultSpaceCeiling = 4'000'000;

/// Number of candidate option-set pairs the generator would have to visit.
/// Infinity-safe: doubles saturate long before any container would.
inline double predicted_enumeration_cost(Filter f, int bound) {
  double c = 1;  // games born <= k so far
  double total = 0;
  for (int k = 1; k <= bound; ++k) {
    double cand = 0;
    switch (f) {
      case Filter::All:
        cand = std::pow(2.0, c) * std::pow(2.0, c);
        c = cand;
        break;
      case Filter::Dicot:
        cand = (std::pow(2.0, c) - 1) * (std::pow(2.0, c) - 1);
        c = cand + 1;
        break;
      case Filter::Binary:
        cand = (c + 1) * (c + 1);
        c = cand;
        break;
      case Filter::BinaryDicot:
        cand = c * c;
        c = cand + 1;
        break;
      case Filter::Impartial:
        cand = std::pow(2.0, c) - 1;
        c = cand + 1;
        break;
      case Filter::ImpartialBinary:
        cand = c;
        c = c + 1;
        break;
    }
    total += cand;
    if (!(total <= 1e18)) return std::numeric_limits<double>::infinity();
  }
  return total;
}

/// Level-by-level generation: trees born <= k+1 draw their option sets from
/// the trees born <= k that already satisfy the filter, so the hereditary
/// predicates hold by construction. Refuses if the predicted candidate count
/// exceeds the ceiling.
inline EnumSpace enumerate(GamePool& pool, Filter f, int bound,
                           std::size_t ceiling = kDefaultSpaceCeiling) {
  if (bound < 0) throw std::invalid_argument("enumerate: bound must be non-negative");
  double cost = predicted_enumeration_cost(f, bound);
  if (!(cost <= static_cast<double>(ceiling)))
    throw std::length_error(std::string("enumerate: predicted space for filter '") +
                            filter_name(f) + "' at birthday " + std::to_string(bound) +
                            " exceeds the configured ceiling");

  EnumSpace out;
  out.filter = f;
  out.bound = bound;
  out.games.push_back(pool.zero());
  out.index.insert(pool.zero());
  out.level_begin = {0, 1};

  auto emit = [&](std::vector<GameId> l, std::vector<GameId> r) {
    GameId g = pool.intern(std::move(l), std::move(r));
    if (out.index.insert(g).second) out.games.push_back(g);
  };
  auto subset = [&](std::uint64_t mask) {
    std::vector<GameId> s;
    for (std::uint32_t j = 0; mask != 0; ++j, mask >>= 1)
      if (mask & 1) s.push_back(out.games[j]);
    return s;
  };

  for (int k = 1; k <= bound; ++k) {
    const std::size_t p = out.games.size();
    const std::uint64_t full = (p >= 64) ? 0 : (std::uint64_t(1) << p);
    switch (f) {
      case Filter::All:
        for (std::uint64_t lm = 0; lm < full; ++lm)
          for (std::uint64_t rm = 0; rm < full; ++rm) emit(subset(lm), subset(rm));
        break;
      case Filter::Dicot:
        for (std::uint64_t lm = 1; lm < full; ++lm)
          for (std::uint64_t rm = 1; rm < full; ++rm) emit(subset(lm), subset(rm));
        break;
      case Filter::Binary:
        for (std::size_t li = 0; li <= p; ++li)
          for (std::size_t ri = 0; ri <= p; ++ri) {
            std::vector<GameId> l, r;
            if (li > 0) l.push_back(out.games[li - 1]);
            if (ri > 0) r.push_back(out.games[ri - 1]);
            emit(std::move(l), std::move(r));
          }
        break;
      case Filter::BinaryDicot:
        for (std::size_t li = 0; li < p; ++li)
          for (std::size_t ri = 0; ri < p; ++ri)
            emit({out.games[li]}, {out.games[ri]});
        break;
      case Filter::Impartial:
        for (std::uint64_t m = 1; m < full; ++m) {
          auto s = subset(m);
          auto s2 = s;
          emit(std::move(s), std::move(s2));
        }
        break;
      case Filter::ImpartialBinary:
        for (std::size_t j = 0; j < p; ++j) emit({out.games[j]}, {out.games[j]});
        break;
    }
    out.level_begin.push_back(out.games.size());
  }
  return out;
}

/// Session cache of enumerated spaces keyed by (filter, bound).
class SpaceCache {
 public:
  std::shared_ptr<const EnumSpace> get(GamePool& pool, Filter f, int bound,
                                       std::size_t ceiling = kDefaultSpaceCeiling) {
    std::uint64_t key = (std::uint64_t(static_cast<std::uint8_t>(f)) << 32) | std::uint32_t(bound);
    return map_.get_or_compute(key, [&] {
      return std::make_shared<const EnumSpace>(enumerate(pool, f, bound, ceiling));
    });
  }

 private:
  SyncMap<std::uint64_t, std::shared_ptr<const EnumSpace>> map_;
};

/// Partition of a space under an equivalence operation. The representative
/// is the class member that comes first in the space's order.
struct ClassTable {
  struct EquivClass {
    GameId representative;
    std::vector<GameId> members;
  };
  std::vector<EquivClass> classes;
};

/// Union-find over pairwise tests, with the transitivity shortcut of never
/// re-testing games already merged. Spot-checks that the supplied operation
/// is reflexive on every element and symmetric on a sample.
inline ClassTable classify(std::span<const GameId> space,
                           const std::function<bool(GameId, GameId)>& equiv) {
  const std::size_t n = space.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (std::size_t i = 0; i < n; ++i)
    if (!equiv(space[i], space[i]))
      throw std::logic_error("classify: operation is not reflexive");
  for (std::size_t i = 0; i + 1 < n && i < 8; ++i)
    if (equiv(space[i], space[i + 1]) != equiv(space[i + 1], space[i]))
      throw std::logic_error("classify: operation is not symmetric");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t ri = find(i), rj = find(j);
      if (ri == rj) continue;
      if (equiv(space[i], space[j])) parent[std::max(ri, rj)] = std::min(ri, rj);
    }

  ClassTable out;
  std::unordered_map<std::size_t, std::size_t> class_of_root;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    auto [it, fresh] = class_of_root.emplace(r, out.classes.size());
    if (fresh) out.classes.push_back({space[r], {}});
    out.classes[it->second].members.push_back(space[i]);
  }
  return out;
}

/// Lower bound on the number of dicot equivalence classes at birthday <= 3,
/// obtained by distinguishing games only through contexts born <= dist_bound.
/// Coarser than true dicot equivalence, so the count can only grow with the
/// bound and never exceeds the true class count.
inline std::size_t approx_dicot_classes(GamePool& pool, SpaceCache& spaces, int dist_bound) {
  auto space3 = spaces.get(pool, Filter::Dicot, 3);
  auto ctx = spaces.get(pool, Filter::Dicot, dist_bound);
  if (ctx->games.size() > 16)
    throw std::invalid_argument("approx_dicot_classes: distinguisher bound too large");
  SumOutcomeTable table(pool, Convention::Misere, ctx->games, space3->games);
  std::unordered_set<std::uint64_t> signatures;
  for (GameId g : space3->games) {
    std::uint64_t sig = 0;
    for (GameId x : ctx->games)
      sig = (sig << 2) | static_cast<std::uint64_t>(table.outcome(x, g));
    signatures.insert(sig);
  }
  return signatures.size();
}

}  // namespace misere

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "misere/census.hpp"
#include "misere/constructions.hpp"
#include "misere/game.hpp"
#include "misere/impartial.hpp"
#include "misere/notation.hpp"
#include "misere/outcome.hpp"

namespace misere {

/// A set of contexts to compare modulo: a structural filter plus the
/// birthday bound used whenever enumeration is needed.
struct UniverseSpec {
  Filter filter = Filter::Dicot;
  int bound = 3;
};

enum class CompareStatus : std::uint8_t { Proved, Refuted, Unknown };

/// Three-valued comparison result. Bounded search can refute but never
/// prove; the exact procedures prove or refute outright. A Refuted verdict
/// carries a distinguishing context when one was found in the universe.
struct Verdict {
  CompareStatus status = CompareStatus::Unknown;
  std::optional<GameId> witness;
  std::string method;
  std::optional<int> bound_used;
};

inline const char* compare_status_name(CompareStatus s) {
  switch (s) {
    case CompareStatus::Proved: return "proved";
    case CompareStatus::Refuted: return "refuted";
    case CompareStatus::Unknown: return "unknown";
  }
  return "?";
}

/// Searches the universe for a context X with o-(G+X) not >= o-(H+X).
/// Candidates are visited by descending birthday and, within one birthday,
/// in the space's generation order; the first hit is the witness.
inline Verdict refute_ge_bounded(GamePool& pool, SpaceCache& spaces, GameId g, GameId h,
                                 UniverseSpec u) {
  auto space = spaces.get(pool, u.filter, u.bound);
  std::array<GameId, 2> seeds{g, h};
  SumOutcomeTable table(pool, Convention::Misere, seeds, space->games);
  for (int k = u.bound; k >= 0; --k)
    for (std::size_t idx = space->level_begin[k]; idx < space->level_begin[k + 1]; ++idx) {
      GameId x = space->games[idx];
      if (!outcome_geq(table.outcome(g, x), table.outcome(h, x)))
        return {CompareStatus::Refuted, x, "bounded-search", u.bound};
    }
  return {CompareStatus::Unknown, std::nullopt, "bounded-search", u.bound};
}

/// Exact truth of G >= 0 modulo binary dicot games, which coincides with
/// G >= 0 modulo all dicot games: decided by whether Left wins
/// G + {B_i|0} playing second, with i the birthday of G.
inline bool ge_db_zero(GamePool& pool, GameId g) {
  GameId gadget = pool.intern({b_game(pool, pool.birthday(g))}, {pool.zero()});
  return left_wins(pool, pool.sum(g, gadget), Mover::Second, Convention::Misere);
}

/// Exact truth of G >= H modulo binary dicot games for binary G and H,
/// which coincides with comparison modulo all dicot games. The four-clause
/// recursion; every recursive call strictly decreases the total birthday.
inline bool ge_binary_db(GamePool& pool, GameId g, GameId h) {
  if (!pool.is_binary(g) || !pool.is_binary(h))
    throw std::invalid_argument("ge_binary_db: both games must be binary");
  std::uint64_t key = (std::uint64_t(g.raw) << 32) | h.raw;
  if (auto hit = pool.ge_binary_memo.get(key)) return *hit != 0;

  auto compute = [&]() -> bool {
    Outcome og = outcome(pool, g, Convention::Misere);
    Outcome oh = outcome(pool, h, Convention::Misere);
    // 1. a Right end can only dominate games Right wins moving second
    if (pool.is_right_end(g) && !(oh == Outcome::N || oh == Outcome::R)) return false;
    // 3. nothing above a Left end unless Left wins it moving second
    if (pool.is_left_end(h) && !(og == Outcome::N || og == Outcome::L)) return false;
    // 2. every Right move in G has an answer
    for (GameId gr : pool.right(g)) {
      bool ok = false;
      for (GameId hr : pool.right(h))
        if (ge_binary_db(pool, gr, hr)) ok = true;
      if (!ok)
        for (GameId grl : pool.left(gr))
          if (ge_binary_db(pool, grl, h)) ok = true;
      if (!ok) return false;
    }
    // 4. every Left move in H is matched or bypassed
    for (GameId hl : pool.left(h)) {
      bool ok = false;
      for (GameId gl : pool.left(g))
        if (ge_binary_db(pool, gl, hl)) ok = true;
      if (!ok)
        for (GameId hlr : pool.right(hl))
          if (ge_binary_db(pool, g, hlr)) ok = true;
      if (!ok) return false;
    }
    return true;
  };

  bool res = compute();
  pool.ge_binary_memo.put(key, res ? 1 : 0);
  return res;
}

/// First follower of g with misere outcome L, if any.
inline std::optional<GameId> l_outcome_follower(GamePool& pool, GameId g) {
  for (GameId f : pool.followers(g))
    if (outcome(pool, f, Convention::Misere) == Outcome::L) return f;
  return std::nullopt;
}

/// Exact comparison of a dicot G against a binary H none of whose followers
/// has outcome L, modulo binary dicot games (equivalently, modulo dicot
/// games): one solver call on G + tilde(H, i) with i = max(b(G), b(H)).
/// Each precondition is necessary; violations name the failed hypothesis.
inline Verdict ge_dicot_vs_binary_db(GamePool& pool, GameId g, GameId h) {
  if (!pool.is_dicot(g))
    throw std::invalid_argument("ge_dicot_vs_binary_db: G must be dicot, got " + print(pool, g));
  if (!pool.is_binary(h))
    throw std::invalid_argument("ge_dicot_vs_binary_db: H must be binary, got " + print(pool, h));
  if (auto bad = l_outcome_follower(pool, h))
    throw std::invalid_argument(
        "ge_dicot_vs_binary_db: H has a follower with misere outcome L: " + print(pool, *bad));
  int i = std::max(pool.birthday(g), pool.birthday(h));
  GameId t = tilde(pool, h, i);
  if (left_wins(pool, pool.sum(g, t), Mover::Second, Convention::Misere))
    return {CompareStatus::Proved, std::nullopt, "carac", std::nullopt};
  return {CompareStatus::Refuted, t, "carac", std::nullopt};
}

/// G is downlinked to H modulo binary dicot games iff no Left option of G
/// dominates H and no Right option of H is dominated by G.
inline bool downlinked_db(GamePool& pool, GameId g, GameId h) {
  if (!pool.is_binary(g) || !pool.is_binary(h))
    throw std::invalid_argument("downlinked_db: both games must be binary");
  for (GameId gl : pool.left(g))
    if (ge_binary_db(pool, gl, h)) return false;
  for (GameId hr : pool.right(h))
    if (ge_binary_db(pool, g, hr)) return false;
  return true;
}

namespace detail {

// o-(a+x) <= P and o-(b+x) >= N
inline bool a_witness_ok(GamePool& pool, GameId a, GameId b, GameId x) {
  return outcome_geq(Outcome::P, sum_outcome(pool, a, x)) &&
         outcome_geq(sum_outcome(pool, b, x), Outcome::N);
}

// o-(a+x) <= N and o-(b+x) >= P
inline bool b_witness_ok(GamePool& pool, GameId a, GameId b, GameId x) {
  return outcome_geq(Outcome::N, sum_outcome(pool, a, x)) &&
         outcome_geq(sum_outcome(pool, b, x), Outcome::P);
}

template <class Pred>
inline std::optional<GameId> scan_binary_dicots(GamePool& pool, SpaceCache& spaces, int max_bound,
                                                Pred&& ok) {
  auto space = spaces.get(pool, Filter::BinaryDicot, max_bound);
  for (GameId x : space->games)
    if (ok(x)) return x;
  return std::nullopt;
}

// Witness with o-(a+Y) <= P and o-(b+Y) >= N: direct search first, then the
// transfer construction from a witness of the opposite kind.
inline GameId find_a_witness(GamePool& pool, SpaceCache& spaces, GameId a, GameId b,
                             int max_bound);

inline GameId find_b_witness(GamePool& pool, SpaceCache& spaces, GameId a, GameId b,
                             int max_bound) {
  if (auto hit = scan_binary_dicots(pool, spaces, max_bound,
                                    [&](GameId x) { return b_witness_ok(pool, a, b, x); }))
    return *hit;
  if (auto y = scan_binary_dicots(pool, spaces, max_bound,
                                  [&](GameId x) { return a_witness_ok(pool, a, b, x); })) {
    GameId z = pool.is_right_end(b)
                   ? pool.intern({pool.zero()}, {*y})
                   : pool.intern({adjoint(pool, pool.right(b).front())}, {*y});
    if (!b_witness_ok(pool, a, b, z))
      throw std::logic_error("find_b_witness: transfer construction failed to validate");
    return z;
  }
  throw std::runtime_error("find_b_witness: no sub-witness within birthday bound " +
                           std::to_string(max_bound));
}

inline GameId find_a_witness(GamePool& pool, SpaceCache& spaces, GameId a, GameId b,
                             int max_bound) {
  if (auto hit = scan_binary_dicots(pool, spaces, max_bound,
                                    [&](GameId x) { return a_witness_ok(pool, a, b, x); }))
    return *hit;
  if (auto z = scan_binary_dicots(pool, spaces, max_bound,
                                  [&](GameId x) { return b_witness_ok(pool, a, b, x); })) {
    GameId y = pool.is_left_end(a)
                   ? pool.intern({*z}, {pool.zero()})
                   : pool.intern({*z}, {adjoint(pool, pool.left(a).front())});
    if (!a_witness_ok(pool, a, b, y))
      throw std::logic_error("find_a_witness: transfer construction failed to validate");
    return y;
  }
  throw std::runtime_error("find_a_witness: no sub-witness within birthday bound " +
                           std::to_string(max_bound));
}

}  // namespace detail

/// For binary G downlinked to binary H, builds a binary dicot T with
/// o-(G+T) <= P <= o-(H+T), following the end-aware case table; the interior
/// cases take their sub-witnesses from bounded search plus the transfer
/// constructions. The postcondition is re-checked on every produced T.
inline GameId build_downlink_witness(GamePool& pool, SpaceCache& spaces, GameId g, GameId h,
                                     int max_bound = 5) {
  if (!pool.is_binary(g) || !pool.is_binary(h))
    throw std::invalid_argument("build_downlink_witness: both games must be binary");
  if (!downlinked_db(pool, g, h))
    throw std::invalid_argument("build_downlink_witness: G is not downlinked to H");

  std::vector<GameId> tl, tr;
  if (pool.is_right_end(g) && pool.is_right_end(h))
    tl.push_back(pool.zero());
  else if (pool.is_right_end(h))
    tl.push_back(adjoint(pool, pool.right(g).front()));
  else
    tl.push_back(detail::find_b_witness(pool, spaces, g, pool.right(h).front(), max_bound));

  if (pool.is_left_end(g) && pool.is_left_end(h))
    tr.push_back(pool.zero());
  else if (pool.is_left_end(g))
    tr.push_back(adjoint(pool, pool.left(h).front()));
  else
    tr.push_back(detail::find_a_witness(pool, spaces, pool.left(g).front(), h, max_bound));

  GameId t = pool.intern(std::move(tl), std::move(tr));
  if (!outcome_geq(Outcome::P, sum_outcome(pool, g, t)) ||
      !outcome_geq(sum_outcome(pool, h, t), Outcome::P))
    throw std::logic_error("build_downlink_witness: constructed T fails o-(G+T) <= P <= o-(H+T)");
  return t;
}

/// Normal-play comparison: Left wins G + conj(H) moving second.
inline bool ge_normal(GamePool& pool, GameId g, GameId h) {
  return left_wins(pool, pool.sum(g, pool.conjugate(h)), Mover::Second, Convention::Normal);
}

namespace detail {

// After an exact refutation under the zero procedure, prefer the adjoint of
// G as the reported witness when it is admissible and actually separates;
// the {B_i|0} gadget always does.
inline GameId carac0_witness(GamePool& pool, GameId g, Filter filter) {
  GameId adj = adjoint(pool, g);
  bool admissible = filter == Filter::Dicot || pool.is_binary(g);
  if (admissible &&
      !outcome_geq(sum_outcome(pool, g, adj), outcome(pool, adj, Convention::Misere)))
    return adj;
  return pool.intern({b_game(pool, pool.birthday(g))}, {pool.zero()});
}

}  // namespace detail

/// Routes to the strongest exact procedure available for the pair and the
/// universe, falling back to bounded distinguisher search. The method tag
/// records which route decided.
inline Verdict compare(GamePool& pool, SpaceCache& spaces, GameId g, GameId h, UniverseSpec u) {
  if (g == h) return {CompareStatus::Proved, std::nullopt, "reflexivity", std::nullopt};

  auto scanned_witness = [&]() -> std::optional<GameId> {
    return refute_ge_bounded(pool, spaces, g, h, u).witness;
  };

  if (u.filter == Filter::Dicot || u.filter == Filter::BinaryDicot) {
    if (h == pool.zero()) {
      if (ge_db_zero(pool, g))
        return {CompareStatus::Proved, std::nullopt, "carac0", std::nullopt};
      return {CompareStatus::Refuted, detail::carac0_witness(pool, g, u.filter), "carac0",
              std::nullopt};
    }
    if (pool.is_binary(g) && pool.is_binary(h)) {
      if (ge_binary_db(pool, g, h))
        return {CompareStatus::Proved, std::nullopt, "binary-recursion", std::nullopt};
      return {CompareStatus::Refuted, scanned_witness(), "binary-recursion", u.bound};
    }
    if (pool.is_dicot(g) && pool.is_binary(h) && !l_outcome_follower(pool, h))
      return ge_dicot_vs_binary_db(pool, g, h);
    if (pool.is_impartial(g) && pool.is_impartial(h)) {
      if (equivalent_impartial(pool, g, h))
        return {CompareStatus::Proved, std::nullopt, "impartial-canonical", std::nullopt};
      if (u.filter == Filter::Dicot)
        return {CompareStatus::Refuted, scanned_witness(), "impartial-canonical", u.bound};
    }
    return refute_ge_bounded(pool, spaces, g, h, u);
  }

  if (pool.is_impartial(g) && pool.is_impartial(h) &&
      (u.filter == Filter::Impartial || u.filter == Filter::All)) {
    if (equivalent_impartial(pool, g, h)) {
      if (u.filter == Filter::Impartial)
        return {CompareStatus::Proved, std::nullopt, "impartial-canonical", std::nullopt};
    } else {
      return {CompareStatus::Refuted, scanned_witness(), "impartial-canonical", u.bound};
    }
  }
  return refute_ge_bounded(pool, spaces, g, h, u);
}

}  // namespace misere

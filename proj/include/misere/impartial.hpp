#pragma once

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "misere/census.hpp"
#include "misere/game.hpp"
#include "misere/notation.hpp"
#include "misere/outcome.hpp"
#include "misere/report.hpp"

namespace misere {

/// Misere canonical form of an impartial game.
///
/// Bottom-up: canonicalize the options into a set O, then look for a
/// reversing candidate c among the options of members of O. A candidate is
/// accepted when (i) every option of c lies in O, (ii) every member of O
/// that is not an option of c has c among its own options, and (iii) c has
/// the same misere outcome as {O|O}. Theory makes an accepted candidate
/// unique; two distinct accepted candidates abort loudly rather than guess.
inline GameId canonical_impartial(GamePool& pool, GameId g) {
  if (!pool.is_impartial(g))
    throw std::invalid_argument("canonical_impartial: game is not impartial");
  if (auto hit = pool.canonical_memo.get(g.raw)) return GameId{*hit};

  std::vector<GameId> opts;
  for (GameId o : pool.left(g)) opts.push_back(canonical_impartial(pool, o));
  std::sort(opts.begin(), opts.end());
  opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
  GameId base = pool.intern(opts, opts);

  std::vector<GameId> candidates;
  for (GameId o : opts)
    for (GameId c : pool.left(o)) candidates.push_back(c);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  Outcome base_outcome = outcome(pool, base, Convention::Misere);
  GameId winner;
  for (GameId c : candidates) {
    auto copts = pool.left(c);
    bool ok = std::all_of(copts.begin(), copts.end(), [&](GameId co) {
      return std::binary_search(opts.begin(), opts.end(), co);
    });
    if (!ok) continue;
    for (GameId o : opts) {
      if (std::binary_search(copts.begin(), copts.end(), o)) continue;
      auto oopts = pool.left(o);
      if (!std::binary_search(oopts.begin(), oopts.end(), c)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (outcome(pool, c, Convention::Misere) != base_outcome) continue;
    if (winner.valid() && winner != c)
      throw std::logic_error("canonical_impartial: two distinct reversing candidates for " +
                             print(pool, g));
    winner = c;
  }

  GameId res = winner.valid() ? winner : base;
  pool.canonical_memo.put(g.raw, res.raw);
  pool.canonical_memo.put(base.raw, res.raw);
  return res;
}

/// Impartial games are equivalent modulo the impartial universe exactly when
/// their canonical forms coincide; non-equivalent impartial games are
/// incomparable, so this boolean classifies the pair completely.
inline bool equivalent_impartial(GamePool& pool, GameId g, GameId h) {
  if (!pool.is_impartial(g) || !pool.is_impartial(h))
    throw std::invalid_argument("equivalent_impartial: both games must be impartial");
  return canonical_impartial(pool, g) == canonical_impartial(pool, h);
}

/// For every impartially-equivalent pair born <= pairs_bound, sweeps all
/// dicot contexts born <= distinguisher_bound for an outcome difference.
/// Zero violations is the expected result.
inline Report verify_i_to_d(GamePool& pool, SpaceCache& spaces, int pairs_bound,
                            int distinguisher_bound) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.theorem = "i2d";
  rep.anchor = "impartially equivalent impartial games are equivalent modulo dicot games";
  rep.params = {{"pairs_bound", pairs_bound}, {"dist_bound", distinguisher_bound}};

  auto impartials = spaces.get(pool, Filter::Impartial, pairs_bound);
  auto contexts = spaces.get(pool, Filter::Dicot, distinguisher_bound);
  SumOutcomeTable table(pool, Convention::Misere, impartials->games, contexts->games);

  for (std::size_t i = 0; i < impartials->games.size(); ++i)
    for (std::size_t j = i + 1; j < impartials->games.size(); ++j) {
      GameId g = impartials->games[i], h = impartials->games[j];
      if (!equivalent_impartial(pool, g, h)) continue;
      for (GameId x : contexts->games) {
        ++rep.instances_checked;
        Outcome og = table.outcome(g, x), oh = table.outcome(h, x);
        if (og != oh) {
          rep.status = Report::Status::Fail;
          if (rep.counterexamples.size() < 8)
            rep.counterexamples.push_back({print(pool, g), print(pool, h), print(pool, x),
                                           std::string(1, outcome_char(og)) + " on both",
                                           std::string(1, outcome_char(og)) + " vs " +
                                               outcome_char(oh)});
        }
      }
    }

  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

}  // namespace misere

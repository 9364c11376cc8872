#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "misere/census.hpp"
#include "misere/constructions.hpp"
#include "misere/notation.hpp"
#include "misere/outcome.hpp"

using namespace misere;

namespace {

// reference solver: direct alternating recursion, no memoization
bool ref_wins(GamePool& pool, GameId g, bool left_to_move, Convention conv) {
  auto opts = left_to_move ? pool.left(g) : pool.right(g);
  if (opts.empty()) return conv == Convention::Misere;
  for (GameId o : opts)
    if (!ref_wins(pool, o, !left_to_move, conv)) return true;
  return false;
}

Outcome ref_outcome(GamePool& pool, GameId g, Convention conv) {
  return outcome_from_bits(ref_wins(pool, g, true, conv), ref_wins(pool, g, false, conv));
}

GameId random_tree(GamePool& pool, std::mt19937& rng, int max_birthday) {
  if (max_birthday == 0) return pool.zero();
  std::uniform_int_distribution<int> nopts(0, 3);
  std::uniform_int_distribution<int> depth(0, max_birthday - 1);
  std::vector<GameId> l, r;
  for (int k = nopts(rng); k > 0; --k) l.push_back(random_tree(pool, rng, depth(rng)));
  for (int k = nopts(rng); k > 0; --k) r.push_back(random_tree(pool, rng, depth(rng)));
  return pool.intern(std::move(l), std::move(r));
}

}  // namespace

TEST_CASE("misere outcomes of the named games", "[solver]") {
  GamePool pool;
  CHECK(outcome(pool, pool.zero()) == Outcome::N);
  CHECK(outcome(pool, pool.star()) == Outcome::P);
  CHECK(outcome(pool, int_game(pool, 1)) == Outcome::R);
  CHECK(outcome(pool, s_game(pool, 2)) == Outcome::N);
  CHECK(outcome(pool, named(pool, NamedGame::Z)) == Outcome::N);
  CHECK(outcome(pool, named(pool, NamedGame::Ga)) == Outcome::R);
  CHECK(outcome(pool, named(pool, NamedGame::I)) == Outcome::L);
  CHECK(outcome(pool, named(pool, NamedGame::S)) == Outcome::L);
  CHECK(outcome(pool, pool.zero(), Convention::Normal) == Outcome::P);

  // two-ply expansions agree with the reference solver
  CHECK(ref_outcome(pool, pool.star(), Convention::Misere) == Outcome::P);
  CHECK(ref_outcome(pool, s_game(pool, 2), Convention::Misere) == Outcome::N);
}

TEST_CASE("outcome partial order", "[solver]") {
  for (Outcome o : {Outcome::L, Outcome::N, Outcome::P, Outcome::R})
    CHECK(outcome_geq(o, o));
  CHECK(outcome_geq(Outcome::L, Outcome::P));
  CHECK(outcome_geq(Outcome::L, Outcome::N));
  CHECK(outcome_geq(Outcome::L, Outcome::R));
  CHECK(outcome_geq(Outcome::N, Outcome::R));
  CHECK(outcome_geq(Outcome::P, Outcome::R));
  CHECK_FALSE(outcome_geq(Outcome::N, Outcome::P));
  CHECK_FALSE(outcome_geq(Outcome::P, Outcome::N));
  CHECK_FALSE(outcome_geq(Outcome::R, Outcome::L));
  CHECK_FALSE(outcome_geq(Outcome::P, Outcome::L));
}

TEST_CASE("left_wins projections", "[solver]") {
  GamePool pool;
  CHECK(left_wins(pool, pool.zero(), Mover::First));
  CHECK(left_wins(pool, pool.star(), Mover::Second));
  CHECK_FALSE(left_wins(pool, pool.star(), Mover::First));
  GameId i = named(pool, NamedGame::I);
  CHECK(left_wins(pool, i, Mover::First));
  CHECK(left_wins(pool, i, Mover::Second));
}

TEST_CASE("mirror symmetry under conjugation", "[solver]") {
  GamePool pool;
  auto mirrored = [](Outcome o) {
    switch (o) {
      case Outcome::L: return Outcome::R;
      case Outcome::R: return Outcome::L;
      default: return o;
    }
  };
  std::mt19937 rng(7);
  std::vector<GameId> games = enumerate(pool, Filter::Binary, 3).games;
  auto imp = enumerate(pool, Filter::Impartial, 3).games;
  games.insert(games.end(), imp.begin(), imp.end());
  for (int k = 0; k < 300; ++k) games.push_back(random_tree(pool, rng, 3));
  for (GameId g : games)
    for (Convention conv : {Convention::Misere, Convention::Normal})
      CHECK(outcome(pool, pool.conjugate(g), conv) == mirrored(outcome(pool, g, conv)));
}

TEST_CASE("a P-position plus star is an N-position", "[solver]") {
  GamePool pool;
  EnumSpace space = enumerate(pool, Filter::All, 2);
  int hits = 0;
  for (GameId g : space.games) {
    if (outcome(pool, g) != Outcome::P) continue;
    ++hits;
    CHECK(sum_outcome(pool, g, pool.star()) == Outcome::N);
  }
  CHECK(hits > 0);
}

TEST_CASE("memoized solver agrees with the reference on random games", "[solver]") {
  GamePool pool;
  std::mt19937 rng(20260809);
  for (int k = 0; k < 500; ++k) {
    GameId g = random_tree(pool, rng, 4);
    for (Convention conv : {Convention::Misere, Convention::Normal})
      REQUIRE(outcome(pool, g, conv) == ref_outcome(pool, g, conv));
  }
}

TEST_CASE("sum table agrees with expanded-sum outcomes", "[solver]") {
  GamePool pool;
  EnumSpace rows = enumerate(pool, Filter::Binary, 2);
  EnumSpace cols = enumerate(pool, Filter::Dicot, 2);
  for (Convention conv : {Convention::Misere, Convention::Normal}) {
    SumOutcomeTable table(pool, conv, rows.games, cols.games);
    for (GameId a : rows.games)
      for (GameId x : cols.games)
        REQUIRE(table.outcome(a, x) == outcome(pool, pool.sum(a, x), conv));
  }
}

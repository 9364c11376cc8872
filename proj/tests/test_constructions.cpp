#include "catch2/catch_amalgamated.hpp"
#include "misere/census.hpp"
#include "misere/constructions.hpp"
#include "misere/notation.hpp"
#include "misere/outcome.hpp"

using namespace misere;

TEST_CASE("named games have the exact trees", "[constructions]") {
  GamePool pool;
  GameId z = pool.zero(), st = pool.star();
  GameId star_zero = pool.intern({st}, {z});

  CHECK(named(pool, NamedGame::I) == pool.intern({st}, {star_zero}));
  GameId two = pool.intern({z, st}, {z, st});
  CHECK(named(pool, NamedGame::S) == pool.intern({z, st}, {two}));
  CHECK(named(pool, NamedGame::Z) == pool.intern({named(pool, NamedGame::I)}, {st}));
  CHECK(named(pool, NamedGame::Ga) == pool.intern({z}, {st}));
  CHECK(b_game(pool, 0) == named(pool, NamedGame::Ga));

  GameId half = pool.intern({z}, {b_game(pool, 0)});
  GameId twin = pool.intern({half}, {half});
  CHECK(b_game(pool, 1) == pool.intern({twin}, {half}));

  CHECK(int_game(pool, 0) == z);
  CHECK(int_game(pool, 2) == pool.intern({int_game(pool, 1)}, {}));
  CHECK(s_game(pool, 1) == st);
  CHECK(s_game(pool, 2) == pool.sum(st, st));
}

TEST_CASE("adjoint case split", "[constructions]") {
  GamePool pool;
  CHECK(adjoint(pool, pool.zero()) == pool.star());
  // a Right end: {0|(left options)^o}
  CHECK(adjoint(pool, int_game(pool, 1)) == b_game(pool, 0));
  // the general case: both option sets become {*}
  CHECK(adjoint(pool, pool.star()) == pool.intern({pool.star()}, {pool.star()}));
  // a Left end: {(right options)^o|0}
  GameId cone = pool.conjugate(int_game(pool, 1));
  CHECK(adjoint(pool, cone) == pool.intern({pool.star()}, {pool.zero()}));
}

TEST_CASE("adjoint lands in the dicot universe", "[constructions]") {
  GamePool pool;
  for (GameId g : enumerate(pool, Filter::Binary, 3).games) {
    CHECK(pool.is_dicot(adjoint(pool, g)));
    CHECK(pool.is_binary(adjoint(pool, g)));
  }
  for (GameId g : enumerate(pool, Filter::Impartial, 3).games)
    CHECK(pool.is_dicot(adjoint(pool, g)));
  for (GameId g : enumerate(pool, Filter::All, 2).games)
    CHECK(pool.is_dicot(adjoint(pool, g)));
}

TEST_CASE("tilde case split and properties", "[constructions]") {
  GamePool pool;
  GameId t01 = tilde(pool, pool.zero(), 1);
  CHECK(t01 == pool.intern({b_game(pool, 1)}, {pool.zero()}));
  CHECK(tilde(pool, pool.star(), 1) == pool.intern({t01}, {t01}));
  CHECK_THROWS_AS(tilde(pool, pool.zero(), -1), std::invalid_argument);

  for (GameId g : enumerate(pool, Filter::Binary, 3).games) {
    GameId t = tilde(pool, g, pool.birthday(g));
    CHECK(pool.is_binary(t));
    CHECK(pool.is_dicot(t));
    // the companion property: G + tilde(G, b(G)) is a P-position
    CHECK(sum_outcome(pool, g, t) == Outcome::P);
  }
}

TEST_CASE("family outcomes", "[constructions]") {
  GamePool pool;
  CHECK(outcome(pool, b_game(pool, 0)) == Outcome::R);
  CHECK(outcome(pool, named(pool, NamedGame::I)) == Outcome::L);
  CHECK(sum_outcome(pool, pool.zero(), b_game(pool, 0)) == Outcome::R);
}

TEST_CASE("companions force all four outcomes", "[constructions]") {
  GamePool pool;
  CHECK(companions(pool, pool.zero()).for_p == pool.star());
  for (GameId g : {pool.zero(), pool.star(), int_game(pool, 1), b_game(pool, 0),
                   named(pool, NamedGame::I)}) {
    Companions c = companions(pool, g);
    CHECK(sum_outcome(pool, g, c.for_p) == Outcome::P);
    CHECK(sum_outcome(pool, g, c.for_n) == Outcome::N);
    CHECK(sum_outcome(pool, g, c.for_l) == Outcome::L);
    CHECK(sum_outcome(pool, g, c.for_r) == Outcome::R);
  }
}

TEST_CASE("B_i companions", "[constructions]") {
  GamePool pool;
  CHECK_THROWS_AS(bi_companions(pool, named(pool, NamedGame::I), 2), std::invalid_argument);

  BiCompanions c0 = bi_companions(pool, pool.zero(), 0);
  CHECK(sum_outcome(pool, pool.zero(), c0.for_r) == Outcome::R);
  CHECK(sum_outcome(pool, pool.zero(), c0.for_l) == Outcome::L);

  BiCompanions c1 = bi_companions(pool, pool.star(), 1);
  CHECK(sum_outcome(pool, pool.star(), c1.for_n) == Outcome::N);
}

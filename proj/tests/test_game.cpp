#include <algorithm>
#include <thread>

#include "catch2/catch_amalgamated.hpp"
#include "misere/census.hpp"
#include "misere/constructions.hpp"
#include "misere/game.hpp"

using namespace misere;

namespace {

// independent birthday oracle: plain recursion on the stored structure
int naive_birthday(GamePool& pool, GameId g) {
  int b = 0;
  for (auto side : {pool.left(g), pool.right(g)})
    for (GameId o : side) b = std::max(b, naive_birthday(pool, o) + 1);
  return b;
}

}  // namespace

TEST_CASE("interning is canonical and idempotent", "[game]") {
  GamePool pool;
  GameId zero = pool.intern({}, {});
  CHECK(zero == pool.zero());

  GameId star = pool.intern({zero}, {zero});
  CHECK(star == pool.star());
  CHECK(pool.intern({zero}, {zero}) == star);
  CHECK(pool.intern({zero, zero}, {zero}) == star);  // duplicates collapse

  GameId a = pool.intern({zero, star}, {star});
  GameId b = pool.intern({star, zero}, {star});  // order does not matter
  CHECK(a == b);

  CHECK_THROWS_AS(pool.intern({GameId{999999}}, {}), std::invalid_argument);
}

TEST_CASE("re-interning an enumerated tree returns the same id", "[game]") {
  GamePool pool;
  for (Filter f : {Filter::BinaryDicot, Filter::Impartial}) {
    EnumSpace space = enumerate(pool, f, 3);
    for (GameId g : space.games) {
      std::vector<GameId> l(pool.left(g).begin(), pool.left(g).end());
      std::vector<GameId> r(pool.right(g).begin(), pool.right(g).end());
      REQUIRE(pool.intern(std::move(l), std::move(r)) == g);
    }
  }
}

TEST_CASE("sum basics", "[game]") {
  GamePool pool;
  GameId star = pool.star();
  GameId i = named(pool, NamedGame::I);

  CHECK(pool.sum(pool.zero(), i) == i);
  CHECK(pool.sum(i, pool.zero()) == i);

  // expanding *+* by hand: both players' moves lead to 0+* = *, so the two
  // options per side collapse to one
  GameId expected = pool.intern({star}, {star});
  CHECK(pool.sum(star, star) == expected);

  EnumSpace space = enumerate(pool, Filter::All, 1);
  for (GameId g : space.games)
    for (GameId h : space.games) CHECK(pool.sum(g, h) == pool.sum(h, g));
}

TEST_CASE("conjugate is an involution and distributes over sums", "[game]") {
  GamePool pool;
  CHECK(pool.conjugate(pool.zero()) == pool.zero());
  GameId one = int_game(pool, 1);
  CHECK(pool.conjugate(one) == pool.intern({}, {pool.zero()}));

  EnumSpace space = enumerate(pool, Filter::All, 2);
  for (GameId g : space.games) CHECK(pool.conjugate(pool.conjugate(g)) == g);

  for (GameId g : space.games)
    for (GameId h : space.games)
      REQUIRE(pool.conjugate(pool.sum(g, h)) ==
              pool.sum(pool.conjugate(g), pool.conjugate(h)));
}

TEST_CASE("birthday", "[game]") {
  GamePool pool;
  CHECK(pool.birthday(pool.zero()) == 0);
  CHECK(pool.birthday(pool.star()) == 1);
  CHECK(pool.birthday(b_game(pool, 0)) == 2);
  CHECK(pool.birthday(b_game(pool, 1)) == 5);
  CHECK(pool.birthday(b_game(pool, 1)) == naive_birthday(pool, b_game(pool, 1)));

  EnumSpace space = enumerate(pool, Filter::All, 2);
  for (GameId g : space.games)
    for (GameId h : space.games)
      REQUIRE(pool.birthday(pool.sum(g, h)) == pool.birthday(g) + pool.birthday(h));
}

TEST_CASE("followers", "[game]") {
  GamePool pool;
  CHECK(pool.followers(pool.zero()) == std::vector<GameId>{pool.zero()});

  auto fstar = pool.followers(pool.star());
  CHECK(fstar == std::vector<GameId>{pool.zero(), pool.star()});

  GameId b0 = b_game(pool, 0);
  auto fb0 = pool.followers(b0);
  std::vector<GameId> expected{pool.zero(), pool.star(), b0};
  std::sort(expected.begin(), expected.end());
  CHECK(fb0 == expected);
}

TEST_CASE("structural predicates", "[game]") {
  GamePool pool;
  GameId one = int_game(pool, 1);
  GameId cone = pool.conjugate(one);

  CHECK_FALSE(pool.is_dicot(one));
  CHECK(pool.is_left_end(cone));
  CHECK_FALSE(pool.is_left_end(one));
  CHECK(pool.is_right_end(one));
  CHECK(pool.is_dicot(pool.zero()));
  CHECK(pool.is_dicot(pool.star()));

  for (int i = 0; i <= 3; ++i) {
    CHECK(pool.is_binary(b_game(pool, i)));
    CHECK(pool.is_dicot(b_game(pool, i)));
  }
  for (int i = 0; i <= 5; ++i) {
    CHECK(pool.is_impartial(s_game(pool, i)));
    CHECK(pool.is_binary(s_game(pool, i)));
    CHECK(pool.is_dicot(s_game(pool, i)));
  }

  // impartial games are their own conjugates
  EnumSpace imp = enumerate(pool, Filter::Impartial, 3);
  for (GameId g : imp.games) CHECK(pool.conjugate(g) == g);

  // impartial and binary forces the s_i shape
  EnumSpace ib = enumerate(pool, Filter::ImpartialBinary, 5);
  REQUIRE(ib.games.size() == 6);
  for (int i = 0; i <= 5; ++i) {
    CHECK(ib.games[i] == s_game(pool, i));
    CHECK(pool.birthday(ib.games[i]) == i);
  }
}

TEST_CASE("concurrent interning is idempotent", "[game]") {
  GamePool pool;
  std::vector<std::vector<GameId>> results(4);
  auto worker = [&pool](std::vector<GameId>& out) {
    GameId g = pool.zero();
    for (int k = 0; k < 200; ++k) {
      g = pool.intern({g}, {g, pool.star()});
      out.push_back(g);
    }
  };
  std::vector<std::thread> threads;
  for (auto& r : results) threads.emplace_back(worker, std::ref(r));
  for (auto& t : threads) t.join();
  for (const auto& r : results) REQUIRE(r == results[0]);
}

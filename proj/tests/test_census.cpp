#include "catch2/catch_amalgamated.hpp"
#include "misere/census.hpp"
#include "misere/comparison.hpp"
#include "misere/impartial.hpp"

using namespace misere;

TEST_CASE("space sizes", "[census]") {
  GamePool pool;
  CHECK(enumerate(pool, Filter::All, 0).size() == 1);
  CHECK(enumerate(pool, Filter::All, 1).size() == 4);
  CHECK(enumerate(pool, Filter::All, 2).size() == 256);
  CHECK(enumerate(pool, Filter::Binary, 1).size() == 4);
  CHECK(enumerate(pool, Filter::Binary, 2).size() == 25);
  CHECK(enumerate(pool, Filter::Binary, 3).size() == 676);
  CHECK(enumerate(pool, Filter::Dicot, 2).size() == 10);
  CHECK(enumerate(pool, Filter::BinaryDicot, 2).size() == 5);
  CHECK(enumerate(pool, Filter::BinaryDicot, 3).size() == 26);
  CHECK(enumerate(pool, Filter::Impartial, 2).size() == 4);
  CHECK(enumerate(pool, Filter::Impartial, 3).size() == 16);
}

TEST_CASE("level growth laws hold against direct enumeration", "[census]") {
  GamePool pool;
  for (int n = 0; n <= 2; ++n) {
    double bin = double(enumerate(pool, Filter::Binary, n).size());
    CHECK(double(enumerate(pool, Filter::Binary, n + 1).size()) == (bin + 1) * (bin + 1));
    double bd = double(enumerate(pool, Filter::BinaryDicot, n).size());
    CHECK(double(enumerate(pool, Filter::BinaryDicot, n + 1).size()) == bd * bd + 1);
    double imp = double(enumerate(pool, Filter::Impartial, n).size());
    CHECK(double(enumerate(pool, Filter::Impartial, n + 1).size()) ==
          std::pow(2.0, imp) - 1 + 1);
  }
}

TEST_CASE("spaces are follower-closed and respect their filters", "[census]") {
  GamePool pool;
  for (Filter f : {Filter::BinaryDicot, Filter::Impartial, Filter::Dicot}) {
    EnumSpace space = enumerate(pool, f, f == Filter::Dicot ? 2 : 3);
    for (GameId g : space.games) {
      for (GameId follower : pool.followers(g)) CHECK(space.contains(follower));
      if (f == Filter::BinaryDicot) CHECK((pool.is_binary(g) && pool.is_dicot(g)));
      if (f == Filter::Impartial) CHECK(pool.is_impartial(g));
      if (f == Filter::Dicot) CHECK(pool.is_dicot(g));
    }
  }
}

TEST_CASE("conjugation maps spaces onto themselves", "[census]") {
  GamePool pool;
  EnumSpace dicots = enumerate(pool, Filter::Dicot, 2);
  std::unordered_set<GameId, GameIdHash> image;
  for (GameId g : dicots.games) {
    GameId c = pool.conjugate(g);
    CHECK(dicots.contains(c));
    image.insert(c);
  }
  CHECK(image.size() == dicots.size());

  for (GameId g : enumerate(pool, Filter::Impartial, 3).games)
    CHECK(pool.conjugate(g) == g);
}

TEST_CASE("levels partition by birthday", "[census]") {
  GamePool pool;
  EnumSpace space = enumerate(pool, Filter::BinaryDicot, 3);
  for (int k = 0; k <= 3; ++k)
    for (std::size_t i = space.level_begin[k]; i < space.level_begin[k + 1]; ++i)
      CHECK(pool.birthday(space.games[i]) == k);
}

TEST_CASE("enumeration is deterministic across pools", "[census]") {
  GamePool a, b;
  // give the pools different interning histories first
  (void)named(a, NamedGame::S);
  (void)b_game(b, 2);
  EnumSpace sa = enumerate(a, Filter::BinaryDicot, 3);
  EnumSpace sb = enumerate(b, Filter::BinaryDicot, 3);
  REQUIRE(sa.size() == sb.size());
  for (std::size_t i = 0; i < sa.size(); ++i)
    CHECK(print(a, sa.games[i]) == print(b, sb.games[i]));
}

TEST_CASE("the resource guard refuses runaway spaces", "[census]") {
  GamePool pool;
  CHECK_THROWS_AS(enumerate(pool, Filter::All, 3), std::length_error);
  CHECK_THROWS_AS(enumerate(pool, Filter::Dicot, 4), std::length_error);
  CHECK_THROWS_AS(enumerate(pool, Filter::Impartial, 5), std::length_error);
}

TEST_CASE("classification", "[census]") {
  GamePool pool;
  EnumSpace space = enumerate(pool, Filter::Impartial, 2);

  ClassTable identity = classify(space.games, [](GameId a, GameId b) { return a == b; });
  CHECK(identity.classes.size() == space.size());

  ClassTable canon = classify(space.games, [&](GameId a, GameId b) {
    return equivalent_impartial(pool, a, b);
  });
  std::unordered_set<GameId, GameIdHash> forms;
  for (GameId g : space.games) forms.insert(canonical_impartial(pool, g));
  CHECK(canon.classes.size() == forms.size());

  // representatives come first in space order
  for (const auto& cls : canon.classes)
    for (GameId m : cls.members) CHECK(cls.representative <= m);
}

TEST_CASE("binary dicot census: 26 trees, 13 classes", "[census]") {
  GamePool pool;
  EnumSpace space = enumerate(pool, Filter::BinaryDicot, 3);
  REQUIRE(space.size() == 26);
  ClassTable classes = classify(space.games, [&](GameId a, GameId b) {
    return ge_binary_db(pool, a, b) && ge_binary_db(pool, b, a);
  });
  CHECK(classes.classes.size() == 13);

  // mutual dominance classes order without cycles: strict dominance between
  // representatives is antisymmetric
  for (const auto& ca : classes.classes)
    for (const auto& cb : classes.classes) {
      if (ca.representative == cb.representative) continue;
      bool ab = ge_binary_db(pool, ca.representative, cb.representative);
      bool ba = ge_binary_db(pool, cb.representative, ca.representative);
      CHECK_FALSE((ab && ba));
    }
}

TEST_CASE("approximate dicot census is monotone", "[census]") {
  GamePool pool;
  SpaceCache spaces;
  std::size_t c1 = approx_dicot_classes(pool, spaces, 1);
  std::size_t c2 = approx_dicot_classes(pool, spaces, 2);
  CHECK(c1 <= c2);
  CHECK(c2 <= 1268);
  CHECK(c1 >= 4);  // the four outcomes alone already split the space
}

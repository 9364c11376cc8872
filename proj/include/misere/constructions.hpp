#pragma once

#include <stdexcept>
#include <vector>

#include "misere/game.hpp"
#include "misere/outcome.hpp"

namespace misere {

/// n as a game: 0 has no options, n+1 = {n|.}.
inline GameId int_game(GamePool& pool, int n) {
  if (n < 0) throw std::invalid_argument("int_game: n must be non-negative");
  GameId g = pool.zero();
  for (int k = 0; k < n; ++k) g = pool.intern({g}, {});
  return g;
}

/// B_0 = {0|*}, B_{i+1} = {{{0|B_i}|{0|B_i}}|{0|B_i}}. Binary dicot for all i.
inline GameId b_game(GamePool& pool, int i) {
  if (i < 0) throw std::invalid_argument("b_game: index must be non-negative");
  GameId b = pool.intern({pool.zero()}, {pool.star()});
  for (int k = 0; k < i; ++k) {
    GameId half = pool.intern({pool.zero()}, {b});
    GameId twin = pool.intern({half}, {half});
    b = pool.intern({twin}, {half});
  }
  return b;
}

/// s_0 = 0, s_{i+1} = {s_i|s_i}; the sum of i copies of *. These are exactly
/// the games that are both impartial and binary.
inline GameId s_game(GamePool& pool, int i) {
  if (i < 0) throw std::invalid_argument("s_game: index must be non-negative");
  GameId s = pool.zero();
  for (int k = 0; k < i; ++k) s = pool.intern({s}, {s});
  return s;
}

enum class NamedGame { Zero, Star, I, S, Z, Ga };

/// The distinguished games: I = {*|{*|0}}, S = {0,*|{0,*|0,*}}, Z = {I|*},
/// Ga = {0|*} (the same tree as B_0).
inline GameId named(GamePool& pool, NamedGame which) {
  GameId z = pool.zero(), st = pool.star();
  switch (which) {
    case NamedGame::Zero:
      return z;
    case NamedGame::Star:
      return st;
    case NamedGame::I:
      return pool.intern({st}, {pool.intern({st}, {z})});
    case NamedGame::S:
      return pool.intern({z, st}, {pool.intern({z, st}, {z, st})});
    case NamedGame::Z:
      return pool.intern({named(pool, NamedGame::I)}, {st});
    case NamedGame::Ga:
      return b_game(pool, 0);
  }
  throw std::logic_error("named: unhandled name");
}

/// The adjoint G^o: * for 0; for an end, the missing side becomes {0};
/// otherwise the adjoints of each player's options swap sides. Always dicot,
/// and binary dicot when G is binary.
inline GameId adjoint(GamePool& pool, GameId g) {
  if (auto hit = pool.adjoint_memo.get(g.raw)) return GameId{*hit};
  GameId res;
  if (g == pool.zero()) {
    res = pool.star();
  } else {
    std::vector<GameId> l, r;
    if (pool.is_left_end(g)) {
      for (GameId o : pool.right(g)) l.push_back(adjoint(pool, o));
      r.push_back(pool.zero());
    } else if (pool.is_right_end(g)) {
      l.push_back(pool.zero());
      for (GameId o : pool.left(g)) r.push_back(adjoint(pool, o));
    } else {
      for (GameId o : pool.right(g)) l.push_back(adjoint(pool, o));
      for (GameId o : pool.left(g)) r.push_back(adjoint(pool, o));
    }
    res = pool.intern(std::move(l), std::move(r));
  }
  pool.adjoint_memo.put(g.raw, res.raw);
  return res;
}

/// The adjoint-like companion whose end cases use B_i instead of *:
/// {B_i|0} for 0; for an end, B_i or 0 fills the missing side. Binary dicot
/// when G is binary.
inline GameId tilde(GamePool& pool, GameId g, int i) {
  if (i < 0) throw std::invalid_argument("tilde: index must be non-negative");
  std::uint64_t key = (std::uint64_t(g.raw) << 20) | std::uint32_t(i);
  if (i < (1 << 20))
    if (auto hit = pool.tilde_memo.get(key)) return GameId{*hit};
  GameId res;
  if (g == pool.zero()) {
    res = pool.intern({b_game(pool, i)}, {pool.zero()});
  } else {
    std::vector<GameId> l, r;
    if (pool.is_left_end(g)) {
      for (GameId o : pool.right(g)) l.push_back(tilde(pool, o, i));
      r.push_back(pool.zero());
    } else if (pool.is_right_end(g)) {
      l.push_back(b_game(pool, i));
      for (GameId o : pool.left(g)) r.push_back(tilde(pool, o, i));
    } else {
      for (GameId o : pool.right(g)) l.push_back(tilde(pool, o, i));
      for (GameId o : pool.left(g)) r.push_back(tilde(pool, o, i));
    }
    res = pool.intern(std::move(l), std::move(r));
  }
  if (i < (1 << 20)) pool.tilde_memo.put(key, res.raw);
  return res;
}

/// Dicot companions built from the adjoint; summing G with them forces the
/// four outcomes P, N, L, R respectively.
struct Companions {
  GameId for_p, for_n, for_l, for_r;
};

inline Companions companions(GamePool& pool, GameId g) {
  GameId adj = adjoint(pool, g);
  // Adjoints of the Left (resp. Right) options, with {0} standing in when
  // that side of g is empty.
  std::vector<GameId> left_adj, right_adj;
  if (pool.is_left_end(g))
    left_adj.push_back(pool.zero());
  else
    for (GameId o : pool.left(g)) left_adj.push_back(adjoint(pool, o));
  if (pool.is_right_end(g))
    right_adj.push_back(pool.zero());
  else
    for (GameId o : pool.right(g)) right_adj.push_back(adjoint(pool, o));

  Companions c;
  c.for_p = adj;
  c.for_n = pool.intern({adj}, {adj});
  std::vector<GameId> l = right_adj;
  l.push_back(adj);
  c.for_l = pool.intern(std::move(l), left_adj);
  std::vector<GameId> r = left_adj;
  r.push_back(adj);
  c.for_r = pool.intern(right_adj, std::move(r));
  return c;
}

/// The B_i family companions for a game born at most i; summing G with them
/// forces outcomes R, L, N respectively.
struct BiCompanions {
  GameId for_r, for_l, for_n;
};

inline BiCompanions bi_companions(GamePool& pool, GameId g, int i) {
  if (i < pool.birthday(g))
    throw std::invalid_argument("bi_companions: index must be at least the birthday of G");
  GameId b = b_game(pool, i);
  GameId cb = pool.conjugate(b);
  return {b, cb, pool.intern({cb}, {b})};
}

}  // namespace misere

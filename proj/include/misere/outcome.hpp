#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "misere/game.hpp"

namespace misere {

/// Who wins under optimal play: Left regardless, the Next (first) player,
/// the Previous (second) player, or Right regardless.
enum class Outcome : std::uint8_t { L, N, P, R };

/// Misere: a player unable to move wins. Normal: a player unable to move
/// loses.
enum class Convention : std::uint8_t { Misere, Normal };

enum class Mover : std::uint8_t { First, Second };

inline char outcome_char(Outcome o) { return "LNPR"[static_cast<int>(o)]; }

/// The order on outcomes: L on top, R at the bottom, N and P incomparable.
inline bool outcome_geq(Outcome a, Outcome b) {
  if (a == b) return true;
  if (a == Outcome::L) return true;
  if (b == Outcome::R) return true;
  return false;
}

inline Outcome outcome_from_bits(bool left_first_wins, bool right_first_wins) {
  if (left_first_wins) return right_first_wins ? Outcome::N : Outcome::L;
  return right_first_wins ? Outcome::R : Outcome::P;
}

namespace detail {

// bit 0: Left wins moving first; bit 1: Right wins moving first.
inline std::uint8_t outcome_bits(GamePool& pool, GameId g, Convention conv) {
  auto& memo = conv == Convention::Misere ? pool.misere_bits_memo : pool.normal_bits_memo;
  if (auto hit = memo.get(g.raw)) return *hit;
  std::uint8_t bits = 0;
  auto ls = pool.left(g);
  if (ls.empty()) {
    if (conv == Convention::Misere) bits |= 1;
  } else {
    for (GameId o : ls)
      if (!(outcome_bits(pool, o, conv) & 2)) {
        bits |= 1;
        break;
      }
  }
  auto rs = pool.right(g);
  if (rs.empty()) {
    if (conv == Convention::Misere) bits |= 2;
  } else {
    for (GameId o : rs)
      if (!(outcome_bits(pool, o, conv) & 1)) {
        bits |= 2;
        break;
      }
  }
  memo.put(g.raw, bits);
  return bits;
}

}  // namespace detail

/// Exact outcome of g under the given convention.
inline Outcome outcome(GamePool& pool, GameId g, Convention conv = Convention::Misere) {
  std::uint8_t bits = detail::outcome_bits(pool, g, conv);
  return outcome_from_bits(bits & 1, bits & 2);
}

inline bool left_wins(GamePool& pool, GameId g, Mover mover, Convention conv = Convention::Misere) {
  std::uint8_t bits = detail::outcome_bits(pool, g, conv);
  return mover == Mover::First ? (bits & 1) != 0 : (bits & 2) == 0;
}

/// Outcome of a+b through the expanded sum tree.
inline Outcome sum_outcome(GamePool& pool, GameId a, GameId b, Convention conv = Convention::Misere) {
  return outcome(pool, pool.sum(a, b), conv);
}

/// Outcomes of row+col sums over a fixed grid of games, computed by moving
/// in one component at a time instead of expanding sum trees. Both axes are
/// closed under options at construction; cells fill lazily.
///
/// The big verification sweeps (one game against every context in an
/// enumerated space) run through this: a flat rows-by-columns byte table
/// stays small where interning every sum would not. Not thread-safe.
class SumOutcomeTable {
 public:
  SumOutcomeTable(GamePool& pool, Convention conv, std::span<const GameId> row_seeds,
                  std::span<const GameId> col_seeds)
      : pool_(pool), conv_(conv) {
    rows_ = close(row_seeds);
    cols_ = close(col_seeds);
    row_index_.reserve(rows_.size() * 2);
    for (std::uint32_t i = 0; i < rows_.size(); ++i) row_index_.emplace(rows_[i].raw, i);
    std::uint32_t max_raw = 0;
    for (GameId c : cols_) max_raw = std::max(max_raw, c.raw);
    col_index_.assign(max_raw + 1, -1);
    for (std::uint32_t i = 0; i < cols_.size(); ++i) col_index_[cols_[i].raw] = static_cast<std::int32_t>(i);
    bits_.assign(rows_.size() * cols_.size(), 0);
  }

  Outcome outcome(GameId row, GameId col) {
    std::uint8_t b = bits(row_index_.at(row.raw), col_of(col));
    return outcome_from_bits(b & 1, b & 2);
  }

  bool left_wins(GameId row, GameId col, Mover mover) {
    std::uint8_t b = bits(row_index_.at(row.raw), col_of(col));
    return mover == Mover::First ? (b & 1) != 0 : (b & 2) == 0;
  }

 private:
  std::uint32_t col_of(GameId col) const {
    if (col.raw >= col_index_.size() || col_index_[col.raw] < 0)
      throw std::out_of_range("SumOutcomeTable: game is not on the column axis");
    return static_cast<std::uint32_t>(col_index_[col.raw]);
  }

  std::vector<GameId> close(std::span<const GameId> seeds) {
    std::vector<GameId> out, stack;
    std::unordered_set<GameId, GameIdHash> seen;
    for (GameId s : seeds)
      if (seen.insert(s).second) stack.push_back(s);
    while (!stack.empty()) {
      GameId v = stack.back();
      stack.pop_back();
      out.push_back(v);
      for (auto side : {pool_.left(v), pool_.right(v)})
        for (GameId o : side)
          if (seen.insert(o).second) stack.push_back(o);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // bit 0: Left wins first; bit 1: Right wins first; bit 2: computed.
  std::uint8_t bits(std::uint32_t ri, std::uint32_t ci) {
    std::uint8_t& slot = bits_[std::size_t(ri) * cols_.size() + ci];
    if (slot & 4) return slot;
    GameId row = rows_[ri], col = cols_[ci];
    std::uint8_t b = 4;
    auto lrow = pool_.left(row);
    auto lcol = pool_.left(col);
    if (lrow.empty() && lcol.empty()) {
      if (conv_ == Convention::Misere) b |= 1;
    } else {
      for (GameId o : lrow)
        if (!(bits(row_index_.at(o.raw), ci) & 2)) {
          b |= 1;
          break;
        }
      if (!(b & 1))
        for (GameId o : lcol)
          if (!(bits(ri, col_of(o)) & 2)) {
            b |= 1;
            break;
          }
    }
    auto rrow = pool_.right(row);
    auto rcol = pool_.right(col);
    if (rrow.empty() && rcol.empty()) {
      if (conv_ == Convention::Misere) b |= 2;
    } else {
      for (GameId o : rrow)
        if (!(bits(row_index_.at(o.raw), ci) & 1)) {
          b |= 2;
          break;
        }
      if (!(b & 2))
        for (GameId o : rcol)
          if (!(bits(ri, col_of(o)) & 1)) {
            b |= 2;
            break;
          }
    }
    slot = b;
    return b;
  }

  GamePool& pool_;
  Convention conv_;
  std::vector<GameId> rows_, cols_;
  std::unordered_map<std::uint32_t, std::uint32_t> row_index_;
  std::vector<std::int32_t> col_index_;
  std::vector<std::uint8_t> bits_;
};

}  // namespace misere

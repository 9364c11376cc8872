#pragma once

#include <array>
#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "misere/comparison.hpp"
#include "misere/game.hpp"
#include "misere/impartial.hpp"
#include "misere/notation.hpp"
#include "misere/report.hpp"

namespace misere {

namespace detail {

inline std::int64_t param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing check parameter '" + key + "'");
  return it->second;
}

struct CheckRun {
  GamePool& pool;
  Report rep;
  std::int64_t violations = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  CheckRun(GamePool& p, std::string id, std::string anchor, Params params) : pool(p) {
    rep.theorem = std::move(id);
    rep.anchor = std::move(anchor);
    rep.params = std::move(params);
  }

  void instance() { ++rep.instances_checked; }

  void violation(GameId g, std::optional<GameId> h, std::optional<GameId> x,
                 std::string expected, std::string got) {
    ++violations;
    if (rep.counterexamples.size() < 8) {
      Report::Counterexample cx;
      cx.g = print(pool, g);
      if (h) cx.h = print(pool, *h);
      if (x) cx.x = print(pool, *x);
      cx.expected = std::move(expected);
      cx.got = std::move(got);
      rep.counterexamples.push_back(std::move(cx));
    }
  }

  Report finish(Report::Status when_clean = Report::Status::Pass) {
    rep.status = violations > 0 ? Report::Status::Fail : when_clean;
    if (violations > std::int64_t(rep.counterexamples.size()))
      rep.params["counterexamples_total"] = violations;
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return std::move(rep);
  }
};

inline std::string out_str(Outcome o) { return std::string(1, outcome_char(o)); }

inline std::vector<GameId> sample_distinct(const std::vector<GameId>& from, std::mt19937& rng,
                                           std::size_t n) {
  if (n >= from.size()) return from;
  std::unordered_set<std::size_t> picked;
  std::vector<GameId> out;
  std::uniform_int_distribution<std::size_t> dist(0, from.size() - 1);
  while (out.size() < n) {
    std::size_t i = dist(rng);
    if (picked.insert(i).second) out.push_back(from[i]);
  }
  return out;
}

inline GameId random_subset_tree(GamePool& pool, const std::vector<GameId>& base,
                                 std::mt19937& rng, int max_per_side) {
  auto side = [&] {
    std::vector<GameId> s;
    int sz = std::uniform_int_distribution<int>(0, max_per_side)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
    for (int k = 0; k < sz; ++k) s.push_back(base[pick(rng)]);
    return s;
  };
  auto l = side();
  auto r = side();
  return pool.intern(std::move(l), std::move(r));
}

}  // namespace detail

namespace checks {

inline Report outcomes(GamePool& pool, SpaceCache&, const Params& p) {
  detail::CheckRun run(pool, "outcomes",
                       "misere outcomes of the base games 0, *, 1, B(0), Z, Ga, I, S", p);
  const std::pair<const char*, Outcome> table[] = {
      {"0", Outcome::N}, {"*", Outcome::P},  {"1", Outcome::R}, {"B(0)", Outcome::R},
      {"Z", Outcome::N}, {"Ga", Outcome::R}, {"I", Outcome::L}, {"S", Outcome::L}};
  for (auto [expr, want] : table) {
    GameId g = parse_game(pool, expr);
    run.instance();
    Outcome got = outcome(pool, g, Convention::Misere);
    if (got != want)
      run.violation(g, std::nullopt, std::nullopt, detail::out_str(want), detail::out_str(got));
  }
  return run.finish();
}

inline Report il(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "il", "o-(I+X) = L for every impartial game X", p);
  auto space = spaces.get(pool, Filter::Impartial, int(detail::param(p, "x_bound")));
  GameId i = named(pool, NamedGame::I);
  std::array<GameId, 1> rows{i};
  SumOutcomeTable table(pool, Convention::Misere, rows, space->games);
  for (GameId x : space->games) {
    run.instance();
    Outcome got = table.outcome(i, x);
    if (got != Outcome::L) run.violation(i, std::nullopt, x, "L", detail::out_str(got));
  }
  return run.finish();
}

inline Report ggir(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "ggir", "o-(G+B_i) = R whenever i >= b(G)", p);
  auto space = spaces.get(pool, Filter::All, int(detail::param(p, "g_bound")));
  GameId b = b_game(pool, int(detail::param(p, "i")));
  std::array<GameId, 1> rows{b};
  SumOutcomeTable table(pool, Convention::Misere, rows, space->games);
  for (GameId g : space->games) {
    run.instance();
    Outcome got = table.outcome(b, g);
    if (got != Outcome::R) run.violation(g, std::nullopt, b, "R", detail::out_str(got));
  }
  return run.finish();
}

inline Report adjoint_sum(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "adjoint-sum", "G + adjoint(G) is a misere P-position", p);
  auto space = spaces.get(pool, Filter::All, int(detail::param(p, "g_bound")));
  for (GameId g : space->games) {
    run.instance();
    Outcome got = sum_outcome(pool, g, adjoint(pool, g));
    if (got != Outcome::P)
      run.violation(g, std::nullopt, adjoint(pool, g), "P", detail::out_str(got));
  }
  return run.finish();
}

inline Report companions_check(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "companions",
                       "the adjoint-built companions force outcomes P, N, L, R", p);
  auto space = spaces.get(pool, Filter::All, int(detail::param(p, "g_bound")));
  for (GameId g : space->games) {
    Companions c = companions(pool, g);
    const std::pair<GameId, Outcome> want[] = {{c.for_p, Outcome::P},
                                               {c.for_n, Outcome::N},
                                               {c.for_l, Outcome::L},
                                               {c.for_r, Outcome::R}};
    for (auto [x, expected] : want) {
      run.instance();
      Outcome got = sum_outcome(pool, g, x);
      if (got != expected)
        run.violation(g, std::nullopt, x, detail::out_str(expected), detail::out_str(got));
    }
  }
  return run.finish();
}

inline Report bi_companions_check(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "bi-companions",
                       "o-(G+B_i) = R, o-(G+conj(B_i)) = L, o-(G+{conj(B_i)|B_i}) = N "
                       "whenever i >= b(G)",
                       p);
  int i = int(detail::param(p, "i"));
  auto space = spaces.get(pool, Filter::All, int(detail::param(p, "g_bound")));
  BiCompanions bc = bi_companions(pool, pool.zero(), i);
  std::array<GameId, 3> rows{bc.for_r, bc.for_l, bc.for_n};
  SumOutcomeTable table(pool, Convention::Misere, rows, space->games);
  for (GameId g : space->games) {
    BiCompanions c = bi_companions(pool, g, i);
    const std::pair<GameId, Outcome> want[] = {
        {c.for_r, Outcome::R}, {c.for_l, Outcome::L}, {c.for_n, Outcome::N}};
    for (auto [x, expected] : want) {
      run.instance();
      Outcome got = table.outcome(x, g);
      if (got != expected)
        run.violation(g, std::nullopt, x, detail::out_str(expected), detail::out_str(got));
    }
  }
  return run.finish();
}

inline Report s_incomparable(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "s-incomparable",
                       "the integer i and its conjugate separate s_i from every G born "
                       "before i: o-(G+i) = R, o-(G+conj(i)) = L, o-(s_i+i) >= N, "
                       "o-(s_i+conj(i)) <= N",
                       p);
  int i_max = int(detail::param(p, "i_max"));
  int samples = int(detail::param(p, "samples"));
  std::mt19937 rng(std::uint32_t(detail::param(p, "seed")));
  for (int i = 1; i <= i_max; ++i) {
    std::vector<GameId> gs;
    if (i - 1 <= 2) {
      gs = spaces.get(pool, Filter::All, i - 1)->games;
    } else {
      const auto& base = spaces.get(pool, Filter::All, 2)->games;
      for (int k = 0; k < samples; ++k)
        gs.push_back(detail::random_subset_tree(pool, base, rng, 10));
    }
    GameId n = int_game(pool, i), cn = pool.conjugate(n), s = s_game(pool, i);
    std::vector<GameId> cols = gs;
    cols.push_back(s);
    std::array<GameId, 2> rows{n, cn};
    SumOutcomeTable table(pool, Convention::Misere, rows, cols);
    for (GameId g : gs) {
      run.instance();
      Outcome got = table.outcome(n, g);
      if (got != Outcome::R) run.violation(g, std::nullopt, n, "R", detail::out_str(got));
      run.instance();
      got = table.outcome(cn, g);
      if (got != Outcome::L) run.violation(g, std::nullopt, cn, "L", detail::out_str(got));
    }
    run.instance();
    Outcome os = table.outcome(n, s);
    if (!outcome_geq(os, Outcome::N))
      run.violation(s, std::nullopt, n, "N or L", detail::out_str(os));
    run.instance();
    os = table.outcome(cn, s);
    if (!outcome_geq(Outcome::N, os))
      run.violation(s, std::nullopt, cn, "N or R", detail::out_str(os));
  }
  return run.finish();
}

namespace detail_tables {

inline Outcome adj_expected(Outcome o) {
  switch (o) {
    case Outcome::L: return Outcome::L;
    case Outcome::R: return Outcome::R;
    case Outcome::N: return Outcome::P;
    case Outcome::P: return Outcome::N;
  }
  return Outcome::P;
}

}  // namespace detail_tables

inline Report adjout(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "adjout",
                       "for binary G the outcome of adjoint(G) is determined by the "
                       "outcome of G: L->L, R->R, N->P, P->N",
                       p);
  auto space = spaces.get(pool, Filter::Binary, int(detail::param(p, "bound")));
  for (GameId g : space->games) {
    run.instance();
    Outcome want = detail_tables::adj_expected(outcome(pool, g, Convention::Misere));
    Outcome got = outcome(pool, adjoint(pool, g), Convention::Misere);
    if (got != want)
      run.violation(g, adjoint(pool, g), std::nullopt, detail::out_str(want),
                    detail::out_str(got));
  }
  // The mapping genuinely needs binarity: {0,*|0} is L while its adjoint is N.
  GameId w = pool.intern({pool.zero(), pool.star()}, {pool.zero()});
  run.instance();
  if (outcome(pool, w, Convention::Misere) != Outcome::L ||
      outcome(pool, adjoint(pool, w), Convention::Misere) != Outcome::N)
    run.violation(w, adjoint(pool, w), std::nullopt, "L and N",
                  detail::out_str(outcome(pool, w)) + " and " +
                      detail::out_str(outcome(pool, adjoint(pool, w))));
  return run.finish();
}

inline Report adjiout(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "adjiout",
                       "for binary G the outcome of tilde(G,i) is determined by the "
                       "outcome of G: L->L, R->R, N->P, P->N",
                       p);
  auto space = spaces.get(pool, Filter::Binary, int(detail::param(p, "bound")));
  for (GameId g : space->games) {
    run.instance();
    GameId t = tilde(pool, g, pool.birthday(g));
    Outcome want = detail_tables::adj_expected(outcome(pool, g, Convention::Misere));
    Outcome got = outcome(pool, t, Convention::Misere);
    if (got != want)
      run.violation(g, t, std::nullopt, detail::out_str(want), detail::out_str(got));
  }
  return run.finish();
}

inline Report z_gt_zero(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "z-gt-zero",
                       "Z >= 0 modulo binary dicot games, strictly: Ga separates", p);
  GameId z = named(pool, NamedGame::Z), ga = named(pool, NamedGame::Ga);
  run.instance();
  if (!ge_db_zero(pool, z))
    run.violation(z, pool.zero(), std::nullopt, "Z >= 0", "refuted by the zero procedure");
  run.instance();
  Verdict v = compare(pool, spaces, pool.zero(), z,
                      {Filter::BinaryDicot, int(detail::param(p, "bound"))});
  if (v.status != CompareStatus::Refuted || v.witness != ga)
    run.violation(pool.zero(), z, v.witness, "refuted with witness " + print(pool, ga),
                  std::string(compare_status_name(v.status)));
  return run.finish();
}

inline Report b2d0(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "b2d0",
                       "G >= 0 modulo dicot iff modulo binary dicot: the zero procedure "
                       "is never contradicted by dicot distinguisher search",
                       p);
  int dist_bound = int(detail::param(p, "dist_bound"));
  std::mt19937 rng(std::uint32_t(detail::param(p, "seed")));
  auto d3 = spaces.get(pool, Filter::Dicot, 3);
  std::vector<GameId> gs = spaces.get(pool, Filter::Dicot, 2)->games;
  auto extra =
      detail::sample_distinct(d3->games, rng, std::size_t(detail::param(p, "extra_samples")));
  gs.insert(gs.end(), extra.begin(), extra.end());
  auto contexts = spaces.get(pool, Filter::Dicot, dist_bound);

  std::int64_t true_verdicts = 0;
  for (GameId g : gs) {
    bool v = ge_db_zero(pool, g);
    if (v) {
      ++true_verdicts;
      std::array<GameId, 1> rows{g};
      SumOutcomeTable table(pool, Convention::Misere, rows, contexts->games);
      for (GameId x : contexts->games) {
        run.instance();
        if (!outcome_geq(table.outcome(g, x), outcome(pool, x, Convention::Misere)))
          run.violation(g, pool.zero(), x, "o-(G+X) >= o-(X)",
                        detail::out_str(table.outcome(g, x)) + " vs " +
                            detail::out_str(outcome(pool, x)));
      }
    } else {
      run.instance();
      GameId w = pool.intern({b_game(pool, pool.birthday(g))}, {pool.zero()});
      if (outcome(pool, w, Convention::Misere) != Outcome::P ||
          outcome_geq(sum_outcome(pool, g, w), Outcome::P))
        run.violation(g, pool.zero(), w, "{B_i|0} refutes G >= 0",
                      detail::out_str(sum_outcome(pool, g, w)) + " vs P");
    }
  }
  run.rep.params["true_verdicts"] = true_verdicts;
  return run.finish();
}

inline Report b2db(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "b2db",
                       "for binary G,H: G >= H modulo binary dicot iff modulo dicot; the "
                       "binary recursion is never contradicted, implies normal-play >=, "
                       "and is reflexive and transitive",
                       p);
  int dist_bound = int(detail::param(p, "dist_bound"));
  int witness_bound = int(detail::param(p, "witness_bound"));
  auto bin2 = spaces.get(pool, Filter::Binary, 2);
  auto contexts = spaces.get(pool, Filter::Dicot, dist_bound);

  std::vector<std::pair<GameId, GameId>> false_pairs;
  {
    SumOutcomeTable table(pool, Convention::Misere, bin2->games, contexts->games);
    for (GameId g : bin2->games)
      for (GameId h : bin2->games) {
        if (!ge_binary_db(pool, g, h)) {
          false_pairs.emplace_back(g, h);
          continue;
        }
        for (GameId x : contexts->games) {
          run.instance();
          if (!outcome_geq(table.outcome(g, x), table.outcome(h, x)))
            run.violation(g, h, x, "o-(G+X) >= o-(H+X)",
                          detail::out_str(table.outcome(g, x)) + " vs " +
                              detail::out_str(table.outcome(h, x)));
        }
      }
  }

  // refuted pairs: a binary dicot context separating them should exist at
  // small birthday; missing ones are reported, not asserted
  std::int64_t missing = 0, max_witness_birthday = 0;
  {
    auto bd = spaces.get(pool, Filter::BinaryDicot, witness_bound);
    SumOutcomeTable table(pool, Convention::Misere, bin2->games, bd->games);
    for (auto [g, h] : false_pairs) {
      run.instance();
      bool found = false;
      for (int k = 0; k <= witness_bound && !found; ++k)
        for (std::size_t idx = bd->level_begin[k]; idx < bd->level_begin[k + 1]; ++idx) {
          GameId x = bd->games[idx];
          if (!outcome_geq(table.outcome(g, x), table.outcome(h, x))) {
            found = true;
            max_witness_birthday = std::max<std::int64_t>(max_witness_birthday, k);
            break;
          }
        }
      if (!found) ++missing;
    }
  }

  // reflexivity, transitivity and the normal-play implication over all
  // binary trees born <= 3, through a precomputed dominance matrix
  auto bin3 = spaces.get(pool, Filter::Binary, 3);
  const auto& bg = bin3->games;
  const std::size_t n = bg.size();
  std::vector<std::uint8_t> ge(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ge[i * n + j] = ge_binary_db(pool, bg[i], bg[j]) ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) {
    run.instance();
    if (!ge[i * n + i]) run.violation(bg[i], bg[i], std::nullopt, "G >= G", "refuted");
    for (std::size_t j = 0; j < n; ++j) {
      if (!ge[i * n + j]) continue;
      run.instance();
      if (!ge_normal(pool, bg[i], bg[j]))
        run.violation(bg[i], bg[j], std::nullopt, "G >= H in normal play", "refuted");
    }
  }
  std::int64_t transitivity_checks = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!ge[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!ge[j * n + k]) continue;
        ++transitivity_checks;
        if (!ge[i * n + k])
          run.violation(bg[i], bg[k], bg[j], "G >= H by transitivity", "refuted");
      }
    }
  run.rep.instances_checked += transitivity_checks;

  run.rep.params["refuted_pairs"] = std::int64_t(false_pairs.size());
  run.rep.params["witness_missing_pairs"] = missing;
  run.rep.params["max_witness_birthday"] = max_witness_birthday;
  return run.finish(missing > 0 ? Report::Status::Unknown : Report::Status::Pass);
}

inline Report census_bd3(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "census-bd3",
                       "exactly 26 binary dicot trees born <= 3, falling into exactly 13 "
                       "equivalence classes",
                       p);
  auto space = spaces.get(pool, Filter::BinaryDicot, 3);
  run.instance();
  if (space->games.size() != 26)
    run.violation(pool.zero(), std::nullopt, std::nullopt, "26 trees",
                  std::to_string(space->games.size()) + " trees");
  ClassTable classes = classify(space->games, [&](GameId a, GameId b) {
    return ge_binary_db(pool, a, b) && ge_binary_db(pool, b, a);
  });
  run.instance();
  if (classes.classes.size() != 13)
    run.violation(pool.zero(), std::nullopt, std::nullopt, "13 classes",
                  std::to_string(classes.classes.size()) + " classes");
  run.rep.params["trees"] = std::int64_t(space->games.size());
  run.rep.params["classes"] = std::int64_t(classes.classes.size());
  return run.finish();
}

inline Report i2d(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "i2d",
                       "impartially equivalent impartial games are dicot-equivalent", p);
  Report base = verify_i_to_d(pool, spaces, int(detail::param(p, "pairs_bound")),
                              int(detail::param(p, "dist_bound")));
  run.rep.instances_checked = base.instances_checked;
  run.rep.counterexamples = base.counterexamples;
  run.violations = base.status == Report::Status::Fail ? 1 : 0;
  if (run.violations) return run.finish();

  // boundary pair: I and {I|I} are impartially equivalent yet distinguished
  // by adjoint(I), which lives beyond small distinguisher bounds
  GameId i = named(pool, NamedGame::I);
  GameId ii = pool.intern({i}, {i});
  GameId io = adjoint(pool, i);
  auto impartials = spaces.get(pool, Filter::Impartial, int(detail::param(p, "pairs_bound")));
  for (GameId x : impartials->games) {
    run.instance();
    if (sum_outcome(pool, i, x) != Outcome::L || sum_outcome(pool, ii, x) != Outcome::L)
      run.violation(i, ii, x, "L for both",
                    detail::out_str(sum_outcome(pool, i, x)) + " vs " +
                        detail::out_str(sum_outcome(pool, ii, x)));
  }
  run.instance();
  if (sum_outcome(pool, i, io) != Outcome::P || sum_outcome(pool, ii, io) != Outcome::N)
    run.violation(i, ii, io, "P vs N",
                  detail::out_str(sum_outcome(pool, i, io)) + " vs " +
                      detail::out_str(sum_outcome(pool, ii, io)));
  return run.finish();
}

inline Report di_ext(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "di-ext",
                       "o-(X + n*{.|I}) = L for impartial X and positive n", p);
  GameId piece = pool.intern({}, {named(pool, NamedGame::I)});
  auto space = spaces.get(pool, Filter::Impartial, int(detail::param(p, "x_bound")));
  GameId acc = pool.zero();
  for (int n = 1; n <= int(detail::param(p, "n_max")); ++n) {
    acc = pool.sum(acc, piece);
    std::array<GameId, 1> rows{acc};
    SumOutcomeTable table(pool, Convention::Misere, rows, space->games);
    for (GameId x : space->games) {
      run.instance();
      Outcome got = table.outcome(acc, x);
      if (got != Outcome::L) run.violation(x, std::nullopt, acc, "L", detail::out_str(got));
    }
  }
  return run.finish();
}

inline Report geq_eq(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "geq-eq",
                       "a binary game >= 0 modulo binary dicot with G^{LR} = 0 is "
                       "equivalent to 0: the reverse inequality holds and bounded search "
                       "finds no separating context",
                       p);
  auto space = spaces.get(pool, Filter::Binary, int(detail::param(p, "bound")));
  auto contexts = spaces.get(pool, Filter::BinaryDicot, int(detail::param(p, "dist_bound")));
  std::int64_t candidates = 0;
  for (GameId g : space->games) {
    auto ls = pool.left(g);
    if (ls.empty()) continue;
    auto lrs = pool.right(ls.front());
    if (lrs.empty() || lrs.front() != pool.zero()) continue;
    if (!ge_db_zero(pool, g)) continue;
    ++candidates;
    run.instance();
    if (!ge_binary_db(pool, pool.zero(), g))
      run.violation(pool.zero(), g, std::nullopt, "0 >= G", "refuted");
    for (GameId x : contexts->games) {
      run.instance();
      if (!outcome_geq(outcome(pool, x, Convention::Misere), sum_outcome(pool, g, x)))
        run.violation(pool.zero(), g, x, "o-(X) >= o-(G+X)",
                      detail::out_str(outcome(pool, x)) + " vs " +
                          detail::out_str(sum_outcome(pool, g, x)));
    }
  }
  run.rep.params["candidates"] = candidates;
  return run.finish();
}

inline Report s_ge(GamePool& pool, SpaceCache&, const Params& p) {
  detail::CheckRun run(pool, "s-ge", "S >= s_i modulo dicot games for every i", p);
  GameId s = named(pool, NamedGame::S);
  for (int i = 0; i <= int(detail::param(p, "i_max")); ++i) {
    run.instance();
    Verdict v = ge_dicot_vs_binary_db(pool, s, s_game(pool, i));
    if (v.status != CompareStatus::Proved)
      run.violation(s, s_game(pool, i), v.witness, "proved", compare_status_name(v.status));
  }
  return run.finish();
}

inline Report i_counterexamples(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "i-counterexamples",
                       "I exceeds every impartial game modulo impartial yet not modulo "
                       "dicot; I and {I|I} are impartially equivalent yet "
                       "dicot-distinguished",
                       p);
  GameId i = named(pool, NamedGame::I);
  GameId ii = pool.intern({i}, {i});
  GameId io = adjoint(pool, i);
  auto space = spaces.get(pool, Filter::Impartial, int(detail::param(p, "x_bound")));
  std::array<GameId, 2> rows{i, ii};
  SumOutcomeTable table(pool, Convention::Misere, rows, space->games);
  for (GameId x : space->games) {
    run.instance();
    if (table.outcome(i, x) != Outcome::L || table.outcome(ii, x) != Outcome::L)
      run.violation(i, ii, x, "L for both",
                    detail::out_str(table.outcome(i, x)) + " vs " +
                        detail::out_str(table.outcome(ii, x)));
  }
  run.instance();
  if (sum_outcome(pool, i, io) != Outcome::P ||
      outcome(pool, io, Convention::Misere) != Outcome::L)
    run.violation(i, pool.zero(), io, "P vs L",
                  detail::out_str(sum_outcome(pool, i, io)) + " vs " +
                      detail::out_str(outcome(pool, io)));
  run.instance();
  Verdict v = compare(pool, spaces, i, pool.zero(), {Filter::Dicot, 2});
  if (v.status != CompareStatus::Refuted || v.witness != io)
    run.violation(i, pool.zero(), v.witness, "refuted with witness adjoint(I)",
                  compare_status_name(v.status));
  run.instance();
  if (sum_outcome(pool, ii, io) != Outcome::N)
    run.violation(ii, std::nullopt, io, "N", detail::out_str(sum_outcome(pool, ii, io)));
  return run.finish();
}

inline Report roundtrip(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "roundtrip", "parse after print is the identity", p);
  auto space = spaces.get(pool, Filter::All, int(detail::param(p, "bound")));
  for (GameId g : space->games) {
    run.instance();
    GameId back = parse_game(pool, print(pool, g, PrintStyle::Braces));
    if (back != g)
      run.violation(g, back, std::nullopt, print(pool, g), print(pool, back));
  }
  const char* named_exprs[] = {"0",    "*",    "1",    "5",    "I",    "S",
                               "Z",    "Ga",   "B(0)", "B(3)", "s(2)", "s(5)"};
  for (const char* expr : named_exprs) {
    run.instance();
    GameId g = parse_game(pool, expr);
    if (parse_game(pool, print(pool, g, PrintStyle::Named)) != g ||
        parse_game(pool, print(pool, g, PrintStyle::Braces)) != g)
      run.violation(g, std::nullopt, std::nullopt, expr, print(pool, g, PrintStyle::Named));
  }
  return run.finish();
}

inline Report dicot_census_approx(GamePool& pool, SpaceCache& spaces, const Params& p) {
  detail::CheckRun run(pool, "dicot-census-approx",
                       "bounded-distinguisher class counts of dicot trees born <= 3 are "
                       "non-decreasing in the bound and never exceed 1268",
                       p);
  std::size_t prev = 0;
  for (int b = 1; b <= int(detail::param(p, "max_dist_bound")); ++b) {
    run.instance();
    std::size_t c = approx_dicot_classes(pool, spaces, b);
    if (c < prev || c > 1268)
      run.violation(pool.zero(), std::nullopt, std::nullopt,
                    "previous <= classes <= 1268",
                    std::to_string(prev) + " then " + std::to_string(c));
    run.rep.params["classes_at_bound_" + std::to_string(b)] = std::int64_t(c);
    prev = c;
  }
  return run.finish();
}

}  // namespace checks

/// One registry entry per verified result.
struct TheoremCheck {
  std::string id;
  std::string anchor;
  Params defaults;
  Report (*runner)(GamePool&, SpaceCache&, const Params&);
};

inline const std::vector<TheoremCheck>& theorem_registry() {
  static const std::vector<TheoremCheck> reg = {
      {"outcomes", "misere outcomes of the base games 0, *, 1, B(0), Z, Ga, I, S", {},
       checks::outcomes},
      {"il", "o-(I+X) = L for every impartial game X", {{"x_bound", 3}}, checks::il},
      {"ggir", "o-(G+B_i) = R whenever i >= b(G)", {{"g_bound", 2}, {"i", 2}}, checks::ggir},
      {"adjoint-sum", "G + adjoint(G) is a misere P-position", {{"g_bound", 2}},
       checks::adjoint_sum},
      {"companions", "the adjoint-built companions force outcomes P, N, L, R",
       {{"g_bound", 2}}, checks::companions_check},
      {"bi-companions", "the B_i family companions force outcomes R, L, N",
       {{"g_bound", 2}, {"i", 2}}, checks::bi_companions_check},
      {"s-incomparable", "the integers separate s_i from every earlier-born G",
       {{"i_max", 4}, {"samples", 200}, {"seed", 20260809}}, checks::s_incomparable},
      {"adjout", "binary adjoint outcome table L->L, R->R, N->P, P->N", {{"bound", 3}},
       checks::adjout},
      {"adjiout", "binary tilde outcome table L->L, R->R, N->P, P->N", {{"bound", 3}},
       checks::adjiout},
      {"z-gt-zero", "Z exceeds 0 modulo binary dicot games, strictly via Ga",
       {{"bound", 2}}, checks::z_gt_zero},
      {"b2d0", "the zero procedure agrees with dicot distinguisher search",
       {{"extra_samples", 200}, {"dist_bound", 3}, {"seed", 20260809}}, checks::b2d0},
      {"b2db", "the binary recursion agrees with dicot search and normal play",
       {{"dist_bound", 3}, {"witness_bound", 5}}, checks::b2db},
      {"census-bd3", "26 binary dicot trees born <= 3 in 13 equivalence classes", {},
       checks::census_bd3},
      {"i2d", "impartially equivalent impartial games are dicot-equivalent",
       {{"pairs_bound", 3}, {"dist_bound", 3}}, checks::i2d},
      {"di-ext", "o-(X + n*{.|I}) = L for impartial X and positive n",
       {{"x_bound", 3}, {"n_max", 2}}, checks::di_ext},
      {"geq-eq", "binary G >= 0 with G^{LR} = 0 is equivalent to 0",
       {{"bound", 3}, {"dist_bound", 3}}, checks::geq_eq},
      {"s-ge", "S >= s_i modulo dicot games", {{"i_max", 4}}, checks::s_ge},
      {"i-counterexamples", "I and {I|I}: impartial equivalence, dicot distinction",
       {{"x_bound", 3}}, checks::i_counterexamples},
      {"roundtrip", "parse after print is the identity", {{"bound", 2}}, checks::roundtrip},
      {"dicot-census-approx", "approximate dicot class counts are monotone and bounded",
       {{"max_dist_bound", 2}}, checks::dicot_census_approx},
  };
  return reg;
}

inline Report run_check(GamePool& pool, SpaceCache& spaces, const std::string& id,
                        const Params& overrides = {}) {
  for (const TheoremCheck& c : theorem_registry()) {
    if (c.id != id) continue;
    Params params = c.defaults;
    for (const auto& [k, v] : overrides)
      if (params.count(k)) params[k] = v;
    Report rep = c.runner(pool, spaces, params);
    rep.anchor = c.anchor;
    return rep;
  }
  throw std::invalid_argument("run_check: unknown check id '" + id + "'");
}

inline std::vector<Report> run_all(GamePool& pool, SpaceCache& spaces,
                                   const std::vector<std::string>& only = {},
                                   const Params& overrides = {}) {
  std::vector<Report> out;
  for (const TheoremCheck& c : theorem_registry()) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), c.id) == only.end())
      continue;
    out.push_back(run_check(pool, spaces, c.id, overrides));
  }
  return out;
}

inline bool any_failed(std::span<const Report> reports) {
  for (const Report& r : reports)
    if (r.status == Report::Status::Fail) return true;
  return false;
}

inline nlohmann::ordered_json report_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["theorem"] = rep.theorem;
  j["anchor"] = rep.anchor;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  j["params"] = std::move(params);
  j["status"] = status_name(rep.status);
  j["instances_checked"] = rep.instances_checked;
  nlohmann::ordered_json cxs = nlohmann::ordered_json::array();
  for (const auto& cx : rep.counterexamples) {
    nlohmann::ordered_json c;
    c["g"] = cx.g;
    c["h"] = cx.h ? nlohmann::ordered_json(*cx.h) : nlohmann::ordered_json(nullptr);
    c["x"] = cx.x ? nlohmann::ordered_json(*cx.x) : nlohmann::ordered_json(nullptr);
    c["expected"] = cx.expected;
    c["got"] = cx.got;
    cxs.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(cxs);
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

}  // namespace misere

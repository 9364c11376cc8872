#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "misere/misere.hpp"

namespace {

using namespace misere;

Filter parse_universe(const std::string& name) {
  auto f = filter_from_name(name);
  if (!f) throw CLI::ValidationError("--universe", "unknown universe '" + name + "'");
  return *f;
}

Params parse_overrides(const std::string& text) {
  Params out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--bound-overrides", "expected k=v, got '" + item + "'");
    out[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    pos = comma == std::string::npos ? text.size() : comma + 1;
  }
  return out;
}

nlohmann::ordered_json verdict_json(GamePool& pool, const Verdict& v) {
  nlohmann::ordered_json j;
  j["status"] = compare_status_name(v.status);
  j["method"] = v.method;
  if (v.witness) j["witness"] = print(pool, *v.witness);
  if (v.bound_used) j["bound"] = *v.bound_used;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact misere-play game engine"};
  app.require_subcommand(1);

  GamePool pool;
  SpaceCache spaces;

  std::string expr, expr2;
  bool normal = false, as_json = false, impartial_flag = false, count_only = false,
       approx = false;
  int idx = 0, bound = -1, birthday_bound = 0, dist_bound = 1;
  std::string universe = "dicot", filter_name_arg = "all", overrides_arg, census_kind;
  std::vector<std::string> check_ids;
  int pairs_bound = -1, i2d_dist_bound = -1;

  auto* outcome_cmd = app.add_subcommand("outcome", "misere (or normal) outcome of a game");
  outcome_cmd->add_option("expr", expr, "game expression")->required();
  outcome_cmd->add_flag("--normal", normal, "use the normal-play convention");

  auto* compare_cmd = app.add_subcommand("compare", "decide G >= H modulo a universe");
  compare_cmd->add_option("exprG", expr, "left game")->required();
  compare_cmd->add_option("exprH", expr2, "right game")->required();
  compare_cmd->add_option("--universe", universe,
                          "all, dicot, binary-dicot or impartial (default dicot)");
  compare_cmd->add_option("--bound", bound, "birthday bound for distinguisher search");
  compare_cmd->add_flag("--json", as_json, "emit a JSON verdict");

  auto* canonical_cmd = app.add_subcommand("canonical", "impartial misere canonical form");
  canonical_cmd->add_option("expr", expr, "impartial game expression")->required();
  canonical_cmd->add_flag("--impartial", impartial_flag, "impartial canonicalization");

  auto* adjoint_cmd = app.add_subcommand("adjoint", "adjoint of a game");
  adjoint_cmd->add_option("expr", expr, "game expression")->required();

  auto* tilde_cmd = app.add_subcommand("tilde", "tilde companion of a game");
  tilde_cmd->add_option("expr", expr, "game expression")->required();
  tilde_cmd->add_option("--i", idx, "family index (default: birthday of the game)");

  auto* enum_cmd = app.add_subcommand("enumerate", "list or count trees under a filter");
  enum_cmd->add_option("--filter", filter_name_arg,
                       "all, dicot, binary, impartial, binary-dicot, impartial-binary");
  enum_cmd->add_option("--birthday", birthday_bound, "birthday bound")->required();
  enum_cmd->add_flag("--count", count_only, "print only the count");

  auto* census_cmd = app.add_subcommand("census", "class censuses");
  census_cmd->add_option("kind", census_kind, "binary-dicot-3 or dicot3")->required();
  census_cmd->add_flag("--approx", approx, "bounded-distinguisher approximation (dicot3)");
  census_cmd->add_option("--dist-bound", dist_bound, "distinguisher birthday bound");
  census_cmd->add_flag("--json", as_json, "emit JSON");

  auto* verify_cmd = app.add_subcommand("verify", "run theorem checks");
  verify_cmd->add_option("ids", check_ids, "check ids, or 'all'")->required();
  verify_cmd->add_flag("--json", as_json, "one JSON report per check");
  verify_cmd->add_option("--bound-overrides", overrides_arg, "k=v,... parameter overrides");
  verify_cmd->add_option("--pairs-bound", pairs_bound, "override pairs_bound (i2d)");
  verify_cmd->add_option("--dist-bound", i2d_dist_bound, "override dist_bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (outcome_cmd->parsed()) {
      GameId g = parse_game(pool, expr);
      std::cout << outcome_char(outcome(pool, g, normal ? Convention::Normal : Convention::Misere))
                << "\n";
      return 0;
    }

    if (compare_cmd->parsed()) {
      GameId g = parse_game(pool, expr), h = parse_game(pool, expr2);
      Filter f = parse_universe(universe);
      if (bound < 0) bound = f == Filter::All ? 2 : 3;
      Verdict v = compare(pool, spaces, g, h, {f, bound});
      if (as_json) {
        std::cout << verdict_json(pool, v).dump() << "\n";
      } else {
        std::cout << compare_status_name(v.status) << " (" << v.method << ")";
        if (v.witness) std::cout << " witness " << print(pool, *v.witness);
        if (v.bound_used) std::cout << " at bound " << *v.bound_used;
        std::cout << "\n";
      }
      return v.status == CompareStatus::Unknown ? 2 : 0;
    }

    if (canonical_cmd->parsed()) {
      if (!impartial_flag)
        throw std::invalid_argument("only impartial canonical forms are supported; pass --impartial");
      GameId g = parse_game(pool, expr);
      std::cout << print(pool, canonical_impartial(pool, g)) << "\n";
      return 0;
    }

    if (adjoint_cmd->parsed()) {
      std::cout << print(pool, adjoint(pool, parse_game(pool, expr))) << "\n";
      return 0;
    }

    if (tilde_cmd->parsed()) {
      GameId g = parse_game(pool, expr);
      if (!tilde_cmd->count("--i")) idx = pool.birthday(g);
      std::cout << print(pool, tilde(pool, g, idx)) << "\n";
      return 0;
    }

    if (enum_cmd->parsed()) {
      auto f = filter_from_name(filter_name_arg);
      if (!f) throw std::invalid_argument("unknown filter '" + filter_name_arg + "'");
      auto space = spaces.get(pool, *f, birthday_bound);
      if (count_only) {
        std::cout << space->games.size() << "\n";
      } else {
        for (GameId g : space->games) std::cout << print(pool, g) << "\n";
      }
      return 0;
    }

    if (census_cmd->parsed()) {
      if (census_kind == "binary-dicot-3") {
        auto space = spaces.get(pool, Filter::BinaryDicot, 3);
        ClassTable classes = classify(space->games, [&](GameId a, GameId b) {
          return ge_binary_db(pool, a, b) && ge_binary_db(pool, b, a);
        });
        if (as_json) {
          nlohmann::ordered_json j;
          j["trees"] = space->games.size();
          j["classes"] = classes.classes.size();
          auto arr = nlohmann::ordered_json::array();
          for (const auto& c : classes.classes) {
            nlohmann::ordered_json e;
            e["representative"] = print(pool, c.representative);
            e["size"] = c.members.size();
            arr.push_back(std::move(e));
          }
          j["class_list"] = std::move(arr);
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << space->games.size() << " trees, " << classes.classes.size()
                    << " classes\n";
          for (const auto& c : classes.classes)
            std::cout << "  " << print(pool, c.representative) << "  (" << c.members.size()
                      << " trees)\n";
        }
        return 0;
      }
      if (census_kind == "dicot3") {
        if (!approx)
          throw std::invalid_argument(
              "the exact dicot census needs a general dicot comparator; only --approx is "
              "available");
        std::size_t classes = approx_dicot_classes(pool, spaces, dist_bound);
        if (as_json) {
          nlohmann::ordered_json j;
          j["dist_bound"] = dist_bound;
          j["classes_lower_bound"] = classes;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << classes << " classes distinguishable at context birthday <= "
                    << dist_bound << "\n";
        }
        return 0;
      }
      throw std::invalid_argument("unknown census kind '" + census_kind + "'");
    }

    if (verify_cmd->parsed()) {
      Params overrides = overrides_arg.empty() ? Params{} : parse_overrides(overrides_arg);
      if (pairs_bound >= 0) overrides["pairs_bound"] = pairs_bound;
      if (i2d_dist_bound >= 0) overrides["dist_bound"] = i2d_dist_bound;
      std::vector<std::string> only;
      for (const std::string& id : check_ids)
        if (id != "all") only.push_back(id);
      for (const std::string& id : only) {
        bool known = false;
        for (const TheoremCheck& c : theorem_registry()) known = known || c.id == id;
        if (!known) throw std::invalid_argument("unknown check id '" + id + "'");
      }
      std::vector<Report> reports = run_all(pool, spaces, only, overrides);
      for (const Report& r : reports) {
        if (as_json) {
          std::cout << report_json(r).dump() << "\n";
        } else {
          std::cout << status_name(r.status) << "  " << r.theorem << "  ("
                    << r.instances_checked << " instances, " << r.elapsed_ms << " ms)\n";
          for (const auto& cx : r.counterexamples) {
            std::cout << "    counterexample g=" << cx.g;
            if (cx.h) std::cout << " h=" << *cx.h;
            if (cx.x) std::cout << " x=" << *cx.x;
            std::cout << " expected " << cx.expected << ", got " << cx.got << "\n";
          }
        }
      }
      return any_failed(reports) ? 1 : 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

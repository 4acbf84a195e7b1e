#include "pathforge/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathforge/bijections.hpp"
#include "pathforge/enumerate.hpp"
#include "pathforge/identities.hpp"
#include "pathforge/moments.hpp"
#include "pathforge/stats.hpp"
#include "pathforge/walks.hpp"

namespace pathforge::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json stats_json(const Path& p) {
  const auto s = compute_stats(p);
  json j{{"kind", std::string(to_string(p.kind()))},
         {"k", p.half_length()},
         {"path", p.render()},
         {"R", s.rises},
         {"V", s.vertices},
         {"L", s.even_levels},
         {"r", s.total_rises}};
  return j;
}

PathKind infer_kind(const std::string& text, const std::string& kind_flag) {
  if (!kind_flag.empty()) return parse_kind(kind_flag);
  return text.find('L') == std::string::npos ? PathKind::Dyck : PathKind::AltMotzkin;
}

void require_json_format(const std::string& format, const char* command) {
  if (format != "json") throw UsageError(std::string("--format csv is not supported by '") + command + "'");
}

json rationals(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

json polys(const std::vector<GammaPoly>& v) {
  json arr = json::array();
  for (const auto& p : v) arr.push_back(p.to_json());
  return arr;
}

// Fills fields missing from a map --input object: k = 1 paths, altitude 0,
// and the first admissible mark for each role.
json complete_tuple(json j, Construction c) {
  if (!j.is_object()) throw UsageError("--input must be a JSON object");
  const auto kind = kind_of(c);
  const std::string unit = kind == PathKind::Dyck ? "UD" : "LL";
  if (!j.contains("p1")) j["p1"] = unit;
  if (!j.contains("p2")) j["p2"] = unit;
  if (!j.contains("i")) j["i"] = 0;
  for (const auto& [key, first] : {std::pair{"mark1", true}, std::pair{"mark2", false}}) {
    if (j.contains(key)) continue;
    const auto p = Path::parse(j.at(first ? "p1" : "p2").get<std::string>(), kind);
    const auto marks = admissible_marks(c, p, j.at("i").get<int>(), first);
    if (marks.empty()) {
      throw BijectionError(std::string("no admissible ") + key + " in " + p.render() + " for construction " +
                           std::string(to_string(c)));
    }
    j[key] = marks.front();
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyck and alternating Motzkin path toolkit", "pathforge"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List all paths of one kind and length 2k");
  std::string kind_text;
  int k = 0;
  bool count_only = false;
  enumerate->add_option("--kind", kind_text, "dyck or altmotzkin")->required()->check(CLI::IsMember({"dyck", "altmotzkin"}));
  enumerate->add_option("--k", k, "Half-length")->required()->check(CLI::Range(0, 30));
  enumerate->add_flag("--count-only", count_only, "Print only the count");
  enumerate->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // stats
  auto* stats = app.add_subcommand("stats", "Altitude statistics of one path");
  std::string path_text;
  stats->add_option("--path", path_text, "Step string over U, D, L")->required();
  stats->add_option("--kind", kind_text, "dyck or altmotzkin (inferred if omitted)")
      ->check(CLI::IsMember({"dyck", "altmotzkin"}));
  stats->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // map / invert
  auto* map = app.add_subcommand("map", "Apply a doubling construction to a five-tuple");
  std::string construction_text;
  std::string input_text = "{}";
  map->add_option("--construction", construction_text, "A, B, C or D")->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
  map->add_option("--input", input_text, "Five-tuple JSON {p1, p2, i, mark1, mark2}");
  map->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* invert_cmd = app.add_subcommand("invert", "Recover the five-tuple behind a doubled path");
  invert_cmd->add_option("--construction", construction_text, "A, B, C or D")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "D"}));
  invert_cmd->add_option("--path", path_text, "Step string")->required();
  invert_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Check identities exactly by enumeration");
  std::vector<int> ids;
  int k_max = 0;
  std::string rhs_text;
  double budget = 0;
  verify->add_option("--identity", ids, "Identity number 1..5 (repeatable)")->required()->check(CLI::Range(1, 5));
  verify->add_option("--k-max", k_max, "Largest half-length")->required()->check(CLI::Range(0, 20));
  verify->add_option("--rhs-index", rhs_text, "Right-hand index for identities 4 and 5")
      ->check(CLI::IsMember({"k", "k-1"}));
  verify->add_option("--budget-seconds", budget, "Stop after this many seconds (0 = no limit)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // walk
  auto* walk = app.add_subcommand("walk", "Translate between paths and closed halfline walks");
  bool to_walk = false;
  bool from_walk = false;
  std::string walk_text;
  auto* to_flag = walk->add_flag("--to", to_walk, "Path to walk");
  auto* from_flag = walk->add_flag("--from", from_walk, "Walk to path");
  to_flag->excludes(from_flag);
  walk->add_option("--path", path_text, "Step string (--to), or comma-separated nodes (--from)");
  walk->add_option("--walk", walk_text, "Comma-separated node labels (--from)");
  walk->add_option("--kind", kind_text, "dyck or altmotzkin (inferred if omitted)")
      ->check(CLI::IsMember({"dyck", "altmotzkin"}));
  walk->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo eigenvalue moments of Wigner or Wishart matrices");
  std::string ensemble_text;
  int n = 0, m = 0, trials = 20;
  std::uint64_t seed = 1;
  mc->add_option("--ensemble", ensemble_text, "wigner or wishart")->required()->check(CLI::IsMember({"wigner", "wishart"}));
  mc->add_option("--k", k, "Moment order")->required()->check(CLI::Range(1, 64));
  mc->add_option("--n", n, "Matrix size (columns of G for Wishart)")->required()->check(CLI::Range(2, 20000));
  mc->add_option("--m", m, "Rows of G (Wishart only)")->check(CLI::Range(2, 20000));
  mc->add_option("--trials", trials, "Independent samples")->check(CLI::Range(1, 1000000));
  mc->add_option("--seed", seed, "64-bit seed");
  mc->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // report
  auto* report = app.add_subcommand("report", "Counts, expectations, identities and walk view for one k");
  report->add_option("--k", k, "Half-length")->required()->check(CLI::Range(1, 10));
  report->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) {
      const auto kind = parse_kind(kind_text);
      if (format == "csv") {
        if (count_only) {
          std::size_t count = 0;
          for_each_path(kind, k, [&](const Path&) { ++count; });
          out << "kind,k,count\n" << to_string(kind) << ',' << k << ',' << count << '\n';
        } else {
          out << stats_csv_header() << '\n';
          for_each_path(kind, k, [&](const Path& p) { out << stats_csv_row(p, compute_stats(p)) << '\n'; });
        }
        return kExitOk;
      }
      json j{{"kind", std::string(to_string(kind))}, {"k", k}};
      std::size_t count = 0;
      json paths = json::array();
      for_each_path(kind, k, [&](const Path& p) {
        ++count;
        if (!count_only) paths.push_back(p.render());
      });
      j["count"] = count;
      if (!count_only) j["paths"] = std::move(paths);
      out << j.dump() << '\n';
      return kExitOk;
    }

    if (*stats) {
      const auto p = Path::parse(path_text, infer_kind(path_text, kind_text));
      if (format == "csv") {
        out << stats_csv_header() << '\n' << stats_csv_row(p, compute_stats(p)) << '\n';
      } else {
        out << stats_json(p).dump() << '\n';
      }
      return kExitOk;
    }

    if (*map) {
      require_json_format(format, "map");
      const auto c = parse_construction(construction_text);
      json input;
      try {
        input = json::parse(input_text);
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("--input is not valid JSON: ") + e.what());
      }
      const auto tuple = five_tuple_from_json(complete_tuple(std::move(input), c), c);
      const auto mid = construct(tuple);
      json j = to_json(mid);
      j["construction"] = std::string(to_string(c));
      j["input"] = to_json(tuple);
      out << j.dump() << '\n';
      return kExitOk;
    }

    if (*invert_cmd) {
      require_json_format(format, "invert");
      const auto c = parse_construction(construction_text);
      const auto p = Path::parse(path_text, kind_of(c));
      json j = to_json(invert(c, p));
      j["middle_altitude"] = middle_altitude(p);
      out << j.dump() << '\n';
      return kExitOk;
    }

    if (*verify) {
      SweepOptions options;
      if (!rhs_text.empty()) options.rhs_index = parse_rhs_index(rhs_text);
      options.budget_seconds = budget;
      const auto result = sweep(ids, k_max, options);
      if (format == "csv") {
        out << "id,k,rhs_index,lhs,rhs,equal,expected\n";
        for (const auto& r : result.rows) {
          out << r.id << ',' << r.k << ',' << (r.rhs_index ? std::string(to_string(*r.rhs_index)) : "") << ','
              << to_string(r.lhs) << ',' << to_string(r.rhs) << ',' << (r.equal ? "true" : "false") << ','
              << (r.expected_equal ? "true" : "false") << '\n';
        }
      } else {
        json rows = json::array();
        for (const auto& r : result.rows) rows.push_back(to_json(r));
        out << json{{"reports", rows}, {"partial", result.partial}, {"holds", result.holds()}}.dump() << '\n';
      }
      if (result.partial) err << "warning: time budget exceeded; report is partial\n";
      return result.holds() ? kExitOk : kExitIdentityFailed;
    }

    if (*walk) {
      require_json_format(format, "walk");
      if (to_walk == from_walk) throw UsageError("walk needs exactly one of --to or --from");
      Path p = Path::empty(PathKind::Dyck);
      Walk w({0});
      if (to_walk) {
        if (path_text.empty()) throw UsageError("walk --to requires --path");
        p = Path::parse(path_text, infer_kind(path_text, kind_text));
        w = p.kind() == PathKind::Dyck ? dyck_to_walk(p) : alt_motzkin_to_walk(p);
      } else {
        const std::string& text = walk_text.empty() ? path_text : walk_text;
        if (text.empty()) throw UsageError("walk --from requires --walk (or --path) with node labels");
        w = Walk::parse(text);
        PathKind kind;
        if (!kind_text.empty()) {
          kind = parse_kind(kind_text);
        } else {
          const auto& nodes = w.nodes();
          const bool has_loop = std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end();
          kind = has_loop ? PathKind::AltMotzkin : PathKind::Dyck;
        }
        p = kind == PathKind::Dyck ? walk_to_dyck(w) : walk_to_alt_motzkin(w);
      }
      const auto s = walk_statistics(w);
      out << json{{"kind", std::string(to_string(p.kind()))},
                  {"path", p.render()},
                  {"walk", w.render()},
                  {"time_at_node", s.time_at_node},
                  {"advances", s.advances},
                  {"loops", s.loops}}
                 .dump()
          << '\n';
      return kExitOk;
    }

    if (*mc) {
      require_json_format(format, "mc");
      const auto ensemble = parse_ensemble(ensemble_text);
      MomentEstimate e = ensemble == Ensemble::Wigner
                             ? wigner_moment(k, n, trials, seed)
                             : (m == 0 ? throw UsageError("mc --ensemble wishart requires --m")
                                       : wishart_moment(k, n, m, trials, seed));
      out << to_json(e).dump() << '\n';
      return kExitOk;
    }

    if (*report) {
      require_json_format(format, "report");
      const auto dyck = expectation_vectors(k, PathKind::Dyck, Weighting::Uniform).at(1);
      const auto am = expectation_vectors(k, PathKind::AltMotzkin, Weighting::RiseWeighted);
      json ids_json = json::array();
      ids_json.push_back(to_json(verify_thm1(k)));
      ids_json.push_back(to_json(verify_thm2(k)));
      ids_json.push_back(to_json(verify_thm3(k)));
      if (k >= 2) {
        for (int id : {4, 5}) {
          for (const auto& r : verify_both(id, k)) ids_json.push_back(to_json(r));
        }
      }
      const auto walks = walk_identity_summary(k);
      json j{{"k", k},
             {"dyck", {{"count", catalan(k).str()}, {"E_R", rationals(dyck.rises)}, {"E_V", rationals(dyck.vertices)}}},
             {"altmotzkin",
              {{"weight", am.normalizer.to_json()},
               {"E_R_numerator", polys(am.rises)},
               {"E_L_numerator", polys(am.even_levels)}}},
             {"identities", ids_json},
             {"walks",
              {{"square_average_advances", to_string(walks.square_average_advances)},
               {"square_average_time", to_string(walks.square_average_time)}}}};
      out << j.dump() << '\n';
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace pathforge::cli

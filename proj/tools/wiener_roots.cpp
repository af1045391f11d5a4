// wiener-roots: command-line front end for the core library.
//
// Exit codes: 0 success, 1 a verified claim failed, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wiener/claims.hpp"
#include "wiener/enumerate.hpp"
#include "wiener/errors.hpp"
#include "wiener/families.hpp"
#include "wiener/graph6.hpp"
#include "wiener/report_io.hpp"

namespace {

using namespace wiener;

struct Globals {
  std::string format = "json";
  std::string out;
  int jobs = 1;
  bool allow_long = false;
  double tolerance = 1e-8;

  ClaimOptions claim_options() const { return {tolerance, jobs, allow_long}; }
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Error("cannot open " + g.out + " for writing");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string render(const Globals& g, const std::vector<RootRecord>& records) {
  return g.format == "csv" ? to_csv(records) : to_json(records);
}

int finish_reports(const Globals& g, const std::vector<ClaimReport>& reports) {
  emit(g, g.format == "csv" ? suite_csv(reports) : to_json(reports));
  for (const auto& r : reports) {
    if (r.verdict == Verdict::fail) return 1;
  }
  return 0;
}

/// "n=3..7" or "n=5".
std::pair<std::string, ParamRange> parse_param(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError("parameter must look like name=value or name=lo..hi");
  const std::string name = text.substr(0, eq);
  const std::string value = text.substr(eq + 1);
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError("bad integer '" + s + "' in " + text);
    return static_cast<std::int64_t>(v);
  };
  const auto dots = value.find("..");
  if (dots == std::string::npos) {
    const auto v = to_int(value);
    return {name, {v, v}};
  }
  return {name, {to_int(value.substr(0, dots)), to_int(value.substr(dots + 2))}};
}

std::pair<int, int> parse_order_range(const std::string& text) {
  const auto [name, range] = parse_param("order=" + text);
  (void)name;
  return {static_cast<int>(range.lo), static_cast<int>(range.hi)};
}

}  // namespace

int main(int argc, char** argv) {
  if (std::getenv("WIENER_ROOTS_SEED") != nullptr) {
    std::cerr << "error: WIENER_ROOTS_SEED is not supported; every run is deterministic\n";
    return 2;
  }

  CLI::App app{"Roots of Wiener polynomials of graphs and trees"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Write output to this file");
  app.add_option("--jobs", g.jobs, "Worker threads for graph sweeps")->check(CLI::Range(1, 256));
  app.add_flag("--long", g.allow_long, "Allow order-8 graph sweeps");
  app.add_option("--tol", g.tolerance, "Slack for numeric inequality checks")->check(CLI::PositiveNumber);

  auto* compute = app.add_subcommand("compute", "Distance distribution, W and roots of input graphs");
  std::vector<std::string> graph6_args;
  std::string edges_file;
  compute->add_option("graph6", graph6_args, "graph6 strings (read from stdin when none given)");
  compute->add_option("--edges", edges_file, "Edge-list file: n, then one 'u v' per line");

  auto* scatter = app.add_subcommand("scatter", "Roots of every distinct distribution of a class");
  std::string scatter_class = "graphs";
  std::string scatter_orders;
  scatter->add_option("--class", scatter_class)->check(CLI::IsMember({"graphs", "trees"}));
  scatter->add_option("--order", scatter_orders, "Order or range lo..hi")->required();

  auto* verify = app.add_subcommand("verify", "Check one claim over parameter ranges");
  std::string claim_id;
  std::vector<std::string> params;
  verify->add_option("claim", claim_id, "Claim id (see 'list')")->required();
  verify->add_option("--param,-p", params, "name=value or name=lo..hi");

  auto* verify_all = app.add_subcommand("verify-all", "Run the claim suite");
  std::string profile = "quick";
  verify_all->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));

  auto* list = app.add_subcommand("list", "List claim ids and their parameters");

  auto* family = app.add_subcommand("family", "Roots of a named family member, e.g. broom:4,20");
  std::vector<std::string> family_specs;
  family->add_option("spec", family_specs, "name:p1,p2,...")->required();

  auto* extremal = app.add_subcommand("extremal", "Search a class for root extremes");
  std::string ext_class = "trees";
  std::string objective = "max_modulus";
  int ext_order = 0;
  extremal->add_option("--class", ext_class)->check(CLI::IsMember({"graphs", "trees"}));
  extremal->add_option("--objective", objective)
      ->check(CLI::IsMember({"max_modulus", "max_real", "max_imag", "min_nonzero_modulus"}));
  extremal->add_option("--order", ext_order)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) {
      std::vector<RootRecord> records;
      if (!edges_file.empty()) {
        std::ifstream in(edges_file);
        if (!in) throw ParseError("cannot read " + edges_file);
        const Graph graph = read_edge_list(in);
        records.push_back(analyse(edges_file, distance_distribution(graph)));
      }
      if (graph6_args.empty() && edges_file.empty()) {
        std::string line;
        while (std::getline(std::cin, line)) {
          if (line.empty()) continue;
          graph6_args.push_back(line);
        }
      }
      for (const auto& s : graph6_args) {
        const Graph graph = parse_graph6(s);
        try {
          records.push_back(analyse(s, distance_distribution(graph)));
        } catch (const DisconnectedGraphError& e) {
          records.push_back(RootRecord{s, std::nullopt, {}, {}, e.what()});
        } catch (const DomainError& e) {
          records.push_back(RootRecord{s, std::nullopt, {}, {}, e.what()});
        }
      }
      emit(g, render(g, records));
      return 0;
    }

    if (*scatter) {
      const auto [lo, hi] = parse_order_range(scatter_orders);
      const auto cls = parse_instance_class(scatter_class);
      const int max_order = cls == InstanceClass::graphs ? (g.allow_long ? kMaxGraphOrder : kDefaultMaxGraphOrder)
                                                         : kMaxTreeOrder;
      if (lo < 2 || hi > max_order || lo > hi) {
        throw DomainError("order range must lie in [2, " + std::to_string(max_order) + "]" +
                          (cls == InstanceClass::graphs && hi == kMaxGraphOrder ? " (order 8 needs --long)" : ""));
      }
      std::vector<RootRecord> records;
      for (int n = lo; n <= hi; ++n) {
        if (cls == InstanceClass::graphs) {
          const auto sweep = enumerate_connected_distributions(n, SweepOptions{g.jobs, g.allow_long});
          for (const auto& c : sweep.classes) {
            records.push_back(analyse(to_graph6(c.representative), c.distribution));
          }
        } else {
          std::set<DistanceDistribution> seen;
          enumerate_trees(n, [&](const Graph& t) {
            auto dd = distance_distribution(t);
            if (seen.insert(dd).second) records.push_back(analyse(to_graph6(t), dd));
          });
        }
      }
      emit(g, g.format == "csv" ? scatter_csv(records) : to_json(records));
      return 0;
    }

    if (*verify) {
      ParamMap map;
      for (const auto& p : params) {
        auto [name, range] = parse_param(p);
        map[name] = range;
      }
      return finish_reports(g, run_claim(claim_id, map, g.claim_options()));
    }

    if (*verify_all) {
      return finish_reports(g, run_suite(parse_profile(profile), g.claim_options()));
    }

    if (*list) {
      std::ostringstream os;
      for (const auto& c : claim_registry()) {
        os << c.id;
        for (const auto& p : c.param_names) os << ' ' << p;
        os << "\n    " << c.summary << '\n';
      }
      std::cout << os.str();
      return 0;
    }

    if (*family) {
      std::vector<RootRecord> records;
      for (const auto& text : family_specs) {
        const auto spec = FamilySpec::parse(text);
        const auto w = family_polynomial(spec);
        std::vector<std::uint64_t> d;
        for (const auto& c : w.counts()) {
          if (!c.fits_ulong_p()) throw DomainError(text + ": coefficients exceed 64 bits");
          d.push_back(c.get_ui());
        }
        records.push_back(analyse(spec.to_string(), DistanceDistribution(static_cast<int>(spec.order()), d)));
      }
      emit(g, render(g, records));
      return 0;
    }

    if (*extremal) {
      const auto rep = search_extremal(ext_order, parse_objective(objective), parse_instance_class(ext_class),
                                       g.claim_options());
      if (g.format == "csv") {
        std::string out = "order,objective,class,best_value,argmax\n";
        for (const auto& a : rep.argmax) {
          out += std::to_string(rep.order) + "," + std::string(to_string(rep.objective)) + "," +
                 std::string(to_string(rep.instance_class)) + "," + format_double(rep.best_value) + ",\"" +
                 a.description + "\"\n";
        }
        emit(g, out);
      } else {
        emit(g, to_json(rep));
      }
      return 0;
    }
  } catch (const RootFindingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

// Command-line front end: group inspection, exact intersection density,
// EKR/strict-EKR decisions, degree-2p classification, named constructions,
// verification suites, and density spectra over group collections.
//
// Exit codes: 0 success, 1 mathematical failure (a suite check failed),
// 2 malformed input, 3 resource cap or search budget exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ekr/classify.hpp"
#include "ekr/config.hpp"
#include "ekr/constructions.hpp"
#include "ekr/density.hpp"
#include "ekr/grp_format.hpp"
#include "ekr/json_io.hpp"
#include "ekr/perm_io.hpp"

namespace {

using namespace ekr;

std::uint64_t parse_number(const std::string& text) {
  std::string_view s = text;
  int base = 10;
  if (s.starts_with("0x") || s.starts_with("0X")) {
    s.remove_prefix(2);
    base = 16;
  } else if (s.starts_with("0b") || s.starts_with("0B")) {
    s.remove_prefix(2);
    base = 2;
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("expected a number, got '" + text + "'");
  return value;
}

// Splits "a,b,c" at the top nesting level of parentheses.
std::vector<std::string> split_args(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
      continue;
    }
    current += c;
  }
  parts.push_back(current);
  return parts;
}

std::string strip(const std::string& s) {
  auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// Group specs: either a .grp file path or a constructor expression.
//
//   cyclic(N)  dihedral(N)  sym(N) | SN  alt(N) | AN
//   pairs(SPEC)                 action on unordered point pairs
//   wreath(BOTTOM,TOP)          imprimitive wreath product
//   wreath-sylow(P,K)           Sylow p-subgroup of Sym(p^k)
//   thm16i(P[,SEED...])         code kernel x| p-cycle on 2P points
//   frobenius-lift(P,D[,SEED...])  the same extended by a multiplier
//   s4-pairs a4-pairs s5-pairs a5-pairs   shorthands
//
// Seeds accept decimal, 0x..., or 0b... and default to the adjacent-pair
// seed (full even-weight code).
PermGroup resolve_group_inner(const std::string& raw, const RunConfig& cfg);

PermGroup resolve_group(const std::string& raw, const RunConfig& cfg) {
  PermGroup g = resolve_group_inner(raw, cfg);
  if (g.order() > cfg.element_cap) throw CapExceeded("order cap exceeded");
  return g;
}

PermGroup resolve_group_inner(const std::string& raw, const RunConfig& cfg) {
  const std::string spec = strip(raw);
  if (spec.empty()) throw ParseError("empty group spec");
  if (std::filesystem::exists(spec)) return read_grp_file(spec, cfg.element_cap);

  static const std::vector<std::pair<const char*, const char*>> shorthands = {
      {"s4-pairs", "pairs(S4)"},
      {"a4-pairs", "pairs(A4)"},
      {"s5-pairs", "pairs(S5)"},
      {"a5-pairs", "pairs(A5)"},
  };
  for (const auto& [alias, target] : shorthands)
    if (spec == alias) return resolve_group(target, cfg);

  // SN / AN without parentheses.
  if ((spec[0] == 'S' || spec[0] == 'A') && spec.size() > 1 &&
      spec.find('(') == std::string::npos) {
    std::uint64_t n = parse_number(spec.substr(1));
    return spec[0] == 'S' ? symmetric_group(n) : alternating_group(n);
  }

  auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')')
    throw ParseError("unknown group spec: '" + spec + "'");
  const std::string head = strip(spec.substr(0, open));
  const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
  std::vector<std::string> args = split_args(inner);
  for (std::string& a : args) a = strip(a);

  auto want = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
      throw ParseError("wrong number of arguments in '" + spec + "'");
  };
  auto seeds_from = [&](std::size_t first) {
    std::vector<std::uint64_t> seeds;
    for (std::size_t i = first; i < args.size(); ++i)
      seeds.push_back(parse_number(args[i]));
    if (seeds.empty()) seeds.push_back(kAdjacentPairSeed);
    return seeds;
  };

  if (head == "cyclic") {
    want(1, 1);
    return cyclic_group(parse_number(args[0]));
  }
  if (head == "dihedral") {
    want(1, 1);
    return dihedral_group(parse_number(args[0]));
  }
  if (head == "sym") {
    want(1, 1);
    return symmetric_group(parse_number(args[0]));
  }
  if (head == "alt") {
    want(1, 1);
    return alternating_group(parse_number(args[0]));
  }
  if (head == "pairs") {
    want(1, 1);
    return action_on_2subsets(resolve_group(args[0], cfg), cfg.element_cap);
  }
  if (head == "wreath") {
    want(2, 2);
    return wreath_product(resolve_group(args[0], cfg),
                          resolve_group(args[1], cfg), cfg.element_cap);
  }
  if (head == "wreath-sylow" || head == "wreath_sylow") {
    want(2, 2);
    return iterated_wreath_sylow(parse_number(args[0]), parse_number(args[1]),
                                 cfg.element_cap);
  }
  if (head == "thm16i") {
    want(1, 64);
    return thm16i_group(parse_number(args[0]), seeds_from(1));
  }
  if (head == "frobenius-lift" || head == "frobenius_lift") {
    want(2, 64);
    return frobenius_lift(parse_number(args[0]), parse_number(args[1]),
                          seeds_from(2));
  }
  throw ParseError("unknown group spec: '" + spec + "'");
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_group_info(std::ostream& out, const PermGroup& g) {
  out << "name: " << (g.name().empty() ? "(unnamed)" : g.name()) << "\n";
  out << "degree: " << g.degree() << "\n";
  out << "order: " << g.order() << "\n";
  out << "generators:";
  for (const Perm& p : g.generators()) out << " " << to_cycle_string(p);
  out << "\n";
  bool transitive = is_transitive(g);
  out << "transitive: " << yesno(transitive) << "\n";
  out << "2-transitive: " << yesno(is_2_transitive(g)) << "\n";
  out << "primitive: " << yesno(transitive && is_primitive(g)) << "\n";
  if (transitive) {
    auto systems = all_block_systems(g);
    out << "block systems:";
    if (systems.empty()) out << " none";
    for (const auto& bs : systems)
      out << " " << bs.blocks.size() << "x" << bs.block_size();
    out << "\n";
  }
  out << "stabilizer order: " << max_stabilizer_order(g) << "\n";
  out << "derangements: " << derangement_indices(g).size() << "\n";
}

void print_family(std::ostream& out, const PermGroup& g,
                  std::span<const std::uint32_t> family) {
  for (std::uint32_t idx : family) out << " " << to_cycle_string(g.element(idx));
}

void print_density(std::ostream& out, const PermGroup& g,
                   const DensityResult& r) {
  out << "group: " << g.name() << " (degree " << r.degree << ", order "
      << r.order << ")\n";
  out << "alpha = " << r.alpha << ", max stabilizer order = "
      << r.stabilizer_order << "\n";
  out << "rho = " << to_string(r.rho) << "\n";
  out << "EKR: " << yesno(r.is_ekr) << "\n";
  if (r.strict_ekr)
    out << "strict-EKR: " << yesno(*r.strict_ekr) << "\n";
  if (r.family.size() <= 24) {
    out << "maximum family:";
    print_family(out, g, r.family);
    out << "\n";
  } else {
    out << "maximum family: " << r.family.size() << " elements\n";
  }
  if (!r.bound_clique.empty())
    out << "bound clique: " << r.bound_clique.size() << " pairwise "
        << "non-intersecting elements\n";
  for (const std::string& line : r.method) out << "  - " << line << "\n";
  out << "search nodes: " << r.nodes << "\n";
}

int run_verify(const std::vector<std::string>& names,
               const std::vector<PermGroup>& groups, bool json,
               const DensityOptions& opts) {
  std::vector<SuiteReport> reports;
  for (const std::string& name : names)
    reports.push_back(run_suite(name, groups, opts));

  if (json) {
    if (reports.size() == 1) {
      std::cout << suite_report_json(reports[0]);
    } else {
      nlohmann::ordered_json all = nlohmann::ordered_json::array();
      for (const SuiteReport& rep : reports)
        all.push_back(nlohmann::ordered_json::parse(suite_report_json(rep)));
      std::cout << all.dump(2) << "\n";
    }
  } else {
    for (const SuiteReport& rep : reports) {
      std::cout << "suite " << rep.suite << ": " << rep.passed << " passed, "
                << rep.failed << " failed, " << rep.skipped << " skipped\n";
      for (const SuiteCheck& c : rep.checks)
        std::cout << "  [" << to_string(c.status) << "] " << c.subject << ": "
                  << c.detail << "\n";
    }
  }
  for (const SuiteReport& rep : reports)
    if (rep.failed > 0) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  try {
    RunConfig cfg = config_from_env();

    CLI::App app{"exact intersection density toolkit for permutation groups"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--cap", cfg.element_cap,
                   "element count cap for group closures")
        ->capture_default_str();
    app.add_option("--budget", cfg.node_budget, "clique search node budget")
        ->capture_default_str();
    app.add_option("--enum-limit", cfg.enumeration_limit,
                   "maximum families to enumerate")
        ->capture_default_str();
    app.add_option("--workers", cfg.workers, "worker threads for the search")
        ->capture_default_str();
    app.add_flag("--force-exact", cfg.force_exact,
                 "skip shortcuts and bound closure; always run the search");
    app.add_flag("--deterministic", cfg.deterministic,
                 "pin the search to one worker");
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text");

    std::function<int()> action;

    // info
    auto* info = app.add_subcommand("info", "inspect a permutation group");
    auto info_spec = std::make_shared<std::string>();
    auto dimacs_path = std::make_shared<std::string>();
    info->add_option("group", *info_spec, "group spec or .grp file")->required();
    info->add_option("--dimacs", *dimacs_path,
                     "also write the derangement graph in DIMACS format");
    info->callback([&, info_spec, dimacs_path] {
      action = [&, info_spec, dimacs_path] {
        PermGroup g = resolve_group(*info_spec, cfg);
        if (json)
          std::cout << group_info_json(g);
        else
          print_group_info(std::cout, g);
        if (!dimacs_path->empty()) {
          std::ofstream out(*dimacs_path);
          if (!out) throw Error("cannot write file: " + *dimacs_path);
          write_dimacs(out, derangement_graph(g));
        }
        return 0;
      };
    });

    // rho
    auto* rho = app.add_subcommand("rho", "compute the intersection density");
    auto rho_spec = std::make_shared<std::string>();
    auto rho_strict = std::make_shared<bool>(false);
    auto rho_families = std::make_shared<bool>(false);
    rho->add_option("group", *rho_spec, "group spec or .grp file")->required();
    rho->add_flag("--strict", *rho_strict, "also decide strict-EKR");
    rho->add_flag("--families", *rho_families,
                  "list every maximum family containing the identity");
    rho->callback([&, rho_spec, rho_strict, rho_families] {
      action = [&, rho_spec, rho_strict, rho_families] {
        PermGroup g = resolve_group(*rho_spec, cfg);
        DensityOptions opts = cfg.density_options();
        opts.compute_strict = *rho_strict;
        DensityResult r = intersection_density(g, opts);
        if (json)
          std::cout << density_report_json(g, r);
        else
          print_density(std::cout, g, r);
        if (*rho_families) {
          auto families = maximum_families(g, r.alpha, opts);
          std::cout << "maximum families containing the identity: "
                    << families.size() << "\n";
          for (const auto& f : families) {
            std::cout << (is_canonical_family(g, f) ? "  canonical:"
                                                    : "  non-canonical:");
            print_family(std::cout, g, f);
            std::cout << "\n";
          }
        }
        return 0;
      };
    });

    // ekr
    auto* ekr_cmd = app.add_subcommand("ekr", "decide EKR and strict-EKR");
    auto ekr_spec = std::make_shared<std::string>();
    ekr_cmd->add_option("group", *ekr_spec, "group spec or .grp file")->required();
    ekr_cmd->callback([&, ekr_spec] {
      action = [&, ekr_spec] {
        PermGroup g = resolve_group(*ekr_spec, cfg);
        DensityOptions opts = cfg.density_options();
        opts.compute_strict = true;
        DensityResult r = intersection_density(g, opts);
        if (json) {
          std::cout << density_report_json(g, r);
        } else {
          std::cout << "group: " << g.name() << " (degree " << r.degree
                    << ", order " << r.order << ")\n";
          std::cout << "alpha = " << r.alpha << ", max stabilizer order = "
                    << r.stabilizer_order << "\n";
          std::cout << "EKR: " << yesno(r.is_ekr) << "\n";
          std::cout << "strict-EKR: " << yesno(r.strict_ekr.value_or(false))
                    << "\n";
        }
        return 0;
      };
    });

    // classify
    auto* classify = app.add_subcommand(
        "classify", "structural density prediction for degree 2p");
    auto classify_spec = std::make_shared<std::string>();
    classify->add_option("group", *classify_spec, "group spec or .grp file")
        ->required();
    classify->callback([&, classify_spec] {
      action = [&, classify_spec] {
        PermGroup g = resolve_group(*classify_spec, cfg);
        Classification2p c = classify_2p(g);
        if (json) {
          std::cout << classification_json(g, c);
        } else {
          std::cout << "group: " << g.name() << " (degree " << g.degree()
                    << ", order " << g.order() << ")\n";
          std::cout << "class: " << to_string(c.cls) << " (p = " << c.p
                    << ", " << (c.primitive ? "primitive" : "imprimitive")
                    << ")\n";
          std::cout << "predicted rho: " << to_string(c.predicted_rho) << "\n";
          std::cout << "detail: " << c.detail << "\n";
        }
        return 0;
      };
    });

    // construct
    auto* construct =
        app.add_subcommand("construct", "write a named group as a .grp file");
    auto construct_spec = std::make_shared<std::string>();
    auto construct_out = std::make_shared<std::string>();
    construct->add_option("group", *construct_spec, "group spec")->required();
    construct->add_option("-o,--output", *construct_out,
                          "output path (default: stdout)");
    construct->callback([&, construct_spec, construct_out] {
      action = [&, construct_spec, construct_out] {
        PermGroup g = resolve_group(*construct_spec, cfg);
        std::string comment = "generated by: ekr construct " + *construct_spec;
        if (construct_out->empty()) {
          write_grp(std::cout, g, comment);
        } else {
          write_grp_file(*construct_out, g, comment);
        }
        return 0;
      };
    });

    // verify
    auto* verify =
        app.add_subcommand("verify", "run a verification suite over groups");
    auto verify_suite = std::make_shared<std::string>();
    auto verify_groups = std::make_shared<std::vector<std::string>>();
    verify
        ->add_option("suite", *verify_suite,
                     "suite name or 'all' (see --list)")
        ->required();
    verify->add_option("groups", *verify_groups,
                       "group specs or .grp files (default: built-in examples)");
    verify->callback([&, verify_suite, verify_groups] {
      action = [&, verify_suite, verify_groups] {
        std::vector<std::string> names;
        if (*verify_suite == "all")
          names = suite_names();
        else
          names.push_back(*verify_suite);
        std::vector<PermGroup> groups;
        for (const std::string& spec : *verify_groups)
          groups.push_back(resolve_group(spec, cfg));
        return run_verify(names, groups, json, cfg.density_options());
      };
    });

    // suites listing
    auto* suites = app.add_subcommand("suites", "list verification suites");
    suites->callback([&] {
      action = [&] {
        for (const std::string& name : suite_names()) std::cout << name << "\n";
        return 0;
      };
    });

    // spectrum
    auto* spectrum = app.add_subcommand(
        "spectrum", "density spectrum over a collection of groups");
    auto spectrum_groups = std::make_shared<std::vector<std::string>>();
    spectrum
        ->add_option("groups", *spectrum_groups, "group specs or .grp files")
        ->required();
    spectrum->callback([&, spectrum_groups] {
      action = [&, spectrum_groups] {
        std::vector<PermGroup> groups;
        for (const std::string& spec : *spectrum_groups)
          groups.push_back(resolve_group(spec, cfg));
        SpectrumReport rep = rho_spectrum(groups, cfg.density_options());
        if (json) {
          std::cout << spectrum_json(rep);
        } else {
          for (const SpectrumEntry& e : rep.entries)
            std::cout << e.name << ": degree " << e.degree << ", order "
                      << e.order << ", rho = " << to_string(e.rho)
                      << (e.is_ekr ? " (EKR)" : "") << "\n";
          std::cout << "spectrum:";
          for (const auto& [value, count] : rep.counts)
            std::cout << " " << to_string(value) << " x" << count;
          std::cout << "\n";
        }
        return 0;
      };
    });

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    return action ? action() : 0;
  } catch (const ekr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ekr::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ekr::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ekr::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

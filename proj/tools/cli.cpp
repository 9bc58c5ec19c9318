#include "cli.hpp"

#include <chrono>
#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "ctv/chessboard.hpp"
#include "ctv/errors.hpp"
#include "ctv/homology.hpp"
#include "ctv/json_io.hpp"
#include "ctv/tverberg.hpp"

namespace ctv::cli {

namespace {

constexpr int kOk = 0;
constexpr int kIdentityFailure = 1;
constexpr int kUsageError = 2;
constexpr int kBudgetExceeded = 3;

struct CommandResult {
  json result;
  std::string summary;
  int exit_code = kOk;
};

CommandResult run_chessboard(int r, int n, bool with_homology, bool with_pm,
                             bool with_f, bool dump) {
  CommandResult out;
  Complex board = chessboard_complex({r, n});
  if (dump) {
    out.result["complex"] = to_json(board);
  }
  out.result["r"] = r;
  out.result["n"] = n;
  out.result["num_vertices"] = board.num_vertices;
  out.result["dimension"] = board.dimension;
  out.result["num_facets"] = board.facets.size();
  if (with_f) {
    out.result["f_vector"] = f_vector(board);
  }
  if (with_pm) {
    out.result["pseudomanifold"] = to_json(is_pseudomanifold(board));
  }
  if (with_homology) {
    json groups = json::array();
    for (int dim = 0; dim <= board.dimension; ++dim) {
      HomologyGroup h = homology(board, dim);
      json torsion = json::array();
      for (const auto& t : h.torsion) {
        torsion.push_back(t.str());
      }
      groups.push_back({{"dim", dim}, {"betti", h.betti}, {"torsion", torsion}});
    }
    out.result["homology"] = groups;
  }
  out.summary = "chessboard " + std::to_string(r) + "x" + std::to_string(n) + ": " +
                std::to_string(board.facets.size()) + " facets, dimension " +
                std::to_string(board.dimension);
  return out;
}

CommandResult run_collapse(int r) {
  CommandResult out;
  CollapseReport rep = collapse_matching(r);
  out.result = to_json(rep);
  bool ok = rep.valid && rep.equivariant && rep.residual_dimension == r - 2;
  out.exit_code = ok ? kOk : kIdentityFailure;
  out.summary = "collapse r=" + std::to_string(r) + ": " +
                (ok ? "valid equivariant matching, residual dimension " +
                          std::to_string(rep.residual_dimension)
                    : "FAILED");
  return out;
}

CommandResult run_cocycle(int d, int r, bool chains, bool claims, bool boundaries,
                          bool verdict, bool explicit_h, std::uint64_t eval_budget,
                          std::uint64_t enum_budget, const Hooks& hooks) {
  CommandResult out;
  bool failed = false;

  if (!chains && !claims && !boundaries && !verdict && !explicit_h) {
    verdict = true;  // default view
  }

  if (verdict) {
    VerdictOptions opts;
    opts.chain_eval_budget = eval_budget;
    opts.facet_enum_budget = enum_budget;
    ObstructionVerdict v = obstruction_verdict(d, r, opts);
    out.result["verdict"] = to_json(v);
    failed |= !v.consistent();
    out.summary += "phi = " + v.phi_value.str() + ", extension " +
                   (v.extension_exists ? "exists" : "does not exist") + "; ";
  }

  if (chains || claims || boundaries || explicit_h) {
    ConfigSpace cs(d, r, std::numeric_limits<std::uint64_t>::max());
    SpecialChains built;
    const SpecialChains* use = hooks.override_chains;
    if (use == nullptr) {
      built = special_chains(cs);
      use = &built;
    }
    if (chains) {
      out.result["chains"] = {{"phi_terms", use->phi.size()},
                              {"omega_terms", use->omega.empty() ? 0 : use->omega[0].size()},
                              {"theta_terms", use->theta.empty() ? 0 : use->theta[0].size()},
                              {"dimension", use->phi.dim()}};
    }
    if (boundaries) {
      BoundaryRelationReport rep = check_boundary_relations(cs, use);
      out.result["boundaries"] = to_json(rep);
      failed |= !rep.all();
      out.summary += std::string("boundary identities ") + (rep.all() ? "hold" : "FAIL") + "; ";
    }
    if (claims) {
      SignClaimReport rep = check_sign_claims(cs, use);
      out.result["claims"] = to_json(rep);
      failed |= !rep.all();
      out.summary += std::string("sign claims ") + (rep.all() ? "hold" : "FAIL") + "; ";
    }
    if (explicit_h) {
      HCheckOptions opts;
      opts.chain_eval_budget = eval_budget;
      HCheckReport rep = explicit_h_check(cs, opts, use);
      out.result["explicit_h"] = to_json(rep);
      failed |= !rep.all();
      out.summary += std::string("explicit cochain identities ") +
                     (rep.all() ? "hold" : "FAIL") + "; ";
    }
  }

  out.exit_code = failed ? kIdentityFailure : kOk;
  if (out.summary.empty()) {
    out.summary = "cocycle d=" + std::to_string(d) + " r=" + std::to_string(r);
  }
  return out;
}

json config_echo(const ColoredConfiguration& cfg) {
  json sizes = json::array();
  for (const auto& cls : cfg.classes) {
    sizes.push_back(cls.size());
  }
  return {{"d", cfg.d}, {"class_sizes", sizes}, {"total", cfg.total()}};
}

CommandResult run_partition(const std::string& mode, const std::string& config_path,
                            int r, std::uint64_t budget) {
  CommandResult out;
  ColoredConfiguration cfg = load_configuration(config_path);
  out.result["config"] = config_echo(cfg);
  EnumerationOptions opts;
  opts.budget = budget;
  if (mode == "find") {
    auto found = find_rainbow_partition(cfg, r, opts);
    out.result["found"] = found.has_value();
    if (found) {
      out.result["partition"] = to_json(found->first);
      out.result["witness"] = to_json(found->second);
      out.summary = "partition found with witness";
    } else {
      out.summary = "no rainbow partition with intersecting hulls";
    }
  } else {
    std::int64_t count = count_tverberg_partitions(cfg, r, opts);
    out.result["count"] = count;
    out.summary = "tverberg partitions: " + std::to_string(count);
  }
  return out;
}

CommandResult run_trial(int d, int r, int class_size, int trials, std::uint64_t seed) {
  CommandResult out;
  TrialReport rep = conjecture_trial(d, r, class_size, trials, seed);
  out.result = to_json(rep);
  out.summary = "trials: " + std::to_string(rep.successes) + "/" +
                std::to_string(trials) + " succeeded (route " + rep.route + ")";
  return out;
}

CommandResult run_reduce(const std::string& config_path, int r, std::uint64_t budget) {
  CommandResult out;
  ColoredConfiguration cfg = load_configuration(config_path);
  out.result["config"] = config_echo(cfg);
  PadReduction red = pad_reduction(cfg, r);
  out.result["padded"] = to_json(red.padded);
  EnumerationOptions opts;
  opts.budget = budget;
  auto found = find_rainbow_partition(red.padded, r, opts);
  out.result["found"] = found.has_value();
  bool verified = false;
  if (found) {
    auto restricted = red.restrict_partition(found->first);
    out.result["partition"] = to_json(found->first);
    out.result["restricted"] = to_json(restricted);
    auto w = hulls_intersect(partition_points(cfg, restricted));
    verified = w.has_value();
    if (w) {
      out.result["witness"] = to_json(*w);
    }
  }
  out.result["verified"] = verified;
  out.exit_code = verified ? kOk : kIdentityFailure;
  out.summary = verified ? "padded solution restricts to a verified partition"
                         : "reduction round-trip FAILED";
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, const Hooks& hooks) {
  CLI::App app{"exact colored Tverberg toolkit"};
  app.require_subcommand(1);
  bool json_only = false;
  app.add_flag("--json-only", json_only, "suppress the stderr summary");

  int r = 0, n = 0, d = 0, class_size = 0, trials = 100;
  std::uint64_t seed = 0, budget = 1'000'000, eval_budget = 10'000, enum_budget = 0;
  bool with_homology = false, with_pm = false, with_f = false, dump = false;
  bool chains = false, claims = false, boundaries = false, verdict = false,
       explicit_h = false;
  std::string config_path, mode;

  auto* cmd_chessboard = app.add_subcommand("chessboard", "chessboard complex reports");
  cmd_chessboard->add_option("--r", r, "rows")->required();
  cmd_chessboard->add_option("--n", n, "columns")->required();
  cmd_chessboard->add_flag("--homology", with_homology, "integer homology per dimension");
  cmd_chessboard->add_flag("--pseudomanifold", with_pm, "pseudomanifold report");
  cmd_chessboard->add_flag("--f-vector", with_f, "face counts per dimension");
  cmd_chessboard->add_flag("--dump", dump, "emit the complex as JSON");

  auto* cmd_collapse = app.add_subcommand("collapse", "square-board matching report");
  cmd_collapse->add_option("--r", r, "rows and columns")->required();

  auto* cmd_cocycle = app.add_subcommand("cocycle", "obstruction cocycle checks");
  cmd_cocycle->add_option("--d", d, "ambient dimension")->required();
  cmd_cocycle->add_option("--r", r, "number of parts")->required();
  cmd_cocycle->add_flag("--chains", chains, "distinguished chain summary");
  cmd_cocycle->add_flag("--claims", claims, "transposition sign claims");
  cmd_cocycle->add_flag("--boundaries", boundaries, "boundary decompositions");
  cmd_cocycle->add_flag("--verdict", verdict, "divisibility verdict");
  cmd_cocycle->add_flag("--explicit-h", explicit_h, "explicit cochain identities");
  cmd_cocycle->add_option("--eval-budget", eval_budget, "facet evaluations per chain");
  cmd_cocycle->add_option("--enum-budget", enum_budget, "full facet enumeration cap");

  auto* cmd_partition = app.add_subcommand("partition", "rainbow partition search");
  cmd_partition->add_option("mode", mode, "find or count")
      ->required()
      ->check(CLI::IsMember({"find", "count"}));
  cmd_partition->add_option("--config", config_path, "configuration JSON file")->required();
  cmd_partition->add_option("--r", r, "number of parts")->required();
  cmd_partition->add_option("--budget", budget, "enumeration budget");

  auto* cmd_trial = app.add_subcommand("trial", "randomized solver experiments");
  cmd_trial->add_option("--d", d, "ambient dimension")->required();
  cmd_trial->add_option("--r", r, "number of parts")->required();
  cmd_trial->add_option("--class-size", class_size, "points per color class")->required();
  cmd_trial->add_option("--trials", trials, "number of trials");
  cmd_trial->add_option("--seed", seed, "random seed");

  auto* cmd_reduce = app.add_subcommand("reduce", "padding reduction round-trip");
  cmd_reduce->add_option("--config", config_path, "configuration JSON file")->required();
  cmd_reduce->add_option("--r", r, "number of parts")->required();
  cmd_reduce->add_option("--budget", budget, "enumeration budget");

  for (auto* sub : {cmd_chessboard, cmd_collapse, cmd_cocycle, cmd_partition,
                    cmd_trial, cmd_reduce}) {
    sub->fallthrough();  // lets --json-only trail the subcommand options
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  }

  auto started = std::chrono::steady_clock::now();
  CommandResult res;
  std::string command;
  try {
    if (cmd_chessboard->parsed()) {
      command = "chessboard";
      res = run_chessboard(r, n, with_homology, with_pm, with_f, dump);
    } else if (cmd_collapse->parsed()) {
      command = "collapse";
      res = run_collapse(r);
    } else if (cmd_cocycle->parsed()) {
      command = "cocycle";
      res = run_cocycle(d, r, chains, claims, boundaries, verdict, explicit_h,
                        eval_budget, enum_budget, hooks);
    } else if (cmd_partition->parsed()) {
      command = "partition " + mode;
      res = run_partition(mode, config_path, r, budget);
    } else if (cmd_trial->parsed()) {
      command = "trial";
      res = run_trial(d, r, class_size, trials, seed);
    } else if (cmd_reduce->parsed()) {
      command = "reduce";
      res = run_reduce(config_path, r, budget);
    }
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "invalid request: " << e.what() << "\n";
    return kUsageError;
  } catch (const GeneralPositionError& e) {
    err << "general position failure: " << e.what() << "\n";
    return kIdentityFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();

  json parameters = json::object();
  for (const CLI::App* sub : app.get_subcommands()) {
    for (const CLI::Option* opt : sub->get_options()) {
      if (opt->count() == 0) {
        continue;
      }
      std::string name = opt->get_name();
      while (!name.empty() && name.front() == '-') {
        name.erase(name.begin());
      }
      const auto& values = opt->results();
      if (values.empty()) {
        parameters[name] = true;
      } else if (values.size() == 1) {
        parameters[name] = values[0];
      } else {
        parameters[name] = values;
      }
    }
  }
  json report{{"command", command},
              {"parameters", parameters},
              {"result", res.result},
              {"elapsed_ms", elapsed},
              {"exact", true}};
  out << report.dump(2) << "\n";
  if (!json_only && !res.summary.empty()) {
    err << res.summary << "\n";
  }
  return res.exit_code;
}

}  // namespace ctv::cli

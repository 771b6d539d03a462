#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tracecert/pipeline.hpp"

namespace {

using tracecert::Error;
using tracecert::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw Error("invalid JSON in " + what + ": " + e.what());
  }
}

tracecert::GroupSpec load_group_spec(const std::string& group_path, const std::string& inline_json) {
  if (group_path.empty() == inline_json.empty())
    throw Error("exactly one of --group and --inline is required");
  json j = group_path.empty() ? parse_json_text(inline_json, "--inline")
                              : parse_json_text(read_file(group_path), group_path);
  return tracecert::group_spec_from_json(j);
}

// The certified payload is timestamp-free so identical configs yield
// identical bytes; the sidecar carries the volatile metadata instead.
void write_meta_sidecar(const std::string& out_path) {
  std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  json meta;
  meta["tool"] = "tracecert";
  meta["version"] = "0.1.0";
  meta["generated_at"] = stamp;
  write_file(out_path + ".meta.json", meta.dump(2) + "\n");
}

struct CommonGroupFlags {
  std::string group_path;
  std::string inline_json;
  std::uint64_t cap = tracecert::kDefaultGroupCap;

  void attach(CLI::App* cmd) {
    cmd->add_option("--group", group_path, "path to a GroupSpec JSON file");
    cmd->add_option("--inline", inline_json, "GroupSpec JSON given inline");
    cmd->add_option("--cap", cap, "maximum group order for closure and products")->capture_default_str();
  }
};

int run(int argc, char** argv) {
  CLI::App app{"certifier for trace-polynomial Jacobian non-vanishing and field-counting exponent bounds"};
  app.require_subcommand(1);

  // certify
  auto* certify = app.add_subcommand("certify", "run group -> cosets -> family -> certification, emit a bound report");
  CommonGroupFlags certify_group;
  certify_group.attach(certify);
  std::optional<std::uint32_t> opt_k, opt_t;
  std::uint64_t seed = 0;
  std::uint32_t trials = 20;
  std::string bound_str = "2147483648";
  std::string strategy_str = "greedy-rank";
  bool exact = false;
  std::uint32_t gate = tracecert::kDefaultSymbolicGate;
  std::string out_path;
  certify->add_option("--k", opt_k, "subset size parameter (default: smallest feasible)");
  certify->add_option("--t", opt_t, "head exponent parameter, at least 2 (default: 2)");
  certify->add_option("--seed", seed, "witness-draw seed")->required();
  certify->add_option("--trials", trials, "Schwartz-Zippel trials per subset")->capture_default_str();
  certify->add_option("--bound", bound_str, "witness coordinate bound (decimal)")->capture_default_str();
  certify->add_option("--strategy", strategy_str, "first-n | greedy-rank | random-restart")->capture_default_str();
  certify->add_flag("--exact", exact, "force the symbolic determinant on the chosen subset");
  certify->add_option("--gate", gate, "symbolic determinant size gate")->capture_default_str();
  certify->add_option("--out", out_path, "write the report JSON here (plus a .meta.json sidecar)");

  // verify
  auto* verify = app.add_subcommand("verify", "re-verify a certificate or report document");
  std::string cert_path;
  std::uint64_t verify_cap = tracecert::kDefaultGroupCap;
  verify->add_option("path", cert_path, "certificate or report JSON file")->required();
  verify->add_option("--cap", verify_cap, "maximum group order during reconstruction")->capture_default_str();

  // inspect
  auto* inspect = app.add_subcommand("inspect", "print group structure, pi tables, and feasibility");
  CommonGroupFlags inspect_group;
  inspect_group.attach(inspect);
  bool inspect_json = false;
  std::string inspect_out;
  inspect->add_flag("--json", inspect_json, "emit JSON instead of text");
  inspect->add_option("--out", inspect_out, "write the output here instead of stdout");

  // feasible
  auto* feasible = app.add_subcommand("feasible", "list feasible k for a group or for explicit (n, r)");
  CommonGroupFlags feasible_group;
  feasible_group.attach(feasible);
  std::optional<std::uint32_t> feas_n, feas_r;
  bool feasible_json = false;
  feasible->add_option("--n", feas_n, "degree n (bypasses the group)");
  feasible->add_option("--r", feas_r, "block size r (bypasses the group)");
  feasible->add_flag("--json", feasible_json, "emit JSON instead of text");

  CLI11_PARSE(app, argc, argv);

  if (certify->parsed()) {
    tracecert::RunConfig config;
    config.group = load_group_spec(certify_group.group_path, certify_group.inline_json);
    config.k = opt_k;
    config.t = opt_t;
    config.seed = seed;
    config.trials = trials;
    config.bound = tracecert::int_from_decimal(bound_str);
    config.strategy = tracecert::strategy_from_string(strategy_str);
    config.exact = exact;
    config.gate = gate;
    config.cap = certify_group.cap;
    tracecert::BoundReport rep = tracecert::run_certify(config);
    std::string payload = tracecert::report_to_json(rep).dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << payload;
      std::cerr << "status " << rep.status << "\n";
    } else {
      write_file(out_path, payload);
      write_meta_sidecar(out_path);
      std::cout << "status " << rep.status;
      if (rep.exponent_theorem) std::cout << "; exponent " << tracecert::to_decimal(*rep.exponent_theorem);
      std::cout << "; report written to " << out_path << "\n";
    }
    return rep.exit_code;
  }

  if (verify->parsed()) {
    json doc = parse_json_text(read_file(cert_path), cert_path);
    auto [ok, reason] = tracecert::verify_document(doc, verify_cap);
    if (ok) {
      std::cout << "verification passed\n";
      return 0;
    }
    std::cout << "verification failed: " << reason << "\n";
    return 1;
  }

  if (inspect->parsed()) {
    tracecert::GroupSpec spec = load_group_spec(inspect_group.group_path, inspect_group.inline_json);
    tracecert::InspectReport rep = tracecert::run_inspect(spec, inspect_group.cap);
    std::string payload = inspect_json ? tracecert::inspect_to_json(rep).dump(2) + "\n" : tracecert::inspect_to_text(rep);
    if (inspect_out.empty())
      std::cout << payload;
    else
      write_file(inspect_out, payload);
    return 0;
  }

  if (feasible->parsed()) {
    tracecert::FeasibilityResult feas;
    if (feas_n && feas_r) {
      feas = tracecert::feasibility(*feas_n, *feas_r);
    } else if (!feas_n && !feas_r) {
      tracecert::GroupSpec spec = load_group_spec(feasible_group.group_path, feasible_group.inline_json);
      tracecert::InspectReport rep = tracecert::run_inspect(spec, feasible_group.cap);
      feas = rep.feas;
    } else {
      throw Error("--n and --r must be given together");
    }
    if (feasible_json) {
      std::cout << tracecert::detail::feasibility_to_json(feas).dump(2) << "\n";
    } else {
      std::cout << "n = " << feas.n << "  r = " << feas.r << "\nfeasible k:";
      if (feas.feasible_pairs.empty()) std::cout << " none";
      for (const auto& [k, l] : feas.feasible_pairs) std::cout << " " << k << " (l = " << tracecert::to_decimal(l) << ")";
      std::cout << "\n";
    }
    return feas.feasible_pairs.empty() ? 2 : 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

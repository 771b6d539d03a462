#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracecert/bounds.hpp"
#include "tracecert/coset_system.hpp"
#include "tracecert/group_spec.hpp"
#include "tracecert/jacobian.hpp"
#include "tracecert/trace_family.hpp"

namespace tracecert {

struct RunConfig {
  GroupSpec group;
  std::optional<std::uint32_t> k;  // default: smallest feasible
  std::optional<std::uint32_t> t;  // default: 2
  std::uint64_t seed = 0;
  std::uint32_t trials = 20;
  Int bound = Int(1) << 31;
  Strategy strategy = Strategy::GreedyRank;
  bool exact = false;
  std::uint32_t gate = kDefaultSymbolicGate;
  std::uint64_t cap = kDefaultGroupCap;
  std::uint32_t attempt_budget = kDefaultAttemptBudget;
};

// Exit codes: 0 certified, 2 honest negative (not certified or infeasible),
// 1 malformed input (thrown as Error and mapped by the caller).
struct BoundReport {
  GroupSpec group;
  std::uint32_t n = 0, r = 0;
  FeasibilityResult feas;
  std::optional<std::uint32_t> k, t;
  std::optional<Int> l;
  std::string status;  // CERTIFIED | NOT_CERTIFIED | INFEASIBLE
  std::vector<std::string> ordering;
  std::optional<NonvanishingCertificate> certificate;
  std::vector<ExponentVector> chosen_vectors;
  std::optional<Int> exponent_theorem;  // k + t - 1
  std::optional<Rat> exponent_general;  // (1/n) sum of heights
  std::optional<Int> fiber_bound_z;
  Rat schmidt = 0;
  Rat malle = 0;
  std::uint64_t seed = 0;
  int exit_code = 2;
};

namespace detail {

inline json feasibility_to_json(const FeasibilityResult& f) {
  json out;
  out["n"] = f.n;
  out["r"] = f.r;
  json pairs = json::array();
  for (const auto& [k, l] : f.feasible_pairs) {
    json p;
    p["k"] = k;
    p["l"] = to_decimal(l);
    pairs.push_back(std::move(p));
  }
  out["feasible"] = std::move(pairs);
  if (f.chosen_k)
    out["chosen_k"] = *f.chosen_k;
  else
    out["chosen_k"] = nullptr;
  out["chosen_t"] = f.chosen_t;
  return out;
}

}  // namespace detail

// Self-contained certificate document: everything needed to rebuild the
// matrix and re-verify, with no external state.
inline json certificate_document(const GroupSpec& spec,
                                 std::uint32_t n,
                                 std::uint32_t r,
                                 std::uint32_t k,
                                 std::uint32_t t,
                                 const std::vector<std::string>& ordering,
                                 const NonvanishingCertificate& cert,
                                 std::uint64_t seed) {
  json doc;
  doc["group"] = group_spec_to_json(spec);
  doc["n"] = n;
  doc["r"] = r;
  doc["k"] = k;
  doc["t"] = t;
  doc["ordering"] = ordering;
  doc["chosen_indices"] = cert.chosen_indices;
  json witness = json::array();
  for (const Int& w : cert.witness) witness.push_back(to_decimal(w));
  doc["witness"] = std::move(witness);
  doc["det_value"] = to_decimal(cert.det_value);
  doc["seed"] = seed;
  doc["trials_used"] = cert.trials_used;
  doc["coordinate_bound"] = to_decimal(cert.coordinate_bound);
  doc["status"] = to_string(cert.status);
  if (cert.status == CertStatus::ProbablyZero)
    doc["failure_probability_bound"] = rat_to_string(cert.failure_probability_bound);
  return doc;
}

inline json report_to_json(const BoundReport& rep) {
  json out;
  out["group"] = group_spec_to_json(rep.group);
  out["n"] = rep.n;
  out["r"] = rep.r;
  out["feasibility"] = detail::feasibility_to_json(rep.feas);
  out["k"] = rep.k ? json(*rep.k) : json(nullptr);
  out["t"] = rep.t ? json(*rep.t) : json(nullptr);
  out["l"] = rep.l ? json(to_decimal(*rep.l)) : json(nullptr);
  out["status"] = rep.status;
  if (rep.certificate)
    out["certificate"] = certificate_document(rep.group, rep.n, rep.r, rep.k.value_or(0), rep.t.value_or(0),
                                              rep.ordering, *rep.certificate, rep.seed);
  else
    out["certificate"] = nullptr;
  out["exponent_theorem"] = rep.exponent_theorem ? json(to_decimal(*rep.exponent_theorem)) : json(nullptr);
  out["exponent_general"] = rep.exponent_general ? json(rat_to_string(*rep.exponent_general)) : json(nullptr);
  out["fiber_bound_z"] = rep.fiber_bound_z ? json(to_decimal(*rep.fiber_bound_z)) : json(nullptr);
  out["schmidt_exponent"] = rat_to_string(rep.schmidt);
  out["malle_a"] = rat_to_string(rep.malle);
  json cmp;
  cmp["exponent_theorem"] = out["exponent_theorem"];
  cmp["schmidt_exponent"] = out["schmidt_exponent"];
  cmp["malle_a"] = out["malle_a"];
  // Smallest of the listed exponents; the theorem bound participates only
  // when this run actually certified it.
  Rat best = rep.schmidt;
  std::string best_name = "schmidt_exponent";
  if (rep.status == "CERTIFIED" && rep.exponent_theorem && Rat(*rep.exponent_theorem) < best) {
    best = Rat(*rep.exponent_theorem);
    best_name = "exponent_theorem";
  }
  if (rep.malle < best) best_name = "malle_a";
  cmp["smallest"] = best_name;
  out["comparison"] = std::move(cmp);
  return out;
}

inline BoundReport run_certify(const RunConfig& config) {
  if (config.trials < 1) throw Error("trials must be at least 1");
  PermutationGroup g = build_group(config.group, config.cap);
  CosetSystem cs = coset_system(g);

  BoundReport rep;
  rep.group = config.group;
  rep.n = cs.n;
  rep.r = cs.r;
  rep.seed = config.seed;
  rep.schmidt = schmidt_exponent(cs.n);
  rep.malle = malle_constant(g);
  for (const Permutation& p : cs.reps) rep.ordering.push_back(p.cycle_string());

  const std::uint32_t t = config.t.value_or(2);
  if (t < 2) throw Error("t must be at least 2");
  rep.feas = feasibility(cs.n, cs.r, t);

  std::optional<std::uint32_t> k = config.k;
  if (k) {
    if (cs.r < 3 || *k < 2 || *k > cs.r - 1)
      throw Error("k = " + std::to_string(*k) + " out of range [2, r-1] with r = " + std::to_string(cs.r));
  } else {
    k = rep.feas.chosen_k;
  }
  if (!k) {
    rep.status = "INFEASIBLE";
    rep.exit_code = 2;
    return rep;
  }
  rep.k = k;
  rep.t = t;
  rep.l = binomial(cs.r - 1, *k - 1);
  if (*rep.l < cs.n) {
    // A forced k whose family is smaller than n cannot satisfy condition (1).
    rep.status = "INFEASIBLE";
    rep.exit_code = 2;
    return rep;
  }

  auto [vf, family] = build_family(cs, *k, t);
  SelectionResult sel =
      select_subset(family, config.strategy, config.seed, config.trials, config.bound, config.attempt_budget);
  if (config.exact) {
    // Force the symbolic-determinant path on the already chosen subset; this
    // can upgrade an inconclusive PROBABLY_ZERO to a definite EXACT_ZERO.
    std::vector<SparsePolynomial> fs;
    for (std::uint32_t idx : sel.chosen) fs.push_back(family.polys[idx - 1]);
    sel.certificate =
        certify_nonvanishing(jacobian(fs, sel.chosen), config.seed, config.trials, config.bound, true, config.gate);
    sel.certified = sel.certificate.status == CertStatus::CertifiedNonzero;
  }

  rep.certificate = sel.certificate;
  for (std::uint32_t idx : sel.chosen) rep.chosen_vectors.push_back(family.vectors[idx - 1]);
  rep.exponent_theorem = Int(*k) + t - 1;
  rep.exponent_general = exponent_general(rep.chosen_vectors, cs.n);
  rep.fiber_bound_z = fiber_bound(rep.chosen_vectors);
  rep.status = sel.certified ? "CERTIFIED" : "NOT_CERTIFIED";
  rep.exit_code = sel.certified ? 0 : 2;
  return rep;
}

// Re-verification from a self-contained document; returns success and a
// human-readable reason on failure.  Accepts either a bare certificate
// document or a full report (which embeds one).
inline std::pair<bool, std::string> verify_document(const json& input, std::uint64_t cap = kDefaultGroupCap) {
  try {
    const json& doc = input.contains("certificate") && input["certificate"].is_object() ? input["certificate"] : input;
    for (const char* key : {"group", "n", "r", "k", "t", "ordering", "chosen_indices", "witness", "det_value", "status"})
      if (!doc.contains(key)) return {false, std::string("certificate lacks field \"") + key + "\""};
    CertStatus status = cert_status_from_string(doc["status"].get<std::string>());
    if (status != CertStatus::CertifiedNonzero)
      return {false, "certificate status " + doc["status"].get<std::string>() + " cannot be re-verified"};

    GroupSpec spec = group_spec_from_json(doc["group"]);
    PermutationGroup g = build_group(spec, cap);
    const std::uint32_t n = doc["n"].get<std::uint32_t>();
    const std::uint32_t r = doc["r"].get<std::uint32_t>();
    if (g.degree() != n) return {false, "group degree does not match the recorded n"};

    std::vector<Permutation> ordering;
    for (const auto& item : doc["ordering"]) ordering.push_back(parse_permutation(item.get<std::string>(), n));
    CosetSystem cs = coset_system(g, ordering);
    if (cs.r != r) return {false, "coset system r does not match the recorded r"};

    const std::uint32_t k = doc["k"].get<std::uint32_t>();
    const std::uint32_t t = doc["t"].get<std::uint32_t>();
    auto [vf, family] = build_family(cs, k, t);

    std::vector<std::uint32_t> chosen;
    for (const auto& item : doc["chosen_indices"]) {
      std::uint32_t idx = item.get<std::uint32_t>();
      if (idx < 1 || idx > family.polys.size()) return {false, "chosen index " + std::to_string(idx) + " out of range"};
      chosen.push_back(idx);
    }
    if (chosen.size() != n) return {false, "chosen_indices must list exactly n indices"};

    std::vector<SparsePolynomial> fs;
    for (std::uint32_t idx : chosen) fs.push_back(family.polys[idx - 1]);
    JacobianMatrix m = jacobian(fs, chosen);

    NonvanishingCertificate cert;
    cert.status = status;
    cert.chosen_indices = chosen;
    for (const auto& item : doc["witness"]) cert.witness.push_back(int_from_decimal(item.get<std::string>()));
    cert.det_value = int_from_decimal(doc["det_value"].get<std::string>());
    if (!reverify(cert, m)) return {false, "witness evaluation does not reproduce det_value"};
    return {true, ""};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

struct InspectReport {
  GroupSpec group;
  std::uint32_t n = 0, r = 0;
  std::uint64_t group_order = 0, stabilizer_order = 0, normalizer_order = 0;
  std::vector<std::string> ordering;
  std::vector<std::vector<std::uint32_t>> pi_tables;  // pi_tables[j-1] = images of pi_j
  FeasibilityResult feas;
  Rat schmidt = 0;
  Rat malle = 0;
};

inline InspectReport run_inspect(const GroupSpec& spec, std::uint64_t cap = kDefaultGroupCap) {
  PermutationGroup g = build_group(spec, cap);
  CosetSystem cs = coset_system(g);
  InspectReport rep;
  rep.group = spec;
  rep.n = cs.n;
  rep.r = cs.r;
  rep.group_order = g.order();
  rep.stabilizer_order = cs.stabilizer_H.order();
  rep.normalizer_order = cs.normalizer_N.order();
  for (const Permutation& p : cs.reps) rep.ordering.push_back(p.cycle_string());
  for (const Permutation& p : cs.pi) rep.pi_tables.push_back(p.images());
  rep.feas = feasibility(cs.n, cs.r);
  rep.schmidt = schmidt_exponent(cs.n);
  rep.malle = malle_constant(g);
  return rep;
}

inline json inspect_to_json(const InspectReport& rep) {
  json out;
  out["group"] = group_spec_to_json(rep.group);
  out["n"] = rep.n;
  out["r"] = rep.r;
  out["group_order"] = rep.group_order;
  out["stabilizer_order"] = rep.stabilizer_order;
  out["normalizer_order"] = rep.normalizer_order;
  out["ordering"] = rep.ordering;
  json tables = json::array();
  for (const auto& t : rep.pi_tables) tables.push_back(t);
  out["pi_tables"] = std::move(tables);
  out["feasibility"] = detail::feasibility_to_json(rep.feas);
  out["schmidt_exponent"] = rat_to_string(rep.schmidt);
  out["malle_a"] = rat_to_string(rep.malle);
  return out;
}

// Two-row tables: top row the points, bottom row their images, columns
// aligned.
inline std::string inspect_to_text(const InspectReport& rep) {
  std::string out;
  out += "group: " + (rep.group.name.empty() ? std::string("(unnamed)") : rep.group.name) + "\n";
  out += "n = " + std::to_string(rep.n) + "  r = " + std::to_string(rep.r) + "  |G| = " +
         std::to_string(rep.group_order) + "  |H| = " + std::to_string(rep.stabilizer_order) +
         "  |N| = " + std::to_string(rep.normalizer_order) + "\n";
  out += "ordering:";
  for (const std::string& s : rep.ordering) out += " " + s;
  out += "\n";
  for (std::size_t j = 0; j < rep.pi_tables.size(); ++j) {
    std::vector<std::size_t> width(rep.n);
    for (std::uint32_t i = 1; i <= rep.n; ++i)
      width[i - 1] = std::max(std::to_string(i).size(), std::to_string(rep.pi_tables[j][i - 1]).size());
    std::string head = "pi_" + std::to_string(j + 1) + " = ";
    std::string pad(head.size(), ' ');
    out += head + "(";
    for (std::uint32_t i = 1; i <= rep.n; ++i) {
      std::string cell = std::to_string(i);
      out += " " + std::string(width[i - 1] - cell.size(), ' ') + cell;
    }
    out += " )\n" + pad + "(";
    for (std::uint32_t i = 1; i <= rep.n; ++i) {
      std::string cell = std::to_string(rep.pi_tables[j][i - 1]);
      out += " " + std::string(width[i - 1] - cell.size(), ' ') + cell;
    }
    out += " )\n";
  }
  out += "feasible k:";
  if (rep.feas.feasible_pairs.empty()) out += " none";
  for (const auto& [k, l] : rep.feas.feasible_pairs) out += " " + std::to_string(k) + " (l = " + to_decimal(l) + ")";
  out += "\nschmidt_exponent = " + rat_to_string(rep.schmidt) + "\n";
  out += "malle_a = " + rat_to_string(rep.malle) + "\n";
  return out;
}

}  // namespace tracecert

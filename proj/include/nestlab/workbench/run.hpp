#pragma once

// Command dispatch behind the nestlab CLI. Every command maps a WorkbenchDoc to a Verdict, whose
// JSON form has sorted keys and is therefore byte-for-byte reproducible.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nestlab/chaincalc.hpp"
#include "nestlab/error.hpp"
#include "nestlab/nest.hpp"
#include "nestlab/opspace.hpp"
#include "nestlab/workbench/document.hpp"
#include "nestlab/workbench/proptest.hpp"

namespace nestlab::workbench {

struct Verdict {
  std::string command;
  json result;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cases;

  json to_json() const {
    json j = {{"command", command}, {"result", result}};
    if (seed) j["seed"] = *seed;
    if (cases) j["cases"] = *cases;
    return j;
  }
};

struct RunOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 100;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "alg",          "gen-bimodule",   "support",        "ess-support",   "m-of-phi",
      "check-reflexive", "decompose",   "rank-one-check", "chain-validate", "chain-regularize",
      "chain-check",  "chain-predict",  "proptest"};
  return names;
}

inline std::string format_json(const Verdict& v) { return v.to_json().dump(2) + "\n"; }

/// Two-column text rendering; nested values are printed as compact JSON.
inline std::string format_table(const Verdict& v) {
  std::ostringstream out;
  out << "command  " << v.command << "\n";
  if (v.seed) out << "seed     " << *v.seed << "\n";
  if (v.cases) out << "cases    " << *v.cases << "\n";
  if (v.result.is_object() && v.result.contains("properties")) {
    for (const auto& p : v.result["properties"]) {
      out << (p["passed"].get<bool>() ? "PASS  " : "FAIL  ") << p["name"].get<std::string>() << " ("
          << p["cases"].get<std::size_t>() << " cases)\n";
      if (p.contains("counterexample")) out << "      " << p["counterexample"].get<std::string>() << "\n";
    }
    out << (v.result["passed"].get<bool>() ? "all properties pass" : "some properties fail") << "\n";
    return out.str();
  }
  if (!v.result.is_object()) {
    out << "result   " << v.result.dump() << "\n";
    return out.str();
  }
  std::size_t width = 0;
  for (const auto& [k, _] : v.result.items()) width = std::max(width, k.size());
  for (const auto& [k, val] : v.result.items())
    out << k << std::string(width - k.size() + 2, ' ') << (val.is_string() ? val.get<std::string>() : val.dump())
        << "\n";
  return out.str();
}

inline json error_result(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

namespace detail {

inline json dump_space(const OperatorSpace& s) {
  json basis = json::array();
  for (const auto& m : s.basis()) basis.push_back(dump_matrix(m));
  return {{"dimension", s.dim()}, {"basis", basis}};
}

inline json dump_values(const SupportFn& phi) { return phi.values(); }

inline json dump_abstract(const chain::AbstractSupportFn& f) { return dump_fn(fn_doc_of(f)); }

inline json dump_pair(const chain::SupportPair& p) {
  return {{"phi", dump_abstract(p.phi())}, {"psi", dump_abstract(p.psi())}};
}

inline const OperatorsDoc& operators(const WorkbenchDoc& d, std::initializer_list<const char*> roles) {
  if (!d.operators) throw ParseError("/: the command needs \"operators\"");
  for (const char* r : roles)
    if (d.operators->role == r) return *d.operators;
  std::string allowed;
  for (const char* r : roles) allowed += (allowed.empty() ? "" : ", ") + std::string(r);
  throw ParseError("/operators/role: expected one of " + allowed + ", got \"" + d.operators->role + "\"");
}

/// Generators are closed up to a bimodule; a basis must already span one.
inline OperatorSpace bimodule_of(const WorkbenchDoc& d, const Nest& nest) {
  const auto& ops = operators(d, {"generators", "basis"});
  if (ops.role == "generators") return generate_bimodule(nest, ops.matrices);
  OperatorSpace s = OperatorSpace::span_of(ops.matrices, nest.ambient_dim());
  require_bimodule(nest, s);
  return s;
}

inline const WorkbenchDoc& need_doc(const std::optional<WorkbenchDoc>& doc, const std::string& command) {
  if (!doc) throw ParseError("command \"" + command + "\" needs --doc");
  return *doc;
}

inline json run_proptest(const SuiteReport& r) {
  json props = json::array();
  for (const auto& p : r.properties) {
    json j = {{"name", p.name}, {"passed", p.passed}, {"cases", p.cases}};
    if (!p.passed) j["counterexample"] = p.counterexample;
    props.push_back(j);
  }
  return {{"suite", r.suite}, {"passed", r.passed()}, {"properties", props}};
}

}  // namespace detail

/// Runs one command. `argument` is the check/prediction kind or the proptest suite name.
/// Throws Error on validation failures and ParseError on malformed or incomplete input.
inline Verdict run(const std::string& command, const std::optional<std::string>& argument,
                   const std::optional<WorkbenchDoc>& doc, const RunOptions& opts = {}) {
  using namespace detail;
  Verdict v{command, json::object(), std::nullopt, std::nullopt};
  auto need_arg = [&](const char* what) -> const std::string& {
    if (!argument) throw ParseError("command \"" + command + "\" needs " + what);
    return *argument;
  };

  if (command == "proptest") {
    const std::string& suite = need_arg("a suite name");
    v.seed = opts.seed;
    v.cases = opts.cases;
    v.result = run_proptest(run_suite(suite, opts.seed, opts.cases));
    return v;
  }

  const bool known = std::find(command_names().begin(), command_names().end(), command) != command_names().end();
  if (!known) throw Error(Errc::unknown_command, "unknown command \"" + command + "\"");
  const WorkbenchDoc& d = need_doc(doc, command);

  if (command.rfind("chain-", 0) == 0) {
    const chain::AbstractNest c = chain_of(d);
    auto fn = [&] {
      if (!d.abstract_fn) throw ParseError("/: the command needs \"abstract_fn\"");
      return abstract_fn_of(*d.abstract_fn, c);
    };
    if (command == "chain-validate") {
      json labels = json::array();
      for (std::size_t i = 0; i < c.size(); ++i) labels.push_back(c.label(i));
      const auto pinf = chain::check_p_infinity(c);
      v.result = {{"nodes", c.size()},
                  {"labels", labels},
                  {"p_property", chain::check_p_property(c)},
                  {"p_infinity", pinf.holds},
                  {"finite_part_empty", pinf.finite_part_empty}};
    } else if (command == "chain-regularize") {
      const auto f = fn();
      v.result = {{"input", dump_abstract(f)}, {"regularized", dump_abstract(chain::lower_regularization(f))}};
    } else if (command == "chain-check") {
      const std::string& kind = need_arg("one of left-continuous, essential, pair, p, p-infinity");
      bool holds;
      if (kind == "left-continuous") holds = chain::check_left_continuous(fn());
      else if (kind == "essential") holds = chain::check_essential(fn());
      else if (kind == "pair") holds = chain::check_pair(pair_of(d, c));
      else if (kind == "p") holds = chain::check_p_property(c);
      else if (kind == "p-infinity") holds = chain::check_p_infinity(c).holds;
      else throw ParseError("unknown chain-check kind \"" + kind + "\"");
      v.result = {{"check", kind}, {"holds", holds}};
    } else {
      const std::string& kind = need_arg("one of me, max-pair, m0, m0-pair");
      if (kind == "me") v.result = {{"essential_support", dump_abstract(chain::predict_me_support(fn()))}};
      else if (kind == "max-pair") v.result = {{"pair", dump_pair(chain::predict_max_pair(pair_of(d, c)))}};
      else if (kind == "m0") v.result = {{"pair", dump_pair(chain::predict_m0(fn()))}};
      else if (kind == "m0-pair") v.result = {{"pair", dump_pair(chain::predict_m0_pair(pair_of(d, c)))}};
      else throw ParseError("unknown chain-predict kind \"" + kind + "\"");
      v.result["prediction"] = kind;
    }
    return v;
  }

  const Nest nest = nest_of(d);
  if (command == "alg") {
    v.result = dump_space(nest_algebra(nest));
  } else if (command == "gen-bimodule") {
    const auto& ops = operators(d, {"generators"});
    const OperatorSpace j = generate_bimodule(nest, ops.matrices);
    v.result = dump_space(j);
    v.result["support_fn"] = dump_values(support_of(nest, j));
  } else if (command == "support") {
    v.result = {{"support_fn", dump_values(support_of(nest, bimodule_of(d, nest)))}};
  } else if (command == "ess-support") {
    v.result = {{"essential_support_fn", dump_values(essential_support_of(nest, bimodule_of(d, nest)))}};
  } else if (command == "m-of-phi") {
    v.result = dump_space(m_of(nest, support_fn_of(d, nest)));
  } else if (command == "check-reflexive") {
    v.result = {{"reflexive", is_reflexive(nest, bimodule_of(d, nest))}};
  } else if (command == "decompose") {
    const auto& ops = operators(d, {"target"});
    if (ops.matrices.size() != 1) throw ParseError("/operators/matrices: a target holds exactly one matrix");
    const SupportFn phi = d.support_fn ? support_fn_of(d, nest) : SupportFn::identity(nest);
    json factors = json::array();
    for (const auto& f : decompose(nest, phi, ops.matrices.front()))
      factors.push_back({{"functional", dump_vector(f.functional)}, {"vector", dump_vector(f.vector)}});
    v.result = {{"rank", factors.size()}, {"factors", factors}};
  } else {  // rank-one-check
    if (!d.rank_one) throw ParseError("/: the command needs \"rank_one\"");
    const RankOne r{d.rank_one->functional, d.rank_one->vector};
    const RankOneVerdict rv = d.support_fn ? rank_one_in_m(nest, support_fn_of(d, nest), r) : rank_one_in_alg(nest, r);
    v.result = {{"member", rv.member}, {"witness", rv.witness ? json(*rv.witness) : json(nullptr)},
                {"space", d.support_fn ? "M(phi)" : "Alg"}};
  }
  return v;
}

}  // namespace nestlab::workbench

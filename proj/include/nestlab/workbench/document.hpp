#pragma once

// Workbench documents: the "nestlab/1" JSON format shared by the CLI and the fixture corpus.
//
//   {
//     "version": "nestlab/1",
//     "ambient_dim": 3,
//     "nest": [ [["1","0","0"]], [["1","0","0"],["0","1","0"]] ],
//     "operators": { "role": "generators" | "basis" | "target", "matrices": [ [[...],...], ... ] },
//     "support_fn": [0, 2, 2, 3],
//     "rank_one": { "functional": [...], "vector": [...] },
//     "chain": [ { "label": "0", "above": {"limit": "countable"} },
//                { "label": "A", "below": {"gap": 2}, "above": {} },
//                { "label": "X", "below": {"gap": "inf"} } ],
//     "abstract_fn": { "value": {"0": "0", ...}, "left_limit": {"A": "A"} },
//     "abstract_pair": { "phi": {...}, "psi": {...} }
//   }
//
// Rationals are always strings "p/q" or "p". Nest entries are subspace bases (lists of row
// vectors); support_fn indices refer to the validated chain, which always starts at {0} and ends
// at Q^n. Objects serialize with sorted keys, so output is canonical.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nestlab/chaincalc.hpp"
#include "nestlab/error.hpp"
#include "nestlab/nest.hpp"
#include "nestlab/opspace.hpp"
#include "nestlab/ratlin.hpp"

namespace nestlab::workbench {

using json = nlohmann::json;

inline constexpr const char* kVersion = "nestlab/1";

struct OperatorsDoc {
  std::string role;
  std::vector<Matrix> matrices;
  friend bool operator==(const OperatorsDoc&, const OperatorsDoc&) = default;
};

struct RankOneDoc {
  Vector functional;
  Vector vector;
  friend bool operator==(const RankOneDoc&, const RankOneDoc&) = default;
};

/// Abstract support function keyed by node labels.
struct FnDoc {
  std::map<std::string, std::string> value;
  std::map<std::string, std::string> left_limit;
  friend bool operator==(const FnDoc&, const FnDoc&) = default;
};

struct PairDoc {
  FnDoc phi;
  FnDoc psi;
  friend bool operator==(const PairDoc&, const PairDoc&) = default;
};

struct WorkbenchDoc {
  std::string version = kVersion;
  std::optional<std::size_t> ambient_dim;
  std::optional<std::vector<std::vector<Vector>>> nest;
  std::optional<OperatorsDoc> operators;
  std::optional<std::vector<std::size_t>> support_fn;
  std::optional<RankOneDoc> rank_one;
  std::optional<std::vector<chain::NodeSpec>> chain;
  std::optional<FnDoc> abstract_fn;
  std::optional<PairDoc> abstract_pair;

  friend bool operator==(const WorkbenchDoc&, const WorkbenchDoc&) = default;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

inline const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

inline void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) fail(path, "unexpected field \"" + it.key() + "\"");
  }
}

inline Rational parse_scalar(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "rationals are written as strings \"p/q\" or \"p\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

inline Vector parse_vector(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rationals");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_scalar(j[i], path + "/" + std::to_string(i)));
  return v;
}

inline Matrix parse_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(parse_vector(j[i], path + "/" + std::to_string(i)));
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() != rows[0].size()) fail(path + "/" + std::to_string(i), "ragged matrix row");
  return Matrix::from_rows(rows, rows[0].size());
}

inline std::size_t parse_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline std::map<std::string, std::string> parse_label_map(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object mapping labels to labels");
  std::map<std::string, std::string> m;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) fail(path + "/" + it.key(), "expected a node label");
    m[it.key()] = it.value().get<std::string>();
  }
  return m;
}

inline FnDoc parse_fn(const json& j, const std::string& path) {
  only_keys(j, {"value", "left_limit"}, path);
  FnDoc f;
  f.value = parse_label_map(field(j, "value", path), path + "/value");
  if (j.contains("left_limit")) f.left_limit = parse_label_map(j["left_limit"], path + "/left_limit");
  return f;
}

inline chain::Mark parse_mark(const json& j, const std::string& path) {
  if (j == "countable") return chain::Mark::countable;
  if (j == "uncountable") return chain::Mark::uncountable;
  fail(path, "expected \"countable\" or \"uncountable\"");
}

inline chain::NodeSpec parse_node(const json& j, const std::string& path) {
  only_keys(j, {"label", "below", "above"}, path);
  chain::NodeSpec n;
  const json& label = field(j, "label", path);
  if (!label.is_string()) fail(path + "/label", "expected a string");
  n.label = label.get<std::string>();
  if (j.contains("below")) {
    const json& b = j["below"];
    only_keys(b, {"gap", "limit"}, path + "/below");
    chain::NodeSpec::BelowSpec bs;
    if (b.contains("gap")) {
      const json& g = b["gap"];
      if (g == "inf")
        bs.gap = chain::Gap::inf();
      else if (g.is_number_unsigned())
        bs.gap = chain::Gap::of(g.get<std::size_t>());
      else
        fail(path + "/below/gap", "expected a non-negative integer or \"inf\"");
    }
    if (b.contains("limit")) bs.limit = parse_mark(b["limit"], path + "/below/limit");
    n.below = bs;
  }
  if (j.contains("above")) {
    const json& a = j["above"];
    only_keys(a, {"limit"}, path + "/above");
    chain::NodeSpec::AboveSpec as;
    if (a.contains("limit")) as.limit = parse_mark(a["limit"], path + "/above/limit");
    n.above = as;
  }
  return n;
}

inline json dump_scalar(const Rational& r) { return to_string(r); }

inline json dump_vector(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(dump_scalar(x));
  return a;
}

inline json dump_matrix(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(dump_vector(m.row_vector(i)));
  return a;
}

inline json dump_fn(const FnDoc& f) {
  json j = json::object();
  j["value"] = f.value;
  if (!f.left_limit.empty()) j["left_limit"] = f.left_limit;
  return j;
}

inline json dump_mark(chain::Mark m) { return m == chain::Mark::countable ? "countable" : "uncountable"; }

inline json dump_node(const chain::NodeSpec& n) {
  json j = json::object();
  j["label"] = n.label;
  if (n.below) {
    json b = json::object();
    if (n.below->gap) {
      if (n.below->gap->infinite)
        b["gap"] = "inf";
      else
        b["gap"] = n.below->gap->value;
    }
    if (n.below->limit) b["limit"] = dump_mark(*n.below->limit);
    j["below"] = b;
  }
  if (n.above) {
    json a = json::object();
    if (n.above->limit) a["limit"] = dump_mark(*n.above->limit);
    j["above"] = a;
  }
  return j;
}

}  // namespace detail

inline WorkbenchDoc from_json(const json& j) {
  using namespace detail;
  only_keys(j, {"version", "ambient_dim", "nest", "operators", "support_fn", "rank_one", "chain",
                "abstract_fn", "abstract_pair"},
            "");
  WorkbenchDoc d;
  const json& version = field(j, "version", "");
  if (version != kVersion) fail("/version", std::string("expected \"") + kVersion + "\"");
  if (j.contains("nest") && j.contains("chain"))
    fail("", "a document carries either a concrete nest or an abstract chain, not both");
  if (j.contains("ambient_dim")) d.ambient_dim = parse_count(j["ambient_dim"], "/ambient_dim");
  if (j.contains("nest")) {
    if (!d.ambient_dim) fail("/nest", "a nest needs \"ambient_dim\"");
    const json& n = j["nest"];
    if (!n.is_array()) fail("/nest", "expected an array of subspace bases");
    std::vector<std::vector<Vector>> bases;
    for (std::size_t i = 0; i < n.size(); ++i) {
      const std::string p = "/nest/" + std::to_string(i);
      if (!n[i].is_array()) fail(p, "expected an array of row vectors");
      std::vector<Vector> basis;
      for (std::size_t k = 0; k < n[i].size(); ++k) {
        Vector v = parse_vector(n[i][k], p + "/" + std::to_string(k));
        if (v.size() != *d.ambient_dim) fail(p + "/" + std::to_string(k), "vector length differs from ambient_dim");
        basis.push_back(std::move(v));
      }
      bases.push_back(std::move(basis));
    }
    d.nest = std::move(bases);
  }
  if (j.contains("operators")) {
    const json& o = j["operators"];
    only_keys(o, {"role", "matrices"}, "/operators");
    OperatorsDoc od;
    const json& role = field(o, "role", "/operators");
    if (role != "generators" && role != "basis" && role != "target")
      fail("/operators/role", "expected \"generators\", \"basis\" or \"target\"");
    od.role = role.get<std::string>();
    const json& ms = field(o, "matrices", "/operators");
    if (!ms.is_array()) fail("/operators/matrices", "expected an array of matrices");
    for (std::size_t i = 0; i < ms.size(); ++i)
      od.matrices.push_back(parse_matrix(ms[i], "/operators/matrices/" + std::to_string(i)));
    d.operators = std::move(od);
  }
  if (j.contains("support_fn")) {
    const json& s = j["support_fn"];
    if (!s.is_array()) fail("/support_fn", "expected an array of nest indices");
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < s.size(); ++i) v.push_back(parse_count(s[i], "/support_fn/" + std::to_string(i)));
    d.support_fn = std::move(v);
  }
  if (j.contains("rank_one")) {
    const json& r = j["rank_one"];
    only_keys(r, {"functional", "vector"}, "/rank_one");
    d.rank_one = RankOneDoc{parse_vector(field(r, "functional", "/rank_one"), "/rank_one/functional"),
                            parse_vector(field(r, "vector", "/rank_one"), "/rank_one/vector")};
  }
  if (j.contains("chain")) {
    const json& c = j["chain"];
    if (!c.is_array()) fail("/chain", "expected an array of nodes");
    std::vector<chain::NodeSpec> nodes;
    for (std::size_t i = 0; i < c.size(); ++i) nodes.push_back(parse_node(c[i], "/chain/" + std::to_string(i)));
    d.chain = std::move(nodes);
  }
  if (j.contains("abstract_fn")) d.abstract_fn = parse_fn(j["abstract_fn"], "/abstract_fn");
  if (j.contains("abstract_pair")) {
    const json& p = j["abstract_pair"];
    only_keys(p, {"phi", "psi"}, "/abstract_pair");
    d.abstract_pair = PairDoc{parse_fn(field(p, "phi", "/abstract_pair"), "/abstract_pair/phi"),
                              parse_fn(field(p, "psi", "/abstract_pair"), "/abstract_pair/psi")};
  }
  return d;
}

inline json to_json(const WorkbenchDoc& d) {
  using namespace detail;
  json j = json::object();
  j["version"] = d.version;
  if (d.ambient_dim) j["ambient_dim"] = *d.ambient_dim;
  if (d.nest) {
    json n = json::array();
    for (const auto& basis : *d.nest) {
      json b = json::array();
      for (const auto& v : basis) b.push_back(dump_vector(v));
      n.push_back(b);
    }
    j["nest"] = n;
  }
  if (d.operators) {
    json ms = json::array();
    for (const auto& m : d.operators->matrices) ms.push_back(dump_matrix(m));
    j["operators"] = {{"role", d.operators->role}, {"matrices", ms}};
  }
  if (d.support_fn) j["support_fn"] = *d.support_fn;
  if (d.rank_one)
    j["rank_one"] = {{"functional", dump_vector(d.rank_one->functional)}, {"vector", dump_vector(d.rank_one->vector)}};
  if (d.chain) {
    json c = json::array();
    for (const auto& n : *d.chain) c.push_back(dump_node(n));
    j["chain"] = c;
  }
  if (d.abstract_fn) j["abstract_fn"] = dump_fn(*d.abstract_fn);
  if (d.abstract_pair) j["abstract_pair"] = {{"phi", dump_fn(d.abstract_pair->phi)}, {"psi", dump_fn(d.abstract_pair->psi)}};
  return j;
}

/// Parses document text; syntax errors carry the line and column reported by the JSON reader.
inline WorkbenchDoc parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return from_json(j);
}

inline std::string serialize_document(const WorkbenchDoc& d) { return to_json(d).dump(2) + "\n"; }

// ---- conversion to validated objects -------------------------------------------------------

inline Nest nest_of(const WorkbenchDoc& d) {
  if (!d.nest || !d.ambient_dim) throw ParseError("/: the command needs \"ambient_dim\" and \"nest\"");
  std::vector<Subspace> subs;
  for (const auto& basis : *d.nest) subs.push_back(span(basis, *d.ambient_dim));
  return validate_nest(std::move(subs), *d.ambient_dim);
}

inline SupportFn support_fn_of(const WorkbenchDoc& d, const Nest& nest) {
  if (!d.support_fn) throw ParseError("/: the command needs \"support_fn\"");
  return SupportFn::make(nest, *d.support_fn);
}

inline chain::AbstractNest chain_of(const WorkbenchDoc& d) {
  if (!d.chain) throw ParseError("/: the command needs \"chain\"");
  return chain::validate_chain(*d.chain);
}

inline chain::AbstractSupportFn abstract_fn_of(const FnDoc& f, const chain::AbstractNest& c) {
  std::vector<std::size_t> values(c.size());
  std::vector<bool> seen(c.size(), false);
  for (const auto& [node, target] : f.value) {
    const std::size_t i = c.index_of(node);
    values[i] = c.index_of(target);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!seen[i]) throw Error(Errc::missing_annotation, "no value given for node \"" + c.label(i) + "\"");
  std::vector<std::optional<std::size_t>> ll(c.size());
  for (const auto& [node, target] : f.left_limit) {
    const std::size_t i = c.index_of(node);
    auto t = c.find(target);
    if (!t) throw Error(Errc::join_not_represented, "left_limit \"" + target + "\" is not a node of the chain");
    ll[i] = *t;
  }
  return chain::AbstractSupportFn::make(c, std::move(values), std::move(ll));
}

/// Inverse of abstract_fn_of; only left limits at limit nodes are written.
inline FnDoc fn_doc_of(const chain::AbstractSupportFn& f) {
  FnDoc d;
  const auto& c = f.chain();
  for (std::size_t i = 0; i < c.size(); ++i) {
    d.value[c.label(i)] = c.label(f.value(i));
    if (f.left_limit(i)) d.left_limit[c.label(i)] = c.label(*f.left_limit(i));
  }
  return d;
}

inline chain::SupportPair pair_of(const WorkbenchDoc& d, const chain::AbstractNest& c) {
  if (!d.abstract_pair) throw ParseError("/: the command needs \"abstract_pair\"");
  return chain::SupportPair::make(abstract_fn_of(d.abstract_pair->phi, c), abstract_fn_of(d.abstract_pair->psi, c));
}

}  // namespace nestlab::workbench

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nestlab/error.hpp"

namespace nestlab::chain {

/// Cofinality (from below) or coinitiality (from above) of a limit element.
enum class Mark { countable, uncountable };

/// Dimension of a jump N/N_-; positive, possibly infinite.
struct Gap {
  bool infinite = true;
  std::size_t value = 0;

  static Gap inf() { return {true, 0}; }
  static Gap of(std::size_t v) { return {false, v}; }
  bool is_finite() const { return !infinite; }

  friend bool operator==(const Gap&, const Gap&) = default;
};

/// How a node is reached from below: a jump N_- ⊂ N over the preceding node, or N = N_- as a limit.
struct Below {
  bool limit = false;
  Gap gap;          // meaningful when !limit
  Mark cofinality;  // meaningful when limit

  static Below attained(Gap g) { return {false, g, Mark::countable}; }
  static Below limit_of(Mark m) { return {true, Gap::inf(), m}; }

  friend bool operator==(const Below&, const Below&) = default;
};

/// How a node is left upward: attained (N ⊂ N_+) or N = N_+ as a limit.
struct Above {
  bool limit = false;
  Mark coinitiality = Mark::countable;  // meaningful when limit

  static Above attained() { return {false, Mark::countable}; }
  static Above limit_of(Mark m) { return {true, m}; }

  friend bool operator==(const Above&, const Above&) = default;
};

/// Unvalidated per-node annotations as a user writes them.
struct NodeSpec {
  struct BelowSpec {
    std::optional<Gap> gap;
    std::optional<Mark> limit;
    friend bool operator==(const BelowSpec&, const BelowSpec&) = default;
  };
  struct AboveSpec {
    std::optional<Mark> limit;
    friend bool operator==(const AboveSpec&, const AboveSpec&) = default;
  };

  std::string label;
  std::optional<BelowSpec> below;
  std::optional<AboveSpec> above;

  friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

struct Node {
  std::string label;
  std::optional<Below> below;  // absent exactly on "0"
  std::optional<Above> above;  // absent exactly on "X"

  friend bool operator==(const Node&, const Node&) = default;
};

/// A finite presentation of a (possibly infinite) nest: named nodes from "0" to "X" with the
/// order-theoretic behaviour of the chain just below and just above each node.
///
/// An attained node's immediate predecessor is the preceding node, so the preceding node must be
/// attained from above. A node whose predecessor is an unnamed element has to be presented as a
/// limit from below, which makes its quotient over every named node infinite.
class AbstractNest {
 public:
  static AbstractNest validate(const std::vector<NodeSpec>& spec);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t top() const noexcept { return nodes_.size() - 1; }
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::string& label(std::size_t i) const { return nodes_.at(i).label; }

  std::optional<std::size_t> find(const std::string& label) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].label == label) return i;
    return std::nullopt;
  }

  std::size_t index_of(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw Error(Errc::not_an_element, "chain has no node \"" + label + "\"");
  }

  bool limit_from_below(std::size_t i) const { return i > 0 && nodes_.at(i).below->limit; }
  bool limit_from_above(std::size_t i) const { return i < top() && nodes_.at(i).above->limit; }

  /// N ∈ E_f: reached by a jump of finite positive dimension.
  bool in_finite_part(std::size_t i) const {
    if (i == 0) return false;
    const Below& b = *nodes_.at(i).below;
    return !b.limit && b.gap.is_finite();
  }

  /// N = N_+ (the top node is its own successor by the empty-meet convention).
  bool equals_successor(std::size_t i) const { return i == top() || limit_from_above(i); }

  /// dim(N_j / N_i) for i ≤ j; nullopt stands for ∞.
  std::optional<std::size_t> quotient_dim(std::size_t i, std::size_t j) const {
    if (i > j || j >= nodes_.size())
      throw Error(Errc::containment_violation, "quotient needs node " + std::to_string(i) +
                                                   " below node " + std::to_string(j));
    std::size_t total = 0;
    for (std::size_t k = i + 1; k <= j; ++k) {
      const Below& b = *nodes_[k].below;
      if (b.limit || b.gap.infinite) return std::nullopt;
      total += b.gap.value;
    }
    return total;
  }

  friend bool operator==(const AbstractNest&, const AbstractNest&) = default;

 private:
  explicit AbstractNest(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  std::vector<Node> nodes_;
};

inline AbstractNest AbstractNest::validate(const std::vector<NodeSpec>& spec) {
  if (spec.size() < 2 || spec.front().label != "0" || spec.back().label != "X")
    throw Error(Errc::missing_endpoint, "a chain runs from node \"0\" to node \"X\"");
  const std::size_t last = spec.size() - 1;
  std::vector<Node> nodes(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const NodeSpec& s = spec[i];
    for (std::size_t k = 0; k < i; ++k)
      if (spec[k].label == s.label)
        throw Error(Errc::invalid_annotation, "duplicate node label \"" + s.label + "\"");
    nodes[i].label = s.label;
    if (i == 0) {
      if (s.below) throw Error(Errc::invalid_annotation, "node \"0\" has nothing below it");
    } else {
      if (!s.below) throw Error(Errc::missing_annotation, "node \"" + s.label + "\" needs a below annotation");
      const auto& b = *s.below;
      if (b.limit) {
        if (b.gap && b.gap->is_finite())
          throw Error(Errc::limit_with_finite_gap,
                      "node \"" + s.label + "\" is a limit from below but declares a finite gap");
        nodes[i].below = Below::limit_of(*b.limit);
      } else {
        if (!b.gap) throw Error(Errc::missing_annotation, "node \"" + s.label + "\" needs a gap or a limit mark");
        if (b.gap->is_finite() && b.gap->value == 0)
          throw Error(Errc::invalid_annotation, "node \"" + s.label + "\" declares a zero gap");
        nodes[i].below = Below::attained(*b.gap);
      }
    }
  }
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const NodeSpec& s = spec[i];
    if (i == last) {
      if (s.above) throw Error(Errc::invalid_annotation, "node \"X\" has nothing above it");
      continue;
    }
    const bool next_attained = !nodes[i + 1].below->limit;
    if (!s.above) {
      if (!next_attained)
        throw Error(Errc::missing_annotation, "node \"" + s.label + "\" needs an above annotation");
      nodes[i].above = Above::attained();
      continue;
    }
    if (s.above->limit) {
      if (next_attained)
        throw Error(Errc::adjacency_mismatch, "node \"" + s.label + "\" is a limit from above but \"" +
                                                  spec[i + 1].label + "\" jumps directly over it");
      nodes[i].above = Above::limit_of(*s.above->limit);
    } else {
      nodes[i].above = Above::attained();
    }
  }
  return AbstractNest(std::move(nodes));
}

inline AbstractNest validate_chain(const std::vector<NodeSpec>& spec) { return AbstractNest::validate(spec); }

/// p-property: every limit is approached by a countable strictly monotone sequence.
inline bool check_p_property(const AbstractNest& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.limit_from_below(i) && c.node(i).below->cofinality != Mark::countable) return false;
    if (c.limit_from_above(i) && c.node(i).above->coinitiality != Mark::countable) return false;
  }
  return true;
}

struct PInfinityReport {
  bool holds = false;          ///< every attained jump is infinite-dimensional
  bool finite_part_empty = false;  ///< E_f = ∅, which makes the essential-support axioms vacuous
};

inline PInfinityReport check_p_infinity(const AbstractNest& c) {
  PInfinityReport r{true, true};
  for (std::size_t i = 1; i < c.size(); ++i) {
    const Below& b = *c.node(i).below;
    if (!b.limit && b.gap.is_finite()) r.holds = false;
    if (c.in_finite_part(i)) r.finite_part_empty = false;
  }
  return r;
}

}  // namespace nestlab::chain

#pragma once

// Finite relations Δ ⊆ Λ×Λ and the set-level operations the group structure
// is built from: the axiom check, closed and normal subsets, closures, the
// bracket [Γ₁,Γ₂], the γ-series, isolated pairs and set differences.
//
// Node labels are opaque strings kept in a shared, lexicographically sorted
// node table. Pairs are stored as indices into that table, so sorting pairs by
// index is the same as sorting them lexicographically by label. Subsets of a
// relation share its node table.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mclain {

using NodeId = std::uint32_t;

struct Pair {
  NodeId src = 0;
  NodeId dst = 0;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

using LabeledPair = std::pair<std::string, std::string>;

class Relation {
 public:
  /// Empty node set, no pairs.
  Relation();

  /// Node set is `nodes` plus every label mentioned in `pairs`. Reflexive
  /// pairs are accepted here; they are reported by check_axioms.
  Relation(std::vector<std::string> nodes, const std::vector<LabeledPair>& pairs);

  static Relation from_pairs(const std::vector<LabeledPair>& pairs,
                             std::vector<std::string> extra_nodes = {});

  /// A relation over the same node table with the given pairs.
  Relation with_pairs(std::vector<Pair> pairs) const;
  Relation empty_subset() const { return with_pairs({}); }

  std::size_t node_count() const noexcept;
  const std::vector<std::string>& nodes() const noexcept;
  const std::string& label(NodeId id) const;
  std::optional<NodeId> find_node(std::string_view label) const;

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  bool contains(Pair p) const noexcept;
  bool contains(std::string_view i, std::string_view j) const;
  /// Index pair for two labels, if both nodes exist (membership not checked).
  std::optional<Pair> find_pair(std::string_view i, std::string_view j) const;

  /// Sorted k with (i,k) in the relation.
  std::span<const NodeId> successors(NodeId i) const;
  /// Sorted k with (k,j) in the relation.
  std::span<const NodeId> predecessors(NodeId j) const;

  bool shares_nodes_with(const Relation& other) const noexcept;
  /// Re-expresses this relation over `ambient`'s node table. Throws
  /// DomainError if a node is unknown there.
  Relation rebase(const Relation& ambient) const;
  bool is_subset_of(const Relation& other) const;

  std::string pair_string(Pair p) const;
  /// `{(i,j),(k,l)}` with pairs sorted.
  std::string to_string() const;
  std::vector<LabeledPair> labeled_pairs() const;

  friend bool operator==(const Relation& a, const Relation& b);

 private:
  struct NodeTable;

  Relation(std::shared_ptr<const NodeTable> nodes, std::vector<Pair> pairs);
  void index();

  std::shared_ptr<const NodeTable> nodes_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::vector<bool> member_;
};

/// Set algebra over a common node table (the second argument is rebased).
Relation set_union(const Relation& a, const Relation& b);
Relation set_intersection(const Relation& a, const Relation& b);
Relation set_minus(const Relation& a, const Relation& b);

/// Φ(Ω): every node touched by a pair of Ω.
std::vector<NodeId> touched_nodes(const Relation& omega);

// ---------------------------------------------------------------------------
// Axioms

struct A2Violation {
  enum class Side { IK, JL };

  std::string i, j, k, l;
  /// Which of (i,k) and (j,l) is in Δ; the other one is absent.
  Side present_side = Side::IK;

  /// True if the quadruple still witnesses a violation in `delta`.
  bool reproduces(const Relation& delta) const;
  std::string describe() const;
};

struct AxiomReport {
  std::vector<std::string> reflexive;  // nodes i with (i,i) in Δ
  std::vector<A2Violation> a2;

  bool valid() const noexcept { return reflexive.empty() && a2.empty(); }
  /// One line per violation.
  std::vector<std::string> describe() const;
};

/// Diagnoses (A1) and (A2). Walks composable paths i→j→k→l with (i,l) in Δ
/// instead of enumerating all quadruples.
AxiomReport check_axioms(const Relation& delta);

// ---------------------------------------------------------------------------
// Subsets of Δ. Each function rebases its subset arguments onto Δ's nodes
// and throws DomainError if they are not contained in Δ.

bool is_closed(const Relation& gamma, const Relation& delta);
bool is_normal(const Relation& gamma, const Relation& delta);

/// Smallest closed subset of Δ containing Ω.
Relation closure(const Relation& omega, const Relation& delta);
/// Smallest normal subset of Δ containing Ω.
Relation normal_closure(const Relation& omega, const Relation& delta);

/// All (i,k) in Δ with (i,j) ∈ Γ₁, (j,k) ∈ Γ₂ or (i,j) ∈ Γ₂, (j,k) ∈ Γ₁.
Relation bracket(const Relation& gamma1, const Relation& gamma2, const Relation& delta);

struct SubsetChain {
  enum class Direction { Descending, Ascending };

  Direction direction = Direction::Descending;
  std::vector<Relation> terms;
};

/// γ₁ = Γ, γ_{k+1} = [γ_k, Γ], down to and including the first empty term.
/// Throws DomainError if Γ is not closed or the series does not terminate.
SubsetChain gamma_series(const Relation& gamma, const Relation& delta);

/// Pairs (i,j) with no (j,k) ∈ Δ, (i,k) ∈ Δ and no (l,i) ∈ Δ, (l,j) ∈ Δ.
Relation isolated(const Relation& delta);

/// Δ∖Γ for normal Γ; throws DomainError otherwise.
Relation difference(const Relation& delta, const Relation& gamma);

/// Maximal: (i,j) ∈ Ω with no (j,k) ∈ Ω such that (i,k) ∈ Δ.
/// Minimal: (i,j) ∈ Ω with no (k,i) ∈ Ω such that (k,j) ∈ Δ.
/// Both throw DomainError on empty Ω.
bool has_maximal(const Relation& omega, const Relation& delta);
bool has_minimal(const Relation& omega, const Relation& delta);

// ---------------------------------------------------------------------------
// Builders

/// Strict total order on {1..m}.
Relation chain(int m);
/// Oriented n-gon on Z_n with its two-step diagonals; n >= 4.
Relation ngon(int n);

struct RandomRelation {
  Relation relation;
  std::size_t rejections = 0;
};

/// Rejection-samples loop-free digraphs on nodes "0".."node_count-1" (each
/// ordered pair kept with probability `density`) until the axioms hold.
/// Deterministic in `seed`. Throws DomainError when the budget runs out.
RandomRelation random_relation(std::uint64_t seed, int node_count, double density,
                               std::size_t max_attempts = 100000);

/// A random strict partial order with `deletions` random normal pieces
/// removed; valid by construction.
Relation random_poset_remnant(std::uint64_t seed, int node_count, double density,
                              int deletions);

}  // namespace mclain

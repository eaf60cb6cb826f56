#pragma once

// The group G(Δ) = {1 + x : x ∈ RΔ}.
//
// A GroupElement stores only x, as a sorted sparse map from pairs of Δ to
// nonzero coefficients; the identity is the empty map. Because zeros are never
// stored, two elements are equal exactly when their maps are equal.
//
// Products use the structure constants of RΔ: e(i,j)·e(j,l) = e(i,l) when
// (i,l) ∈ Δ, and every other product of basis elements vanishes.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mclain/relation.hpp"
#include "mclain/ring.hpp"

namespace mclain {

using Coefficients = std::map<Pair, RingValue>;

/// Ambient data shared by all elements of one group: the coefficient ring and
/// the relation Δ. Cheap to copy.
class Group {
 public:
  /// Throws DomainError if Δ violates (A1) or (A2).
  Group(RingSpec ring, Relation delta);

  /// Skips the axiom check. Only useful for diagnosing broken relations;
  /// inverse() detects the resulting non-nilpotent elements.
  static Group unchecked(RingSpec ring, Relation delta);

  const RingSpec& ring() const noexcept { return impl_->ring; }
  const Relation& relation() const noexcept { return impl_->delta; }

  friend bool operator==(const Group& a, const Group& b) {
    return a.impl_ == b.impl_ || (a.ring() == b.ring() && a.relation() == b.relation());
  }

 private:
  struct Impl {
    RingSpec ring;
    Relation delta;
  };
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

class GroupElement {
 public:
  explicit GroupElement(Group group) : group_(std::move(group)) {}

  /// Builds 1 + Σ c·e(p); drops zero coefficients. Throws DomainError if a
  /// key is outside Δ or a coefficient belongs to another ring.
  GroupElement(Group group, Coefficients coeffs);

  const Group& group() const noexcept { return group_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of e(p); zero when p is not in the support.
  RingValue coefficient(Pair p) const;
  RingValue coefficient(std::string_view i, std::string_view j) const;

  bool is_identity() const noexcept { return coeffs_.empty(); }

  /// `1` or `1 + c*e(i,j) + ...`, pairs in lexicographic order.
  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);

 private:
  Group group_;
  Coefficients coeffs_;
};

GroupElement identity(const Group& group);

/// x_{i,j}(a) = 1 + a·e(i,j). Throws DomainError if (i,j) ∉ Δ.
GroupElement generator(const Group& group, Pair p, const RingValue& a);
GroupElement generator(const Group& group, std::string_view i, std::string_view j,
                       const RingValue& a);

GroupElement multiply(const GroupElement& g, const GroupElement& h);

/// (1 + x)⁻¹ = Σ (−x)^k. Throws std::logic_error if x is not nilpotent within
/// |Φ(support)| + 1 steps, which certifies a broken ambient relation.
GroupElement inverse(const GroupElement& g);

/// [g, h] = g h g⁻¹ h⁻¹.
GroupElement commutator(const GroupElement& g, const GroupElement& h);

/// Ω(g − 1) as a subset of Δ.
Relation support(const GroupElement& g);
bool equals(const GroupElement& g, const GroupElement& h);

/// Least m >= 1 with (g − 1)^m = 0.
int nilpotency_index(const GroupElement& g);

/// Product of the RΔ parts x·y (no unit), zero terms pruned.
Coefficients ring_product(const Group& group, const Coefficients& x, const Coefficients& y);

// ---------------------------------------------------------------------------
// Generator words

/// One factor of a word. `Gen` carries labels and a coefficient; `Inv` and
/// `Comm` carry subwords; `One` is the empty factor.
struct WordToken {
  enum class Kind { Gen, Inv, Comm, One };

  Kind kind = Kind::One;
  std::string i, j;
  RingValue a;
  std::vector<WordToken> left;   // Inv body, Comm first argument
  std::vector<WordToken> right;  // Comm second argument

  static WordToken gen(std::string i, std::string j, RingValue a);
  static WordToken inv(std::vector<WordToken> body);
  static WordToken comm(std::vector<WordToken> u, std::vector<WordToken> v);
  static WordToken one();
};

/// A product of tokens; the empty word is the identity.
struct GeneratorWord {
  std::vector<WordToken> tokens;

  /// Prints in the expression grammar accepted by parse_word.
  std::string to_string() const;
};

/// Homomorphic evaluation. Throws DomainError for pairs outside Δ.
GroupElement eval_word(const Group& group, const GeneratorWord& word);

}  // namespace mclain

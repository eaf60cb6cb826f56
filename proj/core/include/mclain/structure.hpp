#pragma once

// Central series, the center and quotients of G(Δ), all described by subsets
// of Δ: γ_k(G(Δ)) = G(γ_k(Δ)), Z(G(Δ)) = G(isolated(Δ)), and for normal Γ
// the projection RΔ → R(Δ∖Γ) induces G(Δ)/G(Γ) ≅ G(Δ∖Γ).

#include <optional>
#include <string>
#include <vector>

#include "mclain/element.hpp"
#include "mclain/relation.hpp"
#include "mclain/ring.hpp"

namespace mclain {

/// γ_k/γ_{k+1} is the restricted direct product of `rank` copies of R⁺.
struct FactorReport {
  int level = 0;
  Relation support;
  std::size_t rank = 0;
  RingSpec ring;
};

struct LowerCentralSeries {
  SubsetChain chain;
  std::vector<FactorReport> factors;  // levels 1 .. class

  int nilpotency_class() const { return static_cast<int>(factors.size()); }
  std::vector<std::size_t> ranks() const;
};

/// Throws DomainError if Δ violates the axioms.
LowerCentralSeries lower_central_series(const Relation& delta,
                                        const RingSpec& ring = RingSpec::integers());

/// isolated(Δ); the center of G(Δ) is G of this set.
Relation center_support(const Relation& delta);

/// For a non-isolated p, a pair q such that x_p(1) and x_q(1) do not commute;
/// nullopt when p is isolated.
std::optional<Pair> noncentral_witness(const Relation& delta, Pair p);

/// ζ₀ = ∅, ζ_{k+1} = ζ_k ∪ isolated(Δ∖ζ_k), until nothing new is isolated.
/// Every step is cross-checked against the pairs that are central modulo ζ_k
/// and every term is checked to be normal.
SubsetChain upper_central_series(const Relation& delta);

/// The homomorphism G(Δ) → G(Δ∖Γ) for a normal Γ.
class QuotientMap {
 public:
  /// Throws DomainError if Γ is not a normal subset of Δ.
  QuotientMap(Group source, const Relation& gamma);

  const Group& source() const noexcept { return source_; }
  const Group& target() const noexcept { return target_; }
  const Relation& kernel_support() const noexcept { return gamma_; }

  /// Deletes the coefficients at pairs of Γ.
  GroupElement project(const GroupElement& g) const;
  /// True iff support(g) ⊆ Γ.
  bool in_kernel(const GroupElement& g) const;
  /// The element of the subset G(Δ∖Γ) ⊆ G(Δ) lying in g·G(Γ): the projected
  /// coefficients read back in G(Δ).
  GroupElement representative(const GroupElement& g) const;
  /// Lifts the projection by factoring it in G(Δ∖Γ) (filtration order) and
  /// multiplying the same generators inside G(Δ).
  GroupElement canonical_lift(const GroupElement& g) const;

 private:
  GroupElement require_coset_member(const GroupElement& r, const GroupElement& g) const;

  Group source_;
  Relation gamma_;
  Group target_;
};

GroupElement quotient_project(const GroupElement& g, const Relation& gamma);
GroupElement coset_representative(const GroupElement& g, const Relation& gamma);

/// `gamma k: {pairs} rank r` per term (the final empty term has rank 0).
std::string format_lower_series(const LowerCentralSeries& series);
/// `zeta k: {pairs}` per term.
std::string format_upper_series(const SubsetChain& series);

}  // namespace mclain

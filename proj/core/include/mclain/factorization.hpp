#pragma once

// Writing group elements as products of generators.
//
//  * word_factorization: any word in the x_{i,j}(a) that evaluates to g,
//    obtained by peeling off the coefficients outside [Γ,Γ] level by level.
//  * ordered_factorization: the unique coefficients a with
//    g = Π x_{i,j}(a_{i,j}) taken in a prescribed total order on a finite
//    closed Γ ⊇ Γ(g).

#include <cstddef>
#include <string>
#include <vector>

#include "mclain/element.hpp"
#include "mclain/relation.hpp"

namespace mclain {

/// Γ(g): the smallest closed subset of Δ whose group contains g.
Relation minimal_closed_support(const GroupElement& g);

/// A word w with eval_word(w) == g. The identity gives the empty word.
GeneratorWord word_factorization(const GroupElement& g);

/// Π x_{order[k]}(coefficients[k]) for k increasing.
GroupElement ordered_product(const Group& group, const std::vector<Pair>& order,
                             const std::vector<RingValue>& coefficients);

struct OrderedForm {
  Group group;
  std::vector<Pair> order;               // increasing
  std::vector<RingValue> coefficients;   // aligned with `order`, zeros kept

  RingValue coefficient(Pair p) const;
  GroupElement evaluate() const { return ordered_product(group, order, coefficients); }
  /// One `(i,j) ; c` line per pair, in order.
  std::string to_string() const;
};

/// Throws DomainError if `order` repeats a pair, leaves Δ, is not closed, or
/// does not cover the support of g.
OrderedForm ordered_factorization(const GroupElement& g, const std::vector<Pair>& order);

/// Pairs of a closed Γ sorted by γ-level (γ_k∖γ_{k+1} before γ_{k+1}), then
/// lexicographically.
std::vector<Pair> filtration_order(const Relation& gamma, const Relation& delta);

struct NgonObstruction {
  int n = 0;
  RingSpec ring;
  /// 1 + Σ e(i,i+1).
  GroupElement target;
  /// Every ordered product of edge generators reproduces its own edge
  /// coefficients, which forces all of them to be 1.
  bool edge_coefficients_forced = false;
  std::size_t orderings_checked = 0;
  std::size_t orderings_succeeding = 0;
  /// Orderings whose product of x_{i,i+1}(1) has a nonzero e(i,i+2) term.
  std::size_t orderings_with_diagonal_term = 0;
  GeneratorWord mixed_word;
  bool mixed_word_evaluates_to_target = false;

  bool obstruction_confirmed() const {
    return edge_coefficients_forced && orderings_succeeding == 0 &&
           orderings_with_diagonal_term == orderings_checked && mixed_word_evaluates_to_target;
  }
  std::string summary() const;
};

/// Enumerates all n! orders of the edge generators of ngon(n). 4 <= n <= 6.
NgonObstruction demonstrate_ngon_obstruction(int n, RingSpec ring = RingSpec::integers_mod(2));

}  // namespace mclain

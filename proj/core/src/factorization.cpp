#include "mclain/factorization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mclain/error.hpp"

namespace mclain {

Relation minimal_closed_support(const GroupElement& g) {
  return closure(support(g), g.group().relation());
}

GeneratorWord word_factorization(const GroupElement& g) {
  const Group& group = g.group();
  const Relation& delta = group.relation();
  GeneratorWord word;
  GroupElement residual = g;
  while (!residual.is_identity()) {
    const Relation gamma = minimal_closed_support(residual);
    const Relation derived = bracket(gamma, gamma, delta);
    // Left-multiplying by Π(1 − r e(p)) over the peeled pairs clears every
    // coefficient outside [Γ,Γ]. The strip is built in decreasing pair order,
    // so its inverse, which is emitted, lists the generators increasingly.
    std::vector<WordToken> peeled;
    GroupElement strip = identity(group);
    for (auto it = residual.coefficients().rbegin(); it != residual.coefficients().rend(); ++it) {
      const auto& [p, r] = *it;
      if (derived.contains(p)) continue;
      strip = strip * generator(group, p, -r);
      peeled.push_back(WordToken::gen(delta.label(p.src), delta.label(p.dst), r));
    }
    if (peeled.empty()) throw std::logic_error("word_factorization: nothing to peel");
    residual = strip * residual;
    if (!support(residual).is_subset_of(derived)) {
      throw std::logic_error("word_factorization: residual escaped [Γ,Γ]");
    }
    word.tokens.insert(word.tokens.end(), peeled.rbegin(), peeled.rend());
  }
  return word;
}

GroupElement ordered_product(const Group& group, const std::vector<Pair>& order,
                             const std::vector<RingValue>& coefficients) {
  if (order.size() != coefficients.size()) {
    throw DomainError("ordered_product: order and coefficient lists differ in length");
  }
  GroupElement acc = identity(group);
  for (std::size_t k = 0; k < order.size(); ++k) acc = acc * generator(group, order[k], coefficients[k]);
  return acc;
}

RingValue OrderedForm::coefficient(Pair p) const {
  auto it = std::find(order.begin(), order.end(), p);
  if (it == order.end()) return RingValue::zero(group.ring());
  return coefficients[static_cast<std::size_t>(it - order.begin())];
}

std::string OrderedForm::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < order.size(); ++k) {
    s += group.relation().pair_string(order[k]) + " ; " + coefficients[k].to_string() + "\n";
  }
  return s;
}

namespace {

// level[p] = k for p ∈ γ_k∖γ_{k+1}.
std::map<Pair, std::size_t> gamma_levels(const SubsetChain& series) {
  std::map<Pair, std::size_t> level;
  for (std::size_t k = 0; k < series.terms.size(); ++k) {
    for (const Pair& p : series.terms[k].pairs()) level[p] = k + 1;
  }
  return level;
}

}  // namespace

std::vector<Pair> filtration_order(const Relation& gamma, const Relation& delta) {
  const SubsetChain series = gamma_series(gamma, delta);
  const auto level = gamma_levels(series);
  std::vector<Pair> order(series.terms.front().pairs());
  std::stable_sort(order.begin(), order.end(),
                   [&](Pair a, Pair b) { return level.at(a) < level.at(b); });
  return order;
}

OrderedForm ordered_factorization(const GroupElement& g, const std::vector<Pair>& order) {
  const Group& group = g.group();
  const Relation& delta = group.relation();
  for (const Pair& p : order) {
    if (!delta.contains(p)) {
      throw DomainError("order lists " + delta.pair_string(p) + " which is not in the relation");
    }
  }
  const Relation gamma = delta.with_pairs(order);
  if (gamma.size() != order.size()) throw DomainError("order lists a pair more than once");
  if (!is_closed(gamma, delta)) {
    throw DomainError("order domain " + gamma.to_string() + " is not closed");
  }
  if (!support(g).is_subset_of(gamma)) {
    throw DomainError("order domain " + gamma.to_string() + " does not contain the support " +
                      support(g).to_string());
  }

  const SubsetChain series = gamma_series(gamma, delta);
  const auto level = gamma_levels(series);
  std::map<Pair, std::size_t> slot;
  for (std::size_t k = 0; k < order.size(); ++k) slot[order[k]] = k;

  OrderedForm form{group, order, std::vector<RingValue>(order.size(), RingValue::zero(group.ring()))};
  // Modulo γ_{k+1} the level-k generators are central, so correcting each
  // level-k coefficient by the residual's coefficient fixes the product
  // modulo γ_{k+1} regardless of where the pair sits in the order.
  for (std::size_t k = 1; k + 1 <= series.terms.size(); ++k) {
    const GroupElement residual = inverse(form.evaluate()) * g;
    if (!support(residual).is_subset_of(series.terms[k - 1])) {
      throw std::logic_error("ordered_factorization: residual left γ_" + std::to_string(k));
    }
    for (const auto& [p, c] : residual.coefficients()) {
      if (level.at(p) == k) form.coefficients[slot.at(p)] += c;
    }
  }
  if (!(form.evaluate() == g)) throw std::logic_error("ordered_factorization: sweep did not converge");
  return form;
}

std::string NgonObstruction::summary() const {
  return std::to_string(orderings_checked) + " orderings checked, " +
         std::to_string(orderings_succeeding) + " succeed";
}

NgonObstruction demonstrate_ngon_obstruction(int n, RingSpec ring) {
  if (n < 4 || n > 6) throw DomainError("demonstrate_ngon_obstruction: n must be in [4, 6]");
  const Group group(ring, ngon(n));
  const Relation& delta = group.relation();

  std::vector<Pair> edges;
  Coefficients target_coeffs;
  for (int i = 0; i < n; ++i) {
    const Pair e = *delta.find_pair(std::to_string(i), std::to_string((i + 1) % n));
    edges.push_back(e);
    target_coeffs.emplace(e, RingValue::one(ring));
  }

  NgonObstruction report{.n = n,
                         .ring = ring,
                         .target = GroupElement(group, target_coeffs),
                         .edge_coefficients_forced = true,
                         .orderings_checked = 0,
                         .orderings_succeeding = 0,
                         .orderings_with_diagonal_term = 0,
                         .mixed_word = {},
                         .mixed_word_evaluates_to_target = false};

  // Distinct probe values; in every order the edge coefficients of the product
  // must come out as the probe values themselves.
  std::vector<RingValue> probe;
  for (int i = 0; i < n; ++i) probe.push_back(RingValue::from_integer(ring, i + 2));
  const std::vector<RingValue> ones(n, RingValue::one(ring));

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Pair> order;
    std::vector<RingValue> probe_order, one_order;
    for (int idx : perm) {
      order.push_back(edges[idx]);
      probe_order.push_back(probe[idx]);
      one_order.push_back(ones[idx]);
    }
    const GroupElement probed = ordered_product(group, order, probe_order);
    for (int i = 0; i < n; ++i) {
      if (!(probed.coefficient(edges[i]) == probe[i])) report.edge_coefficients_forced = false;
    }
    ++report.orderings_checked;
    const GroupElement product = ordered_product(group, order, one_order);
    if (product == report.target) ++report.orderings_succeeding;
    const bool has_diagonal = std::any_of(product.coefficients().begin(), product.coefficients().end(),
                                          [&](const auto& kv) { return !target_coeffs.contains(kv.first); });
    if (has_diagonal) ++report.orderings_with_diagonal_term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  report.mixed_word = word_factorization(report.target);
  report.mixed_word_evaluates_to_target = eval_word(group, report.mixed_word) == report.target;
  return report;
}

}  // namespace mclain

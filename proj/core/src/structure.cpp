#include "mclain/structure.hpp"

#include <stdexcept>

#include "mclain/error.hpp"
#include "mclain/factorization.hpp"

namespace mclain {

namespace {

void require_valid(const Relation& delta, const char* what) {
  const AxiomReport report = check_axioms(delta);
  if (!report.valid()) {
    throw DomainError(std::string(what) + ": relation violates the axioms: " + report.describe().front());
  }
}

}  // namespace

std::vector<std::size_t> LowerCentralSeries::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& f : factors) r.push_back(f.rank);
  return r;
}

LowerCentralSeries lower_central_series(const Relation& delta, const RingSpec& ring) {
  require_valid(delta, "lower_central_series");
  LowerCentralSeries series{gamma_series(delta, delta), {}};
  const auto& terms = series.chain.terms;
  for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
    Relation layer = set_minus(terms[k], terms[k + 1]);
    const std::size_t rank = layer.size();
    series.factors.push_back({static_cast<int>(k + 1), std::move(layer), rank, ring});
  }
  return series;
}

Relation center_support(const Relation& delta) {
  require_valid(delta, "center_support");
  return isolated(delta);
}

std::optional<Pair> noncentral_witness(const Relation& delta, Pair p) {
  for (NodeId k : delta.successors(p.dst)) {
    if (delta.contains(Pair{p.src, k})) return Pair{p.dst, k};
  }
  for (NodeId l : delta.predecessors(p.src)) {
    if (delta.contains(Pair{l, p.dst})) return Pair{l, p.src};
  }
  return std::nullopt;
}

SubsetChain upper_central_series(const Relation& delta) {
  require_valid(delta, "upper_central_series");
  SubsetChain chain{SubsetChain::Direction::Ascending, {delta.empty_subset()}};
  while (chain.terms.back().size() < delta.size()) {
    const Relation& zeta = chain.terms.back();
    const Relation fresh = isolated(difference(delta, zeta)).rebase(delta);
    if (fresh.empty()) break;
    Relation next = set_union(zeta, fresh);

    // Independent description of the next term: the pairs p with
    // [{p}, Δ] ⊆ ζ_k, i.e. generators central modulo G(ζ_k).
    std::vector<Pair> central;
    for (const Pair& p : delta.pairs()) {
      if (bracket(delta.with_pairs({p}), delta, delta).is_subset_of(zeta)) central.push_back(p);
    }
    if (!(delta.with_pairs(std::move(central)) == next)) {
      throw std::logic_error("upper_central_series: quotient center disagrees at step " +
                             std::to_string(chain.terms.size()));
    }
    if (!is_normal(next, delta)) throw std::logic_error("upper_central_series: term is not normal");
    chain.terms.push_back(std::move(next));
  }
  return chain;
}

// ---------------------------------------------------------------------------

QuotientMap::QuotientMap(Group source, const Relation& gamma)
    : source_(std::move(source)),
      gamma_(gamma.rebase(source_.relation())),
      target_(source_.ring(), difference(source_.relation(), gamma_)) {}

GroupElement QuotientMap::project(const GroupElement& g) const {
  if (!(g.group() == source_)) throw DomainError("quotient: element is not in the source group");
  Coefficients kept;
  for (const auto& [p, c] : g.coefficients()) {
    if (!gamma_.contains(p)) kept.emplace(p, c);
  }
  // Δ∖Γ keeps Δ's node table, so pair indices carry over unchanged.
  return GroupElement(target_, std::move(kept));
}

bool QuotientMap::in_kernel(const GroupElement& g) const { return support(g).is_subset_of(gamma_); }

GroupElement QuotientMap::require_coset_member(const GroupElement& r, const GroupElement& g) const {
  if (!in_kernel(inverse(r) * g)) {
    throw std::logic_error("quotient: representative " + r.to_string() + " is not in the coset of " +
                           g.to_string());
  }
  return r;
}

GroupElement QuotientMap::representative(const GroupElement& g) const {
  const GroupElement q = project(g);
  return require_coset_member(GroupElement(source_, q.coefficients()), g);
}

GroupElement QuotientMap::canonical_lift(const GroupElement& g) const {
  const GroupElement q = project(g);
  const OrderedForm form =
      ordered_factorization(q, filtration_order(minimal_closed_support(q), target_.relation()));
  return require_coset_member(ordered_product(source_, form.order, form.coefficients), g);
}

GroupElement quotient_project(const GroupElement& g, const Relation& gamma) {
  return QuotientMap(g.group(), gamma).project(g);
}

GroupElement coset_representative(const GroupElement& g, const Relation& gamma) {
  return QuotientMap(g.group(), gamma).representative(g);
}

std::string format_lower_series(const LowerCentralSeries& series) {
  std::string s;
  const auto& terms = series.chain.terms;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::size_t rank = k < series.factors.size() ? series.factors[k].rank : 0;
    s += "gamma " + std::to_string(k + 1) + ": " + terms[k].to_string() + " rank " +
         std::to_string(rank) + "\n";
  }
  return s;
}

std::string format_upper_series(const SubsetChain& series) {
  std::string s;
  for (std::size_t k = 0; k < series.terms.size(); ++k) {
    s += "zeta " + std::to_string(k) + ": " + series.terms[k].to_string() + "\n";
  }
  return s;
}

}  // namespace mclain

#include "mclain/relation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mclain/error.hpp"

namespace mclain {

struct Relation::NodeTable {
  std::vector<std::string> labels;  // sorted, unique

  std::optional<NodeId> find(std::string_view label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == labels.end() || *it != label) return std::nullopt;
    return static_cast<NodeId>(it - labels.begin());
  }
};

Relation::Relation() : nodes_(std::make_shared<NodeTable>()) {}

Relation::Relation(std::vector<std::string> nodes, const std::vector<LabeledPair>& pairs) {
  for (const auto& [i, j] : pairs) {
    nodes.push_back(i);
    nodes.push_back(j);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  auto table = std::make_shared<NodeTable>();
  table->labels = std::move(nodes);
  for (const auto& [i, j] : pairs) pairs_.push_back({*table->find(i), *table->find(j)});
  nodes_ = std::move(table);
  index();
}

Relation::Relation(std::shared_ptr<const NodeTable> nodes, std::vector<Pair> pairs)
    : nodes_(std::move(nodes)), pairs_(std::move(pairs)) {
  index();
}

Relation Relation::from_pairs(const std::vector<LabeledPair>& pairs,
                              std::vector<std::string> extra_nodes) {
  return Relation(std::move(extra_nodes), pairs);
}

void Relation::index() {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  const std::size_t n = nodes_->labels.size();
  out_.assign(n, {});
  in_.assign(n, {});
  member_.assign(n * n, false);
  for (const Pair& p : pairs_) {
    if (p.src >= n || p.dst >= n) throw std::out_of_range("pair refers to an unknown node");
    out_[p.src].push_back(p.dst);
    in_[p.dst].push_back(p.src);
    member_[static_cast<std::size_t>(p.src) * n + p.dst] = true;
  }
  for (auto& v : in_) std::sort(v.begin(), v.end());
}

Relation Relation::with_pairs(std::vector<Pair> pairs) const { return Relation(nodes_, std::move(pairs)); }

std::size_t Relation::node_count() const noexcept { return nodes_->labels.size(); }

const std::vector<std::string>& Relation::nodes() const noexcept { return nodes_->labels; }

const std::string& Relation::label(NodeId id) const { return nodes_->labels.at(id); }

std::optional<NodeId> Relation::find_node(std::string_view label) const { return nodes_->find(label); }

bool Relation::contains(Pair p) const noexcept {
  const std::size_t n = node_count();
  return p.src < n && p.dst < n && member_[static_cast<std::size_t>(p.src) * n + p.dst];
}

bool Relation::contains(std::string_view i, std::string_view j) const {
  auto p = find_pair(i, j);
  return p && contains(*p);
}

std::optional<Pair> Relation::find_pair(std::string_view i, std::string_view j) const {
  auto a = find_node(i);
  auto b = find_node(j);
  if (!a || !b) return std::nullopt;
  return Pair{*a, *b};
}

std::span<const NodeId> Relation::successors(NodeId i) const { return out_.at(i); }

std::span<const NodeId> Relation::predecessors(NodeId j) const { return in_.at(j); }

bool Relation::shares_nodes_with(const Relation& other) const noexcept {
  return nodes_ == other.nodes_ || nodes_->labels == other.nodes_->labels;
}

Relation Relation::rebase(const Relation& ambient) const {
  if (shares_nodes_with(ambient)) return ambient.with_pairs(pairs_);
  std::vector<Pair> mapped;
  mapped.reserve(pairs_.size());
  for (const Pair& p : pairs_) {
    auto a = ambient.find_node(label(p.src));
    auto b = ambient.find_node(label(p.dst));
    if (!a || !b) {
      throw DomainError("pair " + pair_string(p) + " uses a node outside the ambient relation");
    }
    mapped.push_back({*a, *b});
  }
  return ambient.with_pairs(std::move(mapped));
}

bool Relation::is_subset_of(const Relation& other) const {
  for (const Pair& p : pairs_) {
    if (!other.contains(label(p.src), label(p.dst))) return false;
  }
  return true;
}

std::string Relation::pair_string(Pair p) const {
  return "(" + label(p.src) + "," + label(p.dst) + ")";
}

std::string Relation::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if (k) s += ",";
    s += pair_string(pairs_[k]);
  }
  return s + "}";
}

std::vector<LabeledPair> Relation::labeled_pairs() const {
  std::vector<LabeledPair> out;
  out.reserve(pairs_.size());
  for (const Pair& p : pairs_) out.emplace_back(label(p.src), label(p.dst));
  return out;
}

bool operator==(const Relation& a, const Relation& b) {
  return a.shares_nodes_with(b) && a.pairs_ == b.pairs_;
}

// ---------------------------------------------------------------------------

Relation set_union(const Relation& a, const Relation& b) {
  const Relation rb = b.rebase(a);
  std::vector<Pair> out;
  std::set_union(a.pairs().begin(), a.pairs().end(), rb.pairs().begin(), rb.pairs().end(),
                 std::back_inserter(out));
  return a.with_pairs(std::move(out));
}

Relation set_intersection(const Relation& a, const Relation& b) {
  const Relation rb = b.rebase(a);
  std::vector<Pair> out;
  std::set_intersection(a.pairs().begin(), a.pairs().end(), rb.pairs().begin(), rb.pairs().end(),
                        std::back_inserter(out));
  return a.with_pairs(std::move(out));
}

Relation set_minus(const Relation& a, const Relation& b) {
  std::vector<Pair> out;
  for (const Pair& p : a.pairs()) {
    if (!b.contains(a.label(p.src), a.label(p.dst))) out.push_back(p);
  }
  return a.with_pairs(std::move(out));
}

std::vector<NodeId> touched_nodes(const Relation& omega) {
  std::vector<NodeId> nodes;
  for (const Pair& p : omega.pairs()) {
    nodes.push_back(p.src);
    nodes.push_back(p.dst);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

// ---------------------------------------------------------------------------

bool A2Violation::reproduces(const Relation& delta) const {
  const bool path = delta.contains(i, j) && delta.contains(j, k) && delta.contains(k, l) &&
                    delta.contains(i, l);
  return path && delta.contains(i, k) != delta.contains(j, l) &&
         delta.contains(i, k) == (present_side == Side::IK);
}

std::string A2Violation::describe() const {
  const std::string ik = "(" + i + "," + k + ")";
  const std::string jl = "(" + j + "," + l + ")";
  const bool ik_present = present_side == Side::IK;
  return "A2 violation at (" + i + "," + j + "," + k + "," + l + "): " + (ik_present ? ik : jl) +
         " present, " + (ik_present ? jl : ik) + " absent";
}

std::vector<std::string> AxiomReport::describe() const {
  std::vector<std::string> lines;
  for (const auto& node : reflexive) lines.push_back("A1 violation: reflexive pair (" + node + "," + node + ")");
  for (const auto& v : a2) lines.push_back(v.describe());
  return lines;
}

AxiomReport check_axioms(const Relation& delta) {
  AxiomReport report;
  for (const Pair& p : delta.pairs()) {
    if (p.src == p.dst) report.reflexive.push_back(delta.label(p.src));
  }
  for (const Pair& ij : delta.pairs()) {
    const NodeId i = ij.src, j = ij.dst;
    for (NodeId k : delta.successors(j)) {
      for (NodeId l : delta.successors(k)) {
        if (!delta.contains(Pair{i, l})) continue;
        const bool ik = delta.contains(Pair{i, k});
        const bool jl = delta.contains(Pair{j, l});
        if (ik == jl) continue;
        report.a2.push_back({delta.label(i), delta.label(j), delta.label(k), delta.label(l),
                             ik ? A2Violation::Side::IK : A2Violation::Side::JL});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

Relation subset_of(const Relation& gamma, const Relation& delta, const char* what) {
  Relation g = gamma.rebase(delta);
  for (const Pair& p : g.pairs()) {
    if (!delta.contains(p)) {
      throw DomainError(std::string(what) + ": pair " + g.pair_string(p) +
                        " is not in the ambient relation");
    }
  }
  return g;
}

// Worklist saturation. `grow(p, add)` is called once for every pair that
// enters the set and may add further pairs.
template <typename Grow>
Relation saturate(const Relation& seed, const Relation& delta, Grow grow) {
  const std::size_t n = delta.node_count();
  std::vector<bool> member(n * n, false);
  std::vector<std::vector<NodeId>> out(n), in(n);
  std::vector<Pair> all, work;
  auto add = [&](Pair p) {
    const std::size_t bit = static_cast<std::size_t>(p.src) * n + p.dst;
    if (member[bit]) return;
    member[bit] = true;
    out[p.src].push_back(p.dst);
    in[p.dst].push_back(p.src);
    all.push_back(p);
    work.push_back(p);
  };
  auto has = [&](Pair p) { return static_cast<bool>(member[static_cast<std::size_t>(p.src) * n + p.dst]); };
  for (const Pair& p : seed.pairs()) add(p);
  while (!work.empty()) {
    const Pair p = work.back();
    work.pop_back();
    grow(p, add, has, out, in);
  }
  return delta.with_pairs(std::move(all));
}

}  // namespace

bool is_closed(const Relation& gamma, const Relation& delta) {
  const Relation g = subset_of(gamma, delta, "is_closed");
  for (const Pair& p : g.pairs()) {
    for (NodeId k : g.successors(p.dst)) {
      const Pair ik{p.src, k};
      if (delta.contains(ik) && !g.contains(ik)) return false;
    }
  }
  return true;
}

bool is_normal(const Relation& gamma, const Relation& delta) {
  const Relation g = subset_of(gamma, delta, "is_normal");
  for (const Pair& p : g.pairs()) {
    for (NodeId k : delta.successors(p.dst)) {
      const Pair ik{p.src, k};
      if (delta.contains(ik) && !g.contains(ik)) return false;
    }
    for (NodeId k : delta.predecessors(p.src)) {
      const Pair kj{k, p.dst};
      if (delta.contains(kj) && !g.contains(kj)) return false;
    }
  }
  if (!is_closed(g, delta)) throw std::logic_error("normal subset failed to be closed");
  return true;
}

Relation closure(const Relation& omega, const Relation& delta) {
  const Relation seed = subset_of(omega, delta, "closure");
  return saturate(seed, delta, [&](Pair p, auto& add, auto& has, auto& out, auto& in) {
    // p as the left factor, then as the right factor.
    const std::vector<NodeId> right = out[p.dst];
    for (NodeId k : right) {
      if (delta.contains(Pair{p.src, k})) add(Pair{p.src, k});
    }
    const std::vector<NodeId> left = in[p.src];
    for (NodeId h : left) {
      if (delta.contains(Pair{h, p.dst})) add(Pair{h, p.dst});
    }
    (void)has;
  });
}

Relation normal_closure(const Relation& omega, const Relation& delta) {
  const Relation seed = subset_of(omega, delta, "normal_closure");
  return saturate(seed, delta, [&](Pair p, auto& add, auto&, auto&, auto&) {
    for (NodeId k : delta.successors(p.dst)) {
      if (delta.contains(Pair{p.src, k})) add(Pair{p.src, k});
    }
    for (NodeId k : delta.predecessors(p.src)) {
      if (delta.contains(Pair{k, p.dst})) add(Pair{k, p.dst});
    }
  });
}

Relation bracket(const Relation& gamma1, const Relation& gamma2, const Relation& delta) {
  const Relation a = subset_of(gamma1, delta, "bracket");
  const Relation b = subset_of(gamma2, delta, "bracket");
  std::vector<Pair> out;
  auto compose = [&](const Relation& left, const Relation& right) {
    for (const Pair& p : left.pairs()) {
      for (NodeId k : right.successors(p.dst)) {
        if (delta.contains(Pair{p.src, k})) out.push_back({p.src, k});
      }
    }
  };
  compose(a, b);
  compose(b, a);
  return delta.with_pairs(std::move(out));
}

SubsetChain gamma_series(const Relation& gamma, const Relation& delta) {
  const Relation g = subset_of(gamma, delta, "gamma_series");
  if (!is_closed(g, delta)) throw DomainError("gamma_series: subset " + g.to_string() + " is not closed");
  SubsetChain chain{SubsetChain::Direction::Descending, {g}};
  while (!chain.terms.back().empty()) {
    Relation next = bracket(chain.terms.back(), g, delta);
    if (next == chain.terms.back() || chain.terms.size() > g.size()) {
      throw DomainError("gamma_series: series stalls at " + next.to_string() +
                        "; the relation violates the axioms");
    }
    chain.terms.push_back(std::move(next));
  }
  return chain;
}

Relation isolated(const Relation& delta) {
  std::vector<Pair> out;
  for (const Pair& p : delta.pairs()) {
    bool iso = true;
    for (NodeId k : delta.successors(p.dst)) {
      if (delta.contains(Pair{p.src, k})) {
        iso = false;
        break;
      }
    }
    if (iso) {
      for (NodeId l : delta.predecessors(p.src)) {
        if (delta.contains(Pair{l, p.dst})) {
          iso = false;
          break;
        }
      }
    }
    if (iso) out.push_back(p);
  }
  Relation result = delta.with_pairs(std::move(out));
  if (!is_normal(result, delta)) throw std::logic_error("isolated pairs do not form a normal subset");
  return result;
}

Relation difference(const Relation& delta, const Relation& gamma) {
  const Relation g = subset_of(gamma, delta, "difference");
  if (!is_normal(g, delta)) {
    throw DomainError("difference: subset " + g.to_string() + " is not normal");
  }
  return set_minus(delta, g);
}

namespace {

const Relation& require_nonempty(const Relation& omega, const char* what) {
  if (omega.empty()) throw DomainError(std::string(what) + ": empty subset");
  return omega;
}

}  // namespace

bool has_maximal(const Relation& omega, const Relation& delta) {
  const Relation o = subset_of(require_nonempty(omega, "has_maximal"), delta, "has_maximal");
  return std::any_of(o.pairs().begin(), o.pairs().end(), [&](const Pair& p) {
    const auto next = o.successors(p.dst);
    return std::none_of(next.begin(), next.end(),
                        [&](NodeId k) { return delta.contains(Pair{p.src, k}); });
  });
}

bool has_minimal(const Relation& omega, const Relation& delta) {
  const Relation o = subset_of(require_nonempty(omega, "has_minimal"), delta, "has_minimal");
  return std::any_of(o.pairs().begin(), o.pairs().end(), [&](const Pair& p) {
    const auto prev = o.predecessors(p.src);
    return std::none_of(prev.begin(), prev.end(),
                        [&](NodeId k) { return delta.contains(Pair{k, p.dst}); });
  });
}

// ---------------------------------------------------------------------------

Relation chain(int m) {
  if (m < 1) throw DomainError("chain: m must be at least 1");
  std::vector<std::string> nodes;
  std::vector<LabeledPair> pairs;
  for (int i = 1; i <= m; ++i) {
    nodes.push_back(std::to_string(i));
    for (int j = i + 1; j <= m; ++j) pairs.emplace_back(std::to_string(i), std::to_string(j));
  }
  return Relation(std::move(nodes), pairs);
}

Relation ngon(int n) {
  if (n < 4) throw DomainError("ngon: n must be at least 4, got " + std::to_string(n));
  std::vector<std::string> nodes;
  std::vector<LabeledPair> pairs;
  for (int i = 0; i < n; ++i) {
    nodes.push_back(std::to_string(i));
    pairs.emplace_back(std::to_string(i), std::to_string((i + 1) % n));
    pairs.emplace_back(std::to_string(i), std::to_string((i + 2) % n));
  }
  return Relation(std::move(nodes), pairs);
}

namespace {

std::vector<std::string> numbered_nodes(int count) {
  std::vector<std::string> nodes;
  for (int i = 0; i < count; ++i) nodes.push_back(std::to_string(i));
  return nodes;
}

// Bernoulli trial on raw engine output, so results do not depend on the
// standard library's distribution implementations.
bool coin(std::mt19937_64& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(static_cast<long double>(p), 64));
  return rng() < threshold;
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace

RandomRelation random_relation(std::uint64_t seed, int node_count, double density,
                               std::size_t max_attempts) {
  if (node_count < 0) throw DomainError("random_relation: negative node count");
  std::mt19937_64 rng(seed);
  const auto nodes = numbered_nodes(node_count);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<LabeledPair> pairs;
    for (int i = 0; i < node_count; ++i) {
      for (int j = 0; j < node_count; ++j) {
        if (i != j && coin(rng, density)) pairs.emplace_back(nodes[i], nodes[j]);
      }
    }
    Relation candidate(nodes, pairs);
    if (check_axioms(candidate).valid()) return {std::move(candidate), attempt};
  }
  throw DomainError("random_relation: no valid relation within " + std::to_string(max_attempts) +
                    " attempts");
}

Relation random_poset_remnant(std::uint64_t seed, int node_count, double density, int deletions) {
  if (node_count < 0) throw DomainError("random_poset_remnant: negative node count");
  std::mt19937_64 rng(seed);
  const auto nodes = numbered_nodes(node_count);
  std::vector<int> perm(node_count);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = node_count - 1; i > 0; --i) std::swap(perm[i], perm[pick(rng, i + 1)]);

  // Random DAG along the permutation, then transitive closure.
  std::vector<std::vector<bool>> less(node_count, std::vector<bool>(node_count, false));
  for (int a = 0; a < node_count; ++a) {
    for (int b = a + 1; b < node_count; ++b) less[perm[a]][perm[b]] = coin(rng, density);
  }
  for (int k = 0; k < node_count; ++k) {
    for (int i = 0; i < node_count; ++i) {
      for (int j = 0; j < node_count; ++j) {
        if (less[i][k] && less[k][j]) less[i][j] = true;
      }
    }
  }
  std::vector<LabeledPair> pairs;
  for (int i = 0; i < node_count; ++i) {
    for (int j = 0; j < node_count; ++j) {
      if (less[i][j]) pairs.emplace_back(nodes[i], nodes[j]);
    }
  }
  Relation delta(nodes, pairs);
  for (int d = 0; d < deletions && !delta.empty(); ++d) {
    const Pair p = delta.pairs()[pick(rng, delta.size())];
    delta = difference(delta, normal_closure(delta.with_pairs({p}), delta));
  }
  return delta;
}

}  // namespace mclain

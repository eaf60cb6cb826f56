#include "mclain/element.hpp"

#include <stdexcept>

#include "mclain/error.hpp"

namespace mclain {

Group::Group(RingSpec ring, Relation delta) {
  const AxiomReport report = check_axioms(delta);
  if (!report.valid()) {
    throw DomainError("relation violates the axioms: " + report.describe().front());
  }
  impl_ = std::make_shared<const Impl>(Impl{ring, std::move(delta)});
}

Group Group::unchecked(RingSpec ring, Relation delta) {
  return Group(std::make_shared<const Impl>(Impl{ring, std::move(delta)}));
}

namespace {

void require_same_group(const GroupElement& g, const GroupElement& h) {
  if (!(g.group() == h.group())) {
    throw DomainError("elements belong to different groups");
  }
}

void prune(Coefficients& c) {
  std::erase_if(c, [](const auto& kv) { return kv.second.is_zero(); });
}

void accumulate(Coefficients& into, const Coefficients& from) {
  for (const auto& [p, v] : from) {
    auto [it, inserted] = into.try_emplace(p, v);
    if (!inserted) it->second += v;
  }
}

}  // namespace

GroupElement::GroupElement(Group group, Coefficients coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  const Relation& delta = group_.relation();
  for (const auto& [p, v] : coeffs_) {
    if (!delta.contains(p)) {
      throw DomainError("coefficient at " + delta.pair_string(p) + " which is not in the relation");
    }
    if (!(v.spec() == group_.ring())) {
      throw DomainError("coefficient " + v.to_string() + " is not in ring " + group_.ring().to_string());
    }
  }
  prune(coeffs_);
}

RingValue GroupElement::coefficient(Pair p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? RingValue::zero(group_.ring()) : it->second;
}

RingValue GroupElement::coefficient(std::string_view i, std::string_view j) const {
  auto p = group_.relation().find_pair(i, j);
  return p ? coefficient(*p) : RingValue::zero(group_.ring());
}

std::string GroupElement::to_string() const {
  std::string s = "1";
  for (const auto& [p, v] : coeffs_) {
    s += " + " + v.to_string() + "*e" + group_.relation().pair_string(p);
  }
  return s;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  return a.coeffs_ == b.coeffs_;
}

Coefficients ring_product(const Group& group, const Coefficients& x, const Coefficients& y) {
  const Relation& delta = group.relation();
  Coefficients out;
  for (const auto& [ij, a] : x) {
    for (auto it = y.lower_bound(Pair{ij.dst, 0}); it != y.end() && it->first.src == ij.dst; ++it) {
      const Pair il{ij.src, it->first.dst};
      if (!delta.contains(il)) continue;
      RingValue term = a * it->second;
      auto [slot, inserted] = out.try_emplace(il, term);
      if (!inserted) slot->second += term;
    }
  }
  prune(out);
  return out;
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  require_same_group(g, h);
  GroupElement r(g.group_);
  r.coeffs_ = g.coeffs_;
  accumulate(r.coeffs_, h.coeffs_);
  accumulate(r.coeffs_, ring_product(g.group_, g.coeffs_, h.coeffs_));
  prune(r.coeffs_);
  return r;
}

GroupElement identity(const Group& group) { return GroupElement(group); }

GroupElement generator(const Group& group, Pair p, const RingValue& a) {
  if (!group.relation().contains(p)) {
    throw DomainError("generator " + group.relation().pair_string(p) + " is not in the relation");
  }
  return GroupElement(group, Coefficients{{p, a}});
}

GroupElement generator(const Group& group, std::string_view i, std::string_view j,
                       const RingValue& a) {
  auto p = group.relation().find_pair(i, j);
  if (!p || !group.relation().contains(*p)) {
    throw DomainError("generator (" + std::string(i) + "," + std::string(j) +
                      ") is not in the relation");
  }
  return generator(group, *p, a);
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) { return g * h; }

namespace {

std::size_t nilpotency_bound(const GroupElement& g) {
  return touched_nodes(support(g)).size() + 1;
}

}  // namespace

GroupElement inverse(const GroupElement& g) {
  const std::size_t bound = nilpotency_bound(g);
  Coefficients sum;
  Coefficients power = g.coefficients();
  bool negative = true;
  for (std::size_t k = 1; !power.empty(); ++k) {
    if (k > bound) {
      throw std::logic_error("inverse: element " + g.to_string() +
                             " is not nilpotent; the ambient relation is corrupted");
    }
    for (const auto& [p, v] : power) {
      auto [slot, inserted] = sum.try_emplace(p, negative ? -v : v);
      if (!inserted) slot->second += negative ? -v : v;
    }
    negative = !negative;
    power = ring_product(g.group(), power, g.coefficients());
  }
  return GroupElement(g.group(), std::move(sum));
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return (g * h) * (inverse(g) * inverse(h));
}

Relation support(const GroupElement& g) {
  std::vector<Pair> pairs;
  pairs.reserve(g.coefficients().size());
  for (const auto& kv : g.coefficients()) pairs.push_back(kv.first);
  return g.group().relation().with_pairs(std::move(pairs));
}

bool equals(const GroupElement& g, const GroupElement& h) { return g == h; }

int nilpotency_index(const GroupElement& g) {
  const std::size_t bound = nilpotency_bound(g);
  Coefficients power = g.coefficients();
  int m = 1;
  while (!power.empty()) {
    if (static_cast<std::size_t>(m) > bound) {
      throw std::logic_error("nilpotency_index: element is not nilpotent");
    }
    power = ring_product(g.group(), power, g.coefficients());
    ++m;
  }
  return m;
}

// ---------------------------------------------------------------------------

WordToken WordToken::gen(std::string i, std::string j, RingValue a) {
  WordToken t;
  t.kind = Kind::Gen;
  t.i = std::move(i);
  t.j = std::move(j);
  t.a = std::move(a);
  return t;
}

WordToken WordToken::inv(std::vector<WordToken> body) {
  WordToken t;
  t.kind = Kind::Inv;
  t.left = std::move(body);
  return t;
}

WordToken WordToken::comm(std::vector<WordToken> u, std::vector<WordToken> v) {
  WordToken t;
  t.kind = Kind::Comm;
  t.left = std::move(u);
  t.right = std::move(v);
  return t;
}

WordToken WordToken::one() { return WordToken{}; }

namespace {

std::string format_tokens(const std::vector<WordToken>& tokens);

std::string format_token(const WordToken& t) {
  switch (t.kind) {
    case WordToken::Kind::Gen:
      return "x(" + t.i + "," + t.j + ";" + t.a.to_string() + ")";
    case WordToken::Kind::Inv:
      return "inv(" + format_tokens(t.left) + ")";
    case WordToken::Kind::Comm:
      return "comm(" + format_tokens(t.left) + "," + format_tokens(t.right) + ")";
    case WordToken::Kind::One:
      return "1";
  }
  return "?";
}

std::string format_tokens(const std::vector<WordToken>& tokens) {
  if (tokens.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (k) s += "*";
    s += format_token(tokens[k]);
  }
  return s;
}

GroupElement eval_tokens(const Group& group, const std::vector<WordToken>& tokens) {
  GroupElement acc = identity(group);
  for (const WordToken& t : tokens) {
    switch (t.kind) {
      case WordToken::Kind::Gen:
        acc = acc * generator(group, t.i, t.j, t.a);
        break;
      case WordToken::Kind::Inv:
        acc = acc * inverse(eval_tokens(group, t.left));
        break;
      case WordToken::Kind::Comm:
        acc = acc * commutator(eval_tokens(group, t.left), eval_tokens(group, t.right));
        break;
      case WordToken::Kind::One:
        break;
    }
  }
  return acc;
}

}  // namespace

std::string GeneratorWord::to_string() const { return format_tokens(tokens); }

GroupElement eval_word(const Group& group, const GeneratorWord& word) {
  return eval_tokens(group, word.tokens);
}

}  // namespace mclain

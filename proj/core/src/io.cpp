#include "mclain/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "mclain/error.hpp"

namespace mclain {

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) ||
           std::string_view(",;()[]*#").find(c) != std::string_view::npos;
  });
}

namespace {

struct PairLine {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

std::vector<PairLine> tokenize_lines(std::string_view text) {
  std::vector<PairLine> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    PairLine entry{line, {}};
    for (std::string f; fields >> f;) entry.fields.push_back(f);
    if (entry.fields.empty()) continue;
    for (const auto& f : entry.fields) {
      if (!is_valid_label(f)) throw ParseError("invalid label '" + f + "'", line);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

Relation parse_relation(std::string_view text) {
  std::vector<std::string> nodes;
  std::vector<LabeledPair> pairs;
  for (const auto& [line, fields] : tokenize_lines(text)) {
    if (fields.size() != 2) {
      throw ParseError("expected `i j` or `node k`, got " + std::to_string(fields.size()) + " fields", line);
    }
    if (fields[0] == "node") {
      nodes.push_back(fields[1]);
    } else {
      pairs.emplace_back(fields[0], fields[1]);
    }
  }
  return Relation(std::move(nodes), pairs);
}

std::string format_relation(const Relation& relation) {
  std::vector<bool> touched(relation.node_count(), false);
  for (const Pair& p : relation.pairs()) touched[p.src] = touched[p.dst] = true;
  std::string s;
  for (NodeId id = 0; id < relation.node_count(); ++id) {
    if (!touched[id]) s += "node " + relation.label(id) + "\n";
  }
  for (const Pair& p : relation.pairs()) s += relation.label(p.src) + " " + relation.label(p.dst) + "\n";
  return s;
}

std::vector<LabeledPair> parse_pair_list(std::string_view text) {
  std::vector<LabeledPair> pairs;
  for (const auto& [line, fields] : tokenize_lines(text)) {
    if (fields.size() != 2) throw ParseError("expected `i j`", line);
    pairs.emplace_back(fields[0], fields[1]);
  }
  return pairs;
}

std::vector<Pair> resolve_pairs(const std::vector<LabeledPair>& pairs, const Relation& delta) {
  std::vector<Pair> out;
  for (const auto& [i, j] : pairs) {
    auto p = delta.find_pair(i, j);
    if (!p || !delta.contains(*p)) {
      throw DomainError("pair (" + i + "," + j + ") is not in the relation");
    }
    out.push_back(*p);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const RingSpec& ring) : text_(text), ring_(ring) {}

  GeneratorWord parse() {
    GeneratorWord w{expr()};
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view s) {
    skip_space();
    if (text_.substr(pos_).starts_with(s)) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }

  std::vector<WordToken> expr() {
    std::vector<WordToken> tokens;
    term(tokens);
    while (accept("*")) term(tokens);
    return tokens;
  }

  // Parenthesised groups are spliced into the enclosing product.
  void term(std::vector<WordToken>& out) {
    if (accept("inv(")) {
      auto body = expr();
      expect(")");
      out.push_back(WordToken::inv(std::move(body)));
    } else if (accept("comm(")) {
      auto u = expr();
      expect(",");
      auto v = expr();
      expect(")");
      out.push_back(WordToken::comm(std::move(u), std::move(v)));
    } else if (accept("x(")) {
      std::string i = label(',');
      expect(",");
      std::string j = label(';');
      expect(";");
      RingValue a = literal();
      expect(")");
      out.push_back(WordToken::gen(std::move(i), std::move(j), std::move(a)));
    } else if (accept("(")) {
      auto inner = expr();
      expect(")");
      out.insert(out.end(), inner.begin(), inner.end());
    } else if (accept("1")) {
      out.push_back(WordToken::one());
    } else {
      fail("expected a term");
    }
  }

  std::string label(char stop) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != stop && text_[pos_] != ')') ++pos_;
    std::string s(text_.substr(start, pos_ - start));
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (!is_valid_label(s)) fail("invalid node label '" + s + "'");
    return s;
  }

  RingValue literal() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
      if (pos_ == text_.size()) fail("unterminated matrix literal");
      ++pos_;
    } else {
      while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
    }
    try {
      return RingValue::parse(ring_, text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  std::string_view text_;
  const RingSpec& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorWord parse_word(std::string_view text, const RingSpec& ring) {
  return WordParser(text, ring).parse();
}

GroupElement parse_normal_form(std::string_view text, const Group& group) {
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what + " in normal form '" + std::string(text) + "'");
  };
  std::string_view s = text;
  auto skip = [&] {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  };
  skip();
  if (!s.starts_with("1")) throw fail("expected leading '1'");
  s.remove_prefix(1);
  Coefficients coeffs;
  for (skip(); !s.empty(); skip()) {
    if (!s.starts_with("+")) throw fail("expected '+'");
    s.remove_prefix(1);
    const auto star = s.find("*e(");
    if (star == std::string_view::npos) throw fail("expected '*e('");
    RingValue c = RingValue::parse(group.ring(), s.substr(0, star));
    s.remove_prefix(star + 3);
    const auto close = s.find(')');
    if (close == std::string_view::npos) throw fail("unterminated pair");
    const std::string_view inside = s.substr(0, close);
    const auto comma = inside.find(',');
    if (comma == std::string_view::npos) throw fail("expected 'i,j'");
    const std::string i(inside.substr(0, comma)), j(inside.substr(comma + 1));
    s.remove_prefix(close + 1);
    auto p = group.relation().find_pair(i, j);
    if (!p || !group.relation().contains(*p)) {
      throw DomainError("pair (" + i + "," + j + ") is not in the relation");
    }
    if (!coeffs.emplace(*p, std::move(c)).second) throw fail("repeated pair (" + i + "," + j + ")");
  }
  return GroupElement(group, std::move(coeffs));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mclain

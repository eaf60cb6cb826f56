#pragma once

// Text formats.
//
// Relation files: one `i j` pair per line, `node k` declares a node without
// pairs, `#` starts a comment. Labels may not contain whitespace or any of
// `,;()[]*#`, and `node` cannot be the source label of a pair.
//
// Order files: the same pair lines, listed in increasing order.
//
// Element expressions:
//   expr := term ("*" term)*
//   term := "1" | gen | "inv(" expr ")" | "comm(" expr "," expr ")" | "(" expr ")"
//   gen  := "x(" label "," label ";" ringliteral ")"

#include <string>
#include <string_view>
#include <vector>

#include "mclain/element.hpp"
#include "mclain/relation.hpp"
#include "mclain/ring.hpp"

namespace mclain {

bool is_valid_label(std::string_view label);

Relation parse_relation(std::string_view text);
/// Isolated nodes as `node k` lines, then pairs in lexicographic order.
std::string format_relation(const Relation& relation);

std::vector<LabeledPair> parse_pair_list(std::string_view text);
/// Maps labelled pairs onto Δ; throws DomainError for pairs not in Δ.
std::vector<Pair> resolve_pairs(const std::vector<LabeledPair>& pairs, const Relation& delta);

GeneratorWord parse_word(std::string_view text, const RingSpec& ring);

/// Inverse of GroupElement::to_string: `1` or `1 + c*e(i,j) + ...`.
GroupElement parse_normal_form(std::string_view text, const Group& group);

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace mclain

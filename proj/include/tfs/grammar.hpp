#pragma once

#include <optional>

#include "tfs/avm.hpp"
#include "tfs/mrs.hpp"

namespace tfs {

/// An MRS of length >= 1; element 1 is the head, elements 2..n the body.
struct Rule {
  std::string name;
  Mrs mrs;
  std::size_t length() const { return mrs.length(); }
  std::size_t body_length() const { return mrs.length() - 1; }
};

/// Immutable after load; safe for concurrent read-only sharing.
struct Grammar {
  HierarchyPtr hierarchy;
  std::vector<TypeDecl> type_decls;
  std::vector<std::string> feature_decls;  // optional `feat` declarations
  std::string name;                        // optional `grammar NAME.` header
  std::vector<Rule> rules;
  std::vector<std::pair<std::string, Fs>> lexicon;  // in declaration order
  std::optional<Fs> start;

  const Fs* category(const std::string& word) const;
};

/// Loads the textual grammar format:
///   grammar NAME .                        (optional header)
///   type NAME (< NAME (, NAME)*)? .       (omitted parents mean bot)
///   feat NAME (, NAME)* .                 (optional)
///   word WORD := AVM .
///   rule NAME : AVM -> AVM* .             (zero body AVMs permitted)
///   start := AVM .
/// Comments run from '%' to end of line. The hierarchy is validated
/// first; every AVM is type-checked against it.
Grammar load_grammar(std::string_view text);
Grammar load_grammar_file(const std::string& path);

/// Canonical serializer; load_grammar(serialize_grammar(g)) is identity
/// up to variance of every contained structure.
std::string serialize_grammar(const Grammar& g);

/// <Cat(w_j),...,Cat(w_k)> with fresh-renamed, pairwise node-disjoint
/// copies; lambda when j > k. Indices are 1-based.
Mrs preterminals(const Grammar& g, const std::vector<std::string>& words,
                 std::size_t j, std::size_t k);

}  // namespace tfs

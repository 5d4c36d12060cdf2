#pragma once

#include "tfs/grammar.hpp"

namespace tfs {

enum class Trit { Yes, No, Unknown };

struct DerivationWitness {
  std::string rule;
  std::size_t position = 0;  // 1-based element of A that was rewritten
};

/// Single-step derivation check: searches all rules and positions for a
/// rule instance whose head is identified with element i of `a` and whose
/// body with the matching sub-structure of `b`, with identical contexts.
/// Constraint propagation over node gluings; intended for test-scale
/// inputs only.
std::optional<DerivationWitness> immediate_derives(const Grammar& g,
                                                   const Mrs& a, const Mrs& b);

/// Bounded search for specializations a' of `a` and b' of `b` with
/// a' ->* b' within `depth` rewrite steps. Yes and No are definite at the
/// explored bound; Unknown means the bound was reached with live states.
Trit derives_bounded(const Grammar& g, const Mrs& a, const Mrs& b,
                     std::size_t depth);

}  // namespace tfs

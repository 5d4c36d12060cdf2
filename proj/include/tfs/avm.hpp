#pragma once

#include <string>
#include <string_view>

#include "tfs/mrs.hpp"

namespace tfs {

/// Parses the textual AVM syntax `type(F1: sub, F2: #1 = sub2, ...)`,
/// with `#n` tags for reentrancy and bare `#n` as a back-reference.
/// A trailing '.' is permitted. Throws ParseError / UnknownType.
Fs parse_avm(std::string_view text, HierarchyPtr h);

/// Parses the textual MRS form `< AVM , AVM , ... >`; tag scope spans the
/// whole bracketed sequence.
Mrs parse_mrs(std::string_view text, HierarchyPtr h);

/// Canonical form: features sorted lexicographically, tags numbered in
/// first-occurrence order. serialize then parse is identity up to
/// variance, including reentrant and cyclic structures.
std::string serialize(const Fs& a);
std::string serialize(const Mrs& s);

}  // namespace tfs

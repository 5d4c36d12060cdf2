#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tfs/node_graph.hpp"

namespace tfs {

struct TypeDecl {
  std::string name;
  std::vector<std::string> parents;  // empty means parent bot
};

/// A validated, bounded-complete finite type hierarchy. Immutable after
/// validate(); safe for concurrent read-only sharing.
class TypeHierarchy {
 public:
  /// Validates raw declarations: checks antisymmetry of the declared
  /// subtype relation and bounded completeness, computes the LUB table
  /// and the longest-chain level function.
  /// "bot" is predeclared and must not appear in `decls`.
  static TypeHierarchy validate(const std::vector<TypeDecl>& decls);

  TypeId bottom() const { return 0; }
  std::size_t size() const { return names_.size(); }

  TypeId id(std::string_view name) const;          // throws UnknownType
  bool declared(std::string_view name) const;
  const std::string& name(TypeId t) const;         // kTopType -> "top"

  /// t1 is more general than (or equal to) t2.
  bool subtype(TypeId t1, TypeId t2) const;
  /// Least upper bound; kTopType when no declared common upper bound exists.
  TypeId lub(TypeId t1, TypeId t2) const;
  /// Longest-chain length from bot; strictly monotone along strict subtyping.
  unsigned level(TypeId t) const;

  const std::vector<TypeDecl>& declarations() const { return decls_; }
  /// All types strictly related to t (transitively), for generators.
  std::vector<TypeId> strict_supertypes(TypeId t) const;  // more general than t
  std::vector<TypeId> strict_subtypes(TypeId t) const;    // more specific than t

 private:
  TypeHierarchy() = default;
  TypeId check(TypeId t) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, TypeId> by_name_;
  std::vector<std::vector<bool>> leq_;   // leq_[a][b]: a more general than b
  std::vector<std::vector<TypeId>> lub_;
  std::vector<unsigned> levels_;
  std::vector<TypeDecl> decls_;
};

using HierarchyPtr = std::shared_ptr<const TypeHierarchy>;

}  // namespace tfs

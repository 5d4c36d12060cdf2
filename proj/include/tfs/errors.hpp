#pragma once

#include <stdexcept>
#include <string>

namespace tfs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownType : Error {
  explicit UnknownType(const std::string& name)
      : Error("unknown type: " + name), type_name(name) {}
  std::string type_name;
};

struct CycleInHierarchy : Error {
  explicit CycleInHierarchy(const std::string& name)
      : Error("type hierarchy contains a cycle through: " + name),
        type_name(name) {}
  std::string type_name;
};

struct NotBoundedComplete : Error {
  NotBoundedComplete(const std::string& a, const std::string& b,
                     const std::string& ub1, const std::string& ub2)
      : Error("hierarchy is not bounded complete: {" + a + ", " + b +
              "} has incomparable minimal upper bounds " + ub1 + " and " + ub2),
        t1(a), t2(b), min_ub1(ub1), min_ub2(ub2) {}
  std::string t1, t2, min_ub1, min_ub2;
};

struct CyclicStructure : Error {
  CyclicStructure() : Error("structure is cyclic") {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct WordNotInLexicon : Error {
  explicit WordNotInLexicon(const std::string& w)
      : Error("word not in lexicon: " + w), word(w) {}
  std::string word;
};

struct NotStrict : Error {
  NotStrict() : Error("structures are variants or not related by subsumption") {}
};

struct ParseError : Error {
  ParseError(int line_no, const std::string& message)
      : Error("line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
  int line;
};

struct MixedHierarchies : Error {
  MixedHierarchies()
      : Error("operands belong to different type hierarchies") {}
};

}  // namespace tfs

#pragma once

// Tokenizer and node-level AVM parser shared by the AVM front end and
// the grammar-file loader.

#include <string_view>
#include <vector>

#include "tfs/avm.hpp"
#include "tfs/errors.hpp"

namespace tfs::detail {

enum class TokKind {
  Name,     // [A-Za-z0-9_'][A-Za-z0-9_']*
  String,   // "..."
  Dot, Comma, Colon, Assign,  // .  ,  :  :=
  LParen, RParen, Lt, Gt,     // (  )  <  >
  Hash, Eq, Arrow,            // #  =  ->
  End,
};

struct Token {
  TokKind kind;
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::string_view text);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at(TokKind k) const { return peek().kind == k; }
  bool accept(TokKind k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  const Token& expect(TokKind k, const std::string& what);

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

struct TagScope {
  struct Entry {
    NodeId node;
    bool defined = false;
  };
  std::map<std::string, Entry> tags;
};

// Parses one AVM term into `nodes`, returning its root. Tags resolve
// against `scope`, whose lifetime delimits their textual scope.
NodeId parse_avm_node(TokenStream& ts, NodeMap& nodes, TagScope& scope,
                      const TypeHierarchy& h);

}  // namespace tfs::detail

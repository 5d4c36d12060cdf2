#include "tfs/avm.hpp"

#include <cctype>
#include <sstream>

#include "avm_internal.hpp"

namespace tfs {

namespace detail {

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '%') {  // comment to end of line
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (name_char(c)) {
      std::size_t start = i;
      while (i < n && name_char(text[i])) ++i;
      out.push_back({TokKind::Name, std::string(text.substr(start, i - start)), line});
      continue;
    }
    if (c == '"') {
      std::size_t start = ++i;
      while (i < n && text[i] != '"' && text[i] != '\n') ++i;
      if (i >= n || text[i] != '"')
        throw ParseError(line, "unterminated string literal");
      out.push_back({TokKind::String, std::string(text.substr(start, i - start)), line});
      ++i;
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < n && text[i + 1] == b;
    };
    if (two(':', '=')) { out.push_back({TokKind::Assign, ":=", line}); i += 2; continue; }
    if (two('-', '>')) { out.push_back({TokKind::Arrow, "->", line}); i += 2; continue; }
    TokKind k;
    switch (c) {
      case '.': k = TokKind::Dot; break;
      case ',': k = TokKind::Comma; break;
      case ':': k = TokKind::Colon; break;
      case '(': k = TokKind::LParen; break;
      case ')': k = TokKind::RParen; break;
      case '<': k = TokKind::Lt; break;
      case '>': k = TokKind::Gt; break;
      case '#': k = TokKind::Hash; break;
      case '=': k = TokKind::Eq; break;
      default:
        throw ParseError(line, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), line});
    ++i;
  }
  out.push_back({TokKind::End, "", line});
  return out;
}

const Token& TokenStream::expect(TokKind k, const std::string& what) {
  if (!at(k))
    throw ParseError(peek().line, "expected " + what + ", got '" +
                                      (peek().kind == TokKind::End ? "<end>"
                                                                   : peek().text) +
                                      "'");
  return next();
}

void parse_avm_into(TokenStream& ts, NodeMap& nodes, TagScope& scope,
                    const TypeHierarchy& h, NodeId q);

namespace {

std::string parse_tag_name(TokenStream& ts) {
  const Token& t = ts.expect(TokKind::Name, "tag number after '#'");
  for (char c : t.text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(t.line, "tag must be an integer: #" + t.text);
  return t.text;
}

NodeId tag_placeholder(NodeMap& nodes, TagScope& scope, const std::string& tag,
                       const TypeHierarchy& h) {
  auto it = scope.tags.find(tag);
  if (it != scope.tags.end()) return it->second.node;
  NodeId q = fresh_node();
  nodes[q] = NodeData{h.bottom(), {}};
  scope.tags[tag] = {q, false};
  return q;
}

// TAGGED := ("#" INT "=")? AVM | "#" INT
NodeId parse_tagged(TokenStream& ts, NodeMap& nodes, TagScope& scope,
                    const TypeHierarchy& h) {
  if (ts.accept(TokKind::Hash)) {
    int line = ts.peek().line;
    std::string tag = parse_tag_name(ts);
    NodeId q = tag_placeholder(nodes, scope, tag, h);
    if (ts.accept(TokKind::Eq)) {
      auto& entry = scope.tags.at(tag);
      if (entry.defined)
        throw ParseError(line, "tag #" + tag + " defined twice");
      entry.defined = true;
      parse_avm_into(ts, nodes, scope, h, q);
    }
    return q;
  }
  NodeId q = fresh_node();
  nodes[q] = NodeData{h.bottom(), {}};
  parse_avm_into(ts, nodes, scope, h, q);
  return q;
}

}  // namespace

// AVM := NAME | NAME "(" FEAT ":" TAGGED ("," FEAT ":" TAGGED)* ")"
// Fills the preallocated node `q`.
void parse_avm_into(TokenStream& ts, NodeMap& nodes, TagScope& scope,
                    const TypeHierarchy& h, NodeId q) {
  const Token& name = ts.expect(TokKind::Name, "type name");
  if (!h.declared(name.text))
    throw ParseError(name.line, "unknown type: " + name.text);
  nodes.at(q).type = h.id(name.text);
  if (!ts.accept(TokKind::LParen)) return;
  do {
    const Token& feat = ts.expect(TokKind::Name, "feature name");
    if (nodes.at(q).arcs.count(feat.text))
      throw ParseError(feat.line, "duplicate feature: " + feat.text);
    ts.expect(TokKind::Colon, "':'");
    NodeId target = parse_tagged(ts, nodes, scope, h);
    nodes.at(q).arcs[feat.text] = target;
  } while (ts.accept(TokKind::Comma));
  ts.expect(TokKind::RParen, "')'");
}

NodeId parse_avm_node(TokenStream& ts, NodeMap& nodes, TagScope& scope,
                      const TypeHierarchy& h) {
  return parse_tagged(ts, nodes, scope, h);
}

}  // namespace detail

Fs parse_avm(std::string_view text, HierarchyPtr h) {
  detail::TokenStream ts(detail::tokenize(text));
  Fs a;
  a.hier = std::move(h);
  detail::TagScope scope;
  a.root = detail::parse_avm_node(ts, a.nodes, scope, *a.hier);
  ts.accept(detail::TokKind::Dot);
  ts.expect(detail::TokKind::End, "end of input");
  // Drop nodes introduced by unused tag placeholders, if any.
  auto keep = reachable_nodes(a.nodes, {a.root});
  for (auto it = a.nodes.begin(); it != a.nodes.end();)
    it = keep.count(it->first) ? std::next(it) : a.nodes.erase(it);
  return a;
}

Mrs parse_mrs(std::string_view text, HierarchyPtr h) {
  detail::TokenStream ts(detail::tokenize(text));
  Mrs s;
  s.hier = std::move(h);
  detail::TagScope scope;
  ts.expect(detail::TokKind::Lt, "'<'");
  if (!ts.accept(detail::TokKind::Gt)) {
    do {
      s.roots.push_back(detail::parse_avm_node(ts, s.nodes, scope, *s.hier));
    } while (ts.accept(detail::TokKind::Comma));
    ts.expect(detail::TokKind::Gt, "'>'");
  }
  ts.accept(detail::TokKind::Dot);
  ts.expect(detail::TokKind::End, "end of input");
  for (std::size_t i = 0; i < s.roots.size(); ++i)
    for (std::size_t j = i + 1; j < s.roots.size(); ++j)
      if (s.roots[i] == s.roots[j])
        throw ParseError(1, "MRS roots must be pairwise distinct");
  auto keep = reachable_nodes(s.nodes, s.roots);
  for (auto it = s.nodes.begin(); it != s.nodes.end();)
    it = keep.count(it->first) ? std::next(it) : s.nodes.erase(it);
  return s;
}

namespace {

class Printer {
 public:
  Printer(const NodeMap& nodes, const std::vector<NodeId>& roots,
          const TypeHierarchy& h)
      : nodes_(nodes), hier_(h) {
    std::set<NodeId> reach = reachable_nodes(nodes, roots);
    for (NodeId r : roots) ++refs_[r];
    for (NodeId q : reach)
      for (const auto& [f, target] : nodes.at(q).arcs) ++refs_[target];
  }

  void print(std::ostream& os, NodeId q) {
    if (refs_[q] > 1) {
      auto it = tag_of_.find(q);
      if (it != tag_of_.end()) {
        os << '#' << it->second;
        return;
      }
      tag_of_[q] = next_tag_;
      os << '#' << next_tag_++ << '=';
    }
    const NodeData& nd = nodes_.at(q);
    os << hier_.name(nd.type);
    if (!nd.arcs.empty()) {
      os << '(';
      bool first = true;
      for (const auto& [f, target] : nd.arcs) {
        if (!first) os << ", ";
        first = false;
        os << f << ':';
        print(os, target);
      }
      os << ')';
    }
  }

 private:
  const NodeMap& nodes_;
  const TypeHierarchy& hier_;
  std::map<NodeId, int> refs_;
  std::map<NodeId, int> tag_of_;
  int next_tag_ = 1;
};

}  // namespace

std::string serialize(const Fs& a) {
  std::ostringstream os;
  Printer p(a.nodes, {a.root}, *a.hier);
  p.print(os, a.root);
  return os.str();
}

std::string serialize(const Mrs& s) {
  std::ostringstream os;
  Printer p(s.nodes, s.roots, *s.hier);
  os << '<';
  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    if (i) os << ", ";
    p.print(os, s.roots[i]);
  }
  os << '>';
  return os.str();
}

}  // namespace tfs

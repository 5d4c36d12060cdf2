#include "tfs/grammar.hpp"

#include <fstream>
#include <sstream>

#include "avm_internal.hpp"

namespace tfs {

using detail::TokKind;
using detail::Token;
using detail::TokenStream;

const Fs* Grammar::category(const std::string& word) const {
  for (const auto& [w, fs] : lexicon)
    if (w == word) return &fs;
  return nullptr;
}

Grammar load_grammar(std::string_view text) {
  std::vector<Token> tokens = detail::tokenize(text);
  Grammar g;

  // Pass 1: collect declarations and statement spans.
  std::vector<TypeDecl> decls;
  struct PendingAvm {
    enum Kind { Word, RuleStmt, Start } kind;
    std::string name;
    std::size_t begin;
    int line;
  };
  std::vector<PendingAvm> pending;
  {
    std::size_t i = 0;
    auto expect = [&](TokKind k, const std::string& what) -> const Token& {
      if (tokens[i].kind != k)
        throw ParseError(tokens[i].line, "expected " + what + ", got '" +
                                             tokens[i].text + "'");
      return tokens[i++];
    };
    auto skip_to_dot = [&] {
      while (tokens[i].kind != TokKind::Dot && tokens[i].kind != TokKind::End)
        ++i;
      expect(TokKind::Dot, "'.'");
    };
    while (tokens[i].kind != TokKind::End) {
      const Token& kw = expect(TokKind::Name, "statement keyword");
      if (kw.text == "grammar") {
        g.name = expect(TokKind::Name, "grammar name").text;
        expect(TokKind::Dot, "'.'");
      } else if (kw.text == "type") {
        TypeDecl d;
        d.name = expect(TokKind::Name, "type name").text;
        if (tokens[i].kind == TokKind::Lt) {
          ++i;
          d.parents.push_back(expect(TokKind::Name, "parent type").text);
          while (tokens[i].kind == TokKind::Comma) {
            ++i;
            d.parents.push_back(expect(TokKind::Name, "parent type").text);
          }
        }
        expect(TokKind::Dot, "'.'");
        decls.push_back(std::move(d));
      } else if (kw.text == "feat") {
        g.feature_decls.push_back(expect(TokKind::Name, "feature name").text);
        while (tokens[i].kind == TokKind::Comma) {
          ++i;
          g.feature_decls.push_back(expect(TokKind::Name, "feature name").text);
        }
        expect(TokKind::Dot, "'.'");
      } else if (kw.text == "word") {
        PendingAvm p;
        p.kind = PendingAvm::Word;
        p.line = kw.line;
        if (tokens[i].kind == TokKind::String || tokens[i].kind == TokKind::Name)
          p.name = tokens[i++].text;
        else
          throw ParseError(tokens[i].line, "expected word after 'word'");
        expect(TokKind::Assign, "':='");
        p.begin = i;
        skip_to_dot();
        pending.push_back(std::move(p));
      } else if (kw.text == "rule") {
        PendingAvm p;
        p.kind = PendingAvm::RuleStmt;
        p.line = kw.line;
        p.name = expect(TokKind::Name, "rule name").text;
        expect(TokKind::Colon, "':'");
        p.begin = i;
        skip_to_dot();
        pending.push_back(std::move(p));
      } else if (kw.text == "start") {
        PendingAvm p;
        p.kind = PendingAvm::Start;
        p.line = kw.line;
        expect(TokKind::Assign, "':='");
        p.begin = i;
        skip_to_dot();
        pending.push_back(std::move(p));
      } else {
        throw ParseError(kw.line, "unknown statement keyword: " + kw.text);
      }
    }
  }

  g.type_decls = decls;
  g.hierarchy = std::make_shared<TypeHierarchy>(TypeHierarchy::validate(decls));

  // Pass 2: parse the recorded AVM statements against the hierarchy.
  auto stream_at = [&](std::size_t begin) {
    std::vector<Token> slice(tokens.begin() + static_cast<long>(begin),
                             tokens.end());
    return TokenStream(std::move(slice));
  };
  for (const PendingAvm& p : pending) {
    TokenStream ts = stream_at(p.begin);
    detail::TagScope scope;
    switch (p.kind) {
      case PendingAvm::Word: {
        if (g.category(p.name))
          throw ParseError(p.line, "duplicate lexical entry: " + p.name +
                                       " (lexical ambiguity is not supported)");
        Fs fs;
        fs.hier = g.hierarchy;
        fs.root = detail::parse_avm_node(ts, fs.nodes, scope, *g.hierarchy);
        ts.expect(TokKind::Dot, "'.'");
        g.lexicon.emplace_back(p.name, std::move(fs));
        break;
      }
      case PendingAvm::RuleStmt: {
        for (const Rule& r : g.rules)
          if (r.name == p.name)
            throw ParseError(p.line, "duplicate rule name: " + p.name);
        Rule r;
        r.name = p.name;
        r.mrs.hier = g.hierarchy;
        r.mrs.roots.push_back(
            detail::parse_avm_node(ts, r.mrs.nodes, scope, *g.hierarchy));
        ts.expect(TokKind::Arrow, "'->'");
        while (!ts.at(TokKind::Dot))
          r.mrs.roots.push_back(
              detail::parse_avm_node(ts, r.mrs.nodes, scope, *g.hierarchy));
        ts.expect(TokKind::Dot, "'.'");
        for (std::size_t a = 0; a < r.mrs.roots.size(); ++a)
          for (std::size_t b = a + 1; b < r.mrs.roots.size(); ++b)
            if (r.mrs.roots[a] == r.mrs.roots[b])
              throw ParseError(p.line, "rule elements must have distinct roots");
        g.rules.push_back(std::move(r));
        break;
      }
      case PendingAvm::Start: {
        if (g.start)
          throw ParseError(p.line, "duplicate start symbol");
        Fs fs;
        fs.hier = g.hierarchy;
        fs.root = detail::parse_avm_node(ts, fs.nodes, scope, *g.hierarchy);
        ts.expect(TokKind::Dot, "'.'");
        g.start = std::move(fs);
        break;
      }
    }
  }
  return g;
}

Grammar load_grammar_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open grammar file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_grammar(buf.str());
}

std::string serialize_grammar(const Grammar& g) {
  std::ostringstream os;
  if (!g.name.empty()) os << "grammar " << g.name << ".\n";
  for (const TypeDecl& d : g.type_decls) {
    os << "type " << d.name;
    if (!d.parents.empty()) {
      os << " < ";
      for (std::size_t i = 0; i < d.parents.size(); ++i)
        os << (i ? ", " : "") << d.parents[i];
    }
    os << ".\n";
  }
  if (!g.feature_decls.empty()) {
    os << "feat ";
    for (std::size_t i = 0; i < g.feature_decls.size(); ++i)
      os << (i ? ", " : "") << g.feature_decls[i];
    os << ".\n";
  }
  for (const auto& [word, fs] : g.lexicon)
    os << "word \"" << word << "\" := " << serialize(fs) << ".\n";
  for (const Rule& r : g.rules) {
    // Serialize the rule MRS once so cross-element tags stay shared, then
    // split the bracketed form back into head and body.
    std::string mrs = serialize(r.mrs);
    os << "rule " << r.name << ": ";
    // mrs has the form "<e1, e2, ...>"; elements never contain "," at
    // depth 0 except as separators.
    std::vector<std::string> elems;
    int depth = 0;
    std::string cur;
    for (std::size_t i = 1; i + 1 < mrs.size(); ++i) {
      char c = mrs[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        elems.push_back(cur);
        cur.clear();
        if (i + 1 < mrs.size() && mrs[i + 1] == ' ') ++i;
        continue;
      }
      cur += c;
    }
    if (!cur.empty()) elems.push_back(cur);
    os << elems.front() << " ->";
    for (std::size_t i = 1; i < elems.size(); ++i) os << ' ' << elems[i];
    os << ".\n";
  }
  if (g.start) os << "start := " << serialize(*g.start) << ".\n";
  return os.str();
}

Mrs preterminals(const Grammar& g, const std::vector<std::string>& words,
                 std::size_t j, std::size_t k) {
  if (j > k) return empty_mrs(g.hierarchy);
  if (j < 1 || k > words.size())
    throw IndexOutOfRange("preterminal span " + std::to_string(j) + ".." +
                          std::to_string(k) + " out of range for input of length " +
                          std::to_string(words.size()));
  Mrs out;
  out.hier = g.hierarchy;
  for (std::size_t p = j; p <= k; ++p) {
    const Fs* cat = g.category(words[p - 1]);
    if (!cat) throw WordNotInLexicon(words[p - 1]);
    RenamedGraph copy = copy_renamed(cat->nodes, {cat->root});
    out.roots.push_back(copy.image.at(cat->root));
    out.nodes.merge(copy.nodes);
  }
  return out;
}

}  // namespace tfs

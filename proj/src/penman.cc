// Copyright 2026 The amrinfer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amrinfer/penman.h"

#include <cctype>
#include <regex>
#include <sstream>
#include <string_view>
#include <utility>

namespace amrinfer {

namespace {

enum class Tok { kOpen, kClose, kSlash, kRole, kString, kSymbol, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

bool is_delim(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')';
}

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::kOpen: return "'('";
    case Tok::kClose: return "')'";
    case Tok::kSlash: return "'/'";
    case Tok::kRole: return "role";
    case Tok::kString: return "string";
    case Tok::kSymbol: return "symbol";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {
    end_offset_ = text_.size();
    while (end_offset_ > 0 &&
           std::isspace(static_cast<unsigned char>(text_[end_offset_ - 1]))) {
      --end_offset_;
    }
  }

  Token next() {
    skip_space();
    if (pos_ >= text_.size()) return {Tok::kEnd, "", end_offset_};
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') return {Tok::kOpen, "(", pos_++};
    if (c == ')') return {Tok::kClose, ")", pos_++};
    if (c == '"') return quoted(start);
    while (pos_ < text_.size() && !is_delim(text_[pos_])) {
      if (text_[pos_] == '"') break;
      ++pos_;
    }
    std::string word(text_.substr(start, pos_ - start));
    if (word == "/") return {Tok::kSlash, word, start};
    if (word.front() == ':' && word.size() > 1) return {Tok::kRole, word, start};
    return {Tok::kSymbol, word, start};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  Token quoted(std::size_t start) {
    std::string value;
    ++pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_++];
      if (c == '\\' && pos_ < text_.size()) {
        value.push_back(text_[pos_++]);
      } else if (c == '"') {
        return {Tok::kString, value, start};
      } else {
        value.push_back(c);
      }
    }
    throw SyntaxError("unterminated string literal", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t end_offset_ = 0;
};

bool looks_like_variable(const std::string& s) {
  static const std::regex kVar("[a-z][0-9]*");
  return std::regex_match(s, kVar);
}

// Edge whose symbol target is resolved once every variable is known.
struct PendingEdge {
  NodeIndex source;
  std::string role;
  bool inverse;
  std::variant<NodeIndex, Constant, std::pair<std::string, std::size_t>> target;
};

class Parser {
 public:
  explicit Parser(const PenmanSource& src) : src_(src), lexer_(src.text) {
    advance();
  }

  AmrGraph parse() {
    if (tok_.kind == Tok::kEnd) fail<SyntaxError>("empty input", tok_.offset);
    NodeIndex root = parse_node();
    if (tok_.kind != Tok::kEnd) {
      fail<SyntaxError>("expected end of input after graph, got " +
                            describe(tok_),
                        tok_.offset);
    }
    for (PendingEdge& p : pending_) resolve(p);
    graph_.set_root(root);
    if (auto err = graph_.check()) fail<SyntaxError>(*err, 0);
    return std::move(graph_);
  }

 private:
  template <typename E>
  [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
    std::ostringstream os;
    if (src_.file) os << *src_.file << ":";
    if (src_.line) os << *src_.line << ":";
    os << "offset " << offset << ": " << msg;
    throw E(os.str(), offset);
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::kEnd) return tok_name(t.kind);
    return std::string(tok_name(t.kind)) + " '" + t.text + "'";
  }

  void advance() { tok_ = lexer_.next(); }

  Token expect(Tok kind, const char* what) {
    if (tok_.kind != kind) {
      fail<SyntaxError>(std::string("expected ") + what + ", got " + describe(tok_),
                        tok_.offset);
    }
    Token t = tok_;
    advance();
    return t;
  }

  NodeIndex parse_node() {
    expect(Tok::kOpen, "'('");
    Token var = expect(Tok::kSymbol, "variable");
    if (tok_.kind != Tok::kSlash) {
      fail<SyntaxError>("missing concept for variable '" + var.text +
                            "': expected '/', got " + describe(tok_),
                        tok_.offset);
    }
    advance();
    Token label = expect(Tok::kSymbol, "concept");
    if (graph_.find(var.text)) {
      fail<SyntaxError>("duplicate definition of variable '" + var.text + "'",
                        var.offset);
    }
    const NodeIndex self = graph_.add_node(var.text, Concept(label.text));

    while (tok_.kind == Tok::kRole) {
      Token role = tok_;
      advance();
      std::string name = role.text;
      bool inverse = false;
      if (name.size() > 4 && name.ends_with("-of") && name != ":consist-of") {
        name.resize(name.size() - 3);
        inverse = true;
      }
      // Reserve the slot first so edges keep source order.
      const std::size_t slot = pending_.size();
      pending_.push_back(PendingEdge{self, name, inverse, NodeIndex{0}});
      PendingEdge p = pending_[slot];
      switch (tok_.kind) {
        case Tok::kOpen:
          p.target = parse_node();
          break;
        case Tok::kString:
          p.target = Constant{tok_.text, true};
          advance();
          break;
        case Tok::kSymbol:
          p.target = std::make_pair(tok_.text, tok_.offset);
          advance();
          break;
        default:
          fail<SyntaxError>("expected edge target after " + role.text + ", got " +
                                describe(tok_),
                            tok_.offset);
      }
      if (inverse && p.target.index() == 1) {
        fail<SyntaxError>("inverse role " + role.text + " cannot take a string",
                          role.offset);
      }
      pending_[slot] = std::move(p);
    }
    expect(Tok::kClose, "')' or role");
    return self;
  }

  void resolve(PendingEdge& p) {
    std::variant<NodeIndex, Constant> target;
    if (auto* n = std::get_if<NodeIndex>(&p.target)) {
      target = *n;
    } else if (auto* c = std::get_if<Constant>(&p.target)) {
      target = *c;
    } else {
      auto& [symbol, offset] = std::get<2>(p.target);
      if (auto n = graph_.find(symbol)) {
        target = *n;
      } else if (looks_like_variable(symbol)) {
        fail<DanglingReference>("variable '" + symbol + "' is never defined",
                                offset);
      } else if (p.inverse) {
        fail<SyntaxError>("inverse role cannot take constant '" + symbol + "'",
                          offset);
      } else {
        target = Constant{symbol, false};
      }
    }
    if (p.inverse) {
      graph_.add_edge(std::get<NodeIndex>(target), RoleLabel(p.role), p.source);
    } else if (target.index() == 0) {
      graph_.add_edge(p.source, RoleLabel(p.role), std::get<NodeIndex>(target));
    } else {
      graph_.add_edge(p.source, RoleLabel(p.role), std::get<Constant>(target));
    }
  }

  const PenmanSource& src_;
  Lexer lexer_;
  Token tok_{Tok::kEnd, "", 0};
  AmrGraph graph_;
  std::vector<PendingEdge> pending_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

class Writer {
 public:
  explicit Writer(const AmrGraph& g)
      : g_(g), printed_(g.size(), false), emitted_(g.edges().size(), false),
        forward_(g.size(), false) {
    for (NodeIndex n : forward_closure(g, g.root())) forward_[n] = true;
  }

  std::string run() {
    write_node(g_.root());
    return std::move(out_);
  }

 private:
  void write_target(NodeIndex n) {
    if (printed_[n]) {
      out_ += g_.node(n).var;
    } else {
      write_node(n);
    }
  }

  void write_node(NodeIndex v) {
    printed_[v] = true;
    out_ += "(" + g_.node(v).var + " / " + g_.concept_of(v).label();
    const auto& edges = g_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (emitted_[i]) continue;
      const Edge& e = edges[i];
      if (e.source == v) {
        emitted_[i] = true;
        out_ += " " + e.role.name() + " ";
        if (e.targets_node()) {
          write_target(e.target_node());
        } else {
          const Constant& c = e.target_constant();
          out_ += c.quoted ? quote(c.text) : c.text;
        }
      } else if (e.targets_node() && e.target_node() == v && !forward_[e.source]) {
        emitted_[i] = true;
        out_ += " " + e.role.name() + "-of ";
        write_target(e.source);
      }
    }
    out_ += ")";
  }

  const AmrGraph& g_;
  std::vector<bool> printed_;
  std::vector<bool> emitted_;
  std::vector<bool> forward_;
  std::string out_;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

AmrGraph parse_penman(const PenmanSource& src) { return Parser(src).parse(); }

AmrGraph parse_penman(const std::string& text) {
  return parse_penman(PenmanSource{text, std::nullopt, std::nullopt});
}

std::string serialize_penman(const AmrGraph& g) {
  g.validate();
  return Writer(g).run();
}

std::vector<PenmanEntry> read_penman_document(std::istream& in,
                                              const std::string& file_name) {
  std::vector<PenmanEntry> entries;
  std::string line;
  std::string block;
  std::optional<std::string> sentence;
  std::size_t line_no = 0;
  std::size_t block_line = 0;

  auto flush = [&] {
    if (!trim(block).empty()) {
      PenmanSource src{block, std::nullopt, block_line};
      if (!file_name.empty()) src.file = file_name;
      entries.push_back(PenmanEntry{parse_penman(src), sentence, block_line});
    }
    block.clear();
    sentence.reset();
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) {
      if (!trim(block).empty()) flush();
      continue;
    }
    if (t.front() == '#') {
      // A comment after graph text starts a new entry.
      if (!trim(block).empty()) flush();
      auto pos = t.find("::snt");
      if (pos != std::string::npos) sentence = trim(t.substr(pos + 5));
      continue;
    }
    if (block.empty()) block_line = line_no;
    block += line;
    block += '\n';
  }
  flush();
  return entries;
}

}  // namespace amrinfer

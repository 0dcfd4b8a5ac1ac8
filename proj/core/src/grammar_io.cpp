// Copyright 2026 The sbgen Authors
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

#include "sbgen/grammar_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "sbgen/error.hpp"

namespace sbgen {

namespace {

enum class Tok {
  kIdent,    // lowercase identifier: atom or functor
  kVar,      // uppercase identifier
  kString,   // "word"
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kPipe,
  kComma,
  kArrow,    // ->
  kDArrow,   // =>
  kDot,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kVar: return "variable";
    case Tok::kString: return "quoted word";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kPipe: return "'|'";
    case Tok::kComma: return "','";
    case Tok::kArrow: return "'->'";
    case Tok::kDArrow: return "'=>'";
    case Tok::kDot: return "'.'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string source)
      : text_(text), source_(std::move(source)) {}

  const Token& peek() {
    if (!lookahead_) lookahead_ = scan();
    return *lookahead_;
  }

  Token next() {
    Token t = peek();
    lookahead_.reset();
    return t;
  }

  Token expect(Tok kind, const std::string& where) {
    Token t = next();
    if (t.kind != kind) {
      fail(t, std::string("expected ") + tok_name(kind) + " " + where +
                  ", found " + describe(t));
    }
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw LoadError(source_, at.line, at.col, msg);
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::kEnd) return "end of input";
    return std::string("'") + t.text + "'";
  }

  const std::string& source() const { return source_; }

 private:
  Token scan() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = Tok::kEnd;
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        advance();
      }
      t.text = std::string(text_.substr(start, pos_ - start));
      t.kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::kVar
                                                           : Tok::kIdent;
      return t;
    }
    if (c == '"') {
      advance();
      std::string word;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') {
          throw LoadError(source_, t.line, t.col,
                          "unterminated quoted word");
        }
        word.push_back(text_[pos_]);
        advance();
      }
      if (pos_ >= text_.size()) {
        throw LoadError(source_, t.line, t.col, "unterminated quoted word");
      }
      advance();  // closing quote
      if (word.empty()) {
        throw LoadError(source_, t.line, t.col, "empty quoted word");
      }
      for (char w : word) {
        if (std::isspace(static_cast<unsigned char>(w))) {
          throw LoadError(source_, t.line, t.col,
                          "quoted word contains whitespace");
        }
      }
      t.kind = Tok::kString;
      t.text = std::move(word);
      return t;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      advance();
      advance();
      t.kind = Tok::kArrow;
      t.text = "->";
      return t;
    }
    if (c == '=' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      advance();
      advance();
      t.kind = Tok::kDArrow;
      t.text = "=>";
      return t;
    }
    advance();
    t.text = std::string(1, c);
    switch (c) {
      case '(': t.kind = Tok::kLParen; return t;
      case ')': t.kind = Tok::kRParen; return t;
      case '{': t.kind = Tok::kLBrace; return t;
      case '}': t.kind = Tok::kRBrace; return t;
      case '[': t.kind = Tok::kLBracket; return t;
      case ']': t.kind = Tok::kRBracket; return t;
      case '|': t.kind = Tok::kPipe; return t;
      case ',': t.kind = Tok::kComma; return t;
      case '.': t.kind = Tok::kDot; return t;
      default:
        throw LoadError(source_, t.line, t.col,
                        std::string("unexpected character '") + c + "'");
    }
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::optional<Token> lookahead_;
};

// Variable scope for one statement: name -> id, with role consistency
// (a name may not appear both as an index item and as a list tail).
class StatementVars {
 public:
  explicit StatementVars(FreshVars& fresh) : fresh_(fresh) {}

  VarId item_var(Lexer& lx, const Token& t) { return lookup(lx, t, false); }
  VarId tail_var(Lexer& lx, const Token& t) { return lookup(lx, t, true); }

  const std::map<std::string, VarId>& names() const { return by_name_; }

 private:
  VarId lookup(Lexer& lx, const Token& t, bool tail) {
    auto it = by_name_.find(t.text);
    if (it == by_name_.end()) {
      VarId id = fresh_.fresh();
      by_name_.emplace(t.text, id);
      roles_.emplace(t.text, tail);
      return id;
    }
    if (roles_.at(t.text) != tail) {
      lx.fail(t, "variable '" + t.text +
                     "' used both as an index and as a list tail");
    }
    return it->second;
  }

  FreshVars& fresh_;
  std::map<std::string, VarId> by_name_;
  std::map<std::string, bool> roles_;
};

Category parse_category(Lexer& lx, StatementVars& vars) {
  Token f = lx.expect(Tok::kIdent, "as category functor");
  Category c;
  c.functor = f.text;
  if (lx.peek().kind != Tok::kLParen) return c;
  lx.next();  // (
  if (lx.peek().kind == Tok::kRParen) {
    lx.next();
    return c;
  }
  for (;;) {
    const Token& t = lx.peek();
    if (t.kind == Tok::kRParen) {
      lx.next();
      return c;
    }
    if (t.kind == Tok::kPipe) {
      lx.next();
      Token v = lx.expect(Tok::kVar, "after '|'");
      c.indices.tail = vars.tail_var(lx, v);
      lx.expect(Tok::kRParen, "after list tail");
      return c;
    }
    Token term = lx.next();
    if (term.kind == Tok::kIdent) {
      c.indices.items.push_back(IndexTerm::atom(term.text));
    } else if (term.kind == Tok::kVar) {
      c.indices.items.push_back(
          IndexTerm::variable(vars.item_var(lx, term)));
    } else {
      lx.fail(term, std::string("expected index term, found ") +
                        Lexer::describe(term));
    }
    const Token& sep = lx.peek();
    if (sep.kind == Tok::kComma) {
      lx.next();
      continue;
    }
    if (sep.kind == Tok::kPipe || sep.kind == Tok::kRParen) continue;
    lx.fail(sep, std::string("expected ',', '|' or ')' in index list, found ") +
                     Lexer::describe(sep));
  }
}

std::vector<std::string> parse_word_list(Lexer& lx) {
  lx.expect(Tok::kLBracket, "to open the word list");
  std::vector<std::string> words;
  for (;;) {
    const Token& t = lx.peek();
    if (t.kind == Tok::kRBracket) {
      lx.next();
      break;
    }
    if (t.kind == Tok::kComma) {
      lx.next();
      continue;
    }
    Token w = lx.expect(Tok::kString, "in word list");
    words.push_back(w.text);
  }
  return words;
}

std::string read_all(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Body of a 'rule' or 'lex' statement, the head keyword already consumed.
Rule parse_rule_statement(Lexer& lx, FreshVars& fresh, bool lexical) {
  StatementVars vars(fresh);
  Rule r;
  r.lhs = parse_category(lx, vars);
  lx.expect(Tok::kArrow, lexical ? "after lexical left hand side"
                                 : "after rule left hand side");
  if (lexical) {
    while (lx.peek().kind != Tok::kDot) {
      Token w = lx.expect(Tok::kString, "in lexical entry");
      r.words.push_back(w.text);
    }
    Token dot = lx.next();
    if (r.words.empty()) {
      lx.fail(dot, "lexical entry for '" + r.lhs.functor + "' has no word");
    }
  } else {
    while (lx.peek().kind != Tok::kDot) {
      r.rhs.push_back(parse_category(lx, vars));
    }
    Token dot = lx.next();
    if (r.rhs.empty()) {
      lx.fail(dot, "rule for '" + r.lhs.functor +
                       "' has an empty right hand side");
    }
  }
  return r;
}

}  // namespace

Grammar load_grammar(std::istream& in, const std::string& source) {
  return load_grammar_text(read_all(in), source);
}

Grammar load_grammar_text(std::string_view text, const std::string& source) {
  Lexer lx(text, source);
  FreshVars fresh;
  Grammar g;
  bool start_seen = false;
  for (;;) {
    Token head = lx.next();
    if (head.kind == Tok::kEnd) break;
    if (head.kind != Tok::kIdent) {
      lx.fail(head, std::string("expected 'start', 'rule' or 'lex', found ") +
                        Lexer::describe(head));
    }
    if (head.text == "start") {
      Token name = lx.expect(Tok::kIdent, "after 'start'");
      if (start_seen) lx.fail(name, "duplicate start declaration");
      g.start = name.text;
      start_seen = true;
      lx.expect(Tok::kDot, "to end the statement");
    } else if (head.text == "rule" || head.text == "lex") {
      g.rules.push_back(parse_rule_statement(lx, fresh, head.text == "lex"));
    } else {
      lx.fail(head, "unknown statement '" + head.text + "'");
    }
  }
  if (!start_seen) {
    throw LoadError(source, 1, 1, "missing start declaration");
  }
  bool start_has_rule = false;
  for (const Rule& r : g.rules) {
    if (r.lhs.functor == g.start) start_has_rule = true;
  }
  if (!start_has_rule) {
    throw LoadError(source, 1, 1,
                    "start symbol '" + g.start + "' has no rule");
  }
  return g;
}

Bag load_bag(std::istream& in, const std::string& source) {
  return load_bag_text(read_all(in), source);
}

Bag load_bag_text(std::string_view text, const std::string& source) {
  Bag bag;
  FreshVars fresh;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    Lexer lx(line, source + ":" + std::to_string(line_no));
    if (lx.peek().kind == Tok::kEnd) continue;  // blank or comment line

    StatementVars vars(fresh);
    Sign s;
    s.category = parse_category(lx, vars);
    s.phon = parse_word_list(lx);
    if (lx.peek().kind == Tok::kDot) lx.next();
    Token end = lx.next();
    if (end.kind != Tok::kEnd) {
      lx.fail(end, std::string("trailing input after sign: ") +
                       Lexer::describe(end));
    }
    if (s.phon.empty()) {
      throw LoadError(source, line_no, 1, "sign has an empty word list");
    }
    bag.signs.push_back(std::move(s));
  }
  if (bag.signs.empty()) {
    throw LoadError(source, 1, 1, "empty bag");
  }
  if (bag.signs.size() > 64) {
    throw LoadError(source, line_no, 1,
                    "bag has " + std::to_string(bag.signs.size()) +
                        " signs; the node-set limit is 64");
  }
  return bag;
}

std::vector<BilingualEntry> load_bilingual(std::istream& in,
                                           const std::string& source) {
  return load_bilingual_text(read_all(in), source);
}

std::vector<BilingualEntry> load_bilingual_text(std::string_view text,
                                                const std::string& source) {
  Lexer lx(text, source);
  FreshVars fresh;
  std::vector<BilingualEntry> entries;
  for (;;) {
    Token head = lx.next();
    if (head.kind == Tok::kEnd) break;
    if (head.kind != Tok::kIdent || head.text != "xfer") {
      lx.fail(head, std::string("expected 'xfer', found ") +
                        Lexer::describe(head));
    }
    StatementVars vars(fresh);
    BilingualEntry e;
    auto parse_side = [&](std::vector<BilingualSign>& out) {
      lx.expect(Tok::kLBrace, "to open the sign set");
      for (;;) {
        BilingualSign bs;
        bs.category = parse_category(lx, vars);
        bs.words = parse_word_list(lx);
        out.push_back(std::move(bs));
        const Token& t = lx.peek();
        if (t.kind == Tok::kComma) {
          lx.next();
          continue;
        }
        lx.expect(Tok::kRBrace, "to close the sign set");
        break;
      }
    };
    parse_side(e.source);
    lx.expect(Tok::kDArrow, "between source and target sign sets");
    parse_side(e.target);
    Token dot = lx.expect(Tok::kDot, "to end the entry");

    std::set<VarId> source_vars;
    for (const BilingualSign& bs : e.source) {
      visit_vars(bs.category, [&](VarId v) { source_vars.insert(v); });
    }
    for (const BilingualSign& bs : e.target) {
      VarId unbound = 0;
      visit_vars(bs.category, [&](VarId v) {
        if (!source_vars.count(v) && unbound == 0) unbound = v;
      });
      if (unbound != 0) {
        std::string name = "?";
        for (const auto& [n, id] : vars.names()) {
          if (id == unbound) name = n;
        }
        lx.fail(dot, "target variable '" + name +
                         "' does not occur on the source side");
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

namespace {

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  return read_all(in);
}

}  // namespace

Grammar load_grammar_file(const std::string& path) {
  return load_grammar_text(slurp_file(path), path);
}

Bag load_bag_file(const std::string& path) {
  return load_bag_text(slurp_file(path), path);
}

std::vector<BilingualEntry> load_bilingual_file(const std::string& path) {
  return load_bilingual_text(slurp_file(path), path);
}

Category parse_category_text(std::string_view text, const std::string& source) {
  Lexer lx(text, source);
  FreshVars fresh;
  StatementVars vars(fresh);
  Category c = parse_category(lx, vars);
  Token end = lx.next();
  if (end.kind != Tok::kEnd) {
    lx.fail(end, std::string("trailing input after category: ") +
                     Lexer::describe(end));
  }
  return c;
}

Sign parse_sign_text(std::string_view text, const std::string& source) {
  Lexer lx(text, source);
  FreshVars fresh;
  StatementVars vars(fresh);
  Sign s;
  s.category = parse_category(lx, vars);
  s.phon = parse_word_list(lx);
  Token end = lx.next();
  if (end.kind != Tok::kEnd) {
    lx.fail(end, std::string("trailing input after sign: ") +
                     Lexer::describe(end));
  }
  return s;
}

Rule parse_rule_text(std::string_view text, const std::string& source) {
  Lexer lx(text, source);
  FreshVars fresh;
  Token head = lx.next();
  if (head.kind != Tok::kIdent || (head.text != "rule" && head.text != "lex")) {
    lx.fail(head, std::string("expected 'rule' or 'lex', found ") +
                      Lexer::describe(head));
  }
  Rule r = parse_rule_statement(lx, fresh, head.text == "lex");
  Token end = lx.next();
  if (end.kind != Tok::kEnd) {
    lx.fail(end, std::string("trailing input after rule: ") +
                     Lexer::describe(end));
  }
  return r;
}

std::string VarNamer::operator()(VarId v) {
  for (std::size_t i = 0; i < seen_.size(); ++i) {
    if (seen_[i] == v) return "X" + std::to_string(i + 1);
  }
  seen_.push_back(v);
  return "X" + std::to_string(seen_.size());
}

std::string render_category(const Category& c, VarNamer& names) {
  std::string out = c.functor;
  if (c.indices.items.empty() && !c.indices.tail) return out;
  out += '(';
  bool first = true;
  for (const IndexTerm& t : c.indices.items) {
    if (!first) out += ',';
    first = false;
    out += t.is_atom() ? t.name : names(t.var);
  }
  if (c.indices.tail) {
    out += '|';
    out += names(*c.indices.tail);
  }
  out += ')';
  return out;
}

std::string render_category(const Category& c) {
  VarNamer names;
  return render_category(c, names);
}

namespace {

std::string render_words(const std::vector<std::string>& words) {
  std::string out = "[";
  bool first = true;
  for (const std::string& w : words) {
    if (!first) out += ' ';
    first = false;
    out += '"';
    out += w;
    out += '"';
  }
  out += ']';
  return out;
}

}  // namespace

std::string render_sign(const Sign& s) {
  VarNamer names;
  return render_category(s.category, names) + " " + render_words(s.phon);
}

std::string render_rule(const Rule& r) {
  VarNamer names;
  std::string out = r.lexical() ? "lex " : "rule ";
  out += render_category(r.lhs, names);
  out += " ->";
  if (r.lexical()) {
    for (const std::string& w : r.words) {
      out += " \"";
      out += w;
      out += '"';
    }
  } else {
    for (const Category& c : r.rhs) {
      out += ' ';
      out += render_category(c, names);
    }
  }
  out += '.';
  return out;
}

std::string render_grammar(const Grammar& g) {
  std::string out = "start " + g.start + ".\n";
  for (const Rule& r : g.rules) {
    out += render_rule(r);
    out += '\n';
  }
  return out;
}

std::string render_bag(const Bag& b) {
  std::string out;
  for (const Sign& s : b.signs) {
    out += render_sign(s);
    out += '\n';
  }
  return out;
}

std::string render_bilingual(const std::vector<BilingualEntry>& entries) {
  std::string out;
  for (const BilingualEntry& e : entries) {
    VarNamer names;
    auto render_side = [&](const std::vector<BilingualSign>& side) {
      std::string text = "{ ";
      bool first = true;
      for (const BilingualSign& bs : side) {
        if (!first) text += ", ";
        first = false;
        text += render_category(bs.category, names);
        text += render_words(bs.words);
      }
      text += " }";
      return text;
    };
    out += "xfer " + render_side(e.source) + " => " + render_side(e.target) +
           ".\n";
  }
  return out;
}

}  // namespace sbgen

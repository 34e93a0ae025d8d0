#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "kgrec/errors.hpp"
#include "kgrec/rule.hpp"
#include "kgrec/vocab.hpp"

namespace kgrec {

std::string_view builtin_name_text(BuiltinName name) {
  switch (name) {
    case BuiltinName::GreaterThan: return "greaterThan";
    case BuiltinName::LessThan: return "lessThan";
    case BuiltinName::Equal: return "equal";
    case BuiltinName::Contains: return "contains";
    case BuiltinName::Duration: return "duration";
  }
  return "";
}

namespace {

void collect_atom_variables(const Atom& atom, std::set<std::string>& out, bool binders_only) {
  auto add = [&](const Term& t) {
    if (t.is_variable()) out.insert(t.variable().name());
  };
  if (const auto* c = std::get_if<ClassAtom>(&atom)) {
    add(c->arg);
  } else if (const auto* p = std::get_if<PropertyAtom>(&atom)) {
    add(p->arg0);
    add(p->arg1);
  } else if (const auto* s = std::get_if<SameAsAtom>(&atom)) {
    add(s->arg0);
    add(s->arg1);
  } else if (const auto* b = std::get_if<BuiltinCall>(&atom)) {
    if (binders_only) {
      if (b->name == BuiltinName::Duration && !b->args.empty()) add(b->args[0]);
    } else {
      for (const Term& t : b->args) add(t);
    }
  }
}

}  // namespace

std::vector<std::string> body_bound_variables(const Rule& rule) {
  std::set<std::string> bound;
  for (const Atom& atom : rule.body) collect_atom_variables(atom, bound, /*binders_only=*/true);
  return {bound.begin(), bound.end()};
}

void check_rule_safety(const Rule& rule) {
  std::set<std::string> bound;
  for (const Atom& atom : rule.body) collect_atom_variables(atom, bound, /*binders_only=*/true);
  for (const Atom& atom : rule.head) {
    if (std::holds_alternative<BuiltinCall>(atom))
      throw Error("rule " + rule.id + ": head contains a builtin atom");
    std::set<std::string> head_vars;
    collect_atom_variables(atom, head_vars, /*binders_only=*/false);
    for (const std::string& v : head_vars) {
      if (!bound.contains(v))
        throw Error("rule " + rule.id + ": unsafe head variable ?" + v);
    }
  }
}

namespace {

bool is_name_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool is_name_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

struct Token {
  enum class Kind { Word, Var, String, Integer, Float, Date, LParen, RParen, Comma, Colon, Wedge, Arrow, Dot, End };
  Kind kind = Kind::End;
  std::string text;    // Word: expanded name or raw; Var: name; literals: lexical
  std::string prefix;  // Word only; empty when the word had no colon
  std::size_t line = 0;
  std::size_t column = 0;
};

class RuleLexer {
 public:
  explicit RuleLexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token tok;
    tok.line = line_;
    tok.column = column();
    if (pos_ >= text_.size()) {
      tok.kind = Token::Kind::End;
      return tok;
    }
    char c = text_[pos_];
    switch (c) {
      case '(': advance(); tok.kind = Token::Kind::LParen; return tok;
      case ')': advance(); tok.kind = Token::Kind::RParen; return tok;
      case ',': advance(); tok.kind = Token::Kind::Comma; return tok;
      case '.': advance(); tok.kind = Token::Kind::Dot; return tok;
      case ':': advance(); tok.kind = Token::Kind::Colon; return tok;
      default: break;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      advance();
      advance();
      tok.kind = Token::Kind::Arrow;
      return tok;
    }
    if (c == '&' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '&') {
      advance();
      advance();
      tok.kind = Token::Kind::Wedge;
      return tok;
    }
    if (starts_with_wedge()) {
      advance();
      advance();
      advance();
      tok.kind = Token::Kind::Wedge;
      return tok;
    }
    if (c == '?') {
      advance();
      std::string name = lex_name_chars();
      if (name.empty()) fail(tok, "expected variable name after '?'");
      tok.kind = Token::Kind::Var;
      tok.text = std::move(name);
      return tok;
    }
    if (c == '"') return lex_string(tok);
    if (c == '<') return lex_iri(tok);
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      return lex_number_or_date(tok);
    }
    if (is_name_start(static_cast<unsigned char>(c))) return lex_word(tok);
    fail(tok, std::string("unexpected character '") + c + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;

  std::size_t column() const { return pos_ - line_start_ + 1; }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(message, at.line, at.column);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool starts_with_wedge() const {
    // UTF-8 for '∧' is E2 88 A7.
    return pos_ + 2 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xE2 &&
           static_cast<unsigned char>(text_[pos_ + 1]) == 0x88 &&
           static_cast<unsigned char>(text_[pos_ + 2]) == 0xA7;
  }

  std::string lex_name_chars() {
    std::string out;
    while (pos_ < text_.size()) {
      unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (is_name_char(c)) {
        out.push_back(static_cast<char>(c));
        advance();
      } else if (c == '-' && pos_ + 1 < text_.size() &&
                 is_name_char(static_cast<unsigned char>(text_[pos_ + 1]))) {
        out.push_back('-');
        advance();
      } else {
        break;
      }
    }
    return out;
  }

  Token lex_string(Token tok) {
    advance();  // opening quote
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      char c = text_[pos_];
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size()) fail(tok, "dangling escape in string");
        switch (text_[pos_]) {
          case '\\': out.push_back('\\'); break;
          case '"': out.push_back('"'); break;
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          default: fail(tok, "unknown escape in string");
        }
        advance();
      } else {
        out.push_back(c);
        advance();
      }
    }
    if (pos_ >= text_.size()) fail(tok, "unterminated string");
    advance();  // closing quote
    tok.kind = Token::Kind::String;
    tok.text = std::move(out);
    return tok;
  }

  Token lex_iri(Token tok) {
    advance();  // '<'
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '>') {
      out.push_back(text_[pos_]);
      advance();
    }
    if (pos_ >= text_.size()) fail(tok, "unterminated IRI");
    advance();  // '>'
    tok.kind = Token::Kind::Word;
    tok.text = std::move(out);
    return tok;
  }

  Token lex_number_or_date(Token tok) {
    std::string out;
    if (text_[pos_] == '-' || text_[pos_] == '+') {
      out.push_back(text_[pos_]);
      advance();
    }
    bool is_float = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(c);
        advance();
      } else if (c == '.' && pos_ + 1 < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        is_float = true;
        out.push_back(c);
        advance();
      } else if (c == '-' && pos_ + 1 < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        out.push_back(c);  // date component separator
        advance();
      } else {
        break;
      }
    }
    if (parse_date(out)) {
      tok.kind = Token::Kind::Date;
    } else if (out.find('-', 1) != std::string::npos) {
      fail(tok, "malformed date literal: " + out);
    } else {
      tok.kind = is_float ? Token::Kind::Float : Token::Kind::Integer;
    }
    tok.text = std::move(out);
    return tok;
  }

  Token lex_word(Token tok) {
    std::string first = lex_name_chars();
    // A ':' glued to a following name char makes a prefixed name; a bare
    // ':' stays a separate token (rule id separator).
    if (pos_ < text_.size() && text_[pos_] == ':' && pos_ + 1 < text_.size() &&
        is_name_char(static_cast<unsigned char>(text_[pos_ + 1]))) {
      advance();  // ':'
      std::string local = lex_name_chars();
      tok.prefix = std::move(first);
      tok.text = std::move(local);
    } else {
      tok.text = std::move(first);
    }
    tok.kind = Token::Kind::Word;
    return tok;
  }
};

class RuleParser {
 public:
  explicit RuleParser(std::string_view text) : lexer_(text) { shift(); }

  std::vector<Rule> parse() {
    std::vector<Rule> rules;
    while (current_.kind != Token::Kind::End) {
      rules.push_back(parse_rule());
    }
    for (const Rule& r : rules) check_rule_safety(r);
    return rules;
  }

 private:
  RuleLexer lexer_;
  Token current_;

  void shift() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current_.line, current_.column);
  }

  void expect(Token::Kind kind, const char* what) {
    if (current_.kind != kind) fail(std::string("expected ") + what);
    shift();
  }

  Rule parse_rule() {
    if (current_.kind != Token::Kind::Word || !current_.prefix.empty())
      fail("expected rule id");
    Rule rule;
    rule.id = current_.text;
    shift();
    expect(Token::Kind::Colon, "':' after rule id");
    rule.body = parse_atom_list();
    expect(Token::Kind::Arrow, "'->'");
    rule.head = parse_atom_list();
    expect(Token::Kind::Dot, "'.' terminating the rule");
    return rule;
  }

  std::vector<Atom> parse_atom_list() {
    std::vector<Atom> atoms;
    atoms.push_back(parse_atom());
    while (current_.kind == Token::Kind::Wedge) {
      shift();
      atoms.push_back(parse_atom());
    }
    return atoms;
  }

  static std::optional<BuiltinName> builtin_by_name(const std::string& name) {
    if (name == "greaterThan") return BuiltinName::GreaterThan;
    if (name == "lessThan") return BuiltinName::LessThan;
    if (name == "equal") return BuiltinName::Equal;
    if (name == "contains") return BuiltinName::Contains;
    if (name == "duration") return BuiltinName::Duration;
    return std::nullopt;
  }

  Atom parse_atom() {
    if (current_.kind != Token::Kind::Word) fail("expected atom name");
    Token name = current_;
    shift();
    std::vector<Term> args = parse_args();

    bool builtin_ns =
        name.prefix == "builtin" || name.prefix == "swrlb" || name.prefix == "temporal";
    if (builtin_ns) {
      auto builtin = builtin_by_name(name.text);
      if (!builtin) fail("unknown builtin " + name.prefix + ":" + name.text);
      std::size_t arity = *builtin == BuiltinName::Duration ? 4 : 2;
      if (args.size() != arity)
        fail(name.prefix + ":" + name.text + " takes " + std::to_string(arity) + " arguments");
      return BuiltinCall{*builtin, std::move(args)};
    }
    if (name.prefix.empty() && name.text == "sameAs") {
      if (args.size() != 2) fail("sameAs takes 2 arguments");
      return SameAsAtom{std::move(args[0]), std::move(args[1])};
    }
    Iri iri = resolve(name);
    if (args.size() == 1) return ClassAtom{std::move(iri), std::move(args[0])};
    if (args.size() == 2)
      return PropertyAtom{std::move(iri), std::move(args[0]), std::move(args[1])};
    fail("atom takes 1 or 2 arguments");
  }

  std::vector<Term> parse_args() {
    expect(Token::Kind::LParen, "'('");
    std::vector<Term> args;
    args.push_back(parse_term());
    while (current_.kind == Token::Kind::Comma) {
      shift();
      args.push_back(parse_term());
    }
    expect(Token::Kind::RParen, "')'");
    return args;
  }

  Iri resolve(const Token& word) {
    if (word.prefix.empty()) {
      // <iri> tokens carry the full text; bare names resolve in uvso.
      if (word.text.find(':') != std::string::npos) return Iri(word.text);
      return Iri(vocab::kUvso + word.text);
    }
    const auto& prefixes = vocab::default_prefixes();
    auto it = prefixes.find(word.prefix);
    if (it == prefixes.end()) throw ParseError("unknown prefix " + word.prefix, word.line, word.column);
    return Iri(it->second + word.text);
  }

  Term parse_term() {
    Token tok = current_;
    switch (tok.kind) {
      case Token::Kind::Var:
        shift();
        return Term(Variable(tok.text));
      case Token::Kind::String:
        shift();
        return Term(Literal::string(tok.text));
      case Token::Kind::Integer:
        shift();
        return Term(Literal::parse(Datatype::Integer, tok.text));
      case Token::Kind::Float:
        shift();
        return Term(Literal::parse(Datatype::Float, tok.text));
      case Token::Kind::Date:
        shift();
        return Term(Literal::parse(Datatype::Date, tok.text));
      case Token::Kind::Word: {
        shift();
        if (tok.prefix.empty()) {
          if (tok.text == "true" || tok.text == "vrai") return Term(Literal::boolean(true));
          if (tok.text == "false" || tok.text == "faux") return Term(Literal::boolean(false));
        }
        return Term(resolve(tok));
      }
      default:
        fail("expected term");
    }
  }
};

}  // namespace

std::vector<Rule> parse_rules(std::string_view text) {
  return RuleParser(text).parse();
}

std::vector<Rule> parse_rules_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rules(buf.str());
}

}  // namespace kgrec

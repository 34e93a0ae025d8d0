#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "kgrec/errors.hpp"
#include "kgrec/query.hpp"
#include "kgrec/vocab.hpp"

namespace kgrec {

FilterExpr FilterExpr::variable(std::string name) {
  FilterExpr e;
  e.kind = Kind::Var;
  e.var = std::move(name);
  return e;
}

FilterExpr FilterExpr::constant_term(Term t) {
  FilterExpr e;
  e.kind = Kind::Const;
  e.constant = std::move(t);
  return e;
}

FilterExpr FilterExpr::compare(CompareOp op, FilterExpr lhs, FilterExpr rhs) {
  FilterExpr e;
  e.kind = Kind::Compare;
  e.op = op;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

FilterExpr FilterExpr::contains(FilterExpr haystack, FilterExpr needle) {
  FilterExpr e;
  e.kind = Kind::Contains;
  e.children.push_back(std::move(haystack));
  e.children.push_back(std::move(needle));
  return e;
}

FilterExpr FilterExpr::str(FilterExpr inner) {
  FilterExpr e;
  e.kind = Kind::Str;
  e.children.push_back(std::move(inner));
  return e;
}

FilterExpr FilterExpr::logical_and(FilterExpr lhs, FilterExpr rhs) {
  FilterExpr e;
  e.kind = Kind::And;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

FilterExpr FilterExpr::logical_or(FilterExpr lhs, FilterExpr rhs) {
  FilterExpr e;
  e.kind = Kind::Or;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

FilterExpr FilterExpr::logical_not(FilterExpr inner) {
  FilterExpr e;
  e.kind = Kind::Not;
  e.children.push_back(std::move(inner));
  return e;
}

std::vector<std::string> FilterExpr::variables() const {
  std::set<std::string> names;
  auto walk = [&](auto&& self, const FilterExpr& node) -> void {
    if (node.kind == Kind::Var) names.insert(node.var);
    for (const FilterExpr& child : node.children) self(self, child);
  };
  walk(walk, *this);
  return {names.begin(), names.end()};
}

std::vector<std::string> Query::bgp_variables() const {
  std::set<std::string> names;
  for (const TriplePattern& p : bgp) {
    for (const std::string& v : p.variables()) names.insert(v);
  }
  return {names.begin(), names.end()};
}

namespace {

bool is_name_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

struct Token {
  enum class Kind {
    Keyword,  // upper-cased text
    Var,
    IriRef,
    Prefixed,  // prefix in aux, local in text
    String,
    Integer,
    Float,
    Boolean,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Dot,
    Comma,
    AndAnd,
    OrOr,
    Bang,
    CompareLt,
    CompareLe,
    CompareGt,
    CompareGe,
    CompareEq,
    CompareNe,
    DatatypeMarker,  // ^^
    End
  };
  Kind kind = Kind::End;
  std::string text;
  std::string aux;
  std::size_t line = 1;
  std::size_t column = 1;
};

const std::set<std::string> kKeywords = {"PREFIX", "SELECT", "DISTINCT", "WHERE",  "FILTER",
                                         "ORDER",  "BY",     "ASC",      "DESC",   "LIMIT",
                                         "OFFSET", "CONTAINS", "STR",    "TRUE",   "FALSE"};

class QueryLexer {
 public:
  explicit QueryLexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      Token tok = next();
      bool end = tok.kind == Token::Kind::End;
      tokens.push_back(std::move(tok));
      if (end) break;
    }
    return tokens;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;

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

  // An IRIREF must close before any whitespace; otherwise '<' is an operator.
  bool looks_like_iri_ref() const {
    for (std::size_t i = pos_ + 1; i < text_.size(); ++i) {
      char c = text_[i];
      if (c == '>') return true;
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
    }
    return false;
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

  Token next() {
    skip_space_and_comments();
    Token tok;
    tok.line = line_;
    tok.column = pos_ - line_start_ + 1;
    if (pos_ >= text_.size()) return tok;

    char c = text_[pos_];
    switch (c) {
      case '{': advance(); tok.kind = Token::Kind::LBrace; return tok;
      case '}': advance(); tok.kind = Token::Kind::RBrace; return tok;
      case '(': advance(); tok.kind = Token::Kind::LParen; return tok;
      case ')': advance(); tok.kind = Token::Kind::RParen; return tok;
      case '.': advance(); tok.kind = Token::Kind::Dot; return tok;
      case ',': advance(); tok.kind = Token::Kind::Comma; return tok;
      default: break;
    }

    if (c == '&' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '&') {
      advance(); advance();
      tok.kind = Token::Kind::AndAnd;
      return tok;
    }
    if (c == '|' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '|') {
      advance(); advance();
      tok.kind = Token::Kind::OrOr;
      return tok;
    }
    if (c == '!') {
      advance();
      if (pos_ < text_.size() && text_[pos_] == '=') {
        advance();
        tok.kind = Token::Kind::CompareNe;
      } else {
        tok.kind = Token::Kind::Bang;
      }
      return tok;
    }
    if (c == '=') {
      advance();
      tok.kind = Token::Kind::CompareEq;
      return tok;
    }
    if (c == '>') {
      advance();
      if (pos_ < text_.size() && text_[pos_] == '=') {
        advance();
        tok.kind = Token::Kind::CompareGe;
      } else {
        tok.kind = Token::Kind::CompareGt;
      }
      return tok;
    }
    if (c == '<') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
        advance(); advance();
        tok.kind = Token::Kind::CompareLe;
        return tok;
      }
      if (looks_like_iri_ref()) {
        advance();
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '>') {
          out.push_back(text_[pos_]);
          advance();
        }
        advance();  // '>'
        tok.kind = Token::Kind::IriRef;
        tok.text = std::move(out);
        return tok;
      }
      advance();
      tok.kind = Token::Kind::CompareLt;
      return tok;
    }
    if (c == '^') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '^') {
        advance(); advance();
        tok.kind = Token::Kind::DatatypeMarker;
        return tok;
      }
      fail(tok, "stray '^'");
    }
    if (c == '?') {
      advance();
      std::string name = lex_name_chars();
      if (name.empty()) fail(tok, "expected variable name after '?'");
      tok.kind = Token::Kind::Var;
      tok.text = std::move(name);
      return tok;
    }
    if (c == '"') {
      advance();
      std::string out;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\') {
          advance();
          if (pos_ >= text_.size()) fail(tok, "dangling escape");
          switch (text_[pos_]) {
            case '\\': out.push_back('\\'); break;
            case '"': out.push_back('"'); break;
            case 'n': out.push_back('\n'); break;
            case 't': out.push_back('\t'); break;
            default: fail(tok, "unknown escape in string");
          }
          advance();
        } else {
          out.push_back(text_[pos_]);
          advance();
        }
      }
      if (pos_ >= text_.size()) fail(tok, "unterminated string");
      advance();
      tok.kind = Token::Kind::String;
      tok.text = std::move(out);
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      std::string out;
      if (c == '-' || c == '+') {
        out.push_back(c);
        advance();
      }
      bool is_float = false;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(d))) {
          out.push_back(d);
          advance();
        } else if (d == '.' && pos_ + 1 < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
          is_float = true;
          out.push_back(d);
          advance();
        } else {
          break;
        }
      }
      tok.kind = is_float ? Token::Kind::Float : Token::Kind::Integer;
      tok.text = std::move(out);
      return tok;
    }
    if (is_name_char(static_cast<unsigned char>(c)) &&
        !std::isdigit(static_cast<unsigned char>(c))) {
      std::string first = lex_name_chars();
      if (pos_ < text_.size() && text_[pos_] == ':') {
        advance();
        std::string local = lex_name_chars();
        tok.kind = Token::Kind::Prefixed;
        tok.aux = std::move(first);
        tok.text = std::move(local);
        return tok;
      }
      std::string upper = first;
      for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      if (upper == "TRUE" || upper == "FALSE") {
        tok.kind = Token::Kind::Boolean;
        tok.text = upper == "TRUE" ? "true" : "false";
        return tok;
      }
      if (kKeywords.contains(upper)) {
        tok.kind = Token::Kind::Keyword;
        tok.text = std::move(upper);
        return tok;
      }
      fail(tok, "unexpected name '" + first + "' (bare names are not terms here)");
    }
    fail(tok, std::string("unexpected character '") + c + "'");
  }
};

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : tokens_(QueryLexer(text).run()) {}

  Query parse() {
    parse_prefixes();
    parse_select();
    parse_where();
    parse_modifiers();
    if (!at(Token::Kind::End)) fail("trailing tokens after query");
    validate();
    return std::move(query_);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  std::map<std::string, std::string> prefixes_;
  Query query_;

  const Token& current() const { return tokens_[index_]; }
  bool at(Token::Kind kind) const { return current().kind == kind; }
  bool at_keyword(const char* kw) const {
    return at(Token::Kind::Keyword) && current().text == kw;
  }
  void shift() {
    if (index_ + 1 < tokens_.size()) ++index_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current().line, current().column);
  }

  void expect(Token::Kind kind, const char* what) {
    if (!at(kind)) fail(std::string("expected ") + what);
    shift();
  }

  void expect_keyword(const char* kw) {
    if (!at_keyword(kw)) fail(std::string("expected ") + kw);
    shift();
  }

  std::string expand_prefixed(const Token& tok) const {
    auto it = prefixes_.find(tok.aux);
    if (it == prefixes_.end())
      throw ParseError("unknown prefix '" + tok.aux + ":'", tok.line, tok.column);
    return it->second + tok.text;
  }

  void parse_prefixes() {
    while (at_keyword("PREFIX")) {
      shift();
      if (!at(Token::Kind::Prefixed) || !current().text.empty())
        fail("expected 'name:' after PREFIX");
      std::string name = current().aux;
      shift();
      if (!at(Token::Kind::IriRef)) fail("expected <iri> in PREFIX declaration");
      prefixes_[name] = current().text;
      shift();
    }
  }

  void parse_select() {
    expect_keyword("SELECT");
    if (at_keyword("DISTINCT")) {
      query_.distinct = true;
      shift();
    }
    while (at(Token::Kind::Var)) {
      query_.select_vars.push_back(current().text);
      shift();
    }
    if (query_.select_vars.empty()) fail("SELECT needs at least one variable");
  }

  Term parse_pattern_term() {
    const Token tok = current();
    switch (tok.kind) {
      case Token::Kind::Var:
        shift();
        return Term(Variable(tok.text));
      case Token::Kind::IriRef:
        shift();
        return Term(Iri(tok.text));
      case Token::Kind::Prefixed:
        shift();
        return Term(Iri(expand_prefixed(tok)));
      case Token::Kind::Integer:
        shift();
        return Term(Literal::parse(Datatype::Integer, tok.text));
      case Token::Kind::Float:
        shift();
        return Term(Literal::parse(Datatype::Float, tok.text));
      case Token::Kind::Boolean:
        shift();
        return Term(Literal::parse(Datatype::Boolean, tok.text));
      case Token::Kind::String: {
        shift();
        if (at(Token::Kind::DatatypeMarker)) {
          shift();
          std::string dt_iri;
          if (at(Token::Kind::IriRef)) {
            dt_iri = current().text;
            shift();
          } else if (at(Token::Kind::Prefixed)) {
            dt_iri = expand_prefixed(current());
            shift();
          } else {
            fail("expected datatype IRI after ^^");
          }
          return Term(Literal::parse(datatype_from_iri(dt_iri, tok), tok.text));
        }
        return Term(Literal::string(tok.text));
      }
      default:
        fail("expected term");
    }
  }

  Datatype datatype_from_iri(const std::string& iri, const Token& at_tok) const {
    const std::string& xsd = vocab::kXsd;
    if (iri == xsd + "string") return Datatype::String;
    if (iri == xsd + "integer" || iri == xsd + "int" || iri == xsd + "long")
      return Datatype::Integer;
    if (iri == xsd + "float" || iri == xsd + "double" || iri == xsd + "decimal")
      return Datatype::Float;
    if (iri == xsd + "boolean") return Datatype::Boolean;
    if (iri == xsd + "date") return Datatype::Date;
    throw ParseError("unknown datatype IRI <" + iri + ">", at_tok.line, at_tok.column);
  }

  void parse_where() {
    expect_keyword("WHERE");
    expect(Token::Kind::LBrace, "'{'");
    while (!at(Token::Kind::RBrace)) {
      if (at(Token::Kind::End)) fail("unterminated WHERE block");
      if (at_keyword("FILTER")) {
        shift();
        query_.filters.push_back(parse_or_expr());
        if (at(Token::Kind::Dot)) shift();
        continue;
      }
      Term s = parse_pattern_term();
      Term p = parse_pattern_term();
      Term o = parse_pattern_term();
      query_.bgp.push_back(TriplePattern{std::move(s), std::move(p), std::move(o)});
      if (at(Token::Kind::Dot)) shift();
    }
    shift();  // '}'
  }

  FilterExpr parse_or_expr() {
    FilterExpr lhs = parse_and_expr();
    while (at(Token::Kind::OrOr)) {
      shift();
      lhs = FilterExpr::logical_or(std::move(lhs), parse_and_expr());
    }
    return lhs;
  }

  FilterExpr parse_and_expr() {
    FilterExpr lhs = parse_compare_expr();
    while (at(Token::Kind::AndAnd)) {
      shift();
      lhs = FilterExpr::logical_and(std::move(lhs), parse_compare_expr());
    }
    return lhs;
  }

  FilterExpr parse_compare_expr() {
    FilterExpr lhs = parse_unary_expr();
    CompareOp op;
    switch (current().kind) {
      case Token::Kind::CompareLt: op = CompareOp::Lt; break;
      case Token::Kind::CompareLe: op = CompareOp::Le; break;
      case Token::Kind::CompareGt: op = CompareOp::Gt; break;
      case Token::Kind::CompareGe: op = CompareOp::Ge; break;
      case Token::Kind::CompareEq: op = CompareOp::Eq; break;
      case Token::Kind::CompareNe: op = CompareOp::Ne; break;
      default: return lhs;
    }
    shift();
    return FilterExpr::compare(op, std::move(lhs), parse_unary_expr());
  }

  FilterExpr parse_unary_expr() {
    if (at(Token::Kind::Bang)) {
      shift();
      return FilterExpr::logical_not(parse_unary_expr());
    }
    return parse_primary_expr();
  }

  FilterExpr parse_primary_expr() {
    if (at(Token::Kind::LParen)) {
      shift();
      FilterExpr inner = parse_or_expr();
      expect(Token::Kind::RParen, "')'");
      return inner;
    }
    if (at_keyword("CONTAINS")) {
      shift();
      expect(Token::Kind::LParen, "'(' after contains");
      FilterExpr haystack = parse_or_expr();
      expect(Token::Kind::Comma, "',' in contains");
      FilterExpr needle = parse_or_expr();
      expect(Token::Kind::RParen, "')' closing contains");
      return FilterExpr::contains(std::move(haystack), std::move(needle));
    }
    if (at_keyword("STR")) {
      shift();
      expect(Token::Kind::LParen, "'(' after str");
      FilterExpr inner = parse_or_expr();
      expect(Token::Kind::RParen, "')' closing str");
      return FilterExpr::str(std::move(inner));
    }
    if (at(Token::Kind::Var)) {
      FilterExpr e = FilterExpr::variable(current().text);
      shift();
      return e;
    }
    // Remaining primaries are constant terms.
    return FilterExpr::constant_term(parse_pattern_term());
  }

  void parse_modifiers() {
    if (at_keyword("ORDER")) {
      shift();
      expect_keyword("BY");
      OrderBy order;
      if (at_keyword("ASC") || at_keyword("DESC")) {
        order.ascending = current().text == "ASC";
        shift();
        expect(Token::Kind::LParen, "'('");
        if (!at(Token::Kind::Var)) fail("expected variable in ORDER BY");
        order.var = current().text;
        shift();
        expect(Token::Kind::RParen, "')'");
      } else {
        if (!at(Token::Kind::Var)) fail("expected variable in ORDER BY");
        order.var = current().text;
        shift();
      }
      query_.order_by = std::move(order);
    }
    if (at_keyword("LIMIT")) {
      shift();
      query_.limit = parse_count("LIMIT");
    }
    if (at_keyword("OFFSET")) {
      shift();
      query_.offset = parse_count("OFFSET");
    }
  }

  std::size_t parse_count(const char* what) {
    if (!at(Token::Kind::Integer)) fail(std::string("expected non-negative integer after ") + what);
    long long v = std::stoll(current().text);
    if (v < 0) fail(std::string(what) + " must be non-negative");
    shift();
    return static_cast<std::size_t>(v);
  }

  void validate() const {
    std::set<std::string> bgp_vars;
    for (const std::string& v : query_.bgp_variables()) bgp_vars.insert(v);
    for (const std::string& v : query_.select_vars) {
      if (!bgp_vars.contains(v))
        throw ParseError("selected variable ?" + v + " does not occur in the graph pattern", 1);
    }
    for (const FilterExpr& f : query_.filters) {
      for (const std::string& v : f.variables()) {
        if (!bgp_vars.contains(v))
          throw ParseError("filter variable ?" + v + " does not occur in the graph pattern", 1);
      }
    }
    if (query_.order_by && !bgp_vars.contains(query_.order_by->var))
      throw ParseError("order variable ?" + query_.order_by->var +
                           " does not occur in the graph pattern",
                       1);
  }
};

}  // namespace

Query parse_query(std::string_view text) {
  return QueryParser(text).parse();
}

Query parse_query_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_query(buf.str());
}

}  // namespace kgrec

#include "kgrec/term.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

#include "kgrec/errors.hpp"

namespace kgrec {

std::string_view datatype_name(Datatype t) {
  switch (t) {
    case Datatype::Boolean: return "boolean";
    case Datatype::Date: return "date";
    case Datatype::Float: return "float";
    case Datatype::Integer: return "integer";
    case Datatype::String: return "string";
  }
  return "";
}

Iri::Iri(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw TypeError("IRI must be non-empty");
  for (char c : text_) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
      throw TypeError("IRI contains whitespace: " + text_);
    if (c == '<' || c == '>' || c == '"')
      throw TypeError("IRI contains a reserved character: " + text_);
  }
}

Variable::Variable(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw TypeError("variable name must be non-empty");
}

Literal Literal::string(std::string value) {
  Literal lit(Datatype::String, std::move(value));
  return lit;
}

Literal Literal::integer(long long value) {
  Literal lit(Datatype::Integer, std::to_string(value));
  lit.int_value_ = value;
  return lit;
}

Literal Literal::floating(double value) {
  if (!std::isfinite(value)) throw TypeError("float literal must be finite");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  Literal lit(Datatype::Float, std::string(buf, res.ptr));
  lit.float_value_ = value;
  return lit;
}

Literal Literal::boolean(bool value) {
  Literal lit(Datatype::Boolean, value ? "true" : "false");
  lit.bool_value_ = value;
  return lit;
}

Literal Literal::date(const Date& value) {
  if (!is_valid_date(value.year, value.month, value.day))
    throw TypeError("invalid date " + format_date(value));
  Literal lit(Datatype::Date, format_date(value));
  lit.date_value_ = value;
  return lit;
}

Literal Literal::parse(Datatype type, std::string_view lexical) {
  switch (type) {
    case Datatype::String:
      return string(std::string(lexical));
    case Datatype::Integer: {
      long long v = 0;
      std::string_view body = lexical;
      if (!body.empty() && body.front() == '+') body.remove_prefix(1);
      auto res = std::from_chars(body.data(), body.data() + body.size(), v);
      if (res.ec != std::errc() || res.ptr != body.data() + body.size() || body.empty())
        throw TypeError("not an integer lexical form: \"" + std::string(lexical) + "\"");
      return integer(v);
    }
    case Datatype::Float: {
      double v = 0.0;
      auto res = std::from_chars(lexical.data(), lexical.data() + lexical.size(), v);
      if (res.ec != std::errc() || res.ptr != lexical.data() + lexical.size() ||
          lexical.empty() || !std::isfinite(v))
        throw TypeError("not a float lexical form: \"" + std::string(lexical) + "\"");
      return floating(v);
    }
    case Datatype::Boolean: {
      if (lexical == "true" || lexical == "1") return boolean(true);
      if (lexical == "false" || lexical == "0") return boolean(false);
      throw TypeError("not a boolean lexical form: \"" + std::string(lexical) + "\"");
    }
    case Datatype::Date: {
      auto d = parse_date(lexical);
      if (!d) throw TypeError("not a date lexical form: \"" + std::string(lexical) + "\"");
      return date(*d);
    }
  }
  throw TypeError("unknown datatype");
}

long long Literal::as_integer() const {
  if (type_ != Datatype::Integer) throw TypeError("literal is not an integer: " + lexical_);
  return int_value_;
}

double Literal::as_float() const {
  if (type_ != Datatype::Float) throw TypeError("literal is not a float: " + lexical_);
  return float_value_;
}

double Literal::numeric() const {
  if (type_ == Datatype::Integer) return static_cast<double>(int_value_);
  if (type_ == Datatype::Float) return float_value_;
  throw TypeError("literal is not numeric: " + lexical_);
}

bool Literal::as_boolean() const {
  if (type_ != Datatype::Boolean) throw TypeError("literal is not a boolean: " + lexical_);
  return bool_value_;
}

Date Literal::as_date() const {
  if (type_ != Datatype::Date) throw TypeError("literal is not a date: " + lexical_);
  return date_value_;
}

bool Term::operator==(const Term& other) const {
  return compare(*this, other) == 0;
}

namespace {

int compare_literals(const Literal& a, const Literal& b) {
  if (a.type() != b.type())
    return datatype_name(a.type()) < datatype_name(b.type()) ? -1 : 1;
  switch (a.type()) {
    case Datatype::Boolean:
      return static_cast<int>(a.as_boolean()) - static_cast<int>(b.as_boolean());
    case Datatype::Date: {
      auto c = a.as_date() <=> b.as_date();
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Datatype::Float: {
      double x = a.as_float(), y = b.as_float();
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    case Datatype::Integer: {
      long long x = a.as_integer(), y = b.as_integer();
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    case Datatype::String:
      return a.lexical().compare(b.lexical()) < 0 ? -1
             : a.lexical() == b.lexical()         ? 0
                                                  : 1;
  }
  return 0;
}

int kind_rank(const Term& t) {
  if (t.is_iri()) return 0;
  if (t.is_literal()) return 1;
  return 2;
}

}  // namespace

int compare(const Term& a, const Term& b) {
  int ra = kind_rank(a), rb = kind_rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (ra) {
    case 0: {
      int c = a.iri().text().compare(b.iri().text());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case 1:
      return compare_literals(a.literal(), b.literal());
    default: {
      int c = a.variable().name().compare(b.variable().name());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
  }
}

std::string to_string(const Term& t) {
  if (t.is_iri()) return "<" + t.iri().text() + ">";
  if (t.is_variable()) return "?" + t.variable().name();
  const Literal& lit = t.literal();
  return "\"" + lit.lexical() + "\"^^" + std::string(datatype_name(lit.type()));
}

}  // namespace kgrec

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "kgrec/date.hpp"

namespace kgrec {

enum class Datatype { Boolean, Date, Float, Integer, String };

// "boolean", "date", "float", "integer", "string". The enum order equals
// alphabetical name order, which the term total order relies on.
std::string_view datatype_name(Datatype t);

class Iri {
 public:
  // Rejects empty text and text containing whitespace or '<'/'>'/'"'.
  explicit Iri(std::string text);

  const std::string& text() const { return text_; }

  bool operator==(const Iri& other) const { return text_ == other.text_; }
  bool operator<(const Iri& other) const { return text_ < other.text_; }

 private:
  std::string text_;
};

// A typed literal. The lexical form is canonicalized at construction, so
// equality on (datatype, lexical) coincides with equality on the parsed
// value: integer "05" and "5" construct the same literal.
class Literal {
 public:
  static Literal string(std::string value);
  static Literal integer(long long value);
  static Literal floating(double value);
  static Literal boolean(bool value);
  static Literal date(const Date& value);

  // Validates `lexical` against `type`; throws TypeError on mismatch.
  static Literal parse(Datatype type, std::string_view lexical);

  Datatype type() const { return type_; }
  const std::string& lexical() const { return lexical_; }

  bool is_numeric() const { return type_ == Datatype::Integer || type_ == Datatype::Float; }

  long long as_integer() const;  // requires Integer
  double as_float() const;       // requires Float
  double numeric() const;        // Integer or Float, widened
  bool as_boolean() const;       // requires Boolean
  Date as_date() const;          // requires Date

  bool operator==(const Literal& other) const {
    return type_ == other.type_ && lexical_ == other.lexical_;
  }

 private:
  Literal(Datatype type, std::string lexical) : type_(type), lexical_(std::move(lexical)) {}

  Datatype type_;
  std::string lexical_;
  long long int_value_ = 0;
  double float_value_ = 0.0;
  bool bool_value_ = false;
  Date date_value_{};
};

// Named placeholder; appears only in patterns and rule atoms.
class Variable {
 public:
  explicit Variable(std::string name);

  const std::string& name() const { return name_; }

  bool operator==(const Variable& other) const { return name_ == other.name_; }

 private:
  std::string name_;
};

class Term {
 public:
  Term(Iri iri) : node_(std::move(iri)) {}          // NOLINT(google-explicit-constructor)
  Term(Literal literal) : node_(std::move(literal)) {}  // NOLINT
  Term(Variable variable) : node_(std::move(variable)) {}  // NOLINT

  bool is_iri() const { return std::holds_alternative<Iri>(node_); }
  bool is_literal() const { return std::holds_alternative<Literal>(node_); }
  bool is_variable() const { return std::holds_alternative<Variable>(node_); }
  bool is_ground() const { return !is_variable(); }

  const Iri& iri() const { return std::get<Iri>(node_); }
  const Literal& literal() const { return std::get<Literal>(node_); }
  const Variable& variable() const { return std::get<Variable>(node_); }

  bool operator==(const Term& other) const;

 private:
  std::variant<Iri, Literal, Variable> node_;
};

// Strict total order: Iri < Literal < Variable; IRIs lexicographic; literals
// by datatype name then parsed value; variables by name.
int compare(const Term& a, const Term& b);

inline bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

// Human-oriented rendering: <iri>, "lexical"^^type, ?name.
std::string to_string(const Term& t);

using Binding = std::map<std::string, Term>;

}  // namespace kgrec

#include "kgrec/ntriples.hpp"

#include <fstream>
#include <sstream>

#include "kgrec/errors.hpp"

namespace kgrec {

namespace {

const std::string kXsd = "http://www.w3.org/2001/XMLSchema#";

Datatype datatype_from_iri(const std::string& iri, std::size_t line) {
  if (iri == kXsd + "string") return Datatype::String;
  if (iri == kXsd + "integer" || iri == kXsd + "int" || iri == kXsd + "long")
    return Datatype::Integer;
  if (iri == kXsd + "float" || iri == kXsd + "double" || iri == kXsd + "decimal")
    return Datatype::Float;
  if (iri == kXsd + "boolean") return Datatype::Boolean;
  if (iri == kXsd + "date") return Datatype::Date;
  throw ParseError("unknown datatype IRI <" + iri + ">", line);
}

std::string datatype_to_iri(Datatype t) {
  return kXsd + std::string(datatype_name(t));
}

struct LineParser {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line, pos + 1);
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  std::string iri_ref() {
    if (done() || peek() != '<') fail("expected '<'");
    ++pos;
    std::size_t start = pos;
    while (!done() && peek() != '>') ++pos;
    if (done()) fail("unterminated IRI");
    std::string out(text.substr(start, pos - start));
    ++pos;
    return out;
  }

  std::string quoted() {
    if (done() || peek() != '"') fail("expected '\"'");
    ++pos;
    std::string out;
    while (!done() && peek() != '"') {
      char c = peek();
      if (c == '\\') {
        ++pos;
        if (done()) fail("dangling escape");
        switch (peek()) {
          case '\\': out.push_back('\\'); break;
          case '"': out.push_back('"'); break;
          case 'n': out.push_back('\n'); break;
          case 'r': out.push_back('\r'); break;
          case 't': out.push_back('\t'); break;
          default: fail(std::string("unknown escape '\\") + peek() + "'");
        }
        ++pos;
      } else {
        out.push_back(c);
        ++pos;
      }
    }
    if (done()) fail("unterminated literal");
    ++pos;
    return out;
  }

  Triple parse() {
    skip_ws();
    Iri subject(iri_ref());
    skip_ws();
    Iri predicate(iri_ref());
    skip_ws();
    if (done()) fail("missing object");

    Term object = [&]() -> Term {
      if (peek() == '<') return Term(Iri(iri_ref()));
      if (peek() == '"') {
        std::string lexical = quoted();
        Datatype type = Datatype::String;
        if (pos + 1 < text.size() && text[pos] == '^' && text[pos + 1] == '^') {
          pos += 2;
          type = datatype_from_iri(iri_ref(), line);
        }
        try {
          return Term(Literal::parse(type, lexical));
        } catch (const TypeError& e) {
          fail(e.what());
        }
      }
      fail("expected IRI or literal object");
    }();

    skip_ws();
    if (done() || peek() != '.') fail("expected '.' terminator");
    ++pos;
    skip_ws();
    if (!done()) fail("trailing characters after '.'");
    return Triple(Term(std::move(subject)), Term(std::move(predicate)), std::move(object));
  }
};

std::string escape_literal(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

void render_term(std::ostream& os, const Term& t) {
  if (t.is_iri()) {
    os << '<' << t.iri().text() << '>';
    return;
  }
  const Literal& lit = t.literal();
  os << '"' << escape_literal(lit.lexical()) << '"';
  if (lit.type() != Datatype::String) os << "^^<" << datatype_to_iri(lit.type()) << '>';
}

}  // namespace

Graph load_ntriples(std::string_view text) {
  std::vector<Triple> triples;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line =
        end == std::string_view::npos ? text.substr(start) : text.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      LineParser parser{line, 0, line_no};
      try {
        triples.push_back(parser.parse());
      } catch (const ParseError&) {
        throw;
      } catch (const TypeError& e) {
        throw ParseError(e.what(), line_no);
      }
    }

    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return Graph::from_triples(std::move(triples));
}

Graph load_ntriples_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_ntriples(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

std::string serialize_ntriples(const Graph& graph) {
  std::ostringstream out;
  for (const Triple& t : graph.triples()) {
    render_term(out, t.subject());
    out << ' ';
    render_term(out, t.predicate());
    out << ' ';
    render_term(out, t.object());
    out << " .\n";
  }
  return out.str();
}

void write_ntriples_file(const Graph& graph, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << serialize_ntriples(graph);
}

}  // namespace kgrec

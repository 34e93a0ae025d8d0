#pragma once

#include <string>
#include <string_view>

#include "kgrec/graph.hpp"

namespace kgrec {

// Line-oriented N-Triples subset:
//   <iri> <iri> (<iri> | "lexical"^^<datatype-iri> | "plain") .
// Plain literals load with datatype string. Lines starting with '#' and
// blank lines are ignored. Any error rejects the whole input.
Graph load_ntriples(std::string_view text);

Graph load_ntriples_file(const std::string& path);

// Canonical form: triples in SPO order, one per line, canonical lexical
// forms, string literals written plain. Loading the output reproduces an
// equal graph.
std::string serialize_ntriples(const Graph& graph);

void write_ntriples_file(const Graph& graph, const std::string& path);

}  // namespace kgrec

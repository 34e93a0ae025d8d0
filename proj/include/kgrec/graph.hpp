#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "kgrec/triple.hpp"

namespace kgrec {

// Immutable, duplicate-free triple store with SPO, POS and OSP orderings.
// Mutation returns a new snapshot; snapshots share no mutable state and may
// be read from any number of threads.
class Graph {
 public:
  Graph();

  static Graph from_triples(std::vector<Triple> triples);

  [[nodiscard]] Graph insert(const Triple& t) const;
  [[nodiscard]] Graph insert_all(const std::vector<Triple>& ts) const;

  bool contains(const Triple& t) const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  // All triples in SPO order; also the canonical serialization order.
  const std::vector<Triple>& triples() const;

  // Triples unifying with the pattern, in SPO order.
  std::vector<Triple> match_triples(const TriplePattern& pattern) const;

  // One binding per matching triple, in the match_triples order. A ground
  // pattern yields a single empty binding when the triple is present.
  std::vector<Binding> match(const TriplePattern& pattern) const;

  // Triple-set equality.
  bool operator==(const Graph& other) const;

 private:
  struct Data {
    std::vector<Triple> spo;
    std::vector<Triple> pos;
    std::vector<Triple> osp;
  };

  explicit Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  static std::shared_ptr<const Data> build(std::vector<Triple> triples);

  std::shared_ptr<const Data> data_;
};

}  // namespace kgrec

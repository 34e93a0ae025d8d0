#include "kgrec/graph.hpp"

#include <algorithm>
#include <array>

namespace kgrec {

namespace {

// Component visit order per index: SPO, POS, OSP.
constexpr std::array<std::array<int, 3>, 3> kIndexOrder = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};

int compare_in_order(const Triple& a, const Triple& b, const std::array<int, 3>& order) {
  for (int pos : order) {
    int c = compare(a.at(pos), b.at(pos));
    if (c != 0) return c;
  }
  return 0;
}

// Compares a triple against the first `key.size()` components of `order`.
int compare_prefix(const Triple& t, const std::vector<Term>& key, const std::array<int, 3>& order) {
  for (std::size_t i = 0; i < key.size(); ++i) {
    int c = compare(t.at(order[i]), key[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::pair<std::vector<Triple>::const_iterator, std::vector<Triple>::const_iterator> prefix_range(
    const std::vector<Triple>& index, const std::vector<Term>& key,
    const std::array<int, 3>& order) {
  auto lo = std::lower_bound(index.begin(), index.end(), key,
                             [&](const Triple& t, const std::vector<Term>& k) {
                               return compare_prefix(t, k, order) < 0;
                             });
  auto hi = std::upper_bound(lo, index.end(), key,
                             [&](const std::vector<Term>& k, const Triple& t) {
                               return compare_prefix(t, k, order) > 0;
                             });
  return {lo, hi};
}

}  // namespace

Graph::Graph() : data_(std::make_shared<const Data>()) {}

std::shared_ptr<const Graph::Data> Graph::build(std::vector<Triple> triples) {
  auto spo_less = [](const Triple& a, const Triple& b) {
    return compare_in_order(a, b, kIndexOrder[0]) < 0;
  };
  std::sort(triples.begin(), triples.end(), spo_less);
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

  auto data = std::make_shared<Data>();
  data->pos = triples;
  data->osp = triples;
  data->spo = std::move(triples);
  std::sort(data->pos.begin(), data->pos.end(), [](const Triple& a, const Triple& b) {
    return compare_in_order(a, b, kIndexOrder[1]) < 0;
  });
  std::sort(data->osp.begin(), data->osp.end(), [](const Triple& a, const Triple& b) {
    return compare_in_order(a, b, kIndexOrder[2]) < 0;
  });
  return data;
}

Graph Graph::from_triples(std::vector<Triple> triples) {
  return Graph(build(std::move(triples)));
}

Graph Graph::insert(const Triple& t) const {
  if (contains(t)) return *this;
  std::vector<Triple> all = data_->spo;
  all.push_back(t);
  return Graph(build(std::move(all)));
}

Graph Graph::insert_all(const std::vector<Triple>& ts) const {
  if (ts.empty()) return *this;
  std::vector<Triple> all = data_->spo;
  all.insert(all.end(), ts.begin(), ts.end());
  return Graph(build(std::move(all)));
}

bool Graph::contains(const Triple& t) const {
  auto [lo, hi] = prefix_range(data_->spo, {t.subject(), t.predicate(), t.object()}, kIndexOrder[0]);
  return lo != hi;
}

std::size_t Graph::size() const { return data_->spo.size(); }

const std::vector<Triple>& Graph::triples() const { return data_->spo; }

std::vector<Triple> Graph::match_triples(const TriplePattern& pattern) const {
  bool bs = pattern.subject.is_ground();
  bool bp = pattern.predicate.is_ground();
  bool bo = pattern.object.is_ground();

  int index = 0;
  std::vector<Term> key;
  if (bs) {
    index = 0;
    key.push_back(pattern.subject);
    if (bp) {
      key.push_back(pattern.predicate);
      if (bo) key.push_back(pattern.object);
    } else if (bo) {
      index = 2;  // OSP serves the (o, s) prefix
      key = {pattern.object, pattern.subject};
    }
  } else if (bp) {
    index = 1;
    key.push_back(pattern.predicate);
    if (bo) key.push_back(pattern.object);
  } else if (bo) {
    index = 2;
    key.push_back(pattern.object);
  }

  const std::vector<Triple>& idx =
      index == 0 ? data_->spo : (index == 1 ? data_->pos : data_->osp);

  std::vector<Triple> out;
  if (key.empty()) {
    out = idx;
  } else {
    auto [lo, hi] = prefix_range(idx, key, kIndexOrder[static_cast<std::size_t>(index)]);
    out.assign(lo, hi);
  }

  // Repeated pattern variables still require component equality.
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const Triple& t) { return !unify(t, pattern).has_value(); }),
            out.end());
  if (index != 0) std::sort(out.begin(), out.end());
  return out;
}

std::vector<Binding> Graph::match(const TriplePattern& pattern) const {
  std::vector<Binding> bindings;
  for (const Triple& t : match_triples(pattern)) {
    bindings.push_back(*unify(t, pattern));
  }
  return bindings;
}

bool Graph::operator==(const Graph& other) const {
  return data_->spo == other.data_->spo;
}

}  // namespace kgrec

#include "hloc/subgroup_graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

#include "hloc/errors.hpp"

namespace hloc {
namespace {

constexpr std::size_t kBase = 0;

// An edge seen from one of its endpoints: traversed forwards (sign +1)
// or backwards (sign -1). Loops are seen both ways.
struct Incidence {
  std::size_t edge;
  GeneratorIndex label;
  int sign;
  std::size_t other;
};

class FoldingGraph {
 public:
  explicit FoldingGraph(std::span<Word const> generators) {
    add_vertex();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      add_loop(generators[i], static_cast<GeneratorIndex>(i + 1));
    }
  }

  void fold_all(FoldSchedule schedule) {
    std::deque<std::size_t> pending(alive_.size());
    std::iota(pending.begin(), pending.end(), std::size_t{0});
    while (!pending.empty()) {
      std::size_t u;
      if (schedule == FoldSchedule::Breadth) {
        u = pending.front();
        pending.pop_front();
      } else {
        u = pending.back();
        pending.pop_back();
      }
      if (!alive_[u]) {
        continue;
      }
      auto conflict = find_conflict(u);
      if (!conflict) {
        continue;
      }
      std::size_t merged_into = fold(u, conflict->first, conflict->second);
      pending.push_back(merged_into);
      if (alive_[u] && u != merged_into) {
        pending.push_back(u);
      }
    }
  }

  void trim() {
    std::vector<std::size_t> degree(alive_.size(), 0);
    for (auto const& e : edges_) {
      if (e.alive) {
        ++degree[e.from];
        ++degree[e.to];
      }
    }
    std::vector<std::size_t> leaves;
    for (std::size_t v = 1; v < alive_.size(); ++v) {
      if (alive_[v] && degree[v] <= 1) {
        leaves.push_back(v);
      }
    }
    while (!leaves.empty()) {
      std::size_t v = leaves.back();
      leaves.pop_back();
      if (!alive_[v]) {
        continue;
      }
      for (std::size_t id : adjacency_[v]) {
        auto& e = edges_[id];
        if (!e.alive) {
          continue;
        }
        e.alive = false;
        std::size_t other = e.from == v ? e.to : e.from;
        if (--degree[other] <= 1 && other != kBase) {
          leaves.push_back(other);
        }
      }
      alive_[v] = false;
    }
  }

  std::vector<Incidence> incidences(std::size_t u) const {
    std::vector<Incidence> out;
    for (std::size_t id : adjacency_[u]) {
      auto const& e = edges_[id];
      if (!e.alive) {
        continue;
      }
      if (e.from == u) {
        out.push_back({id, e.label, +1, e.to});
      }
      if (e.to == u) {
        out.push_back({id, e.label, -1, e.from});
      }
    }
    // By label, forward before backward.
    std::sort(out.begin(), out.end(), [](Incidence const& a, Incidence const& b) {
      return std::tuple(a.label, -a.sign, a.edge) < std::tuple(b.label, -b.sign, b.edge);
    });
    return out;
  }

  struct Edge {
    std::size_t from;
    std::size_t to;
    GeneratorIndex label;
    Word witness;
    bool alive = true;
  };

  std::vector<Edge> const& edges() const { return edges_; }

 private:
  std::size_t add_vertex() {
    alive_.push_back(true);
    adjacency_.emplace_back();
    return alive_.size() - 1;
  }

  void add_edge(std::size_t from, std::size_t to, GeneratorIndex label, Word witness) {
    edges_.push_back({from, to, label, std::move(witness)});
    std::size_t id = edges_.size() - 1;
    adjacency_[from].push_back(id);
    if (to != from) {
      adjacency_[to].push_back(id);
    }
  }

  // The first edge of the loop carries y_index in the direction of travel.
  void add_loop(Word const& w, GeneratorIndex y_index) {
    std::size_t prev = kBase;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t next = i + 1 == w.size() ? kBase : add_vertex();
      Word witness = i == 0 ? Word::generator(y_index, w[i].sign()) : Word{};
      if (w[i].sign() > 0) {
        add_edge(prev, next, w[i].index(), std::move(witness));
      } else {
        add_edge(next, prev, w[i].index(), std::move(witness));
      }
      prev = next;
    }
  }

  // Witness of an edge read away from u along the given incidence.
  Word oriented_witness(Incidence const& inc) const {
    Word const& y = edges_[inc.edge].witness;
    return inc.sign > 0 ? y : invert(y);
  }

  std::optional<std::pair<Incidence, Incidence>> find_conflict(std::size_t u) const {
    std::map<std::pair<GeneratorIndex, int>, Incidence> seen;
    for (auto const& inc : incidences(u)) {
      auto [it, inserted] = seen.try_emplace({inc.label, inc.sign}, inc);
      if (!inserted && it->second.edge != inc.edge) {
        return std::pair{it->second, inc};
      }
    }
    return std::nullopt;
  }

  // Changes the witnesses around z by g: edges leaving z get g on the
  // left, edges entering z get g^-1 on the right. Products along closed
  // paths at the basepoint are unchanged as long as z is not the basepoint.
  void gauge(std::size_t z, Word const& g) {
    assert(z != kBase);
    Word g_inv = invert(g);
    for (std::size_t id : adjacency_[z]) {
      auto& e = edges_[id];
      if (!e.alive) {
        continue;
      }
      if (e.from == z) {
        e.witness = multiply(g, e.witness);
      }
      if (e.to == z) {
        e.witness = multiply(e.witness, g_inv);
      }
    }
  }

  // Identifies the two edges leaving u with equal oriented labels.
  // Returns the surviving far endpoint.
  std::size_t fold(std::size_t u, Incidence const& kept, Incidence const& dropped) {
    if (kept.other == dropped.other) {
      edges_[dropped.edge].alive = false;
      return kept.other;
    }
    // Eliminate a non-basepoint endpoint z in favour of z_keep.
    Incidence keep = kept;
    Incidence gone = dropped;
    if (gone.other == kBase) {
      std::swap(keep, gone);
    }
    std::size_t const z = gone.other;
    std::size_t const z_keep = keep.other;
    // With g = l_keep^-1 l_gone the gauged witness of the dropped edge,
    // read from u, equals l_keep (also when the dropped edge is a loop at u).
    gauge(z, multiply(invert(oriented_witness(keep)), oriented_witness(gone)));
    assert(oriented_witness(gone) == oriented_witness(keep));
    (void)u;
    edges_[gone.edge].alive = false;

    for (std::size_t id : adjacency_[z]) {
      auto& e = edges_[id];
      if (!e.alive) {
        continue;
      }
      bool const already_incident = e.from == z_keep || e.to == z_keep;
      if (e.from == z) {
        e.from = z_keep;
      }
      if (e.to == z) {
        e.to = z_keep;
      }
      if (!already_incident) {
        adjacency_[z_keep].push_back(id);
      }
    }
    adjacency_[z].clear();
    alive_[z] = false;
    return z_keep;
  }

  std::vector<bool> alive_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Edge> edges_;
};

}  // namespace

SubgroupGraph SubgroupGraph::build(std::span<Word const> generators,
                                   FoldSchedule schedule) {
  if (generators.empty()) {
    throw DomainError("build_graph: the generator list must be non-empty");
  }
  FoldingGraph work(generators);
  work.fold_all(schedule);
  work.trim();

  // Breadth-first renumbering from the basepoint.
  std::map<std::size_t, std::size_t> number{{kBase, 0}};
  std::deque<std::size_t> queue{kBase};
  std::vector<std::size_t> order{kBase};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (auto const& inc : work.incidences(v)) {
      if (number.try_emplace(inc.other, number.size()).second) {
        queue.push_back(inc.other);
      }
    }
  }

  SubgroupGraph g;
  g.generators_.assign(generators.begin(), generators.end());
  struct Numbered {
    GraphEdge edge;
    Word witness;
  };
  std::vector<Numbered> numbered;
  for (auto const& e : work.edges()) {
    if (e.alive) {
      numbered.push_back({{number.at(e.from), number.at(e.to), e.label}, e.witness});
    }
  }
  std::sort(numbered.begin(), numbered.end(), [](Numbered const& a, Numbered const& b) {
    return std::tie(a.edge.from, a.edge.label, a.edge.to) <
           std::tie(b.edge.from, b.edge.label, b.edge.to);
  });
  g.out_.resize(number.size());
  g.in_.resize(number.size());
  for (auto& n : numbered) {
    std::size_t id = g.edges_.size();
    g.out_[n.edge.from].emplace(n.edge.label, id);
    g.in_[n.edge.to].emplace(n.edge.label, id);
    g.edges_.push_back(n.edge);
    g.edge_witness_.push_back(std::move(n.witness));
  }
  return g;
}

bool SubgroupGraph::contains(Word const& w) const {
  std::size_t v = basepoint();
  for (Letter l : w) {
    auto const& side = l.sign() > 0 ? out_[v] : in_[v];
    auto it = side.find(l.index());
    if (it == side.end()) {
      return false;
    }
    auto const& e = edges_[it->second];
    v = l.sign() > 0 ? e.to : e.from;
  }
  return v == basepoint();
}

std::optional<Word> SubgroupGraph::express(Word const& w) const {
  std::size_t v = basepoint();
  WordBuilder witness;
  for (Letter l : w) {
    auto const& side = l.sign() > 0 ? out_[v] : in_[v];
    auto it = side.find(l.index());
    if (it == side.end()) {
      return std::nullopt;
    }
    auto const& e = edges_[it->second];
    if (l.sign() > 0) {
      witness.append(edge_witness_[it->second]);
      v = e.to;
    } else {
      witness.append_inverse(edge_witness_[it->second]);
      v = e.from;
    }
  }
  if (v != basepoint()) {
    return std::nullopt;
  }
  return std::move(witness).build();
}

std::string SubgroupGraph::dump() const {
  std::ostringstream os;
  for (auto const& e : edges_) {
    os << e.from << ' ' << e.to << ' ' << e.label << '\n';
  }
  return os.str();
}

bool SubgroupGraph::is_folded() const {
  std::map<std::pair<std::size_t, GeneratorIndex>, int> out_count;
  std::map<std::pair<std::size_t, GeneratorIndex>, int> in_count;
  for (auto const& e : edges_) {
    if (++out_count[{e.from, e.label}] > 1 || ++in_count[{e.to, e.label}] > 1) {
      return false;
    }
  }
  return true;
}

Word expand(Word const& witness, std::span<Word const> generators) {
  return substitute(witness, generators);
}

}  // namespace hloc

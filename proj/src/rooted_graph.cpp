#include "stallings/rooted_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "stallings/error.hpp"

namespace stallings {

  void LabeledGraph::add_edge(vertex_type from, letter_type x, vertex_type to) {
    if (x < _rank) {
      _edges.push_back({from, x, to});
    } else {
      _edges.push_back({to, inverse_letter(x, _rank), from});
    }
  }

  void LabeledGraph::add_path(vertex_type      from,
                              word_type const& w,
                              vertex_type      to) {
    if (w.empty()) {
      identify(from, to);
      return;
    }
    vertex_type current = from;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      vertex_type next = add_vertex();
      add_edge(current, w[i], next);
      current = next;
    }
    add_edge(current, w.back(), to);
  }

  // Folded adjacency tables over an arbitrary vertex range, turned into a
  // canonical RootedGraph.
  class GraphBuilder {
   public:
    static constexpr vertex_type none = RootedGraph::none;

    GraphBuilder(std::size_t rank, std::size_t n)
        : rank(rank), n(n), out(n * rank, none), in(n * rank, none) {}

    std::size_t              rank;
    std::size_t              n;
    std::vector<vertex_type> out;
    std::vector<vertex_type> in;

    vertex_type next(vertex_type v, letter_type x) const {
      return x < rank ? out[v * rank + x] : in[v * rank + (x - rank)];
    }

    // Removes non-base vertices of degree < 2 among `alive`, repeatedly.
    void trim(vertex_type base, std::vector<bool>& alive) const {
      std::vector<std::size_t> deg(n, 0);
      for (vertex_type v = 0; v < n; ++v) {
        if (!alive[v]) {
          continue;
        }
        for (letter_type x = 0; x < 2 * rank; ++x) {
          auto w = next(v, x);
          if (w != none && alive[w]) {
            ++deg[v];
          }
        }
      }
      std::vector<vertex_type> stack;
      for (vertex_type v = 0; v < n; ++v) {
        if (alive[v] && v != base && deg[v] < 2) {
          stack.push_back(v);
        }
      }
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        if (!alive[v]) {
          continue;
        }
        alive[v] = false;
        for (letter_type x = 0; x < 2 * rank; ++x) {
          auto w = next(v, x);
          if (w != none && alive[w] && w != v) {
            if (--deg[w] < 2 && w != base) {
              stack.push_back(w);
            }
          }
        }
      }
    }

    // Vertices of `alive` connected to base.
    std::vector<bool> component(vertex_type              base,
                                std::vector<bool> const& alive) const {
      std::vector<bool>       seen(n, false);
      std::vector<vertex_type> stack{base};
      seen[base] = true;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (letter_type x = 0; x < 2 * rank; ++x) {
          auto w = next(v, x);
          if (w != none && alive[w] && !seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      return seen;
    }

    RootedGraph canonical(vertex_type base, std::vector<bool> const& alive) const {
      std::vector<vertex_type> index(n, none);
      std::vector<vertex_type> order{base};
      index[base] = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        auto v = order[i];
        for (letter_type x = 0; x < 2 * rank; ++x) {
          auto w = next(v, x);
          if (w != none && alive[w] && index[w] == none) {
            index[w] = static_cast<vertex_type>(order.size());
            order.push_back(w);
          }
        }
      }
      RootedGraph g(rank);
      g._num_vertices = order.size();
      g._base         = 0;
      g._out.assign(order.size() * rank, none);
      g._in.assign(order.size() * rank, none);
      for (std::size_t i = 0; i < order.size(); ++i) {
        auto v = order[i];
        for (letter_type a = 0; a < rank; ++a) {
          auto w = out[v * rank + a];
          if (w != none && index[w] != none) {
            g._out[i * rank + a]        = index[w];
            g._in[index[w] * rank + a]  = static_cast<vertex_type>(i);
          }
        }
      }
      return g;
    }

    static GraphBuilder from(RootedGraph const& g) {
      GraphBuilder b(g.rank(), g.num_vertices());
      for (vertex_type v = 0; v < g.num_vertices(); ++v) {
        for (letter_type a = 0; a < g.rank(); ++a) {
          b.out[v * g.rank() + a] = g._out[v * g.rank() + a];
          b.in[v * g.rank() + a]  = g._in[v * g.rank() + a];
        }
      }
      return b;
    }
  };

  RootedGraph::RootedGraph(std::size_t rank)
      : _rank(rank), _num_vertices(1), _base(0), _out(rank, none), _in(rank, none) {}

  RootedGraph RootedGraph::from_edges(std::size_t                   rank,
                                      std::size_t                   num_vertices,
                                      vertex_type                   base,
                                      std::vector<GraphEdge> const& edges) {
    if (num_vertices == 0 || base >= num_vertices) {
      throw Error(error_kind::parse_error, "graph base out of range");
    }
    GraphBuilder b(rank, num_vertices);
    for (auto const& e : edges) {
      if (e.source >= num_vertices || e.target >= num_vertices || e.label >= rank) {
        throw Error(error_kind::parse_error, "graph edge out of range");
      }
      auto& o = b.out[e.source * rank + e.label];
      auto& i = b.in[e.target * rank + e.label];
      if ((o != none && o != e.target) || (i != none && i != e.source)) {
        throw Error(error_kind::parse_error, "graph is not folded");
      }
      o = e.target;
      i = e.source;
    }
    std::vector<bool> alive(num_vertices, true);
    auto              comp = b.component(base, alive);
    if (std::find(comp.begin(), comp.end(), false) != comp.end()) {
      throw Error(error_kind::parse_error, "graph is not connected");
    }
    b.trim(base, alive);
    if (std::find(alive.begin(), alive.end(), false) != alive.end()) {
      throw Error(error_kind::parse_error, "graph is not base-trimmed");
    }
    return b.canonical(base, alive);
  }

  std::size_t RootedGraph::num_edges() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(_out.begin(), _out.end(), [](auto w) { return w != none; }));
  }

  std::size_t RootedGraph::degree(vertex_type v) const {
    std::size_t d = 0;
    for (letter_type x = 0; x < 2 * _rank; ++x) {
      d += target(v, x) != none;
    }
    return d;
  }

  std::vector<GraphEdge> RootedGraph::edges() const {
    std::vector<GraphEdge> result;
    for (vertex_type v = 0; v < _num_vertices; ++v) {
      for (letter_type a = 0; a < _rank; ++a) {
        auto w = _out[v * _rank + a];
        if (w != none) {
          result.push_back({v, a, w});
        }
      }
    }
    return result;
  }

  std::optional<vertex_type> RootedGraph::read(vertex_type      v,
                                               word_type const& w) const {
    for (auto x : w) {
      v = target(v, x);
      if (v == none) {
        return std::nullopt;
      }
    }
    return v;
  }

  RootedGraph fold(LabeledGraph const& g) {
    std::size_t const rank = g.rank();
    std::size_t const n    = g.num_vertices();
    constexpr auto    none = RootedGraph::none;

    std::vector<vertex_type> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](vertex_type v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v         = parent[v];
      }
      return v;
    };

    // Per class representative: one a-neighbour per label and direction.
    // Conflicting neighbours are queued for identification.
    GraphBuilder                                    b(rank, n);
    std::deque<std::pair<vertex_type, vertex_type>> pending(
        g.identifications().begin(), g.identifications().end());
    auto attach = [&](std::vector<vertex_type>& slots,
                      vertex_type               rep,
                      letter_type               a,
                      vertex_type               w) {
      auto& slot = slots[rep * rank + a];
      if (slot == none) {
        slot = w;
      } else {
        pending.emplace_back(slot, w);
      }
    };
    for (auto const& e : g.edges()) {
      attach(b.out, e.source, e.label, e.target);
      attach(b.in, e.target, e.label, e.source);
    }
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) {
        continue;
      }
      if (y < x) {
        std::swap(x, y);
      }
      parent[y] = x;
      for (letter_type a = 0; a < rank; ++a) {
        if (auto w = b.out[y * rank + a]; w != none) {
          attach(b.out, x, a, w);
        }
        if (auto w = b.in[y * rank + a]; w != none) {
          attach(b.in, x, a, w);
        }
      }
    }

    // Quotient graph on class representatives.
    GraphBuilder      q(rank, n);
    std::vector<bool> alive(n, false);
    for (vertex_type v = 0; v < n; ++v) {
      if (find(v) != v) {
        continue;
      }
      alive[v] = true;
      for (letter_type a = 0; a < rank; ++a) {
        if (auto w = b.out[v * rank + a]; w != none) {
          auto t              = find(w);
          q.out[v * rank + a] = t;
          q.in[t * rank + a]  = v;
        }
      }
    }
    auto base = find(g.base());
    alive     = q.component(base, alive);
    q.trim(base, alive);
    return q.canonical(base, alive);
  }

  LabeledGraph to_labeled(RootedGraph const& g) {
    LabeledGraph result(g.rank(), g.num_vertices());
    result.set_base(g.base());
    for (auto const& e : g.edges()) {
      result.add_edge(e.source, e.label, e.target);
    }
    return result;
  }

  RootedGraph stallings_free(std::vector<word_type> const& gens,
                             std::size_t                   rank) {
    LabeledGraph g(rank, 1);
    for (auto const& h : gens) {
      auto r = free_reduce(h, rank);
      if (!r.empty()) {
        g.add_path(0, r, 0);
      }
    }
    return fold(g);
  }

  RootedGraph attach_relators(RootedGraph const& g, Presentation const& p) {
    LabeledGraph result  = to_labeled(g);
    auto         missing = p.letters_missing_from_relators();
    auto const   rank    = g.rank();
    for (vertex_type v = 0; v < g.num_vertices(); ++v) {
      for (auto const& r : p.relators) {
        result.add_path(v, r, v);
      }
      for (auto a : missing) {
        auto ai = inverse_letter(a, rank);
        result.add_path(v, {a, ai}, v);
        result.add_path(v, {ai, a}, v);
      }
    }
    return fold(result);
  }

  namespace {
    Nfa graph_automaton(RootedGraph const& g, bool all_final) {
      Nfa a(2 * g.rank());
      a.add_states(g.num_vertices());
      for (auto const& e : g.edges()) {
        a.add_transition(e.source, e.label, e.target);
        a.add_transition(e.target, inverse_letter(e.label, g.rank()), e.source);
      }
      a.add_initial(g.base());
      if (all_final) {
        for (vertex_type v = 0; v < g.num_vertices(); ++v) {
          a.add_final(v);
        }
      } else {
        a.add_final(g.base());
      }
      a.normalize();
      return a;
    }

    struct SpanningTree {
      std::vector<word_type>   words;
      std::vector<GraphEdge>   tree_edges;
    };

    SpanningTree spanning_tree(RootedGraph const& g) {
      constexpr auto           none = RootedGraph::none;
      std::size_t const        rank = g.rank();
      SpanningTree             t;
      std::vector<bool>        seen(g.num_vertices(), false);
      std::vector<vertex_type> order{g.base()};
      t.words.resize(g.num_vertices());
      seen[g.base()] = true;
      for (std::size_t i = 0; i < order.size(); ++i) {
        auto v = order[i];
        for (letter_type x = 0; x < 2 * rank; ++x) {
          auto w = g.target(v, x);
          if (w == none || seen[w]) {
            continue;
          }
          seen[w]    = true;
          t.words[w] = t.words[v];
          t.words[w].push_back(x);
          order.push_back(w);
          if (x < rank) {
            t.tree_edges.push_back({v, x, w});
          } else {
            t.tree_edges.push_back({w, inverse_letter(x, rank), v});
          }
        }
      }
      std::sort(t.tree_edges.begin(), t.tree_edges.end());
      return t;
    }
  }  // namespace

  Nfa loops_automaton(RootedGraph const& g) {
    return graph_automaton(g, false);
  }

  Nfa paths_automaton(RootedGraph const& g) {
    return graph_automaton(g, true);
  }

  std::vector<word_type> spanning_words(RootedGraph const& g) {
    return spanning_tree(g).words;
  }

  std::vector<word_type> generators_from_graph(RootedGraph const& g) {
    auto                   t = spanning_tree(g);
    std::vector<word_type> result;
    for (auto const& e : g.edges()) {
      if (std::binary_search(t.tree_edges.begin(), t.tree_edges.end(), e)) {
        continue;
      }
      word_type w = t.words[e.source];
      w.push_back(e.label);
      auto back = inverse_word(t.words[e.target], g.rank());
      w.insert(w.end(), back.begin(), back.end());
      result.push_back(free_reduce(w, g.rank()));
    }
    return result;
  }

  RootedGraph canonical_form(RootedGraph const& g) {
    auto b = GraphBuilder::from(g);
    return b.canonical(g.base(), std::vector<bool>(g.num_vertices(), true));
  }

  bool rooted_isomorphic(RootedGraph const& g, RootedGraph const& h) {
    return canonical_form(g) == canonical_form(h);
  }

  std::vector<std::size_t> distances_from_base(RootedGraph const& g) {
    std::vector<std::size_t> dist(g.num_vertices(), SIZE_MAX);
    std::deque<vertex_type>  queue{g.base()};
    dist[g.base()] = 0;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (letter_type x = 0; x < 2 * g.rank(); ++x) {
        auto w = g.target(v, x);
        if (w != RootedGraph::none && dist[w] == SIZE_MAX) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  std::size_t max_distance_from_base(RootedGraph const& g) {
    auto d = distances_from_base(g);
    return *std::max_element(d.begin(), d.end());
  }

  std::size_t diameter(RootedGraph const& g) {
    std::size_t result = 0;
    for (vertex_type v = 0; v < g.num_vertices(); ++v) {
      std::vector<std::size_t> dist(g.num_vertices(), SIZE_MAX);
      std::deque<vertex_type>  queue{v};
      dist[v] = 0;
      while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        result = std::max(result, dist[u]);
        for (letter_type x = 0; x < 2 * g.rank(); ++x) {
          auto w = g.target(u, x);
          if (w != RootedGraph::none && dist[w] == SIZE_MAX) {
            dist[w] = dist[u] + 1;
            queue.push_back(w);
          }
        }
      }
    }
    return result;
  }

  std::vector<bool> prune(RootedGraph const& g, std::vector<bool> const& keep) {
    auto b = GraphBuilder::from(g);
    if (!keep[g.base()]) {
      throw Error(error_kind::internal_inconsistency,
                  "the base vertex cannot be removed");
    }
    auto alive = b.component(g.base(), keep);
    b.trim(g.base(), alive);
    return alive;
  }

  RootedGraph induced_subgraph(RootedGraph const&       g,
                               std::vector<bool> const& keep) {
    auto b     = GraphBuilder::from(g);
    auto alive = prune(g, keep);
    return b.canonical(g.base(), alive);
  }

  RootedGraph product_graph(RootedGraph const& g, RootedGraph const& h) {
    if (g.rank() != h.rank()) {
      throw Error(error_kind::alphabet_mismatch, "product of graphs of distinct rank");
    }
    std::size_t const rank = g.rank();
    std::map<std::pair<vertex_type, vertex_type>, vertex_type> index;
    std::vector<std::pair<vertex_type, vertex_type>>           order;
    LabeledGraph                                               result(rank, 0);
    auto visit = [&](vertex_type p, vertex_type q) {
      auto [it, inserted] = index.emplace(std::make_pair(p, q), 0);
      if (inserted) {
        it->second = result.add_vertex();
        order.emplace_back(p, q);
      }
      return it->second;
    };
    visit(g.base(), h.base());
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto [p, q] = order[i];
      for (letter_type x = 0; x < 2 * rank; ++x) {
        auto p2 = g.target(p, x);
        auto q2 = h.target(q, x);
        if (p2 == RootedGraph::none || q2 == RootedGraph::none) {
          continue;
        }
        auto w = visit(p2, q2);
        if (x < rank) {
          result.add_edge(static_cast<vertex_type>(i), x, w);
        }
      }
    }
    result.set_base(0);
    return fold(result);
  }

  std::uint64_t reduced_ball_size(std::size_t rank, std::size_t k) {
    std::uint64_t total = 1;
    std::uint64_t layer = 2 * rank;
    for (std::size_t i = 1; i <= k; ++i) {
      if (total > UINT64_MAX - layer) {
        return UINT64_MAX;
      }
      total += layer;
      if (layer > UINT64_MAX / (2 * rank - 1 + (rank == 0))) {
        layer = UINT64_MAX;
      } else {
        layer *= 2 * rank - 1;
      }
    }
    return total;
  }

}  // namespace stallings

#ifndef STALLINGS_ROOTED_GRAPH_HPP_
#define STALLINGS_ROOTED_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stallings/alphabet.hpp"
#include "stallings/nfa.hpp"
#include "stallings/words.hpp"

namespace stallings {

  using vertex_type = std::uint32_t;

  struct GraphEdge {
    vertex_type source;
    letter_type label;  // always a positive letter
    vertex_type target;

    auto operator<=>(GraphEdge const&) const = default;
  };

  // A possibly unfolded A-labeled graph with a base vertex; the input of
  // `fold`. Edges read with an inverse letter are stored reversed.
  class LabeledGraph {
   public:
    explicit LabeledGraph(std::size_t rank, std::size_t num_vertices = 1)
        : _rank(rank), _num_vertices(num_vertices) {}

    vertex_type add_vertex() {
      return static_cast<vertex_type>(_num_vertices++);
    }
    void add_edge(vertex_type from, letter_type x, vertex_type to);
    // Glues a path labeled w from `from` to `to` through fresh vertices. An
    // empty w identifies the two endpoints.
    void add_path(vertex_type from, word_type const& w, vertex_type to);
    void identify(vertex_type u, vertex_type v) {
      _identifications.emplace_back(u, v);
    }
    void set_base(vertex_type v) {
      _base = v;
    }

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::size_t num_vertices() const noexcept {
      return _num_vertices;
    }
    [[nodiscard]] vertex_type base() const noexcept {
      return _base;
    }
    [[nodiscard]] std::vector<GraphEdge> const& edges() const noexcept {
      return _edges;
    }
    [[nodiscard]] std::vector<std::pair<vertex_type, vertex_type>> const&
    identifications() const noexcept {
      return _identifications;
    }

   private:
    std::size_t                                      _rank;
    std::size_t                                      _num_vertices;
    vertex_type                                      _base = 0;
    std::vector<GraphEdge>                           _edges;
    std::vector<std::pair<vertex_type, vertex_type>> _identifications;
  };

  // A folded, connected, base-trimmed rooted graph. Every graph produced by
  // the library is in canonical numbering: base 0, other vertices numbered by
  // breadth-first search from the base exploring letters in alphabet order
  // (a < b < ... < a' < b' < ...). Equality of canonical graphs is therefore
  // rooted isomorphism.
  class RootedGraph {
   public:
    static constexpr vertex_type none = UINT32_MAX;

    // The one-vertex graph with no edges.
    explicit RootedGraph(std::size_t rank = 1);

    // Validates foldedness and bounds; the result is put in canonical form.
    // Throws Error(parse_error) on a malformed edge list.
    static RootedGraph from_edges(std::size_t                   rank,
                                  std::size_t                   num_vertices,
                                  vertex_type                   base,
                                  std::vector<GraphEdge> const& edges);

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::size_t num_vertices() const noexcept {
      return _num_vertices;
    }
    [[nodiscard]] vertex_type base() const noexcept {
      return _base;
    }
    [[nodiscard]] std::size_t num_edges() const noexcept;

    // The endpoint of the x-labeled edge leaving v, reading edges backwards
    // for inverse letters; `none` if there is no such edge.
    [[nodiscard]] vertex_type target(vertex_type v, letter_type x) const {
      return x < _rank ? _out[v * _rank + x] : _in[v * _rank + (x - _rank)];
    }
    [[nodiscard]] std::size_t degree(vertex_type v) const;

    // Edges sorted by (source, label).
    [[nodiscard]] std::vector<GraphEdge> edges() const;
    // The endpoint reached by reading w from v, if w labels a path.
    [[nodiscard]] std::optional<vertex_type> read(vertex_type      v,
                                                  word_type const& w) const;

    bool operator==(RootedGraph const&) const = default;

   private:
    friend class GraphBuilder;

    std::size_t              _rank         = 1;
    std::size_t              _num_vertices = 1;
    vertex_type              _base         = 0;
    std::vector<vertex_type> _out;
    std::vector<vertex_type> _in;
  };

  // Union-find folding, base trimming, restriction to the base component and
  // canonical renumbering.
  [[nodiscard]] RootedGraph fold(LabeledGraph const& g);
  [[nodiscard]] LabeledGraph to_labeled(RootedGraph const& g);

  // The classical Stallings graph of <gens> <= F(A). Generators are freely
  // reduced first; empty ones are ignored.
  [[nodiscard]] RootedGraph stallings_free(std::vector<word_type> const& gens,
                                           std::size_t rank);

  // One completion step: glue every relator (and a a', a' a for letters that
  // do not occur in R) as a circle at every vertex, then fold.
  [[nodiscard]] RootedGraph attach_relators(RootedGraph const&  g,
                                            Presentation const& p);

  // Loop language at the base (initial = final = {base}).
  [[nodiscard]] Nfa loops_automaton(RootedGraph const& g);
  // Words labeling a path from the base (every state final).
  [[nodiscard]] Nfa paths_automaton(RootedGraph const& g);

  // u_p for every vertex p: the shortlex-least word labeling a path from the
  // base to p.
  [[nodiscard]] std::vector<word_type> spanning_words(RootedGraph const& g);
  // One reduced word u_p a u_q' per edge (p, a, q) outside the BFS tree.
  [[nodiscard]] std::vector<word_type> generators_from_graph(
      RootedGraph const& g);

  [[nodiscard]] RootedGraph canonical_form(RootedGraph const& g);
  [[nodiscard]] bool        rooted_isomorphic(RootedGraph const& g,
                                              RootedGraph const& h);

  [[nodiscard]] std::vector<std::size_t> distances_from_base(
      RootedGraph const& g);
  [[nodiscard]] std::size_t max_distance_from_base(RootedGraph const& g);
  [[nodiscard]] std::size_t diameter(RootedGraph const& g);

  // Restricts g to the vertices in `keep`, then to the base component, then
  // base-trims. Returns the surviving vertex set in g's numbering.
  [[nodiscard]] std::vector<bool> prune(RootedGraph const&       g,
                                        std::vector<bool> const& keep);
  // Induced subgraph on a pruned vertex set, canonically renumbered.
  [[nodiscard]] RootedGraph induced_subgraph(RootedGraph const&       g,
                                             std::vector<bool> const& keep);

  // Base component of the labeled product g x h, base-trimmed.
  [[nodiscard]] RootedGraph product_graph(RootedGraph const& g,
                                          RootedGraph const& h);

  // Number of freely reduced words of length <= k over a rank-r alphabet:
  // 1 + r/(r-1) ((2r-1)^k - 1) for r >= 2 and 1 + 2k for r = 1. Saturates
  // at UINT64_MAX.
  [[nodiscard]] std::uint64_t reduced_ball_size(std::size_t rank,
                                                std::size_t k);

}  // namespace stallings

#endif  // STALLINGS_ROOTED_GRAPH_HPP_

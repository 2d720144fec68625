#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stallings/bundled.hpp"
#include "stallings/rooted_graph.hpp"

using namespace stallings;

namespace {
  Alphabet const ab({"a", "b"});

  word_type w(std::string const& text) {
    return ab.parse(text);
  }

  std::vector<word_type> ws(std::vector<std::string> const& texts) {
    std::vector<word_type> out;
    for (auto const& t : texts) {
      out.push_back(w(t));
    }
    return out;
  }

  // base -a-> v with a b-loop at v
  RootedGraph aba() {
    return RootedGraph::from_edges(2, 2, 0, {{0, 0, 1}, {1, 1, 1}});
  }
}  // namespace

TEST_CASE("folding") {
  LabeledGraph two(2, 3);
  two.add_edge(0, 0, 1);
  two.add_edge(0, 0, 2);
  two.add_edge(1, 1, 1);
  two.add_edge(2, 1, 2);
  auto g = fold(two);
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 2);
  CHECK(g == aba());
  CHECK(fold(to_labeled(g)) == g);

  LabeledGraph loop(2);
  loop.add_path(0, w("a b a'"), 0);
  CHECK(fold(loop) == aba());
  CHECK(fold(loop) == oracle::classical_stallings(ws({"a b a'"}), 2));
}

TEST_CASE("free Stallings graphs") {
  auto a = stallings_free(ws({"a"}), 2);
  CHECK(a.num_vertices() == 1);
  CHECK(a.target(0, 0) == 0);
  auto both = stallings_free(ws({"a", "b"}), 2);
  CHECK(both.num_vertices() == 1);
  CHECK(both.num_edges() == 2);
  CHECK(stallings_free(ws({"a b a'"}), 2) == aba());
  // Unreduced generators are reduced; trivial ones are dropped.
  CHECK(stallings_free(ws({"a b b' a a'", "b b'"}), 2) == a);
}

TEST_CASE("relator attachment") {
  Presentation free(ab, {}, false);
  auto         h = stallings_free(ws({"a b a'"}), 2);
  CHECK(attach_relators(h, free) == h);

  auto z2 = bundled_group("Z2");
  auto g  = attach_relators(stallings_free(ws({"b a b'"}), 2), z2->presentation);
  CHECK(g.read(g.base(), w("a")) == g.base());

  Presentation c2(Alphabet({"a"}), {word_type{0, 0}}, false);
  auto         one = attach_relators(RootedGraph(1), c2);
  CHECK(one.read(0, word_type{0, 0}) == 0u);
}

TEST_CASE("loop automaton") {
  auto a     = stallings_free(ws({"a"}), 2);
  auto loops = loops_automaton(a);
  CHECK(loops.accepts(w("a a a")));
  CHECK(loops.accepts(w("a' a'")));
  CHECK(loops.accepts(w("a a' a a a'")));
  CHECK(loops.accepts({}));
  CHECK_FALSE(loops.accepts(w("b")));
  CHECK(loops_automaton(aba()).accepts(w("a b a'")));
  CHECK(loops_automaton(RootedGraph(2)).accepts({}));
  CHECK(paths_automaton(aba()).accepts(w("a b b")));
  CHECK_FALSE(paths_automaton(aba()).accepts(w("b")));
}

TEST_CASE("generators from graphs") {
  CHECK(generators_from_graph(stallings_free(ws({"a"}), 2)) == ws({"a"}));
  CHECK(generators_from_graph(aba()) == ws({"a b a'"}));
  CHECK(generators_from_graph(RootedGraph(2)).empty());
  CHECK(spanning_words(aba()) == ws({"", "a"}));
}

TEST_CASE("canonical forms") {
  auto g = aba();
  CHECK(rooted_isomorphic(g, g));
  CHECK_FALSE(rooted_isomorphic(stallings_free(ws({"a"}), 2),
                                stallings_free(ws({"b"}), 2)));
  // The same graph numbered with the base last.
  auto h = RootedGraph::from_edges(2, 2, 1, {{1, 0, 0}, {0, 1, 0}});
  CHECK(rooted_isomorphic(g, h));
  CHECK(canonical_form(h) == g);
}

TEST_CASE("distances") {
  CHECK(max_distance_from_base(RootedGraph(2)) == 0);
  CHECK(max_distance_from_base(aba()) == 1);
  auto path = stallings_free(ws({"a a a b a' a' a'"}), 2);
  CHECK(max_distance_from_base(path) == 3);
  CHECK(diameter(path) == 3);
  CHECK(distances_from_base(aba()) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("ball sizes") {
  CHECK(reduced_ball_size(2, 0) == 1);
  CHECK(reduced_ball_size(2, 1) == 5);
  CHECK(reduced_ball_size(2, 2) == 17);
  CHECK(reduced_ball_size(3, 2) == 1 + 6 + 30);
  CHECK(reduced_ball_size(1, 4) == 9);
  CHECK(reduced_ball_size(2, 200) == UINT64_MAX);
}

TEST_CASE("products") {
  // <a, b b> n <b> = <b b>
  auto p = product_graph(stallings_free(ws({"a", "b b"}), 2),
                         stallings_free(ws({"b"}), 2));
  CHECK(p == stallings_free(ws({"b b"}), 2));
}

TEST_CASE("random graphs against the naive folding oracle") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    std::size_t const      rank = 2 + i % 2;
    std::vector<word_type> gens;
    for (int j = 1 + rng() % 3; j > 0; --j) {
      gens.push_back(oracle::random_reduced_word(rng, rank, 1 + rng() % 7));
    }
    auto g = stallings_free(gens, rank);
    REQUIRE(g == oracle::classical_stallings(gens, rank));
    CHECK(fold(to_labeled(g)) == g);
    CHECK(stallings_free(generators_from_graph(g), rank) == g);

    // Free reduction of sampled loops.
    auto loops = loops_automaton(g);
    for (auto const& u : enumerate_words(loops, 6, 200)) {
      CHECK(loops.accepts(free_reduce(u, rank)));
    }

    // Relabelling the vertices does not change the canonical form.
    std::vector<vertex_type> perm(g.num_vertices());
    for (vertex_type v = 0; v < perm.size(); ++v) {
      perm[v] = v;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<GraphEdge> edges;
    for (auto const& e : g.edges()) {
      edges.push_back({perm[e.source], e.label, perm[e.target]});
    }
    auto h = RootedGraph::from_edges(rank, g.num_vertices(), perm[g.base()], edges);
    CHECK(rooted_isomorphic(g, h));
  }
}

TEST_CASE("malformed edge lists are rejected") {
  CHECK_THROWS((void) RootedGraph::from_edges(2, 2, 0, {{0, 0, 1}, {0, 0, 0}}));
  CHECK_THROWS((void) RootedGraph::from_edges(2, 2, 0, {{0, 0, 5}}));
}

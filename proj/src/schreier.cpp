#include "stallings/schreier.hpp"

#include <algorithm>
#include <numeric>

#include "stallings/error.hpp"

namespace stallings {

  bool membership_via_graph(AutomaticStructure const& as,
                            RootedGraph const&        g,
                            word_type const&          w) {
    return !is_empty(intersect(l_representatives(as, w), loops_automaton(g)));
  }

  RootedGraph project_to_schreier(AutomaticStructure const& as,
                                  Certificate const&        cert) {
    if (!cert.certified()) {
      throw Error(error_kind::budget_exhausted,
                  "cannot project an uncertified graph");
    }
    RootedGraph const& g    = cert.graph;
    std::size_t const  rank = g.rank();
    auto const         u    = spanning_words(g);
    // Membership of u_p u_q' is an equivalence relation on vertices, so
    // comparing against one representative per class suffices.
    std::vector<vertex_type> reps;
    LabeledGraph             merged = to_labeled(g);
    for (vertex_type q = 0; q < g.num_vertices(); ++q) {
      auto const uq_inv = inverse_word(u[q], rank);
      bool       found  = false;
      for (auto p : reps) {
        if (membership_via_graph(as, g, concat(u[p], uq_inv))) {
          merged.identify(p, q);
          found = true;
          break;
        }
      }
      if (!found) {
        reps.push_back(q);
      }
    }
    auto result = fold(merged);
    if (!is_stallings_like(as, result, cert.generators)) {
      throw Error(error_kind::certification_regression,
                  "the projected graph is not Stallings-like");
    }
    return result;
  }

  namespace {
    // Adds every Schreier edge p -a-> q between existing vertices, using the
    // membership of u_p a u_q' in H.
    RootedGraph saturate(AutomaticStructure const& as, RootedGraph const& g) {
      std::size_t const rank = g.rank();
      auto const        u    = spanning_words(g);
      LabeledGraph      result = to_labeled(g);
      std::vector<bool> has_out(g.num_vertices() * rank, false);
      std::vector<bool> has_in(g.num_vertices() * rank, false);
      for (vertex_type v = 0; v < g.num_vertices(); ++v) {
        for (letter_type a = 0; a < rank; ++a) {
          has_out[v * rank + a] = g.target(v, a) != RootedGraph::none;
          has_in[v * rank + a]  = g.target(v, inverse_letter(a, rank))
                                 != RootedGraph::none;
        }
      }
      for (letter_type a = 0; a < rank; ++a) {
        for (vertex_type p = 0; p < g.num_vertices(); ++p) {
          if (has_out[p * rank + a]) {
            continue;
          }
          for (vertex_type q = 0; q < g.num_vertices(); ++q) {
            if (has_in[q * rank + a]) {
              continue;
            }
            word_type w = u[p];
            w.push_back(a);
            w = concat(w, inverse_word(u[q], rank));
            if (membership_via_graph(as, g, w)) {
              result.add_edge(p, a, q);
              has_out[p * rank + a] = true;
              has_in[q * rank + a]  = true;
              break;
            }
          }
        }
      }
      return fold(result);
    }
  }  // namespace

  RootedGraph minimize(AutomaticStructure const&       as,
                       RootedGraph const&              g,
                       std::vector<word_type> const&   gens,
                       std::vector<vertex_type> const& order) {
    std::vector<bool> alive(g.num_vertices(), true);
    for (auto v : order) {
      if (v == g.base() || !alive[v]) {
        continue;
      }
      auto trial = alive;
      trial[v]   = false;
      trial      = prune(g, trial);
      if (is_stallings_like(as, induced_subgraph(g, trial), gens)) {
        alive = std::move(trial);
      }
    }
    auto result = saturate(as, induced_subgraph(g, alive));
    if (!is_stallings_like(as, result, gens)) {
      throw Error(error_kind::certification_regression,
                  "the minimized graph is not Stallings-like");
    }
    return result;
  }

  RootedGraph minimize(AutomaticStructure const&     as,
                       RootedGraph const&            g,
                       std::vector<word_type> const& gens) {
    auto const               dist = distances_from_base(g);
    std::vector<vertex_type> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&dist](auto x, auto y) {
      return dist[x] > dist[y];
    });
    return minimize(as, g, gens, order);
  }

  SubgroupHandle handle_from_certificate(GroupPtr const&    g,
                                         Certificate const& cert) {
    auto const& as = g->structure;
    SubgroupHandle h;
    h.group          = g;
    h.gens           = cert.generators;
    h.stallings_like = cert.graph;
    auto projected   = project_to_schreier(as, cert);
    h.canonical      = minimize(as, projected, cert.generators);
    h.qc_constant    = max_distance_from_base(h.canonical);
    h.stats.completion_iterations   = cert.iterations_used;
    h.stats.stallings_like_vertices = cert.graph.num_vertices();
    h.stats.projected_vertices      = projected.num_vertices();
    h.stats.canonical_vertices      = h.canonical.num_vertices();
    return h;
  }

  PipelineResult stallings_graph(GroupPtr const&               g,
                                 std::vector<word_type> const& gens,
                                 PipelineMode const&           mode) {
    PipelineResult result;
    auto const&    as = g->structure;
    auto const&    p  = g->presentation;
    if (mode.known_k) {
      result.certificate = complete_with_constant(as, p, gens, *mode.known_k);
    } else {
      result.certificate = complete(as, p, gens, mode.options);
    }
    if (result.certificate.certified()) {
      result.handle = handle_from_certificate(g, result.certificate);
    }
    return result;
  }

  SubgroupHandle subgroup(GroupPtr const&               g,
                          std::vector<word_type> const& gens,
                          PipelineMode const&           mode) {
    auto result = stallings_graph(g, gens, mode);
    if (!result.handle) {
      throw Error(error_kind::budget_exhausted,
                  "completion did not certify a Stallings-like graph within "
                  + std::to_string(result.certificate.iterations_used)
                  + " iterations");
    }
    return std::move(*result.handle);
  }

}  // namespace stallings

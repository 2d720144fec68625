#ifndef STALLINGS_SCHREIER_HPP_
#define STALLINGS_SCHREIER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "stallings/autostructure.hpp"
#include "stallings/bundled.hpp"
#include "stallings/completion.hpp"
#include "stallings/rooted_graph.hpp"

namespace stallings {

  struct PipelineStats {
    std::size_t completion_iterations  = 0;
    std::size_t stallings_like_vertices = 0;
    std::size_t projected_vertices     = 0;
    std::size_t canonical_vertices     = 0;
  };

  struct SubgroupHandle {
    GroupPtr               group;
    std::vector<word_type> gens;
    RootedGraph            stallings_like;
    // Gamma_L(H), in canonical numbering.
    RootedGraph   canonical;
    std::size_t   qc_constant = 0;
    PipelineStats stats;

    [[nodiscard]] AutomaticStructure const& structure() const {
      return group->structure;
    }
  };

  // Whether w represents an element of H, for G Stallings-like for H.
  [[nodiscard]] bool membership_via_graph(AutomaticStructure const& as,
                                          RootedGraph const&        g,
                                          word_type const&          w);

  // Identifies p and q whenever u_p u_q' lies in H, then folds. Throws
  // Error(certification_regression) if the result is not Stallings-like and
  // Error(budget_exhausted) if the certificate is not certified.
  [[nodiscard]] RootedGraph project_to_schreier(AutomaticStructure const& as,
                                                Certificate const&        cert);

  // Removes dispensable vertices (farthest from the base first), then adds
  // every Schreier edge between the remaining vertices. The result is the
  // subgraph of Schreier(G, H) induced on the vertices of Gamma_L(H).
  [[nodiscard]] RootedGraph minimize(AutomaticStructure const&     as,
                                     RootedGraph const&            g,
                                     std::vector<word_type> const& gens);
  // Same, with an explicit deletion order over g's vertices; used to check
  // that the order does not matter.
  [[nodiscard]] RootedGraph minimize(AutomaticStructure const&       as,
                                     RootedGraph const&              g,
                                     std::vector<word_type> const&   gens,
                                     std::vector<vertex_type> const& order);

  struct PipelineMode {
    // Known quasi-convexity constant; budgeted completion when absent.
    std::optional<std::size_t> known_k;
    CompletionOptions          options;
  };

  struct PipelineResult {
    Certificate                   certificate;
    std::optional<SubgroupHandle> handle;
  };

  // complete, project_to_schreier, minimize. The handle is absent when the
  // budget ran out. Throws Error(invalid_constant) for a wrong known_k.
  [[nodiscard]] PipelineResult stallings_graph(GroupPtr const&               g,
                                               std::vector<word_type> const& gens,
                                               PipelineMode const& mode = {});
  // Same, raising Error(budget_exhausted) instead of returning no handle.
  [[nodiscard]] SubgroupHandle subgroup(GroupPtr const&               g,
                                        std::vector<word_type> const& gens,
                                        PipelineMode const&           mode = {});
  // Projection and minimization of an already certified graph.
  [[nodiscard]] SubgroupHandle handle_from_certificate(GroupPtr const&    g,
                                                       Certificate const& cert);

}  // namespace stallings

#endif  // STALLINGS_SCHREIER_HPP_

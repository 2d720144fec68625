#ifndef STALLINGS_COMPLETION_HPP_
#define STALLINGS_COMPLETION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "stallings/autostructure.hpp"
#include "stallings/rooted_graph.hpp"
#include "stallings/words.hpp"

namespace stallings {

  struct Budget {
    std::size_t max_iterations = 12;
    std::size_t max_vertices   = 200000;
    std::size_t check_stride   = 1;
  };

  enum class verdict { certified, budget_exhausted };

  std::string_view to_string(verdict v) noexcept;

  struct IterationRecord {
    std::size_t iteration = 0;
    std::size_t vertices  = 0;
    bool        checked   = false;
    bool        certified = false;
    // Loop language of this graph contained in the next one; only computed
    // when requested and only for steps that were executed.
    std::optional<bool> monotone;
  };

  struct Certificate {
    RootedGraph                  graph;
    std::vector<word_type>       generators;
    verdict                      result = verdict::budget_exhausted;
    std::size_t                  iterations_used = 0;
    std::vector<IterationRecord> log;

    [[nodiscard]] bool certified() const noexcept {
      return result == verdict::certified;
    }
  };

  struct CompletionOptions {
    Budget                                       budget;
    bool                                         check_monotone = false;
    std::function<void(IterationRecord const&)> progress;
  };

  // K = loops(G) n L must contain the representatives of 1 and be closed
  // under M_h and M_h' for every generator h.
  [[nodiscard]] bool is_stallings_like(AutomaticStructure const&     as,
                                       RootedGraph const&            g,
                                       std::vector<word_type> const& gens);

  // Runs G_0 = stallings_free(gens), G_{i+1} = attach_relators(G_i) until a
  // certification check succeeds or the budget runs out.
  [[nodiscard]] Certificate complete(AutomaticStructure const&     as,
                                     Presentation const&           p,
                                     std::vector<word_type> const& gens,
                                     CompletionOptions const&      options = {});

  // Continues an exhausted run from its last graph; the budget counts total
  // iterations including those already used.
  [[nodiscard]] Certificate resume(AutomaticStructure const& as,
                                   Presentation const&       p,
                                   Certificate const&        previous,
                                   CompletionOptions const&  options);

  // Exactly max(k, 1) steps and one check. Throws Error(invalid_constant) if
  // the check fails.
  [[nodiscard]] Certificate complete_with_constant(
      AutomaticStructure const&     as,
      Presentation const&           p,
      std::vector<word_type> const& gens,
      std::size_t                   k);

}  // namespace stallings

#endif  // STALLINGS_COMPLETION_HPP_

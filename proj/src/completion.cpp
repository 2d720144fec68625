#include "stallings/completion.hpp"

#include <algorithm>
#include <string>

#include "stallings/error.hpp"

namespace stallings {

  std::string_view to_string(verdict v) noexcept {
    return v == verdict::certified ? "certified" : "budget_exhausted";
  }

  namespace {
    std::vector<word_type> reduced_generators(std::vector<word_type> const& gens,
                                              std::size_t                   rank) {
      std::vector<word_type> result;
      for (auto const& h : gens) {
        auto r = free_reduce(h, rank);
        if (!r.empty()) {
          result.push_back(std::move(r));
        }
      }
      return result;
    }

    // Vertices of the unfolded graph built by one completion step.
    std::size_t unfolded_size(RootedGraph const& g, Presentation const& p) {
      std::size_t per_vertex = 0;
      for (auto const& r : p.relators) {
        per_vertex += r.size() - 1;
      }
      per_vertex += p.letters_missing_from_relators().size() * 2;
      return g.num_vertices() * (1 + per_vertex);
    }

    Certificate run(AutomaticStructure const& as,
                    Presentation const&       p,
                    Certificate               state,
                    CompletionOptions const&  options) {
      auto const& budget = options.budget;
      std::size_t stride = budget.check_stride == 0 ? 1 : budget.check_stride;
      while (true) {
        std::size_t     i = state.iterations_used;
        IterationRecord record;
        record.iteration = i;
        record.vertices  = state.graph.num_vertices();

        bool const last = i >= budget.max_iterations
                          || unfolded_size(state.graph, p) > budget.max_vertices;
        if (i % stride == 0 || last) {
          record.checked   = true;
          record.certified = is_stallings_like(as, state.graph, state.generators);
        }
        if (record.certified || last) {
          state.result
              = record.certified ? verdict::certified : verdict::budget_exhausted;
          state.log.push_back(record);
          if (options.progress) {
            options.progress(record);
          }
          return state;
        }

        auto next = attach_relators(state.graph, p);
        if (options.check_monotone) {
          record.monotone
              = is_subset(loops_automaton(state.graph), loops_automaton(next));
        }
        state.log.push_back(record);
        if (options.progress) {
          options.progress(record);
        }
        state.graph = std::move(next);
        ++state.iterations_used;
      }
    }
  }  // namespace

  bool is_stallings_like(AutomaticStructure const&     as,
                         RootedGraph const&            g,
                         std::vector<word_type> const& gens) {
    Nfa const k = trim(intersect(loops_automaton(g), as.word_acceptor));
    if (!is_subset(l_representatives(as, {}), k)) {
      return false;
    }
    std::size_t const rank = as.rank();
    for (auto const& h : reduced_generators(gens, rank)) {
      if (!is_subset(multiply_word(as, k, h), k)
          || !is_subset(multiply_word(as, k, inverse_word(h, rank)), k)) {
        return false;
      }
    }
    return true;
  }

  Certificate complete(AutomaticStructure const&     as,
                       Presentation const&           p,
                       std::vector<word_type> const& gens,
                       CompletionOptions const&      options) {
    Certificate state;
    state.generators = reduced_generators(gens, as.rank());
    state.graph      = stallings_free(state.generators, as.rank());
    return run(as, p, std::move(state), options);
  }

  Certificate resume(AutomaticStructure const& as,
                     Presentation const&       p,
                     Certificate const&        previous,
                     CompletionOptions const&  options) {
    if (previous.certified()) {
      return previous;
    }
    Certificate state = previous;
    // The last graph was already checked; take one step before checking
    // again.
    if (state.iterations_used >= options.budget.max_iterations) {
      return state;
    }
    IterationRecord record;
    record.iteration = state.iterations_used;
    record.vertices  = state.graph.num_vertices();
    auto next        = attach_relators(state.graph, p);
    if (options.check_monotone) {
      record.monotone
          = is_subset(loops_automaton(state.graph), loops_automaton(next));
    }
    if (!state.log.empty() && state.log.back().iteration == record.iteration) {
      record.checked   = state.log.back().checked;
      state.log.back() = record;
    } else {
      state.log.push_back(record);
    }
    state.graph = std::move(next);
    ++state.iterations_used;
    return run(as, p, std::move(state), options);
  }

  Certificate complete_with_constant(AutomaticStructure const&     as,
                                     Presentation const&           p,
                                     std::vector<word_type> const& gens,
                                     std::size_t                   k) {
    Certificate cert;
    cert.generators = reduced_generators(gens, as.rank());
    cert.graph      = stallings_free(cert.generators, as.rank());
    for (std::size_t i = 0; i < std::max<std::size_t>(k, 1); ++i) {
      cert.log.push_back({i, cert.graph.num_vertices(), false, false, {}});
      cert.graph = attach_relators(cert.graph, p);
      ++cert.iterations_used;
    }
    bool ok = is_stallings_like(as, cert.graph, cert.generators);
    cert.log.push_back({cert.iterations_used, cert.graph.num_vertices(), true, ok, {}});
    if (!ok) {
      throw Error(error_kind::invalid_constant,
                  "the graph after " + std::to_string(cert.iterations_used)
                      + " steps is not Stallings-like");
    }
    cert.result = verdict::certified;
    return cert;
  }

}  // namespace stallings

#ifndef STALLINGS_NFA_HPP_
#define STALLINGS_NFA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stallings/alphabet.hpp"

namespace stallings {

  using state_type = std::uint32_t;

  // A one-tape nondeterministic automaton over the symbols 0..num_symbols-1.
  // States are dense indices. Transition lists are kept sorted by
  // (symbol, target) and free of duplicates once `normalize` has run; every
  // construction in this library returns normalized automata.
  class Nfa {
   public:
    struct Edge {
      letter_type symbol;
      state_type  target;

      auto operator<=>(Edge const&) const = default;
    };

    Nfa() = default;
    explicit Nfa(std::size_t num_symbols) : _num_symbols(num_symbols) {}

    state_type add_state();
    void       add_states(std::size_t n);
    void       add_transition(state_type from, letter_type a, state_type to);
    void       add_initial(state_type s);
    void       add_final(state_type s);
    void       set_final(state_type s, bool value);
    void       clear_initial();

    [[nodiscard]] std::size_t num_symbols() const noexcept {
      return _num_symbols;
    }
    [[nodiscard]] std::size_t num_states() const noexcept {
      return _out.size();
    }
    [[nodiscard]] std::size_t num_transitions() const noexcept;

    [[nodiscard]] std::vector<Edge> const& out(state_type s) const {
      return _out[s];
    }
    [[nodiscard]] std::vector<state_type> const& initial() const noexcept {
      return _initial;
    }
    [[nodiscard]] bool is_final(state_type s) const {
      return _final[s];
    }
    [[nodiscard]] std::vector<state_type> finals() const;

    [[nodiscard]] bool is_deterministic() const;
    // Deterministic with exactly one successor per (state, symbol).
    [[nodiscard]] bool is_complete_deterministic() const;
    // Successor of a deterministic automaton, if any.
    [[nodiscard]] std::optional<state_type> step(state_type  s,
                                                 letter_type a) const;

    [[nodiscard]] bool accepts(word_type const& w) const;

    // Sorts and dedupes transition lists and the initial set.
    void normalize();

   private:
    std::size_t                    _num_symbols = 0;
    std::vector<std::vector<Edge>> _out;
    std::vector<state_type>        _initial;
    std::vector<bool>              _final;
  };

  // The language {w} of a single word.
  [[nodiscard]] Nfa word_automaton(word_type const& w, std::size_t num_symbols);
  // All words over the alphabet.
  [[nodiscard]] Nfa universal_automaton(std::size_t num_symbols);
  // Freely reduced words over an inverse-closed alphabet of the given rank.
  [[nodiscard]] Nfa reduced_words_automaton(std::size_t rank);

  // Keeps the states that are reachable from an initial state and co-reachable
  // to a final state, renumbered in order of first discovery.
  [[nodiscard]] Nfa trim(Nfa const& a);

  [[nodiscard]] Nfa intersect(Nfa const& a, Nfa const& b);
  [[nodiscard]] Nfa unite(Nfa const& a, Nfa const& b);
  [[nodiscard]] Nfa determinize_complete(Nfa const& a);
  [[nodiscard]] Nfa complement(Nfa const& a);
  [[nodiscard]] Nfa reverse_invert(Nfa const& a);

  [[nodiscard]] bool is_empty(Nfa const& a);
  [[nodiscard]] bool is_finite_language(Nfa const& a);
  [[nodiscard]] bool is_subset(Nfa const& a, Nfa const& b);
  // A shortlex-least word of L(a) \ L(b), if any.
  [[nodiscard]] std::optional<word_type> subset_counterexample(Nfa const& a,
                                                               Nfa const& b);
  [[nodiscard]] bool languages_equal(Nfa const& a, Nfa const& b);

  // Shortlex-least accepted word.
  [[nodiscard]] std::optional<word_type> shortest_accepted(Nfa const& a);

  // Accepted words of length <= max_length in shortlex order, at most `cap` of
  // them (the result is truncated when the cap is hit).
  [[nodiscard]] std::vector<word_type> enumerate_words(Nfa const&  a,
                                                       std::size_t max_length,
                                                       std::size_t cap);
  // Every word of L(a), in shortlex order, or nullopt when L(a) is infinite.
  // Throws Error(too_many_elements) beyond `cap` words.
  [[nodiscard]] std::optional<std::vector<word_type>> finite_language_words(
      Nfa const&  a,
      std::size_t cap);

}  // namespace stallings

#endif  // STALLINGS_NFA_HPP_

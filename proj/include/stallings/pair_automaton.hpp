#ifndef STALLINGS_PAIR_AUTOMATON_HPP_
#define STALLINGS_PAIR_AUTOMATON_HPP_

#include <cstddef>
#include <utility>

#include "stallings/alphabet.hpp"
#include "stallings/nfa.hpp"

namespace stallings {

  // A synchronous two-tape automaton over (A~ u {_})^2, where _ is the padding
  // symbol. It is stored as a one-tape automaton over the encoded symbols
  // x * (2r + 1) + y so that the one-tape machinery applies unchanged.
  class PairAutomaton {
   public:
    PairAutomaton() = default;
    explicit PairAutomaton(std::size_t rank)
        : _rank(rank), _nfa((2 * rank + 1) * (2 * rank + 1)) {}
    PairAutomaton(std::size_t rank, Nfa nfa);

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] letter_type padding() const noexcept {
      return static_cast<letter_type>(2 * _rank);
    }
    [[nodiscard]] letter_type encode(letter_type x, letter_type y) const noexcept {
      return x * static_cast<letter_type>(2 * _rank + 1) + y;
    }
    [[nodiscard]] std::pair<letter_type, letter_type> decode(
        letter_type symbol) const noexcept {
      auto width = static_cast<letter_type>(2 * _rank + 1);
      return {symbol / width, symbol % width};
    }

    [[nodiscard]] Nfa const& nfa() const noexcept {
      return _nfa;
    }
    [[nodiscard]] Nfa& nfa() noexcept {
      return _nfa;
    }

    // Whether (u, v), padded per the convention, is accepted.
    [[nodiscard]] bool accepts(word_type const& u, word_type const& v) const;

   private:
    std::size_t _rank = 0;
    Nfa         _nfa;
  };

  // Encodes (u _^n, v _^m) with |u| + n = |v| + m and min(n, m) = 0.
  [[nodiscard]] word_type pad_pair(word_type const& u,
                                   word_type const& v,
                                   std::size_t      rank);

  // Pairs over the padded alphabet that respect the padding convention: no
  // (_, _) column and, once a tape is padded, it stays padded.
  [[nodiscard]] Nfa padding_convention_automaton(std::size_t rank);

  // Adds a fresh sink s, (_, _) edges from every final state to s and a
  // (_, _) loop on s; s becomes the unique final state.
  [[nodiscard]] PairAutomaton pad_close(PairAutomaton const& m);

  // The diagonal {(u, u) : u in L} of a word acceptor.
  [[nodiscard]] PairAutomaton diagonal_pair_automaton(Nfa const& acceptor,
                                                      std::size_t rank);

}  // namespace stallings

#endif  // STALLINGS_PAIR_AUTOMATON_HPP_

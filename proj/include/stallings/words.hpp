#ifndef STALLINGS_WORDS_HPP_
#define STALLINGS_WORDS_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "stallings/alphabet.hpp"
#include "stallings/nfa.hpp"

namespace stallings {

  using word_set = std::set<word_type>;

  // Closes a set of relators under inverses and cyclic permutations. Each
  // relator is cyclically reduced first; a relator that reduces to the empty
  // word raises Error(relator_trivial).
  [[nodiscard]] word_set symmetrize(word_set const& relators, std::size_t rank);

  struct Presentation {
    Alphabet alphabet;
    // Symmetrized relators.
    word_set relators;
    // Trusted input: the Dehn algorithm over `relators` solves the word
    // problem. Never verified.
    bool dehn = false;

    Presentation() = default;
    // Symmetrizes `raw_relators`.
    Presentation(Alphabet alphabet, word_set const& raw_relators, bool dehn);

    [[nodiscard]] std::size_t rank() const noexcept {
      return alphabet.rank();
    }
    // Letters a in A (positive) such that neither a nor a' occurs in R.
    [[nodiscard]] std::vector<letter_type> letters_missing_from_relators() const;
  };

  struct RewriteRule {
    word_type lhs;
    word_type rhs;

    auto operator<=>(RewriteRule const&) const = default;
  };

  // The length-reducing system { r1 -> r2^-1 : r1 r2 in R, |r1| > |r2| } plus
  // the free cancellations a a' -> 1.
  class DehnSystem {
   public:
    DehnSystem() = default;
    explicit DehnSystem(Presentation const& p);

    [[nodiscard]] std::vector<RewriteRule> const& rules() const noexcept {
      return _rules;
    }
    [[nodiscard]] std::size_t max_lhs_length() const noexcept {
      return _max_lhs;
    }
    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] bool dehn_flag() const noexcept {
      return _dehn;
    }

    // Scans left to right; at the leftmost position where a left side occurs
    // the longest matching left side is rewritten (ties on the same left side
    // resolved by the shortlex-least right side), then the scan resumes
    // max_lhs_length() positions back.
    [[nodiscard]] word_type reduce(word_type const& w) const;

    // Throws Error(not_dehn_presentation) unless the presentation was flagged.
    [[nodiscard]] bool word_problem(word_type const& w) const;

   private:
    std::size_t              _rank    = 0;
    std::size_t              _max_lhs = 0;
    bool                     _dehn    = false;
    std::vector<RewriteRule> _rules;
    // Chosen right side per left side, used by `reduce`.
    std::map<word_type, word_type> _chosen;
  };

  [[nodiscard]] inline DehnSystem dehn_system(Presentation const& p) {
    return DehnSystem(p);
  }
  [[nodiscard]] inline word_type dehn_reduce(word_type const&  w,
                                             DehnSystem const& d) {
    return d.reduce(w);
  }
  [[nodiscard]] inline bool dehn_word_problem(word_type const&  w,
                                              DehnSystem const& d) {
    return d.word_problem(w);
  }

  // Words avoiding a a', a' a and every prefix r1 of a relator r with
  // |r1| > |r| / 2, built with an Aho-Corasick factor-avoidance automaton.
  [[nodiscard]] Nfa dehn_language_automaton(Presentation const& p);

}  // namespace stallings

#endif  // STALLINGS_WORDS_HPP_

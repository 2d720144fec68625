#ifndef STALLINGS_AUTOSTRUCTURE_HPP_
#define STALLINGS_AUTOSTRUCTURE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stallings/alphabet.hpp"
#include "stallings/nfa.hpp"
#include "stallings/pair_automaton.hpp"

namespace stallings {

  // Returns true iff the word represents the identity of the group.
  using WordOracle = std::function<bool(word_type const&)>;

  struct StructureFlags {
    bool geodesic       = false;
    bool inverse_closed = false;
    bool extendable     = false;
    bool unique_reps    = false;
    // Every element has finitely many L-representatives (implied by
    // unique_reps).
    bool finite_reps = false;

    bool operator==(StructureFlags const&) const = default;
  };

  struct AutomaticStructure {
    Alphabet alphabet;
    Nfa      word_acceptor;
    // Indexed by letter (0..2r-1); a missing multiplier is nullopt.
    std::vector<std::optional<PairAutomaton>> multipliers;
    // The multiplier for the identity element; optional.
    std::optional<PairAutomaton> identity_multiplier;
    word_type                    identity_rep;
    StructureFlags               flags;
    std::optional<std::size_t>   delta;

    [[nodiscard]] std::size_t rank() const noexcept {
      return alphabet.rank();
    }
    [[nodiscard]] bool has_finite_reps() const noexcept {
      return flags.unique_reps || flags.finite_reps;
    }
  };

  // Applies one multiplier to K: the L-representatives v with (u, v)
  // accepted for some u in K. K is determinized and completed first.
  [[nodiscard]] Nfa apply_multiplier(Nfa const& k, PairAutomaton const& m);

  // M_x(K). Throws Error(no_multiplier) when x has no multiplier.
  [[nodiscard]] Nfa multiply(AutomaticStructure const& as,
                             Nfa const&                k,
                             letter_type               x);
  // M_1(K). Uses the identity multiplier, or K itself (which is then already
  // closed under representatives) when the structure has unique
  // representatives; otherwise throws Error(no_multiplier).
  [[nodiscard]] Nfa multiply_identity(AutomaticStructure const& as,
                                      Nfa const&                k);
  // M_h(K), one letter at a time on the free reduction of h.
  [[nodiscard]] Nfa multiply_word(AutomaticStructure const& as,
                                  Nfa const&                k,
                                  word_type const&          h);

  [[nodiscard]] Nfa l_representatives(AutomaticStructure const& as,
                                      word_type const&          w);
  // Throws Error(internal_inconsistency) if w has no representative.
  [[nodiscard]] word_type some_l_representative(AutomaticStructure const& as,
                                                word_type const&          w);

  struct ValidationCheck {
    std::string name;
    bool        passed = true;
    std::string detail;
  };

  struct ValidationReport {
    std::vector<ValidationCheck> checks;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] ValidationCheck const* find(std::string const& name) const;
  };

  // Structural checks plus sampled soundness of the multipliers on every
  // u in L with |u| <= sample_depth. With an oracle, images are also checked
  // to represent u x. Never throws.
  [[nodiscard]] ValidationReport validate(
      AutomaticStructure const&        as,
      std::size_t                      sample_depth,
      std::optional<WordOracle> const& oracle = std::nullopt);

}  // namespace stallings

#endif  // STALLINGS_AUTOSTRUCTURE_HPP_

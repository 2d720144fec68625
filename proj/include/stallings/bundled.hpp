#ifndef STALLINGS_BUNDLED_HPP_
#define STALLINGS_BUNDLED_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stallings/autostructure.hpp"
#include "stallings/words.hpp"

namespace stallings {

  // A group given by a presentation together with an automatic structure,
  // and, for the bundled groups, an independent solution of the word problem
  // used for validation and testing.
  struct Group {
    std::string               name;
    Presentation              presentation;
    AutomaticStructure        structure;
    std::optional<WordOracle> oracle;
  };

  using GroupPtr = std::shared_ptr<Group const>;

  // F1, F2, F3, Z2, Z2x3, S3, D4.
  [[nodiscard]] std::vector<std::string> bundled_names();
  // Throws Error(unknown_group).
  [[nodiscard]] GroupPtr bundled_group(std::string const& name);

  using NormalForm = std::function<word_type(word_type const&)>;

  // Multiplier for `target` over a deterministic acceptor, by tracking the
  // word difference u_i^-1 v_i of the prefixes read so far. `normal_form` must
  // return geodesic normal forms; differences longer than `radius` are cut.
  // The result accepts exactly the pairs (u, v) of L x L with v = u target
  // whose prefix differences stay in the ball.
  [[nodiscard]] PairAutomaton word_difference_multiplier(
      Nfa const&        acceptor,
      std::size_t       rank,
      NormalForm const& normal_form,
      word_type const&  target,
      std::size_t       radius);

  // Normal forms of the bundled infinite groups.
  [[nodiscard]] word_type z2_normal_form(word_type const& w);
  [[nodiscard]] word_type z2x3_normal_form(word_type const& w);

}  // namespace stallings

#endif  // STALLINGS_BUNDLED_HPP_

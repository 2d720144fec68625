#ifndef STALLINGS_IO_HPP_
#define STALLINGS_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "stallings/bundled.hpp"
#include "stallings/completion.hpp"
#include "stallings/schreier.hpp"

namespace stallings {

  using json = nlohmann::json;

  // {states, alphabet, transitions: [[p, "a'", q], ...], initial, final}
  [[nodiscard]] json nfa_to_json(Nfa const& a, Alphabet const& alph);
  [[nodiscard]] Nfa  nfa_from_json(json const& j, Alphabet const& alph);

  // As above with "padding": "_" and transitions [[p, "a", "_", q], ...].
  [[nodiscard]] json          pair_to_json(PairAutomaton const& m,
                                           Alphabet const&      alph);
  [[nodiscard]] PairAutomaton pair_from_json(json const& j, Alphabet const& alph);

  // The automaton schema over positive letters plus "base".
  [[nodiscard]] json        graph_to_json(RootedGraph const& g, Alphabet const& alph);
  [[nodiscard]] RootedGraph graph_from_json(json const& j, Alphabet const& alph);
  // Base vertex double-circled, one edge per positive letter.
  [[nodiscard]] std::string graph_to_dot(RootedGraph const& g,
                                         Alphabet const&    alph,
                                         std::string const& name = "G");

  // {name, alphabet, relators, dehn, automatic: {word_acceptor, multipliers,
  // identity_rep, flags, delta?}}. The multiplier of the identity is keyed
  // "1".
  [[nodiscard]] json     group_to_json(Group const& g);
  [[nodiscard]] GroupPtr group_from_json(json const& j);
  // A bundled name or the path of a group spec file.
  [[nodiscard]] GroupPtr load_group(std::string const& name_or_path);

  [[nodiscard]] std::vector<std::string> format_words(
      Alphabet const&               alph,
      std::vector<word_type> const& words);
  [[nodiscard]] std::vector<word_type> parse_words(
      Alphabet const&                 alph,
      std::vector<std::string> const& words);

  [[nodiscard]] json certificate_to_json(Certificate const& c, Alphabet const& alph);
  [[nodiscard]] json handle_to_json(SubgroupHandle const& h);
  [[nodiscard]] json validation_to_json(ValidationReport const& r);

}  // namespace stallings

#endif  // STALLINGS_IO_HPP_

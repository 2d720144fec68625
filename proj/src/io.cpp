#include "stallings/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "stallings/error.hpp"

namespace stallings {

  namespace {
    [[noreturn]] void bad(std::string const& what) {
      throw Error(error_kind::parse_error, what);
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    std::vector<std::string> letter_names(Alphabet const& alph) {
      std::vector<std::string> names;
      for (letter_type x = 0; x < alph.size(); ++x) {
        names.push_back(alph.name(x));
      }
      return names;
    }

    state_type state_index(json const& j, std::size_t n) {
      if (!j.is_number_unsigned() || j.get<std::size_t>() >= n) {
        bad("state index out of range: " + j.dump());
      }
      return j.get<state_type>();
    }

    // Letter or padding token.
    letter_type symbol(json const& j, Alphabet const& alph, bool allow_pad) {
      if (!j.is_string()) {
        bad("letter must be a string: " + j.dump());
      }
      auto s = j.get<std::string>();
      if (allow_pad && s == "_") {
        return alph.padding();
      }
      return alph.letter(s);
    }

    void states_from_json(json const& j, Nfa& a) {
      auto const& states = field(j, "states");
      if (!states.is_number_unsigned()) {
        bad("\"states\" must be a count");
      }
      a.add_states(states.get<std::size_t>());
      for (auto const& s : field(j, "initial")) {
        a.add_initial(state_index(s, a.num_states()));
      }
      for (auto const& s : field(j, "final")) {
        a.add_final(state_index(s, a.num_states()));
      }
    }

    void check_alphabet(json const& j, Alphabet const& alph) {
      if (j.contains("alphabet")
          && j.at("alphabet") != json(letter_names(alph))) {
        bad("automaton alphabet differs from the group alphabet");
      }
    }

    json flags_to_json(StructureFlags const& f) {
      return {{"geodesic", f.geodesic},
              {"inverse_closed", f.inverse_closed},
              {"extendable", f.extendable},
              {"unique_reps", f.unique_reps},
              {"finite_reps", f.finite_reps}};
    }

    StructureFlags flags_from_json(json const& j) {
      StructureFlags f;
      auto get = [&j](char const* key) {
        return j.contains(key) ? j.at(key).get<bool>() : false;
      };
      f.geodesic       = get("geodesic");
      f.inverse_closed = get("inverse_closed");
      f.extendable     = get("extendable");
      f.unique_reps    = get("unique_reps");
      f.finite_reps    = get("finite_reps");
      return f;
    }
  }  // namespace

  json nfa_to_json(Nfa const& a, Alphabet const& alph) {
    json transitions = json::array();
    for (state_type s = 0; s < a.num_states(); ++s) {
      for (auto const& e : a.out(s)) {
        transitions.push_back({s, alph.name(e.symbol), e.target});
      }
    }
    return {{"states", a.num_states()},
            {"alphabet", letter_names(alph)},
            {"transitions", transitions},
            {"initial", a.initial()},
            {"final", a.finals()}};
  }

  Nfa nfa_from_json(json const& j, Alphabet const& alph) {
    try {
      check_alphabet(j, alph);
      Nfa a(alph.size());
      states_from_json(j, a);
      for (auto const& t : field(j, "transitions")) {
        if (!t.is_array() || t.size() != 3) {
          bad("transition must be [p, letter, q]: " + t.dump());
        }
        a.add_transition(state_index(t[0], a.num_states()),
                         symbol(t[1], alph, false),
                         state_index(t[2], a.num_states()));
      }
      a.normalize();
      return a;
    } catch (json::exception const& e) {
      bad(e.what());
    }
  }

  json pair_to_json(PairAutomaton const& m, Alphabet const& alph) {
    Nfa const& a           = m.nfa();
    json       transitions = json::array();
    for (state_type s = 0; s < a.num_states(); ++s) {
      for (auto const& e : a.out(s)) {
        auto [x, y] = m.decode(e.symbol);
        transitions.push_back({s, alph.name(x), alph.name(y), e.target});
      }
    }
    return {{"states", a.num_states()},
            {"alphabet", letter_names(alph)},
            {"padding", "_"},
            {"transitions", transitions},
            {"initial", a.initial()},
            {"final", a.finals()}};
  }

  PairAutomaton pair_from_json(json const& j, Alphabet const& alph) {
    try {
      check_alphabet(j, alph);
      if (j.contains("padding") && j.at("padding") != "_") {
        bad("the padding symbol must be \"_\"");
      }
      PairAutomaton m(alph.rank());
      Nfa&          a = m.nfa();
      states_from_json(j, a);
      for (auto const& t : field(j, "transitions")) {
        if (!t.is_array() || t.size() != 4) {
          bad("pair transition must be [p, x, y, q]: " + t.dump());
        }
        a.add_transition(state_index(t[0], a.num_states()),
                         m.encode(symbol(t[1], alph, true), symbol(t[2], alph, true)),
                         state_index(t[3], a.num_states()));
      }
      a.normalize();
      return m;
    } catch (json::exception const& e) {
      bad(e.what());
    }
  }

  json graph_to_json(RootedGraph const& g, Alphabet const& alph) {
    json transitions = json::array();
    for (auto const& e : g.edges()) {
      transitions.push_back({e.source, alph.name(e.label), e.target});
    }
    return {{"states", g.num_vertices()},
            {"alphabet", letter_names(alph)},
            {"transitions", transitions},
            {"initial", {g.base()}},
            {"final", {g.base()}},
            {"base", g.base()}};
  }

  RootedGraph graph_from_json(json const& j, Alphabet const& alph) {
    try {
      check_alphabet(j, alph);
      auto const& states = field(j, "states");
      if (!states.is_number_unsigned()) {
        bad("\"states\" must be a count");
      }
      std::size_t const      n    = states.get<std::size_t>();
      vertex_type const      base = state_index(field(j, "base"), n);
      std::vector<GraphEdge> edges;
      for (auto const& t : field(j, "transitions")) {
        if (!t.is_array() || t.size() != 3) {
          bad("edge must be [p, letter, q]: " + t.dump());
        }
        auto p = state_index(t[0], n);
        auto x = symbol(t[1], alph, false);
        auto q = state_index(t[2], n);
        if (x < alph.rank()) {
          edges.push_back({p, x, q});
        } else {
          edges.push_back({q, alph.inverse(x), p});
        }
      }
      return RootedGraph::from_edges(alph.rank(), n, base, edges);
    } catch (json::exception const& e) {
      bad(e.what());
    }
  }

  std::string graph_to_dot(RootedGraph const& g,
                           Alphabet const&    alph,
                           std::string const& name) {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
    for (vertex_type v = 0; v < g.num_vertices(); ++v) {
      out << "  " << v << " [shape="
          << (v == g.base() ? "doublecircle" : "circle") << "];\n";
    }
    for (auto const& e : g.edges()) {
      out << "  " << e.source << " -> " << e.target << " [label=\""
          << alph.name(e.label) << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  json group_to_json(Group const& g) {
    Alphabet const& alph = g.presentation.alphabet;
    auto const&     as   = g.structure;
    // The full symmetrized set; loading symmetrizes again, a no-op.
    json relators = json::array();
    for (auto const& r : g.presentation.relators) {
      relators.push_back(alph.format(r));
    }
    json multipliers = json::object();
    for (letter_type x = 0; x < as.multipliers.size(); ++x) {
      if (as.multipliers[x]) {
        multipliers[alph.name(x)] = pair_to_json(*as.multipliers[x], alph);
      }
    }
    if (as.identity_multiplier) {
      multipliers["1"] = pair_to_json(*as.identity_multiplier, alph);
    }
    json automatic = {{"word_acceptor", nfa_to_json(as.word_acceptor, alph)},
                      {"multipliers", multipliers},
                      {"identity_rep", alph.format(as.identity_rep)},
                      {"flags", flags_to_json(as.flags)}};
    if (as.delta) {
      automatic["delta"] = *as.delta;
    }
    return {{"name", g.name},
            {"alphabet", alph.generators()},
            {"relators", relators},
            {"dehn", g.presentation.dehn},
            {"automatic", automatic}};
  }

  GroupPtr group_from_json(json const& j) {
    try {
      Group g;
      g.name = j.contains("name") ? j.at("name").get<std::string>() : "unnamed";
      Alphabet alph(field(j, "alphabet").get<std::vector<std::string>>());
      word_set relators;
      if (j.contains("relators")) {
        for (auto const& r : j.at("relators")) {
          relators.insert(alph.parse(r.get<std::string>()));
        }
      }
      bool dehn      = j.contains("dehn") && j.at("dehn").get<bool>();
      g.presentation = Presentation(alph, relators, dehn);

      auto const& a            = field(j, "automatic");
      g.structure.alphabet      = alph;
      g.structure.word_acceptor = nfa_from_json(field(a, "word_acceptor"), alph);
      g.structure.multipliers.assign(alph.size(), std::nullopt);
      for (auto const& [key, value] : field(a, "multipliers").items()) {
        if (key == "1") {
          g.structure.identity_multiplier = pair_from_json(value, alph);
        } else {
          g.structure.multipliers[alph.letter(key)] = pair_from_json(value, alph);
        }
      }
      g.structure.identity_rep
          = alph.parse(field(a, "identity_rep").get<std::string>());
      if (a.contains("flags")) {
        g.structure.flags = flags_from_json(a.at("flags"));
      }
      if (a.contains("delta")) {
        g.structure.delta = a.at("delta").get<std::size_t>();
      }
      return std::make_shared<Group const>(std::move(g));
    } catch (json::exception const& e) {
      bad(e.what());
    }
  }

  GroupPtr load_group(std::string const& name_or_path) {
    auto names = bundled_names();
    if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
      return bundled_group(name_or_path);
    }
    std::ifstream in(name_or_path);
    if (!in) {
      throw Error(error_kind::unknown_group,
                  "no bundled group or readable file named " + name_or_path);
    }
    json j;
    try {
      in >> j;
    } catch (json::exception const& e) {
      bad(e.what());
    }
    return group_from_json(j);
  }

  std::vector<std::string> format_words(Alphabet const&               alph,
                                        std::vector<word_type> const& words) {
    std::vector<std::string> result;
    for (auto const& w : words) {
      result.push_back(alph.format(w));
    }
    return result;
  }

  std::vector<word_type> parse_words(Alphabet const&                 alph,
                                     std::vector<std::string> const& words) {
    std::vector<word_type> result;
    for (auto const& w : words) {
      result.push_back(alph.parse(w));
    }
    return result;
  }

  json certificate_to_json(Certificate const& c, Alphabet const& alph) {
    json log = json::array();
    for (auto const& r : c.log) {
      json entry = {{"iteration", r.iteration},
                    {"vertices", r.vertices},
                    {"checked", r.checked},
                    {"certified", r.certified}};
      if (r.monotone) {
        entry["monotone"] = *r.monotone;
      }
      log.push_back(entry);
    }
    return {{"verdict", std::string(to_string(c.result))},
            {"iterations_used", c.iterations_used},
            {"generators", format_words(alph, c.generators)},
            {"graph", graph_to_json(c.graph, alph)},
            {"log", log}};
  }

  json handle_to_json(SubgroupHandle const& h) {
    Alphabet const& alph = h.structure().alphabet;
    return {{"group", h.group->name},
            {"gens", format_words(alph, h.gens)},
            {"canonical", graph_to_json(h.canonical, alph)},
            {"qc_constant", h.qc_constant},
            {"stats",
             {{"completion_iterations", h.stats.completion_iterations},
              {"stallings_like_vertices", h.stats.stallings_like_vertices},
              {"projected_vertices", h.stats.projected_vertices},
              {"canonical_vertices", h.stats.canonical_vertices}}}};
  }

  json validation_to_json(ValidationReport const& r) {
    json checks = json::array();
    for (auto const& c : r.checks) {
      checks.push_back(
          {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"ok", r.ok()}, {"checks", checks}};
  }

}  // namespace stallings

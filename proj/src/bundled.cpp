#include "stallings/bundled.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <tuple>

#include "stallings/error.hpp"

namespace stallings {

  PairAutomaton word_difference_multiplier(Nfa const&        acceptor,
                                           std::size_t       rank,
                                           NormalForm const& normal_form,
                                           word_type const&  target,
                                           std::size_t       radius) {
    if (!acceptor.is_deterministic() || acceptor.initial().size() != 1) {
      throw Error(error_kind::internal_inconsistency,
                  "word difference construction needs a deterministic acceptor");
    }
    PairAutomaton    result(rank);
    Nfa&             out    = result.nfa();
    letter_type const pad   = result.padding();
    state_type const padded = static_cast<state_type>(acceptor.num_states());
    word_type const  goal   = normal_form(target);

    using key_type = std::tuple<state_type, state_type, word_type>;
    std::map<key_type, state_type> index;
    std::vector<key_type>          order;
    auto                           visit = [&](key_type const& key) {
      auto [it, inserted] = index.emplace(key, 0);
      if (inserted) {
        it->second = out.add_state();
        order.push_back(key);
      }
      return it->second;
    };
    // Moves of one tape: a letter, or the padding symbol once the tape holds
    // a complete word of L.
    auto moves = [&](state_type q) {
      std::vector<std::pair<letter_type, state_type>> m;
      if (q == padded) {
        m.emplace_back(pad, padded);
        return m;
      }
      for (auto const& e : acceptor.out(q)) {
        m.emplace_back(e.symbol, e.target);
      }
      if (acceptor.is_final(q)) {
        m.emplace_back(pad, padded);
      }
      return m;
    };
    auto done = [&](state_type q) {
      return q == padded || acceptor.is_final(q);
    };

    auto const q0 = acceptor.initial().front();
    out.add_initial(visit({q0, q0, word_type{}}));
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto const [q1, q2, d] = order[i];
      if (d == goal && done(q1) && done(q2)) {
        out.add_final(static_cast<state_type>(i));
      }
      for (auto [x, t1] : moves(q1)) {
        for (auto [y, t2] : moves(q2)) {
          if (x == pad && y == pad) {
            continue;
          }
          word_type next;
          if (x != pad) {
            next.push_back(inverse_letter(x, rank));
          }
          next.insert(next.end(), d.begin(), d.end());
          if (y != pad) {
            next.push_back(y);
          }
          next = normal_form(next);
          if (next.size() > radius) {
            continue;
          }
          out.add_transition(static_cast<state_type>(i),
                             result.encode(x, y),
                             visit({t1, t2, next}));
        }
      }
    }
    out = trim(out);
    return result;
  }

  word_type z2_normal_form(word_type const& w) {
    long x = 0, y = 0;
    for (auto l : w) {
      switch (l) {
        case 0: ++x; break;
        case 1: ++y; break;
        case 2: --x; break;
        default: --y; break;
      }
    }
    auto repeat = [](word_type& out, letter_type l, long n) {
      out.insert(out.end(), static_cast<std::size_t>(n), l);
    };
    word_type result;
    // Shortlex with a < b < a' < b': the smaller letter comes first.
    if (x >= 0) {
      repeat(result, 0, x);
      repeat(result, y >= 0 ? 1 : 3, y >= 0 ? y : -y);
    } else if (y >= 0) {
      repeat(result, 1, y);
      repeat(result, 2, -x);
    } else {
      repeat(result, 2, -x);
      repeat(result, 3, -y);
    }
    return result;
  }

  word_type z2x3_normal_form(word_type const& w) {
    // Syllables (generator, exponent) with a of order 2 and b of order 3.
    std::vector<std::pair<int, int>> syl;
    for (auto l : w) {
      int g = l % 2;
      int e = g == 0 ? 1 : (l < 2 ? 1 : 2);
      if (!syl.empty() && syl.back().first == g) {
        syl.back().second = (syl.back().second + e) % (g == 0 ? 2 : 3);
        if (syl.back().second == 0) {
          syl.pop_back();
        }
      } else {
        syl.emplace_back(g, e);
      }
    }
    word_type result;
    for (auto [g, e] : syl) {
      result.push_back(g == 0 ? 0 : (e == 1 ? 1 : 3));
    }
    return result;
  }

  namespace {
    using permutation = std::vector<unsigned>;

    permutation compose(permutation const& p, permutation const& q) {
      permutation r(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] = q[p[i]];
      }
      return r;
    }

    permutation invert(permutation const& p) {
      permutation r(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        r[p[i]] = static_cast<unsigned>(i);
      }
      return r;
    }

    StructureFlags free_flags() {
      StructureFlags f;
      f.geodesic = f.inverse_closed = f.extendable = f.unique_reps = true;
      f.finite_reps = true;
      return f;
    }

    void add_multipliers(AutomaticStructure& as,
                         NormalForm const&   nf,
                         std::size_t         radius) {
      as.multipliers.assign(2 * as.rank(), std::nullopt);
      for (letter_type x = 0; x < 2 * as.rank(); ++x) {
        as.multipliers[x] = word_difference_multiplier(
            as.word_acceptor, as.rank(), nf, {x}, radius);
      }
    }

    Group make_free(std::string name, std::vector<std::string> gens) {
      Group g;
      g.name                    = std::move(name);
      Alphabet alph(std::move(gens));
      std::size_t const rank    = alph.rank();
      g.presentation            = Presentation(alph, {}, true);
      g.structure.alphabet      = alph;
      g.structure.word_acceptor = reduced_words_automaton(rank);
      g.structure.flags         = free_flags();
      g.structure.delta         = 0;
      NormalForm nf = [rank](word_type const& w) { return free_reduce(w, rank); };
      add_multipliers(g.structure, nf, 2);
      g.oracle = [rank](word_type const& w) { return free_reduce(w, rank).empty(); };
      return g;
    }

    Group make_z2() {
      Group    g;
      Alphabet alph({"a", "b"});
      g.name         = "Z2";
      g.presentation = Presentation(alph, {alph.parse("a b a' b'")}, false);
      // L = a*b* u a*b'* u b*a'* u a'*b'*, letters a=0 b=1 a'=2 b'=3.
      Nfa l(4);
      l.add_states(9);
      l.add_initial(0);
      for (state_type s = 0; s < 9; ++s) {
        l.add_final(s);
      }
      std::vector<std::tuple<state_type, letter_type, state_type>> const edges{
          {0, 0, 1}, {0, 1, 4}, {0, 2, 6}, {0, 3, 8}, {1, 0, 1}, {1, 1, 2},
          {1, 3, 3}, {2, 1, 2}, {3, 3, 3}, {4, 1, 4}, {4, 2, 5}, {5, 2, 5},
          {6, 2, 6}, {6, 3, 7}, {7, 3, 7}, {8, 3, 8}};
      for (auto [p, x, q] : edges) {
        l.add_transition(p, x, q);
      }
      l.normalize();
      g.structure.alphabet       = alph;
      g.structure.word_acceptor  = l;
      g.structure.flags.geodesic = true;
      g.structure.flags.unique_reps = true;
      g.structure.flags.finite_reps = true;
      add_multipliers(g.structure, z2_normal_form, 3);
      g.oracle = [](word_type const& w) { return z2_normal_form(w).empty(); };
      return g;
    }

    Group make_z2x3() {
      Group    g;
      Alphabet alph({"a", "b"});
      g.name         = "Z2x3";
      g.presentation = Presentation(alph, {alph.parse("a a"), alph.parse("b b b")}, true);
      // Alternating syllables a and b or b'.
      Nfa l(4);
      l.add_states(3);
      l.add_initial(0);
      for (state_type s = 0; s < 3; ++s) {
        l.add_final(s);
      }
      l.add_transition(0, 0, 1);
      l.add_transition(0, 1, 2);
      l.add_transition(0, 3, 2);
      l.add_transition(1, 1, 2);
      l.add_transition(1, 3, 2);
      l.add_transition(2, 0, 1);
      l.normalize();
      g.structure.alphabet          = alph;
      g.structure.word_acceptor     = l;
      g.structure.flags.geodesic    = true;
      g.structure.flags.extendable  = true;
      g.structure.flags.unique_reps = true;
      g.structure.flags.finite_reps = true;
      add_multipliers(g.structure, z2x3_normal_form, 3);
      g.oracle = [](word_type const& w) { return z2x3_normal_form(w).empty(); };
      return g;
    }

    // A finite permutation group with the shortlex-least words as normal
    // forms; the acceptor is the breadth-first search tree.
    Group make_finite(std::string                     name,
                      std::vector<std::string>        gens,
                      std::vector<permutation> const& perms,
                      std::vector<std::string> const& relators) {
      Group    g;
      Alphabet alph(std::move(gens));
      g.name                  = std::move(name);
      std::size_t const rank  = alph.rank();
      word_set          rels;
      for (auto const& r : relators) {
        rels.insert(alph.parse(r));
      }
      g.presentation = Presentation(alph, rels, false);

      std::vector<permutation> letters;
      for (auto const& p : perms) {
        letters.push_back(p);
      }
      for (auto const& p : perms) {
        letters.push_back(invert(p));
      }
      permutation identity(perms.front().size());
      for (unsigned i = 0; i < identity.size(); ++i) {
        identity[i] = i;
      }

      std::map<permutation, state_type> index{{identity, 0}};
      std::vector<permutation>          elements{identity};
      std::vector<word_type>            forms{{}};
      Nfa                               l(2 * rank);
      l.add_state();
      for (std::size_t i = 0; i < elements.size(); ++i) {
        for (letter_type x = 0; x < 2 * rank; ++x) {
          auto next = compose(elements[i], letters[x]);
          if (index.count(next) == 0) {
            auto id     = l.add_state();
            index[next] = id;
            elements.push_back(next);
            word_type f = forms[i];
            f.push_back(x);
            forms.push_back(f);
            l.add_transition(static_cast<state_type>(i), x, id);
          }
        }
      }
      l.add_initial(0);
      std::size_t diameter = 0;
      for (state_type s = 0; s < l.num_states(); ++s) {
        l.add_final(s);
        diameter = std::max(diameter, forms[s].size());
      }
      l.normalize();

      auto evaluate = [letters, identity](word_type const& w) {
        permutation p = identity;
        for (auto x : w) {
          p = compose(p, letters[x]);
        }
        return p;
      };
      NormalForm nf = [evaluate, index, forms](word_type const& w) {
        return forms[index.at(evaluate(w))];
      };

      g.structure.alphabet          = alph;
      g.structure.word_acceptor     = l;
      g.structure.flags.geodesic    = true;
      g.structure.flags.unique_reps = true;
      g.structure.flags.finite_reps = true;
      add_multipliers(g.structure, nf, diameter);
      g.oracle = [evaluate, identity](word_type const& w) {
        return evaluate(w) == identity;
      };
      return g;
    }

    Group build(std::string const& name) {
      if (name == "F1") {
        return make_free("F1", {"a"});
      } else if (name == "F2") {
        return make_free("F2", {"a", "b"});
      } else if (name == "F3") {
        return make_free("F3", {"a", "b", "c"});
      } else if (name == "Z2") {
        return make_z2();
      } else if (name == "Z2x3") {
        return make_z2x3();
      } else if (name == "S3") {
        return make_finite("S3", {"a", "b"}, {{1, 0, 2}, {1, 2, 0}},
                           {"a a", "b b b", "a b a b"});
      } else if (name == "D4") {
        return make_finite("D4", {"r", "s"}, {{1, 2, 3, 0}, {0, 3, 2, 1}},
                           {"r r r r", "s s", "s r s r"});
      }
      throw Error(error_kind::unknown_group, "no bundled group named " + name);
    }
  }  // namespace

  std::vector<std::string> bundled_names() {
    return {"F1", "F2", "F3", "Z2", "Z2x3", "S3", "D4"};
  }

  GroupPtr bundled_group(std::string const& name) {
    static std::mutex                      mutex;
    static std::map<std::string, GroupPtr> cache;
    std::lock_guard                        lock(mutex);
    auto                                   it = cache.find(name);
    if (it == cache.end()) {
      it = cache.emplace(name, std::make_shared<Group const>(build(name))).first;
    }
    return it->second;
  }

}  // namespace stallings

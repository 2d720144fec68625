#include "stallings/autostructure.hpp"

#include <map>
#include <tuple>

#include "stallings/error.hpp"

namespace stallings {

  Nfa apply_multiplier(Nfa const& k, PairAutomaton const& m) {
    std::size_t const rank = m.rank();
    letter_type const pad  = m.padding();
    if (k.num_symbols() != 2 * rank) {
      throw Error(error_kind::alphabet_mismatch,
                  "multiplier and language have different alphabets");
    }
    // Complete DFA for K with an extra padding sink; normalized complete
    // transition lists are indexed directly by letter.
    Nfa const        d        = determinize_complete(k);
    state_type const pad_sink = static_cast<state_type>(d.num_states());
    state_type const dead     = pad_sink + 1;
    auto             read_k   = [&](state_type q, letter_type x) -> state_type {
      if (x == pad) {
        return (q == pad_sink || (q < pad_sink && d.is_final(q))) ? pad_sink
                                                                  : dead;
      }
      return q == pad_sink ? dead : d.out(q)[x].target;
    };

    PairAutomaton const closed   = pad_close(m);
    Nfa const&          mc       = closed.nfa();
    state_type const    m_accept = static_cast<state_type>(mc.num_states() - 1);

    // Product restricted to the reachable part, projected on the second tape.
    std::map<std::pair<state_type, state_type>, state_type> index;
    std::vector<std::pair<state_type, state_type>>          order;
    Nfa product(2 * rank + 1);
    auto visit = [&](state_type q, state_type s) {
      auto [it, inserted] = index.emplace(std::make_pair(q, s), 0);
      if (inserted) {
        it->second = product.add_state();
        order.emplace_back(q, s);
      }
      return it->second;
    };
    state_type const d0 = d.initial().front();
    for (auto s : mc.initial()) {
      product.add_initial(visit(d0, s));
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto [q, s] = order[i];
      for (auto const& e : mc.out(s)) {
        auto [x, y] = closed.decode(e.symbol);
        auto q2     = read_k(q, x);
        if (q2 == dead) {
          continue;
        }
        product.add_transition(static_cast<state_type>(i), y, visit(q2, e.target));
      }
    }

    // Drop padding columns: a state is final when padding-only moves reach
    // (sink, accept). Padding on the output tape only occurs as a suffix.
    std::size_t const      n = product.num_states();
    std::vector<bool>      final(n, false);
    std::vector<std::vector<state_type>> pad_pred(n);
    for (state_type s = 0; s < n; ++s) {
      if (order[s].first == pad_sink && order[s].second == m_accept) {
        final[s] = true;
      }
      for (auto const& e : product.out(s)) {
        if (e.symbol == pad) {
          pad_pred[e.target].push_back(s);
        }
      }
    }
    std::vector<state_type> stack;
    for (state_type s = 0; s < n; ++s) {
      if (final[s]) {
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      auto s = stack.back();
      stack.pop_back();
      for (auto p : pad_pred[s]) {
        if (!final[p]) {
          final[p] = true;
          stack.push_back(p);
        }
      }
    }

    Nfa result(2 * rank);
    result.add_states(n);
    for (state_type s = 0; s < n; ++s) {
      for (auto const& e : product.out(s)) {
        if (e.symbol != pad) {
          result.add_transition(s, e.symbol, e.target);
        }
      }
      result.set_final(s, final[s]);
    }
    for (auto s : product.initial()) {
      result.add_initial(s);
    }
    return trim(result);
  }

  Nfa multiply(AutomaticStructure const& as, Nfa const& k, letter_type x) {
    if (x >= as.multipliers.size() || !as.multipliers[x]) {
      throw Error(error_kind::no_multiplier,
                  "no multiplier for letter " + as.alphabet.name(x));
    }
    return apply_multiplier(k, *as.multipliers[x]);
  }

  Nfa multiply_identity(AutomaticStructure const& as, Nfa const& k) {
    if (as.identity_multiplier) {
      return apply_multiplier(k, *as.identity_multiplier);
    }
    if (as.flags.unique_reps) {
      // The diagonal of L maps every u in K to itself.
      return trim(intersect(k, as.word_acceptor));
    }
    throw Error(error_kind::no_multiplier, "no multiplier for the identity");
  }

  Nfa multiply_word(AutomaticStructure const& as,
                    Nfa const&                k,
                    word_type const&          h) {
    auto reduced = free_reduce(h, as.rank());
    if (reduced.empty()) {
      return multiply_identity(as, k);
    }
    Nfa current = k;
    for (auto x : reduced) {
      current = multiply(as, current, x);
    }
    return current;
  }

  Nfa l_representatives(AutomaticStructure const& as, word_type const& w) {
    return multiply_word(as, word_automaton(as.identity_rep, 2 * as.rank()), w);
  }

  word_type some_l_representative(AutomaticStructure const& as,
                                  word_type const&          w) {
    auto rep = shortest_accepted(l_representatives(as, w));
    if (!rep) {
      throw Error(error_kind::internal_inconsistency,
                  "word " + as.alphabet.format(w) + " has no representative");
    }
    return *rep;
  }

  bool ValidationReport::ok() const {
    for (auto const& c : checks) {
      if (!c.passed) {
        return false;
      }
    }
    return true;
  }

  ValidationCheck const* ValidationReport::find(std::string const& name) const {
    for (auto const& c : checks) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  namespace {
    void fail(ValidationCheck& c, std::string const& detail) {
      if (c.passed) {
        c.passed = false;
        c.detail = detail;
      }
    }
  }  // namespace

  ValidationReport validate(AutomaticStructure const&        as,
                            std::size_t                      sample_depth,
                            std::optional<WordOracle> const& oracle) {
    ValidationReport  report;
    std::size_t const rank = as.rank();
    Alphabet const&   alph = as.alphabet;

    ValidationCheck alphabet_check{"alphabet", true, ""};
    if (as.word_acceptor.num_symbols() != 2 * rank) {
      fail(alphabet_check, "word acceptor symbol count differs from 2r");
    }
    if (as.multipliers.size() != 2 * rank) {
      fail(alphabet_check, "multiplier table size differs from 2r");
    }
    for (auto const& m : as.multipliers) {
      if (m && m->rank() != rank) {
        fail(alphabet_check, "multiplier over a different alphabet");
      }
    }
    report.checks.push_back(alphabet_check);
    if (!alphabet_check.passed) {
      return report;
    }

    ValidationCheck reduced{"reduced", true, ""};
    if (auto w = subset_counterexample(as.word_acceptor,
                                       reduced_words_automaton(rank))) {
      fail(reduced, "accepts the unreduced word \"" + alph.format(*w) + "\"");
    }
    report.checks.push_back(reduced);

    ValidationCheck identity{"identity_rep", true, ""};
    if (!as.word_acceptor.accepts(as.identity_rep)) {
      fail(identity, "identity_rep is not accepted by the word acceptor");
    }
    report.checks.push_back(identity);

    ValidationCheck complete{"multiplier_completeness", true, ""};
    for (letter_type x = 0; x < 2 * rank; ++x) {
      if (!as.multipliers[x]) {
        fail(complete, "no multiplier for letter " + alph.name(x));
      }
    }
    report.checks.push_back(complete);

    ValidationCheck padding{"padding", true, ""};
    auto const      convention = padding_convention_automaton(rank);
    auto            check_pad  = [&](PairAutomaton const& m, std::string label) {
      if (!is_subset(m.nfa(), convention)) {
        fail(padding, "multiplier " + label + " violates the padding convention");
      }
    };
    for (letter_type x = 0; x < 2 * rank; ++x) {
      if (as.multipliers[x]) {
        check_pad(*as.multipliers[x], alph.name(x));
      }
    }
    if (as.identity_multiplier) {
      check_pad(*as.identity_multiplier, "1");
    }
    report.checks.push_back(padding);

    ValidationCheck sample{"sample_soundness", true, ""};
    if (!identity.passed || !padding.passed || !reduced.passed) {
      fail(sample, "skipped because a structural check failed");
      report.checks.push_back(sample);
      return report;
    }
    try {
      auto const samples
          = enumerate_words(as.word_acceptor, sample_depth, 100000);
      std::vector<std::pair<std::string, PairAutomaton const*>> ms;
      std::vector<word_type>                                  suffixes;
      for (letter_type x = 0; x < 2 * rank; ++x) {
        if (as.multipliers[x]) {
          ms.emplace_back(alph.name(x), &*as.multipliers[x]);
          suffixes.push_back({x});
        }
      }
      if (as.identity_multiplier) {
        ms.emplace_back("1", &*as.identity_multiplier);
        suffixes.push_back({});
      }
      for (auto const& u : samples) {
        auto ku = word_automaton(u, 2 * rank);
        for (std::size_t i = 0; i < ms.size() && sample.passed; ++i) {
          auto image = apply_multiplier(ku, *ms[i].second);
          auto where = "u = \"" + alph.format(u) + "\", multiplier " + ms[i].first;
          if (is_empty(image)) {
            fail(sample, where + ": no image");
            break;
          }
          if (auto bad = subset_counterexample(image, as.word_acceptor)) {
            fail(sample, where + ": image \"" + alph.format(*bad) + "\" not in L");
            break;
          }
          if (oracle) {
            auto words = enumerate_words(image, u.size() + sample_depth + 4, 64);
            for (auto const& v : words) {
              auto test = concat(concat(u, suffixes[i]), inverse_word(v, rank));
              if (!(*oracle)(test)) {
                fail(sample, where + ": image \"" + alph.format(v)
                                 + "\" does not represent u x");
                break;
              }
            }
          }
        }
        if (!sample.passed) {
          break;
        }
      }
    } catch (std::exception const& e) {
      fail(sample, e.what());
    }
    report.checks.push_back(sample);
    return report;
  }

}  // namespace stallings

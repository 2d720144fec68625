#include "stallings/pair_automaton.hpp"

#include <algorithm>

#include "stallings/error.hpp"

namespace stallings {

  PairAutomaton::PairAutomaton(std::size_t rank, Nfa nfa)
      : _rank(rank), _nfa(std::move(nfa)) {
    if (_nfa.num_symbols() != (2 * rank + 1) * (2 * rank + 1)) {
      throw Error(error_kind::alphabet_mismatch,
                  "pair automaton symbol count does not match the rank");
    }
  }

  bool PairAutomaton::accepts(word_type const& u, word_type const& v) const {
    return _nfa.accepts(pad_pair(u, v, _rank));
  }

  word_type pad_pair(word_type const& u, word_type const& v, std::size_t rank) {
    auto const  pad   = static_cast<letter_type>(2 * rank);
    auto const  width = static_cast<letter_type>(2 * rank + 1);
    std::size_t n     = std::max(u.size(), v.size());
    word_type   result(n);
    for (std::size_t i = 0; i < n; ++i) {
      letter_type x = i < u.size() ? u[i] : pad;
      letter_type y = i < v.size() ? v[i] : pad;
      result[i]     = x * width + y;
    }
    return result;
  }

  Nfa padding_convention_automaton(std::size_t rank) {
    auto const pad   = static_cast<letter_type>(2 * rank);
    auto const width = static_cast<letter_type>(2 * rank + 1);
    // 0: no padding yet, 1: left tape padded, 2: right tape padded.
    Nfa a(width * width);
    a.add_states(3);
    for (letter_type x = 0; x < width; ++x) {
      for (letter_type y = 0; y < width; ++y) {
        if (x == pad && y == pad) {
          continue;
        }
        letter_type sym = x * width + y;
        if (x != pad && y != pad) {
          a.add_transition(0, sym, 0);
        } else if (x == pad) {
          a.add_transition(0, sym, 1);
          a.add_transition(1, sym, 1);
        } else {
          a.add_transition(0, sym, 2);
          a.add_transition(2, sym, 2);
        }
      }
    }
    a.add_initial(0);
    for (state_type s = 0; s < 3; ++s) {
      a.add_final(s);
    }
    a.normalize();
    return a;
  }

  PairAutomaton pad_close(PairAutomaton const& m) {
    Nfa const& in = m.nfa();
    Nfa        out(in.num_symbols());
    out.add_states(in.num_states());
    for (state_type s = 0; s < in.num_states(); ++s) {
      for (auto const& e : in.out(s)) {
        out.add_transition(s, e.symbol, e.target);
      }
    }
    auto const      sink = out.add_state();
    letter_type const pp = m.encode(m.padding(), m.padding());
    for (state_type s = 0; s < in.num_states(); ++s) {
      if (in.is_final(s)) {
        out.add_transition(s, pp, sink);
      }
    }
    out.add_transition(sink, pp, sink);
    out.add_final(sink);
    for (auto s : in.initial()) {
      out.add_initial(s);
    }
    out.normalize();
    return PairAutomaton(m.rank(), std::move(out));
  }

  PairAutomaton diagonal_pair_automaton(Nfa const& acceptor, std::size_t rank) {
    PairAutomaton result(rank);
    Nfa&          out = result.nfa();
    out.add_states(acceptor.num_states());
    for (state_type s = 0; s < acceptor.num_states(); ++s) {
      for (auto const& e : acceptor.out(s)) {
        out.add_transition(s, result.encode(e.symbol, e.symbol), e.target);
      }
      out.set_final(s, acceptor.is_final(s));
    }
    for (auto s : acceptor.initial()) {
      out.add_initial(s);
    }
    out = trim(out);
    return result;
  }

}  // namespace stallings

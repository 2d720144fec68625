#include "stallings/words.hpp"

#include <algorithm>
#include <deque>

#include "stallings/error.hpp"

namespace stallings {

  word_set symmetrize(word_set const& relators, std::size_t rank) {
    word_set result;
    for (auto const& raw : relators) {
      word_type r = cyclically_reduce(raw, rank);
      if (r.empty()) {
        throw Error(error_kind::relator_trivial,
                    "a relator reduces to the empty word");
      }
      for (auto const& base : {r, inverse_word(r, rank)}) {
        for (std::size_t i = 0; i < base.size(); ++i) {
          word_type rotated(base.begin() + i, base.end());
          rotated.insert(rotated.end(), base.begin(), base.begin() + i);
          result.insert(std::move(rotated));
        }
      }
    }
    return result;
  }

  Presentation::Presentation(Alphabet alph, word_set const& raw, bool is_dehn)
      : alphabet(std::move(alph)),
        relators(symmetrize(raw, alphabet.rank())),
        dehn(is_dehn) {
    for (auto const& r : raw) {
      for (auto x : r) {
        if (x >= alphabet.size()) {
          throw Error(error_kind::parse_error, "relator letter out of range");
        }
      }
    }
  }

  std::vector<letter_type> Presentation::letters_missing_from_relators() const {
    std::vector<bool> occurs(rank(), false);
    for (auto const& r : relators) {
      for (auto x : r) {
        occurs[x < rank() ? x : inverse_letter(x, rank())] = true;
      }
    }
    std::vector<letter_type> result;
    for (letter_type a = 0; a < rank(); ++a) {
      if (!occurs[a]) {
        result.push_back(a);
      }
    }
    return result;
  }

  DehnSystem::DehnSystem(Presentation const& p)
      : _rank(p.rank()), _dehn(p.dehn) {
    std::set<RewriteRule> rules;
    for (auto const& r : p.relators) {
      for (std::size_t i = 0; i <= r.size(); ++i) {
        if (i > r.size() - i) {
          word_type r1(r.begin(), r.begin() + i);
          word_type r2(r.begin() + i, r.end());
          rules.insert({r1, inverse_word(r2, _rank)});
        }
      }
    }
    for (letter_type a = 0; a < 2 * _rank; ++a) {
      rules.insert({{a, inverse_letter(a, _rank)}, {}});
    }
    _rules.assign(rules.begin(), rules.end());
    for (auto const& rule : _rules) {
      _max_lhs  = std::max(_max_lhs, rule.lhs.size());
      auto it   = _chosen.find(rule.lhs);
      if (it == _chosen.end() || shortlex_less(rule.rhs, it->second)) {
        _chosen[rule.lhs] = rule.rhs;
      }
    }
  }

  word_type DehnSystem::reduce(word_type const& input) const {
    word_type   w = input;
    std::size_t i = 0;
    word_type   probe;
    while (i < w.size()) {
      bool rewritten = false;
      for (std::size_t len = std::min(_max_lhs, w.size() - i); len > 0; --len) {
        probe.assign(w.begin() + i, w.begin() + i + len);
        auto it = _chosen.find(probe);
        if (it != _chosen.end()) {
          word_type next(w.begin(), w.begin() + i);
          next.insert(next.end(), it->second.begin(), it->second.end());
          next.insert(next.end(), w.begin() + i + len, w.end());
          w         = std::move(next);
          i         = i > _max_lhs ? i - _max_lhs : 0;
          rewritten = true;
          break;
        }
      }
      if (!rewritten) {
        ++i;
      }
    }
    return w;
  }

  bool DehnSystem::word_problem(word_type const& w) const {
    if (!_dehn) {
      throw Error(error_kind::not_dehn_presentation,
                  "the presentation is not flagged as a Dehn presentation");
    }
    return reduce(w).empty();
  }

  Nfa dehn_language_automaton(Presentation const& p) {
    std::size_t const n    = p.alphabet.size();
    std::size_t const rank = p.rank();

    word_set patterns;
    for (letter_type a = 0; a < n; ++a) {
      patterns.insert({a, inverse_letter(a, rank)});
    }
    for (auto const& r : p.relators) {
      for (std::size_t len = r.size() / 2 + 1; len <= r.size(); ++len) {
        patterns.insert(word_type(r.begin(), r.begin() + len));
      }
    }

    // Trie with goto/fail functions.
    std::vector<std::vector<std::int64_t>> go(1, std::vector<std::int64_t>(n, -1));
    std::vector<bool>                      forbidden(1, false);
    for (auto const& pat : patterns) {
      std::size_t node = 0;
      for (auto x : pat) {
        if (go[node][x] < 0) {
          go[node][x] = static_cast<std::int64_t>(go.size());
          go.emplace_back(n, -1);
          forbidden.push_back(false);
        }
        node = static_cast<std::size_t>(go[node][x]);
      }
      forbidden[node] = true;
    }
    std::vector<std::size_t> fail(go.size(), 0);
    std::deque<std::size_t>  queue;
    for (letter_type x = 0; x < n; ++x) {
      if (go[0][x] < 0) {
        go[0][x] = 0;
      } else {
        fail[static_cast<std::size_t>(go[0][x])] = 0;
        queue.push_back(static_cast<std::size_t>(go[0][x]));
      }
    }
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      forbidden[u] = forbidden[u] || forbidden[fail[u]];
      for (letter_type x = 0; x < n; ++x) {
        auto v = go[u][x];
        if (v < 0) {
          go[u][x] = go[fail[u]][x];
        } else {
          fail[static_cast<std::size_t>(v)]
              = static_cast<std::size_t>(go[fail[u]][x]);
          queue.push_back(static_cast<std::size_t>(v));
        }
      }
    }

    Nfa a(n);
    a.add_states(go.size());
    for (state_type s = 0; s < go.size(); ++s) {
      if (forbidden[s]) {
        continue;
      }
      a.add_final(s);
      for (letter_type x = 0; x < n; ++x) {
        auto t = static_cast<state_type>(go[s][x]);
        if (!forbidden[t]) {
          a.add_transition(s, x, t);
        }
      }
    }
    a.add_initial(0);
    return trim(a);
  }

}  // namespace stallings

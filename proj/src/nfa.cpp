#include "stallings/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "stallings/error.hpp"

namespace stallings {

  state_type Nfa::add_state() {
    _out.emplace_back();
    _final.push_back(false);
    return static_cast<state_type>(_out.size() - 1);
  }

  void Nfa::add_states(std::size_t n) {
    _out.resize(_out.size() + n);
    _final.resize(_final.size() + n, false);
  }

  void Nfa::add_transition(state_type from, letter_type a, state_type to) {
    _out[from].push_back({a, to});
  }

  void Nfa::add_initial(state_type s) {
    _initial.push_back(s);
  }

  void Nfa::add_final(state_type s) {
    _final[s] = true;
  }

  void Nfa::set_final(state_type s, bool value) {
    _final[s] = value;
  }

  void Nfa::clear_initial() {
    _initial.clear();
  }

  std::size_t Nfa::num_transitions() const noexcept {
    std::size_t n = 0;
    for (auto const& edges : _out) {
      n += edges.size();
    }
    return n;
  }

  std::vector<state_type> Nfa::finals() const {
    std::vector<state_type> result;
    for (state_type s = 0; s < _final.size(); ++s) {
      if (_final[s]) {
        result.push_back(s);
      }
    }
    return result;
  }

  bool Nfa::is_deterministic() const {
    if (_initial.size() > 1) {
      return false;
    }
    for (auto const& edges : _out) {
      for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].symbol == edges[i - 1].symbol) {
          return false;
        }
      }
    }
    return true;
  }

  bool Nfa::is_complete_deterministic() const {
    if (_initial.size() != 1 || !is_deterministic()) {
      return false;
    }
    return std::all_of(_out.begin(), _out.end(), [this](auto const& edges) {
      return edges.size() == _num_symbols;
    });
  }

  std::optional<state_type> Nfa::step(state_type s, letter_type a) const {
    auto const& edges = _out[s];
    auto        it    = std::lower_bound(
        edges.begin(), edges.end(), Edge{a, 0});
    if (it != edges.end() && it->symbol == a) {
      return it->target;
    }
    return std::nullopt;
  }

  bool Nfa::accepts(word_type const& w) const {
    std::vector<state_type> current(_initial);
    for (auto a : w) {
      std::vector<state_type> next;
      for (auto s : current) {
        for (auto const& e : _out[s]) {
          if (e.symbol == a) {
            next.push_back(e.target);
          }
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      current = std::move(next);
      if (current.empty()) {
        return false;
      }
    }
    return std::any_of(
        current.begin(), current.end(), [this](auto s) { return _final[s]; });
  }

  void Nfa::normalize() {
    for (auto& edges : _out) {
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    std::sort(_initial.begin(), _initial.end());
    _initial.erase(std::unique(_initial.begin(), _initial.end()),
                   _initial.end());
  }

  Nfa word_automaton(word_type const& w, std::size_t num_symbols) {
    Nfa a(num_symbols);
    a.add_states(w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      a.add_transition(static_cast<state_type>(i),
                       w[i],
                       static_cast<state_type>(i + 1));
    }
    a.add_initial(0);
    a.add_final(static_cast<state_type>(w.size()));
    a.normalize();
    return a;
  }

  Nfa universal_automaton(std::size_t num_symbols) {
    Nfa a(num_symbols);
    a.add_state();
    for (letter_type x = 0; x < num_symbols; ++x) {
      a.add_transition(0, x, 0);
    }
    a.add_initial(0);
    a.add_final(0);
    return a;
  }

  Nfa reduced_words_automaton(std::size_t rank) {
    // State 0 is the start, state x + 1 means "last letter was x".
    std::size_t n = 2 * rank;
    Nfa         a(n);
    a.add_states(n + 1);
    for (state_type s = 0; s <= n; ++s) {
      for (letter_type x = 0; x < n; ++x) {
        if (s == 0 || x != inverse_letter(s - 1, rank)) {
          a.add_transition(s, x, x + 1);
        }
      }
      a.add_final(s);
    }
    a.add_initial(0);
    a.normalize();
    return a;
  }

  namespace {

    std::vector<bool> reachable(Nfa const& a) {
      std::vector<bool>       seen(a.num_states(), false);
      std::vector<state_type> stack;
      for (auto s : a.initial()) {
        if (!seen[s]) {
          seen[s] = true;
          stack.push_back(s);
        }
      }
      while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (auto const& e : a.out(s)) {
          if (!seen[e.target]) {
            seen[e.target] = true;
            stack.push_back(e.target);
          }
        }
      }
      return seen;
    }

    std::vector<bool> coreachable(Nfa const& a) {
      std::vector<std::vector<state_type>> in(a.num_states());
      for (state_type s = 0; s < a.num_states(); ++s) {
        for (auto const& e : a.out(s)) {
          in[e.target].push_back(s);
        }
      }
      std::vector<bool>       seen(a.num_states(), false);
      std::vector<state_type> stack;
      for (state_type s = 0; s < a.num_states(); ++s) {
        if (a.is_final(s)) {
          seen[s] = true;
          stack.push_back(s);
        }
      }
      while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (auto p : in[s]) {
          if (!seen[p]) {
            seen[p] = true;
            stack.push_back(p);
          }
        }
      }
      return seen;
    }

    // Subset-state bookkeeping shared by the determinization routines.
    class SubsetIndex {
     public:
      using subset_type = std::vector<state_type>;

      std::pair<state_type, bool> insert(subset_type const& s) {
        auto [it, inserted]
            = _index.emplace(s, static_cast<state_type>(_subsets.size()));
        if (inserted) {
          _subsets.push_back(s);
        }
        return {it->second, inserted};
      }

      subset_type const& operator[](state_type i) const {
        return _subsets[i];
      }

      std::size_t size() const {
        return _subsets.size();
      }

     private:
      std::map<subset_type, state_type> _index;
      std::vector<subset_type>          _subsets;
    };

    // Successor subsets of `s` for every symbol.
    std::vector<std::vector<state_type>> successors(
        Nfa const&                     a,
        std::vector<state_type> const& s) {
      std::vector<std::vector<state_type>> buckets(a.num_symbols());
      for (auto q : s) {
        for (auto const& e : a.out(q)) {
          buckets[e.symbol].push_back(e.target);
        }
      }
      for (auto& b : buckets) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
      }
      return buckets;
    }

    void check_same_alphabet(Nfa const& a, Nfa const& b) {
      if (a.num_symbols() != b.num_symbols()) {
        throw Error(error_kind::alphabet_mismatch,
                    "automata over " + std::to_string(a.num_symbols())
                        + " and " + std::to_string(b.num_symbols())
                        + " symbols");
      }
    }

  }  // namespace

  Nfa trim(Nfa const& a) {
    auto fwd = reachable(a);
    auto bwd = coreachable(a);
    // Renumber in BFS discovery order from the initial states.
    std::vector<state_type> index(a.num_states(), UINT32_MAX);
    std::deque<state_type>  queue;
    Nfa                     result(a.num_symbols());
    auto                    useful = [&](state_type s) {
      return fwd[s] && bwd[s];
    };
    for (auto s : a.initial()) {
      if (useful(s) && index[s] == UINT32_MAX) {
        index[s] = result.add_state();
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      auto s = queue.front();
      queue.pop_front();
      for (auto const& e : a.out(s)) {
        if (useful(e.target) && index[e.target] == UINT32_MAX) {
          index[e.target] = result.add_state();
          queue.push_back(e.target);
        }
      }
    }
    for (state_type s = 0; s < a.num_states(); ++s) {
      if (index[s] == UINT32_MAX) {
        continue;
      }
      for (auto const& e : a.out(s)) {
        if (index[e.target] != UINT32_MAX) {
          result.add_transition(index[s], e.symbol, index[e.target]);
        }
      }
      if (a.is_final(s)) {
        result.add_final(index[s]);
      }
    }
    for (auto s : a.initial()) {
      if (index[s] != UINT32_MAX) {
        result.add_initial(index[s]);
      }
    }
    result.normalize();
    return result;
  }

  Nfa intersect(Nfa const& a, Nfa const& b) {
    check_same_alphabet(a, b);
    Nfa                                        result(a.num_symbols());
    std::map<std::pair<state_type, state_type>, state_type> index;
    std::deque<std::pair<state_type, state_type>>           queue;
    auto visit = [&](state_type p, state_type q) {
      auto [it, inserted] = index.emplace(std::make_pair(p, q), 0);
      if (inserted) {
        it->second = result.add_state();
        if (a.is_final(p) && b.is_final(q)) {
          result.add_final(it->second);
        }
        queue.emplace_back(p, q);
      }
      return it->second;
    };
    for (auto p : a.initial()) {
      for (auto q : b.initial()) {
        result.add_initial(visit(p, q));
      }
    }
    while (!queue.empty()) {
      auto [p, q] = queue.front();
      queue.pop_front();
      auto from = index[{p, q}];
      // Both edge lists are sorted by symbol: merge join.
      auto const& ea = a.out(p);
      auto const& eb = b.out(q);
      std::size_t i = 0, j = 0;
      while (i < ea.size() && j < eb.size()) {
        if (ea[i].symbol < eb[j].symbol) {
          ++i;
        } else if (eb[j].symbol < ea[i].symbol) {
          ++j;
        } else {
          auto        x  = ea[i].symbol;
          std::size_t j0 = j;
          for (; i < ea.size() && ea[i].symbol == x; ++i) {
            for (j = j0; j < eb.size() && eb[j].symbol == x; ++j) {
              result.add_transition(from, x, visit(ea[i].target, eb[j].target));
            }
          }
        }
      }
    }
    return trim(result);
  }

  Nfa unite(Nfa const& a, Nfa const& b) {
    check_same_alphabet(a, b);
    Nfa  result(a.num_symbols());
    auto offset = static_cast<state_type>(a.num_states());
    result.add_states(a.num_states() + b.num_states());
    for (state_type s = 0; s < a.num_states(); ++s) {
      for (auto const& e : a.out(s)) {
        result.add_transition(s, e.symbol, e.target);
      }
      result.set_final(s, a.is_final(s));
    }
    for (state_type s = 0; s < b.num_states(); ++s) {
      for (auto const& e : b.out(s)) {
        result.add_transition(s + offset, e.symbol, e.target + offset);
      }
      result.set_final(s + offset, b.is_final(s));
    }
    for (auto s : a.initial()) {
      result.add_initial(s);
    }
    for (auto s : b.initial()) {
      result.add_initial(s + offset);
    }
    return trim(result);
  }

  Nfa determinize_complete(Nfa const& input) {
    Nfa         a = trim(input);
    Nfa         result(a.num_symbols());
    SubsetIndex subsets;
    auto        visit = [&](std::vector<state_type> const& s) {
      auto [id, inserted] = subsets.insert(s);
      if (inserted) {
        result.add_state();
        if (std::any_of(s.begin(), s.end(), [&a](auto q) {
              return a.is_final(q);
            })) {
          result.add_final(id);
        }
      }
      return std::make_pair(id, inserted);
    };
    result.add_initial(visit(a.initial()).first);
    for (state_type i = 0; i < subsets.size(); ++i) {
      auto next = successors(a, subsets[i]);
      for (letter_type x = 0; x < a.num_symbols(); ++x) {
        result.add_transition(i, x, visit(next[x]).first);
      }
    }
    result.normalize();
    return result;
  }

  Nfa complement(Nfa const& a) {
    Nfa d = determinize_complete(a);
    for (state_type s = 0; s < d.num_states(); ++s) {
      d.set_final(s, !d.is_final(s));
    }
    return trim(d);
  }

  Nfa reverse_invert(Nfa const& a) {
    if (a.num_symbols() % 2 != 0) {
      throw Error(error_kind::alphabet_mismatch,
                  "reverse_invert needs an inverse-closed alphabet");
    }
    std::size_t rank = a.num_symbols() / 2;
    Nfa         result(a.num_symbols());
    result.add_states(a.num_states());
    for (state_type s = 0; s < a.num_states(); ++s) {
      for (auto const& e : a.out(s)) {
        result.add_transition(e.target, inverse_letter(e.symbol, rank), s);
      }
      if (a.is_final(s)) {
        result.add_initial(s);
      }
    }
    for (auto s : a.initial()) {
      result.add_final(s);
    }
    return trim(result);
  }

  bool is_empty(Nfa const& a) {
    auto seen = reachable(a);
    for (state_type s = 0; s < a.num_states(); ++s) {
      if (seen[s] && a.is_final(s)) {
        return false;
      }
    }
    return true;
  }

  bool is_finite_language(Nfa const& input) {
    Nfa a = trim(input);
    // Iterative three-colour DFS looking for a cycle.
    enum : char { white, grey, black };
    std::vector<char> colour(a.num_states(), white);
    for (state_type root = 0; root < a.num_states(); ++root) {
      if (colour[root] != white) {
        continue;
      }
      std::vector<std::pair<state_type, std::size_t>> stack{{root, 0}};
      colour[root] = grey;
      while (!stack.empty()) {
        auto& [s, i] = stack.back();
        if (i < a.out(s).size()) {
          auto t = a.out(s)[i++].target;
          if (colour[t] == grey) {
            return false;
          }
          if (colour[t] == white) {
            colour[t] = grey;
            stack.emplace_back(t, 0);
          }
        } else {
          colour[s] = black;
          stack.pop_back();
        }
      }
    }
    return true;
  }

  std::optional<word_type> subset_counterexample(Nfa const& input_a,
                                                 Nfa const& b) {
    check_same_alphabet(input_a, b);
    Nfa a = trim(input_a);
    if (a.num_states() == 0) {
      return std::nullopt;
    }
    Nfa  db     = determinize_complete(b);
    auto q_init = db.initial().front();

    struct Node {
      state_type  p, q;
      std::size_t parent;
      letter_type symbol;
    };
    std::vector<Node>                                       nodes;
    std::set<std::pair<state_type, state_type>>             seen;
    auto word_of = [&nodes](std::size_t i) {
      word_type w;
      while (nodes[i].parent != SIZE_MAX) {
        w.push_back(nodes[i].symbol);
        i = nodes[i].parent;
      }
      std::reverse(w.begin(), w.end());
      return w;
    };
    auto bad = [&](state_type p, state_type q) {
      return a.is_final(p) && !db.is_final(q);
    };
    for (auto p : a.initial()) {
      if (seen.emplace(p, q_init).second) {
        nodes.push_back({p, q_init, SIZE_MAX, 0});
        if (bad(p, q_init)) {
          return word_of(nodes.size() - 1);
        }
      }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      auto [p, q, parent, sym] = nodes[i];
      (void) parent;
      (void) sym;
      for (auto const& e : a.out(p)) {
        auto q2 = *db.step(q, e.symbol);
        if (seen.emplace(e.target, q2).second) {
          nodes.push_back({e.target, q2, i, e.symbol});
          if (bad(e.target, q2)) {
            return word_of(nodes.size() - 1);
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_subset(Nfa const& a, Nfa const& b) {
    return !subset_counterexample(a, b).has_value();
  }

  bool languages_equal(Nfa const& a, Nfa const& b) {
    return is_subset(a, b) && is_subset(b, a);
  }

  std::optional<word_type> shortest_accepted(Nfa const& input) {
    Nfa a = trim(input);
    if (a.num_states() == 0) {
      return std::nullopt;
    }
    // Breadth-first search of the subset automaton with letters explored in
    // order yields the shortlex-least accepted word.
    SubsetIndex                                   subsets;
    std::vector<std::pair<std::size_t, letter_type>> parent;
    auto accepting = [&a](std::vector<state_type> const& s) {
      return std::any_of(
          s.begin(), s.end(), [&a](auto q) { return a.is_final(q); });
    };
    auto word_of = [&parent](std::size_t i) {
      word_type w;
      while (parent[i].first != SIZE_MAX) {
        w.push_back(parent[i].second);
        i = parent[i].first;
      }
      std::reverse(w.begin(), w.end());
      return w;
    };
    subsets.insert(a.initial());
    parent.emplace_back(SIZE_MAX, 0);
    for (state_type i = 0; i < subsets.size(); ++i) {
      if (accepting(subsets[i])) {
        return word_of(i);
      }
      auto next = successors(a, subsets[i]);
      for (letter_type x = 0; x < a.num_symbols(); ++x) {
        if (next[x].empty()) {
          continue;
        }
        if (subsets.insert(next[x]).second) {
          parent.emplace_back(i, x);
        }
      }
    }
    return std::nullopt;
  }

  std::vector<word_type> enumerate_words(Nfa const&  a,
                                         std::size_t max_length,
                                         std::size_t cap) {
    Nfa d = trim(determinize_complete(a));
    std::vector<word_type> result;
    if (d.num_states() == 0) {
      return result;
    }
    // Level-by-level expansion keeps the output in shortlex order.
    std::vector<std::pair<state_type, word_type>> level{
        {d.initial().front(), {}}};
    for (std::size_t len = 0; len <= max_length && !level.empty(); ++len) {
      std::vector<std::pair<state_type, word_type>> next;
      for (auto& [s, w] : level) {
        if (d.is_final(s)) {
          if (result.size() >= cap) {
            return result;
          }
          result.push_back(w);
        }
        if (len == max_length) {
          continue;
        }
        for (auto const& e : d.out(s)) {
          word_type v(w);
          v.push_back(e.symbol);
          next.emplace_back(e.target, std::move(v));
        }
      }
      level = std::move(next);
    }
    return result;
  }

  std::optional<std::vector<word_type>> finite_language_words(Nfa const&  a,
                                                              std::size_t cap) {
    if (!is_finite_language(a)) {
      return std::nullopt;
    }
    Nfa  d     = trim(determinize_complete(a));
    auto words = enumerate_words(d, d.num_states(), cap + 1);
    if (words.size() > cap) {
      throw Error(error_kind::too_many_elements,
                  "more than " + std::to_string(cap) + " accepted words");
    }
    return words;
  }

}  // namespace stallings

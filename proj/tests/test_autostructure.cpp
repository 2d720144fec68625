#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stallings/autostructure.hpp"
#include "stallings/bundled.hpp"
#include "stallings/error.hpp"

using namespace stallings;

namespace {
  Alphabet const ab({"a", "b"});

  word_type w(std::string const& text) {
    return ab.parse(text);
  }

  Nfa lang(std::vector<std::string> const& texts) {
    Nfa result(4);
    result.add_state();
    result.add_initial(0);
    for (auto const& t : texts) {
      result = unite(result, word_automaton(w(t), 4));
    }
    return result;
  }

  bool same(Nfa const& a, Nfa const& b) {
    return is_subset(a, b) && is_subset(b, a);
  }

  std::vector<word_type> all_words(std::size_t rank, std::size_t max_len) {
    std::vector<word_type> out{{}}, level{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<word_type> next;
      for (auto const& u : level) {
        for (letter_type x = 0; x < 2 * rank; ++x) {
          auto v = u;
          v.push_back(x);
          next.push_back(v);
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      level = std::move(next);
    }
    return out;
  }
}  // namespace

TEST_CASE("padding closure") {
  PairAutomaton m(2);
  auto&         n = m.nfa();
  n.add_states(3);
  n.add_initial(0);
  n.add_transition(0, m.encode(0, 0), 1);
  n.add_transition(1, m.encode(m.padding(), 1), 2);
  n.add_final(2);
  CHECK(m.accepts(w("a"), w("a b")));
  auto closed = pad_close(m);
  auto pad    = m.padding();
  CHECK(closed.nfa().accepts({m.encode(0, 0), m.encode(pad, 1), m.encode(pad, pad)}));
  // The new sink is the only final state.
  CHECK_FALSE(closed.nfa().accepts({m.encode(0, 0), m.encode(pad, 1)}));
  CHECK(closed.nfa().finals().size() == 1);

  PairAutomaton empty(2);
  empty.nfa().add_state();
  empty.nfa().add_initial(0);
  CHECK(is_empty(pad_close(empty).nfa()));
}

TEST_CASE("multipliers of the free group") {
  auto const& as = bundled_group("F2")->structure;
  CHECK(same(multiply(as, lang({""}), 0), lang({"a"})));
  CHECK(same(multiply(as, lang({"a"}), 2), lang({""})));
  CHECK(same(multiply_word(as, lang({""}), w("a b")), lang({"a b"})));
  CHECK(same(l_representatives(as, w("a a'")), lang({""})));
  CHECK(some_l_representative(as, w("a b b'")) == w("a"));
  // h = 1 keeps the representatives of K.
  CHECK(same(multiply_word(as, lang({"a", "b a'"}), {}), lang({"a", "b a'"})));
}

TEST_CASE("multipliers of Z2 shortlex") {
  auto const& as = bundled_group("Z2")->structure;
  CHECK(same(multiply(as, lang({"b"}), 0), lang({"a b"})));
  CHECK(same(multiply_word(as, lang({""}), w("b a")), lang({"a b"})));
  CHECK(same(l_representatives(as, w("b a b'")), lang({"a"})));
  CHECK(some_l_representative(as, w("b a")) == w("a b"));
  CHECK(some_l_representative(as, as.identity_rep) == as.identity_rep);

  // Against the brute-force shortlex oracle.
  for (auto const& u : all_words(2, 5)) {
    auto [x, y] = oracle::z2_eval(u);
    auto rep    = oracle::z2_bruteforce_rep(x, y, 5);
    REQUIRE(rep);
    REQUIRE(some_l_representative(as, u) == *rep);
  }
}

TEST_CASE("missing multipliers") {
  auto as            = bundled_group("F2")->structure;
  as.multipliers[1]  = std::nullopt;
  CHECK_THROWS_AS((void) multiply(as, lang({""}), 1), Error);
  auto report = validate(as, 2);
  CHECK_FALSE(report.ok());
  REQUIRE(report.find("multiplier_completeness"));
  CHECK_FALSE(report.find("multiplier_completeness")->passed);

  as                    = bundled_group("F2")->structure;
  as.flags.unique_reps  = false;
  as.identity_multiplier = std::nullopt;
  CHECK_THROWS_AS((void) multiply_identity(as, lang({""})), Error);
}

TEST_CASE("validation") {
  for (auto const& name : bundled_names()) {
    auto g      = bundled_group(name);
    auto report = validate(g->structure, 3, g->oracle);
    CAPTURE(name);
    CHECK(report.ok());
  }
  auto as = bundled_group("F2")->structure;
  as.word_acceptor = unite(as.word_acceptor, word_automaton(w("a a'"), 4));
  auto report      = validate(as, 2);
  CHECK_FALSE(report.ok());
  REQUIRE(report.find("reduced"));
  CHECK_FALSE(report.find("reduced")->passed);
}

TEST_CASE("representatives exist and are unique when flagged") {
  for (auto const& name : bundled_names()) {
    auto const& as = bundled_group(name)->structure;
    CAPTURE(name);
    for (auto const& u : all_words(as.rank(), as.rank() == 3 ? 3 : 4)) {
      auto reps = l_representatives(as, u);
      REQUIRE_FALSE(is_empty(reps));
      if (as.flags.unique_reps) {
        auto words = finite_language_words(reps, 10);
        REQUIRE(words);
        REQUIRE(words->size() == 1);
      }
    }
  }
}

TEST_CASE("inverse soundness of inverse-closed structures") {
  for (auto const& name : bundled_names()) {
    auto const& as = bundled_group(name)->structure;
    if (!as.flags.inverse_closed) {
      continue;
    }
    CAPTURE(name);
    for (auto const& u : all_words(as.rank(), 3)) {
      auto lhs = reverse_invert(l_representatives(as, u));
      auto rhs = l_representatives(as, inverse_word(u, as.rank()));
      CHECK(enumerate_words(lhs, 6, 1000) == enumerate_words(rhs, 6, 1000));
    }
  }
}

TEST_CASE("composition coherence") {
  std::mt19937 rng(99);
  for (auto const& name : {"F2", "Z2", "Z2x3"}) {
    auto const& as   = bundled_group(name)->structure;
    auto const  rank = as.rank();
    CAPTURE(name);
    for (int i = 0; i < 10; ++i) {
      auto k  = trim(intersect(oracle::random_nfa(rng, 3, 2 * rank), as.word_acceptor));
      auto h1 = oracle::random_reduced_word(rng, rank, rng() % 3);
      auto h2 = oracle::random_reduced_word(rng, rank, rng() % 3);
      auto h  = concat(h1, h2);
      auto whole   = multiply_word(as, k, h);
      auto stepped = multiply_word(as, multiply_word(as, k, h1), h2);
      CHECK(same(whole, stepped));
      if (h.size() == free_reduce(h, rank).size()) {
        CHECK(same(whole, oracle::direct_multiply(as, k, h)));
      }
    }
  }
}

#include "doctest.h"
#include "oracles.hpp"
#include "stallings/bundled.hpp"
#include "stallings/completion.hpp"
#include "stallings/error.hpp"

using namespace stallings;

namespace {
  Alphabet const ab({"a", "b"});

  std::vector<word_type> ws(std::vector<std::string> const& texts) {
    std::vector<word_type> out;
    for (auto const& t : texts) {
      out.push_back(ab.parse(t));
    }
    return out;
  }

  CompletionOptions budget(std::size_t iterations) {
    CompletionOptions o;
    o.budget.max_iterations = iterations;
    o.check_monotone        = true;
    return o;
  }
}  // namespace

TEST_CASE("certification test") {
  auto f2 = bundled_group("F2");
  auto z2 = bundled_group("Z2");
  auto a  = stallings_free(ws({"a"}), 2);
  CHECK(is_stallings_like(f2->structure, a, ws({"a"})));
  CHECK(is_stallings_like(z2->structure, a, ws({"a"})));
  auto bab = ws({"b a b'"});
  CHECK_FALSE(is_stallings_like(z2->structure, stallings_free(bab, 2), bab));
}

TEST_CASE("completion in free groups certifies at once") {
  auto f2   = bundled_group("F2");
  auto gens = ws({"a", "b a b'"});
  auto cert = complete(f2->structure, f2->presentation, gens);
  CHECK(cert.certified());
  CHECK(cert.iterations_used == 0);
  CHECK(cert.graph == oracle::classical_stallings(gens, 2));
}

TEST_CASE("completion in Z2") {
  auto z2   = bundled_group("Z2");
  auto cert = complete(z2->structure, z2->presentation, ws({"b a b'"}), budget(12));
  CHECK(cert.certified());
  CHECK(cert.iterations_used >= 1);
  CHECK(cert.graph.read(cert.graph.base(), ab.parse("a")) == cert.graph.base());

  auto diag = complete(z2->structure, z2->presentation, ws({"a b"}), budget(5));
  CHECK_FALSE(diag.certified());
  CHECK(diag.result == verdict::budget_exhausted);
  CHECK(diag.iterations_used == 5);
  for (auto const& r : diag.log) {
    if (r.monotone) {
      CHECK(*r.monotone);
    }
  }
  // Resuming spends the remaining budget on the same sequence.
  auto more = resume(z2->structure, z2->presentation, diag, budget(7));
  CHECK_FALSE(more.certified());
  CHECK(more.iterations_used == 7);
  CHECK(more.graph.num_vertices() > diag.graph.num_vertices());
}

TEST_CASE("known constants") {
  auto f2 = bundled_group("F2");
  auto z2 = bundled_group("Z2");
  auto c  = complete_with_constant(f2->structure, f2->presentation, ws({"a"}), 0);
  CHECK(c.certified());
  CHECK(c.graph == stallings_free(ws({"a"}), 2));
  CHECK(complete_with_constant(z2->structure, z2->presentation, ws({"b a b'"}), 1)
            .certified());
  try {
    (void) complete_with_constant(z2->structure, z2->presentation, ws({"a b"}), 3);
    FAIL("expected InvalidConstant");
  } catch (Error const& e) {
    CHECK(e.kind() == error_kind::invalid_constant);
  }
}

TEST_CASE("trivial subgroup") {
  auto z2   = bundled_group("Z2");
  auto cert = complete(z2->structure, z2->presentation, {});
  CHECK(cert.certified());
  CHECK(cert.graph.num_vertices() == 1);
  CHECK(cert.graph.num_edges() == 0);
}

TEST_CASE("progress callback and stride") {
  auto                         z2 = bundled_group("Z2");
  std::vector<IterationRecord> seen;
  CompletionOptions            o = budget(4);
  o.budget.check_stride           = 3;
  o.progress = [&seen](IterationRecord const& r) { seen.push_back(r); };
  auto cert  = complete(z2->structure, z2->presentation, ws({"a b"}), o);
  REQUIRE(seen.size() == cert.log.size());
  for (auto const& r : seen) {
    CHECK(r.checked == (r.iteration % 3 == 0 || r.iteration == 4));
  }
  std::size_t previous = 0;
  for (auto const& r : seen) {
    CHECK(r.vertices >= previous);
    previous = r.vertices;
  }
}

TEST_CASE("loop words of every step lie in H") {
  // Z2 with H = <a, b b>: (x, y) lies in H iff y is even.
  auto z2   = bundled_group("Z2");
  auto cert = complete(z2->structure, z2->presentation, ws({"a", "b b"}), budget(3));
  RootedGraph g = stallings_free(ws({"a", "b b"}), 2);
  for (int i = 0; i < 3; ++i) {
    for (auto const& u : generators_from_graph(g)) {
      CHECK(oracle::z2_eval(u).second % 2 == 0);
    }
    g = attach_relators(g, z2->presentation);
  }

  // Z/2*Z/3 with H = <a> = {1, a}.
  auto z23 = bundled_group("Z2x3");
  g        = stallings_free(ws({"a"}), 2);
  for (int i = 0; i < 4; ++i) {
    for (auto const& u : generators_from_graph(g)) {
      CHECK(((*z23->oracle)(u) || (*z23->oracle)(concat(u, ab.parse("a")))));
    }
    g = attach_relators(g, z23->presentation);
  }
}

TEST_CASE("monotone loop languages") {
  for (auto const& [name, gens] :
       std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"Z2", {"a b"}}, {"Z2x3", {"b a b'"}}, {"S3", {"a"}}, {"D4", {"a a"}}}) {
    auto g    = bundled_group(name);
    // Every group here has rank 2, so a and b stand for its two letters.
    auto cert = complete(g->structure, g->presentation, ws(gens), budget(4));
    CAPTURE(name);
    for (auto const& r : cert.log) {
      if (r.monotone) {
        CHECK(*r.monotone);
      }
    }
  }
}

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "stallings/algorithms.hpp"
#include "stallings/bundled.hpp"
#include "stallings/error.hpp"

using namespace stallings;

namespace {

  using clock_type = std::chrono::steady_clock;

  double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
  }

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  Alphabet const ab({"a", "b"});

  word_type w(std::string const& text) {
    return ab.parse(text);
  }

  std::vector<word_type> ws(std::vector<std::string> const& texts) {
    std::vector<word_type> out;
    for (auto const& t : texts) {
      out.push_back(w(t));
    }
    return out;
  }

  // Every completion run goes through this mode so that criterion 9 sees the
  // monotonicity log of all of them.
  struct MonotoneLog {
    std::size_t steps    = 0;
    std::size_t failures = 0;
  } monotone_log;

  PipelineMode logged_mode() {
    PipelineMode mode;
    mode.options.check_monotone = true;
    mode.options.progress       = [](IterationRecord const& r) {
      if (r.monotone) {
        ++monotone_log.steps;
        monotone_log.failures += !*r.monotone;
      }
    };
    return mode;
  }

  PipelineMode const logged = logged_mode();

  SubgroupHandle sub(std::string const& group, std::vector<word_type> const& gens) {
    return subgroup(bundled_group(group), gens, logged);
  }

  // Every certified canonical graph built in the run, for criterion 2.
  std::vector<SubgroupHandle> corpus;

  SubgroupHandle keep(SubgroupHandle h) {
    corpus.push_back(h);
    return h;
  }

  std::vector<word_type> random_tuple(std::mt19937& rng, std::size_t rank) {
    std::vector<word_type> gens;
    std::size_t            total = 0;
    for (int j = 1 + rng() % 4; j > 0; --j) {
      auto len = 1 + rng() % 12;
      if (total + len > 40) {
        break;
      }
      gens.push_back(oracle::random_reduced_word(rng, rank, len));
      total += len;
    }
    return gens;
  }

  Outcome free_group_oracle() {
    std::mt19937 rng(101);
    std::size_t  mismatches = 0;
    double       slowest    = 0;
    for (int i = 0; i < 200; ++i) {
      std::size_t const rank  = i % 2 ? 3 : 2;
      auto              gens  = random_tuple(rng, rank);
      auto              start = clock_type::now();
      auto const&       h     = keep(sub(rank == 2 ? "F2" : "F3", gens));
      slowest                 = std::max(slowest, seconds_since(start));
      mismatches += !rooted_isomorphic(h.canonical, oracle::classical_stallings(gens, rank));
    }
    std::ostringstream d;
    d << "200 tuples, " << mismatches << " mismatches, slowest " << slowest << " s";
    return {mismatches == 0 && slowest < 1.0, d.str()};
  }

  Outcome vertex_bound() {
    std::size_t violations = 0;
    for (auto const& h : corpus) {
      auto const k = h.qc_constant;
      auto const r = h.structure().rank();
      if (h.canonical.num_vertices() > reduced_ball_size(r, k)
          || diameter(h.canonical) > 2 * k) {
        ++violations;
      }
    }
    std::ostringstream d;
    d << corpus.size() << " certified graphs, " << violations << " violations";
    return {violations == 0, d.str()};
  }

  // One random Nielsen move: invert, swap, or multiply by another generator.
  void nielsen_move(std::mt19937& rng, std::vector<word_type>& gens) {
    auto i = rng() % gens.size();
    auto j = rng() % gens.size();
    switch (rng() % 3) {
      case 0: gens[i] = inverse_word(gens[i], 2); break;
      case 1: std::swap(gens[i], gens[j]); break;
      default:
        if (i != j) {
          auto g  = rng() % 2 ? gens[j] : inverse_word(gens[j], 2);
          gens[i] = free_reduce(rng() % 2 ? concat(gens[i], g) : concat(g, gens[i]), 2);
        }
    }
  }

  Outcome canonicality() {
    std::mt19937 rng(303);
    std::size_t  pairs = 0, mismatches = 0;
    while (pairs < 40) {
      auto gens = random_tuple(rng, 2);
      auto moved = gens;
      for (int m = 0; m < 4 || moved == gens; ++m) {
        nielsen_move(rng, moved);
      }
      if (moved.size() > 3 || std::any_of(moved.begin(), moved.end(),
                                          [](auto const& g) { return g.size() > 16; })) {
        continue;
      }
      ++pairs;
      mismatches += keep(sub("F2", gens)).canonical != keep(sub("F2", moved)).canonical;
    }
    // Z2: H = <a^m, b^n> or <a^m>, plus a redundant element of H written
    // in a random order.
    for (int i = 0; i < 10; ++i) {
      std::size_t const      m = 1 + i % 3, n = 1 + (i / 3) % 3;
      std::vector<word_type> gens{word_type(m, 0)};
      if (i < 9) {
        gens.push_back(word_type(n, 1));
      }
      word_type extra;
      for (int j = 0; j < 2 + static_cast<int>(rng() % 3); ++j) {
        auto g = gens[rng() % gens.size()];
        extra = concat(extra, rng() % 2 ? g : inverse_word(g, 2));
      }
      std::shuffle(extra.begin(), extra.end(), rng);
      if (free_reduce(extra, 2).empty()) {
        extra = concat(gens[0], gens[0]);
      }
      auto more = gens;
      more.push_back(extra);
      ++pairs;
      mismatches += keep(sub("Z2", gens)).canonical != keep(sub("Z2", more)).canonical;
    }
    std::ostringstream d;
    d << pairs << " pairs, " << mismatches << " mismatches";
    return {mismatches == 0 && pairs >= 50, d.str()};
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

  Outcome multiplier_composition() {
    std::mt19937 rng(404);
    std::size_t  checks = 0, mismatches = 0;
    for (auto const& name : bundled_names()) {
      auto const& as   = bundled_group(name)->structure;
      auto const  rank = as.rank();
      for (int i = 0; i < 20; ++i) {
        auto k = trim(intersect(oracle::random_nfa(rng, 1 + rng() % 4, 2 * rank, 0.25),
                                as.word_acceptor));
        for (auto const& h : all_words(rank, 3)) {
          auto stepped = multiply_word(as, k, h);
          auto direct  = oracle::direct_multiply(as, k, h);
          ++checks;
          mismatches += !(is_subset(stepped, direct) && is_subset(direct, stepped));
        }
      }
    }
    std::ostringstream d;
    d << checks << " (group, K, h) triples, " << mismatches << " mismatches";
    return {mismatches == 0, d.str()};
  }

  Outcome finite_groups() {
    auto         start = clock_type::now();
    std::size_t  checks = 0, mismatches = 0;
    for (auto const& [name, perms] :
         std::vector<std::pair<std::string, std::vector<oracle::perm>>>{
             {"S3", {{1, 0, 2}, {1, 2, 0}}}, {"D4", {{1, 2, 3, 0}, {0, 3, 2, 1}}}}) {
      auto const g      = bundled_group(name);
      auto const pg     = oracle::perm_group(perms);
      auto const all    = pg.all();
      // One word per element, and the subgroups generated by one or two of
      // them.
      std::vector<word_type>            elements;
      std::set<oracle::perm>            seen;
      for (auto const& u : all_words(2, 4)) {
        if (seen.insert(pg.eval(u)).second) {
          elements.push_back(u);
        }
      }
      auto closure = [&](std::vector<word_type> const& gens) {
        std::vector<oracle::perm> ps;
        for (auto const& u : gens) {
          ps.push_back(pg.eval(u));
        }
        return pg.closure(ps);
      };
      std::vector<std::vector<word_type>> tuples;
      for (std::size_t i = 0; i < elements.size(); ++i) {
        tuples.push_back({elements[i]});
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
          tuples.push_back({elements[i], elements[j]});
        }
      }
      std::vector<SubgroupHandle> handles;
      for (auto const& t : tuples) {
        handles.push_back(keep(subgroup(g, t, logged)));
      }
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        auto const& h  = handles[i];
        auto const  hs = closure(tuples[i]);
        for (auto const& u : elements) {
          ++checks;
          mismatches += member(h, u) != hs.count(pg.eval(u)) > 0;
        }
        auto fi = has_finite_index(h);
        ++checks;
        mismatches += !fi.finite || fi.index != std::optional(pg.index(hs));
        auto el = elements_if_finite(h);
        ++checks;
        mismatches += !is_finite(h) || !el || el->size() != hs.size();
        for (std::size_t j = 0; j < tuples.size(); ++j) {
          auto const ks   = closure(tuples[j]);
          auto       meet = intersection(h, handles[j]);
          std::size_t common = 0;
          for (auto const& p : hs) {
            common += ks.count(p);
          }
          auto me = elements_if_finite(meet);
          ++checks;
          mismatches += !me || me->size() != common;
          for (auto const& u : elements) {
            auto p = pg.eval(u);
            ++checks;
            mismatches += member(meet, u) != (hs.count(p) && ks.count(p));
          }
        }
      }
    }
    double             elapsed = seconds_since(start);
    std::ostringstream d;
    d << "S3 and D4, " << checks << " checks, " << mismatches << " mismatches, "
      << elapsed << " s";
    return {mismatches == 0 && elapsed < 10.0, d.str()};
  }

  Outcome z2_suite() {
    std::vector<std::string> failures;
    auto a = keep(sub("Z2", ws({"a"})));
    if (a.qc_constant != 0) {
      failures.push_back("<a> constant");
    }
    auto ab2 = keep(sub("Z2", ws({"a", "b b"})));
    auto fi  = has_finite_index(ab2);
    if (!fi.finite || fi.index != std::optional<std::size_t>(2)
        || ab2.canonical.num_vertices() != 2) {
      failures.push_back("<a, b b> index");
    }
    if (keep(sub("Z2", ws({"b a b'"}))).canonical != a.canonical) {
      failures.push_back("<b a b'> graph");
    }
    PipelineMode five = logged;
    five.options.budget.max_iterations = 5;
    auto diag = stallings_graph(bundled_group("Z2"), ws({"a b"}), five);
    if (diag.handle || diag.certificate.result != verdict::budget_exhausted) {
      failures.push_back("<a b> budget");
    }
    std::string detail = failures.empty() ? "4 cases" : "failed:";
    for (auto const& f : failures) {
      detail += " " + f + ";";
    }
    return {failures.empty(), detail};
  }

  Outcome bp_suite() {
    auto const               start = clock_type::now();
    auto const               cfg   = BpConfig::hyperbolic(0);
    std::vector<std::string> failures;
    auto                     a = keep(sub("F2", ws({"a"})));
    if (!is_almost_malnormal(a, cfg, logged).holds) {
      failures.push_back("<a> malnormal");
    }
    auto m2 = is_almost_malnormal(keep(sub("F2", ws({"a a"}))), cfg, logged);
    if (m2.holds || m2.witness != std::optional(w("a"))) {
      failures.push_back("<a a> not malnormal");
    }
    if (height(a, cfg, logged).height != 1) {
      failures.push_back("height <a>");
    }
    auto k = keep(sub("F2", ws({"b a b'"})));
    auto c = is_conjugate_to(a, k, cfg, logged);
    if (!c.holds || !c.witness || !subgroup_eq(a, conjugate(k, *c.witness, logged))) {
      failures.push_back("conjugacy witness");
    }

    // Double cosets H g K with K n H^g infinite have a short representative.
    std::mt19937 rng(707);
    std::size_t  instances = 0, attempts = 0, misses = 0;
    while (instances < 50 && attempts < 2000) {
      ++attempts;
      std::vector<word_type> hg, kg;
      for (int j = 1 + rng() % 2; j > 0; --j) {
        hg.push_back(oracle::random_reduced_word(rng, 2, 1 + rng() % 3));
      }
      auto g = oracle::random_reduced_word(rng, 2, rng() % 5);
      if (rng() % 2) {
        // K shares an element with H^g by construction.
        auto const& x = hg[rng() % hg.size()];
        kg.push_back(free_reduce(concat(concat(inverse_word(g, 2), x), g), 2));
      }
      kg.push_back(oracle::random_reduced_word(rng, 2, 1 + rng() % 3));
      auto h  = keep(sub("F2", hg));
      auto kk = keep(sub("F2", kg));
      if (is_finite(intersection(kk, conjugate(h, g, logged)))) {
        continue;
      }
      ++instances;
      auto const radius = 2 * cfg.nu(std::max(h.qc_constant, kk.qc_constant));
      bool       found  = false;
      for (auto const& s : reduced_ball(2, radius)) {
        if (double_coset_eq(h, g, kk, s)) {
          found = true;
          break;
        }
      }
      misses += !found;
    }
    if (instances < 50 || misses > 0) {
      failures.push_back("double cosets: " + std::to_string(misses) + " of "
                         + std::to_string(instances) + " without a short representative");
    }
    double             elapsed = seconds_since(start);
    std::ostringstream d;
    d << instances << " double-coset instances, " << elapsed << " s";
    for (auto const& f : failures) {
      d << "; failed: " << f;
    }
    return {failures.empty() && elapsed < 60.0, d.str()};
  }

  Outcome rule_absorption() {
    std::mt19937 rng(808);
    std::size_t  samples = 0, rejected = 0, rejected_early = 0;
    for (auto const& [name, gens] :
         std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"Z2x3", {"b a b'"}}, {"Z2", {"a"}}}) {
      auto const g = bundled_group(name);
      // G_0 .. G_4
      std::vector<RootedGraph> steps{stallings_free(ws(gens), 2)};
      for (int i = 0; i < 4; ++i) {
        steps.push_back(attach_relators(steps.back(), g->presentation));
      }
      std::vector<Nfa> loops;
      for (auto const& s : steps) {
        loops.push_back(loops_automaton(s));
      }
      for (int i = 0; i < 100; ++i) {
        word_type   u;
        std::size_t length = rng() % 5;
        for (std::size_t j = 0; j < length; ++j) {
          u = oracle::random_rule(rng, u, g->presentation);
        }
        ++samples;
        rejected += !loops[4].accepts(u);
        rejected_early += !loops[length].accepts(u);
      }
    }
    std::ostringstream d;
    d << samples << " derivations, " << rejected << " rejected by G_4 ("
      << rejected_early << " rejected by G_i at their own length i)";
    return {rejected == 0, d.str()};
  }

  Outcome monotonicity() {
    // Most runs above certify at step 0; these force four executed steps on
    // random subgroups of every group with relators.
    std::mt19937 rng(909);
    auto         options = logged.options;
    options.budget       = {4, 200000, 100};
    for (auto const& name : {"Z2", "Z2x3", "S3", "D4"}) {
      auto const g = bundled_group(name);
      for (int i = 0; i < 10; ++i) {
        std::vector<word_type> gens;
        for (int j = 1 + rng() % 2; j > 0; --j) {
          gens.push_back(oracle::random_reduced_word(rng, 2, 1 + rng() % 4));
        }
        (void) complete(g->structure, g->presentation, gens, options);
      }
    }
    std::ostringstream d;
    d << monotone_log.steps << " logged steps, " << monotone_log.failures
      << " non-monotone";
    return {monotone_log.failures == 0 && monotone_log.steps > 0, d.str()};
  }

  Outcome finite_index() {
    std::vector<std::string> failures;
    auto kernel = keep(sub("F2", ws({"a a", "b", "a b a'"})));
    auto r      = has_finite_index(kernel);
    if (!r.finite || r.index != std::optional<std::size_t>(2)
        || kernel.canonical.num_vertices() != 2) {
      failures.push_back("F2 kernel");
    }
    auto z  = keep(sub("Z2", ws({"a", "b b"})));
    auto rz = has_finite_index(z);
    if (!rz.finite || rz.index != std::optional<std::size_t>(2)
        || z.canonical.num_vertices() != 2) {
      failures.push_back("Z2 <a, b b>");
    }
    auto a  = keep(sub("F2", ws({"a"})));
    auto ra = has_finite_index(a);
    if (ra.finite || !ra.witness || !a.structure().word_acceptor.accepts(*ra.witness)
        || a.canonical.read(a.canonical.base(), *ra.witness)) {
      failures.push_back("F2 <a>");
    }
    std::string detail = "kernel 2, Z2 2, <a> escapes via \""
                         + (ra.witness ? ab.format(*ra.witness) : std::string("?")) + "\"";
    for (auto const& f : failures) {
      detail += "; failed: " + f;
    }
    return {failures.empty(), detail};
  }

}  // namespace

int main() {
  // Criterion 2 reads the graphs built by the others and 9 their logs, so
  // both run last.
  std::vector<std::pair<int, std::pair<std::string, std::function<Outcome()>>>> criteria{
      {1, {"free-group oracle equivalence", free_group_oracle}},
      {3, {"canonicality", canonicality}},
      {4, {"multiplier composition vs direct product", multiplier_composition}},
      {5, {"finite-group brute force", finite_groups}},
      {6, {"Z2 suite", z2_suite}},
      {7, {"BP suite on F2", bp_suite}},
      {8, {"rule absorption", rule_absorption}},
      {10, {"finite index", finite_index}},
      {2, {"vertex bound and diameter", vertex_bound}},
      {9, {"monotone loop languages", monotonicity}},
  };
  std::map<int, std::string> lines;
  bool                       all = true;
  for (auto const& [id, item] : criteria) {
    auto const& [name, run] = item;
    Outcome     o;
    auto        start = clock_type::now();
    try {
      o = run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " ("
         << o.detail << ") [" << seconds_since(start) << " s]";
    lines[id] = line.str();
    all       = all && o.pass;
  }
  for (auto const& [id, line] : lines) {
    std::cout << line << "\n";
  }
  return all ? 0 : 1;
}

#include "stallings/algorithms.hpp"

#include <algorithm>

#include "stallings/error.hpp"

namespace stallings {

  BpConfig BpConfig::hyperbolic(std::size_t delta) {
    return affine(1, 2 * delta);
  }

  BpConfig BpConfig::table(std::vector<std::size_t> values) {
    BpConfig cfg;
    cfg._table  = std::move(values);
    cfg._tabled = true;
    return cfg;
  }

  BpConfig BpConfig::affine(std::size_t slope, std::size_t offset) {
    BpConfig cfg;
    cfg._slope  = slope;
    cfg._offset = offset;
    return cfg;
  }

  BpConfig BpConfig::from_structure(AutomaticStructure const& as) {
    if (!as.delta || !as.flags.geodesic) {
      throw Error(error_kind::flag_required,
                  "nu(k) = k + 2 delta needs a geodesic structure with delta");
    }
    return hyperbolic(*as.delta);
  }

  std::size_t BpConfig::nu(std::size_t k) const {
    if (!_tabled) {
      return _slope * k + _offset;
    }
    if (k >= _table.size()) {
      throw Error(error_kind::flag_required,
                  "nu(" + std::to_string(k) + ") is not in the supplied table");
    }
    return _table[k];
  }

  namespace {
    void same_group(SubgroupHandle const& h, SubgroupHandle const& k) {
      if (h.group != k.group && h.group->name != k.group->name) {
        throw Error(error_kind::structure_mismatch,
                    "subgroups of different groups");
      }
    }

    void need_finite_reps(SubgroupHandle const& h) {
      if (!h.structure().has_finite_reps()) {
        throw Error(error_kind::flag_required,
                    "needs unique_reps or finite_reps");
      }
    }

    void need_inverse_closed(SubgroupHandle const& h) {
      if (!h.structure().flags.inverse_closed) {
        throw Error(error_kind::inverse_closure_required,
                    "the word acceptor is not flagged inverse-closed");
      }
    }

    word_type conjugator(word_type const& g, word_type const& h, std::size_t rank) {
      return free_reduce(concat(concat(inverse_word(g, rank), h), g), rank);
    }
  }  // namespace

  Nfa subgroup_language(SubgroupHandle const& h) {
    return trim(intersect(loops_automaton(h.canonical),
                          h.structure().word_acceptor));
  }

  bool member(SubgroupHandle const& h, word_type const& w) {
    return membership_via_graph(h.structure(), h.canonical, w);
  }

  bool subgroup_leq(SubgroupHandle const& h, SubgroupHandle const& k) {
    same_group(h, k);
    return std::all_of(h.gens.begin(), h.gens.end(), [&k](auto const& w) {
      return member(k, w);
    });
  }

  bool subgroup_eq(SubgroupHandle const& h, SubgroupHandle const& k) {
    return subgroup_leq(h, k) && subgroup_leq(k, h);
  }

  Nfa coset_reps_automaton(SubgroupHandle const& h,
                           word_type const&      u,
                           coset_side            side) {
    auto const& as = h.structure();
    if (side == coset_side::right) {
      return multiply_word(as, subgroup_language(h), u);
    }
    need_inverse_closed(h);
    auto right = multiply_word(as, subgroup_language(h), inverse_word(u, as.rank()));
    return reverse_invert(right);
  }

  bool double_coset_member(SubgroupHandle const& h,
                           word_type const&      u,
                           SubgroupHandle const& k,
                           word_type const&      v) {
    same_group(h, k);
    need_inverse_closed(h);
    // v in H u K iff H v meets u K.
    auto hv = coset_reps_automaton(h, v, coset_side::right);
    auto uk = coset_reps_automaton(k, u, coset_side::left);
    return !is_empty(intersect(hv, uk));
  }

  bool double_coset_eq(SubgroupHandle const& h,
                       word_type const&      u,
                       SubgroupHandle const& k,
                       word_type const&      v) {
    return double_coset_member(h, u, k, v) && double_coset_member(h, v, k, u);
  }

  bool is_finite(SubgroupHandle const& h) {
    need_finite_reps(h);
    return is_finite_language(subgroup_language(h));
  }

  std::optional<std::vector<word_type>> elements_if_finite(
      SubgroupHandle const& h) {
    need_finite_reps(h);
    return finite_language_words(subgroup_language(h), 1000000);
  }

  SubgroupHandle intersection(SubgroupHandle const& h, SubgroupHandle const& k) {
    same_group(h, k);
    Certificate cert;
    cert.graph      = product_graph(h.canonical, k.canonical);
    cert.generators = generators_from_graph(cert.graph);
    cert.result     = verdict::certified;
    return handle_from_certificate(h.group, cert);
  }

  FiniteIndexResult has_finite_index(SubgroupHandle const& h) {
    auto const&       as = h.structure();
    FiniteIndexResult result;
    if (as.flags.unique_reps) {
      if (auto all = finite_language_words(as.word_acceptor, 1000000)) {
        auto elements   = finite_language_words(subgroup_language(h), 1000000);
        result.finite   = true;
        result.index    = all->size() / elements->size();
        return result;
      }
    }
    auto escape = subset_counterexample(as.word_acceptor,
                                        paths_automaton(h.canonical));
    if (!escape) {
      result.finite = true;
      result.index  = h.canonical.num_vertices();
      return result;
    }
    if (!as.flags.extendable) {
      throw Error(error_kind::flag_required,
                  "some word of L labels no path, and L is not flagged "
                  "extendable");
    }
    result.witness = escape;
    return result;
  }

  SubgroupHandle conjugate(SubgroupHandle const& h,
                           word_type const&      g,
                           PipelineMode const&   mode) {
    std::size_t const      rank = h.structure().rank();
    std::vector<word_type> gens;
    for (auto const& w : h.gens) {
      gens.push_back(conjugator(g, w, rank));
    }
    return subgroup(h.group, gens, mode);
  }

  std::vector<word_type> reduced_ball(std::size_t rank, std::size_t radius) {
    return enumerate_words(reduced_words_automaton(rank), radius, SIZE_MAX);
  }

  IntersectionFamily conjugates_family(SubgroupHandle const& h,
                                       SubgroupHandle const& k,
                                       BpConfig const&       cfg,
                                       PipelineMode const&   mode) {
    same_group(h, k);
    need_finite_reps(h);
    IntersectionFamily family;
    family.radius = 2 * cfg.nu(std::max(h.qc_constant, k.qc_constant));
    for (auto const& g : reduced_ball(h.structure().rank(), family.radius)) {
      auto meet = intersection(k, conjugate(h, g, mode));
      if (!is_finite(meet)) {
        family.items.push_back({g, std::move(meet)});
      }
    }
    return family;
  }

  namespace {
    ConjugacyResult conjugacy_search(SubgroupHandle const& h,
                                     SubgroupHandle const& k,
                                     BpConfig const&       cfg,
                                     PipelineMode const&   mode,
                                     bool                  equality) {
      same_group(h, k);
      if (is_finite(k)) {
        throw Error(error_kind::k_must_be_infinite,
                    "conjugacy search needs an infinite K");
      }
      ConjugacyResult   result;
      std::size_t const rank = h.structure().rank();
      result.radius = 2 * cfg.nu(std::max(h.qc_constant, k.qc_constant));
      for (auto const& g : reduced_ball(rank, result.radius)) {
        bool inside = std::all_of(k.gens.begin(), k.gens.end(), [&](auto const& w) {
          return member(h, conjugator(g, w, rank));
        });
        if (inside && equality) {
          inside = subgroup_leq(h, conjugate(k, g, mode));
        }
        if (inside) {
          result.holds   = true;
          result.witness = g;
          return result;
        }
      }
      return result;
    }
  }  // namespace

  ConjugacyResult is_conjugate_into(SubgroupHandle const& h,
                                    SubgroupHandle const& k,
                                    BpConfig const&       cfg,
                                    PipelineMode const&   mode) {
    return conjugacy_search(h, k, cfg, mode, false);
  }

  ConjugacyResult is_conjugate_to(SubgroupHandle const& h,
                                  SubgroupHandle const& k,
                                  BpConfig const&       cfg,
                                  PipelineMode const&   mode) {
    return conjugacy_search(h, k, cfg, mode, true);
  }

  HeightResult height(SubgroupHandle const& h,
                      BpConfig const&       cfg,
                      PipelineMode const&   mode) {
    HeightResult result;
    result.radius = cfg.nu(h.qc_constant);
    if (is_finite(h)) {
      return result;
    }
    std::size_t const rank = h.structure().rank();
    for (auto const& x : reduced_ball(rank, result.radius)) {
      bool fresh = std::none_of(
          result.cosets.begin(), result.cosets.end(), [&](auto const& y) {
            return member(h, concat(x, inverse_word(y, rank)));
          });
      if (fresh) {
        result.cosets.push_back(x);
      }
    }
    // Families of coset indices with infinite intersection of conjugates,
    // grown one size at a time; finite intersections are never extended.
    struct Family {
      std::vector<std::size_t> members;
      SubgroupHandle           meet;
    };
    std::vector<SubgroupHandle> conjugates;
    for (auto const& x : result.cosets) {
      conjugates.push_back(conjugate(h, x, mode));
    }
    std::vector<Family> level;
    for (std::size_t i = 0; i < conjugates.size(); ++i) {
      level.push_back({{i}, conjugates[i]});
    }
    while (!level.empty()) {
      result.height = level.front().members.size();
      result.family.clear();
      for (auto i : level.front().members) {
        result.family.push_back(result.cosets[i]);
      }
      std::vector<Family> next;
      for (auto const& f : level) {
        for (std::size_t j = f.members.back() + 1; j < conjugates.size(); ++j) {
          auto meet = intersection(f.meet, conjugates[j]);
          if (!is_finite(meet)) {
            auto members = f.members;
            members.push_back(j);
            next.push_back({std::move(members), std::move(meet)});
          }
        }
      }
      level = std::move(next);
    }
    return result;
  }

  MalnormalResult is_almost_malnormal(SubgroupHandle const& h,
                                      BpConfig const&       cfg,
                                      PipelineMode const&   mode) {
    need_finite_reps(h);
    MalnormalResult result;
    result.radius = 2 * cfg.nu(h.qc_constant);
    for (auto const& x : reduced_ball(h.structure().rank(), result.radius)) {
      if (member(h, x)) {
        continue;
      }
      if (!is_finite(intersection(h, conjugate(h, x, mode)))) {
        result.holds   = false;
        result.witness = x;
        return result;
      }
    }
    return result;
  }

}  // namespace stallings

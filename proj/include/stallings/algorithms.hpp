#ifndef STALLINGS_ALGORITHMS_HPP_
#define STALLINGS_ALGORITHMS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "stallings/schreier.hpp"

namespace stallings {

  // The function nu of property BP_nu: k + 2 delta for hyperbolic groups with
  // a geodesic structure, otherwise an explicit table (nu(k) = table[k]) or
  // an affine form slope * k + offset.
  class BpConfig {
   public:
    static BpConfig hyperbolic(std::size_t delta);
    static BpConfig table(std::vector<std::size_t> values);
    static BpConfig affine(std::size_t slope, std::size_t offset);
    // hyperbolic(delta) from the structure; Error(flag_required) when the
    // structure carries no delta or is not geodesic.
    static BpConfig from_structure(AutomaticStructure const& as);

    // Throws Error(flag_required) when k lies outside an explicit table.
    [[nodiscard]] std::size_t nu(std::size_t k) const;

   private:
    std::vector<std::size_t> _table;
    std::size_t              _slope  = 1;
    std::size_t              _offset = 0;
    bool                     _tabled = false;
  };

  // L n mu^-1(H), read off the canonical graph.
  [[nodiscard]] Nfa subgroup_language(SubgroupHandle const& h);

  [[nodiscard]] bool member(SubgroupHandle const& h, word_type const& w);
  // Throws Error(structure_mismatch) for handles over different groups.
  [[nodiscard]] bool subgroup_leq(SubgroupHandle const& h,
                                  SubgroupHandle const& k);
  [[nodiscard]] bool subgroup_eq(SubgroupHandle const& h,
                                 SubgroupHandle const& k);

  enum class coset_side { left, right };

  // Representatives of H u (right) or u H (left). The left side needs an
  // inverse-closed language: Error(inverse_closure_required).
  [[nodiscard]] Nfa coset_reps_automaton(SubgroupHandle const& h,
                                         word_type const&      u,
                                         coset_side            side);
  // Whether v lies in H u K; both need an inverse-closed language.
  [[nodiscard]] bool double_coset_member(SubgroupHandle const& h,
                                         word_type const&      u,
                                         SubgroupHandle const& k,
                                         word_type const&      v);
  [[nodiscard]] bool double_coset_eq(SubgroupHandle const& h,
                                     word_type const&      u,
                                     SubgroupHandle const& k,
                                     word_type const&      v);

  // Need finitely many representatives per element: Error(flag_required).
  [[nodiscard]] bool is_finite(SubgroupHandle const& h);
  // Every representative of every element, or nullopt for infinite H.
  // Throws Error(too_many_elements) beyond 10^6 words.
  [[nodiscard]] std::optional<std::vector<word_type>> elements_if_finite(
      SubgroupHandle const& h);

  [[nodiscard]] SubgroupHandle intersection(SubgroupHandle const& h,
                                            SubgroupHandle const& k);

  struct FiniteIndexResult {
    bool                       finite = false;
    std::optional<std::size_t> index;
    // A word of L that labels no path from the base.
    std::optional<word_type> witness;
  };

  // A finite L gives the index |L| / |H| directly. Otherwise the index is
  // finite and equal to the vertex count when every word of L labels a path
  // from the base; the converse needs the extendability flag, without which
  // a negative answer raises Error(flag_required).
  [[nodiscard]] FiniteIndexResult has_finite_index(SubgroupHandle const& h);

  // H^g = g^-1 H g.
  [[nodiscard]] SubgroupHandle conjugate(SubgroupHandle const& h,
                                         word_type const&      g,
                                         PipelineMode const&   mode = {});

  // Freely reduced words of length <= radius in shortlex order.
  [[nodiscard]] std::vector<word_type> reduced_ball(std::size_t rank,
                                                    std::size_t radius);

  struct IntersectionItem {
    word_type      g;
    SubgroupHandle subgroup;
  };

  struct IntersectionFamily {
    std::size_t                   radius = 0;
    std::vector<IntersectionItem> items;
  };

  // The BP searches below build one conjugated subgroup per ball element,
  // each through the pipeline run with `mode`.

  // The infinite intersections K n H^g with |g| <= 2 nu(k).
  [[nodiscard]] IntersectionFamily conjugates_family(SubgroupHandle const& h,
                                                     SubgroupHandle const& k,
                                                     BpConfig const&       cfg,
                                                     PipelineMode const&   mode = {});

  struct ConjugacyResult {
    bool                     holds = false;
    std::optional<word_type> witness;
    std::size_t              radius = 0;
  };

  // Whether K^g <= H for some g (resp. K^g = H). K must be infinite:
  // Error(k_must_be_infinite).
  [[nodiscard]] ConjugacyResult is_conjugate_into(SubgroupHandle const& h,
                                                  SubgroupHandle const& k,
                                                  BpConfig const&       cfg,
                                                  PipelineMode const&   mode = {});
  [[nodiscard]] ConjugacyResult is_conjugate_to(SubgroupHandle const& h,
                                                SubgroupHandle const& k,
                                                BpConfig const&       cfg,
                                                PipelineMode const&   mode = {});

  struct HeightResult {
    std::size_t height = 0;
    // Coset radius nu(k) and the coset representatives found in that ball.
    std::size_t            radius = 0;
    std::vector<word_type> cosets;
    // Coset representatives of one family realising the height.
    std::vector<word_type> family;
  };

  // 0 for finite H.
  [[nodiscard]] HeightResult height(SubgroupHandle const& h,
                                    BpConfig const&       cfg,
                                    PipelineMode const&   mode = {});

  struct MalnormalResult {
    bool                     holds = true;
    std::optional<word_type> witness;
    std::size_t              radius = 0;
  };

  [[nodiscard]] MalnormalResult is_almost_malnormal(SubgroupHandle const& h,
                                                    BpConfig const&     cfg,
                                                    PipelineMode const& mode = {});

}  // namespace stallings

#endif  // STALLINGS_ALGORITHMS_HPP_

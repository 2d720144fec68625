// Command-line front end. Results go to standard output as JSON with sorted
// keys; progress and diagnostics go to standard error.
//
// Exit codes: 0 success, 2 invalid input, 3 budget exhausted, 4 missing
// capability flag, 1 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stallings/algorithms.hpp"
#include "stallings/error.hpp"
#include "stallings/io.hpp"

namespace {

  using namespace stallings;

  constexpr int exit_ok       = 0;
  constexpr int exit_invalid  = 2;
  constexpr int exit_budget   = 3;
  constexpr int exit_flag     = 4;
  constexpr int exit_internal = 1;

  int exit_code(error_kind kind) {
    switch (kind) {
      case error_kind::budget_exhausted: return exit_budget;
      case error_kind::flag_required:
      case error_kind::inverse_closure_required:
      case error_kind::not_dehn_presentation: return exit_flag;
      case error_kind::internal_inconsistency:
      case error_kind::certification_regression: return exit_internal;
      default: return exit_invalid;
    }
  }

  struct SubgroupArgs {
    std::string              group = "F2";
    std::vector<std::string> gens;
    std::string              spec;
    std::size_t              max_iterations = Budget{}.max_iterations;
    std::size_t              max_vertices   = Budget{}.max_vertices;
    std::size_t              check_stride   = Budget{}.check_stride;
    long                     known_k        = -1;
    bool                     log            = false;
  };

  void add_subgroup_options(CLI::App* cmd, SubgroupArgs& a) {
    cmd->add_option("-g,--group", a.group, "bundled group name or group spec file");
    cmd->add_option("--gen", a.gens, "subgroup generator (repeatable)");
    cmd->add_option("--spec", a.spec, "subgroup spec file");
    cmd->add_option("--max-iterations", a.max_iterations);
    cmd->add_option("--max-vertices", a.max_vertices);
    cmd->add_option("--check-stride", a.check_stride);
    cmd->add_option("--known-k", a.known_k, "known quasi-convexity constant");
    cmd->add_flag("--log", a.log, "one line per completion step on stderr");
  }

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(error_kind::parse_error, "cannot read " + path);
    }
    try {
      json j;
      in >> j;
      return j;
    } catch (json::exception const& e) {
      throw Error(error_kind::parse_error, e.what());
    }
  }

  // A spec file {group, generators, mode: {budget: {...}} | {known_k: k}}
  // overrides the command-line options it sets.
  void apply_spec(SubgroupArgs& a) {
    if (a.spec.empty()) {
      return;
    }
    auto j = read_json_file(a.spec);
    try {
      a.group = j.at("group").get<std::string>();
      a.gens  = j.at("generators").get<std::vector<std::string>>();
      if (j.contains("mode")) {
        auto const& m = j.at("mode");
        if (m.contains("known_k")) {
          a.known_k = m.at("known_k").get<long>();
        }
        if (m.contains("budget")) {
          auto const& b    = m.at("budget");
          a.max_iterations = b.value("max_iterations", a.max_iterations);
          a.max_vertices   = b.value("max_vertices", a.max_vertices);
          a.check_stride   = b.value("check_stride", a.check_stride);
        }
      }
    } catch (json::exception const& e) {
      throw Error(error_kind::parse_error, e.what());
    }
  }

  PipelineMode mode_of(SubgroupArgs const& a) {
    PipelineMode mode;
    if (a.known_k >= 0) {
      mode.known_k = static_cast<std::size_t>(a.known_k);
    }
    mode.options.budget = {a.max_iterations, a.max_vertices, a.check_stride};
    if (a.log) {
      mode.options.progress = [](IterationRecord const& r) {
        std::cerr << "iteration " << r.iteration << ": " << r.vertices
                  << " vertices" << (r.checked ? (r.certified ? ", certified" : ", not certified") : "")
                  << "\n";
      };
    }
    return mode;
  }

  SubgroupHandle build(SubgroupArgs a) {
    apply_spec(a);
    auto g = load_group(a.group);
    return subgroup(g, parse_words(g->presentation.alphabet, a.gens), mode_of(a));
  }

  void print(json const& j) {
    std::cout << j.dump(2) << "\n";
  }

  struct BpArgs {
    long        delta = -1;
    std::string nu_table;
  };

  void add_bp_options(CLI::App* cmd, BpArgs& a) {
    cmd->add_option("--delta", a.delta, "use nu(k) = k + 2 delta");
    cmd->add_option("--nu-table", a.nu_table, "explicit nu(0),nu(1),... comma separated");
  }

  BpConfig bp_config(BpArgs const& a, AutomaticStructure const& as) {
    if (!a.nu_table.empty()) {
      std::vector<std::size_t> values;
      std::stringstream        in(a.nu_table);
      std::string              item;
      while (std::getline(in, item, ',')) {
        try {
          values.push_back(std::stoul(item));
        } catch (std::exception const&) {
          throw Error(error_kind::parse_error, "bad --nu-table entry " + item);
        }
      }
      return BpConfig::table(values);
    }
    if (a.delta >= 0) {
      return BpConfig::hyperbolic(static_cast<std::size_t>(a.delta));
    }
    return BpConfig::from_structure(as);
  }

  json optional_word(Alphabet const& alph, std::optional<word_type> const& w) {
    return w ? json(alph.format(*w)) : json(nullptr);
  }

  void write_file(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) {
      throw Error(error_kind::parse_error, "cannot write " + path.string());
    }
    out << text;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup graphs and decision procedures over automatic structures"};
  app.require_subcommand(1);

  SubgroupArgs h_args, k_args;
  BpArgs       bp;
  std::string  word, u_word, v_word, out_dir, group_name, bundle_out;
  bool         equal = false;
  std::size_t  depth = 4;

  auto* stallings_cmd = app.add_subcommand("stallings", "compute the canonical Stallings graph");
  add_subgroup_options(stallings_cmd, h_args);
  stallings_cmd->add_option("-o,--out", out_dir, "write canonical.json, canonical.dot, report.json");

  auto* member_cmd = app.add_subcommand("member", "decide membership of a word");
  add_subgroup_options(member_cmd, h_args);
  member_cmd->add_option("-w,--word", word)->required();

  auto* index_cmd = app.add_subcommand("index", "decide finite index");
  add_subgroup_options(index_cmd, h_args);

  auto* finite_cmd = app.add_subcommand("finite", "decide finiteness and list elements");
  add_subgroup_options(finite_cmd, h_args);

  auto* intersect_cmd = app.add_subcommand("intersect", "intersection of H (--gen) and K (--other)");
  add_subgroup_options(intersect_cmd, h_args);
  intersect_cmd->add_option("--other", k_args.gens, "generator of K (repeatable)");

  auto* conjugate_cmd = app.add_subcommand("conjugate", "does H contain (--equal: equal) a conjugate of K");
  add_subgroup_options(conjugate_cmd, h_args);
  conjugate_cmd->add_option("--other", k_args.gens, "generator of K (repeatable)");
  conjugate_cmd->add_flag("--equal", equal);
  add_bp_options(conjugate_cmd, bp);

  auto* height_cmd = app.add_subcommand("height", "height of H");
  add_subgroup_options(height_cmd, h_args);
  add_bp_options(height_cmd, bp);

  auto* malnormal_cmd = app.add_subcommand("malnormal", "decide almost malnormality");
  add_subgroup_options(malnormal_cmd, h_args);
  add_bp_options(malnormal_cmd, bp);

  auto* dcoset_cmd = app.add_subcommand("dcoset", "is v in H u K (--equal: H u K = H v K)");
  add_subgroup_options(dcoset_cmd, h_args);
  dcoset_cmd->add_option("--other", k_args.gens, "generator of K (repeatable)");
  dcoset_cmd->add_option("-u", u_word)->required();
  dcoset_cmd->add_option("-v", v_word)->required();
  dcoset_cmd->add_flag("--equal", equal);

  auto* validate_cmd = app.add_subcommand("validate", "validate a group spec");
  validate_cmd->add_option("-g,--group", group_name)->required();
  validate_cmd->add_option("--depth", depth, "sample depth");

  auto* list_cmd   = app.add_subcommand("bundle-list", "list bundled groups");
  auto* export_cmd = app.add_subcommand("bundle-export", "write a bundled group spec");
  export_cmd->add_option("-g,--group", group_name)->required();
  export_cmd->add_option("-o,--out", bundle_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (list_cmd->parsed()) {
      print(bundled_names());
      return exit_ok;
    }
    if (export_cmd->parsed()) {
      auto text = group_to_json(*bundled_group(group_name)).dump(2) + "\n";
      if (bundle_out.empty()) {
        std::cout << text;
      } else {
        write_file(bundle_out, text);
      }
      return exit_ok;
    }
    if (validate_cmd->parsed()) {
      auto g      = load_group(group_name);
      auto report = validate(g->structure, depth, g->oracle);
      print(validation_to_json(report));
      return report.ok() ? exit_ok : exit_invalid;
    }

    if (stallings_cmd->parsed()) {
      auto a = h_args;
      apply_spec(a);
      auto g      = load_group(a.group);
      auto result = stallings_graph(g, parse_words(g->presentation.alphabet, a.gens), mode_of(a));
      auto const& alph = g->presentation.alphabet;
      json report = {{"verdict", std::string(to_string(result.certificate.result))},
                     {"certificate", certificate_to_json(result.certificate, alph)}};
      if (result.handle) {
        report["subgroup"] = handle_to_json(*result.handle);
      }
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::filesystem::path dir(out_dir);
        write_file(dir / "report.json", report.dump(2) + "\n");
        if (result.handle) {
          write_file(dir / "canonical.json",
                     graph_to_json(result.handle->canonical, alph).dump(2) + "\n");
          write_file(dir / "canonical.dot",
                     graph_to_dot(result.handle->canonical, alph, "Stallings"));
        }
      }
      print(report);
      return result.handle ? exit_ok : exit_budget;
    }

    auto        h    = build(h_args);
    auto const& alph = h.structure().alphabet;
    // K and the conjugates built by the BP searches live in the same group and
    // share H's completion budget; a known constant applies to H only.
    auto search_mode    = mode_of(h_args);
    search_mode.known_k = std::nullopt;
    auto other = [&]() {
      return subgroup(h.group, parse_words(alph, k_args.gens), search_mode);
    };

    if (member_cmd->parsed()) {
      print({{"verdict", member(h, alph.parse(word))}});
    } else if (index_cmd->parsed()) {
      auto r = has_finite_index(h);
      print({{"verdict", r.finite},
             {"index", r.index ? json(*r.index) : json(nullptr)},
             {"witness", optional_word(alph, r.witness)}});
    } else if (finite_cmd->parsed()) {
      auto elements = elements_if_finite(h);
      print({{"verdict", elements.has_value()},
             {"elements", elements ? json(format_words(alph, *elements)) : json(nullptr)}});
    } else if (intersect_cmd->parsed()) {
      auto meet = intersection(h, other());
      print({{"generators", format_words(alph, meet.gens)},
             {"subgroup", handle_to_json(meet)}});
    } else if (conjugate_cmd->parsed()) {
      auto k   = other();
      auto cfg = bp_config(bp, h.structure());
      auto r   = equal ? is_conjugate_to(h, k, cfg, search_mode)
                       : is_conjugate_into(h, k, cfg, search_mode);
      print({{"verdict", r.holds},
             {"witness", optional_word(alph, r.witness)},
             {"convention", "K^g = g' K g"},
             {"radii", {{"search", r.radius}}}});
    } else if (height_cmd->parsed()) {
      auto r = height(h, bp_config(bp, h.structure()), search_mode);
      print({{"verdict", r.height},
             {"cosets", format_words(alph, r.cosets)},
             {"family", format_words(alph, r.family)},
             {"radii", {{"cosets", r.radius}}}});
    } else if (malnormal_cmd->parsed()) {
      auto r = is_almost_malnormal(h, bp_config(bp, h.structure()), search_mode);
      print({{"verdict", r.holds},
             {"witness", optional_word(alph, r.witness)},
             {"radii", {{"search", r.radius}}}});
    } else if (dcoset_cmd->parsed()) {
      auto k = other();
      auto u = alph.parse(u_word);
      auto v = alph.parse(v_word);
      bool r = equal ? double_coset_eq(h, u, k, v) : double_coset_member(h, u, k, v);
      print({{"verdict", r}});
    }
    return exit_ok;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_internal;
  }
}

// Command-line front end: builds the chain from a finite group action on a
// finitely presented group to a minimal finite space, with verification and
// reporting subcommands.  All configuration is via flags; identical inputs
// produce byte-identical outputs (timings are opt-in).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "fintop/collapse.hpp"
#include "fintop/finite_poset.hpp"
#include "fintop/fundamental_group.hpp"
#include "fintop/homology.hpp"
#include "fintop/json_io.hpp"
#include "fintop/pipeline.hpp"
#include "fintop/presentation_complex.hpp"
#include "fintop/rigidify.hpp"

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

struct ActionInputs {
  std::string group_path, presentation_path, action_path;

  fintop::GroupAction load() const {
    fintop::FiniteGroup G = fintop::parse_group_json(slurp(group_path));
    fintop::Presentation M = fintop::parse_presentation_json(slurp(presentation_path));
    return fintop::parse_action_json(slurp(action_path), G, M);
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--group", group_path, "finite group JSON")->required();
    cmd->add_option("--presentation", presentation_path, "presentation JSON")->required();
    cmd->add_option("--action", action_path, "action JSON")->required();
  }
};

fintop::EquivariantComplexResult build_equivariant(const fintop::GroupAction& action) {
  return fintop::equivariant_presentation_complex(fintop::symmetrize(action));
}

std::string equivariant_to_json(const fintop::EquivariantComplexResult& eq,
                                const fintop::FiniteGroup& G) {
  ordered_json j;
  j["complex"] = ordered_json::parse(fintop::complex_to_json(eq.complex));
  j["basepoint"] = eq.basepoint;
  std::vector<std::string> names;
  for (int g = 0; g < G.order(); ++g) names.push_back(G.name(g));
  j["action"] =
      ordered_json::parse(fintop::vertex_maps_to_json(eq.complex, names, eq.action));
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-space realizations of group actions on finitely presented groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "output file (default: stdout)")->capture_default_str();

  // --- symmetrize ---------------------------------------------------------
  ActionInputs sym_in;
  auto* cmd_sym = app.add_subcommand("symmetrize", "build the G-symmetric presentation");
  sym_in.attach(cmd_sym);

  // --- complexify ---------------------------------------------------------
  ActionInputs cx_in;
  auto* cmd_cx = app.add_subcommand(
      "complexify", "presentation complex after double subdivision, with the G-action");
  cx_in.attach(cmd_cx);

  // --- rigidify -----------------------------------------------------------
  std::string rig_complex, rig_action, rig_walk;
  int rig_band_dim = 0;
  bool rig_trivial = false;
  auto* cmd_rig = app.add_subcommand("rigidify", "glue band gadgets to pin the automorphism group");
  cmd_rig->add_option("--complex", rig_complex, "complex JSON")->required();
  cmd_rig->add_option("--action-maps", rig_action,
                      "automorphisms JSON ({\"g\":{vertex:image}}); omit with --trivial");
  cmd_rig->add_option("--walk", rig_walk, "comma-separated covering walk (default: deterministic)");
  cmd_rig->add_option("--band-dim", rig_band_dim, "band top-simplex dimension (default: auto)");
  cmd_rig->add_flag("--trivial", rig_trivial, "trivial-group rigidification (W gadgets per vertex)");

  // --- posetize -----------------------------------------------------------
  std::string pos_complex;
  auto* cmd_pos = app.add_subcommand("posetize", "face poset of a complex");
  cmd_pos->add_option("--complex", pos_complex, "complex JSON")->required();

  // --- minimalize ---------------------------------------------------------
  std::string min_poset;
  int min_level = 0;
  auto* cmd_min = app.add_subcommand("minimalize", "glue W gadget spaces at every beat point");
  cmd_min->add_option("--poset", min_poset, "poset JSON")->required();
  cmd_min->add_option("--w-level", min_level, "W level l >= 2 (default: auto by chain length)");

  // --- aut ----------------------------------------------------------------
  std::string aut_input;
  bool aut_order_only = false;
  std::uint64_t aut_budget = 400000000ULL;
  auto* cmd_aut = app.add_subcommand("aut", "automorphism group of a complex or poset");
  cmd_aut->add_option("--input", aut_input, "complex or poset JSON")->required();
  cmd_aut->add_flag("--order-only", aut_order_only, "print only the order");
  cmd_aut->add_option("--budget", aut_budget, "search node budget");

  // --- homology -----------------------------------------------------------
  std::string hom_complex;
  int hom_max_dim = -1;
  auto* cmd_hom = app.add_subcommand("homology", "integer simplicial homology");
  cmd_hom->add_option("--complex", hom_complex, "complex JSON")->required();
  cmd_hom->add_option("--max-dim", hom_max_dim, "highest dimension (default: dim K)");

  // --- pi1 ----------------------------------------------------------------
  std::string pi1_complex, pi1_base, pi1_panel = "Z2,Z3,Z4,S3,Z2xZ2";
  int pi1_max_gens = 8;
  auto* cmd_pi1 = app.add_subcommand("pi1", "edge-path fundamental group presentation");
  cmd_pi1->add_option("--complex", pi1_complex, "complex JSON")->required();
  cmd_pi1->add_option("--base", pi1_base, "base vertex (default: smallest label)");
  cmd_pi1->add_option("--hom-panel", pi1_panel, "comma list from Z2,Z3,Z4,S3,Z2xZ2; empty to skip");
  cmd_pi1->add_option("--hom-panel-max-generators", pi1_max_gens,
                      "skip hom counts above this many generators");

  // --- hasse --------------------------------------------------------------
  std::string hasse_poset;
  auto* cmd_hasse = app.add_subcommand("hasse", "DOT export of a poset's Hasse diagram");
  cmd_hasse->add_option("--poset", hasse_poset, "poset JSON")->required();

  // --- verify -------------------------------------------------------------
  ActionInputs ver_in;
  int ver_band_dim = 0, ver_level = 0;
  bool ver_timings = false, ver_verbose = false;
  auto* cmd_ver = app.add_subcommand("verify", "run and check the full pipeline");
  ver_in.attach(cmd_ver);
  cmd_ver->add_option("--band-dim", ver_band_dim, "band dimension override");
  cmd_ver->add_option("--w-level", ver_level, "W level override");
  cmd_ver->add_flag("--timings", ver_timings, "include stage timings in the report");
  cmd_ver->add_flag("--verbose", ver_verbose, "progress on stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_sym) {
      auto action = sym_in.load();
      emit(out_path, fintop::symmetric_presentation_to_json(fintop::symmetrize(action)));
    } else if (*cmd_cx) {
      auto action = cx_in.load();
      auto eq = build_equivariant(action);
      emit(out_path, equivariant_to_json(eq, action.group));
    } else if (*cmd_rig) {
      fintop::SimplicialComplex K = fintop::parse_complex_json(slurp(rig_complex));
      if (rig_trivial) {
        emit(out_path, fintop::complex_to_json(fintop::rigidify_trivial(K)));
      } else {
        if (rig_action.empty())
          throw std::runtime_error("rigidify needs --action-maps (or --trivial)");
        auto named = fintop::parse_vertex_maps_json(slurp(rig_action), K);
        std::vector<std::string> names;
        std::vector<fintop::SimplicialMap> maps;
        for (auto& [n, f] : named) {
          names.push_back(n);
          maps.push_back(f);
        }
        fintop::VertexPath P;
        if (rig_walk.empty()) {
          P = fintop::covering_walk(K);
        } else {
          std::istringstream is(rig_walk);
          std::string tok;
          while (std::getline(is, tok, ',')) P.vertices.push_back(K.index_of(tok));
        }
        fintop::RigidifyOptions ropts;
        ropts.band_dimension = rig_band_dim;
        auto rig = fintop::rigidify(K, maps, P, ropts);
        ordered_json j;
        j["complex"] = ordered_json::parse(fintop::complex_to_json(rig.complex));
        j["base"] = rig.base;
        ordered_json bands;
        for (std::size_t g = 0; g < rig.bands.size(); ++g)
          bands[names.size() == rig.bands.size() ? names[g] : std::to_string(g)] = rig.bands[g];
        j["bands"] = std::move(bands);
        std::vector<std::string> action_names;
        for (std::size_t g = 0; g < rig.action.size(); ++g)
          action_names.push_back("a" + std::to_string(g));
        j["action"] = ordered_json::parse(
            fintop::vertex_maps_to_json(rig.complex, action_names, rig.action));
        j["band_dimension"] = rig.band_dimension;
        emit(out_path, j.dump(2) + "\n");
      }
    } else if (*cmd_pos) {
      fintop::SimplicialComplex K = fintop::parse_complex_json(slurp(pos_complex));
      emit(out_path, fintop::poset_to_json(fintop::face_poset(K)));
    } else if (*cmd_min) {
      fintop::FinitePoset X = fintop::parse_poset_json(slurp(min_poset));
      auto glued = fintop::glue_w_at_beat_points(X, min_level);
      ordered_json j;
      j["w_level"] = glued.level;
      ordered_json copies;
      for (const auto& [beat, prefix] : glued.copies) copies[beat] = prefix;
      j["copies"] = std::move(copies);
      j["minimal"] = fintop::is_minimal(glued.poset);
      j["poset"] = ordered_json::parse(fintop::poset_to_json(glued.poset));
      emit(out_path, j.dump(2) + "\n");
    } else if (*cmd_aut) {
      std::string text = slurp(aut_input);
      ordered_json probe = ordered_json::parse(text, nullptr, true, true);
      ordered_json j;
      if (probe.contains("facets")) {
        fintop::SimplicialComplex K = fintop::parse_complex_json(text);
        auto auts = fintop::automorphism_group(K, {aut_budget});
        j["order"] = auts.size();
        if (!aut_order_only) {
          std::vector<std::string> names;
          for (std::size_t i = 0; i < auts.size(); ++i) names.push_back("a" + std::to_string(i));
          j["maps"] = ordered_json::parse(fintop::vertex_maps_to_json(K, names, auts));
        }
      } else if (probe.contains("covers")) {
        fintop::FinitePoset X = fintop::parse_poset_json(text);
        auto auts = fintop::poset_automorphisms(X, {aut_budget});
        j["order"] = auts.size();
        if (!aut_order_only) {
          ordered_json maps;
          for (std::size_t i = 0; i < auts.size(); ++i) {
            ordered_json m;
            for (int p = 0; p < X.size(); ++p)
              m[X.name(p)] = X.name(auts[i].image[static_cast<std::size_t>(p)]);
            maps["a" + std::to_string(i)] = std::move(m);
          }
          j["maps"] = std::move(maps);
        }
      } else {
        throw std::runtime_error("input is neither a complex (facets) nor a poset (covers)");
      }
      emit(out_path, j.dump(2) + "\n");
    } else if (*cmd_hom) {
      fintop::SimplicialComplex K = fintop::parse_complex_json(slurp(hom_complex));
      int top = hom_max_dim < 0 ? K.dimension() : hom_max_dim;
      auto all = fintop::homology_all(K, std::max(top, 0));
      std::vector<std::pair<int, fintop::AbelianGroup>> rows;
      for (int d = 0; d <= top; ++d) rows.emplace_back(d, all[static_cast<std::size_t>(d)]);
      emit(out_path, fintop::homology_report_json(rows));
    } else if (*cmd_pi1) {
      fintop::SimplicialComplex K = fintop::parse_complex_json(slurp(pi1_complex));
      int base = pi1_base.empty() ? 0 : K.index_of(pi1_base);
      fintop::Presentation p = fintop::edge_path_pi1(K, base);
      ordered_json j;
      j["presentation"] = ordered_json::parse(fintop::presentation_to_json(p));
      j["abelianization"] = fintop::abelianization(p).to_string();
      if (!pi1_panel.empty() && static_cast<int>(p.generators.size()) <= pi1_max_gens) {
        ordered_json counts;
        auto panel = fintop::default_hom_panel();
        std::istringstream is(pi1_panel);
        std::string name;
        while (std::getline(is, name, ',')) {
          bool found = false;
          for (const auto& [pname, T] : panel)
            if (pname == name) {
              counts[name] = fintop::hom_count(p, T);
              found = true;
            }
          if (!found) throw std::runtime_error("unknown hom panel group: " + name);
        }
        j["hom_counts"] = std::move(counts);
      }
      emit(out_path, j.dump(2) + "\n");
    } else if (*cmd_hasse) {
      fintop::FinitePoset X = fintop::parse_poset_json(slurp(hasse_poset));
      emit(out_path, fintop::poset_to_dot(X));
    } else if (*cmd_ver) {
      auto action = ver_in.load();
      fintop::VerifyOptions vopts;
      vopts.band_dimension = ver_band_dim;
      vopts.w_level = ver_level;
      vopts.timings = ver_timings;
      if (ver_verbose)
        vopts.log = [](const std::string& line) { std::cerr << line << "\n"; };
      fintop::PipelineReport rep = fintop::run_verify(action, vopts);
      emit(out_path, rep.to_json());
      return rep.ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

#include "fintop/pipeline.hpp"

#include <chrono>
#include <json.hpp>
#include <set>
#include <sstream>

#include "fintop/finite_poset.hpp"
#include "fintop/homology.hpp"
#include "fintop/json_io.hpp"
#include "fintop/presentation_complex.hpp"
#include "fintop/rigidify.hpp"
#include "fintop/util.hpp"

namespace fintop {

using json = nlohmann::ordered_json;

namespace {

std::string hex64_of(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

class StageClock {
 public:
  StageClock() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void log_line(const VerifyOptions& opts, const std::string& line) {
  if (opts.log) opts.log(line);
}

}  // namespace

std::string PipelineReport::to_json() const {
  json j;
  json stages_json = json::array();
  for (const auto& s : stages) {
    json sj;
    sj["name"] = s.name;
    sj["hash"] = s.hash;
    json sizes;
    for (const auto& [k, v] : s.sizes) sizes[k] = v;
    sj["sizes"] = std::move(sizes);
    if (include_timings) sj["millis"] = s.millis;
    stages_json.push_back(std::move(sj));
  }
  j["stages"] = std::move(stages_json);

  json checks_json = json::array();
  for (const auto& c : checks) {
    json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks_json.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks_json);

  json summary;
  summary["aut_order"] = aut_order;
  summary["h1"] = h1.to_string();
  summary["target_abelianization"] = target_abelianization.to_string();
  json mats;
  for (const auto& [g, m] : action_matrices) mats[g] = m;
  summary["action_matrices"] = std::move(mats);
  summary["equivalence"] = equivalence;
  summary["minimal"] = minimal;
  summary["w_level"] = w_level;
  summary["band_dimension"] = band_dimension;
  j["summary"] = std::move(summary);
  j["ok"] = ok;
  return j.dump(2) + "\n";
}

PipelineReport run_verify(const GroupAction& action, const VerifyOptions& opts) {
  PipelineReport rep;
  rep.include_timings = opts.timings;
  auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
    log_line(opts, std::string(pass ? "  [pass] " : "  [FAIL] ") + name +
                       (detail.empty() ? "" : " (" + detail + ")"));
  };

  action.validate();
  const FiniteGroup& G = action.group;
  rep.target_abelianization = abelianization(action.target);
  log_line(opts, "verify: |G| = " + std::to_string(G.order()) +
                     ", target abelianization " + rep.target_abelianization.to_string());

  // Stage 1: symmetric presentation.
  StageClock c1;
  SymmetricPresentation sp = symmetrize(action);
  {
    StageRecord s{"symmetrize", content_hash(sp.presentation), {}, c1.ms()};
    s.sizes.emplace_back("generators", static_cast<long long>(sp.presentation.generators.size()));
    s.sizes.emplace_back("relators", static_cast<long long>(sp.presentation.relators.size()));
    rep.stages.push_back(std::move(s));
  }
  check("symmetric presentation abelianization matches target",
        abelianization(sp.presentation) == rep.target_abelianization);

  // Stage 2: presentation complex, subdivided twice, with its G-action.
  StageClock c2;
  EquivariantComplexResult eq = equivariant_presentation_complex(sp);
  const SimplicialComplex& K = eq.complex;
  {
    StageRecord s{"complexify", content_hash(K), {}, c2.ms()};
    s.sizes.emplace_back("vertices", K.vertex_count());
    s.sizes.emplace_back("simplices", K.simplex_count());
    rep.stages.push_back(std::move(s));
  }
  {
    long long expected_chi = 1 - static_cast<long long>(sp.presentation.generators.size()) +
                             static_cast<long long>(sp.presentation.relators.size());
    check("Euler characteristic equals 1 - n + r",
          K.euler_characteristic() == expected_chi,
          "chi = " + std::to_string(K.euler_characteristic()));
  }
  {
    std::set<std::vector<int>> distinct;
    for (const auto& f : eq.action) distinct.insert(f.image);
    check("G acts faithfully on the complex",
          static_cast<int>(distinct.size()) == G.order());
  }

  // Stage 3: induced action on H1 of the complex.
  StageClock c3;
  H1Basis h1K(K);
  std::vector<IntMatrix> realized;
  for (int g = 0; g < G.order(); ++g)
    realized.push_back(h1K.action_matrix(eq.action[static_cast<std::size_t>(g)]));
  AbelianizedAction target_action = abelianized_action(action);
  {
    std::uint64_t h = 0x9e3779b9;
    for (const auto& m : realized) h = fnv64(m.to_string(), h);
    StageRecord s{"h1_action", hex64_of(h), {}, c3.ms()};
    s.sizes.emplace_back("h1_rank", h1K.group().rank);
    s.sizes.emplace_back("h1_torsion_factors", static_cast<long long>(h1K.group().torsion.size()));
    rep.stages.push_back(std::move(s));
  }
  rep.h1 = h1K.group();
  check("H1 of the complex matches the target abelianization",
        h1K.group() == target_action.group,
        "H1 = " + h1K.group().to_string());
  for (int g = 0; g < G.order(); ++g)
    rep.action_matrices.emplace_back(G.name(g), realized[static_cast<std::size_t>(g)].to_string());
  {
    ActionEquivalence e = h1K.group() == target_action.group
                              ? actions_equivalent(realized, target_action.matrices, h1K.group())
                              : ActionEquivalence::NotEquivalent;
    rep.equivalence = e == ActionEquivalence::Equivalent
                          ? "equivalent"
                          : (e == ActionEquivalence::NotEquivalent ? "not_equivalent"
                                                                   : "inconclusive");
    check("realized H1 action equivalent to the input action",
          e == ActionEquivalence::Equivalent);
  }

  // Stage 4: rigidification.
  StageClock c4;
  SimplicialComplex R;
  std::vector<SimplicialMap> complex_action = eq.action;
  if (G.order() >= 2) {
    VertexPath P = covering_walk(K);
    RigidifyOptions ropts;
    ropts.band_dimension = opts.band_dimension;
    RigidificationResult rig = rigidify(K, eq.action, P, ropts);
    rep.band_dimension = rig.band_dimension;
    R = std::move(rig.complex);
    {
      StageRecord s{"rigidify", content_hash(R), {}, c4.ms()};
      s.sizes.emplace_back("walk_length", P.length());
      s.sizes.emplace_back("vertices", R.vertex_count());
      s.sizes.emplace_back("simplices", R.simplex_count());
      s.sizes.emplace_back("band_dimension", rig.band_dimension);
      rep.stages.push_back(std::move(s));
    }
    if (R.vertex_count() <= 1500) {
      auto auts = automorphism_group(R, {opts.aut_budget});
      check("automorphism group of the rigidification has order |G|",
            static_cast<int>(auts.size()) == G.order(),
            std::to_string(auts.size()) + " automorphisms");
    }
  } else {
    R = rigidify_trivial(K);
    {
      StageRecord s{"rigidify_trivial", content_hash(R), {}, c4.ms()};
      s.sizes.emplace_back("vertices", R.vertex_count());
      s.sizes.emplace_back("simplices", R.simplex_count());
      rep.stages.push_back(std::move(s));
    }
  }
  log_line(opts, "rigidification: " + std::to_string(R.vertex_count()) + " vertices, " +
                     std::to_string(R.simplex_count()) + " simplices");

  // Stage 5: face poset and beat-point gluing.
  StageClock c5;
  FinitePoset X0 = face_poset(R);
  long long beats_before = static_cast<long long>(beat_points(X0).size());
  GlueWResult glued = glue_w_at_beat_points(X0, opts.w_level);
  const FinitePoset& X = glued.poset;
  rep.w_level = glued.level;
  {
    StageRecord s{"minimalize", content_hash(X), {}, c5.ms()};
    s.sizes.emplace_back("face_poset_points", X0.size());
    s.sizes.emplace_back("beat_points_glued", beats_before);
    s.sizes.emplace_back("w_level", glued.level);
    s.sizes.emplace_back("points", X.size());
    s.sizes.emplace_back("covers", X.cover_count());
    rep.stages.push_back(std::move(s));
  }
  log_line(opts, "finite space: " + std::to_string(X.size()) + " points, " +
                     std::to_string(X.cover_count()) + " covers (w-level " +
                     std::to_string(glued.level) + ")");
  rep.minimal = is_minimal(X);
  check("finite space is minimal", rep.minimal);

  // Stage 6: automorphisms of the finite space.
  StageClock c6;
  auto poset_auts = poset_automorphisms(X, {opts.aut_budget});
  rep.aut_order = static_cast<long long>(poset_auts.size());
  {
    std::uint64_t h = 0x51ed;
    for (const auto& f : poset_auts)
      for (int w : f.image) h = hash_combine(h, static_cast<std::uint64_t>(w));
    StageRecord s{"aut", hex64_of(h), {}, c6.ms()};
    s.sizes.emplace_back("aut_order", rep.aut_order);
    rep.stages.push_back(std::move(s));
  }
  check("aut(X) has order |G|", rep.aut_order == G.order(),
        std::to_string(rep.aut_order) + " vs " + std::to_string(G.order()));

  // Restriction check: every automorphism of X sends the K-vertex points to
  // K-vertex points by one of the input automorphisms.
  {
    bool ok = true;
    std::set<std::vector<int>> input_maps;
    for (const auto& f : complex_action) input_maps.insert(f.image);
    std::vector<int> kpoint(static_cast<std::size_t>(K.vertex_count()));
    for (int v = 0; v < K.vertex_count(); ++v)
      kpoint[static_cast<std::size_t>(v)] = X.index_of("{" + K.label(v) + "}");
    std::vector<int> point_to_kvertex(static_cast<std::size_t>(X.size()), -1);
    for (int v = 0; v < K.vertex_count(); ++v)
      point_to_kvertex[static_cast<std::size_t>(kpoint[static_cast<std::size_t>(v)])] = v;
    for (const auto& f : poset_auts) {
      std::vector<int> restricted(static_cast<std::size_t>(K.vertex_count()), -1);
      for (int v = 0; v < K.vertex_count() && ok; ++v) {
        int img = f.image[static_cast<std::size_t>(kpoint[static_cast<std::size_t>(v)])];
        int w = point_to_kvertex[static_cast<std::size_t>(img)];
        if (w < 0)
          ok = false;
        else
          restricted[static_cast<std::size_t>(v)] = w;
      }
      if (ok && input_maps.find(restricted) == input_maps.end()) ok = false;
      if (!ok) break;
    }
    check("restriction of aut(X) to the base lands in G", ok);
  }

  // Stage 7: H1 of the order complex of X.
  StageClock c7;
  AbelianGroup h1X = order_complex_h1(X);
  long long comps = order_complex_component_count(X);
  {
    OrderSkeletonSizes sizes = order_complex_two_skeleton_sizes(X);
    StageRecord s{"homology", hex64_of(fnv64(h1X.to_string())), {}, c7.ms()};
    s.sizes.emplace_back("skeleton_vertices", sizes.vertices);
    s.sizes.emplace_back("skeleton_edges", sizes.edges);
    s.sizes.emplace_back("skeleton_triangles", sizes.triangles);
    rep.stages.push_back(std::move(s));
  }
  check("X is connected", comps == 1);
  check("H1 of the order complex of X matches the target",
        h1X == rep.target_abelianization, "H1(K(X)) = " + h1X.to_string());

  rep.ok = true;
  for (const auto& c : rep.checks) rep.ok = rep.ok && c.pass;
  log_line(opts, rep.ok ? "verify: all checks passed" : "verify: FAILURES present");
  return rep;
}

}  // namespace fintop

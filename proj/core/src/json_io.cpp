#include "fintop/json_io.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "fintop/util.hpp"

namespace fintop {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, true, true);  // allow comments
  return j;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string("expected array for ") + what);
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw std::invalid_argument(std::string("expected strings in ") + what);
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace

SimplicialComplex parse_complex_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("vertices") || !j.contains("facets"))
    throw std::invalid_argument("complex JSON needs \"vertices\" and \"facets\"");
  std::vector<std::string> vertices = string_list(j["vertices"], "vertices");
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : j["facets"]) facets.push_back(string_list(f, "facets"));
  return SimplicialComplex::from_facets(vertices, facets);
}

std::string complex_to_json(const SimplicialComplex& K) {
  json j;
  j["vertices"] = K.labels();
  json facets = json::array();
  for (const auto& f : K.facet_labels()) facets.push_back(f);
  j["facets"] = std::move(facets);
  return j.dump(2) + "\n";
}

Presentation parse_presentation_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("generators") || !j.contains("relators"))
    throw std::invalid_argument("presentation JSON needs \"generators\" and \"relators\"");
  Presentation p;
  p.generators = string_list(j["generators"], "generators");
  for (const auto& r : j["relators"]) {
    if (!r.is_string()) throw std::invalid_argument("relators must be strings");
    Word w = parse_word(r.get<std::string>(), p.generators);
    p.relators.push_back(std::move(w));
  }
  p.validate();
  return p;
}

std::string presentation_to_json(const Presentation& p) {
  json j;
  j["generators"] = p.generators;
  json rel = json::array();
  for (const Word& w : p.relators) rel.push_back(word_to_string(w, p.generators));
  j["relators"] = std::move(rel);
  return j.dump(2) + "\n";
}

FiniteGroup parse_group_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("elements") || !j.contains("identity") || !j.contains("table"))
    throw std::invalid_argument("group JSON needs \"elements\", \"identity\" and \"table\"");
  std::vector<std::string> elements = string_list(j["elements"], "elements");
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < elements.size(); ++i) idx[elements[i]] = static_cast<int>(i);
  auto find = [&](const std::string& n) {
    auto it = idx.find(n);
    if (it == idx.end()) throw std::invalid_argument("unknown group element in table: " + n);
    return it->second;
  };
  int identity = find(j["identity"].get<std::string>());
  std::vector<std::vector<int>> table;
  for (const auto& row : j["table"]) {
    std::vector<int> r;
    for (const auto& cell : row) r.push_back(find(cell.get<std::string>()));
    table.push_back(std::move(r));
  }
  return FiniteGroup(std::move(elements), identity, std::move(table));
}

std::string group_to_json(const FiniteGroup& G) {
  json j;
  j["elements"] = G.elements();
  j["identity"] = G.name(G.identity());
  json table = json::array();
  for (int a = 0; a < G.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < G.order(); ++b) row.push_back(G.name(G.mul(a, b)));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j.dump(2) + "\n";
}

GroupAction parse_action_json(const std::string& text, const FiniteGroup& group,
                              const Presentation& target) {
  json j = parse(text);
  if (!j.contains("images")) throw std::invalid_argument("action JSON needs \"images\"");
  GroupAction a{group, target, {}};
  a.images.assign(static_cast<std::size_t>(group.order()), {});
  std::vector<char> seen(static_cast<std::size_t>(group.order()), 0);
  for (auto it = j["images"].begin(); it != j["images"].end(); ++it) {
    int g = group.index_of(it.key());
    seen[static_cast<std::size_t>(g)] = 1;
    std::vector<Word> words;
    for (const auto& w : it.value()) {
      Word word = parse_word(w.get<std::string>(), target.generators);
      words.push_back(std::move(word));
    }
    a.images[static_cast<std::size_t>(g)] = std::move(words);
  }
  for (int g = 0; g < group.order(); ++g)
    if (!seen[static_cast<std::size_t>(g)])
      throw std::invalid_argument("action must provide images for every group element, missing " +
                                  group.name(g));
  a.validate();
  return a;
}

std::string action_to_json(const GroupAction& a) {
  json images;
  for (int g = 0; g < a.group.order(); ++g) {
    json words = json::array();
    for (const Word& w : a.images[static_cast<std::size_t>(g)])
      words.push_back(word_to_string(w, a.target.generators));
    images[a.group.name(g)] = std::move(words);
  }
  json j;
  j["images"] = std::move(images);
  return j.dump(2) + "\n";
}

FinitePoset parse_poset_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("points") || !j.contains("covers"))
    throw std::invalid_argument("poset JSON needs \"points\" and \"covers\"");
  std::vector<std::string> points = string_list(j["points"], "points");
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j["covers"]) {
    auto pair = string_list(c, "covers");
    if (pair.size() != 2) throw std::invalid_argument("covers must be pairs");
    covers.emplace_back(pair[0], pair[1]);
  }
  return FinitePoset::from_covers(points, covers);
}

std::string poset_to_json(const FinitePoset& X) {
  json j;
  j["points"] = X.points();
  json covers = json::array();
  for (int p = 0; p < X.size(); ++p)
    for (int q : X.up()[static_cast<std::size_t>(p)])
      covers.push_back(json::array({X.name(p), X.name(q)}));
  j["covers"] = std::move(covers);
  return j.dump(2) + "\n";
}

std::string vertex_maps_to_json(const SimplicialComplex& K,
                                const std::vector<std::string>& names,
                                const std::vector<SimplicialMap>& maps) {
  json j;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    json m;
    for (int v = 0; v < K.vertex_count(); ++v)
      m[K.label(v)] = K.label(maps[i].image[static_cast<std::size_t>(v)]);
    j[names[i]] = std::move(m);
  }
  return j.dump(2) + "\n";
}

std::vector<std::pair<std::string, SimplicialMap>> parse_vertex_maps_json(
    const std::string& text, const SimplicialComplex& K) {
  json j = parse(text);
  std::vector<std::pair<std::string, SimplicialMap>> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    SimplicialMap f;
    f.image.assign(static_cast<std::size_t>(K.vertex_count()), -1);
    for (auto v = it.value().begin(); v != it.value().end(); ++v)
      f.image[static_cast<std::size_t>(K.index_of(v.key()))] = K.index_of(v.value().get<std::string>());
    for (int v = 0; v < K.vertex_count(); ++v)
      if (f.image[static_cast<std::size_t>(v)] < 0)
        throw std::invalid_argument("vertex map is missing an image for " + K.label(v));
    out.emplace_back(it.key(), std::move(f));
  }
  return out;
}

std::string homology_report_json(const std::vector<std::pair<int, AbelianGroup>>& groups) {
  json arr = json::array();
  for (const auto& [d, H] : groups) {
    json j;
    j["dim"] = d;
    j["rank"] = H.rank;
    json tors = json::array();
    for (const Int& t : H.torsion) tors.push_back(t.convert_to<long long>());
    j["torsion"] = std::move(tors);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string poset_to_dot(const FinitePoset& X) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  auto h = X.heights();
  int maxh = 0;
  for (int v : h) maxh = std::max(maxh, v);
  for (int level = 0; level <= maxh; ++level) {
    os << "  { rank=same;";
    for (int p = 0; p < X.size(); ++p)
      if (h[static_cast<std::size_t>(p)] == level) os << " " << dot_quote(X.name(p)) << ";";
    os << " }\n";
  }
  for (int p = 0; p < X.size(); ++p)
    for (int q : X.up()[static_cast<std::size_t>(p)])
      os << "  " << dot_quote(X.name(p)) << " -> " << dot_quote(X.name(q)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string symmetric_presentation_to_json(const SymmetricPresentation& sp) {
  json j;
  j["presentation"] = json::parse(presentation_to_json(sp.presentation));
  json xi, rho;
  for (int g = 0; g < sp.group.order(); ++g) {
    xi[sp.group.name(g)] = sp.xi[static_cast<std::size_t>(g)];
    rho[sp.group.name(g)] = sp.rho[static_cast<std::size_t>(g)];
  }
  j["xi"] = std::move(xi);
  j["rho"] = std::move(rho);
  return j.dump(2) + "\n";
}

namespace {

std::string hex64(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace

std::string content_hash(const SimplicialComplex& K) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& l : K.labels()) h = fnv64(l, h) ^ 0x7;
  for (const auto& s : K.simplices())
    for (int v : s) h = hash_combine(h, static_cast<std::uint64_t>(v));
  return hex64(h);
}

std::string content_hash(const FinitePoset& X) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& n : X.points()) h = fnv64(n, h) ^ 0x3;
  for (int p = 0; p < X.size(); ++p)
    for (int q : X.up()[static_cast<std::size_t>(p)])
      h = hash_combine(h, (static_cast<std::uint64_t>(p) << 24) ^ static_cast<std::uint64_t>(q));
  return hex64(h);
}

std::string content_hash(const Presentation& p) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& g : p.generators) h = fnv64(g, h) ^ 0x5;
  for (const Word& w : p.relators)
    for (const Letter& l : w.letters)
      h = hash_combine(h, (static_cast<std::uint64_t>(l.generator) << 2) ^
                              static_cast<std::uint64_t>(l.exponent + 2));
  return hex64(h);
}

}  // namespace fintop

#include "tausilt/spec_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tausilt/errors.hpp"

namespace tausilt {

using json = nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) throw ParseError("unknown key '" + key + "' in " + where);
  }
}

}  // namespace

AlgebraSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top-level document must be an object");
  reject_unknown_keys(j, {"vertices", "arrows", "relations", "max_path_length"}, "document");
  AlgebraSpec spec;
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("'vertices' must be an array of strings");
  std::set<std::string> vnames;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex labels must be strings");
    std::string name = v.get<std::string>();
    if (!vnames.insert(name).second) throw ParseError("duplicate vertex label '" + name + "'");
    spec.vertices.push_back(name);
  }
  if (spec.vertices.empty()) throw ParseError("at least one vertex is required");
  std::set<std::string> anames;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw ParseError("'arrows' must be an array");
    for (const auto& a : j["arrows"]) {
      if (!a.is_object()) throw ParseError("each arrow must be an object");
      reject_unknown_keys(a, {"name", "from", "to"}, "arrow");
      for (const char* field : {"name", "from", "to"})
        if (!a.contains(field) || !a[field].is_string())
          throw ParseError(std::string("arrow field '") + field + "' must be a string");
      AlgebraSpec::ArrowSpec arrow{a["name"].get<std::string>(), a["from"].get<std::string>(),
                                   a["to"].get<std::string>()};
      if (!anames.insert(arrow.name).second)
        throw ParseError("duplicate arrow name '" + arrow.name + "'");
      if (!vnames.count(arrow.from))
        throw ParseError("arrow '" + arrow.name + "' has unknown source '" + arrow.from + "'");
      if (!vnames.count(arrow.to))
        throw ParseError("arrow '" + arrow.name + "' has unknown target '" + arrow.to + "'");
      spec.arrows.push_back(std::move(arrow));
    }
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw ParseError("'relations' must be an array");
    for (const auto& rel : j["relations"]) {
      if (!rel.is_array() || rel.empty())
        throw ParseError("each relation must be a nonempty array of terms");
      std::vector<AlgebraSpec::TermSpec> terms;
      for (const auto& t : rel) {
        if (!t.is_object()) throw ParseError("each relation term must be an object");
        reject_unknown_keys(t, {"coeff", "path"}, "relation term");
        if (!t.contains("coeff") || !t["coeff"].is_string())
          throw ParseError("relation term 'coeff' must be a string rational");
        if (!t.contains("path") || !t["path"].is_array())
          throw ParseError("relation term 'path' must be an array of arrow names");
        AlgebraSpec::TermSpec term;
        term.coeff = t["coeff"].get<std::string>();
        parse_rational(term.coeff);  // validates
        for (const auto& p : t["path"]) {
          if (!p.is_string()) throw ParseError("path entries must be arrow names");
          std::string arrow = p.get<std::string>();
          if (!anames.count(arrow))
            throw ParseError("relation references unknown arrow '" + arrow + "'");
          term.path.push_back(arrow);
        }
        if (term.path.size() < 2)
          throw ParseError("relation paths must have length at least 2 (admissibility)");
        terms.push_back(std::move(term));
      }
      spec.relations.push_back(std::move(terms));
    }
  }
  if (j.contains("max_path_length")) {
    if (!j["max_path_length"].is_number_integer() || j["max_path_length"].get<int>() < 2)
      throw ParseError("'max_path_length' must be an integer >= 2");
    spec.max_path_length = j["max_path_length"].get<int>();
  }
  return spec;
}

BoundQuiverAlgebra algebra_from_spec(const AlgebraSpec& spec, unsigned seed) {
  Quiver q;
  q.vertices = spec.vertices;
  for (const auto& a : spec.arrows) {
    Arrow arrow;
    arrow.name = a.name;
    arrow.from = q.vertex_index(a.from);
    arrow.to = q.vertex_index(a.to);
    if (arrow.from < 0 || arrow.to < 0) throw ParseError("arrow endpoints do not resolve");
    q.arrows.push_back(std::move(arrow));
  }
  std::vector<Relation> rels;
  for (const auto& terms : spec.relations) {
    Relation rel;
    for (const auto& t : terms) {
      RelationTerm term;
      term.coeff = parse_rational(t.coeff);
      for (const std::string& an : t.path) {
        int idx = q.arrow_index(an);
        if (idx < 0) throw ParseError("relation arrow '" + an + "' does not resolve");
        term.path.push_back(idx);
      }
      rel.push_back(std::move(term));
    }
    rels.push_back(std::move(rel));
  }
  int cap = spec.max_path_length.value_or(32);
  return BoundQuiverAlgebra::build(q, rels, cap, seed);
}

namespace {

AlgebraSpec::TermSpec term(const std::string& coeff, std::vector<std::string> path) {
  return AlgebraSpec::TermSpec{coeff, std::move(path)};
}

AlgebraSpec make_a2_path() {
  AlgebraSpec s;
  s.vertices = {"1", "2"};
  s.arrows = {{"a", "1", "2"}};
  return s;
}

AlgebraSpec make_a3_rel() {
  AlgebraSpec s;
  s.vertices = {"1", "2", "3"};
  s.arrows = {{"x", "1", "2"}, {"y", "2", "3"}};
  s.relations = {{term("1", {"x", "y"})}};
  return s;
}

AlgebraSpec make_sym_local() {
  AlgebraSpec s;
  s.vertices = {"1", "2"};
  s.arrows = {{"x12", "1", "2"}, {"y12", "1", "2"}, {"x21", "2", "1"}, {"y21", "2", "1"}};
  s.relations = {
      {term("1", {"x12", "y21"}), term("-1", {"y12", "x21"})},
      {term("1", {"x21", "y12"}), term("-1", {"y21", "x12"})},
      {term("1", {"x12", "x21"})},
      {term("1", {"x21", "x12"})},
      {term("1", {"y12", "y21"})},
      {term("1", {"y21", "y12"})},
  };
  return s;
}

AlgebraSpec make_jacobian_b() {
  AlgebraSpec s;
  s.vertices = {"1", "2", "3"};
  s.arrows = {{"x1", "1", "2"}, {"x2", "2", "3"}, {"x3", "3", "1"},
              {"y1", "1", "2"}, {"y2", "2", "3"}, {"y3", "3", "1"}};
  s.relations = {
      // x^2 = yxyxy, per starting vertex
      {term("1", {"x1", "x2"}), term("-1", {"y1", "x2", "y3", "x1", "y2"})},
      {term("1", {"x2", "x3"}), term("-1", {"y2", "x3", "y1", "x2", "y3"})},
      {term("1", {"x3", "x1"}), term("-1", {"y3", "x1", "y2", "x3", "y1"})},
      // y^2 = xyxyx
      {term("1", {"y1", "y2"}), term("-1", {"x1", "y2", "x3", "y1", "x2"})},
      {term("1", {"y2", "y3"}), term("-1", {"x2", "y3", "x1", "y2", "x3"})},
      {term("1", {"y3", "y1"}), term("-1", {"x3", "y1", "x2", "y3", "x1"})},
      // x^2 y = x y^2 = y^2 x = y x^2 = 0
      {term("1", {"x1", "x2", "y3"})},
      {term("1", {"x2", "x3", "y1"})},
      {term("1", {"x3", "x1", "y2"})},
      {term("1", {"x1", "y2", "y3"})},
      {term("1", {"x2", "y3", "y1"})},
      {term("1", {"x3", "y1", "y2"})},
      {term("1", {"y1", "y2", "x3"})},
      {term("1", {"y2", "y3", "x1"})},
      {term("1", {"y3", "y1", "x2"})},
      {term("1", {"y1", "x2", "x3"})},
      {term("1", {"y2", "x3", "x1"})},
      {term("1", {"y3", "x1", "x2"})},
  };
  return s;
}

AlgebraSpec make_preproj_a2() {
  AlgebraSpec s;
  s.vertices = {"1", "2"};
  s.arrows = {{"a", "1", "2"}, {"b", "2", "1"}};
  s.relations = {{term("1", {"a", "b"})}, {term("1", {"b", "a"})}};
  return s;
}

AlgebraSpec make_one_simple() {
  AlgebraSpec s;
  s.vertices = {"1"};
  return s;
}

}  // namespace

std::vector<std::string> bundled_example_names() {
  return {"a2-path", "a3-rel", "sym-local", "jacobian-b", "preproj-a2", "one-simple"};
}

AlgebraSpec bundled_example(const std::string& name) {
  if (name == "a2-path") return make_a2_path();
  if (name == "a3-rel") return make_a3_rel();
  if (name == "sym-local") return make_sym_local();
  if (name == "jacobian-b") return make_jacobian_b();
  if (name == "preproj-a2") return make_preproj_a2();
  if (name == "one-simple") return make_one_simple();
  throw ParseError("unknown bundled example '" + name + "'");
}

std::string spec_to_json(const AlgebraSpec& spec) {
  json j;
  j["vertices"] = spec.vertices;
  j["arrows"] = json::array();
  for (const auto& a : spec.arrows)
    j["arrows"].push_back(json{{"name", a.name}, {"from", a.from}, {"to", a.to}});
  j["relations"] = json::array();
  for (const auto& rel : spec.relations) {
    json terms = json::array();
    for (const auto& t : rel) terms.push_back(json{{"coeff", t.coeff}, {"path", t.path}});
    j["relations"].push_back(terms);
  }
  if (spec.max_path_length) j["max_path_length"] = *spec.max_path_length;
  return j.dump(2) + "\n";
}

namespace {

json gvec_to_json(const IntVec& g) {
  json out = json::array();
  for (const Int& x : g) out.push_back(x.get_str());
  return out;
}

json complex_to_json(const BoundQuiverAlgebra& A, const TwoTermComplex& c) {
  json out;
  json d1 = json::array(), d0 = json::array();
  for (int t : c.deg1) d1.push_back(A.quiver().vertices[t]);
  for (int t : c.deg0) d0.push_back(A.quiver().vertices[t]);
  out["deg_minus1"] = d1;
  out["deg0"] = d0;
  json diff = json::array();
  ModMap dm = c.diff_map(A);
  for (size_t r = 0; r < c.deg1.size(); ++r) {
    json row = json::array();
    for (size_t s = 0; s < c.deg0.size(); ++s) {
      json entry = json::array();
      for (int k = 0; k < A.dim(); ++k)
        if (!is_zero(dm.e[r][s][k]))
          entry.push_back(json{{"path", A.word_name(k)}, {"coeff", to_string(dm.e[r][s][k])}});
      row.push_back(entry);
    }
    diff.push_back(row);
  }
  out["differential"] = diff;
  return out;
}

std::vector<int> sorted_node_order(const MutationGraph& g) {
  std::vector<int> order(g.nodes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.nodes[a].key < g.nodes[b].key; });
  return order;
}

}  // namespace

std::string graph_json(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  json j;
  j["format"] = "tausilt-graph";
  j["n"] = A.num_vertices();
  j["verdict"] = g.verdict == Verdict::Finite ? "finite" : "budget-exhausted";
  std::vector<int> order = sorted_node_order(g);
  std::vector<int> rankof(order.size());
  for (size_t i = 0; i < order.size(); ++i) rankof[order[i]] = static_cast<int>(i);
  json nodes = json::array();
  for (int idx : order) {
    const SiltingObject& node = g.nodes[idx];
    json nj;
    nj["key"] = node.key;
    json cols = json::array();
    for (const IntVec& gv : node.gvecs) cols.push_back(gvec_to_json(gv));
    nj["g_matrix"] = cols;
    json summands = json::array();
    for (const TwoTermComplex& s : node.summands) summands.push_back(complex_to_json(A, s));
    nj["summands"] = summands;
    nj["depth"] = g.depth[idx];
    nodes.push_back(nj);
  }
  j["nodes"] = nodes;
  std::vector<json> edge_list;
  for (const GraphEdge& e : g.edges) {
    json ej;
    int a = rankof[e.a], b = rankof[e.b];
    ej["a"] = std::min(a, b);
    ej["b"] = std::max(a, b);
    bool a_is_min = a < b;
    bool min_greater = a_is_min ? e.a_greater : !e.a_greater;
    ej["hasse"] = min_greater ? "a>b" : "b>a";
    ej["position"] = e.pos_a;
    edge_list.push_back(ej);
  }
  std::sort(edge_list.begin(), edge_list.end(), [](const json& x, const json& y) {
    if (x["a"] != y["a"]) return x["a"] < y["a"];
    return x["b"] < y["b"];
  });
  j["edges"] = edge_list;
  return j.dump(2) + "\n";
}

std::string delta_json(const BoundQuiverAlgebra& A, const SimplicialComplex& dc) {
  (void)A;
  json j;
  j["format"] = "tausilt-delta";
  j["n"] = dc.n;
  json verts = json::array();
  for (const IntVec& g : dc.vertex_g) verts.push_back(gvec_to_json(g));
  j["vertices"] = verts;
  j["max_faces"] = dc.max_faces;
  return j.dump(2) + "\n";
}

std::string fan_json(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  (void)A;
  json j;
  j["format"] = "tausilt-fan";
  j["n"] = A.num_vertices();
  j["complete"] = g.verdict == Verdict::Finite;
  json cones = json::array();
  for (int idx : sorted_node_order(g)) {
    const SiltingObject& node = g.nodes[idx];
    json cj;
    cj["key"] = node.key;
    json cols = json::array();
    for (const IntVec& gv : node.gvecs) cols.push_back(gvec_to_json(gv));
    cj["generators"] = cols;
    cones.push_back(cj);
  }
  j["cones"] = cones;
  return j.dump(2) + "\n";
}

std::vector<std::string> keys_from_graph_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<std::string> keys;
  for (const auto& node : j.at("nodes")) {
    std::vector<IntVec> gvecs;
    for (const auto& col : node.at("g_matrix")) {
      IntVec g;
      for (const auto& x : col) g.push_back(Int(x.get<std::string>()));
      gvecs.push_back(g);
    }
    std::sort(gvecs.begin(), gvecs.end(), gvec_less);
    std::ostringstream key;
    for (size_t i = 0; i < gvecs.size(); ++i) {
      if (i) key << ";";
      key << gvec_str(gvecs[i]);
    }
    keys.push_back(key.str());
  }
  return keys;
}

}  // namespace tausilt

#include "smale/io.hpp"

#include <fstream>
#include <sstream>

namespace smale {

namespace {

Json names_of(const FiniteOrder& order, const std::vector<ElementId>& ids) {
  Json out = Json::array();
  for (ElementId id : ids) out.push_back(order.name(id));
  return out;
}

Json pairs_of(const FiniteOrder& order, const std::vector<ElementPair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back({order.name(a), order.name(b)});
  return out;
}

std::string dart_name(const LevelGraph& g, const FiniteOrder& order, std::size_t dart) {
  return order.name(g.edges[dart / 2].saddle) + "/" + std::to_string(dart % 2);
}

Json level_graph_json(const FiniteOrder& order, const LevelGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"saddle", order.name(e.saddle)},
                     {"ends", {order.name(g.vertices[e.u]), order.name(g.vertices[e.v])}}});
  }
  return {{"vertices", names_of(order, g.vertices)}, {"edges", std::move(edges)}};
}

}  // namespace

OrderDocument parse_order_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    raise(ErrorCode::Parse, e.what());
  }
  if (!doc.is_object()) raise(ErrorCode::Parse, "order document must be an object");
  if (!doc.contains("elements") || !doc["elements"].is_array()) raise(ErrorCode::Parse, "missing 'elements' array");
  if (!doc.contains("relations") || !doc["relations"].is_array()) raise(ErrorCode::Parse, "missing 'relations' array");

  OrderSpec spec;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) raise(ErrorCode::Parse, "element names must be strings");
    spec.elements.push_back(e.get<std::string>());
  }
  for (const auto& r : doc["relations"]) {
    if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string()) {
      raise(ErrorCode::Parse, "relations must be [greater, smaller] string pairs");
    }
    spec.relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
  }

  OrderDocument out;
  out.order = FiniteOrder::load(spec);
  if (doc.contains("cycles")) {
    const Json& cycles = doc["cycles"];
    if (!cycles.is_object()) raise(ErrorCode::Parse, "'cycles' must be an object keyed by owner");
    auto lookup = [&](const Json& name) {
      if (!name.is_string()) raise(ErrorCode::Parse, "cycle entries must be element names");
      auto id = out.order.find(name.get<std::string>());
      if (!id) raise(ErrorCode::Parse, "unknown element '" + name.get<std::string>() + "' in cycles");
      return *id;
    };
    CycleAssignment assignment;
    for (const auto& [owner, word] : cycles.items()) {
      if (!word.is_array()) raise(ErrorCode::Parse, "cycle of '" + owner + "' must be an array");
      CyclicWord& w = assignment.cycles[lookup(Json(owner))];
      for (const auto& t : word) {
        if (!t.is_array() || t.size() != 3) raise(ErrorCode::Parse, "transitions are [left, mediator, right]");
        w.push_back({lookup(t[0]), lookup(t[1]), lookup(t[2])});
      }
    }
    out.cycles = std::move(assignment);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) raise(ErrorCode::Io, "cannot read '" + path + "'");
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::Io, "cannot write '" + path + "'");
  out << content;
  if (!out) raise(ErrorCode::Io, "cannot write '" + path + "'");
}

Json order_document_json(const OrderSpec& spec, const NamedCycles& cycles) {
  Json relations = Json::array();
  for (const auto& [a, b] : spec.relations) relations.push_back({a, b});
  Json doc = {{"elements", spec.elements}, {"relations", std::move(relations)}};
  if (!cycles.empty()) {
    Json c = Json::object();
    for (const auto& [owner, word] : cycles) c[owner] = word;
    doc["cycles"] = std::move(c);
  }
  return doc;
}

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

Json order_report_json(const FiniteOrder& order) {
  const RoleMap roles = classify(order);
  Json elements = Json::array();
  for (ElementId id : order.elements()) {
    Json e = {{"name", order.name(id)}, {"role", to_string(roles.role(id))}};
    if (roles.role(id) == Role::Saddle) e["generation"] = roles.generation(id);
    e["ancestors"] = names_of(order, order.parents(id));
    e["children"] = names_of(order, order.children(id));
    elements.push_back(std::move(e));
  }
  return {{"valid", true},
          {"elements", std::move(elements)},
          {"covers", pairs_of(order, order.cover_pairs())},
          {"relation_count", order.relation_pairs().size()},
          {"north_south", pairs_of(order, roles.north_south)}};
}

Json connectivity_json(const FiniteOrder& order, const ConnectivityReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json j = {{"element", order.name(e.element)}, {"side", e.maximal ? "maximal" : "minimal"}, {"passed", e.passed}};
    if (!e.passed) {
      Json comps = Json::array();
      for (const auto& c : e.components) comps.push_back(names_of(order, c));
      j["components"] = std::move(comps);
    }
    entries.push_back(std::move(j));
  }
  return {{"passed", report.passed()}, {"entries", std::move(entries)}};
}

Json violations_json(const FiniteOrder& order, const ViolationReport& report) {
  Json list = Json::array();
  for (const auto& v : report.violations) {
    list.push_back({{"rule", to_string(v.rule)},
                    {"anchor", order.name(v.anchor)},
                    {"witnesses", names_of(order, v.witnesses)},
                    {"message", v.message}});
  }
  return {{"empty", report.empty()},
          {"violations", std::move(list)},
          {"note", "necessary conditions only; passing them does not establish realizability with non-trivial "
                   "attractors or repellers"}};
}

Json plug_plan_json(const FiniteOrder& order, const PlugPlan& plan) {
  Json plugs = Json::array();
  for (const auto& p : plan.plugs) {
    plugs.push_back({{"element", order.name(p.element)},
                     {"role", to_string(p.role)},
                     {"entries", names_of(order, p.entries)},
                     {"exits", names_of(order, p.exits)}});
  }
  Json schedule = Json::array();
  for (const auto& g : plan.schedule) {
    schedule.push_back({{"from", order.name(g.from)},
                        {"exit_component", g.exit_component},
                        {"to", order.name(g.to)},
                        {"entry_component", g.entry_component},
                        {"kind", to_string(g.kind)}});
  }
  return {{"plugs", std::move(plugs)}, {"schedule", std::move(schedule)}};
}

Json gradient_json(const FiniteOrder& order, const GradientVerdict& verdict) {
  Json out = {{"verdict", verdict.realizable ? "realizable" : "not-realizable"},
              {"max_genus", verdict.max_genus},
              {"embeddings_examined", verdict.examined},
              {"highest", level_graph_json(order, verdict.graphs.highest)},
              {"lowest", level_graph_json(order, verdict.graphs.lowest)}};
  if (verdict.witness) {
    const LevelGraph& hi = verdict.graphs.highest;
    const auto& w = *verdict.witness;
    Json rotation = Json::object();
    for (std::size_t v = 0; v < hi.vertices.size(); ++v) {
      Json cyc = Json::array();
      for (std::size_t d : w.embedding.rotation.rotation[v]) cyc.push_back(dart_name(hi, order, d));
      rotation[order.name(hi.vertices[v])] = std::move(cyc);
    }
    Json faces = Json::array();
    for (std::size_t f = 0; f < w.embedding.faces.size(); ++f) {
      Json walk = Json::array();
      for (std::size_t d : w.embedding.faces[f]) walk.push_back(dart_name(hi, order, d));
      faces.push_back({{"holds", order.name(verdict.graphs.lowest.vertices[w.face_to_vertex[f]])},
                       {"walk", std::move(walk)}});
    }
    Json dual_edges = Json::array();
    for (const auto& [a, b] : w.dual.edges) dual_edges.push_back({a, b});
    out["witness"] = {{"genus", w.embedding.genus},
                      {"rotation", std::move(rotation)},
                      {"faces", std::move(faces)},
                      {"dual", {{"vertices", w.dual.vertex_count}, {"edges", std::move(dual_edges)}}}};
  }
  return out;
}

Json refusal_json(const FiniteOrder& order, const Refusal& refusal) {
  return {{"refused", true},
          {"stage", refusal.stage},
          {"reason", refusal.reason},
          {"connectivity", connectivity_json(order, refusal.connectivity)}};
}

}  // namespace smale

#include "smale/dot.hpp"

#include <sstream>

namespace smale {

namespace {

const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                               "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string hasse_dot(const FiniteOrder& order) {
  const RoleMap roles = classify(order);
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=TB;\n";
  for (ElementId id : order.elements()) {
    const char* shape = roles.role(id) == Role::Saddle ? "ellipse" : "box";
    out << "  " << quoted(order.name(id)) << " [shape=" << shape << ", xlabel=" << quoted(std::string(to_string(roles.role(id))))
        << "];\n";
  }
  for (const auto& [hi, lo] : order.cover_pairs()) {
    out << "  " << quoted(order.name(hi)) << " -> " << quoted(order.name(lo)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string band_incidence_dot(const RealizationCertificate& cert) {
  const FiniteOrder& order = cert.order;
  std::map<ElementId, std::size_t> colour;
  for (const auto& [s, d] : cert.domains) colour.emplace(s, colour.size());
  std::ostringstream out;
  out << "graph bands {\n";
  for (ElementId id : order.elements()) {
    if (order.is_maximal(id) || order.is_minimal(id)) {
      out << "  " << quoted(order.name(id)) << " [shape=" << (order.is_maximal(id) ? "triangle" : "invtriangle")
          << "];\n";
    }
  }
  for (const auto& p : cert.gluing.pairs) {
    const Transition& t = cert.assignment.at(p.attractor_band.owner)[p.attractor_band.index];
    // The glued pair runs along the boundary of the domain of its right saddle.
    const ElementId saddle = t.right;
    const std::size_t c = colour.count(saddle) ? colour.at(saddle) : 0;
    out << "  " << quoted(order.name(p.repeller_band.owner)) << " -- " << quoted(order.name(p.attractor_band.owner))
        << " [color=" << quoted(palette[c % std::size(palette)]) << ", label="
        << quoted(order.name(t.left) + ">" + order.name(t.right)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string embedding_dot(const FiniteOrder& order, const LevelGraph& graph, const Embedding& embedding) {
  const auto face = face_of_dart(embedding, 2 * graph.edges.size());
  std::ostringstream out;
  out << "graph embedding {\n  label=" << quoted("genus " + std::to_string(embedding.genus) + ", " +
                                              std::to_string(embedding.faces.size()) + " faces")
      << ";\n";
  for (ElementId v : graph.vertices) out << "  " << quoted(order.name(v)) << ";\n";
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& edge = graph.edges[e];
    out << "  " << quoted(order.name(graph.vertices[edge.u])) << " -- " << quoted(order.name(graph.vertices[edge.v]))
        << " [label=" << quoted(order.name(edge.saddle) + " f" + std::to_string(face[2 * e]) + "|f" +
                                std::to_string(face[2 * e + 1]))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace smale

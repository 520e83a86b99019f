#pragma once

#include <string>

#include "smale/assembly.hpp"
#include "smale/gradient.hpp"

namespace smale {

// Hasse diagram, greater elements on top.
std::string hasse_dot(const FiniteOrder& order);

// Vertices are extremal elements, one edge per glued band pair, coloured by
// the saddle whose bands they are.
std::string band_incidence_dot(const RealizationCertificate& certificate);

// Highest level graph with each edge annotated by its two faces.
std::string embedding_dot(const FiniteOrder& order, const LevelGraph& graph, const Embedding& embedding);

}  // namespace smale

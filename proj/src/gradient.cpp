#include "smale/gradient.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>

#include "smale/error.hpp"

namespace smale {

namespace {

using Matrix = std::vector<std::vector<std::size_t>>;

Matrix adjacency(const Multigraph& g) {
  Matrix m(g.vertex_count, std::vector<std::size_t>(g.vertex_count, 0));
  for (const auto& [u, v] : g.edges) {
    ++m[u][v];
    if (u != v) ++m[v][u];
  }
  return m;
}

// Orbits of a permutation, each listed from its smallest dart.
std::vector<std::vector<std::size_t>> orbits(const std::vector<std::size_t>& perm) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t d = start; !seen[d]; d = perm[d]) {
      seen[d] = 1;
      orbit.push_back(d);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

// Multigraph whose vertices are the orbits of `vertex_perm`, edges {2e, 2e+1}.
Multigraph graph_of_orbits(const std::vector<std::size_t>& vertex_perm) {
  const auto cells = orbits(vertex_perm);
  std::vector<std::size_t> cell(vertex_perm.size(), 0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t d : cells[i]) cell[d] = i;
  }
  Multigraph g;
  g.vertex_count = cells.size();
  for (std::size_t e = 0; 2 * e + 1 < vertex_perm.size(); ++e) g.edges.emplace_back(cell[2 * e], cell[2 * e + 1]);
  return g;
}

std::vector<std::size_t> sigma_of(const RotationSystem& rs, std::size_t dart_count) {
  std::vector<std::size_t> sigma(dart_count, 0);
  for (const auto& cyc : rs.rotation) {
    for (std::size_t i = 0; i < cyc.size(); ++i) sigma[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  return sigma;
}

std::vector<std::size_t> face_walk_perm(const std::vector<std::size_t>& sigma) {
  std::vector<std::size_t> phi(sigma.size());
  for (std::size_t d = 0; d < sigma.size(); ++d) phi[d] = sigma[d ^ 1U];
  return phi;
}

std::vector<std::vector<std::size_t>> darts_at(const LevelGraph& g) {
  std::vector<std::vector<std::size_t>> at(g.vertices.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    at[g.edges[e].u].push_back(2 * e);
    at[g.edges[e].v].push_back(2 * e + 1);
  }
  return at;
}

Embedding make_embedding(const LevelGraph& g, RotationSystem rs) {
  Embedding emb;
  const std::size_t darts = 2 * g.edges.size();
  if (darts == 0) {
    emb.faces = {{}};
  } else {
    emb.faces = orbits(face_walk_perm(sigma_of(rs, darts)));
  }
  emb.rotation = std::move(rs);
  const long long chi = static_cast<long long>(g.vertices.size()) - static_cast<long long>(g.edges.size()) +
                        static_cast<long long>(emb.faces.size());
  if (chi > 2 || (2 - chi) % 2 != 0) raise(ErrorCode::Internal, "embedding with non-orientable Euler characteristic");
  emb.genus = static_cast<std::size_t>((2 - chi) / 2);
  return emb;
}

}  // namespace

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
  const std::size_t n = a.vertex_count;
  const Matrix ma = adjacency(a);
  const Matrix mb = adjacency(b);
  auto signature = [n](const Matrix& m, std::size_t v) {
    std::size_t degree = 0;
    for (std::size_t w = 0; w < n; ++w) degree += m[v][w];
    return std::pair{degree + m[v][v], m[v][v]};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sa(n), sb(n);
  for (std::size_t v = 0; v < n; ++v) {
    sa[v] = signature(ma, v);
    sb[v] = signature(mb, v);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<std::size_t> image(n, 0);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sa[i] != sb[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = ma[i][j] == mb[c][image[j]];
      if (!ok) continue;
      used[c] = 1;
      image[i] = c;
      if (extend(i + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  return extend(0);
}

Multigraph LevelGraph::shape() const {
  Multigraph g;
  g.vertex_count = vertices.size();
  for (const auto& e : edges) g.edges.emplace_back(e.u, e.v);
  return g;
}

bool LevelGraph::connected() const {
  if (vertices.size() <= 1) return true;
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : edges) parent[find(e.u)] = find(e.v);
  for (std::size_t v = 1; v < vertices.size(); ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

LevelGraphs level_graphs(const FiniteOrder& order) {
  const RoleMap roles = classify(order);
  LevelGraphs out;
  out.highest.vertices = roles.with_role(Role::Repeller);
  out.lowest.vertices = roles.with_role(Role::Attractor);
  auto position = [](const std::vector<ElementId>& vs, ElementId id) {
    return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), id) - vs.begin());
  };
  for (ElementId s : roles.with_role(Role::Saddle)) {
    if (roles.generation(s) != 1) {
      raise(ErrorCode::NotGradientShape, "saddle '" + order.name(s) + "' is of generation " +
                                             std::to_string(roles.generation(s)));
    }
    std::vector<ElementId> above, below;
    for (ElementId x : order.strictly_above(s)) {
      if (roles.role(x) == Role::Repeller) above.push_back(x);
    }
    for (ElementId x : order.strictly_below(s)) {
      if (roles.role(x) == Role::Attractor) below.push_back(x);
      if (roles.role(x) == Role::Saddle) {
        raise(ErrorCode::NotGradientShape, "saddles '" + order.name(s) + "' and '" + order.name(x) + "' are related");
      }
    }
    if (above.size() > 2 || below.size() > 2) {
      raise(ErrorCode::NotGradientShape, "saddle '" + order.name(s) + "' has " + std::to_string(above.size()) +
                                             " maximal and " + std::to_string(below.size()) +
                                             " minimal relatives; a fixed saddle has at most two of each");
    }
    const std::size_t hu = position(out.highest.vertices, above.front());
    const std::size_t lu = position(out.lowest.vertices, below.front());
    out.highest.edges.push_back({s, hu, position(out.highest.vertices, above.back())});
    out.lowest.edges.push_back({s, lu, position(out.lowest.vertices, below.back())});
  }
  return out;
}

std::vector<std::size_t> face_of_dart(const Embedding& embedding, std::size_t dart_count) {
  std::vector<std::size_t> face(dart_count, 0);
  for (std::size_t f = 0; f < embedding.faces.size(); ++f) {
    for (std::size_t d : embedding.faces[f]) face[d] = f;
  }
  return face;
}

std::size_t rotation_system_count(const LevelGraph& graph) {
  std::size_t total = 1;
  for (const auto& darts : darts_at(graph)) {
    for (std::size_t k = 2; k < darts.size(); ++k) total *= k;
  }
  return total;
}

std::vector<Embedding> enumerate_embeddings(const LevelGraph& graph, const EnumerationOptions& options) {
  if (!graph.connected()) raise(ErrorCode::DisconnectedGraph, "level graph is not connected");
  const auto at = darts_at(graph);
  const std::size_t nv = at.size();

  // Every cyclic order of each vertex, first dart fixed.
  std::vector<std::vector<std::vector<std::size_t>>> choices(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<std::size_t> darts = at[v];
    if (darts.size() <= 2) {
      choices[v].push_back(darts);
      continue;
    }
    do {
      choices[v].push_back(darts);
    } while (std::next_permutation(darts.begin() + 1, darts.end()));
  }
  if (nv == 0) return {};

  // Odometer over vertices 1..nv-1 for a fixed choice at vertex 0.
  auto run_block = [&](std::size_t first) {
    std::vector<Embedding> found;
    std::vector<std::size_t> digit(nv, 0);
    digit[0] = first;
    while (true) {
      RotationSystem rs;
      rs.rotation.reserve(nv);
      for (std::size_t v = 0; v < nv; ++v) rs.rotation.push_back(choices[v][digit[v]]);
      Embedding emb = make_embedding(graph, std::move(rs));
      if (emb.genus <= options.max_genus) found.push_back(std::move(emb));
      bool wrapped = true;
      for (std::size_t v = nv; v > 1;) {
        --v;
        if (++digit[v] < choices[v].size()) {
          wrapped = false;
          break;
        }
        digit[v] = 0;
      }
      if (wrapped) break;
    }
    return found;
  };

  const std::size_t blocks = choices[0].size();
  std::vector<std::vector<Embedding>> results(blocks);
  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, blocks);
  if (workers == 1) {
    for (std::size_t b = 0; b < blocks; ++b) results[b] = run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t b = w; b < blocks; b += workers) results[b] = run_block(b);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<Embedding> all;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(all));
  return all;
}

Multigraph dual_graph(const LevelGraph& graph, const Embedding& embedding) {
  Multigraph g;
  g.vertex_count = embedding.faces.size();
  const auto face = face_of_dart(embedding, 2 * graph.edges.size());
  for (std::size_t e = 0; e < graph.edges.size(); ++e) g.edges.emplace_back(face[2 * e], face[2 * e + 1]);
  return g;
}

Multigraph dual_of_dual(const LevelGraph& graph, const Embedding& embedding) {
  const std::size_t darts = 2 * graph.edges.size();
  if (darts == 0) return Multigraph{embedding.faces.size(), {}};
  // The dual map has vertex rotation phi; its faces are orbits of phi o theta.
  const auto phi = face_walk_perm(sigma_of(embedding.rotation, darts));
  return graph_of_orbits(face_walk_perm(phi));
}

namespace {

// Face-to-vertex bijection carrying every dual edge onto the lowest-graph
// edge of the same saddle.
std::optional<std::vector<std::size_t>> match_labeled(const LevelGraph& highest, const Embedding& emb,
                                                      const LevelGraph& lowest) {
  const std::size_t n = emb.faces.size();
  if (n != lowest.vertices.size() || highest.edges.size() != lowest.edges.size()) return std::nullopt;
  const auto face = face_of_dart(emb, 2 * highest.edges.size());
  std::vector<std::size_t> image(n, 0);
  std::vector<char> assigned(n, 0), used(n, 0);
  auto consistent = [&] {
    for (std::size_t e = 0; e < highest.edges.size(); ++e) {
      const std::size_t fa = face[2 * e], fb = face[2 * e + 1];
      if (!assigned[fa] || !assigned[fb]) continue;
      auto x = std::minmax(image[fa], image[fb]);
      auto y = std::minmax(lowest.edges[e].u, lowest.edges[e].v);
      if (x != y) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> extend = [&](std::size_t f) {
    if (f == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w]) continue;
      used[w] = assigned[f] = 1;
      image[f] = w;
      if (consistent() && extend(f + 1)) return true;
      used[w] = assigned[f] = 0;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

}  // namespace

GradientVerdict check_gradient_like(const FiniteOrder& order, std::optional<std::size_t> max_genus,
                                    std::size_t threads) {
  GradientVerdict verdict;
  verdict.graphs = level_graphs(order);
  const LevelGraph& hi = verdict.graphs.highest;
  const LevelGraph& lo = verdict.graphs.lowest;
  // Saddles are edges of both graphs in the same order.
  for (std::size_t e = 0; e < hi.edges.size(); ++e) {
    if (hi.edges[e].saddle != lo.edges[e].saddle) raise(ErrorCode::Internal, "level graphs disagree on saddles");
  }
  verdict.max_genus = max_genus.value_or(hi.edges.size());
  const auto embeddings = enumerate_embeddings(hi, {verdict.max_genus, threads});
  for (const auto& emb : embeddings) {
    ++verdict.examined;
    if (auto image = match_labeled(hi, emb, lo)) {
      verdict.realizable = true;
      verdict.witness = GradientWitness{emb, dual_graph(hi, emb), std::move(*image)};
      break;
    }
  }
  return verdict;
}

}  // namespace smale

#include "tausilt/delta.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "tausilt/errors.hpp"

namespace tausilt {

namespace {

std::string face_str(const std::vector<int>& f) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) os << ",";
    os << f[i];
  }
  os << "}";
  return os.str();
}

}  // namespace

SimplicialComplex build_delta(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  if (g.verdict != Verdict::Finite) throw NotFinite("build_delta requires a Finite exploration");
  SimplicialComplex dc;
  dc.n = A.num_vertices();
  std::map<std::string, int> vid;
  std::vector<std::pair<std::string, IntVec>> verts;
  for (const SiltingObject& node : g.nodes)
    for (const IntVec& gv : node.gvecs) {
      std::string key = gvec_str(gv);
      if (!vid.count(key)) {
        vid[key] = 0;
        verts.emplace_back(key, gv);
      }
    }
  std::sort(verts.begin(), verts.end(),
            [](const auto& a, const auto& b) { return gvec_less(a.second, b.second); });
  for (size_t i = 0; i < verts.size(); ++i) {
    vid[verts[i].first] = static_cast<int>(i);
    dc.vertex_g.push_back(verts[i].second);
  }
  for (const SiltingObject& node : g.nodes) {
    std::vector<int> face;
    for (const IntVec& gv : node.gvecs) face.push_back(vid[gvec_str(gv)]);
    std::sort(face.begin(), face.end());
    dc.max_faces.push_back(std::move(face));
  }
  std::sort(dc.max_faces.begin(), dc.max_faces.end());
  return dc;
}

namespace {

std::map<std::vector<int>, std::vector<int>> codim1_incidence(const SimplicialComplex& dc) {
  std::map<std::vector<int>, std::vector<int>> inc;
  for (size_t f = 0; f < dc.max_faces.size(); ++f) {
    const std::vector<int>& face = dc.max_faces[f];
    for (size_t drop = 0; drop < face.size(); ++drop) {
      std::vector<int> sub;
      for (size_t i = 0; i < face.size(); ++i)
        if (i != drop) sub.push_back(face[i]);
      inc[sub].push_back(static_cast<int>(f));
    }
    if (face.empty()) inc[{}].push_back(static_cast<int>(f));
  }
  return inc;
}

}  // namespace

PurityReport check_pure_nonbranching(const SimplicialComplex& dc) {
  PurityReport rep;
  for (const std::vector<int>& f : dc.max_faces)
    if (static_cast<int>(f.size()) != dc.n) {
      rep.ok = false;
      rep.detail = "max face " + face_str(f) + " has size " + std::to_string(f.size()) +
                   ", expected " + std::to_string(dc.n);
      return rep;
    }
  for (const auto& [face, fs] : codim1_incidence(dc)) {
    if (fs.size() != 2) {
      rep.ok = false;
      rep.detail = "codim-1 face " + face_str(face) + " lies in " + std::to_string(fs.size()) +
                   " max faces";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

HomologyReport euler_and_homology(const SimplicialComplex& dc) {
  HomologyReport rep;
  // all faces, by dimension
  std::set<std::vector<int>> faces;
  for (const std::vector<int>& f : dc.max_faces) {
    const size_t m = f.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> sub;
      for (size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) sub.push_back(f[i]);
      faces.insert(sub);
    }
  }
  std::vector<std::vector<std::vector<int>>> by_dim(dc.n);
  for (const std::vector<int>& f : faces) by_dim[f.size() - 1].push_back(f);
  for (auto& v : by_dim) std::sort(v.begin(), v.end());
  long chi = 0;
  for (int d = 0; d < dc.n; ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(by_dim[d].size());
  rep.euler = chi;

  // boundary matrices, with the empty face as augmentation (reduced homology)
  std::vector<IntMatrix> boundary(dc.n + 1);  // boundary[d]: C_{d-1} -> C_{d-2} shifted by one
  std::vector<int> counts(dc.n + 1);
  counts[0] = 1;  // empty face
  for (int d = 0; d < dc.n; ++d) counts[d + 1] = static_cast<int>(by_dim[d].size());
  std::vector<std::map<std::vector<int>, int>> index(dc.n);
  for (int d = 0; d < dc.n; ++d)
    for (size_t i = 0; i < by_dim[d].size(); ++i) index[d][by_dim[d][i]] = static_cast<int>(i);
  // boundary[0]: C_0 -> C_{-1}: augmentation
  boundary[0] = IntMatrix(1, counts[1]);
  for (int c = 0; c < counts[1]; ++c) boundary[0].at(0, c) = 1;
  for (int d = 1; d < dc.n; ++d) {
    boundary[d] = IntMatrix(counts[d], counts[d + 1]);
    for (size_t c = 0; c < by_dim[d].size(); ++c) {
      const std::vector<int>& f = by_dim[d][c];
      for (size_t drop = 0; drop <= static_cast<size_t>(d); ++drop) {
        std::vector<int> sub;
        for (size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        int sign = (drop % 2 == 0) ? 1 : -1;
        boundary[d].at(index[d - 1][sub], static_cast<int>(c)) += sign;
      }
    }
  }
  // ranks and torsion via Smith normal form
  std::vector<int> ranks(dc.n + 1, 0);
  std::vector<std::vector<Int>> tors(dc.n + 1);
  for (int d = 0; d < dc.n; ++d) {
    SmithResult s = smith_normal_form(boundary[d]);
    int r = 0;
    int lim = std::min(s.D.rows(), s.D.cols());
    for (int i = 0; i < lim; ++i)
      if (sgn(s.D.at(i, i)) != 0) {
        ++r;
        if (s.D.at(i, i) > 1) tors[d].push_back(s.D.at(i, i));
      }
    ranks[d] = r;
  }
  rep.reduced_ranks.assign(dc.n, 0);
  rep.torsion.assign(dc.n, {});
  for (int d = 0; d < dc.n; ++d) {
    int rank_next = (d + 1 < dc.n) ? ranks[d + 1] : 0;
    rep.reduced_ranks[d] = counts[d + 1] - ranks[d] - rank_next;
    if (d + 1 <= dc.n && d + 1 < static_cast<int>(tors.size())) rep.torsion[d] = tors[d + 1];
  }
  rep.is_sphere = true;
  for (int d = 0; d < dc.n; ++d) {
    long expect = (d == dc.n - 1) ? 1 : 0;
    if (rep.reduced_ranks[d] != expect || !rep.torsion[d].empty()) rep.is_sphere = false;
  }
  return rep;
}

ShellingReport verify_shelling(const SimplicialComplex& dc, const std::vector<int>& order) {
  ShellingReport rep;
  rep.order = order;
  if (dc.n < 2) {
    rep.ok = false;
    rep.witness = "shelling verification requires dimension >= 1 (n >= 2 simples)";
    return rep;
  }
  for (size_t j = 1; j < order.size(); ++j) {
    const std::vector<int>& fj = dc.max_faces[order[j]];
    std::vector<std::vector<int>> inters;
    for (size_t i = 0; i < j; ++i) {
      const std::vector<int>& fi = dc.max_faces[order[i]];
      std::vector<int> inter;
      std::set_intersection(fj.begin(), fj.end(), fi.begin(), fi.end(),
                            std::back_inserter(inter));
      inters.push_back(std::move(inter));
    }
    bool has_any = false;
    for (const std::vector<int>& x : inters) has_any = has_any || !x.empty();
    if (!has_any) {
      rep.ok = false;
      rep.witness = "face " + face_str(fj) + " meets the earlier union in nothing";
      return rep;
    }
    for (const std::vector<int>& x : inters) {
      // every intersection must extend to a codim-1 intersection
      bool covered = false;
      for (const std::vector<int>& y : inters) {
        if (y.size() != fj.size() - 1) continue;
        covered = covered || std::includes(y.begin(), y.end(), x.begin(), x.end());
      }
      if (!covered) {
        rep.ok = false;
        rep.witness = "face " + face_str(fj) + ": intersection " + face_str(x) +
                      " is not inside a codim-1 intersection";
        return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

ShellingReport shelling_from_order(const SimplicialComplex& dc, const MutationGraph& g) {
  // linear extension with the minimum (A[1]) first: Kahn on arrows
  // smaller -> bigger, ties by canonical key
  const int m = static_cast<int>(g.nodes.size());
  std::vector<std::vector<int>> bigger(m);  // smaller -> bigger
  std::vector<int> indeg(m, 0);
  for (const GraphEdge& e : g.edges) {
    int big = e.a_greater ? e.a : e.b;
    int small = e.a_greater ? e.b : e.a;
    bigger[small].push_back(big);
    indeg[big]++;
  }
  auto cmp = [&](int x, int y) { return g.nodes[x].key > g.nodes[y].key; };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (int i = 0; i < m; ++i)
    if (indeg[i] == 0) ready.push(i);
  std::vector<int> node_order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    node_order.push_back(v);
    for (int w : bigger[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  // map node order to max-face indices
  std::map<std::vector<int>, int> face_index;
  for (size_t i = 0; i < dc.max_faces.size(); ++i) face_index[dc.max_faces[i]] = static_cast<int>(i);
  std::map<std::string, int> vid;
  for (size_t i = 0; i < dc.vertex_g.size(); ++i) vid[gvec_str(dc.vertex_g[i])] = static_cast<int>(i);
  std::vector<int> order;
  for (int node : node_order) {
    std::vector<int> face;
    for (const IntVec& gv : g.nodes[node].gvecs) face.push_back(vid[gvec_str(gv)]);
    std::sort(face.begin(), face.end());
    order.push_back(face_index[face]);
  }
  return verify_shelling(dc, order);
}

DualGraphWithPolygons dual_graph(const SimplicialComplex& dc) {
  DualGraphWithPolygons d;
  std::map<std::vector<int>, std::vector<int>> inc = codim1_incidence(dc);
  for (const auto& [face, fs] : inc) {
    if (fs.size() != 2) continue;
    d.edges.emplace_back(std::min(fs[0], fs[1]), std::max(fs[0], fs[1]));
    d.shared_face.push_back(face);
  }
  // connectivity
  const int V = static_cast<int>(dc.max_faces.size());
  std::vector<std::vector<int>> adj(V);
  for (size_t e = 0; e < d.edges.size(); ++e) {
    adj[d.edges[e].first].push_back(static_cast<int>(e));
    adj[d.edges[e].second].push_back(static_cast<int>(e));
  }
  std::vector<bool> seen(V, false);
  std::queue<int> q;
  if (V > 0) {
    q.push(0);
    seen[0] = true;
  }
  int reached = V > 0 ? 1 : 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : adj[v]) {
      int w = d.edges[e].first == v ? d.edges[e].second : d.edges[e].first;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
    }
  }
  d.connected = (reached == V);

  // polygons around codim-2 faces
  d.polygons_closed = true;
  if (dc.n >= 2) {
    std::set<std::vector<int>> codim2;
    for (const std::vector<int>& f : dc.max_faces) {
      const size_t m = f.size();
      if (dc.n == 2) {
        codim2.insert({});
        continue;
      }
      // all (n-2)-subsets: choose which two to drop
      for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
          std::vector<int> sub;
          for (size_t t = 0; t < m; ++t)
            if (t != i && t != j) sub.push_back(f[t]);
          codim2.insert(sub);
        }
    }
    for (const std::vector<int>& delta : codim2) {
      // edges whose shared codim-1 face contains delta
      std::vector<int> sub_edges;
      for (size_t e = 0; e < d.edges.size(); ++e)
        if (std::includes(d.shared_face[e].begin(), d.shared_face[e].end(), delta.begin(),
                          delta.end()))
          sub_edges.push_back(static_cast<int>(e));
      // walk the cycle
      std::map<int, std::vector<int>> sub_adj;
      for (int e : sub_edges) {
        sub_adj[d.edges[e].first].push_back(e);
        sub_adj[d.edges[e].second].push_back(e);
      }
      bool closed = !sub_adj.empty();
      for (const auto& [v, es] : sub_adj) closed = closed && es.size() == 2;
      if (!closed) {
        d.polygons_closed = false;
        continue;
      }
      std::vector<int> cycle;
      int start = sub_adj.begin()->first;
      int prev_edge = -1, cur = start;
      do {
        cycle.push_back(cur);
        int next_edge = sub_adj[cur][0] == prev_edge ? sub_adj[cur][1] : sub_adj[cur][0];
        cur = d.edges[next_edge].first == cur ? d.edges[next_edge].second : d.edges[next_edge].first;
        prev_edge = next_edge;
      } while (cur != start && cycle.size() <= sub_adj.size());
      if (cycle.size() != sub_adj.size()) {
        d.polygons_closed = false;  // not a single cycle
        continue;
      }
      d.polygons.push_back(std::move(cycle));
    }
  }
  return d;
}

Rank2Report rank2_cycle_check(const SimplicialComplex& dc) {
  Rank2Report rep;
  DualGraphWithPolygons d = dual_graph(dc);
  const int V = static_cast<int>(dc.max_faces.size());
  const int E = static_cast<int>(d.edges.size());
  if (!d.connected) {
    rep.ok = false;
    rep.detail = "dual graph is not connected";
    return rep;
  }
  if (!d.polygons_closed) {
    rep.ok = false;
    rep.detail = "a codim-2 polygon is not a single closed cycle";
    return rep;
  }
  rep.cycle_rank = E - V + 1;
  // polygon cycles as vectors in edge space
  std::map<std::pair<int, int>, std::vector<int>> edges_between;
  for (int e = 0; e < E; ++e) edges_between[d.edges[e]].push_back(e);
  RatMatrix poly(std::max(E, 1), std::max(static_cast<int>(d.polygons.size()), 1));
  for (size_t p = 0; p < d.polygons.size(); ++p) {
    const std::vector<int>& cyc = d.polygons[p];
    std::map<int, int> used;  // reuse distinct parallel edges between a node pair
    for (size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      auto key = std::minmax(u, v);
      const std::vector<int>& cand = edges_between[{key.first, key.second}];
      int chosen = -1;
      for (int e : cand)
        if (used[e] == 0) {
          chosen = e;
          break;
        }
      if (chosen < 0) chosen = cand.front();
      used[chosen]++;
      int sign = (u <= v) ? 1 : -1;
      poly.at(chosen, static_cast<int>(p)) += Rational(sign);
    }
  }
  rep.polygon_rank = d.polygons.empty() ? 0 : rank(poly);
  rep.ok = (rep.polygon_rank == rep.cycle_rank);
  if (!rep.ok)
    rep.detail = "polygon span rank " + std::to_string(rep.polygon_rank) +
                 " != cycle rank " + std::to_string(rep.cycle_rank);
  return rep;
}

}  // namespace tausilt

#include "tausilt/explorer.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "tausilt/errors.hpp"

namespace tausilt {

int MutationGraph::node_id(const std::string& key) const {
  auto it = key_to_id.find(key);
  return it == key_to_id.end() ? -1 : it->second;
}

MutationGraph explore(const BoundQuiverAlgebra& A, StartObject start, long budget, int max_depth,
                      bool validate, unsigned seed) {
  if (budget < 1) throw std::invalid_argument("explore: budget must be at least 1");
  MutationGraph g;
  g.n = A.num_vertices();
  std::mt19937_64 rng(seed);

  SiltingObject root =
      (start == StartObject::Algebra) ? stalk_silting(A) : shifted_stalk_silting(A);
  g.nodes.push_back(root);
  g.depth.push_back(0);
  g.expanded.push_back(false);
  g.key_to_id[root.key] = 0;
  g.root = 0;

  std::deque<int> frontier{0};
  std::set<std::pair<int, int>> seen_edges;
  bool capped = false;

  while (!frontier.empty()) {
    int id = frontier.front();
    frontier.pop_front();
    if (max_depth >= 0 && g.depth[id] >= max_depth) {
      capped = true;  // unexpanded frontier beyond the depth cap
      continue;
    }
    SiltingObject current = g.nodes[id];
    for (int k = 0; k < current.size(); ++k) {
      MutationResult mut = mutate(A, current, k, validate, &rng);
      const std::string& key = mut.object.key;
      auto it = g.key_to_id.find(key);
      int other;
      if (it == g.key_to_id.end()) {
        if (static_cast<long>(g.nodes.size()) >= budget) {
          capped = true;
          continue;
        }
        other = static_cast<int>(g.nodes.size());
        g.nodes.push_back(mut.object);
        g.depth.push_back(g.depth[id] + 1);
        g.expanded.push_back(false);
        g.key_to_id[key] = other;
        frontier.push_back(other);
      } else {
        other = it->second;
        if (validate) {
          // cross-check the canonical-key dedup with explicit isomorphisms
          const SiltingObject& known = g.nodes[other];
          for (int s = 0; s < known.size(); ++s)
            if (!complexes_isomorphic(A, known.summands[s], mut.object.summands[s]))
              throw MutationFailed("canonical key collision without isomorphism at " + key);
        }
      }
      auto ekey = std::minmax(id, other);
      if (seen_edges.insert({ekey.first, ekey.second}).second) {
        bool geq = order_geq(A, g.nodes[id], g.nodes[other]);
        bool leq = order_geq(A, g.nodes[other], g.nodes[id]);
        if (geq == leq)
          throw MutationFailed("mutation pair is not strictly comparable: " + g.nodes[id].key +
                               " / " + g.nodes[other].key);
        GraphEdge e;
        e.a = id;
        e.b = other;
        e.pos_a = k;
        e.a_greater = geq;
        g.edges.push_back(e);
      }
    }
    g.expanded[id] = true;
  }
  g.verdict = capped ? Verdict::BudgetExhausted : Verdict::Finite;
  return g;
}

PathStats longest_path_stats(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  if (g.verdict != Verdict::Finite)
    throw NotFinite("longest_path_stats requires a Finite exploration");
  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (const GraphEdge& e : g.edges) {
    int from = e.a_greater ? e.a : e.b;
    int to = e.a_greater ? e.b : e.a;
    succ[from].push_back(to);
    indeg[to]++;
  }
  // longest path from the stalk A node
  const std::string a_key = stalk_silting(A).key;
  int a_id = g.node_id(a_key);
  if (a_id < 0) throw NotFinite("stalk complex missing from a Finite graph");
  std::vector<int> topo;
  std::vector<int> indeg_work = indeg;
  std::deque<int> q;
  for (int i = 0; i < n; ++i)
    if (indeg_work[i] == 0) q.push_back(i);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    topo.push_back(v);
    for (int w : succ[v])
      if (--indeg_work[w] == 0) q.push_back(w);
  }
  if (static_cast<int>(topo.size()) != n)
    throw std::logic_error("Hasse quiver of a Finite graph has a cycle");
  std::vector<int> dist(n, -1);
  dist[a_id] = 0;
  for (int v : topo) {
    if (dist[v] < 0) continue;
    for (int w : succ[v]) dist[w] = std::max(dist[w], dist[v] + 1);
  }
  PathStats st;
  st.ell = *std::max_element(dist.begin(), dist.end());
  st.bound = 0;
  Int pw(1);
  for (int i = 0; i <= st.ell; ++i) {
    st.bound += pw;
    pw *= g.n;
  }
  st.bound_ok = Int(static_cast<long>(g.nodes.size())) <= st.bound;
  return st;
}

std::string hasse_dot(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  (void)A;
  std::vector<int> order(g.nodes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.nodes[a].key < g.nodes[b].key; });
  std::vector<int> rankof(g.nodes.size());
  for (size_t i = 0; i < order.size(); ++i) rankof[order[i]] = static_cast<int>(i);
  std::ostringstream os;
  os << "digraph hasse {\n";
  for (int idx : order)
    os << "  n" << rankof[idx] << " [label=\"" << g.nodes[idx].key << "\"];\n";
  std::vector<std::string> lines;
  for (const GraphEdge& e : g.edges) {
    int from = e.a_greater ? e.a : e.b;
    int to = e.a_greater ? e.b : e.a;
    std::ostringstream line;
    line << "  n" << rankof[from] << " -> n" << rankof[to] << " [label=\"" << e.pos_a << "\"];\n";
    lines.push_back(line.str());
  }
  std::sort(lines.begin(), lines.end());
  for (const std::string& l : lines) os << l;
  os << "}\n";
  return os.str();
}

}  // namespace tausilt

#include "tausilt/checks.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "json.hpp"
#include "tausilt/errors.hpp"
#include "tausilt/representation.hpp"

namespace tausilt {

namespace {

CheckResult pass(const std::string& name, const std::string& detail = "") {
  return CheckResult{name, true, detail};
}

CheckResult fail(const std::string& name, const std::string& detail) {
  return CheckResult{name, false, detail};
}

}  // namespace

CheckResult check_g_identities(const BoundQuiverAlgebra& A, const MutationGraph& g,
                               unsigned seed) {
  const char* name = "g-matrix-identities";
  const int n = A.num_vertices();
  std::vector<IntMatrix> gm, gminv;
  for (const SiltingObject& node : g.nodes) {
    IntMatrix G = node.g_matrix(A);
    IntMatrix Ginv;
    try {
      Ginv = int_inverse(G);
    } catch (const NotUnimodular& e) {
      return fail(name, "G-matrix of " + node.key + " not unimodular: " + e.what());
    }
    IntMatrix I = IntMatrix::identity(n);
    if (!(G * Ginv == I) || !(Ginv * G == I))
      return fail(name, "G(S,M) G(M,S) != 1 at " + node.key);
    gm.push_back(std::move(G));
    gminv.push_back(std::move(Ginv));
  }
  // transitivity G(S,L) = G(S,M) G(M,L) on sampled triples
  std::mt19937_64 rng(seed);
  const int m = static_cast<int>(g.nodes.size());
  const int trials = std::min(24, m * m);
  for (int t = 0; t < trials; ++t) {
    int im = static_cast<int>(rng() % m), il = static_cast<int>(rng() % m);
    IntMatrix gml = gminv[im] * gm[il];  // G(M,L) in the summand basis of M
    if (!(gm[im] * gml == gm[il]))
      return fail(name, "transitivity failed on a sampled triple");
  }
  return pass(name);
}

CheckResult check_sign_coherence(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  const char* name = "sign-coherence";
  const int n = A.num_vertices();
  for (const SiltingObject& node : g.nodes)
    for (int coord = 0; coord < n; ++coord) {
      bool pos = false, neg = false;
      for (const IntVec& gv : node.gvecs) {
        if (sgn(gv[coord]) > 0) pos = true;
        if (sgn(gv[coord]) < 0) neg = true;
      }
      if (pos && neg)
        return fail(name, "coordinate " + std::to_string(coord) + " of " + node.key +
                              " takes both signs");
    }
  return pass(name);
}

CheckResult check_mutation_involution(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  const char* name = "mutation-involution";
  for (const SiltingObject& node : g.nodes) {
    for (int k = 0; k < node.size(); ++k) {
      MutationResult first = mutate(A, node, k);
      // position of the new summand in the mutated object
      IntVec gY = g_vector(A, first.new_summand);
      int pos = -1;
      for (int i = 0; i < first.object.size(); ++i)
        if (first.object.gvecs[i] == gY) pos = i;
      MutationResult back = mutate(A, first.object, pos);
      if (back.object.key != node.key)
        return fail(name, "double mutation at " + node.key + " position " + std::to_string(k) +
                              " returned " + back.object.key);
    }
  }
  return pass(name);
}

CheckResult check_n_regular(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  const char* name = "n-regularity";
  std::vector<int> degree(g.nodes.size(), 0);
  for (const GraphEdge& e : g.edges) {
    degree[e.a]++;
    degree[e.b]++;
  }
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    if (!g.expanded[i]) continue;
    if (degree[i] != A.num_vertices())
      return fail(name, "node " + g.nodes[i].key + " has degree " + std::to_string(degree[i]));
  }
  // Finite graph: edge count is n |nodes| / 2
  if (g.verdict == Verdict::Finite) {
    long expected2 = static_cast<long>(A.num_vertices()) * static_cast<long>(g.nodes.size());
    if (2 * static_cast<long>(g.edges.size()) != expected2)
      return fail(name, "edge count " + std::to_string(g.edges.size()) + " != n|nodes|/2");
  }
  return pass(name);
}

CheckResult check_unique_source_sink(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  const char* name = "unique-source-sink";
  std::vector<int> indeg(g.nodes.size(), 0), outdeg(g.nodes.size(), 0);
  for (const GraphEdge& e : g.edges) {
    int from = e.a_greater ? e.a : e.b;
    int to = e.a_greater ? e.b : e.a;
    outdeg[from]++;
    indeg[to]++;
  }
  std::vector<int> sources, sinks;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    if (indeg[i] == 0) sources.push_back(static_cast<int>(i));
    if (outdeg[i] == 0) sinks.push_back(static_cast<int>(i));
  }
  const std::string a_key = stalk_silting(A).key;
  const std::string a1_key = shifted_stalk_silting(A).key;
  if (sources.size() != 1 || g.nodes[sources[0]].key != a_key)
    return fail(name, "unique source is not the stalk of A");
  if (sinks.size() != 1 || g.nodes[sinks[0]].key != a1_key)
    return fail(name, "unique sink is not A[1]");
  return pass(name);
}

CheckResult check_path_bound(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  const char* name = "path-length-bound";
  PathStats st = longest_path_stats(A, g);
  if (!st.bound_ok)
    return fail(name, "|nodes| exceeds 1 + n + ... + n^ell with ell = " + std::to_string(st.ell));
  return pass(name, "ell(A) = " + std::to_string(st.ell));
}

CheckResult check_h0_bridge(const BoundQuiverAlgebra& A, const MutationGraph& g, unsigned seed) {
  const char* name = "h0-tau-rigid-bridge";
  std::mt19937_64 rng(seed);
  for (const SiltingObject& node : g.nodes) {
    H0Pair pair = h0_pair(A, node.total(A));
    TauRigidResult tr = is_tau_rigid_pair(A, pair.module, pair.support);
    if (!tr.ok) return fail(name, "H0 pair of " + node.key + " not tau-rigid: " + tr.certificate);
    int m = count_indec_summands(A, pair.module, rng);
    int p = static_cast<int>(pair.support.size());
    if (m + p != A.num_vertices())
      return fail(name, "|M| + |P| = " + std::to_string(m) + " + " + std::to_string(p) +
                            " != n at " + node.key);
  }
  return pass(name);
}

CheckResult check_order_fac_agreement(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  const char* name = "order-fac-agreement";
  std::vector<Representation> h0;
  std::vector<TwoTermComplex> totals;
  for (const SiltingObject& node : g.nodes) {
    totals.push_back(node.total(A));
    h0.push_back(h0_pair(A, totals.back()).module);
  }
  for (size_t i = 0; i < g.nodes.size(); ++i)
    for (size_t j = 0; j < g.nodes.size(); ++j) {
      bool silt = order_geq(A, totals[i], totals[j]);
      bool fac = fac_contains(A, h0[i], h0[j]);
      if (silt != fac)
        return fail(name, "silting order and Fac order disagree on (" + g.nodes[i].key + ", " +
                              g.nodes[j].key + ")");
    }
  return pass(name);
}

CheckResult check_delta_pure_nonbranching(const SimplicialComplex& dc) {
  PurityReport rep = check_pure_nonbranching(dc);
  return rep.ok ? pass("delta-pure-nonbranching") : fail("delta-pure-nonbranching", rep.detail);
}

CheckResult check_euler(const BoundQuiverAlgebra& A, const SimplicialComplex& dc) {
  const char* name = "euler-characteristic";
  HomologyReport rep = euler_and_homology(dc);
  long expect = 1 + ((A.num_vertices() - 1) % 2 == 0 ? 1 : -1);
  if (rep.euler != expect)
    return fail(name, "chi = " + std::to_string(rep.euler) + ", expected " + std::to_string(expect));
  return pass(name, "chi = " + std::to_string(rep.euler));
}

CheckResult check_sphere_homology(const SimplicialComplex& dc) {
  const char* name = "sphere-homology";
  HomologyReport rep = euler_and_homology(dc);
  if (!rep.is_sphere) {
    std::ostringstream os;
    os << "reduced ranks:";
    for (long r : rep.reduced_ranks) os << " " << r;
    return fail(name, os.str());
  }
  return pass(name);
}

CheckResult check_shelling(const SimplicialComplex& dc, const MutationGraph& g) {
  const char* name = "shelling";
  if (dc.n < 2) return pass(name, "skipped: dimension 0 complex");
  ShellingReport rep = shelling_from_order(dc, g);
  return rep.ok ? pass(name) : fail(name, rep.witness);
}

CheckResult check_rank2(const SimplicialComplex& dc) {
  Rank2Report rep = rank2_cycle_check(dc);
  return rep.ok ? pass("rank2-cycle-span",
                       "cycle rank " + std::to_string(rep.cycle_rank))
                : fail("rank2-cycle-span", rep.detail);
}

CheckResult check_cone_intersections(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  const char* name = "cone-intersections";
  for (size_t i = 0; i < g.nodes.size(); ++i)
    for (size_t j = i + 1; j < g.nodes.size(); ++j) {
      ConeIntersectionReport rep = cone_intersection_check(A, g.nodes[i], g.nodes[j]);
      if (!rep.ok)
        return fail(name, "pair (" + g.nodes[i].key + ", " + g.nodes[j].key + "): " + rep.witness);
    }
  return pass(name);
}

CheckResult check_fan_coverage(const BoundQuiverAlgebra& A, const MutationGraph& g, int samples,
                               unsigned seed) {
  CoverageReport rep = fan_coverage_sample(A, g, samples, seed);
  return rep.ok ? pass("fan-coverage", std::to_string(samples) + " samples covered")
                : fail("fan-coverage", rep.detail);
}

CheckResult check_order_cone_chain(const BoundQuiverAlgebra& A, const MutationGraph& g) {
  const char* name = "order-cone-chain";
  int witness_negative = 0;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    for (size_t j = 0; j < g.nodes.size(); ++j) {
      OrderConeProbe probe = order_cone_probe(A, g.nodes[i], g.nodes[j]);
      if (!probe.chain_ok)
        return fail(name, "implication chain violated on (" + g.nodes[i].key + ", " +
                              g.nodes[j].key + ")");
      if (probe.cond3 && (!probe.witness1 || !probe.witness5)) ++witness_negative;
    }
  std::string detail = witness_negative == 0
                           ? "all conjecture converses witnessed"
                           : std::to_string(witness_negative) + " ordered pairs witness-negative";
  return pass(name, detail);
}

std::vector<CheckResult> finite_check_suite(const BoundQuiverAlgebra& A, const MutationGraph& g,
                                            int samples, unsigned seed) {
  std::vector<CheckResult> out;
  out.push_back(check_g_identities(A, g, seed));
  out.push_back(check_sign_coherence(A, g));
  out.push_back(check_mutation_involution(A, g));
  out.push_back(check_n_regular(A, g));
  out.push_back(check_unique_source_sink(A, g));
  out.push_back(check_path_bound(A, g));
  out.push_back(check_h0_bridge(A, g, seed));
  out.push_back(check_order_fac_agreement(A, g));
  SimplicialComplex dc = build_delta(A, g);
  out.push_back(check_delta_pure_nonbranching(dc));
  out.push_back(check_euler(A, dc));
  out.push_back(check_sphere_homology(dc));
  out.push_back(check_shelling(dc, g));
  out.push_back(check_rank2(dc));
  out.push_back(check_cone_intersections(A, g));
  out.push_back(check_fan_coverage(A, g, samples, seed));
  out.push_back(check_order_cone_chain(A, g));
  return out;
}

bool RunReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

RunReport run_report(const BoundQuiverAlgebra& A, const std::string& name, long budget,
                     int samples, unsigned seed) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  r.algebra_name = name;
  r.dim = A.dim();
  r.n = A.num_vertices();
  r.nilpotency = A.nilpotency();
  MutationGraph g = explore(A, StartObject::Algebra, budget);
  r.verdict = g.verdict == Verdict::Finite ? "finite" : "budget-exhausted";
  r.nodes = static_cast<int>(g.nodes.size());
  r.edges = static_cast<int>(g.edges.size());
  if (g.verdict == Verdict::Finite) {
    r.ell = longest_path_stats(A, g).ell;
    SimplicialComplex dc = build_delta(A, g);
    r.delta_vertices = static_cast<int>(dc.vertex_g.size());
    r.delta_max_faces = static_cast<long>(dc.max_faces.size());
    // codim-1 face count: each lies in exactly two max faces when the
    // pseudomanifold check passes, so count via incidence
    long codim1 = 0;
    {
      std::map<std::vector<int>, int> seen;
      for (const std::vector<int>& f : dc.max_faces)
        for (size_t drop = 0; drop < f.size(); ++drop) {
          std::vector<int> sub;
          for (size_t t = 0; t < f.size(); ++t)
            if (t != drop) sub.push_back(f[t]);
          seen[sub]++;
        }
      codim1 = static_cast<long>(seen.size());
    }
    r.delta_codim1 = codim1;
    HomologyReport hom = euler_and_homology(dc);
    r.euler = hom.euler;
    std::ostringstream os;
    for (int d = 0; d < dc.n; ++d) {
      if (d) os << ", ";
      if (hom.reduced_ranks[d] == 0 && hom.torsion[d].empty())
        os << "0";
      else {
        os << "Z^" << hom.reduced_ranks[d];
        for (const Int& t : hom.torsion[d]) os << "+Z/" << t.get_str();
      }
    }
    r.homology = os.str();
    r.checks = finite_check_suite(A, g, samples, seed);
  }
  auto t1 = std::chrono::steady_clock::now();
  r.seconds = std::chrono::duration<double>(t1 - t0).count();
  return r;
}

std::string report_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["format"] = "tausilt-report";
  j["algebra"] = r.algebra_name;
  j["dim"] = r.dim;
  j["n"] = r.n;
  j["nilpotency"] = r.nilpotency;
  j["verdict"] = r.verdict;
  j["nodes"] = r.nodes;
  j["edges"] = r.edges;
  j["ell"] = r.ell;
  j["delta"] = {{"vertices", r.delta_vertices},
                {"max_faces", r.delta_max_faces},
                {"codim1_faces", r.delta_codim1},
                {"euler", r.euler},
                {"reduced_homology", r.homology}};
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  j["seconds"] = r.seconds;
  return j.dump(2) + "\n";
}

std::string report_text(const RunReport& r) {
  std::ostringstream os;
  os << "algebra " << r.algebra_name << ": dim " << r.dim << ", " << r.n
     << " simples, nilpotency " << r.nilpotency << "\n";
  os << "verdict: " << r.verdict << ", " << r.nodes << " nodes, " << r.edges << " edges";
  if (r.ell >= 0) os << ", ell(A) = " << r.ell;
  os << "\n";
  if (r.delta_vertices >= 0) {
    os << "Delta: " << r.delta_vertices << " vertices, " << r.delta_max_faces << " max faces, "
       << r.delta_codim1 << " codim-1 faces, chi = " << r.euler << ", reduced homology ("
       << r.homology << ")\n";
  }
  for (const CheckResult& c : r.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << " - " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace tausilt

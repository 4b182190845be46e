#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tausilt/delta.hpp"
#include "tausilt/explorer.hpp"

namespace tausilt {

// The algebra-spec document: a quiver with admissible relations, exactly as
// ingested from JSON. Rational coefficients stay strings ("p/q") until parse.
struct AlgebraSpec {
  struct ArrowSpec {
    std::string name, from, to;
  };
  struct TermSpec {
    std::string coeff;
    std::vector<std::string> path;
  };
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<std::vector<TermSpec>> relations;
  std::optional<int> max_path_length;
};

// Strict parse: unknown keys and duplicate or unresolved names are rejected
// with field diagnostics.
AlgebraSpec parse_spec(const std::string& text);

std::vector<std::string> bundled_example_names();
AlgebraSpec bundled_example(const std::string& name);  // throws ParseError

BoundQuiverAlgebra algebra_from_spec(const AlgebraSpec& spec, unsigned seed = 0);

std::string spec_to_json(const AlgebraSpec& spec);

// Deterministic JSON dumps (nodes sorted by canonical key, byte-stable).
std::string graph_json(const BoundQuiverAlgebra& A, const MutationGraph& g);
std::string delta_json(const BoundQuiverAlgebra& A, const SimplicialComplex& dc);
std::string fan_json(const BoundQuiverAlgebra& A, const MutationGraph& g);

// Canonical keys recomputed from a graph dump's g_matrix arrays (round-trip
// support).
std::vector<std::string> keys_from_graph_json(const std::string& text);

}  // namespace tausilt

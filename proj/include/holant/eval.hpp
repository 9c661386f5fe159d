#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holant/grid.hpp"
#include "holant/poly.hpp"

namespace holant {

/// counts[i][j] is the number of vertex assignments with sigma(v0) = 0 that put
/// i edges on 00 and j edges on 11. Complements fill in the other half.
struct EdgeHistogram {
  int edge_count = 0;
  int vertex_count = 0;
  std::vector<std::vector<std::uint64_t>> counts;
};

/// Gray-code enumeration over vertex assignments with vertex 0 fixed to 0.
/// jobs > 1 splits the work by fixing the highest free vertices; the result
/// does not depend on jobs.
EdgeHistogram edge_histogram(const EdgeLabeledGraph& g, unsigned jobs = 1);

/// Exact Holant of g with edge signature sig = [x, y, z] (arity 2).
Cyc12 holant_eval_graph(const EdgeLabeledGraph& g, const SymSignature& sig, unsigned jobs = 1);

/// Holant of a grid with no dangling edges; UnfilledSlot if a SLOT remains.
Cyc12 holant_eval_grid(const SignatureGrid& grid);

struct SymmetrizedPolynomial {
  MPoly P;  // in X and Y
  int source_edge_count = 0;
  int source_vertex_count = 0;
};

/// P(X, Y) with P(ab, a^3 + b^3) = Holant(g, [a, 1, b]). Requires a 3-regular
/// graph; a pair with i != j (mod 3) raises Mod3ViolationAnomaly.
SymmetrizedPolynomial symmetrize(const EdgeLabeledGraph& g, unsigned jobs = 1);

/// q_0 = 2, q_1 = Y, q_{k+1} = Y q_k - X^3 q_{k-1}; q_k = a^{3k} + b^{3k}.
std::vector<MPoly> power_sum_sequence(int count);

struct NormalizedSignature {
  bool monochrome = false;  // y = 0
  Cyc12 a;                  // x / y
  Cyc12 b;                  // z / y
  Cyc12 scale_base;         // y; Holant[x,y,z] = y^|E| * Holant[a,1,b]
};

NormalizedSignature normalize_signature(const SymSignature& sig);

enum class TractableCase {
  Degenerate,   // X = 1
  Bipartite,    // X = Y = 0
  Monochrome,   // y = 0
  MinusOne,     // X = -1, Y in {0, 2i, -2i}
};

std::string to_string(TractableCase c);

/// Which tractable family (a, b) falls in, if any. Monochrome is never returned
/// here because it concerns unnormalized signatures.
std::optional<TractableCase> tractable_case(const Cyc12& a, const Cyc12& b);

/// Polynomial-time value for the given case; sig is [x, y, z]. Throws
/// CaseMismatch when sig is outside the case and NoPolyTimeAlgorithmInScope for
/// MinusOne.
Cyc12 solve_tractable(const EdgeLabeledGraph& g, TractableCase c, const SymSignature& sig);
Cyc12 solve_tractable(const EdgeLabeledGraph& g, TractableCase c, const Cyc12& a, const Cyc12& b);

struct EvalReport {
  Cyc12 value;
  std::string method;
};

/// Uses a tractable solver when one applies and brute force otherwise.
EvalReport auto_eval(const EdgeLabeledGraph& g, const SymSignature& sig, unsigned jobs = 1);

}  // namespace holant

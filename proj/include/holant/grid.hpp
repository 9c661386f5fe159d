#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "holant/cyclo.hpp"
#include "holant/linalg.hpp"

namespace holant {

/// Multigraph on vertices 0..vertex_count-1. Self-loops count twice toward degree.
struct EdgeLabeledGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
  bool is_three_regular() const;
  /// Throws NotThreeRegular naming the first offending vertex.
  void require_three_regular() const;
  /// Connected components as vertex lists, in order of smallest vertex.
  std::vector<std::vector<int>> components() const;
};

/// Disjoint union; the vertices of rhs are shifted past those of lhs.
EdgeLabeledGraph disjoint_union(const EdgeLabeledGraph& lhs, const EdgeLabeledGraph& rhs);

/// Symmetric signature [g_0, ..., g_k]; values[w] is the value at Hamming weight w.
struct SymSignature {
  std::vector<Cyc12> values;

  SymSignature() = default;
  explicit SymSignature(std::vector<Cyc12> v) : values(std::move(v)) {}
  SymSignature(std::initializer_list<Cyc12> v) : values(v) {}

  int arity() const { return static_cast<int>(values.size()) - 1; }
  const Cyc12& operator[](int w) const { return values[static_cast<std::size_t>(w)]; }

  friend bool operator==(const SymSignature&, const SymSignature&) = default;
};

/// Parses "[lit, lit, ...]" with scalar literals from the cyclo grammar.
SymSignature parse_signature(std::string_view text);
std::string to_string(const SymSignature& sig);

enum class Side : std::uint8_t { Generator, Recognizer };

struct GridVertex {
  /// nullopt marks an arity-1 SLOT generator awaiting a unary signature.
  std::optional<SymSignature> sig;

  bool is_slot() const { return !sig.has_value(); }
  int arity() const { return sig ? sig->arity() : 1; }
};

struct GridEdge {
  int gen = 0;
  int gen_port = 0;
  int rec = 0;
  int rec_port = 0;
};

struct DanglingEdge {
  Side side = Side::Generator;
  int vertex = 0;
  int port = 0;
};

/// Bipartite generator/recognizer instance with optional dangling edges. Dangling
/// edges on the recognizer side are inputs, those on the generator side outputs.
struct SignatureGrid {
  std::vector<GridVertex> generators;
  std::vector<GridVertex> recognizers;
  std::vector<GridEdge> edges;
  std::vector<DanglingEdge> dangling;

  /// Checks port usage and arities; throws ArityMismatch or DanglingPort.
  void validate() const;
  int slot_count() const;
  std::vector<int> input_indices() const;
  std::vector<int> output_indices() const;
};

/// Dense tensor over dangling-edge assignments. The assignment string
/// d_0 d_1 ... d_{q-1} (declaration order) is read as a binary number with d_0
/// the most significant bit.
struct FullTensor {
  int dangling_count = 0;
  std::vector<Cyc12> values;

  const Cyc12& at(const std::vector<int>& bits) const;
};

using Instance = std::variant<EdgeLabeledGraph, SignatureGrid>;

/// Dispatches on "type". Errors: MalformedDocument, DanglingPort, ArityMismatch,
/// NonBipartite, Syntax/ZeroDenominator from signature literals.
Instance parse_instance(const nlohmann::json& doc);
EdgeLabeledGraph parse_graph(const nlohmann::json& doc);
SignatureGrid parse_grid(const nlohmann::json& doc);
nlohmann::json to_json(const EdgeLabeledGraph& g);
nlohmann::json to_json(const SignatureGrid& grid);
/// Reads and parses a JSON file; unreadable or ill-formed input is MalformedDocument.
nlohmann::json read_json_file(const std::string& path);

/// Each edge becomes a degree-2 generator carrying edge_sig, each vertex a
/// recognizer carrying vertex_sig. Internal edges are listed recognizer by
/// recognizer.
SignatureGrid graph_to_grid(const EdgeLabeledGraph& g, const SymSignature& edge_sig,
                            const SymSignature& vertex_sig);

/// Sum over all internal-edge assignments for every dangling assignment.
FullTensor fgate_signature(const SignatureGrid& gate);

/// Symmetric signature of a tensor, or NotSymmetric naming two assignments of
/// equal weight with different values.
SymSignature symmetric_project(const FullTensor& t);

/// (outputs+1) x (inputs+1) matrix acting on symmetric signature vectors.
CycMatrix transfer_matrix(const SignatureGrid& gate);

/// Joins the outputs of inner to the inputs of outer, in declaration order.
SignatureGrid compose_gates(const SignatureGrid& outer, const SignatureGrid& inner);

/// Replaces every SLOT by the given unary signature.
SignatureGrid fill_slots(const SignatureGrid& grid, const SymSignature& unary);

/// Holant of a closed grid; throws UnfilledSlot when a SLOT remains.
Cyc12 contract_closed(const SignatureGrid& grid);

}  // namespace holant

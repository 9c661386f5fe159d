#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holant/grid.hpp"
#include "holant/linalg.hpp"

namespace holant {

enum class GadgetKind { BinaryRecursive, UnaryRecursive, Finisher, Starter, Special };

std::string to_string(GadgetKind k);

struct GadgetEntry {
  std::string id;
  GadgetKind kind;
  PolyMatrix matrix;  // entries in a, b
};

/// Ids "4".."16", "F", "s" and "abEqual" (alias "vc2x2"); "M4" style aliases are
/// accepted. Gadgets 1-3 have no published matrix and raise UnknownGadget.
const GadgetEntry& builtin_matrix(std::string_view id);
std::vector<std::string> builtin_ids();

/// Characteristic-polynomial data of the binary recursive gadgets 4, 7, 8, 9,
/// all in X and Y: det(xI - M) = x^3 + B x^2 + C x + D, and the starter
/// determinant det[s, Ms, M^2 s] = (X-1)^k (b^3 - a^3) h.
struct RealCaseGadget {
  int id;
  MPoly B, C, D;
  unsigned starter_power;  // k above
  MPoly h;
};

const std::vector<RealCaseGadget>& real_case_gadgets();

/// R = (Y+2)^2 - 4(X-1)^2(X+1).
MPoly resilient_curve();

struct IdentityRecord {
  std::string name;
  std::string anchor;
  std::string statement;
  bool passed = false;
  std::string lhs;  // canonical forms, filled in on failure
  std::string rhs;
};

std::vector<IdentityRecord> verify_identity_suite();

/// Report line: name, anchor, PASS/FAIL, and on failure both sides.
std::string format_record(const IdentityRecord& r);

struct FinisherSet {
  Cyc12 a, b;             // effective parameters (swapped so that b = 0 on the ab = 0 branch)
  bool swapped = false;
  bool zero_branch = false;  // {F, FM4, FM5} instead of {F, FM4, FM4^2}
  std::array<std::string, 3> labels;
  std::array<CycMatrix, 3> finishers;
  std::array<CycVector, 3> normals;  // cross products of the two rows
  Cyc12 normal_det;                  // det[normals]; nonzero means trivial intersection
  Cyc12 region_value;                // (ab-1)(a^3-b^3) at the input point
};

/// InvalidRegion when ab = 1 or a^3 = b^3.
FinisherSet finisher_set(const Cyc12& a, const Cyc12& b);

struct StarterSet {
  std::array<std::string, 3> labels;  // Fs, FM4s, FM6s
  std::array<CycVector, 3> vectors;
  /// det[FM4s|Fs], det[FM6s|Fs], det[FM4s|FM6s]
  std::array<Cyc12, 3> pair_dets;
};

StarterSet starter_set(const Cyc12& a, const Cyc12& b);

struct UnaryParameter {
  std::string name;  // theta, gamma, rho
  std::vector<Cyc12> values;
};

struct VcSimulationStep {
  int case_tag = 0;            // 1: ab not in {0,-1}; 2: ab = 0; 3: ab = -1
  std::string gadget;          // "1", "2" or "3"; topology not published
  Cyc12 a, b;                  // parameters this step is applied at (after any swap)
  bool swapped = false;
  std::vector<UnaryParameter> unaries;
  SymSignature claimed_output;  // claimed signature, not recomputed
  std::vector<std::pair<std::string, Cyc12>> denominators;  // all nonzero
  std::optional<std::pair<Cyc12, Cyc12>> next_point;       // where the chain continues
};

/// InvalidRegion when ab = 1 or (a, b) = (0, 0).
VcSimulationStep vc_simulation_params(const Cyc12& a, const Cyc12& b);
/// Follows next_point until case 1 is reached.
std::vector<VcSimulationStep> vc_simulation_chain(const Cyc12& a, const Cyc12& b);

/// (omega^2 a, omega b); NotCubeRoot unless omega^3 = 1.
std::pair<Cyc12, Cyc12> holographic_diag_transform(const Cyc12& a, const Cyc12& b, const Cyc12& omega);

/// Evaluates a catalogue matrix at (a, b).
CycMatrix evaluate_gadget(std::string_view id, const Cyc12& a, const Cyc12& b);

}  // namespace holant

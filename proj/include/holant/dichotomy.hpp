#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "holant/catalog.hpp"
#include "holant/eval.hpp"

namespace holant {

struct Coordinates {
  Cyc12 a, b;
  Cyc12 X;  // ab
  Cyc12 Y;  // a^3 + b^3
  Cyc12 Z;  // (Y/2)^2

  static Coordinates of(const Cyc12& a, const Cyc12& b);
};

enum class Verdict { Tractable, PlanarTractableGeneralHard, Hard };
std::string to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::Hard;
  std::optional<TractableCase> tractable;  // Degenerate, Bipartite or MinusOne
  int case_number = 0;                     // 1, 2, 3 for the tractable cases
  std::string citation;
  bool planar_requested = false;
};

Classification classify(const Cyc12& a, const Cyc12& b, bool planar);

/// The same classification phrased in X and Z = (Y/2)^2.
Verdict classify_xz(const Cyc12& X, const Cyc12& Z, bool planar);

/// Both phrasings agree at (a, b), with and without the planar restriction.
bool coordinates_equivalence_check(const Cyc12& a, const Cyc12& b);

enum class NormKind { Distinct2x2, Distinct3x3, EspDisjunctive, Inconclusive };
std::string to_string(NormKind k);

struct NormCertificate {
  NormKind kind = NormKind::Inconclusive;
  Cyc12 lhs;
  Cyc12 rhs;
  std::vector<std::string> gadgets;
  bool zero_eigenvalue = false;
  std::string note;

  bool conclusive() const { return kind != NormKind::Inconclusive; }
};

/// tr^2 conj(det) versus conj(tr)^2 det.
NormCertificate distinct_norm_2x2(const Cyc12& tr, const Cyc12& det);
/// C C conj(C) versus conj(B) B conj(B) D for x^3 + B x^2 + C x + D.
NormCertificate distinct_norm_3x3(const Cyc12& B, const Cyc12& C, const Cyc12& D);
/// At least one of M and M + delta I has eigenvalues of distinct norm when
/// tr/delta or det/delta^2 is not real. PreconditionViolation if delta,
/// det(M), det(M + delta I) or the discriminant vanishes.
NormCertificate esp_disjunctive(const CycMatrix& M, const Cyc12& delta);

/// One exact comparison; outcome is lhs != rhs.
struct CheckRecord {
  std::string step;
  std::string gadget;
  Cyc12 lhs;
  Cyc12 rhs;
  bool outcome = false;
};

enum class TerminalKind { BinaryReal, UnaryDistinct, EspDisjunctive, EqualCubes, Citation, Anomaly };
std::string to_string(TerminalKind k);

struct WitnessTerminal {
  TerminalKind kind = TerminalKind::Anomaly;
  std::vector<std::string> gadgets;
  NormCertificate norm;
  std::optional<FinisherSet> finishers;
  std::optional<StarterSet> starters;
  std::vector<VcSimulationStep> vc_chain;
  std::optional<std::pair<Cyc12, Cyc12>> transformed_point;  // equal-cubes path
  std::string detail;
};

struct HardnessWitness {
  Coordinates point;
  Classification classification;
  std::vector<CheckRecord> trail;
  WitnessTerminal terminal;
  std::vector<std::string> citations;

  bool anomaly() const { return terminal.kind == TerminalKind::Anomaly; }
};

/// Throws NotHard at tractable points, and at 4X^3 = Y^2 when planar is set.
HardnessWitness hardness_witness(const Cyc12& a, const Cyc12& b, bool planar = false);

/// Recomputes every trail entry and attachment from (a, b) along an independent
/// route (concrete matrices rather than the X, Y tables). Returns the list of
/// discrepancies; empty means the witness re-verifies.
std::vector<std::string> verify_witness(const HardnessWitness& w);

nlohmann::json to_json(const HardnessWitness& w);
nlohmann::json to_json(const Classification& c, const Coordinates& p);

struct ScanCounterexample {
  Rat X, Y;
};

struct RealScanReport {
  Rat x_lo, x_hi, y_lo, y_hi, step;
  std::size_t points = 0;
  std::size_t excluded_degenerate = 0;    // X = 1
  std::size_t excluded_equal_cubes = 0;   // 4X^3 = Y^2
  std::size_t cited = 0;                  // (0, -1)
  std::size_t excluded_tractable = 0;     // (-1, 0)
  std::size_t verified = 0;
  std::array<std::size_t, 4> first_gadget_counts{};  // index into real_case_gadgets()
  std::vector<ScanCounterexample> counterexamples;
};

/// Checks that some j in {4, 7, 8, 9} has D (B^3 D - C^3) h != 0 at every grid
/// point outside the excluded loci.
RealScanReport real_disjunction_scan(const Rat& x_lo, const Rat& x_hi, const Rat& y_lo, const Rat& y_hi,
                                     const Rat& step, unsigned jobs = 1);

/// Index of the first real-case gadget that works at (X, Y), if any.
std::optional<std::size_t> real_case_gadget_at(const Rat& X, const Rat& Y);

nlohmann::json to_json(const RealScanReport& r);

}  // namespace holant

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "holant/grid.hpp"
#include "holant/linalg.hpp"

namespace holant {

/// v_k = F M^k s (binary mode, three finishers) or v_k = M^k s (unary mode,
/// no finishers). bound = 0 means the default (n+2)^3 + 1 iterations.
struct IterationFamily {
  CycMatrix M;
  CycVector s;
  std::vector<CycMatrix> finishers;
  std::size_t bound = 0;

  bool binary_mode() const { return !finishers.empty(); }
};

struct InterpolationPlan {
  std::optional<int> finisher;          // index into IterationFamily::finishers
  std::vector<std::size_t> indices;     // k_0 < ... < k_n
  std::vector<CycVector> points;        // v_k as [X_k, Y_k]
  std::vector<Cyc12> ratios;            // X_k / Y_k, pairwise distinct
};

/// Throws SelectionFailure when no finisher yields n+1 pairwise independent
/// points with nonzero second coordinate within the bound, and
/// PreconditionViolation when det(M) = 0, s = 0 or the shapes disagree.
InterpolationPlan select_independent(const IterationFamily& fam, std::size_t n);

/// c_0..c_n with values_k = sum_i c_i X_k^i Y_k^(n-i). One point may have
/// Y_k = 0; anything that makes the system singular raises SingularSystem.
std::vector<Cyc12> vandermonde_solve(const std::vector<CycVector>& points, const std::vector<Cyc12>& values,
                                     std::size_t n);

struct InterpolationReport {
  InterpolationPlan plan;
  std::vector<Cyc12> oracle_values;  // Holant with every SLOT set to v_k, for each selected k
  std::vector<Cyc12> coefficients;   // c_i multiplies x^i y^(n-i), i = SLOT edges assigned 0
  Cyc12 interpolated;
};

/// Recovers Holant(grid with SLOTs = target) using only the unary signatures v_k.
InterpolationReport run_unary_reduction(const SignatureGrid& grid, const SymSignature& target,
                                        const IterationFamily& fam);
Cyc12 interpolate_unary_reduction(const SignatureGrid& grid, const SymSignature& target, const IterationFamily& fam);

/// Sum_i c_i x^i y^(n-i).
Cyc12 evaluate_homogeneous(const std::vector<Cyc12>& coefficients, const Cyc12& x, const Cyc12& y);

/// Sufficient test that the two eigenvalues of a 2x2 matrix with this trace and
/// (nonzero) determinant have different absolute values: tr^2/det is not real.
bool eigenvalue_norms_differ_2x2(const Cyc12& trace, const Cyc12& det);

struct UnaryFamilyCheck {
  bool certified = false;
  bool det_nonzero = false;
  bool distinct_norm = false;
  bool not_eigenvector = false;
  Cyc12 det;
  Cyc12 lhs;  // tr^2 conj(det)
  Cyc12 rhs;  // conj(tr)^2 det
  Cyc12 eigen_test;  // det[s, Ms]
  std::string reason;  // failing checks joined by "; ", empty when certified
};

UnaryFamilyCheck unary_family_check(const CycMatrix& M, const CycVector& s);

}  // namespace holant

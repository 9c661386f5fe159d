#include "holant/interp.hpp"

#include "holant/errors.hpp"
#include "holant/eval.hpp"

namespace holant {
namespace {

bool is_zero_vector(const CycVector& v) { return is_zero_matrix(v); }

void check_family(const IterationFamily& fam) {
  if (fam.M.rows() != fam.M.cols() || fam.M.rows() == 0)
    throw Error(ErrorKind::PreconditionViolation, "iteration matrix must be square");
  if (fam.s.size() != fam.M.rows())
    throw Error(ErrorKind::PreconditionViolation, "starter vector length does not match the iteration matrix");
  if (fam.binary_mode()) {
    if (fam.finishers.size() != 3) throw Error(ErrorKind::PreconditionViolation, "binary mode needs three finishers");
    for (const CycMatrix& f : fam.finishers)
      if (f.rows() != 2 || f.cols() != fam.M.rows())
        throw Error(ErrorKind::PreconditionViolation, "finishers must be 2 x " + std::to_string(fam.M.rows()));
  } else if (fam.M.rows() != 2) {
    throw Error(ErrorKind::PreconditionViolation, "unary mode needs a 2x2 iteration matrix");
  }
  if (cofactor_determinant(fam.M).is_zero()) throw Error(ErrorKind::PreconditionViolation, "det(M) = 0");
  if (is_zero_vector(fam.s)) throw Error(ErrorKind::PreconditionViolation, "starter vector is zero");
}

// Monomial coefficients of the polynomial through (r_k, w_k), via Newton's
// divided differences.
std::vector<Cyc12> interpolate_monomial(const std::vector<Cyc12>& r, std::vector<Cyc12> w) {
  const std::size_t m = r.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (r[i] == r[j]) throw Error(ErrorKind::SingularSystem, "two points share the ratio " + to_string(r[i]));
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t k = m - 1; k >= level; --k) w[k] = (w[k] - w[k - 1]) / (r[k] - r[k - level]);
  std::vector<Cyc12> poly{w[m - 1]};
  for (std::size_t j = m - 1; j-- > 0;) {
    std::vector<Cyc12> next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * r[j];
    }
    next[0] += w[j];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

bool eigenvalue_norms_differ_2x2(const Cyc12& trace, const Cyc12& det) {
  return trace * trace * conj(det) != conj(trace) * conj(trace) * det;
}

Cyc12 evaluate_homogeneous(const std::vector<Cyc12>& coefficients, const Cyc12& x, const Cyc12& y) {
  const unsigned long n = coefficients.empty() ? 0 : coefficients.size() - 1;
  Cyc12 total;
  for (unsigned long i = 0; i <= n && i < coefficients.size(); ++i)
    total += coefficients[i] * x.pow(i) * y.pow(n - i);
  return total;
}

std::vector<Cyc12> vandermonde_solve(const std::vector<CycVector>& points, const std::vector<Cyc12>& values,
                                     std::size_t n) {
  if (points.size() != n + 1 || values.size() != n + 1)
    throw Error(ErrorKind::PreconditionViolation, "need exactly " + std::to_string(n + 1) + " points and values");
  std::optional<std::size_t> flat;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].size() != 2) throw Error(ErrorKind::PreconditionViolation, "points must have two coordinates");
    if (!points[k](1).is_zero()) continue;
    if (points[k](0).is_zero()) throw Error(ErrorKind::SingularSystem, "zero point");
    if (flat) throw Error(ErrorKind::SingularSystem, "two points with zero second coordinate");
    flat = k;
  }

  if (flat) {
    // values_z = c_n X_z^n; the rest carries a common factor Y_k.
    const Cyc12 cn = values[*flat] / points[*flat](0).pow(n);
    std::vector<CycVector> rest_points;
    std::vector<Cyc12> rest_values;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (k == *flat) continue;
      rest_points.push_back(points[k]);
      rest_values.push_back((values[k] - cn * points[k](0).pow(n)) / points[k](1));
    }
    std::vector<Cyc12> c = n == 0 ? std::vector<Cyc12>{} : vandermonde_solve(rest_points, rest_values, n - 1);
    c.push_back(cn);
    return c;
  }

  std::vector<Cyc12> ratios, scaled;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Cyc12 inv_y = points[k](1).inverse();
    ratios.push_back(points[k](0) * inv_y);
    scaled.push_back(values[k] * inv_y.pow(n));
  }
  return interpolate_monomial(ratios, std::move(scaled));
}

InterpolationPlan select_independent(const IterationFamily& fam, std::size_t n) {
  check_family(fam);
  const std::size_t bound = fam.bound != 0 ? fam.bound : (n + 2) * (n + 2) * (n + 2) + 1;
  const std::size_t wanted = n + 1;

  std::vector<CycVector> orbit{fam.s};  // M^k s, extended on demand
  auto orbit_at = [&](std::size_t k) -> const CycVector& {
    while (orbit.size() <= k) orbit.push_back(fam.M * orbit.back());
    return orbit[k];
  };

  const std::size_t candidates = fam.binary_mode() ? fam.finishers.size() : 1;
  std::size_t best = 0;
  for (std::size_t j = 0; j < candidates; ++j) {
    InterpolationPlan plan;
    if (fam.binary_mode()) plan.finisher = static_cast<int>(j);
    std::vector<CycVector> classes;
    for (std::size_t k = 0; k < bound && plan.indices.size() < wanted; ++k) {
      const CycVector v = fam.binary_mode() ? CycVector(fam.finishers[j] * orbit_at(k)) : orbit_at(k);
      if (is_zero_vector(v)) continue;
      bool seen = false;
      for (const CycVector& c : classes)
        if (det2(v, c).is_zero()) {
          seen = true;
          break;
        }
      if (seen) continue;
      classes.push_back(v);
      if (v(1).is_zero()) continue;
      plan.indices.push_back(k);
      plan.ratios.push_back(v(0) / v(1));
      plan.points.push_back(v);
    }
    if (plan.indices.size() == wanted) return plan;
    best = std::max(best, plan.indices.size());
  }
  throw Error(ErrorKind::SelectionFailure,
              "best " + std::string(fam.binary_mode() ? "finisher" : "family") + " reached " + std::to_string(best) +
                  " of " + std::to_string(wanted) + " pairwise independent points within " + std::to_string(bound) +
                  " iterations");
}

InterpolationReport run_unary_reduction(const SignatureGrid& grid, const SymSignature& target,
                                        const IterationFamily& fam) {
  if (target.arity() != 1) throw Error(ErrorKind::ArityMismatch, "target must be a unary signature [x, y]");
  const auto n = static_cast<std::size_t>(grid.slot_count());
  InterpolationReport report;
  report.plan = select_independent(fam, n);
  for (const CycVector& v : report.plan.points)
    report.oracle_values.push_back(contract_closed(fill_slots(grid, SymSignature{v(0), v(1)})));
  report.coefficients = vandermonde_solve(report.plan.points, report.oracle_values, n);
  report.interpolated = evaluate_homogeneous(report.coefficients, target[0], target[1]);
  return report;
}

Cyc12 interpolate_unary_reduction(const SignatureGrid& grid, const SymSignature& target, const IterationFamily& fam) {
  return run_unary_reduction(grid, target, fam).interpolated;
}

UnaryFamilyCheck unary_family_check(const CycMatrix& M, const CycVector& s) {
  if (M.rows() != 2 || M.cols() != 2 || s.size() != 2)
    throw Error(ErrorKind::PreconditionViolation, "unary family check needs a 2x2 matrix and a 2-vector");
  UnaryFamilyCheck out;
  const Cyc12 tr = matrix_trace(M);
  out.det = cofactor_determinant(M);
  out.lhs = tr * tr * conj(out.det);
  out.rhs = conj(tr) * conj(tr) * out.det;
  out.eigen_test = det2(s, CycVector(M * s));
  out.det_nonzero = !out.det.is_zero();
  out.distinct_norm = out.det_nonzero && out.lhs != out.rhs;
  out.not_eigenvector = !out.eigen_test.is_zero();
  auto note = [&](const char* why) { out.reason += (out.reason.empty() ? "" : "; ") + std::string(why); };
  if (!out.det_nonzero) note("det(M) = 0");
  if (out.det_nonzero && !out.distinct_norm) note("tr^2 conj(det) equals conj(tr)^2 det, eigenvalue norms may coincide");
  if (!out.not_eigenvector) note("s is an eigenvector of M");
  out.certified = out.reason.empty();
  return out;
}

}  // namespace holant

#include "holant/dichotomy.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "holant/errors.hpp"

namespace holant {
namespace {

using nlohmann::json;

const char* const kCiteVertexCover = "counting vertex covers in 3-regular graphs is #P-hard";
const char* const kCiteZeroMinusOne = "Hol(0,-1) is #P-hard (known base case)";
const char* const kCiteRealEqual = "#[a,1,a] | [1,0,0,1] with real a outside {0, 1, -1} is #P-hard (known base case)";
const char* const kCiteEqualBase =
    "#[0,1,0] | [0,1,1,0] is #P-hard and holographically equivalent to a #[c,1,c] | [1,0,0,1] problem";

const std::vector<std::string> kUnaryGadgets{"10", "11", "12", "13", "14", "15", "16"};

ScalarBindings xy_bindings(const Cyc12& X, const Cyc12& Y) { return {{Var::X, X}, {Var::Y, Y}}; }

CycVector krylov_column(const CycMatrix& m, const CycVector& s, int power) {
  CycVector v = s;
  for (int k = 0; k < power; ++k) v = m * v;
  return v;
}

Cyc12 krylov_det(const CycMatrix& m, const CycVector& s) {
  CycMatrix k(3, 3);
  for (int c = 0; c < 3; ++c) k.col(c) = krylov_column(m, s, c);
  return cofactor_determinant(k);
}

const RealCaseGadget& real_gadget(int id) {
  for (const RealCaseGadget& g : real_case_gadgets())
    if (g.id == id) return g;
  throw Error(ErrorKind::UnknownGadget, "gadget " + std::to_string(id) + " is not in the real-case table");
}

CheckRecord record(std::string step, std::string gadget, Cyc12 lhs, Cyc12 rhs) {
  CheckRecord r{std::move(step), std::move(gadget), std::move(lhs), std::move(rhs), false};
  r.outcome = r.lhs != r.rhs;
  return r;
}

// Base and shifted gadget of an eigenvalue-shifted pair, with delta read off the matrices.
struct EspPair {
  std::string base;
  std::string shifted;
};

const std::vector<EspPair>& esp_pairs() {
  static const std::vector<EspPair> pairs{{"10", "11"}, {"13", "14"}};
  return pairs;
}

Cyc12 esp_delta(const EspPair& p, const Coordinates& c) {
  const CycMatrix diff = evaluate_gadget(p.shifted, c.a, c.b) - evaluate_gadget(p.base, c.a, c.b);
  const Cyc12 d = diff(0, 0);
  if (!diff(0, 1).is_zero() || !diff(1, 0).is_zero() || diff(1, 1) != d)
    throw Error(ErrorKind::PreconditionViolation, "gadgets " + p.base + " and " + p.shifted + " are not shifted");
  return d;
}

Cyc12 esp_precondition_product(const CycMatrix& m, const Cyc12& delta) {
  const Cyc12 tr = matrix_trace(m);
  const Cyc12 det = cofactor_determinant(m);
  CycMatrix shifted = m;
  shifted(0, 0) += delta;
  shifted(1, 1) += delta;
  return delta * det * cofactor_determinant(shifted) * (tr * tr - Cyc12(4) * det);
}

std::string pair_name(const EspPair& p) { return p.base + "/" + p.shifted; }

void attach_unary_support(HardnessWitness& w, const CycMatrix& m, const std::string& gadget) {
  const StarterSet st = starter_set(w.point.a, w.point.b);
  for (std::size_t k = 0; k < 3; ++k) {
    static const char* const kPairs[3] = {"FM4s|Fs", "FM6s|Fs", "FM4s|FM6s"};
    w.trail.push_back(record("starter-pair-det", kPairs[k], st.pair_dets[k], Cyc12()));
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const Cyc12 d = det2(st.vectors[k], CycVector(m * st.vectors[k]));
    w.trail.push_back(record("starter-not-eigenvector", gadget + ":" + st.labels[k], d, Cyc12()));
    if (!d.is_zero()) break;
  }
  w.terminal.starters = st;
  w.terminal.vc_chain = vc_simulation_chain(w.point.a, w.point.b);
  w.citations.emplace_back(kCiteVertexCover);
}

// Equal eigenvalue norms r, r force tr^2 conj(det) = 4 r^4 cos^2(t) >= 0, so a
// negative real value certifies distinct norms where the plain test cannot.
NormCertificate equal_cubes_norm(const CycMatrix& m) {
  NormCertificate nc = distinct_norm_2x2(matrix_trace(m), cofactor_determinant(m));
  if (nc.conclusive() || nc.zero_eigenvalue) return nc;
  if (real_sign(nc.lhs) < 0) {
    nc.kind = NormKind::Distinct2x2;
    nc.rhs = -nc.lhs;
    nc.note = "tr^2 conj(det) is a negative real";
  }
  return nc;
}

bool try_equal_cubes(HardnessWitness& w) {
  const Coordinates& p = w.point;
  if (p.a.pow(3) != p.b.pow(3)) return false;
  const Cyc12 omega = p.b / p.a;
  const auto [a2, b2] = holographic_diag_transform(p.a, p.b, omega);
  w.terminal.transformed_point = std::pair{a2, b2};
  if (is_real(a2)) {
    w.terminal.kind = TerminalKind::Citation;
    w.terminal.detail = "equivalent to #[c,1,c] | [1,0,0,1] with real c = " + to_string(a2);
    w.citations.emplace_back(kCiteRealEqual);
    return true;
  }
  const CycMatrix m = evaluate_gadget("abEqual", a2, b2);
  const Cyc12 det = cofactor_determinant(m);
  const NormCertificate plain = distinct_norm_2x2(matrix_trace(m), det);
  const NormCertificate nc = equal_cubes_norm(m);
  const Cyc12 eigen_test = a2 * (m(1, 0) * a2 + m(1, 1)) - (m(0, 0) * a2 + m(0, 1));
  w.trail.push_back(record("equal-cubes-det", "abEqual", det, Cyc12()));
  w.trail.push_back(record("equal-cubes-distinct-norm", "abEqual", plain.lhs, plain.rhs));
  if (!plain.conclusive() && !det.is_zero())
    w.trail.push_back(record("equal-cubes-norm-sign", "abEqual", nc.lhs, nc.rhs));
  w.trail.push_back(record("equal-cubes-not-eigenvector", "abEqual", eigen_test, Cyc12()));
  if (!nc.conclusive() || eigen_test.is_zero()) {
    w.terminal.kind = TerminalKind::Anomaly;
    w.terminal.detail = std::string("equal-cubes recurrence not certified: ") +
                        (nc.conclusive() ? "starter is an eigenvector" : "eigenvalue norms may coincide");
    return true;
  }
  w.terminal.kind = TerminalKind::EqualCubes;
  w.terminal.gadgets = {"abEqual"};
  w.terminal.norm = nc;
  w.terminal.norm.gadgets = {"abEqual"};
  w.terminal.detail = "diagonal transform by omega = " + to_string(omega) + " gives equal coordinates";
  w.citations.emplace_back(kCiteEqualBase);
  return true;
}

bool try_real(HardnessWitness& w) {
  const Coordinates& p = w.point;
  if (!is_real(p.X) || !is_real(p.Y)) return false;
  if (p.X.is_zero() && p.Y == Cyc12(-1)) {
    w.terminal.kind = TerminalKind::Citation;
    w.terminal.detail = "(X, Y) = (0, -1)";
    w.citations.emplace_back(kCiteZeroMinusOne);
    return true;
  }
  const ScalarBindings at = xy_bindings(p.X, p.Y);
  for (const RealCaseGadget& g : real_case_gadgets()) {
    const std::string id = std::to_string(g.id);
    const Cyc12 D = evaluate(g.D, at);
    w.trail.push_back(record("real-nonzero-D", id, D, Cyc12()));
    if (D.is_zero()) continue;
    NormCertificate nc = distinct_norm_3x3(evaluate(g.B, at), evaluate(g.C, at), D);
    w.trail.push_back(record("real-distinct-norm-3x3", id, nc.lhs, nc.rhs));
    if (!nc.conclusive()) continue;
    const Cyc12 h = evaluate(g.h, at);
    w.trail.push_back(record("real-starter-factor", id, h, Cyc12()));
    if (h.is_zero()) continue;

    const FinisherSet fs = finisher_set(p.a, p.b);
    w.trail.push_back(record("finisher-cross-det", fs.labels[2], fs.normal_det, Cyc12()));
    nc.gadgets = {id};
    w.terminal.kind = TerminalKind::BinaryReal;
    w.terminal.gadgets = {id};
    w.terminal.norm = nc;
    w.terminal.finishers = fs;
    w.terminal.vc_chain = vc_simulation_chain(p.a, p.b);
    w.citations.emplace_back(kCiteVertexCover);
    return true;
  }
  return false;
}

bool try_unary(HardnessWitness& w) {
  const Coordinates& p = w.point;
  for (const std::string& id : kUnaryGadgets) {
    const CycMatrix m = evaluate_gadget(id, p.a, p.b);
    NormCertificate nc = distinct_norm_2x2(matrix_trace(m), cofactor_determinant(m));
    w.trail.push_back(record("unary-distinct-norm-2x2", id, nc.lhs, nc.rhs));
    if (!nc.conclusive()) continue;
    nc.gadgets = {id};
    w.terminal.kind = TerminalKind::UnaryDistinct;
    w.terminal.gadgets = {id};
    w.terminal.norm = nc;
    attach_unary_support(w, m, id);
    return true;
  }
  return false;
}

bool try_esp(HardnessWitness& w) {
  const Coordinates& p = w.point;
  for (const EspPair& pair : esp_pairs()) {
    const CycMatrix m = evaluate_gadget(pair.base, p.a, p.b);
    const Cyc12 delta = esp_delta(pair, p);
    const Cyc12 pre = esp_precondition_product(m, delta);
    w.trail.push_back(record("esp-precondition", pair_name(pair), pre, Cyc12()));
    if (pre.is_zero()) continue;
    NormCertificate nc = esp_disjunctive(m, delta);
    const Cyc12 tr_ratio = matrix_trace(m) / delta;
    const Cyc12 det_ratio = cofactor_determinant(m) / (delta * delta);
    w.trail.push_back(record("esp-trace-ratio", pair_name(pair), tr_ratio, conj(tr_ratio)));
    w.trail.push_back(record("esp-det-ratio", pair_name(pair), det_ratio, conj(det_ratio)));
    if (!nc.conclusive()) continue;
    nc.gadgets = {pair.base, pair.shifted};
    w.terminal.kind = TerminalKind::EspDisjunctive;
    w.terminal.gadgets = nc.gadgets;
    w.terminal.norm = nc;
    attach_unary_support(w, m, pair.base);
    return true;
  }
  return false;
}

// Independent recomputation of one trail entry.
std::pair<Cyc12, Cyc12> recompute(const CheckRecord& r, const Coordinates& p) {
  const std::string& s = r.step;
  if (s.rfind("equal-cubes-", 0) == 0) {
    const Cyc12 a2 = p.b * p.b / p.a;
    const CycMatrix m = evaluate_gadget("abEqual", a2, a2);
    const Cyc12 tr = m(0, 0) + m(1, 1);
    const Cyc12 det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (s == "equal-cubes-det") return {det, Cyc12()};
    if (s == "equal-cubes-distinct-norm") return {tr * tr * conj(det), conj(tr) * conj(tr) * det};
    if (s == "equal-cubes-norm-sign") {
      const Cyc12 v = tr * tr * conj(det);
      return {v, real_sign(v) < 0 ? -v : v};
    }
    if (s == "equal-cubes-not-eigenvector") {
      const Cyc12 u = m(0, 0) * a2 + m(0, 1);
      const Cyc12 v = m(1, 0) * a2 + m(1, 1);
      return {a2 * v - u, Cyc12()};
    }
  }
  if (s.rfind("real-", 0) == 0) {
    const CycMatrix m = evaluate_gadget(r.gadget, p.a, p.b);
    const auto cp = charpoly_coefficients(m);
    if (s == "real-nonzero-D") return {cp[3], Cyc12()};
    if (s == "real-distinct-norm-3x3") return {cp[2] * cp[2] * conj(cp[2]), conj(cp[1]) * cp[1] * conj(cp[1]) * cp[3]};
    if (s == "real-starter-factor") {
      CycVector start(3);
      start << p.a, Cyc12(1), p.b;
      const RealCaseGadget& g = real_gadget(std::stoi(r.gadget));
      const Cyc12 scale = (p.X - Cyc12(1)).pow(g.starter_power) * (p.b.pow(3) - p.a.pow(3));
      return {krylov_det(m, start) / scale, Cyc12()};
    }
  }
  if (s == "finisher-cross-det") return {finisher_set(p.a, p.b).normal_det, Cyc12()};
  if (s == "unary-distinct-norm-2x2") {
    const CycMatrix m = evaluate_gadget(r.gadget, p.a, p.b);
    const Cyc12 tr = m(0, 0) + m(1, 1);
    const Cyc12 det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return {tr * tr * conj(det), conj(tr) * conj(tr) * det};
  }
  if (s == "starter-pair-det" || s == "starter-not-eigenvector") {
    const CycMatrix F = evaluate_gadget("F", p.a, p.b);
    CycVector start(3);
    start << p.a, Cyc12(1), p.b;
    const std::map<std::string, CycVector> vecs{{"Fs", F * start},
                                                {"FM4s", F * (evaluate_gadget("4", p.a, p.b) * start)},
                                                {"FM6s", F * (evaluate_gadget("6", p.a, p.b) * start)}};
    const std::size_t cut = r.gadget.find(s == "starter-pair-det" ? '|' : ':');
    if (cut != std::string::npos) {
      const std::string left = r.gadget.substr(0, cut);
      const std::string right = r.gadget.substr(cut + 1);
      if (s == "starter-pair-det" && vecs.count(left) && vecs.count(right))
        return {det2(vecs.at(left), vecs.at(right)), Cyc12()};
      if (s == "starter-not-eigenvector" && vecs.count(right)) {
        const CycVector& v = vecs.at(right);
        return {det2(v, CycVector(evaluate_gadget(left, p.a, p.b) * v)), Cyc12()};
      }
    }
  }
  if (s.rfind("esp-", 0) == 0) {
    for (const EspPair& pair : esp_pairs()) {
      if (pair_name(pair) != r.gadget) continue;
      const CycMatrix m = evaluate_gadget(pair.base, p.a, p.b);
      const Cyc12 delta = esp_delta(pair, p);
      if (s == "esp-precondition") return {esp_precondition_product(m, delta), Cyc12()};
      if (s == "esp-trace-ratio") {
        const Cyc12 t = matrix_trace(m) / delta;
        return {t, conj(t)};
      }
      if (s == "esp-det-ratio") {
        const Cyc12 d = cofactor_determinant(m) / (delta * delta);
        return {d, conj(d)};
      }
    }
  }
  throw Error(ErrorKind::MalformedDocument, "unknown witness step " + s + " on " + r.gadget);
}

json lit(const Cyc12& z) { return to_string(z); }

json vector_json(const CycVector& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(lit(v(k)));
  return out;
}

json norm_json(const NormCertificate& n) {
  return {{"kind", to_string(n.kind)}, {"lhs", lit(n.lhs)}, {"rhs", lit(n.rhs)}, {"gadgets", n.gadgets},
          {"zero_eigenvalue", n.zero_eigenvalue}, {"note", n.note}};
}

json vc_json(const VcSimulationStep& s) {
  json unaries = json::object();
  for (const UnaryParameter& u : s.unaries) {
    json vals = json::array();
    for (const Cyc12& v : u.values) vals.push_back(lit(v));
    unaries[u.name] = vals;
  }
  json dens = json::object();
  for (const auto& [name, v] : s.denominators) dens[name] = lit(v);
  return {{"case", s.case_tag},
          {"gadget", s.gadget},
          {"a", lit(s.a)},
          {"b", lit(s.b)},
          {"swapped", s.swapped},
          {"unaries", unaries},
          {"claimed_output", to_string(s.claimed_output)},
          {"claim_status", "topology-unknown"},
          {"denominators", dens}};
}

}  // namespace

Coordinates Coordinates::of(const Cyc12& a, const Cyc12& b) {
  Coordinates c;
  c.a = a;
  c.b = b;
  c.X = a * b;
  c.Y = a.pow(3) + b.pow(3);
  const Cyc12 half = c.Y / Cyc12(2);
  c.Z = half * half;
  return c;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Tractable: return "Tractable";
    case Verdict::PlanarTractableGeneralHard: return "PlanarTractableGeneralHard";
    case Verdict::Hard: return "Hard";
  }
  return "?";
}

Classification classify(const Cyc12& a, const Cyc12& b, bool planar) {
  Classification c;
  c.planar_requested = planar;
  const Coordinates p = Coordinates::of(a, b);
  if (auto t = tractable_case(a, b)) {
    c.verdict = Verdict::Tractable;
    c.tractable = t;
    switch (*t) {
      case TractableCase::Degenerate:
        c.case_number = 1;
        c.citation = "X = 1: the signature is degenerate and the Holant factors over vertices";
        break;
      case TractableCase::Bipartite:
        c.case_number = 2;
        c.citation = "X = Y = 0: counts proper 2-colorings";
        break;
      default:
        c.case_number = 3;
        c.citation = "X = -1 and Y in {0, 2i, -2i}: polynomial time by a known graph homomorphism algorithm";
        break;
    }
    return c;
  }
  if (planar && Cyc12(4) * p.X.pow(3) == p.Y * p.Y) {
    c.verdict = Verdict::PlanarTractableGeneralHard;
    c.citation = "4X^3 = Y^2: polynomial time on planar graphs by holographic algorithms, #P-hard in general";
    return c;
  }
  c.verdict = Verdict::Hard;
  return c;
}

Verdict classify_xz(const Cyc12& X, const Cyc12& Z, bool planar) {
  if (X.is_one()) return Verdict::Tractable;
  if (X.is_zero() && Z.is_zero()) return Verdict::Tractable;
  if (X == Cyc12(-1) && (Z.is_zero() || Z == Cyc12(-1))) return Verdict::Tractable;
  if (planar && Z == X.pow(3)) return Verdict::PlanarTractableGeneralHard;
  return Verdict::Hard;
}

bool coordinates_equivalence_check(const Cyc12& a, const Cyc12& b) {
  const Coordinates p = Coordinates::of(a, b);
  for (bool planar : {false, true})
    if (classify(a, b, planar).verdict != classify_xz(p.X, p.Z, planar)) return false;
  return true;
}

std::string to_string(NormKind k) {
  switch (k) {
    case NormKind::Distinct2x2: return "distinct-2x2";
    case NormKind::Distinct3x3: return "distinct-3x3";
    case NormKind::EspDisjunctive: return "esp-disjunctive";
    case NormKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

NormCertificate distinct_norm_2x2(const Cyc12& tr, const Cyc12& det) {
  NormCertificate c;
  c.lhs = tr * tr * conj(det);
  c.rhs = conj(tr) * conj(tr) * det;
  if (det.is_zero()) {
    c.zero_eigenvalue = true;
    c.note = "det = 0";
  } else if (c.lhs != c.rhs) {
    c.kind = NormKind::Distinct2x2;
  }
  return c;
}

NormCertificate distinct_norm_3x3(const Cyc12& B, const Cyc12& C, const Cyc12& D) {
  NormCertificate c;
  c.lhs = C * C * conj(C);
  c.rhs = conj(B) * B * conj(B) * D;
  if (D.is_zero()) {
    c.zero_eigenvalue = true;
    c.note = "D = 0";
  } else if (c.lhs != c.rhs) {
    c.kind = NormKind::Distinct3x3;
  }
  return c;
}

NormCertificate esp_disjunctive(const CycMatrix& M, const Cyc12& delta) {
  if (M.rows() != 2 || M.cols() != 2) throw Error(ErrorKind::NonSquare, "ESP test needs a 2x2 matrix");
  if (delta.is_zero()) throw Error(ErrorKind::PreconditionViolation, "delta = 0");
  const Cyc12 tr = matrix_trace(M);
  const Cyc12 det = cofactor_determinant(M);
  if (det.is_zero()) throw Error(ErrorKind::PreconditionViolation, "det(M) = 0");
  CycMatrix shifted = M;
  shifted(0, 0) += delta;
  shifted(1, 1) += delta;
  if (cofactor_determinant(shifted).is_zero()) throw Error(ErrorKind::PreconditionViolation, "det(M + delta I) = 0");
  if ((tr * tr - Cyc12(4) * det).is_zero())
    throw Error(ErrorKind::PreconditionViolation, "tr(M)^2 - 4 det(M) = 0, eigenvalues repeat");

  NormCertificate c;
  const Cyc12 tr_ratio = tr / delta;
  const Cyc12 det_ratio = det / (delta * delta);
  if (tr_ratio != conj(tr_ratio)) {
    c.kind = NormKind::EspDisjunctive;
    c.lhs = tr_ratio;
    c.rhs = conj(tr_ratio);
    c.note = "tr/delta is not real";
  } else {
    c.lhs = det_ratio;
    c.rhs = conj(det_ratio);
    if (det_ratio != conj(det_ratio)) {
      c.kind = NormKind::EspDisjunctive;
      c.note = "det/delta^2 is not real";
    }
  }
  return c;
}

std::string to_string(TerminalKind k) {
  switch (k) {
    case TerminalKind::BinaryReal: return "binary-real";
    case TerminalKind::UnaryDistinct: return "unary-distinct";
    case TerminalKind::EspDisjunctive: return "esp-disjunctive";
    case TerminalKind::EqualCubes: return "equal-cubes";
    case TerminalKind::Citation: return "citation";
    case TerminalKind::Anomaly: return "anomaly";
  }
  return "?";
}

HardnessWitness hardness_witness(const Cyc12& a, const Cyc12& b, bool planar) {
  HardnessWitness w;
  w.point = Coordinates::of(a, b);
  w.classification = classify(a, b, planar);
  if (w.classification.verdict != Verdict::Hard)
    throw Error(ErrorKind::NotHard, "(" + to_string(a) + ", " + to_string(b) + ") is " +
                                        to_string(w.classification.verdict) + ": " + w.classification.citation);
  if (try_equal_cubes(w) || try_real(w) || try_unary(w) || try_esp(w)) return w;
  w.terminal.kind = TerminalKind::Anomaly;
  w.terminal.detail = "every strategy was inconclusive at a point classified Hard";
  return w;
}

std::vector<std::string> verify_witness(const HardnessWitness& w) {
  std::vector<std::string> issues;
  const Coordinates& p = w.point;
  const Coordinates fresh = Coordinates::of(p.a, p.b);
  if (fresh.X != p.X || fresh.Y != p.Y || fresh.Z != p.Z) issues.emplace_back("coordinates do not match (a, b)");

  for (const CheckRecord& r : w.trail) {
    const std::string where = r.step + " on " + r.gadget;
    try {
      const auto [lhs, rhs] = recompute(r, p);
      if (lhs != r.lhs || rhs != r.rhs)
        issues.push_back(where + ": recorded " + to_string(r.lhs) + " vs " + to_string(r.rhs) + ", recomputed " +
                         to_string(lhs) + " vs " + to_string(rhs));
      if (r.outcome != (r.lhs != r.rhs)) issues.push_back(where + ": outcome flag disagrees with the sides");
    } catch (const Error& e) {
      issues.push_back(where + ": " + e.what());
    }
  }

  const WitnessTerminal& t = w.terminal;
  if (t.kind == TerminalKind::Anomaly || t.kind == TerminalKind::Citation) return issues;
  if (!t.norm.conclusive() || t.norm.lhs == t.norm.rhs) issues.emplace_back("terminal norm certificate is not strict");
  NormCertificate again;
  switch (t.kind) {
    case TerminalKind::BinaryReal: {
      const auto cp = charpoly_coefficients(evaluate_gadget(t.gadgets.at(0), p.a, p.b));
      again = distinct_norm_3x3(cp[1], cp[2], cp[3]);
      break;
    }
    case TerminalKind::UnaryDistinct: {
      const CycMatrix m = evaluate_gadget(t.gadgets.at(0), p.a, p.b);
      again = distinct_norm_2x2(matrix_trace(m), cofactor_determinant(m));
      break;
    }
    case TerminalKind::EspDisjunctive: {
      if (t.gadgets.size() != 2) issues.emplace_back("disjunctive terminal must name exactly two gadgets");
      const EspPair pair{t.gadgets.at(0), t.gadgets.at(1)};
      again = esp_disjunctive(evaluate_gadget(pair.base, p.a, p.b), esp_delta(pair, p));
      break;
    }
    case TerminalKind::EqualCubes: {
      const Cyc12 a2 = p.b * p.b / p.a;
      again = equal_cubes_norm(evaluate_gadget("abEqual", a2, a2));
      break;
    }
    default: break;
  }
  if (again.kind != t.norm.kind || again.lhs != t.norm.lhs || again.rhs != t.norm.rhs)
    issues.emplace_back("terminal norm certificate does not recompute");

  if (t.finishers && t.finishers->normal_det.is_zero()) issues.emplace_back("finisher certificate is singular");
  if (t.starters)
    for (const Cyc12& d : t.starters->pair_dets)
      if (d.is_zero()) issues.emplace_back("starter vectors are dependent");
  if (t.kind != TerminalKind::EqualCubes) {
    const auto chain = vc_simulation_chain(p.a, p.b);
    bool same = chain.size() == t.vc_chain.size();
    for (std::size_t k = 0; same && k < chain.size(); ++k)
      same = chain[k].case_tag == t.vc_chain[k].case_tag && chain[k].claimed_output == t.vc_chain[k].claimed_output;
    if (!same) issues.emplace_back("vertex-cover simulation record does not recompute");
  }
  return issues;
}

json to_json(const Classification& c, const Coordinates& p) {
  json out{{"verdict", to_string(c.verdict)}, {"planar", c.planar_requested}};
  if (c.tractable) {
    out["case"] = c.case_number;
    out["family"] = to_string(*c.tractable);
  }
  if (!c.citation.empty()) out["citation"] = c.citation;
  out["point"] = {{"a", lit(p.a)}, {"b", lit(p.b)}, {"X", lit(p.X)}, {"Y", lit(p.Y)}, {"Z", lit(p.Z)}};
  return out;
}

json to_json(const HardnessWitness& w) {
  const Coordinates& p = w.point;
  json out;
  out["point"] = {{"a", lit(p.a)}, {"b", lit(p.b)}, {"X", lit(p.X)}, {"Y", lit(p.Y)}, {"Z", lit(p.Z)}};
  json cls = to_json(w.classification, p);
  cls.erase("point");
  out["classification"] = cls;
  json trail = json::array();
  for (const CheckRecord& r : w.trail)
    trail.push_back({{"step", r.step},
                     {"gadget", r.gadget},
                     {"lhs", lit(r.lhs)},
                     {"rhs", lit(r.rhs)},
                     {"outcome", r.outcome ? "accepted" : "rejected"}});
  out["trail"] = trail;

  const WitnessTerminal& t = w.terminal;
  json term{{"kind", to_string(t.kind)}, {"gadgets", t.gadgets}, {"detail", t.detail}};
  if (t.norm.conclusive()) term["norm"] = norm_json(t.norm);
  if (t.finishers) {
    const FinisherSet& f = *t.finishers;
    json normals = json::array();
    for (const CycVector& v : f.normals) normals.push_back(vector_json(v));
    term["finishers"] = {{"labels", f.labels},          {"swapped", f.swapped},
                         {"zero_branch", f.zero_branch}, {"cross_products", normals},
                         {"cross_det", lit(f.normal_det)}, {"region_value", lit(f.region_value)}};
  }
  if (t.starters) {
    const StarterSet& s = *t.starters;
    json vecs = json::array();
    json dets = json::array();
    for (const CycVector& v : s.vectors) vecs.push_back(vector_json(v));
    for (const Cyc12& d : s.pair_dets) dets.push_back(lit(d));
    term["starters"] = {{"labels", s.labels}, {"vectors", vecs}, {"pair_dets", dets}};
  }
  if (!t.vc_chain.empty()) {
    json chain = json::array();
    for (const VcSimulationStep& s : t.vc_chain) chain.push_back(vc_json(s));
    term["vertex_cover_simulation"] = chain;
  }
  if (t.transformed_point)
    term["transformed_point"] = {{"a", lit(t.transformed_point->first)}, {"b", lit(t.transformed_point->second)}};
  out["terminal"] = term;
  out["citations"] = w.citations;
  return out;
}

std::optional<std::size_t> real_case_gadget_at(const Rat& X, const Rat& Y) {
  const std::map<Var, Rat> at{{Var::X, X}, {Var::Y, Y}};
  const auto& table = real_case_gadgets();
  for (std::size_t j = 0; j < table.size(); ++j) {
    const Rat D = evaluate_rational(table[j].D, at);
    if (D == 0) continue;
    const Rat B = evaluate_rational(table[j].B, at);
    const Rat C = evaluate_rational(table[j].C, at);
    if (B * B * B * D == C * C * C) continue;
    if (evaluate_rational(table[j].h, at) == 0) continue;
    return j;
  }
  return std::nullopt;
}

RealScanReport real_disjunction_scan(const Rat& x_lo, const Rat& x_hi, const Rat& y_lo, const Rat& y_hi,
                                     const Rat& step, unsigned jobs) {
  if (step <= 0) throw Error(ErrorKind::PreconditionViolation, "scan step must be positive");
  if (x_hi < x_lo || y_hi < y_lo) throw Error(ErrorKind::PreconditionViolation, "empty scan range");
  RealScanReport report;
  report.x_lo = x_lo;
  report.x_hi = x_hi;
  report.y_lo = y_lo;
  report.y_hi = y_hi;
  report.step = step;

  std::vector<Rat> xs, ys;
  for (Rat x = x_lo; x <= x_hi; x += step) xs.push_back(x);
  for (Rat y = y_lo; y <= y_hi; y += step) ys.push_back(y);

  // One partial report per X column, merged in column order.
  std::vector<RealScanReport> columns(xs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < xs.size(); i = next++) {
      RealScanReport& part = columns[i];
      const Rat& X = xs[i];
      for (const Rat& Y : ys) {
        ++part.points;
        if (X == 1) {
          ++part.excluded_degenerate;
        } else if (4 * X * X * X == Y * Y) {
          ++part.excluded_equal_cubes;
        } else if (X == 0 && Y == -1) {
          ++part.cited;
        } else if (X == -1 && Y == 0) {
          ++part.excluded_tractable;
        } else if (auto j = real_case_gadget_at(X, Y)) {
          ++part.verified;
          ++part.first_gadget_counts[*j];
        } else {
          part.counterexamples.push_back({X, Y});
        }
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(xs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const RealScanReport& part : columns) {
    report.points += part.points;
    report.excluded_degenerate += part.excluded_degenerate;
    report.excluded_equal_cubes += part.excluded_equal_cubes;
    report.cited += part.cited;
    report.excluded_tractable += part.excluded_tractable;
    report.verified += part.verified;
    for (std::size_t j = 0; j < 4; ++j) report.first_gadget_counts[j] += part.first_gadget_counts[j];
    report.counterexamples.insert(report.counterexamples.end(), part.counterexamples.begin(),
                                  part.counterexamples.end());
  }
  return report;
}

json to_json(const RealScanReport& r) {
  json counts = json::object();
  const auto& table = real_case_gadgets();
  for (std::size_t j = 0; j < table.size(); ++j) counts[std::to_string(table[j].id)] = r.first_gadget_counts[j];
  json ce = json::array();
  for (const ScanCounterexample& c : r.counterexamples) ce.push_back({{"X", to_string(c.X)}, {"Y", to_string(c.Y)}});
  return {{"range", {{"x", {to_string(r.x_lo), to_string(r.x_hi)}}, {"y", {to_string(r.y_lo), to_string(r.y_hi)}}}},
          {"step", to_string(r.step)},
          {"points", r.points},
          {"excluded", {{"X=1", r.excluded_degenerate},
                        {"4X^3=Y^2", r.excluded_equal_cubes},
                        {"(0,-1) cited", r.cited},
                        {"(-1,0) tractable", r.excluded_tractable}}},
          {"verified", r.verified},
          {"first_gadget", counts},
          {"counterexamples", ce}};
}

}  // namespace holant

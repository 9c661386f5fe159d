#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "holant/catalog.hpp"
#include "holant/dichotomy.hpp"
#include "holant/errors.hpp"
#include "holant/eval.hpp"
#include "holant/interp.hpp"

namespace holant::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph, grid;
  std::string signature, target;
  std::string a, b;
  std::string gadget;
  std::string range = "-10,10";
  std::string step = "1/10";
  std::string out;
  std::string format = "text";
  bool planar = false;
  unsigned jobs = 1;
};

// What a command hands back: a document for --format json, prose otherwise,
// and the exit code when the computation itself flags a problem.
struct Result {
  json doc;
  std::string text;
  int code = Ok;
};

Cyc12 scalar(const std::string& flag, const std::string& value) {
  if (value.empty()) throw UsageError(flag + " is required");
  return parse_cyc(value);
}

Rat rational(const std::string& text) {
  const Cyc12 z = parse_cyc(text);
  if (!z.is_rational()) throw Error(ErrorKind::Syntax, "'" + text + "' is not rational");
  return z.coeff(0);
}

json matrix_json(const CycMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

template <typename Scalar>
std::string matrix_text(const Matrix<Scalar>& m) {
  std::ostringstream os;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << to_string(m(r, c));
    os << "]\n";
  }
  return os.str();
}

EdgeLabeledGraph load_graph(const Options& o) {
  if (o.graph.empty()) throw UsageError("--graph is required");
  return parse_graph(read_json_file(o.graph));
}

SignatureGrid load_grid(const Options& o) {
  if (o.grid.empty()) throw UsageError("--grid is required");
  return parse_grid(read_json_file(o.grid));
}

Result cmd_eval(const Options& o) {
  if (o.graph.empty() == o.grid.empty()) throw UsageError("eval needs exactly one of --graph or --grid");
  Result r;
  if (!o.graph.empty()) {
    if (o.signature.empty()) throw UsageError("--signature is required with --graph");
    const EdgeLabeledGraph g = load_graph(o);
    const EvalReport rep = auto_eval(g, parse_signature(o.signature), o.jobs);
    r.doc = {{"value", to_string(rep.value)},
             {"method", rep.method},
             {"vertices", g.vertex_count},
             {"edges", g.edges.size()}};
    r.text = to_string(rep.value) + "\n";
    return r;
  }
  SignatureGrid grid = load_grid(o);
  if (!o.target.empty()) grid = fill_slots(grid, parse_signature(o.target));
  const Cyc12 v = holant_eval_grid(grid);
  r.doc = {{"value", to_string(v)}, {"method", "grid contraction"}};
  r.text = to_string(v) + "\n";
  return r;
}

Result cmd_symmetrize(const Options& o) {
  const EdgeLabeledGraph g = load_graph(o);
  const SymmetrizedPolynomial sp = symmetrize(g, o.jobs);
  Result r;
  r.doc = {{"P", to_string(sp.P)}, {"vertices", sp.source_vertex_count}, {"edges", sp.source_edge_count}};
  r.text = "P(X, Y) = " + to_string(sp.P) + "\n";
  if (!o.a.empty() || !o.b.empty()) {
    const Coordinates p = Coordinates::of(scalar("--a", o.a), scalar("--b", o.b));
    const Cyc12 v = evaluate(sp.P, {{Var::X, p.X}, {Var::Y, p.Y}});
    r.doc["value"] = to_string(v);
    r.text += "P(ab, a^3 + b^3) = " + to_string(v) + "\n";
  }
  return r;
}

Result cmd_classify(const Options& o) {
  const Cyc12 a = scalar("--a", o.a), b = scalar("--b", o.b);
  const Classification c = classify(a, b, o.planar);
  const Coordinates p = Coordinates::of(a, b);
  Result r;
  r.doc = to_json(c, p);
  std::ostringstream os;
  os << "verdict: " << to_string(c.verdict);
  if (c.tractable) os << " (case " << c.case_number << ")";
  os << "\n";
  if (!c.citation.empty()) os << "citation: " << c.citation << "\n";
  os << "X = " << to_string(p.X) << "\nY = " << to_string(p.Y) << "\nZ = " << to_string(p.Z) << "\n";
  r.text = os.str();
  return r;
}

std::string witness_text(const HardnessWitness& w, const std::vector<std::string>& issues) {
  std::ostringstream os;
  const Coordinates& p = w.point;
  os << "point: a = " << to_string(p.a) << ", b = " << to_string(p.b) << ", X = " << to_string(p.X)
     << ", Y = " << to_string(p.Y) << ", Z = " << to_string(p.Z) << "\n";
  os << "verdict: " << to_string(w.classification.verdict) << "\n";
  if (!w.trail.empty()) os << "trail:\n";
  for (const CheckRecord& c : w.trail)
    os << "  " << std::left << std::setw(28) << c.step << std::setw(8) << c.gadget << to_string(c.lhs) << " vs "
       << to_string(c.rhs) << "  " << (c.outcome ? "accepted" : "rejected") << "\n";
  const WitnessTerminal& t = w.terminal;
  os << "terminal: " << to_string(t.kind);
  for (std::size_t k = 0; k < t.gadgets.size(); ++k) os << (k ? ", " : " on ") << t.gadgets[k];
  os << "\n";
  if (!t.detail.empty()) os << "  " << t.detail << "\n";
  if (t.norm.conclusive())
    os << "  norm certificate " << to_string(t.norm.kind) << ": " << to_string(t.norm.lhs) << " vs "
       << to_string(t.norm.rhs) << "\n";
  if (t.finishers)
    os << "  finishers " << t.finishers->labels[0] << ", " << t.finishers->labels[1] << ", "
       << t.finishers->labels[2] << " with cross det " << to_string(t.finishers->normal_det) << "\n";
  if (t.starters) {
    os << "  starters";
    for (std::size_t k = 0; k < 3; ++k) os << (k ? ", " : " ") << t.starters->labels[k];
    os << " with pair dets";
    for (std::size_t k = 0; k < 3; ++k) os << (k ? ", " : " ") << to_string(t.starters->pair_dets[k]);
    os << "\n";
  }
  for (const VcSimulationStep& s : t.vc_chain)
    os << "  vertex-cover simulation case " << s.case_tag << " at (" << to_string(s.a) << ", " << to_string(s.b)
       << ") claims " << to_string(s.claimed_output) << "\n";
  for (const std::string& c : w.citations) os << "citation: " << c << "\n";
  if (issues.empty()) {
    os << "re-verified: yes\n";
  } else {
    os << "re-verified: no\n";
    for (const std::string& i : issues) os << "  " << i << "\n";
  }
  return os.str();
}

Result cmd_witness(const Options& o) {
  const HardnessWitness w = hardness_witness(scalar("--a", o.a), scalar("--b", o.b), o.planar);
  const std::vector<std::string> issues = verify_witness(w);
  Result r;
  r.doc = to_json(w);
  r.doc["reverified"] = issues.empty();
  if (!issues.empty()) r.doc["issues"] = issues;
  r.text = witness_text(w, issues);
  if (w.anomaly() || !issues.empty()) r.code = Anomaly;
  return r;
}

Result cmd_verify_identities(const Options&) {
  const std::vector<IdentityRecord> records = verify_identity_suite();
  Result r;
  r.doc = json::array();
  std::size_t passed = 0;
  std::ostringstream os;
  for (const IdentityRecord& rec : records) {
    json entry{{"name", rec.name}, {"anchor", rec.anchor}, {"statement", rec.statement}, {"passed", rec.passed}};
    if (!rec.passed) {
      entry["lhs"] = rec.lhs;
      entry["rhs"] = rec.rhs;
    }
    r.doc.push_back(entry);
    os << format_record(rec) << "\n";
    passed += rec.passed ? 1 : 0;
  }
  os << passed << " of " << records.size() << " identities hold\n";
  r.text = os.str();
  if (passed != records.size()) r.code = Anomaly;
  return r;
}

IterationFamily demo_family(const std::string& gadget, const Cyc12& a, const Cyc12& b) {
  IterationFamily fam;
  fam.M = evaluate_gadget(gadget, a, b);
  if (fam.M.rows() == 3) {
    fam.s = evaluate_gadget("s", a, b).col(0);
    const FinisherSet fs = finisher_set(a, b);
    fam.finishers.assign(fs.finishers.begin(), fs.finishers.end());
    return fam;
  }
  if (fam.M.rows() != 2) throw Error(ErrorKind::PreconditionViolation, "gadget " + gadget + " is not recursive");
  // Unary recursive gadgets start from whichever starter vector is not an eigenvector.
  const StarterSet st = starter_set(a, b);
  fam.s = st.vectors[0];
  for (const CycVector& v : st.vectors)
    if (!det2(v, CycVector(fam.M * v)).is_zero()) {
      fam.s = v;
      break;
    }
  return fam;
}

Result cmd_interpolate_demo(const Options& o) {
  const SignatureGrid grid = load_grid(o);
  if (o.target.empty()) throw UsageError("--target is required");
  const SymSignature target = parse_signature(o.target);
  const std::string gadget = o.gadget.empty() ? "4" : o.gadget;
  const Cyc12 a = o.a.empty() ? Cyc12(2) : parse_cyc(o.a);
  const Cyc12 b = o.b.empty() ? Cyc12(3) : parse_cyc(o.b);

  const InterpolationReport rep = run_unary_reduction(grid, target, demo_family(gadget, a, b));
  const Cyc12 direct = holant_eval_grid(fill_slots(grid, target));
  const bool equal = rep.interpolated == direct;

  Result r;
  json coeffs = json::array();
  for (const Cyc12& c : rep.coefficients) coeffs.push_back(to_string(c));
  json points = json::array();
  for (const CycVector& v : rep.plan.points) points.push_back({to_string(v(0)), to_string(v(1))});
  r.doc = {{"gadget", gadget},
           {"a", to_string(a)},
           {"b", to_string(b)},
           {"slots", grid.slot_count()},
           {"finisher", rep.plan.finisher ? json(*rep.plan.finisher) : json(nullptr)},
           {"indices", rep.plan.indices},
           {"points", points},
           {"coefficients", coeffs},
           {"interpolated", to_string(rep.interpolated)},
           {"direct", to_string(direct)},
           {"verdict", equal ? "EQUAL" : "DIFFER"}};
  std::ostringstream os;
  os << "family: gadget " << gadget << " at (" << to_string(a) << ", " << to_string(b) << ")\n";
  os << "slots: " << grid.slot_count() << "\n";
  if (rep.plan.finisher) os << "finisher: " << *rep.plan.finisher << "\n";
  os << "indices:";
  for (std::size_t k : rep.plan.indices) os << " " << k;
  os << "\ncoefficients:";
  for (const Cyc12& c : rep.coefficients) os << " " << to_string(c);
  os << "\ninterpolated: " << to_string(rep.interpolated) << "\ndirect: " << to_string(direct) << "\n"
     << (equal ? "EQUAL" : "DIFFER") << "\n";
  r.text = os.str();
  if (!equal) r.code = Anomaly;
  return r;
}

std::vector<Rat> split_range(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(rational(part));
  if (out.size() != 2 && out.size() != 4)
    throw UsageError("--range takes lo,hi or xlo,xhi,ylo,yhi, got '" + text + "'");
  if (out.size() == 2) out.insert(out.end(), {out[0], out[1]});
  return out;
}

Result cmd_scan_real(const Options& o) {
  const std::vector<Rat> box = split_range(o.range);
  const RealScanReport rep = real_disjunction_scan(box[0], box[1], box[2], box[3], rational(o.step), o.jobs);
  Result r;
  r.doc = to_json(rep);
  std::ostringstream os;
  os << "grid: X in [" << to_string(rep.x_lo) << ", " << to_string(rep.x_hi) << "], Y in [" << to_string(rep.y_lo)
     << ", " << to_string(rep.y_hi) << "], step " << to_string(rep.step) << "\n";
  os << "points: " << rep.points << "\n"
     << "excluded X = 1: " << rep.excluded_degenerate << "\n"
     << "excluded 4X^3 = Y^2: " << rep.excluded_equal_cubes << "\n"
     << "cited (0, -1): " << rep.cited << "\n"
     << "excluded (-1, 0): " << rep.excluded_tractable << "\n"
     << "verified: " << rep.verified << "\n"
     << "first gadget:";
  const auto& table = real_case_gadgets();
  for (std::size_t j = 0; j < table.size(); ++j) os << " " << table[j].id << "=" << rep.first_gadget_counts[j];
  os << "\ncounterexamples: " << rep.counterexamples.size() << "\n";
  for (const ScanCounterexample& c : rep.counterexamples) os << "  (" << to_string(c.X) << ", " << to_string(c.Y) << ")\n";
  r.text = os.str();
  if (!rep.counterexamples.empty()) r.code = Anomaly;
  return r;
}

Result cmd_gadget_signature(const Options& o) {
  if (o.gadget.empty() == o.grid.empty()) throw UsageError("gadget-signature needs exactly one of --gadget or --grid");
  Result r;
  if (!o.gadget.empty()) {
    const GadgetEntry& e = builtin_matrix(o.gadget);
    r.doc = {{"id", e.id}, {"kind", to_string(e.kind)}};
    r.text = "gadget " + e.id + " (" + to_string(e.kind) + ")\n";
    if (o.a.empty() && o.b.empty()) {
      json rows = json::array();
      for (Eigen::Index i = 0; i < e.matrix.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < e.matrix.cols(); ++j) row.push_back(to_string(e.matrix(i, j)));
        rows.push_back(row);
      }
      r.doc["matrix"] = rows;
      r.text += matrix_text(e.matrix);
    } else {
      const Cyc12 a = scalar("--a", o.a), b = scalar("--b", o.b);
      const CycMatrix m = evaluate_gadget(o.gadget, a, b);
      r.doc["a"] = to_string(a);
      r.doc["b"] = to_string(b);
      r.doc["matrix"] = matrix_json(m);
      r.text += "at a = " + to_string(a) + ", b = " + to_string(b) + "\n" + matrix_text(m);
    }
    return r;
  }
  const SignatureGrid gate = load_grid(o);
  const std::size_t inputs = gate.input_indices().size();
  const std::size_t outputs = gate.output_indices().size();
  r.doc = {{"inputs", inputs}, {"outputs", outputs}};
  r.text = "inputs: " + std::to_string(inputs) + ", outputs: " + std::to_string(outputs) + "\n";
  if (inputs == 0 || outputs == 0) {
    const SymSignature sig = symmetric_project(fgate_signature(gate));
    r.doc["signature"] = to_string(sig);
    r.text += "signature: " + to_string(sig) + "\n";
  } else {
    const CycMatrix m = transfer_matrix(gate);
    r.doc["matrix"] = matrix_json(m);
    r.text += "transfer matrix:\n" + matrix_text(m);
  }
  return r;
}

int error_code(ErrorKind kind) {
  if (is_parse_error(kind)) return ParseError;
  if (kind == ErrorKind::Mod3ViolationAnomaly) return Anomaly;
  return DomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Holant evaluation and complexity classification for #[a,1,b] | [1,0,0,1]", "holant"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "Write the result to this file");
  };
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("--a", o.a, "Scalar literal for a");
    sub->add_option("--b", o.b, "Scalar literal for b");
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  };

  auto* eval = app.add_subcommand("eval", "Holant of a graph or closed grid");
  eval->add_option("--graph", o.graph, "Graph JSON file");
  eval->add_option("--grid", o.grid, "Grid JSON file");
  eval->add_option("--signature", o.signature, "Edge signature [x,y,z]");
  eval->add_option("--target", o.target, "Unary signature for the SLOTs of a grid");
  add_jobs(eval);
  add_format(eval);

  auto* sym = app.add_subcommand("symmetrize", "Polynomial P(X, Y) of a 3-regular graph");
  sym->add_option("--graph", o.graph, "Graph JSON file")->required();
  add_point(sym);
  add_jobs(sym);
  add_format(sym);

  auto* cls = app.add_subcommand("classify", "Complexity verdict at (a, b)");
  add_point(cls);
  cls->add_flag("--planar", o.planar, "Restrict to planar instances");
  add_format(cls);

  auto* wit = app.add_subcommand("witness", "Hardness certificate at (a, b)");
  add_point(wit);
  wit->add_flag("--planar", o.planar, "Restrict to planar instances");
  add_format(wit);

  auto* ids = app.add_subcommand("verify-identities", "Check every stored gadget identity");
  add_format(ids);

  auto* demo = app.add_subcommand("interpolate-demo", "Run the unary interpolation reduction on a grid");
  demo->add_option("--grid", o.grid, "Grid JSON file with SLOT generators")->required();
  demo->add_option("--target", o.target, "Unary signature [x,y] to recover")->required();
  demo->add_option("--gadget", o.gadget, "Recursive gadget id (default 4)");
  add_point(demo);
  add_format(demo);

  auto* scan = app.add_subcommand("scan-real", "Check the real-case gadget conditions on a rational grid");
  scan->add_option("--range", o.range, "lo,hi for both axes or xlo,xhi,ylo,yhi (default -10,10)");
  scan->add_option("--step", o.step, "Grid spacing (default 1/10)");
  add_jobs(scan);
  add_format(scan);

  auto* sig = app.add_subcommand("gadget-signature", "Matrix of a stored gadget or signature of a gate file");
  sig->add_option("--gadget", o.gadget, "Stored gadget id");
  sig->add_option("--grid", o.grid, "Gate JSON file");
  add_point(sig);
  add_format(sig);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  Result result;
  try {
    if (eval->parsed()) result = cmd_eval(o);
    else if (sym->parsed()) result = cmd_symmetrize(o);
    else if (cls->parsed()) result = cmd_classify(o);
    else if (wit->parsed()) result = cmd_witness(o);
    else if (ids->parsed()) result = cmd_verify_identities(o);
    else if (demo->parsed()) result = cmd_interpolate_demo(o);
    else if (scan->parsed()) result = cmd_scan_real(o);
    else result = cmd_gadget_signature(o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return error_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return Anomaly;
  }

  const std::string payload = o.format == "json" ? result.doc.dump(2) + "\n" : result.text;
  if (o.out.empty()) {
    out << payload;
  } else {
    std::ofstream file(o.out);
    file << payload;
    if (!file) {
      err << "cannot write " << o.out << "\n";
      return DomainError;
    }
  }
  return result.code;
}

}  // namespace holant::cli

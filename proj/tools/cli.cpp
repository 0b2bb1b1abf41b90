#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <json.hpp>

#include "commands.hpp"

namespace polyknot::cli {

std::string load(const std::string& path) {
  try {
    return read_text_file(path);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_text_file_atomic(path, content);
  }
}

Rational number_flag(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

namespace {

enum class DocKind { Knot, Sequence, Trace };

DocKind detect(const std::string& text) {
  auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_object()) {
    if (doc.contains("samples")) return DocKind::Trace;
    if (doc.contains("entries")) return DocKind::Sequence;
  }
  return DocKind::Knot;
}

std::string verdict_line(const Verdict& v) {
  std::string line = std::string("verdict: ") + verdict_name(v);
  if (const auto* inc = std::get_if<Inconclusive>(&v)) line += " (depth " + std::to_string(inc->depth) + ")";
  return line + "\n";
}

int verdict_exit(const Verdict& v) {
  if (std::holds_alternative<Certified>(v)) return kOk;
  if (std::holds_alternative<Refuted>(v)) return kFailure;
  return kInconclusive;
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct VerifyOptions {
  std::string path;
  bool oracle = false;
  int depth = 40;
  double oracle_bound = 0;
  int oracle_resolution = 101;
  std::string out;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  PolynomialKnot knot = parse_knot(load(o.path));
  CertCertificate cert = certify_embedding(knot, CertifyOptions{o.depth});
  out << verdict_line(cert.verdict);
  if (const auto* w = std::get_if<Refuted>(&cert.verdict)) {
    out << "witness: s = " << to_display(w->s) << ", t = " << to_display(w->t) << "\n";
    if (w->s == w->t) out << "kind: derivative vanishes at t\n";
    else out << "kind: phi(s) = phi(t)\n";
  }
  if (o.oracle) {
    OracleGrid grid{o.oracle_bound > 0 ? o.oracle_bound : default_oracle_bound(knot), o.oracle_resolution};
    OracleResult r = sampling_oracle(knot, grid);
    if (r.refuted) {
      out << "oracle: failure near s = " << fmt17(r.s) << ", t = " << fmt17(r.t) << "\n";
    } else {
      out << "oracle: no failure found\n";
    }
    bool contradiction = (r.refuted && std::holds_alternative<Certified>(cert.verdict));
    out << "oracle agreement: " << (contradiction ? "CONTRADICTION" : "consistent") << "\n";
  }
  if (!o.out.empty()) write_text_file_atomic(o.out, serialize_certificate(cert));
  return verdict_exit(cert.verdict);
}

MetricTag metric_flag(const std::string& text) {
  try {
    return parse_metric(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--metric: ") + e.what());
  }
}

int cmd_distance(const std::string& a, const std::string& b, const std::string& metric, std::ostream& out) {
  MetricTag m = metric_flag(metric);
  std::string ta = load(a), tb = load(b);
  DocKind ka = detect(ta), kb = detect(tb);
  if (ka == DocKind::Trace || kb == DocKind::Trace) throw UsageError("distance takes knot or sequence documents");
  if (ka != kb) throw UsageError("operands live in different spaces (knot vs sequence)");
  Scalar d = ka == DocKind::Knot ? distance(parse_knot(ta), parse_knot(tb), m)
                                 : seq_distance(parse_sequence(ta), parse_sequence(tb), m);
  out << to_display(d) << "\n";
  return kOk;
}

int cmd_project(const std::string& path, const std::string& out_path, std::ostream& out) {
  PolynomialKnot knot = certify(parse_knot(load(path)));
  emit(serialize_sequence(project_linear(knot)), out_path, out);
  return kOk;
}

int cmd_embed(const std::string& path, const std::string& out_path, std::ostream& out) {
  emit(serialize_knot(embed_linear(parse_sequence(load(path)))), out_path, out);
  return kOk;
}

int cmd_linearize(const std::string& path, int steps, int depth, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
  PolynomialKnot knot = certify(parse_knot(load(path)), CertifyOptions{depth});
  if (!knot.is_certified()) {
    err << "input is not a certified knot: " << verdict_name(knot.verdict()) << "\n";
    return kFailure;
  }
  HomotopyTrace trace = trace_linearization(knot, steps, CertifyOptions{depth});
  emit(serialize_trace(trace), out_path, out);
  return kOk;
}

int cmd_contract(const std::string& path, int steps, const std::string& out_path, std::ostream& out) {
  emit(serialize_trace(contract_trace(parse_sequence(load(path)), steps)), out_path, out);
  return kOk;
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParameterBoundViolated:
    case ErrorKind::BadExponents:
    case ErrorKind::OutOfRange:
      return kUsage;
    case ErrorKind::Parse:
      return kDataError;
    case ErrorKind::CertificationFailed:
      return kCertificationFailed;
    default:
      return kFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified computations on polynomial knots", "polyknot"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Certify that a knot file is a smooth embedding");
  v->add_option("path", verify.path, "knot file")->required();
  v->add_flag("--oracle", verify.oracle, "also run the brute-force sampling oracle");
  v->add_option("--depth", verify.depth, "box refinement depth limit")->check(CLI::Range(1, 200));
  v->add_option("--oracle-bound", verify.oracle_bound, "oracle grid half-width B (default: 1 + Cauchy bound)");
  v->add_option("--oracle-resolution", verify.oracle_resolution, "oracle grid points per axis")->check(CLI::Range(2, 100000));
  v->add_option("--out", verify.out, "write the certificate document here");

  std::string dist_a, dist_b, metric = "inf";
  auto* d = app.add_subcommand("distance", "Distance between two knots or two sequence points");
  d->add_option("a", dist_a)->required();
  d->add_option("b", dist_b)->required();
  d->add_option("--metric", metric, "inf or an exponent r >= 1");

  std::string proj_path, proj_out;
  auto* p = app.add_subcommand("project", "Linear coefficients of a certified knot");
  p->add_option("path", proj_path)->required();
  p->add_option("--out", proj_out);

  std::string emb_path, emb_out;
  auto* e = app.add_subcommand("embed-linear", "The linear knot t -> (x_1 t, ..., x_n t)");
  e->add_option("path", emb_path)->required();
  e->add_option("--out", emb_out);

  std::string lin_path, lin_out;
  int lin_steps = 11, lin_depth = 40;
  auto* l = app.add_subcommand("linearize", "Trace the linearization homotopy");
  l->add_option("path", lin_path)->required();
  l->add_option("--steps", lin_steps)->check(CLI::Range(2, 100000));
  l->add_option("--depth", lin_depth)->check(CLI::Range(1, 200));
  l->add_option("--out", lin_out);

  std::string con_path, con_out;
  int con_steps = 11;
  auto* c = app.add_subcommand("contract", "Trace the shift and cone contractions of a sequence point");
  c->add_option("path", con_path)->required();
  c->add_option("--steps", con_steps, "samples per leg")->check(CLI::Range(2, 100000));
  c->add_option("--out", con_out);

  WitnessOptions wit;
  auto* w = app.add_subcommand("witness", "Inclusion witnesses and strictness instances between topologies");
  w->add_option("--kind", wit.kind, "p-inf, inf-r, r-s or s-box")
      ->check(CLI::IsMember({"p-inf", "inf-r", "r-s", "s-box"}));
  w->add_option("--n", wit.n, "ambient dimension")->check(CLI::Range(1, 64));
  w->add_option("--r", wit.r);
  w->add_option("--s", wit.s);
  w->add_option("--delta", wit.delta, "strictness mode: radius of the inner ball");
  w->add_option("--k", wit.k, "strictness mode: explicit family index");
  w->add_option("--epsilon", wit.epsilon, "inclusion mode: radius of the outer ball");
  w->add_option("--knot", wit.knot_path, "inclusion mode: center phi (default (t, 0, ..., 0))");
  w->add_option("--point", wit.point_path, "inclusion mode: member psi (default phi)");
  w->add_option("--constraint", wit.constraints, "inclusion mode, p-inf: \"i,j,lo,hi\" (lo/hi may be -inf/inf)");
  w->add_option("--seed", wit.seed);
  w->add_option("--samples", wit.samples)->check(CLI::Range(0, 1000000));
  w->add_option("--out", wit.out);

  PlotOptions plot;
  auto* pl = app.add_subcommand("plot", "CSV or SVG samples of a knot, or one frame per trace sample");
  pl->add_option("path", plot.path)->required();
  pl->add_option("--range", plot.range, "a b")->expected(2);
  pl->add_option("--samples", plot.samples)->check(CLI::Range(2, 10000000));
  pl->add_option("--format", plot.format)->check(CLI::IsMember({"csv", "svg"}));
  pl->add_option("--components", plot.components, "component indices")->expected(1, 64);
  pl->add_option("--out", plot.out, "output file (knot) or directory (trace)");

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& ex) {
    int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*v) return cmd_verify(verify, out);
    if (*d) return cmd_distance(dist_a, dist_b, metric, out);
    if (*p) return cmd_project(proj_path, proj_out, out);
    if (*e) return cmd_embed(emb_path, emb_out, out);
    if (*l) return cmd_linearize(lin_path, lin_steps, lin_depth, lin_out, out, err);
    if (*c) return cmd_contract(con_path, con_steps, con_out, out);
    if (*w) return cmd_witness(wit, out, err);
    if (*pl) return cmd_plot(plot, out, err);
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kUsage;
  } catch (const InputError& ex) {
    err << "error: " << ex.what() << "\n";
    return kNoInput;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kDataError;
  } catch (const Error& ex) {
    err << "error (" << to_string(ex.kind()) << "): " << ex.what() << "\n";
    return exit_for(ex.kind());
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace polyknot::cli

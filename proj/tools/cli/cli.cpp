#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cohq/classifier.hpp"
#include "cohq/errors.hpp"
#include "cohq/kernels.hpp"
#include "grid.hpp"
#include "output.hpp"

namespace cohq::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kInputNormTol = 1e-8;
constexpr std::size_t kTwoQubitDim = 4;

std::optional<std::string> optional_path(const std::string& s) {
  return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

struct ThreadScope {
  explicit ThreadScope(int n) {
    if (n > 0) set_worker_count(n);
  }
  ~ThreadScope() { set_worker_count(0); }
};

json nullable(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json to_json(const MeasureReport& m) {
  return {{"l1_coherence", m.l1_coherence}, {"concurrence", m.concurrence}, {"purity", m.purity}};
}

// --- canonical parameters from flags ------------------------------------------

struct LambdaInput {
  std::vector<double> values;
  bool normalize_last = false;
  double theta = 0.0;
};

void add_lambda_options(CLI::App* cmd, LambdaInput& in) {
  cmd->add_option("--lambdas", in.values, "lambda0..lambda4, comma separated (four with --normalize-last)")
      ->delimiter(',')
      ->required();
  cmd->add_flag("--normalize-last", in.normalize_last, "complete lambda4 from the normalization");
  cmd->add_option("--theta", in.theta, "phase on |100> in radians, within [0, pi]");
}

struct ParsedParams {
  CanonicalThreeQubit params;
  double input_deviation = 0.0;
};

// Inputs within kInputNormTol of unit norm are accepted and rescaled exactly.
ParsedParams read_params(const LambdaInput& in) {
  const std::size_t expected = in.normalize_last ? 4 : 5;
  if (in.values.size() != expected) {
    throw UsageError("--lambdas takes " + std::to_string(expected) + " values" +
                     (in.normalize_last ? " with --normalize-last" : "") + ", got " +
                     std::to_string(in.values.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < in.values.size(); ++i) {
    const double v = in.values[i];
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InvalidStateError("lambda" + std::to_string(i) + " must be a finite non-negative number, got " +
                              format_number(v));
    }
    sum += v * v;
  }

  ParsedParams out;
  out.params.theta = in.theta;
  if (in.normalize_last) {
    out.input_deviation = std::max(0.0, sum - 1.0);
    if (out.input_deviation > kInputNormTol) {
      throw InvalidStateError("squares of lambda0..lambda3 exceed 1 by " + format_number(out.input_deviation));
    }
    const double scale = sum > 1.0 ? 1.0 / std::sqrt(sum) : 1.0;
    for (std::size_t i = 0; i < 4; ++i) out.params.lambda[i] = in.values[i] * scale;
    out.params.lambda[4] = std::sqrt(std::max(0.0, 1.0 - sum));
  } else {
    out.input_deviation = std::abs(sum - 1.0);
    if (out.input_deviation > kInputNormTol || sum == 0.0) {
      throw InvalidStateError("normalization deviation " + format_number(out.input_deviation) +
                              " exceeds " + format_number(kInputNormTol));
    }
    const double scale = 1.0 / std::sqrt(sum);
    for (std::size_t i = 0; i < 5; ++i) out.params.lambda[i] = in.values[i] * scale;
  }
  out.params.validate();
  return out;
}

// --- sample ----------------------------------------------------------------------

struct EnsembleOptions {
  std::size_t n = 100000;
  std::string ensemble = "pure";
  std::size_t rank = 4;
  std::uint64_t seed = 42;
  int threads = 0;
};

void add_ensemble_options(CLI::App* cmd, EnsembleOptions& o) {
  cmd->add_option("--n", o.n, "number of states")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--ensemble", o.ensemble, "pure (Haar pure) or ginibre (GG^dagger / Tr)")
      ->check(CLI::IsMember({"pure", "haar-pure", "ginibre"}))
      ->capture_default_str();
  cmd->add_option("--rank", o.rank, "Ginibre rank; 4 is the Hilbert-Schmidt measure")
      ->check(CLI::Range(std::size_t{1}, kTwoQubitDim))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker count (overrides COHQ_THREADS)")
      ->check(CLI::NonNegativeNumber);
}

EnsembleSpec make_spec(const EnsembleOptions& o) {
  const auto kind = parse_ensemble_kind(o.ensemble);
  EnsembleSpec spec{kind, kind == EnsembleKind::ginibre ? o.rank : 1, o.seed, o.n};
  spec.validate(kTwoQubitDim);
  return spec;
}

int cmd_sample(const EnsembleOptions& o, const std::string& out_path, const std::string& summary_path,
               std::ostream& out, std::ostream& err) {
  ThreadScope threads(o.threads);
  const auto spec = make_spec(o);
  const auto records = theorem1_samples(spec, Execution::parallel);
  const auto summary = summarize(records);
  const auto header = make_header("sample", spec.seed, describe(spec, kTwoQubitDim), spec.count);

  Sink csv(optional_path(out_path), out);
  write_csv_header(csv.stream(), header);
  csv.stream() << "concurrence,l1_coherence\n";
  for (const auto& r : records) {
    csv.stream() << format_number(r.concurrence) << ',' << format_number(r.l1_coherence) << '\n';
  }
  csv.finish();

  const auto& worst = records[summary.min_margin_index];
  json s = {
      {"header", to_json(header)},
      {"tolerance", theorem_tol},
      {"count", summary.count},
      {"violations", summary.violations},
      {"min_margin", summary.min_margin},
      {"min_margin_index", summary.min_margin_index},
      {"min_margin_sample", {{"concurrence", worst.concurrence}, {"l1_coherence", worst.l1_coherence}}},
  };
  // Keep stdout pure CSV when the rows go there.
  Sink sum(optional_path(summary_path), out_path.empty() ? err : out);
  write_json(sum, s);
  return summary.violations == 0 ? exit_ok : exit_violation;
}

// --- canonical -------------------------------------------------------------------

struct Quantity {
  std::string name;
  std::optional<double> analytic;
  double matrix;

  std::optional<double> residual() const {
    return analytic ? std::optional<double>(std::abs(*analytic - matrix)) : std::nullopt;
  }
};

int cmd_canonical(const LambdaInput& in, const std::string& format, std::ostream& out) {
  const auto parsed = read_params(in);
  const auto& p = parsed.params;
  const auto& l = p.lambda;
  const bool family = p.theta == 0.0;

  const auto psi = canonical_state(p);
  const auto rho = pure_to_density(psi);
  const auto rho_ab = reduce_three_qubit(rho, {0, 1});
  const auto rho_ac = reduce_three_qubit(rho, {0, 2});
  const auto rho_a = reduce_three_qubit(rho, {0});
  const auto numeric = canonical_measures_numeric(p);
  const auto obs = observables_expectations(p);
  std::optional<CanonicalMeasures> analytic;
  if (family) analytic = canonical_measures_analytic(p);
  auto pick = [&](double CanonicalMeasures::*field) {
    return analytic ? std::optional<double>((*analytic).*field) : std::nullopt;
  };
  auto closed = [&](std::size_t i) {
    return obs.closed_form ? std::optional<double>((*obs.closed_form)[i]) : std::nullopt;
  };

  const std::vector<Quantity> rows = {
      {"c_ab", pick(&CanonicalMeasures::c_ab), numeric.c_ab},
      {"c_ac", pick(&CanonicalMeasures::c_ac), numeric.c_ac},
      {"coh_ab", pick(&CanonicalMeasures::coh_ab), numeric.coh_ab},
      {"coh_ac", pick(&CanonicalMeasures::coh_ac), numeric.coh_ac},
      {"coh_a", pick(&CanonicalMeasures::coh_a), numeric.coh_a},
      {"tangle", tangle_analytic(p), numeric.tangle},
      {"c_a_bc", 2.0 * l[0] * std::sqrt(l[2] * l[2] + l[3] * l[3] + l[4] * l[4]),
       bipartition_concurrence(psi)},
      {"exp_o", closed(0), obs.exp_o},
      {"exp_o1", closed(1), obs.exp_o1},
      {"exp_o2", closed(2), obs.exp_o2},
  };
  double max_residual = 0.0;
  for (const auto& q : rows) max_residual = std::max(max_residual, q.residual().value_or(0.0));

  const auto header = make_header("canonical", std::nullopt, "canonical-input", 1);
  Sink sink(std::nullopt, out);
  if (format == "csv") {
    auto& os = sink.stream();
    write_csv_header(os, header);
    os << "quantity,analytic,matrix,residual\n";
    auto cell = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
    for (const auto& q : rows) {
      os << q.name << ',' << cell(q.analytic) << ',' << format_number(q.matrix) << ',' << cell(q.residual())
         << '\n';
    }
    os << "ckw_residual,," << format_number(ckw_residual(psi)) << ",\n";
    sink.finish();
    return exit_ok;
  }

  json quantities = json::array();
  for (const auto& q : rows) {
    quantities.push_back(
        {{"name", q.name}, {"analytic", nullable(q.analytic)}, {"matrix", q.matrix}, {"residual", nullable(q.residual())}});
  }
  json j = {
      {"header", to_json(header)},
      {"params", to_json(p)},
      {"input_norm_deviation", parsed.input_deviation},
      {"quantities", quantities},
      {"max_residual", max_residual},
      {"ckw_residual", ckw_residual(psi)},
      {"reduced_states",
       {{"rho_ab", to_json(measure(rho_ab))},
        {"rho_ac", to_json(measure(rho_ac))},
        {"rho_a", {{"l1_coherence", l1_coherence(rho_a)}, {"purity", rho_a.purity()}}}}},
      {"witness_holds", obs.witness_holds},
  };
  write_json(sink, j);
  return exit_ok;
}

// --- classify --------------------------------------------------------------------

json observables_json(const ObservableTriple& t) {
  json j = {{"exp_o", t.exp_o}, {"exp_o1", t.exp_o1}, {"exp_o2", t.exp_o2}, {"witness_holds", t.witness_holds}};
  j["closed_form"] = t.closed_form ? json(*t.closed_form) : json(nullptr);
  return j;
}

template <class Check, class ToJson>
json optional_check(Check&& check, ToJson&& to) {
  try {
    json j = to(check());
    j["applicable"] = true;
    return j;
  } catch (const PreconditionError& e) {
    return {{"applicable", false}, {"reason", e.what()}};
  }
}

int cmd_classify(const LambdaInput& in, std::ostream& out) {
  const auto parsed = read_params(in);
  const auto& p = parsed.params;
  if (p.theta != 0.0) {
    throw InvalidStateError("classification is defined for theta = 0 only, got " + format_number(p.theta));
  }
  const auto report = discriminate(p);
  json j = {{"header", to_json(make_header("classify", std::nullopt, "canonical-input", 1))}};
  j.update(to_json(report));
  j["input_norm_deviation"] = parsed.input_deviation;
  j["monogamy_margin"] = coherence_monogamy_check(p);
  j["result1"] = optional_check([&] { return result1_check(p); },
                                [](const Result1Check& r) -> json {
                                  return {{"lhs", r.lhs},
                                          {"rhs", r.rhs},
                                          {"holds", r.holds},
                                          {"coh_ab", r.coh_ab},
                                          {"coh_ac", r.coh_ac},
                                          {"intermediate_holds", r.intermediate_holds}};
                                });
  j["result2"] = optional_check([&] { return result2_check(p); },
                                [](const Result2Check& r) -> json {
                                  return {{"coh_a", r.coh_a},
                                          {"coh_ac", r.coh_ac},
                                          {"product_minus_square", r.product_minus_square},
                                          {"printed_expansion", r.printed_expansion},
                                          {"expansion_mismatch", r.expansion_mismatch},
                                          {"holds", r.holds}};
                                });
  j["observables"] = observables_json(observables_expectations(p));
  j["parameter_witness"] = optional_check([&] { return parameter_witness(p); },
                                          [](const ParameterWitness& w) -> json {
                                            return {{"lambda_margin", w.lambda_margin},
                                                    {"hypothesis", w.hypothesis},
                                                    {"witness_holds", w.witness_holds},
                                                    {"implication_ok", w.implication_ok}};
                                          });
  Sink sink(std::nullopt, out);
  write_json(sink, j);
  return exit_ok;
}

// --- audit -----------------------------------------------------------------------

// "<dir>/<stem>.worst-<suffix>.json" next to the report, when there is one.
std::optional<std::string> worst_case_path(const std::string& out_path, std::string_view suffix) {
  if (out_path.empty()) return std::nullopt;
  const std::filesystem::path p(out_path);
  return (p.parent_path() / (p.stem().string() + ".worst-" + std::string(suffix) + ".json")).string();
}

DensityMatrix load_two_qubit(const std::string& path) {
  auto rho = read_density_file(path);
  if (rho.dim() != kTwoQubitDim) {
    throw InvalidStateError("expected a two-qubit state (dim 4), got dim " + std::to_string(rho.dim()));
  }
  return rho;
}

json appendix_margins(const DensityMatrix& rho) {
  const double induced = induced_one_norm(rho.matrix());
  const double coh = l1_coherence(rho);
  json readings = json::array();
  for (const auto& [reading, factor] :
       {std::pair{AuditReading::eq1_convention, 1.0}, std::pair{AuditReading::appendix_factor2, 2.0}}) {
    const double margin = factor * coh - induced;
    readings.push_back({{"reading", to_string(reading)}, {"margin", margin}, {"violated", margin < -audit_tol}});
  }
  return {{"induced_one", induced}, {"l1_coherence", coh}, {"concurrence", concurrence(rho)},
          {"purity", rho.purity()}, {"readings", readings}};
}

int audit_state_file(const std::string& target, const std::string& state_file, const std::string& out_path,
                     std::ostream& out) {
  const auto rho = load_two_qubit(state_file);
  json j = {{"header", to_json(make_header("audit", std::nullopt, "state-file", 1))}, {"target", target}};
  int code = exit_ok;
  if (target == "theorem1-chain") {
    const auto report = theorem1_chain(rho);
    j["report"] = to_json(report);
    if (!report.end_to_end().holds) code = exit_violation;
  } else {
    j["state"] = appendix_margins(rho);
  }
  Sink sink(optional_path(out_path), out);
  write_json(sink, j);
  return code;
}

int cmd_audit(const std::string& target, const EnsembleOptions& o, const std::string& state_file,
              const std::string& out_path, std::ostream& out) {
  if (!state_file.empty()) return audit_state_file(target, state_file, out_path, out);

  ThreadScope threads(o.threads);
  const auto spec = make_spec(o);
  json j = {{"header", to_json(make_header("audit", spec.seed, describe(spec, kTwoQubitDim), spec.count))},
            {"target", target}};
  int code = exit_ok;

  if (target == "theorem1-chain") {
    const auto audit = theorem1_chain_audit(spec, Execution::parallel);
    json links = json::array();
    for (std::size_t i = 0; i < audit.links.size(); ++i) {
      const auto& s = audit.links[i];
      links.push_back({{"link", chain_link_names[i]},
                       {"violations", s.violations},
                       {"worst_margin", s.worst_margin},
                       {"worst_index", s.worst_index}});
    }
    const auto& e2e = audit.end_to_end();
    const auto worst = sample_state_at(spec, kTwoQubitDim, e2e.worst_index);
    const auto file = worst_case_path(out_path, "end-to-end");
    if (file) write_density_file(*file, worst);
    j["links"] = links;
    j["end_to_end"] = {
        {"tolerance", theorem_tol},
        {"violations", e2e.violations},
        {"worst_case",
         {{"index", e2e.worst_index},
          {"margin", e2e.worst_margin},
          {"state", json::parse(density_to_json(worst))},
          {"file", file ? json(*file) : json(nullptr)}}},
    };
    if (e2e.violations > 0) code = exit_violation;
  } else {
    auto [a, b] = appendix_a_audit(spec, Execution::parallel);
    json records = json::array();
    for (auto* rec : {&a, &b}) {
      if (rec->worst_case) {
        if (const auto file = worst_case_path(out_path, to_string(rec->reading))) {
          write_density_file(*file, rec->worst_case->state);
          rec->worst_case->file = *file;
        }
      }
      json r = to_json(*rec);
      if (rec->worst_case) r["worst_case"]["purity"] = rec->worst_case->state.purity();
      records.push_back(r);
    }
    j["records"] = records;
    json regression = appendix_margins(werner_state(0.9));
    regression["name"] = "werner p=0.9";
    j["regression"] = regression;
  }

  Sink sink(optional_path(out_path), out);
  write_json(sink, j);
  return code;
}

// --- sweep -----------------------------------------------------------------------

struct SweepOptions {
  std::size_t resolution = 10;
  std::vector<std::size_t> zero;
  std::vector<std::string> equal;
  std::vector<std::string> fix;
  std::string out;
};

GridConstraints read_constraints(const SweepOptions& o, std::string& descriptor) {
  GridConstraints c;
  std::ostringstream desc;
  desc << "simplex-grid resolution=" << o.resolution;
  auto pin = [&](std::size_t i, double v) {
    if (c.fixed[i] && *c.fixed[i] != v) {
      throw InvalidStateError("lambda" + std::to_string(i) + " pinned to two different values");
    }
    c.fixed[i] = v;
  };
  try {
    for (auto i : o.zero) {
      if (i > 4) throw PreconditionError("lambda index must be 0..4, got " + std::to_string(i));
      pin(i, 0.0);
      desc << " lambda" << i << "=0";
    }
    for (const auto& f : o.fix) {
      const auto [i, v] = parse_fix(f);
      pin(i, v);
      desc << " lambda" << i << '=' << format_number(v);
    }
    for (const auto& e : o.equal) {
      const auto pair = parse_equal(e);
      c.equal.push_back(pair);
      desc << " lambda" << pair.first << "=lambda" << pair.second;
    }
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  descriptor = desc.str();
  return c;
}

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  std::string descriptor;
  const auto constraints = read_constraints(o, descriptor);
  const auto points = simplex_grid(o.resolution, constraints);
  if (points.empty()) throw InvalidStateError("constraints admit no grid point (" + descriptor + ")");

  const auto header = make_header("sweep", std::nullopt, descriptor, points.size());
  Sink sink(optional_path(o.out), out);
  auto& os = sink.stream();
  write_csv_header(os, header);
  os << "lambda0,lambda1,lambda2,lambda3,lambda4,c_ab,c_ac,coh_ab,coh_ac,coh_a,tangle,"
        "coherence_difference,lambda3_minus_lambda2,lambda0_plus_lambda1_minus_lambda4,case_label,"
        "tie_broken_label,monogamy_margin,results_applicable,result1_lhs,result1_rhs,result1_holds,"
        "result1_intermediate,result2_coh_a,result2_coh_ac,result2_holds,product_minus_square,"
        "printed_expansion,exp_o,exp_o1,exp_o2,witness_holds\n";

  const auto num = [](double v) { return format_number(v); };
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const auto& p : points) {
    const auto r = discriminate(p);
    const auto& m = r.measures;
    for (double l : p.lambda) os << num(l) << ',';
    os << num(m.c_ab) << ',' << num(m.c_ac) << ',' << num(m.coh_ab) << ',' << num(m.coh_ac) << ','
       << num(m.coh_a) << ',' << num(m.tangle) << ',' << num(r.difference.difference) << ','
       << num(r.difference.lambda32) << ',' << num(r.difference.lambda014) << ',' << to_string(r.case_label)
       << ',' << to_string(r.tie_broken_label) << ',' << num(coherence_monogamy_check(p)) << ',';
    std::optional<Result1Check> r1;
    std::optional<Result2Check> r2;
    try {
      r1 = result1_check(p);
      r2 = result2_check(p);
    } catch (const PreconditionError&) {
    }
    if (r1 && r2) {
      os << "true," << num(r1->lhs) << ',' << num(r1->rhs) << ',' << flag(r1->holds) << ','
         << flag(r1->intermediate_holds) << ',' << num(r2->coh_a) << ',' << num(r2->coh_ac) << ','
         << flag(r2->holds) << ',' << num(r2->product_minus_square) << ',' << num(r2->printed_expansion) << ',';
    } else {
      os << "false,,,,,,,,,,";
    }
    const auto obs = observables_expectations(p);
    os << num(obs.exp_o) << ',' << num(obs.exp_o1) << ',' << num(obs.exp_o2) << ',' << flag(obs.witness_holds)
       << '\n';
  }
  sink.finish();
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherence and entanglement measures for two- and three-qubit states", tool_name};
  app.set_version_flag("--version", std::string(tool_name) + ' ' + tool_version);
  app.require_subcommand(1);

  EnsembleOptions sample_opts;
  std::string sample_out;
  std::string sample_summary;
  auto* sample = app.add_subcommand("sample", "C versus C_l1 over a random two-qubit ensemble (CSV)");
  add_ensemble_options(sample, sample_opts);
  sample->add_option("--out", sample_out, "CSV path (default: stdout)");
  sample->add_option("--summary", sample_summary, "summary JSON path (default: stdout, or stderr if CSV is on stdout)");

  LambdaInput canonical_in;
  std::string canonical_format = "json";
  auto* canonical = app.add_subcommand("canonical", "closed-form and matrix measures of a canonical three-qubit state");
  add_lambda_options(canonical, canonical_in);
  canonical->add_option("--format", canonical_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  LambdaInput classify_in;
  auto* classify = app.add_subcommand("classify", "GHZ/W coherence-difference classification (theta = 0)");
  add_lambda_options(classify, classify_in);

  std::string audit_target;
  EnsembleOptions audit_opts;
  audit_opts.ensemble = "ginibre";
  std::string audit_out;
  std::string audit_state;
  auto* audit = app.add_subcommand("audit", "per-link or per-reading violation counts over an ensemble");
  audit->add_option("--target", audit_target, "theorem1-chain or appendix-a")
      ->required()
      ->check(CLI::IsMember({"theorem1-chain", "appendix-a"}));
  add_ensemble_options(audit, audit_opts);
  audit->add_option("--out", audit_out, "report path; worst-case states are written beside it");
  audit->add_option("--state-file", audit_state, "audit one density matrix from a JSON file instead");

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "measures and labels over a grid on the lambda simplex (CSV)");
  sweep->add_option("--resolution", sweep_opts.resolution, "grid steps per unit of squared amplitude")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}))
      ->capture_default_str();
  sweep->add_option("--zero", sweep_opts.zero, "pin lambda_i to 0 (repeatable)");
  sweep->add_option("--equal", sweep_opts.equal, "tie lambda_i = lambda_j, given as i,j (repeatable)");
  sweep->add_option("--fix", sweep_opts.fix, "pin lambda_i to a value, given as i=v (repeatable)");
  sweep->add_option("--out", sweep_opts.out, "CSV path (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (sample->parsed()) return cmd_sample(sample_opts, sample_out, sample_summary, out, err);
    if (canonical->parsed()) return cmd_canonical(canonical_in, canonical_format, out);
    if (classify->parsed()) return cmd_classify(classify_in, out);
    if (audit->parsed()) return cmd_audit(audit_target, audit_opts, audit_state, audit_out, out);
    return cmd_sweep(sweep_opts, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for more information.\n";
    return exit_usage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const InvalidStateError& e) {
    err << "error: invalid state: " << e.what() << '\n';
    return exit_invalid_state;
  } catch (const PreconditionError& e) {
    err << "error: invalid state: " << e.what() << '\n';
    return exit_invalid_state;
  } catch (const DimensionError& e) {
    err << "error: invalid state: " << e.what() << '\n';
    return exit_invalid_state;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_violation;
  }
}

}  // namespace cohq::cli

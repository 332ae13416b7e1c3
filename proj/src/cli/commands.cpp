// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include "polydisc/commands.hpp"

#include <chrono>
#include <ctime>
#include <functional>
#include <sstream>

#include "../io/json_util.hpp"
#include "polydisc/charfn.hpp"
#include "polydisc/json_io.hpp"
#include "polydisc/kernels.hpp"
#include "polydisc/suite.hpp"

namespace polydisc::cli {

namespace {

using io::json;
using io::number;

constexpr const char* kVersion = "polydisc 0.1.0";
constexpr double kInnerThreshold = 1e-8;
constexpr double kContractivitySlack = 1e-8;
constexpr double kCoincidenceThreshold = 1e-9;
constexpr double kUnitarityThreshold = 1e-10;
constexpr double kRecoveryThreshold = 1e-8;
constexpr double kDilationFormThreshold = 1e-11;

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json config_json(const RunConfig& c) {
  return {{"tolerances",
           {{"structural", c.tol.structural},
            {"rank", c.tol.rank},
            {"psd_clamp", c.tol.psd_clamp},
            {"pure", c.tol.pure}}},
          {"degree", c.degree ? json(*c.degree) : json(nullptr)},
          {"grid_per_axis", c.grid},
          {"seed", c.seed},
          {"window_margin", c.window ? json(*c.window) : json(nullptr)},
          {"format", c.format == Format::Json ? "json" : "csv"}};
}

// Collects a report body and its checks, then renders it.
struct Report {
  std::string command;
  json inputs = json::object();
  json body = json::object();
  std::vector<Check> checks;
  json extra_timing = json::object();
  int exit_code = kExitOk;
  std::optional<json> error;
};

std::string render(const Report& r, const RunConfig& c, double seconds) {
  if (c.format == Format::Csv) {
    std::string out = "check,value,threshold,pass\n";
    for (const auto& chk : r.checks) out += io::check_to_csv(chk) + "\n";
    if (r.error) {
      out += io::check_to_csv({"error: " + (*r.error)["code"].get<std::string>(),
                               std::numeric_limits<double>::quiet_NaN(),
                               std::numeric_limits<double>::quiet_NaN(), false}) + "\n";
    }
    return out;
  }
  json j = r.body;
  j["command"] = r.command;
  j["status"] = r.error ? "error" : "ok";
  j["exit_code"] = r.exit_code;
  j["checks"] = io::checks_to_json(r.checks);
  if (r.error) j["error"] = *r.error;
  json timing = r.extra_timing;
  timing["timestamp"] = timestamp_utc();
  timing["wall_seconds"] = seconds;
  j["provenance"] = {{"version", kVersion},
                     {"kernel_isa", kernels::isa_name(kernels::active_isa())},
                     {"config", config_json(c)},
                     {"inputs", r.inputs},
                     {"timing", std::move(timing)}};
  return j.dump(2) + "\n";
}

json error_json(const Error& e) {
  const ErrorInfo& info = e.info();
  return {{"code", error_code_name(e.code())},
          {"message", e.what()},
          {"i", info.i >= 0 ? json(info.i + 1) : json(nullptr)},
          {"j", info.j >= 0 ? json(info.j + 1) : json(nullptr)},
          {"value", std::isnan(info.value) ? json(nullptr) : number(info.value)}};
}

// Runs `fill`, turning library errors into an error report.
CommandOutput run(const std::string& command, const RunConfig& config,
                  const std::function<void(Report&)>& fill) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = command;
  try {
    config.validate();
    fill(r);
  } catch (const Error& e) {
    r.error = error_json(e);
    r.exit_code = exit_code_for(e.code());
  } catch (const std::exception& e) {
    r.error = json{{"code", "Internal"}, {"message", e.what()}};
    r.exit_code = kExitInvalid;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {r.exit_code, render(r, config, seconds)};
}

json point_json(std::span<const cplx> w) {
  json p = json::array();
  for (cplx z : w) p.push_back(io::complex_to_json(z));
  return p;
}

struct LoadedTuple {
  CTuple tuple;
  std::optional<WindowMask> mask;
  std::string mask_source;
};

LoadedTuple load_tuple(const std::string& path, const RunConfig& c) {
  io::TupleFile f = io::parse_tuple(io::read_file(path), c.tol);
  LoadedTuple out{f.tuple, std::nullopt, "none"};
  if (c.window) {
    if (f.grading) {
      out.mask = io::window_from_grading(*f.grading, *c.window);
      out.mask_source = "grading";
    } else {
      out.mask = io::inferred_window(f.tuple, *c.window);
      out.mask_source = "kernels";
    }
  }
  return out;
}

json classification_json(const Classification& c) {
  json radii = json::array();
  for (double r : c.purity.spectral_radii) radii.push_back(number(r));
  json norms = json::array();
  for (double v : c.norms) norms.push_back(number(v));
  json pair = nullptr;
  if (!c.beurling.holds && c.beurling.worst_i >= 0) pair = json::array({c.beurling.worst_i + 1, c.beurling.worst_j + 1});
  return {{"n", c.n},
          {"dim", c.dim},
          {"is_commuting", c.commuting},
          {"is_contractive", c.contractive},
          {"max_commutator", number(c.max_commutator)},
          {"norms", norms},
          {"is_pure", c.purity.pure},
          {"spectral_radii", radii},
          {"is_szego", c.szego},
          {"szego_min_eigenvalue", number(c.szego_min_eig)},
          {"is_beurling", c.beurling.holds},
          {"beurling_residual", number(c.beurling.residual)},
          {"beurling_worst_pair", pair},
          {"windowed", c.beurling.masked}};
}

double masked_min_eig(const CMatrix& square, const std::optional<WindowMask>& mask,
                      std::size_t n, const Tolerances& tol) {
  CMatrix x = square;
  if (mask) {
    const CMatrix p = mask->block_repeat(n);
    x = p * x * p;
  }
  return min_eigenvalue(hermitian_part(x), tol);
}

json defect_summary_json(const CTuple& t, const std::optional<WindowMask>& mask) {
  json ranks = json::array();
  for (const auto& op : t.ops()) ranks.push_back(classical_defect(op, t.tol()).space.dim());
  const JointDefect joint = joint_defect(t);
  json s = {{"classical_ranks", ranks},
            {"joint_defect_min_eigenvalue", number(joint.min_eig)},
            {"joint_defect_anti_hermitian_residual", number(joint.anti_hermitian_residual)},
            {"commutator_defect_min_eigenvalue", number(commutator_defect(t).min_eig)},
            {"first_kind_rank", nullptr}};
  if (mask) {
    s["windowed_joint_defect_min_eigenvalue"] =
        number(masked_min_eig(joint.square, mask, t.n(), t.tol()));
  }
  if (classify(t).szego) s["first_kind_rank"] = defect_first_kind(t).space.dim();
  return s;
}

}  // namespace

void RunConfig::validate() const {
  tol.validate();
  if (grid < 4) throw Error(ErrorCode::InvalidArgument, "grid must be at least 4");
  if (window && *window < 0) throw Error(ErrorCode::InvalidArgument, "window must be >= 0");
  if (degree && *degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be >= 0");
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotBeurling:
    case ErrorCode::NotSzego:
    case ErrorCode::NotPure:
      return kExitBeurling;
    case ErrorCode::NotInner:
      return kExitSymbol;
    case ErrorCode::NotUnitary:
      return kExitUnitary;
    default:
      return kExitInvalid;
  }
}

CommandOutput cmd_classify(const std::string& tuple_file, const RunConfig& config) {
  return run("classify", config, [&](Report& r) {
    r.inputs["tuple"] = tuple_file;
    const LoadedTuple lt = load_tuple(tuple_file, config);
    const Classification c = classify(lt.tuple, lt.mask);
    r.body["classification"] = classification_json(c);
    r.body["classification"]["window_source"] = lt.mask_source;
    r.body["defect_summary"] = defect_summary_json(lt.tuple, lt.mask);
    const double s = config.tol.structural;
    r.checks.push_back(make_check("max_commutator", c.max_commutator, s));
    r.checks.push_back(make_check("beurling_residual", c.beurling.residual, s));
    r.checks.push_back(make_floor_check("szego_min_eigenvalue", c.szego_min_eig,
                                        -config.tol.psd_clamp));
  });
}

CommandOutput cmd_charfn(const std::string& tuple_file,
                         const std::optional<std::string>& points_file,
                         const RunConfig& config) {
  return run("charfn", config, [&](Report& r) {
    r.inputs["tuple"] = tuple_file;
    r.inputs["points"] = points_file ? json(*points_file) : json(nullptr);
    const LoadedTuple lt = load_tuple(tuple_file, config);
    io::EvalRequest req;
    if (points_file) req = io::parse_eval_request(io::read_file(*points_file));
    const int per_axis = req.per_axis.value_or(config.grid);
    if (per_axis < 4) throw Error(ErrorCode::InvalidArgument, "grid must be at least 4");

    const Classification c = classify(lt.tuple, lt.mask);
    r.body["classification"] = classification_json(c);
    std::optional<CharFn> f;
    try {
      f.emplace(build_charfn(lt.tuple, lt.mask));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotBeurling) throw;
      r.body["defect_summary"] = defect_summary_json(lt.tuple, lt.mask);
      throw;
    }
    json values = json::array();
    json norms = json::array();
    for (const auto& w : req.points) {
      if (w.size() != lt.tuple.n()) {
        throw Error(ErrorCode::ShapeMismatch, "point has the wrong number of coordinates");
      }
      const CMatrix m = f->eval(w);
      norms.push_back(number(spectral_norm(m)));
      values.push_back({{"point", point_json(w)}, {"matrix", io::matrix_to_json(m)}});
    }
    const InnerResidual inner = inner_residual(*f, per_axis);
    const double excess = contractivity_excess(*f, req.points);
    r.body["values"] = std::move(values);
    r.body["charfn_summary"] = {{"input_dim", f->input_dim()},
                                {"output_dim", f->output_dim()},
                                {"grid_per_axis", per_axis},
                                {"inner_residual", number(inner.residual)},
                                {"inner_worst_point", point_json(inner.worst_point)},
                                {"sampled_norms", norms},
                                {"contractivity_excess", number(excess)}};
    r.checks.push_back(make_check("inner_residual", inner.residual, kInnerThreshold));
    r.checks.push_back(make_check("contractivity_excess", excess, kContractivitySlack));
  });
}

CommandOutput cmd_hardy(const std::string& symbol_file, const RunConfig& config) {
  return run("hardy", config, [&](Report& r) {
    r.inputs["symbol"] = symbol_file;
    const InnerSymbol theta = io::parse_symbol(io::read_file(symbol_file));
    const int degree = config.degree.value_or(6);
    const int margin = config.window.value_or(1);
    const InnerResidual gate = theta.torus_inner_residual(config.grid);
    r.body["symbol"] = {{"kind", kind_name(theta.kind())},
                        {"n", theta.n()},
                        {"input_dim", theta.input_dim()},
                        {"output_dim", theta.output_dim()},
                        {"inner_residual", number(gate.residual)},
                        {"inner_worst_point", point_json(gate.worst_point)}};
    if (!(gate.residual <= kInnerThreshold)) {
      throw Error(ErrorCode::NotInner, "symbol is not inner on the torus grid",
                  {.value = gate.residual});
    }
    const QuotientModel m = quotient_model(degree, theta, config.tol);
    const StructuralReport rep = structural_checks(m, margin);
    r.body["model"] = {{"degree", degree},
                       {"window_degree", m.window_degree},
                       {"window_margin", margin},
                       {"exact", m.exact},
                       {"reach", m.reach},
                       {"tail_bound", number(m.tail_bound)},
                       {"hardy_dim", m.space.dim()},
                       {"quotient_dim", rep.quotient_dim},
                       {"submodule_dim", rep.submodule_dim},
                       {"wandering_dim", rep.wandering_dim},
                       {"wandering_dim_reduced", rep.wandering_dim_reduced},
                       {"defect_dim", rep.defect_dim},
                       {"coefficient_dim", rep.coefficient_dim},
                       {"constant_meet_dim", rep.constant_meet_dim},
                       {"minimal", rep.minimal}};
    r.checks = rep.checks;
    r.body["structural_checks"] = io::checks_to_json(rep.checks);

    json growth = json::array();
    const auto dims = ahern_clark_growth(theta, 1, degree, config.tol);
    for (std::size_t k = 0; k < dims.size(); ++k)
      growth.push_back({{"degree", static_cast<int>(k) + 1}, {"quotient_dim", dims[k]}});
    r.body["quotient_growth"] = std::move(growth);

    // Recover the symbol from the compressed shifts on the window.
    if (rep.quotient_dim == 0) {
      r.body["recovery"] = {{"skipped", "trivial quotient"}};
      return;
    }
    try {
      const CharFn f = build_charfn(model_tuple(m), quotient_mask(m, margin));
      gen::Rng rng(config.seed);
      const auto pts = interior_points(rng, theta.n(), 20, 0.9);
      const SymbolRecovery rec = recover_symbol(m, f, pts);
      r.body["recovery"] = {{"residual", number(rec.residual)},
                            {"tau_isometry", number(rec.tau_isometry)},
                            {"tau_star_isometry", number(rec.tau_star_isometry)},
                            {"input_dim", f.input_dim()},
                            {"output_dim", f.output_dim()}};
      r.checks.push_back(make_check("symbol_recovery_residual", rec.residual, kRecoveryThreshold));
    } catch (const Error& e) {
      r.body["recovery"] = {{"error", error_json(e)}};
      r.checks.push_back(make_check("symbol_recovery_residual",
                                    std::numeric_limits<double>::infinity(), kRecoveryThreshold));
    }
  });
}

CommandOutput cmd_dilate(const std::string& tuple_file, const RunConfig& config) {
  return run("dilate", config, [&](Report& r) {
    r.inputs["tuple"] = tuple_file;
    const LoadedTuple lt = load_tuple(tuple_file, config);
    r.body["classification"] = classification_json(classify(lt.tuple, lt.mask));
    const Dilation d = build_dilation(lt.tuple, config.degree);
    const DilationDefects dd = dilation_defects(d);
    r.body["dilation"] = {{"degree", d.degree},
                          {"auto_degree", !config.degree.has_value()},
                          {"coefficient_dim", d.space.coeff_dim()},
                          {"hardy_dim", d.space.dim()},
                          {"tail_bound", number(d.tail_bound)}};
    r.body["dilation_defects"] = {{"isometry", number(dd.isometry)},
                                  {"intertwining", number(dd.intertwining)},
                                  {"minimality", number(dd.minimality)},
                                  {"model_equivalence", number(dd.model_equivalence)},
                                  {"tail_bound", number(dd.tail_bound)},
                                  {"minimality_window", dd.minimality_window}};
    r.checks = dilation_checks(dd);
    const double form = dilation_form_residual(lt.tuple, d);
    r.body["dilation_form_mismatch"] = number(form);
    r.checks.push_back(make_check("dilation_form_mismatch", form,
                                  kDilationFormThreshold + d.tail_bound));
  });
}

CommandOutput cmd_coincide(const std::string& tuple_file, const std::string& unitary_file,
                           const RunConfig& config) {
  return run("coincide", config, [&](Report& r) {
    r.inputs["tuple"] = tuple_file;
    r.inputs["unitary"] = unitary_file;
    const LoadedTuple lt = load_tuple(tuple_file, config);
    const io::UnitarySpec request = io::parse_unitary(io::read_file(unitary_file));
    gen::Rng rng(config.seed);
    CMatrix sigma;
    if (request.matrix) {
      sigma = *request.matrix;
    } else {
      if (*request.random_dim != lt.tuple.dim()) {
        throw Error(ErrorCode::NotUnitary, "unitary does not match the tuple dimension");
      }
      sigma = gen::haar_unitary(rng, *request.random_dim);
    }
    const auto pts = interior_points(rng, lt.tuple.n(), 20, 0.9);
    const CoincidenceResult res = coincidence_from_unitary(lt.tuple, sigma, pts, lt.mask);
    const Coincidence& co = res.coincidence;
    r.body["coincidence"] = {{"residual", number(co.residual)},
                             {"tau", io::matrix_to_json(co.tau)},
                             {"tau_star", io::matrix_to_json(co.tau_star)},
                             {"tau_unitarity", number(co.tau_unitarity)},
                             {"tau_star_unitarity", number(co.tau_star_unitarity)},
                             {"sample_points", pts.size()}};
    r.body["sigma"] = io::matrix_to_json(sigma);
    r.checks.push_back(make_check("coincidence_residual", co.residual, kCoincidenceThreshold));
    r.checks.push_back(make_check("tau_unitarity", co.tau_unitarity, kUnitarityThreshold));
    r.checks.push_back(make_check("tau_star_unitarity", co.tau_star_unitarity, kUnitarityThreshold));
  });
}

CommandOutput cmd_suite(const RunConfig& config) {
  bool all_pass = false;
  CommandOutput out = run("suite", config, [&](Report& r) {
    SuiteConfig sc;
    sc.tol = config.tol;
    sc.seed = config.seed;
    const SuiteReport rep = run_suite(sc);
    json criteria = json::array();
    json runtimes = json::object();
    for (const auto& c : rep.criteria) {
      json metrics = json::object();
      for (const auto& [k, v] : c.metrics) metrics[k] = number(v);
      criteria.push_back({{"id", c.id},
                          {"name", c.name},
                          {"pass", c.pass},
                          {"checks", io::checks_to_json(c.checks)},
                          {"metrics", metrics},
                          {"error", c.error.empty() ? json(nullptr) : json(c.error)}});
      runtimes[std::to_string(c.id) + "_" + c.name] = c.seconds;
      for (const auto& chk : c.checks) {
        Check named = chk;
        named.name = c.name + "." + chk.name;
        r.checks.push_back(std::move(named));
      }
      if (!c.error.empty()) {
        r.checks.push_back({c.name + ".error: " + c.error,
                            std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN(), false});
      }
    }
    r.body["criteria"] = std::move(criteria);
    r.body["all_pass"] = rep.all_pass;
    r.extra_timing["criteria_seconds"] = std::move(runtimes);
    all_pass = rep.all_pass;
    r.exit_code = rep.all_pass ? kExitOk : kExitSuiteFailure;
  });
  return out;
}

std::string without_timing(const std::string& json_report) {
  json j = json::parse(json_report);
  if (j.contains("provenance")) j["provenance"].erase("timing");
  return j.dump(2) + "\n";
}

}  // namespace polydisc::cli

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gframe/gframe.hpp"

namespace gframe::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  int iterations = 5000;
};

json real_list(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(x);
  return out;
}

json index_list(const std::vector<std::size_t>& xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(x);
  return out;
}

json vector_to_json(const Vector& x) {
  json out = json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(json::array({x(i).real(), x(i).imag()}));
  return out;
}

/// Accepts a JSON list whose entries are reals or [re, im] pairs.
Vector parse_signal(const std::string& text) {
  const json j = parse_json(text, "--signal");
  if (!j.is_array() || j.empty()) throw ParseError("--signal: expected a non-empty JSON list");
  Vector x(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    const auto idx = static_cast<Eigen::Index>(i);
    if (e.is_number()) {
      x(idx) = Complex(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      x(idx) = Complex(e[0].get<double>(), e[1].get<double>());
    } else {
      throw ParseError("--signal[" + std::to_string(i) + "]: expected a number or [re, im]");
    }
  }
  return x;
}

json classification_to_json(const SystemClassification& c) {
  json out{{"is_rs", c.is_rs},
           {"is_injective", c.is_injective},
           {"is_projective", c.is_projective},
           {"is_uniform", c.is_uniform},
           {"is_protocol", c.is_protocol},
           {"is_riesz", c.is_riesz},
           {"lower_bound", c.lower_bound},
           {"upper_bound", c.upper_bound},
           {"tolerance", c.tolerance}};
  out["weights"] = c.weights ? real_list(*c.weights) : json(nullptr);
  return out;
}

json error_report_to_json(const ErrorReport& r) {
  return json{{"per_index", real_list(r.per_index)}, {"two_error", r.two_error}, {"worst_case", r.worst_case}};
}

json report(const std::string& command, json inputs, json outputs, const GlobalOptions& g) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"tolerances", json{{"tolerance", g.tolerance}}}};
}

json cmd_analyze(const std::string& path, const GlobalOptions& g) {
  const ReconstructionSystem v = read_system(path);
  const SystemClassification c = classify(v, g.tolerance);
  json outputs{{"classification", classification_to_json(c)},
               {"frame_operator", matrix_to_json(frame_operator(v))},
               {"block_norms", real_list(block_norms(v))},
               {"signature", json{{"m", v.size()}, {"d", v.dim()}, {"total", v.signature().total()}}}};
  if (c.is_projective && c.is_rs) {
    const auto cond = wce_condition(v, g.tolerance);
    outputs["wce_condition"] = cond ? json(*cond) : json(nullptr);
  } else {
    outputs["wce_condition"] = nullptr;
  }
  return report("analyze", json{{"path", path}}, std::move(outputs), g);
}

json cmd_dual(const std::string& path, const std::string& kind, const std::string& out_path, const GlobalOptions& g) {
  const ReconstructionSystem v = read_system(path);
  json outputs;
  std::optional<ReconstructionSystem> w;
  if (kind == "canonical") {
    w = canonical_dual(v, g.tolerance);
  } else if (kind == "two_error") {
    w = optimal_dual_two_error(v, g.tolerance);
  } else {
    const WceResult r = wce_minimize(v, WceOptions{g.iterations, g.seed, g.tolerance});
    w = r.system;
    outputs["best_iteration"] = r.best_iteration;
    outputs["canonical_worst_case"] = error_report(v, canonical_dual(v, g.tolerance)).worst_case;
  }
  const DualCandidate check = verify_dual(*w, v, g.tolerance);
  outputs["system"] = system_to_json(*w);
  outputs["dual_residual"] = check.dual_residual;
  outputs["is_dual"] = check.is_dual();
  outputs["is_projective"] = classify(*w, g.tolerance).is_projective;
  outputs["error_report"] = error_report_to_json(error_report(v, *w));
  if (!out_path.empty()) write_system(out_path, *w);

  json inputs{{"path", path}, {"kind", kind}};
  if (kind == "wce") {
    inputs["iterations"] = g.iterations;
    inputs["seed"] = g.seed;
  }
  if (!out_path.empty()) inputs["out"] = out_path;
  return report("dual", std::move(inputs), std::move(outputs), g);
}

json cmd_erase(const std::string& path, const std::string& dual_path, const std::vector<std::size_t>& mask_indices,
               const std::string& signal_text, const GlobalOptions& g) {
  const ReconstructionSystem v = read_system(path);
  const ReconstructionSystem w = dual_path.empty() ? canonical_dual(v, g.tolerance) : read_system(dual_path);
  require_same_signature(v, w, "erase");
  const DualCandidate check = verify_dual(w, v, g.tolerance);
  if (!check.is_dual()) {
    throw PreconditionError("erase: the decoding system is not a dual of the encoding system (residual " +
                            std::to_string(check.dual_residual) + ")");
  }
  const ErasureMask mask(v.size(), mask_indices);

  json outputs{{"dual_residual", check.dual_residual},
               {"error_report", error_report_to_json(error_report(v, w))}};
  json inputs{{"path", path}, {"dual", dual_path.empty() ? json("canonical") : json(dual_path)},
              {"mask", index_list(mask.erased())}};

  if (!signal_text.empty()) {
    const Vector x = parse_signal(signal_text);
    if (x.size() != v.dim()) throw StructuralError("--signal: length does not match d");
    const auto coeffs = analysis_apply(v, x);
    const Vector x_hat = blind_reconstruct(v, w, coeffs, mask);
    Vector predicted = Vector::Zero(v.dim());
    for (std::size_t j : mask.erased()) predicted += w.block(j).adjoint() * (v.block(j) * x);
    outputs["reconstruction"] = vector_to_json(x_hat);
    outputs["error"] = vector_to_json(x - x_hat);
    outputs["error_norm"] = (x - x_hat).norm();
    outputs["predicted_error_norm"] = predicted.norm();
    inputs["signal"] = vector_to_json(x);
  }
  return report("erase", std::move(inputs), std::move(outputs), g);
}

json cmd_truncate(const std::string& path, const std::vector<std::size_t>& drop, const GlobalOptions& g) {
  const ReconstructionSystem v = read_system(path);
  const TruncationReport t = truncate(v, drop, g.tolerance);
  const CkCondition ck = ck_sufficient_condition(v, drop, g.tolerance);

  json outputs{{"dropped", index_list(t.dropped)},
               {"kept", index_list(t.kept)},
               {"m_j", matrix_to_json(t.m_j)},
               {"m_j_min_singular_value", t.m_j_min_singular_value},
               {"is_rs_after", t.is_rs_after},
               {"s_truncated", matrix_to_json(t.s_truncated)},
               {"s_identity_residual", frobenius_norm(t.s_truncated - t.m_j * frame_operator(v))},
               {"bounds_original", real_list({t.bounds_original.first, t.bounds_original.second})},
               {"ck_condition", json{{"holds", ck.holds}, {"estimate", ck.estimate}}}};
  outputs["lower_bound_estimate"] = t.lower_bound_estimate ? json(*t.lower_bound_estimate) : json(nullptr);
  outputs["bounds_actual"] =
      t.bounds_actual ? real_list({t.bounds_actual->first, t.bounds_actual->second}) : json(nullptr);
  if (t.is_rs_after) {
    const ReconstructionSystem direct = truncated_canonical_dual(v, drop, g.tolerance);
    const ReconstructionSystem via_full = truncated_canonical_dual_from_full(v, drop, g.tolerance);
    outputs["truncated_canonical_dual"] = system_to_json(direct);
    outputs["dual_formula_agreement"] = max_block_distance(direct, via_full);
  } else {
    outputs["truncated_canonical_dual"] = nullptr;
  }
  return report("truncate", json{{"path", path}, {"drop", index_list(t.dropped)}}, std::move(outputs), g);
}

json cmd_approx(const std::string& path, const std::string& out_path, const GlobalOptions& g) {
  const ReconstructionSystem s = read_system(path);
  const NearestProjective np = nearest_projective(s, g.tolerance);
  if (!out_path.empty()) write_system(out_path, np.system);
  json inputs{{"path", path}};
  if (!out_path.empty()) inputs["out"] = out_path;
  return report("approx", std::move(inputs),
                json{{"system", system_to_json(np.system)},
                     {"weights", real_list(np.weights)},
                     {"distance", np.distance}},
                g);
}

json cmd_fixtures(const std::string& name, const std::string& out_path, const GlobalOptions& g) {
  const auto fixtures = example_fixtures();
  json names = json::array();
  for (const auto& [n, _] : fixtures) names.push_back(n);

  json inputs = json::object();
  json outputs{{"available", names}};
  if (!name.empty()) {
    inputs["name"] = name;
    const auto it = fixtures.find(name);
    if (it == fixtures.end()) throw StructuralError("fixtures: unknown fixture \"" + name + "\"");
    if (out_path.empty()) {
      outputs["system"] = system_to_json(it->second);
    } else {
      write_system(out_path, it->second);
      inputs["out"] = out_path;
      outputs["written"] = json::array({out_path});
    }
  } else if (!out_path.empty()) {
    inputs["out"] = out_path;
    std::filesystem::create_directories(out_path);
    json written = json::array();
    for (const auto& [n, sys] : fixtures) {
      const auto file = std::filesystem::path(out_path) / (n + ".json");
      write_system(file, sys);
      written.push_back(file.string());
    }
    outputs["written"] = std::move(written);
  }
  return report("fixtures", std::move(inputs), std::move(outputs), g);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reconstruction systems (g-frames): duals, erasures, truncation and projective approximation"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--tolerance", g.tolerance, "Threshold for rank and equality tests")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for stochastic routines")->capture_default_str();
  app.add_option("--iterations", g.iterations, "Iterations of the worst-case error minimizer")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  std::string path;
  std::string kind = "canonical";
  std::string out_path;
  std::string dual_path;
  std::string signal;
  std::string name;
  std::vector<std::size_t> indices;

  auto* analyze = app.add_subcommand("analyze", "Classify a system and report its frame operator and bounds");
  analyze->add_option("path", path, "RS JSON file")->required();

  auto* dual = app.add_subcommand("dual", "Compute a dual system");
  dual->add_option("path", path, "RS JSON file")->required();
  dual->add_option("--kind", kind, "canonical | two_error | wce")
      ->capture_default_str()
      ->check(CLI::IsMember({"canonical", "two_error", "wce"}));
  dual->add_option("--out", out_path, "Also write the dual to this RS JSON file");

  auto* erase = app.add_subcommand("erase", "Blind reconstruction with erased packets");
  erase->add_option("path", path, "RS JSON file (encoder)")->required();
  erase->add_option("--dual", dual_path, "RS JSON file of the decoding dual (default: canonical dual)");
  erase->add_option("--mask", indices, "Comma-separated erased packet indices (0-based)")->delimiter(',');
  erase->add_option("--signal", signal, "Signal as a JSON list of reals or [re, im] pairs");

  auto* trunc = app.add_subcommand("truncate", "Drop a known set of blocks and test stability");
  trunc->add_option("path", path, "RS JSON file")->required();
  trunc->add_option("--drop", indices, "Comma-separated block indices to drop (0-based)")->delimiter(',');

  auto* approx = app.add_subcommand("approx", "Nearest projective system");
  approx->add_option("path", path, "RS JSON file")->required();
  approx->add_option("--out", out_path, "Also write the result to this RS JSON file");

  auto* fixtures = app.add_subcommand("fixtures", "List or export the worked-example systems");
  fixtures->add_option("--name", name, "Fixture name");
  fixtures->add_option("--out", out_path, "Output file (with --name) or directory");

  for (auto* sub : {analyze, dual, erase, trunc, approx, fixtures}) sub->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    json r;
    if (analyze->parsed()) {
      r = cmd_analyze(path, g);
    } else if (dual->parsed()) {
      r = cmd_dual(path, kind, out_path, g);
    } else if (erase->parsed()) {
      r = cmd_erase(path, dual_path, indices, signal, g);
    } else if (trunc->parsed()) {
      r = cmd_truncate(path, indices, g);
    } else if (approx->parsed()) {
      r = cmd_approx(path, out_path, g);
    } else {
      r = cmd_fixtures(name, out_path, g);
    }
    out << dump_deterministic(r) << '\n';
    return kSuccess;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const StructuralError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPreconditionFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace gframe::cli

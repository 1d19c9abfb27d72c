// Copyright 2026 The coherence-lab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohlab/interferometer.hpp"
#include "cohlab/io.hpp"
#include "cohlab/measures.hpp"
#include "cohlab/verify.hpp"

namespace {

using namespace cohlab;

// Exit-code contract: 0 ok, 2 parse/validation failure, 3 dimension
// mismatch, 4 formula/simulation mismatch, 5 verification-suite failure.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitOracle = 4;
constexpr int kExitSuite = 5;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("COHERENCE_LAB_SEED")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return value;
  }
  return kDefaultSeed;
}

std::string format_exp(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

struct MeasureArgs {
  std::string state_a;
  std::string state_b;
  std::string which = "sp";
  std::string format = "text";
  std::uint64_t seed = default_seed();
};

int run_measure(const MeasureArgs& args) {
  const DensityMatrix rho_a = load_document(args.state_a).as_state();
  const DensityMatrix rho_b = load_document(args.state_b).as_state();
  const MeasureKind kind = parse_measure_kind(args.which);
  const MeasureReport report = measure_with_certificate(rho_a, rho_b, kind, args.seed);
  if (args.format == "json") {
    nlohmann::json j{{"measure", measure_kind_name(kind)},
                     {"value", report.value},
                     {"value_fixed", format_value(report.value)},
                     {"optimizer", report.optimizer_note},
                     {"certificate_gap", report.certificate_gap},
                     {"samples", report.samples}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "measure      " << measure_kind_name(kind) << "\n";
    std::cout << "value        " << format_value(report.value) << "\n";
    std::cout << "optimizer    " << report.summary() << "\n";
    std::cout << "certificate  gap " << format_exp(report.certificate_gap) << " over "
              << report.samples << " samples\n";
  }
  return kExitOk;
}

struct InterfereArgs {
  std::string gluing;
  std::string input;
  std::string shift;
  int scan = 0;
  double tolerance = 1e-8;
  std::string format = "text";
};

double mixed_probability(const GluedDilation& dilation, const DensityMatrix& rho,
                         const std::optional<Matrix>& shift, double phi) {
  InterferometerConfig cfg;
  cfg.phase = phi;
  cfg.variable_shift = shift;
  const PureDecomposition decomp = spectral_decomposition(rho);
  double acc = 0.0;
  double weight = 0.0;
  for (const Vector& v : decomp.vectors) {
    const double w = v.squaredNorm();
    acc += w * simulate(dilation, PureState{v / v.norm()}, cfg);
    weight += w;
  }
  return acc / weight;
}

int run_interfere(const InterfereArgs& args) {
  const Document doc = load_document(args.gluing);
  const DensityMatrix rho = load_document(args.input).as_state();
  std::optional<Matrix> shift;
  if (!args.shift.empty()) {
    shift = load_document(args.shift).as_unitary();
  }

  Complex f_formula;
  GluedDilation dilation;
  if (doc.kind == DocKind::GluingLsp) {
    const LSPGluing& g = doc.as_gluing_lsp();
    f_formula = shift ? generalized_interference(lsp_to_sp(g), rho, *shift)
                      : interference_lsp(g, rho);
    dilation = build_lsp_dilation(g);
  } else if (doc.kind == DocKind::GluingSp) {
    const SPGluing& g = doc.as_gluing_sp();
    f_formula = shift ? generalized_interference(g, rho, *shift)
                      : interference_sp(g, rho);
    dilation = build_sp_dilation(g);
  } else {
    throw ParseError("interfere needs a gluing_lsp or gluing_sp document");
  }

  const PhaseScanResult scan = phase_scan_density(dilation, rho, shift);
  const InterferencePattern formula = pattern_from_amplitude(f_formula);
  const double diff = std::abs(f_formula - scan.pattern.amplitude);

  std::vector<std::pair<double, double>> extra;
  for (int i = 0; i < args.scan; ++i) {
    const double phi = 2.0 * 3.14159265358979323846 * i / args.scan;
    extra.emplace_back(phi, mixed_probability(dilation, rho, shift, phi));
  }

  if (args.format == "json") {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& [phi, p] : extra) {
      samples.push_back({phi, p});
    }
    nlohmann::json j{
        {"formula", {{"visibility", formula.visibility}, {"phase", formula.phase}}},
        {"simulation",
         {{"visibility", scan.pattern.visibility}, {"phase", scan.pattern.phase}}},
        {"difference", diff},
        {"samples", samples}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "formula      v = " << format_value(formula.visibility)
              << "  gamma = " << format_value(formula.phase) << "\n";
    std::cout << "simulation   v = " << format_value(scan.pattern.visibility)
              << "  gamma = " << format_value(scan.pattern.phase) << "\n";
    std::cout << "difference   " << format_exp(diff) << "\n";
    for (const auto& [phi, p] : extra) {
      std::cout << "sample       phi = " << format_value(phi)
                << "  p_A = " << format_value(p) << "\n";
    }
  }
  if (diff > args.tolerance) {
    std::cerr << "formula/simulation difference " << format_exp(diff)
              << " exceeds tolerance " << format_exp(args.tolerance) << "\n";
    return kExitOracle;
  }
  return kExitOk;
}

struct VerifyArgs {
  int dim = 2;
  int trials = 100;
  std::uint64_t seed = default_seed();
  std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
  if (args.dim < 2 || args.dim > 4) {
    std::cerr << "verify: --dim must be in 2..4\n";
    return kExitParse;
  }
  if (args.trials < 0) {
    std::cerr << "verify: --trials must be nonnegative\n";
    return kExitParse;
  }
  const std::vector<SuiteResult> results = run_verification(args.dim, args.trials, args.seed);
  const SuiteResult* first_failure = nullptr;
  if (args.format == "json") {
    nlohmann::json suites = nlohmann::json::array();
    for (const SuiteResult& r : results) {
      suites.push_back({{"suite", r.name},
                        {"max_deviation", r.max_deviation},
                        {"tolerance", r.tolerance},
                        {"passed", r.passed}});
      if (!r.passed && !first_failure) first_failure = &r;
    }
    nlohmann::json j{{"dim", args.dim},
                     {"trials", args.trials},
                     {"seed", args.seed},
                     {"suites", suites},
                     {"passed", first_failure == nullptr}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const SuiteResult& r : results) {
      std::printf("%-7s %-34s max deviation %s (tolerance %.0e)\n",
                  r.passed ? "ok" : "FAIL", r.name.c_str(),
                  format_exp(r.max_deviation).c_str(), r.tolerance);
      if (!r.passed && !first_failure) first_failure = &r;
    }
    if (!first_failure) {
      std::printf("all %zu suites passed (dim %d, trials %d, seed %llu)\n", results.size(),
                  args.dim, args.trials, static_cast<unsigned long long>(args.seed));
    }
  }
  if (first_failure) {
    std::cerr << "suite failed: " << first_failure->name << "\n";
    return kExitSuite;
  }
  return kExitOk;
}

int run_distinguish_demo(const std::string& format) {
  // Two realizations of the qubit transverse-relaxation channel: a projective
  // measurement in the computational basis versus a Hadamard on the ancilla
  // followed by a conditioned sigma_z.
  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  const KrausChannel measure_like = validate_channel({p0, p1});

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix sigma_z = Matrix::Identity(2, 2);
  sigma_z(1, 1) = -1.0;
  const KrausChannel hadamard_like =
      validate_channel({inv_sqrt2 * Matrix::Identity(2, 2), inv_sqrt2 * sigma_z});

  const double choi_distance = max_abs_diff(choi_matrix(measure_like),
                                            choi_matrix(hadamard_like));

  Vector e0 = Vector::Zero(2);
  e0(0) = 1.0;
  Vector coeff1 = Vector::Ones(1);
  Vector coeff2 = Vector::Zero(2);
  coeff2(0) = 1.0;

  const LSPGluing gluing_a =
      make_lsp_gluing(identity_channel(2), measure_like, coeff1, coeff2);
  const LSPGluing gluing_b =
      make_lsp_gluing(identity_channel(2), hadamard_like, coeff1, coeff2);
  const double vis_a = max_visibility_over_inputs(build_lsp_dilation(gluing_a));
  const double vis_b = max_visibility_over_inputs(build_lsp_dilation(gluing_b));

  if (format == "json") {
    nlohmann::json j{{"choi_distance", choi_distance},
                     {"max_visibility_a", vis_a},
                     {"max_visibility_b", vis_b},
                     {"distinguishable", std::abs(vis_a - vis_b) > 1e-6}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "marginal Choi distance   " << format_exp(choi_distance) << "\n";
    std::cout << "max visibility (a)       " << format_value(vis_a) << "\n";
    std::cout << "max visibility (b)       " << format_value(vis_b) << "\n";
    std::cout << "verdict: identical marginal channels, tomography on the internal"
                 " state sees no difference; the interferometer separates them by "
              << format_value(std::abs(vis_a - vis_b)) << " in visibility\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence-lab: interferometric fidelity and coherence measures"};
  app.require_subcommand(1);

  MeasureArgs measure_args;
  CLI::App* measure = app.add_subcommand(
      "measure", "Closed-form measure between two states with a certificate");
  measure->add_option("--state-a", measure_args.state_a, "state document (kind=state)")
      ->required();
  measure->add_option("--state-b", measure_args.state_b, "state document (kind=state)")
      ->required();
  measure->add_option("--measure", measure_args.which, "lsp | sp | glsp | gsp")
      ->check(CLI::IsMember({"lsp", "sp", "glsp", "gsp"}));
  measure->add_option("--seed", measure_args.seed, "certificate search seed");
  measure->add_option("--format", measure_args.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  InterfereArgs interfere_args;
  CLI::App* interfere = app.add_subcommand(
      "interfere", "Evaluate a gluing's interference and cross-check the dilation");
  interfere->add_option("--gluing", interfere_args.gluing, "gluing document")->required();
  interfere->add_option("--input", interfere_args.input, "input state document")
      ->required();
  interfere->add_option("--shift", interfere_args.shift, "unitary document (path B shift)");
  interfere->add_option("--scan", interfere_args.scan, "print N extra (phi, p_A) samples")
      ->check(CLI::NonNegativeNumber);
  interfere->add_option("--tolerance", interfere_args.tolerance,
                        "formula/simulation mismatch threshold");
  interfere->add_option("--format", interfere_args.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run the seeded property suites");
  verify->add_option("--dim", verify_args.dim, "internal dimension (2..4)");
  verify->add_option("--trials", verify_args.trials, "trials per suite");
  verify->add_option("--seed", verify_args.seed, "root seed");
  verify->add_option("--format", verify_args.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string demo_format = "text";
  CLI::App* demo = app.add_subcommand(
      "distinguish-demo",
      "Two dilations of the transverse-relaxation channel the interferometer separates");
  demo->add_option("--format", demo_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (measure->parsed()) return run_measure(measure_args);
    if (interfere->parsed()) return run_interfere(interfere_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (demo->parsed()) return run_distinguish_demo(demo_format);
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

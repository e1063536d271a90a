// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "isotensor/basis.hpp"
#include "isotensor/closure.hpp"
#include "isotensor/isomer.hpp"
#include "isotensor/json_io.hpp"
#include "isotensor/kronecker.hpp"
#include "isotensor/rational_matrix.hpp"
#include "isotensor/rng.hpp"
#include "isotensor/rotations.hpp"

namespace isotensor::cli {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
  if (flag_seed) return *flag_seed;
  if (const char* env = std::getenv("ISOTENSOR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("ISOTENSOR_SEED", "not a valid unsigned integer");
    }
  }
  return 1;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text;
  if (!f) throw std::invalid_argument("failed writing output file: " + out_path);
}

std::size_t count_nonzero(const DenseTensor& t) {
  std::size_t n = 0;
  for (const auto& e : t.entries())
    if (!e.is_zero()) ++n;
  return n;
}

RationalMatrix isomer_component_matrix(const IsomerSet& set, int dim) {
  RationalMatrix m;
  for (const auto& iso : set.isomers) m.append_row(evaluate_isomer(iso, dim).entries());
  return m;
}

// --- isomers ---------------------------------------------------------------

struct IsomersOptions {
  int order = 0;
  std::optional<int> dim;
  std::string format = "json";
};

int cmd_isomers(const IsomersOptions& opt, std::ostream& out) {
  const IsomerSet set = enumerate_isomers(opt.order);
  if (opt.format == "table") {
    out << "order " << set.order << ": " << set.count() << " isomers\n";
    for (std::size_t i = 0; i < set.count(); ++i)
      out << i << ": " << set.isomers[i].subscript_string() << "\n";
    return kExitPass;
  }
  nlohmann::json j = isomer_set_to_json(set);
  if (opt.dim) j["dim"] = *opt.dim;
  out << dump_json(j);
  return kExitPass;
}

// --- rank ------------------------------------------------------------------

struct RankOptions {
  int order = 0;
  int dim = 3;
};

int cmd_rank(const RankOptions& opt, std::ostream& out) {
  const IsomerSet set = enumerate_isomers(opt.order);
  const std::size_t r = rank(isomer_component_matrix(set, opt.dim));
  out << dump_json(nlohmann::json{{"order", opt.order},
                                  {"dim", opt.dim},
                                  {"count", set.count()},
                                  {"rank", r},
                                  {"nullity", set.count() - r}});
  return kExitPass;
}

// --- basis -----------------------------------------------------------------

struct BasisOptions {
  std::string degree = "both";
  std::string out_path;
};

int cmd_basis(const BasisOptions& opt, std::ostream& out, std::ostream& err) {
  nlohmann::json full = basis_export_json();
  nlohmann::json j;
  if (opt.degree == "1") j["degree_1"] = full["degree_1"];
  else if (opt.degree == "2") j["degree_2"] = full["degree_2"];
  else j = full;
  emit(dump_json(j), opt.out_path, out);
  // counts go beside the payload: stdout stays pure JSON in streaming mode
  std::ostream& info = opt.out_path.empty() ? err : out;
  if (j.contains("degree_1")) info << "degree_1: " << j["degree_1"].size() << " terms\n";
  if (j.contains("degree_2")) info << "degree_2: " << j["degree_2"].size() << " terms\n";
  if (!opt.out_path.empty()) out << "wrote " << opt.out_path << "\n";
  return kExitPass;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::string identity;
  int trials = 20;
  std::optional<std::uint64_t> seed;
  std::string input_path;  // a4 fixture override
};

struct VerifyOutcome {
  std::size_t max_nonzero = 0;
  std::size_t trials_run = 0;
  nlohmann::json counterexample;  // null unless a failure was recorded

  // Feeds one residual that must be exactly zero; on the first failure the
  // witness is serialized into the report.
  void observe(const DenseTensor& residual, const std::function<nlohmann::json()>& witness) {
    const std::size_t nz = count_nonzero(residual);
    if (nz > 0 && counterexample.is_null()) counterexample = witness();
    max_nonzero = std::max(max_nonzero, nz);
  }
};

std::vector<DenseTensor> degenerate_symmetric_fixtures() {
  return {DenseTensor(3, 2), DenseTensor::identity(3),
          DenseTensor::diagonal({Rational(1), Rational(1), Rational(2)})};
}

void verify_det4(VerifyOutcome& o) {
  const DenseTensor g = gen_kronecker(GenKroneckerSpec::alternating(), 3);
  o.observe(g, [] { return nlohmann::json{{"what", "k=4 determinant tensor has nonzero components"}}; });
  o.trials_run = 1;
}

void verify_quad_identity(QuadIdentity which, VerifyOutcome& o, int trials, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<DenseTensor> samples = degenerate_symmetric_fixtures();
  for (int t = 0; t < trials; ++t) samples.push_back(random_symmetric(rng));
  for (const auto& T : samples) {
    const auto witness = [&] { return nlohmann::json{{"T", tensor_to_json(T)}}; };
    o.observe(grouped_expansion(which, T), witness);
    o.observe(verify_grouped_expansion(which, T), witness);
  }
  o.trials_run = samples.size();
}

void verify_rivlin(VerifyOutcome& o, int trials, std::uint64_t seed, const std::string& input_path) {
  if (!input_path.empty()) {
    const nlohmann::json j = load_json_file(input_path);
    const DenseTensor T = tensor_from_json(j.at("T"));
    const DenseTensor S = tensor_from_json(j.at("S"));
    o.observe(verify_rivlin_identity(T, S, /*strict=*/false), [&] {
      return nlohmann::json{{"T", tensor_to_json(T)}, {"S", tensor_to_json(S)}};
    });
    o.trials_run = 1;
    return;
  }
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const DenseTensor T = random_symmetric(rng);
    const DenseTensor S = random_tracefree_symmetric(rng);
    o.observe(verify_rivlin_identity(T, S), [&] {
      return nlohmann::json{{"T", tensor_to_json(T)}, {"S", tensor_to_json(S)}};
    });
  }
  o.trials_run = static_cast<std::size_t>(trials);
}

void verify_dual_path(VerifyOutcome& o, int trials, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const RepresentationModel model = RepresentationModel::random(rng);
    const DenseTensor T = random_symmetric(rng);
    const DenseTensor U = random_tracefree_matrix(rng);
    const DualPathResult r = dual_path_check(model, T, U);
    o.observe(r.lhs - r.rhs, [&] {
      return nlohmann::json{{"T", tensor_to_json(T)},
                            {"U", tensor_to_json(U)},
                            {"lhs", tensor_to_json(r.lhs)},
                            {"rhs", tensor_to_json(r.rhs)}};
    });
  }
  o.trials_run = static_cast<std::size_t>(trials);
}

void verify_frame(VerifyOutcome& o, int trials, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::vector<DenseTensor> rotations = proper_signed_permutations();
  for (int t = 0; t < trials; ++t) {
    ClosureCoefficients a = ClosureCoefficients::zero();
    for (auto& c : a.a) c = random_rational(rng);
    const DenseTensor T = random_symmetric(rng);
    const DenseTensor U = random_tracefree_matrix(rng);
    const DenseTensor phi = evaluate_closure(a, ReynoldsStress::from_tensor(T),
                                             VelocityGradient::from_tensor(U));
    for (const auto& Q : rotations) {
      const DenseTensor Qt = transpose(Q);
      const DenseTensor rotated = evaluate_closure(
          a, ReynoldsStress::from_tensor(matmul(matmul(Q, T), Qt)),
          VelocityGradient::from_tensor(matmul(matmul(Q, U), Qt)));
      o.observe(rotated - matmul(matmul(Q, phi), Qt), [&] {
        return nlohmann::json{
            {"Q", tensor_to_json(Q)}, {"T", tensor_to_json(T)}, {"U", tensor_to_json(U)}};
      });
    }
  }
  o.trials_run = static_cast<std::size_t>(trials) * rotations.size();
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(opt.seed);
  if (opt.trials < 1) throw CLI::ValidationError("--trials", "must be at least 1");
  if (!opt.input_path.empty() && opt.identity != "a4")
    throw CLI::ValidationError("--input", "fixture input is only supported for identity a4");

  VerifyOutcome o;
  if (opt.identity == "det4") verify_det4(o);
  else if (opt.identity == "eq1_10") verify_quad_identity(QuadIdentity::AlternatingSlots, o, opt.trials, seed);
  else if (opt.identity == "eq1_11") verify_quad_identity(QuadIdentity::FrontPairedSlots, o, opt.trials, seed);
  else if (opt.identity == "a4") verify_rivlin(o, opt.trials, seed, opt.input_path);
  else if (opt.identity == "dual_path") verify_dual_path(o, opt.trials, seed);
  else if (opt.identity == "frame") verify_frame(o, opt.trials, seed);
  else throw CLI::ValidationError("--identity", "unknown identity: " + opt.identity);

  nlohmann::json report{{"identity", opt.identity},
                        {"trials", o.trials_run},
                        {"seed", seed},
                        {"max_residual_entries_nonzero", o.max_nonzero},
                        {"pass", o.max_nonzero == 0}};
  if (o.max_nonzero != 0) report["counterexample"] = o.counterexample;
  out << dump_json(report);
  return o.max_nonzero == 0 ? kExitPass : kExitFail;
}

// --- closure ---------------------------------------------------------------

struct ClosureOptions {
  std::string input_path;
  std::string out_path;
  std::string format = "json";
  bool deviatorize = false;
};

int cmd_closure(const ClosureOptions& opt, std::ostream& out, std::ostream& err) {
  const ClosureInput input = closure_input_from_json(load_json_file(opt.input_path));
  const ReynoldsStress stress = ReynoldsStress::from_tensor(input.T);
  const DenseTensor U = opt.deviatorize ? deviatoric_part(input.U) : input.U;
  const VelocityGradient gradient = VelocityGradient::from_tensor(U);
  if (!gradient.incompressible()) {
    err << "closure: tr U != 0; pass --deviatorize to project the input explicitly\n";
    return kExitFail;
  }
  const DenseTensor phi = evaluate_closure(input.resolved_coefficients(), stress, gradient);
  const ClosureChecks checks{is_symmetric(phi), gradient.incompressible(), stress.realizable()};
  if (opt.format == "table") {
    std::ostringstream text;
    text << "phi =\n";
    for (int i = 0; i < 3; ++i) {
      text << " ";
      for (int j = 0; j < 3; ++j) text << " " << phi.at({i, j}).str();
      text << "\n";
    }
    text << "symmetric: " << (checks.symmetric ? "yes" : "no")
         << ", incompressible: " << (checks.incompressible ? "yes" : "no")
         << ", realizable T: " << (checks.realizable_T ? "yes" : "no") << "\n";
    emit(text.str(), opt.out_path, out);
  } else {
    emit(dump_json(closure_output_json(phi, checks)), opt.out_path, out);
  }
  return kExitPass;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact isotropic tensor algebra and closure evaluation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ISOTENSOR_VERSION));

  IsomersOptions isomers_opt;
  auto* isomers = app.add_subcommand("isomers", "enumerate delta isomers of an even order");
  isomers->add_option("--order", isomers_opt.order, "tensor order (even, 2..10)")->required();
  isomers->add_option("--dim", isomers_opt.dim, "annotate the listing with a dimension");
  isomers->add_option("--emit", isomers_opt.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  RankOptions rank_opt;
  auto* rank_cmd = app.add_subcommand("rank", "rank and nullity of the flattened isomers");
  rank_cmd->add_option("--order", rank_opt.order, "tensor order (even, 2..10)")->required();
  rank_cmd->add_option("--dim", rank_opt.dim, "spatial dimension")->capture_default_str();

  BasisOptions basis_opt;
  auto* basis_cmd = app.add_subcommand("basis", "export the representation basis");
  basis_cmd->add_option("--degree", basis_opt.degree, "1, 2 or both")
      ->check(CLI::IsMember({"1", "2", "both"}))
      ->capture_default_str();
  basis_cmd->add_option("--out", basis_opt.out_path, "write JSON here instead of stdout");

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify", "run an exact identity check");
  verify_cmd
      ->add_option("--identity", verify_opt.identity,
                   "one of det4, eq1_10, eq1_11, a4, dual_path, frame")
      ->required()
      ->check(CLI::IsMember({"det4", "eq1_10", "eq1_11", "a4", "dual_path", "frame"}));
  verify_cmd->add_option("--trials", verify_opt.trials, "random trials")->capture_default_str();
  verify_cmd->add_option("--seed", verify_opt.seed, "RNG seed (falls back to ISOTENSOR_SEED, then 1)");
  verify_cmd->add_option("--input", verify_opt.input_path, "fixture file for identity a4 ({\"T\":…,\"S\":…})");

  ClosureOptions closure_opt;
  auto* closure_cmd = app.add_subcommand("closure", "evaluate a closure model on T and U");
  closure_cmd->add_option("--input", closure_opt.input_path, "input JSON path")->required();
  closure_cmd->add_option("--out", closure_opt.out_path, "write output here instead of stdout");
  closure_cmd->add_option("--emit", closure_opt.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  closure_cmd->add_flag("--deviatorize", closure_opt.deviatorize,
                        "subtract (tr U / 3) I from U before evaluating");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (isomers->parsed()) return cmd_isomers(isomers_opt, out);
    if (rank_cmd->parsed()) return cmd_rank(rank_opt, out);
    if (basis_cmd->parsed()) return cmd_basis(basis_opt, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_opt, out);
    if (closure_cmd->parsed()) return cmd_closure(closure_opt, out, err);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const CompressibleInputError& e) {
    err << e.what() << "\n";
    return kExitFail;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "no subcommand given\n";
  return kExitUsage;
}

}  // namespace isotensor::cli

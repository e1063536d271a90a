// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: every claim the library is built around, checked end to
// end with exact arithmetic and zero tolerance. One line per criterion;
// nonzero exit if anything fails.

#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "isotensor/basis.hpp"
#include "isotensor/closure.hpp"
#include "isotensor/isomer.hpp"
#include "isotensor/json_io.hpp"
#include "isotensor/kronecker.hpp"
#include "isotensor/rational_matrix.hpp"
#include "isotensor/rng.hpp"
#include "isotensor/rotations.hpp"

using namespace isotensor;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

RationalMatrix isomer_component_matrix(const IsomerSet& set, int dim) {
  RationalMatrix m;
  for (const auto& iso : set.isomers) m.append_row(evaluate_isomer(iso, dim).entries());
  return m;
}

std::vector<DenseTensor> degenerate_fixtures() {
  return {DenseTensor(3, 2), DenseTensor::identity(3),
          DenseTensor::diagonal({Rational(1), Rational(1), Rational(2)})};
}

// ---- criteria ----

Check criterion_isomer_counts() {
  Check c;
  const auto start = Clock::now();
  c.require(enumerate_isomers(2).count() == 1, "order 2 count != 1");
  c.require(enumerate_isomers(4).count() == 3, "order 4 count != 3");
  c.require(enumerate_isomers(6).count() == 15, "order 6 count != 15");
  c.require(enumerate_isomers(8).count() == 105, "order 8 count != 105");
  const double secs = seconds_since(start);
  c.require(secs < 1.0, "enumeration exceeded 1 s");
  c.note("counts 1/3/15/105 in " + std::to_string(secs) + " s");
  return c;
}

Check criterion_rank_91() {
  Check c;
  const auto start = Clock::now();
  const IsomerSet set = enumerate_isomers(8);
  const RationalMatrix m = isomer_component_matrix(set, 3);
  const std::size_t r = rank(m);
  const std::vector<std::vector<Rational>> null_basis = nullspace(m);
  const double secs = seconds_since(start);
  c.require(r == 91, "rank != 91 (got " + std::to_string(r) + ")");
  c.require(null_basis.size() == 14,
            "nullity != 14 (got " + std::to_string(null_basis.size()) + ")");
  for (const auto& v : null_basis) {
    std::vector<Rational> combo(m.cols());
    for (std::size_t k = 0; k < m.rows(); ++k)
      for (std::size_t col = 0; col < m.cols(); ++col) combo[col] += v[k] * m.at(k, col);
    for (const auto& e : combo) c.require(e.is_zero(), "nullspace vector does not annihilate rows");
  }
  c.require(secs < 60.0, "rank certification exceeded 60 s");
  c.note("rank 91, nullity 14 in " + std::to_string(secs) + " s");
  return c;
}

Check criterion_determinant_tensor() {
  Check c;
  const DenseTensor g4 = gen_kronecker(GenKroneckerSpec::alternating(), 3);
  c.require(g4.size() == 6561, "unexpected component count");
  c.require(g4.is_zero(), "k=4 determinant tensor not identically zero in d=3");

  const IsomerSet set8 = enumerate_isomers(8);
  const auto coeffs = expand_as_isomer_combination(GenKroneckerSpec::alternating(), set8);
  std::size_t nonzero = 0;
  for (const auto& x : coeffs)
    if (!x.is_zero()) ++nonzero;
  c.require(nonzero == 24, "expected 24 signed isomers");
  DenseTensor combo(3, 8);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) combo += coeffs[i] * evaluate_isomer(set8.isomers[i], 3);
  c.require(combo.is_zero(), "signed isomer vector is not in the order-8 nullspace");

  c.require(gen_kronecker(GenKroneckerSpec::make({0, 1, 2}, {3, 4, 5}), 2).is_zero(),
            "k=3 determinant tensor not zero in d=2");
  return c;
}

Check criterion_grouped_expansions() {
  Check c;
  SplitMix64 rng(2024);
  std::vector<DenseTensor> samples = degenerate_fixtures();
  for (int t = 0; t < 20; ++t) samples.push_back(random_symmetric(rng));
  for (const auto& T : samples)
    for (QuadIdentity which : {QuadIdentity::AlternatingSlots, QuadIdentity::FrontPairedSlots}) {
      c.require(grouped_expansion(which, T).is_zero(), "grouped expansion nonzero");
      c.require(verify_grouped_expansion(which, T).is_zero(),
                "grouped form disagrees with the determinant contraction");
    }
  c.note(std::to_string(samples.size()) + " symmetric samples x 2 identities");
  return c;
}

Check criterion_basis_generation() {
  Check c;
  const auto& basis = RepresentationBasis::standard();
  c.require(basis.linear_terms().size() == 9, "linear dedup != 9");
  c.require(basis.raw_quadratic_terms().size() == 21, "raw quadratic dedup != 21");
  c.require(basis.quadratic_terms().size() == 19, "reduced quadratic count != 19");
  c.require(certify_independence(basis.linear_terms(), 3) == 9, "linear rank != 9");
  c.require(certify_independence(basis.quadratic_terms(), 3) == 19, "quadratic rank != 19");
  c.require(certify_independence(basis.raw_quadratic_terms(), 3) == 19,
            "raw 21 terms should have rank 19");
  return c;
}

Check criterion_rivlin() {
  Check c;
  SplitMix64 rng(4048);
  for (int t = 0; t < 20; ++t) {
    const DenseTensor T = random_symmetric(rng);
    const DenseTensor S = random_tracefree_symmetric(rng);
    c.require(verify_rivlin_identity(T, S).is_zero(), "residual nonzero for trace-free S");
  }
  const DenseTensor witness =
      verify_rivlin_identity(DenseTensor::identity(3), DenseTensor::identity(3), false);
  c.require(witness == DenseTensor::identity(3) * Rational(6),
            "T = I, S = I should leave exactly 6 I");
  return c;
}

Check criterion_dual_path() {
  Check c;
  SplitMix64 rng(8096);
  for (int t = 0; t < 50; ++t) {
    const RepresentationModel model = RepresentationModel::random(rng);
    const DenseTensor T = random_symmetric(rng);
    const DenseTensor U = random_tracefree_matrix(rng);
    const DualPathResult r = dual_path_check(model, T, U);
    c.require(r.equal, "direct contraction != mapped 13-term evaluation");
  }
  c.require(rank(ContractedBasis::standard().coefficient_map()) == 13, "28->13 map rank != 13");
  c.note("50 random triples, map rank 13");
  return c;
}

Check criterion_frame_consistency() {
  Check c;
  SplitMix64 rng(16192);
  const auto rotations = proper_signed_permutations();
  c.require(rotations.size() == 24, "expected 24 proper signed permutations");
  for (int t = 0; t < 5; ++t) {
    ClosureCoefficients a = ClosureCoefficients::zero();
    for (auto& x : a.a) x = random_rational(rng);
    const DenseTensor T = random_symmetric(rng);
    const DenseTensor U = random_tracefree_matrix(rng);
    const DenseTensor phi =
        evaluate_closure(a, ReynoldsStress::from_tensor(T), VelocityGradient::from_tensor(U));
    for (const auto& Q : rotations) {
      const DenseTensor Qt = transpose(Q);
      const DenseTensor rotated =
          evaluate_closure(a, ReynoldsStress::from_tensor(matmul(matmul(Q, T), Qt)),
                           VelocityGradient::from_tensor(matmul(matmul(Q, U), Qt)));
      c.require(rotated == matmul(matmul(Q, phi), Qt), "frame consistency violated");
    }
  }
  c.note("5 samples x 24 rotations");
  return c;
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

Check criterion_cli() {
  Check c;
  const fs::path dir =
      fs::temp_directory_path() / ("isotensor_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  // determinism: byte-identical reruns
  const std::vector<std::vector<std::string>> commands = {
      {"isomers", "--order", "6"},
      {"rank", "--order", "6"},
      {"basis"},
      {"verify", "--identity", "det4"},
      {"verify", "--identity", "eq1_10", "--trials", "5", "--seed", "42"},
      {"verify", "--identity", "eq1_11", "--trials", "5", "--seed", "42"},
      {"verify", "--identity", "a4", "--trials", "5", "--seed", "42"},
      {"verify", "--identity", "dual_path", "--trials", "3", "--seed", "42"},
      {"verify", "--identity", "frame", "--trials", "1", "--seed", "42"},
  };
  for (const auto& cmd : commands) {
    const CliRun a = run_cli(cmd);
    const CliRun b = run_cli(cmd);
    c.require(a.code == 0, "command failed: " + cmd[0]);
    c.require(a.out == b.out && a.err == b.err && a.code == b.code,
              "rerun not byte-identical: " + cmd[0]);
  }

  // exit contract: 2 on usage errors
  c.require(run_cli({"isomers", "--order", "9"}).code == 2, "odd order should exit 2");
  c.require(run_cli({"verify", "--identity", "bogus"}).code == 2, "unknown identity should exit 2");
  c.require(run_cli({"basis", "--out", "/no/such/dir/x.json"}).code == 2,
            "unwritable path should exit 2");

  // exit contract: 1 on the deliberate trace-carrying fixture
  const fs::path fixture = dir / "traceful.json";
  {
    std::ofstream f(fixture);
    f << dump_json(nlohmann::json{{"T", tensor_to_json(DenseTensor::identity(3))},
                                  {"S", tensor_to_json(DenseTensor::identity(3))}});
  }
  const CliRun traceful = run_cli({"verify", "--identity", "a4", "--input", fixture.string()});
  c.require(traceful.code == 1, "trace-carrying a4 fixture should exit 1");

  // exit contract: 1 on compressible closure input in strict mode
  const fs::path compressible = dir / "compressible.json";
  {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < 13; ++i) a.push_back("0");
    std::ofstream f(compressible);
    f << dump_json(nlohmann::json{{"coefficients", {{"a", a}}},
                                  {"T", tensor_to_json(DenseTensor::identity(3))},
                                  {"U", tensor_to_json(DenseTensor::identity(3))}});
  }
  c.require(run_cli({"closure", "--input", compressible.string()}).code == 1,
            "compressible strict-mode closure should exit 1");
  c.require(run_cli({"closure", "--input", compressible.string(), "--deviatorize"}).code == 0,
            "deviatorized closure should pass");

  std::error_code ec;
  fs::remove_all(dir, ec);
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"isomer counts 1/3/15/105 under 1 s", criterion_isomer_counts},
      {"105 order-8 isomers: exact rank 91, nullity 14, under 60 s", criterion_rank_91},
      {"k=4 determinant tensor zero in d=3, signed vector in nullspace, k=3 zero in d=2",
       criterion_determinant_tensor},
      {"grouped quadratic expansions identically zero on 23 symmetric samples",
       criterion_grouped_expansions},
      {"basis generation: 9 linear, 21 raw -> 19 quadratic, ranks 9/19/19",
       criterion_basis_generation},
      {"cubic matrix identity: zero residual for trace-free S, 6I witness otherwise",
       criterion_rivlin},
      {"dual-path equivalence on 50 triples, 28->13 map rank 13", criterion_dual_path},
      {"frame consistency under all 24 exact rotations", criterion_frame_consistency},
      {"CLI determinism and 0/1/2 exit-code contract", criterion_cli},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const char* status = result.ok ? "PASS" : "FAIL";
    std::cout << "[" << status << "] criterion " << (i + 1) << ": " << criteria[i].first;
    if (!result.detail.empty()) std::cout << " (" << result.detail << ")";
    std::cout << "\n" << std::flush;
    if (!result.ok) ++failures;
  }
  if (failures == 0) {
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria FAILED\n";
  return 1;
}

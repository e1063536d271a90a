// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "isotensor/basis.hpp"
#include "isotensor/closure.hpp"
#include "isotensor/ext/json.hpp"
#include "isotensor/isomer.hpp"
#include "isotensor/tensor.hpp"

namespace isotensor {

// Repo-wide tensor wire format:
//   {"dim": 3, "order": 2, "entries": ["1", "-2/3", ...]}
// entries are rationals as "p" or "p/q" strings, row-major with the last
// index fastest, exactly dim^order of them. Parsing rejects wrong-length
// arrays and zero denominators.
nlohmann::json tensor_to_json(const DenseTensor& t);
DenseTensor tensor_from_json(const nlohmann::json& j);

// Isomers: {"order": 8, "pairs": [[0,1],[2,3],[4,5],[6,7]]}; a set is
// {"order": .., "count": .., "isomers": [...]} with stable array indices.
nlohmann::json isomer_to_json(const DeltaIsomer& iso);
DeltaIsomer isomer_from_json(const nlohmann::json& j);
nlohmann::json isomer_set_to_json(const IsomerSet& set);

// Basis export: {"degree_1": [{"id","skeleton","invariant"} x9],
//                "degree_2": [... x19]} in the stable id order that fixes
// coefficient indexing.
nlohmann::json basis_export_json();

// Closure evaluation input: a model given either as
//   {"coefficients": {"a": [13 rationals]}} or
//   {"representation": {"linear": [9], "quadratic": [19]}}
// together with "T" and "U" tensor objects.
struct ClosureInput {
  std::optional<ClosureCoefficients> coefficients;
  std::optional<RepresentationModel> representation;
  DenseTensor T, U;

  ClosureCoefficients resolved_coefficients() const;
};
ClosureInput closure_input_from_json(const nlohmann::json& j);

struct ClosureChecks {
  bool symmetric = false;
  bool incompressible = false;
  bool realizable_T = false;
};
nlohmann::json closure_output_json(const DenseTensor& phi, const ClosureChecks& checks);

/// Canonical serialization: two-space indent, sorted keys, trailing newline.
/// Byte-identical across runs for equal values.
std::string dump_json(const nlohmann::json& j);

}  // namespace isotensor

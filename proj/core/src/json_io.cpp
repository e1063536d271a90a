// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include "isotensor/json_io.hpp"

#include <stdexcept>

namespace isotensor {

namespace {

std::vector<Rational> rationals_from_json(const nlohmann::json& arr, std::size_t expected,
                                          const char* what) {
  if (!arr.is_array() || arr.size() != expected)
    throw std::invalid_argument(std::string(what) + ": expected an array of " +
                                std::to_string(expected) + " rational strings");
  std::vector<Rational> out;
  out.reserve(expected);
  for (const auto& e : arr) out.push_back(Rational::parse(e.get<std::string>()));
  return out;
}

nlohmann::json rationals_to_json(std::span<const Rational> values) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

}  // namespace

nlohmann::json tensor_to_json(const DenseTensor& t) {
  return nlohmann::json{
      {"dim", t.dim()}, {"order", t.order()}, {"entries", rationals_to_json(t.entries())}};
}

DenseTensor tensor_from_json(const nlohmann::json& j) {
  const int dim = j.at("dim").get<int>();
  const int order = j.at("order").get<int>();
  DenseTensor t(dim, order);  // validates dim/order bounds
  const std::vector<Rational> entries =
      rationals_from_json(j.at("entries"), t.size(), "tensor entries");
  for (std::size_t i = 0; i < entries.size(); ++i) t[i] = entries[i];
  return t;
}

nlohmann::json isomer_to_json(const DeltaIsomer& iso) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : iso.pairs) pairs.push_back(nlohmann::json::array({a, b}));
  return nlohmann::json{{"order", iso.order}, {"pairs", pairs}};
}

DeltaIsomer isomer_from_json(const nlohmann::json& j) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument("isomer pairs: expected two-element arrays");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return DeltaIsomer::from_pairs(j.at("order").get<int>(), std::move(pairs));
}

nlohmann::json isomer_set_to_json(const IsomerSet& set) {
  nlohmann::json isomers = nlohmann::json::array();
  for (const auto& iso : set.isomers) isomers.push_back(isomer_to_json(iso));
  return nlohmann::json{
      {"order", set.order}, {"count", set.count()}, {"isomers", isomers}};
}

nlohmann::json basis_export_json() {
  const auto& basis = RepresentationBasis::standard();
  const auto term_list = [](const std::vector<TermShape>& terms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : terms)
      arr.push_back(nlohmann::json{{"id", t.id},
                                   {"skeleton", t.skeleton_string()},
                                   {"invariant", t.invariant_string()}});
    return arr;
  };
  return nlohmann::json{{"degree_1", term_list(basis.linear_terms())},
                        {"degree_2", term_list(basis.quadratic_terms())}};
}

ClosureCoefficients ClosureInput::resolved_coefficients() const {
  if (coefficients) return *coefficients;
  return map_coefficients(*representation);
}

ClosureInput closure_input_from_json(const nlohmann::json& j) {
  ClosureInput in;
  const bool has_a = j.contains("coefficients");
  const bool has_rep = j.contains("representation");
  if (has_a == has_rep)
    throw std::invalid_argument(
        "closure input: exactly one of \"coefficients\" and \"representation\" required");
  if (has_a) {
    in.coefficients =
        ClosureCoefficients{rationals_from_json(j.at("coefficients").at("a"), 13, "coefficients.a")};
  } else {
    RepresentationModel model;
    model.linear = rationals_from_json(j.at("representation").at("linear"), 9, "representation.linear");
    model.quadratic =
        rationals_from_json(j.at("representation").at("quadratic"), 19, "representation.quadratic");
    in.representation = std::move(model);
  }
  in.T = tensor_from_json(j.at("T"));
  in.U = tensor_from_json(j.at("U"));
  return in;
}

nlohmann::json closure_output_json(const DenseTensor& phi, const ClosureChecks& checks) {
  return nlohmann::json{{"phi", tensor_to_json(phi)},
                        {"checks",
                         {{"symmetric", checks.symmetric},
                          {"incompressible", checks.incompressible},
                          {"realizable_T", checks.realizable_T}}}};
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace isotensor

#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "nchopf/dual_hopf.hpp"
#include "nchopf/group_oracle.hpp"
#include "nchopf/pi_hopf.hpp"
#include "nchopf/sc_hopf.hpp"

namespace nchopf {

using Json = nlohmann::json;

Json to_json(const CycRational& value);
/// Accepts {"p": P, "coeffs": [...]}, a rational string such as "3/2", or an integer.
CycRational cyc_from_json(const Json& j, int conductor);

Json to_json(const LabeledSetPartition& lambda);
LabeledSetPartition labeled_partition_from_json(const Json& j);
Json to_json(const SetPartition& lambda);
SetPartition set_partition_from_json(const Json& j);
Json to_json(const Permutation& sigma);
Permutation permutation_from_json(const Json& j);
Json to_json(const ColoredIndex& index);
ColoredIndex colored_index_from_json(const Json& j);

/// Which key type a basis uses.
enum class KeyKind { labeled, set_partition, permutation, colored };
KeyKind key_kind(Basis basis);

/// An element in any basis: {"q", "basis", "terms": [...]}.
struct AnyElement {
  Basis basis = Basis::kappa;
  int q = 2;
  bool colored = false;
  std::variant<LabeledElement, PartitionElement, PermutationElement, ColoredElement> value;
};

/// A tensor in any basis: terms carry "left" and "right" keys.
struct AnyTensor {
  Basis basis = Basis::kappa;
  int q = 2;
  std::variant<LabeledTensor, PartitionTensor> value;
};

Json to_json(const AnyElement& x);
AnyElement element_from_json(const Json& j);
Json to_json(const AnyTensor& t);
AnyTensor tensor_from_json(const Json& j);

Json element_json(Basis basis, int q, const LabeledElement& x);
Json element_json(Basis basis, int q, const PartitionElement& x);
Json element_json(int q, const PermutationElement& x);
Json element_json(int q, const ColoredElement& x);
Json tensor_json(Basis basis, int q, const LabeledTensor& t);
Json tensor_json(Basis basis, int q, const PartitionTensor& t);

/// {"n", "q", "order", "values", "class_sizes"}.
Json to_json(const SupercharTable& table);
SupercharTable table_from_json(const Json& j);

Json to_json(const AxiomReport& report);

}  // namespace nchopf

#include "nchopf/json_io.hpp"

#include "nchopf/error.hpp"

namespace nchopf {

namespace {

template <class T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("field '") + name + "' has the wrong type");
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("coefficients must be integers or rational strings");
}

int checked_q(const Json& j) {
  const int q = field<int>(j, "q");
  if (q < 2 || !is_prime(q)) throw InvalidInput("q must be prime, got " + std::to_string(q));
  return q;
}

}  // namespace

Json to_json(const CycRational& value) {
  Json coeffs = Json::array();
  for (const auto& c : value.coeffs()) coeffs.push_back(format_rational(c));
  return {{"p", value.conductor()}, {"coeffs", coeffs}};
}

CycRational cyc_from_json(const Json& j, int conductor) {
  if (!j.is_object()) return CycRational(conductor, rational_from_json(j));
  const int p = field<int>(j, "p");
  const auto raw = field<std::vector<Json>>(j, "coeffs");
  std::vector<Rational> coeffs;
  for (const auto& c : raw) coeffs.push_back(rational_from_json(c));
  return CycRational(p, std::move(coeffs)).with_conductor(p == 1 ? conductor : p);
}

Json to_json(const LabeledSetPartition& lambda) {
  Json arcs = Json::array();
  for (const Arc& a : lambda.arcs()) arcs.push_back({a.left, a.right, a.label});
  return {{"n", lambda.size()}, {"arcs", arcs}};
}

LabeledSetPartition labeled_partition_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  std::vector<Arc> arcs;
  for (const auto& a : field<std::vector<std::vector<int>>>(j, "arcs")) {
    if (a.size() != 3) throw InvalidInput("arcs are [left, right, label] triples");
    arcs.push_back({a[0], a[1], a[2]});
  }
  return LabeledSetPartition(n, std::move(arcs));
}

Json to_json(const SetPartition& lambda) { return {{"n", lambda.size()}, {"blocks", lambda.blocks()}}; }

SetPartition set_partition_from_json(const Json& j) {
  return SetPartition(field<int>(j, "n"), field<std::vector<std::vector<int>>>(j, "blocks"));
}

Json to_json(const Permutation& sigma) { return {{"word", sigma.word()}}; }

Permutation permutation_from_json(const Json& j) {
  if (j.is_string()) return Permutation::parse(j.get<std::string>());
  return Permutation(field<std::vector<int>>(j, "word"));
}

Json to_json(const ColoredIndex& index) {
  return {{"n", index.partition.size()}, {"blocks", index.partition.blocks()}, {"colors", index.colors}, {"r", index.r}};
}

ColoredIndex colored_index_from_json(const Json& j) {
  ColoredIndex out{set_partition_from_json(j), field<std::vector<int>>(j, "colors"), field<int>(j, "r")};
  if (out.r < 1) throw InvalidInput("the number of colors must be positive");
  if (static_cast<int>(out.colors.size()) != out.partition.size())
    throw DimensionMismatch("one color per position is required");
  for (int c : out.colors)
    if (c < 0 || c >= out.r) throw InvalidInput("colors lie in 0..r-1");
  return out;
}

KeyKind key_kind(Basis basis) {
  switch (basis) {
    case Basis::kappa:
    case Basis::chi:
    case Basis::k:
    case Basis::kappa_star:
    case Basis::chi_star: return KeyKind::labeled;
    case Basis::m:
    case Basis::p:
    case Basis::U:
    case Basis::V: return KeyKind::set_partition;
    case Basis::M: return KeyKind::permutation;
  }
  return KeyKind::labeled;
}

namespace {

template <class Key, class ToJson>
Json terms_json(const LinearCombination<Key>& x, ToJson&& key_json) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.terms()) {
    Json t = key_json(k);
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

template <class Key, class ToJson>
Json tensor_terms_json(const TensorCombination<Key>& x, ToJson&& key_json) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.terms())
    terms.push_back({{"left", key_json(k.first)}, {"right", key_json(k.second)}, {"coeff", to_json(c)}});
  return terms;
}

template <class Key, class FromJson>
LinearCombination<Key> parse_terms(const Json& j, int q, FromJson&& key_from) {
  LinearCombination<Key> out(q);
  for (const auto& t : field<std::vector<Json>>(j, "terms")) {
    const CycRational c = t.contains("coeff") ? cyc_from_json(t.at("coeff"), q) : CycRational(q, 1);
    out.add(key_from(t), c);
  }
  return out;
}

template <class Key, class FromJson>
TensorCombination<Key> parse_tensor_terms(const Json& j, int q, FromJson&& key_from) {
  TensorCombination<Key> out(q);
  for (const auto& t : field<std::vector<Json>>(j, "terms")) {
    const CycRational c = t.contains("coeff") ? cyc_from_json(t.at("coeff"), q) : CycRational(q, 1);
    out.add({key_from(field<Json>(t, "left")), key_from(field<Json>(t, "right"))}, c);
  }
  return out;
}

Json header(const std::string& basis, int q) { return {{"q", q}, {"basis", basis}}; }

}  // namespace

Json element_json(Basis basis, int q, const LabeledElement& x) {
  Json out = header(to_string(basis), q);
  out["terms"] = terms_json(x, [](const LabeledSetPartition& k) { return to_json(k); });
  return out;
}

Json element_json(Basis basis, int q, const PartitionElement& x) {
  Json out = header(to_string(basis), q);
  out["terms"] = terms_json(x, [](const SetPartition& k) { return to_json(k); });
  return out;
}

Json element_json(int q, const PermutationElement& x) {
  Json out = header("M", q);
  out["terms"] = terms_json(x, [](const Permutation& k) { return to_json(k); });
  return out;
}

Json element_json(int q, const ColoredElement& x) {
  Json out = header("k_colored", q);
  out["terms"] = terms_json(x, [](const ColoredIndex& k) { return to_json(k); });
  return out;
}

Json tensor_json(Basis basis, int q, const LabeledTensor& t) {
  Json out = header(to_string(basis), q);
  out["terms"] = tensor_terms_json(t, [](const LabeledSetPartition& k) { return to_json(k); });
  return out;
}

Json tensor_json(Basis basis, int q, const PartitionTensor& t) {
  Json out = header(to_string(basis), q);
  out["terms"] = tensor_terms_json(t, [](const SetPartition& k) { return to_json(k); });
  return out;
}

Json to_json(const AnyElement& x) {
  return std::visit(
      [&](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LabeledElement>) return element_json(x.basis, x.q, v);
        else if constexpr (std::is_same_v<T, PartitionElement>) return element_json(x.basis, x.q, v);
        else if constexpr (std::is_same_v<T, PermutationElement>) return element_json(x.q, v);
        else return element_json(x.q, v);
      },
      x.value);
}

AnyElement element_from_json(const Json& j) {
  AnyElement out;
  out.q = checked_q(j);
  const auto name = field<std::string>(j, "basis");
  out.basis = parse_basis(name);
  if (name == "k_colored") {
    out.colored = true;
    out.value = parse_terms<ColoredIndex>(j, out.q, [](const Json& t) { return colored_index_from_json(t); });
    return out;
  }
  switch (key_kind(out.basis)) {
    case KeyKind::labeled: {
      auto x = parse_terms<LabeledSetPartition>(j, out.q, [](const Json& t) { return labeled_partition_from_json(t); });
      for (const auto& [k, c] : x.terms()) k.check_labels(out.q);
      out.value = std::move(x);
      break;
    }
    case KeyKind::set_partition:
      out.value = parse_terms<SetPartition>(j, out.q, [](const Json& t) { return set_partition_from_json(t); });
      break;
    case KeyKind::permutation:
      out.value = parse_terms<Permutation>(j, out.q, [](const Json& t) { return permutation_from_json(t); });
      break;
    case KeyKind::colored: break;
  }
  return out;
}

Json to_json(const AnyTensor& t) {
  return std::visit([&](const auto& v) { return tensor_json(t.basis, t.q, v); }, t.value);
}

AnyTensor tensor_from_json(const Json& j) {
  AnyTensor out;
  out.q = checked_q(j);
  out.basis = parse_basis(field<std::string>(j, "basis"));
  switch (key_kind(out.basis)) {
    case KeyKind::labeled:
      out.value =
          parse_tensor_terms<LabeledSetPartition>(j, out.q, [](const Json& t) { return labeled_partition_from_json(t); });
      break;
    case KeyKind::set_partition:
      out.value = parse_tensor_terms<SetPartition>(j, out.q, [](const Json& t) { return set_partition_from_json(t); });
      break;
    default: throw InvalidInput("tensors are supported for partition-indexed bases only");
  }
  return out;
}

Json to_json(const SupercharTable& table) {
  Json order = Json::array();
  for (const auto& lambda : table.order) order.push_back(to_json(lambda));
  Json values = Json::array();
  for (const auto& row : table.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    values.push_back(std::move(r));
  }
  Json sizes = Json::array();
  for (const auto& s : table.class_sizes) sizes.push_back(s.get_str());
  return {{"n", table.n}, {"q", table.q}, {"order", order}, {"values", values}, {"class_sizes", sizes}};
}

SupercharTable table_from_json(const Json& j) {
  SupercharTable t;
  t.n = field<int>(j, "n");
  t.q = checked_q(j);
  for (const auto& o : field<std::vector<Json>>(j, "order")) t.order.push_back(labeled_partition_from_json(o));
  for (const auto& row : field<std::vector<std::vector<Json>>>(j, "values")) {
    CycVector r;
    for (const auto& v : row) r.push_back(cyc_from_json(v, t.q));
    if (r.size() != t.order.size()) throw DimensionMismatch("table row has the wrong length");
    t.values.push_back(std::move(r));
  }
  for (const auto& s : field<std::vector<std::string>>(j, "class_sizes")) {
    Integer z;
    if (z.set_str(s, 10) != 0) throw InvalidInput("malformed class size '" + s + "'");
    t.class_sizes.push_back(z);
  }
  if (t.values.size() != t.order.size() || t.class_sizes.size() != t.order.size())
    throw DimensionMismatch("table shape does not match its index list");
  t.build_index();
  return t;
}

Json to_json(const AxiomReport& report) {
  return {{"n", report.n},
          {"q", report.q},
          {"superclasses", report.superclass_count},
          {"a_unions_of_conjugacy_classes", report.unions_of_conjugacy_classes},
          {"b_trivial_blocks", report.trivial_blocks},
          {"c_constant_on_superclasses", report.constant_on_superclasses},
          {"d_counts_match", report.counts_match},
          {"passed", report.passed()},
          {"witnesses", report.witnesses}};
}

}  // namespace nchopf

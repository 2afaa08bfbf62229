#include "nchopf/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nchopf/error.hpp"
#include "nchopf/json_io.hpp"
#include "nchopf/verify.hpp"

namespace nchopf {

namespace {

// Bases that share an underlying algebra are grouped into families; each family
// has a hub basis in which products and coproducts are computed.
enum class Family { sc, sc_dual, pi, pi_dual, colored, perm };

Family family_of(const std::string& basis) {
  if (basis == "kappa" || basis == "chi" || basis == "k") return Family::sc;
  if (basis == "kappa_star" || basis == "chi_star") return Family::sc_dual;
  if (basis == "m" || basis == "p") return Family::pi;
  if (basis == "U" || basis == "V") return Family::pi_dual;
  if (basis == "k_colored") return Family::colored;
  if (basis == "M") return Family::perm;
  throw InvalidInput("unknown basis '" + basis + "'");
}

std::string basis_name(const AnyElement& x) { return x.colored ? "k_colored" : to_string(x.basis); }

void check_q(int q) {
  if (q < 2 || !is_prime(q)) throw InvalidInput("q must be prime, got " + std::to_string(q));
}

void check_n(int n) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
}

// chi* coordinates are the values on supercharacters: c_lambda = sum_mu chi^lambda(mu) f_mu.
LabeledElement kappa_star_to_chi_star(const LabeledElement& f, int q, SupercharTableCache& cache) {
  LabeledElement out(q);
  for (const auto& [mu, c] : f.terms()) {
    const auto t = cache.table(mu.size(), q);
    const std::size_t col = t->index_of(mu);
    for (std::size_t row = 0; row < t->order.size(); ++row) out.add(t->order[row], c * t->values[row][col]);
  }
  return out;
}

LabeledElement chi_star_to_kappa_star(const LabeledElement& x, int q, SupercharTableCache& cache) {
  LabeledElement out(q);
  for (const auto& [lambda, c] : x.terms()) {
    const auto t = cache.table(lambda.size(), q);
    const auto inv = cache.inverse(lambda.size(), q);
    const std::size_t col = t->index_of(lambda);
    for (std::size_t row = 0; row < t->order.size(); ++row) out.add(t->order[row], c * (*inv)[row][col]);
  }
  return out;
}

LabeledElement labeled_to_hub(const std::string& basis, const LabeledElement& x, int q, SupercharTableCache& cache) {
  if (basis == "chi") return chi_to_kappa(x, q, cache);
  if (basis == "chi_star") return chi_star_to_kappa_star(x, q, cache);
  return x;
}

LabeledElement labeled_from_hub(const std::string& basis, const LabeledElement& x, int q, SupercharTableCache& cache) {
  if (basis == "chi") return kappa_to_chi(x, q, cache);
  if (basis == "chi_star") return kappa_star_to_chi_star(x, q, cache);
  return x;
}

PartitionElement partition_to_hub(const std::string& basis, const PartitionElement& x) {
  if (basis == "p") return p_to_m(x);
  if (basis == "V") return v_to_u(x);
  return x;
}

PartitionElement partition_from_hub(const std::string& basis, const PartitionElement& x) {
  if (basis == "p") return m_to_p(x);
  if (basis == "V") return u_to_v(x);
  return x;
}

template <class Key>
LinearCombination<Key> with_q(const LinearCombination<Key>& x, int q) {
  LinearCombination<Key> out(q);
  out += x;
  return out;
}

AnyElement make(const std::string& basis, int q, std::variant<LabeledElement, PartitionElement, PermutationElement,
                                                              ColoredElement> value) {
  AnyElement out;
  out.basis = parse_basis(basis);
  out.colored = basis == "k_colored";
  out.q = q;
  out.value = std::move(value);
  return out;
}

// Fills in "q" and "basis" from the command line and rejects conflicting values.
Json normalize(Json j, const std::string& basis, int q) {
  if (!j.is_object()) throw InvalidInput("elements are JSON objects");
  if (!j.contains("q")) j["q"] = q;
  else if (j["q"] != q) throw InvalidInput("element q differs from --q");
  if (!basis.empty()) {
    if (!j.contains("basis")) j["basis"] = basis;
    else if (j["basis"] != basis) throw InvalidInput("element basis differs from --basis");
  }
  return j;
}

Json read_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON input: ") + e.what());
  }
}

AnyElement read_element(const Json& j, const std::string& basis, int q) {
  return element_from_json(normalize(j, basis, q));
}

// ---------------------------------------------------------------------------
// Operations, dispatched on the basis family

AnyElement multiply(const std::string& basis, int q, const AnyElement& x, const AnyElement& y,
                    SupercharTableCache& cache) {
  switch (family_of(basis)) {
    case Family::sc: {
      const SuperclassHopf h(q);
      const auto a = labeled_to_hub(basis, std::get<LabeledElement>(x.value), q, cache);
      const auto b = labeled_to_hub(basis, std::get<LabeledElement>(y.value), q, cache);
      return make(basis, q, labeled_from_hub(basis, h.product(a, b), q, cache));
    }
    case Family::sc_dual: {
      const KappaStarHopf h(q);
      const auto a = labeled_to_hub(basis, std::get<LabeledElement>(x.value), q, cache);
      const auto b = labeled_to_hub(basis, std::get<LabeledElement>(y.value), q, cache);
      return make(basis, q, labeled_from_hub(basis, h.product(a, b), q, cache));
    }
    case Family::pi: {
      const MonomialHopf h(q);
      const auto a = partition_to_hub(basis, std::get<PartitionElement>(x.value));
      const auto b = partition_to_hub(basis, std::get<PartitionElement>(y.value));
      return make(basis, q, with_q(partition_from_hub(basis, h.product(with_q(a, q), with_q(b, q))), q));
    }
    case Family::pi_dual: {
      const UHopf h(q);
      const auto a = partition_to_hub(basis, std::get<PartitionElement>(x.value));
      const auto b = partition_to_hub(basis, std::get<PartitionElement>(y.value));
      return make(basis, q, with_q(partition_from_hub(basis, h.product(with_q(a, q), with_q(b, q))), q));
    }
    case Family::colored: {
      const ColoredMonomialHopf h(q - 1, q);
      return make(basis, q, h.product(std::get<ColoredElement>(x.value), std::get<ColoredElement>(y.value)));
    }
    case Family::perm:
      return make(basis, q,
                  with_q(product_M(std::get<PermutationElement>(x.value), std::get<PermutationElement>(y.value)), q));
  }
  throw InvalidInput("unsupported basis");
}

template <class Key, class F>
TensorCombination<Key> map_both(const TensorCombination<Key>& t, int q, F&& convert) {
  TensorCombination<Key> out(q);
  for (const auto& [k, c] : t.terms()) {
    const auto left = convert(LinearCombination<Key>::basis(k.first, q));
    const auto right = convert(LinearCombination<Key>::basis(k.second, q));
    out.add(tensor(left, right), c);
  }
  return out;
}

Json comultiply(const std::string& basis, int q, const AnyElement& x, SupercharTableCache& cache) {
  const Basis tag = parse_basis(basis);
  switch (family_of(basis)) {
    case Family::sc:
    case Family::sc_dual: {
      const auto a = labeled_to_hub(basis, std::get<LabeledElement>(x.value), q, cache);
      const LabeledTensor d = family_of(basis) == Family::sc ? SuperclassHopf(q).coproduct(a) : KappaStarHopf(q).coproduct(a);
      return tensor_json(tag, q, map_both(d, q, [&](const LabeledElement& e) { return labeled_from_hub(basis, e, q, cache); }));
    }
    case Family::pi:
    case Family::pi_dual: {
      const auto a = with_q(partition_to_hub(basis, std::get<PartitionElement>(x.value)), q);
      const PartitionTensor d = family_of(basis) == Family::pi ? MonomialHopf(q).coproduct(a) : UHopf(q).coproduct(a);
      return tensor_json(tag, q,
                         map_both(d, q, [&](const PartitionElement& e) { return with_q(partition_from_hub(basis, e), q); }));
    }
    case Family::colored: {
      const auto d = ColoredMonomialHopf(q - 1, q).coproduct(std::get<ColoredElement>(x.value));
      Json out = {{"q", q}, {"basis", basis}, {"terms", Json::array()}};
      for (const auto& [k, c] : d.terms())
        out["terms"].push_back({{"left", to_json(k.first)}, {"right", to_json(k.second)}, {"coeff", to_json(c)}});
      return out;
    }
    case Family::perm: break;
  }
  throw InvalidInput("the M basis has no coproduct here; use U or V");
}

AnyElement antipode(const std::string& basis, int q, const AnyElement& x, SupercharTableCache& cache) {
  switch (family_of(basis)) {
    case Family::sc: {
      const auto a = labeled_to_hub(basis, std::get<LabeledElement>(x.value), q, cache);
      return make(basis, q, labeled_from_hub(basis, SuperclassHopf(q).antipode(a), q, cache));
    }
    case Family::sc_dual: {
      const auto a = labeled_to_hub(basis, std::get<LabeledElement>(x.value), q, cache);
      return make(basis, q, labeled_from_hub(basis, KappaStarHopf(q).antipode(a), q, cache));
    }
    case Family::pi: {
      const auto a = with_q(partition_to_hub(basis, std::get<PartitionElement>(x.value)), q);
      return make(basis, q, with_q(partition_from_hub(basis, MonomialHopf(q).antipode(a)), q));
    }
    case Family::pi_dual: {
      const auto a = with_q(partition_to_hub(basis, std::get<PartitionElement>(x.value)), q);
      return make(basis, q, with_q(partition_from_hub(basis, UHopf(q).antipode(a)), q));
    }
    case Family::colored:
      return make(basis, q, ColoredMonomialHopf(q - 1, q).antipode(std::get<ColoredElement>(x.value)));
    case Family::perm: break;
  }
  throw InvalidInput("the M basis has no antipode here; use U or V");
}

AnyElement convert(const AnyElement& x, const std::string& to, SupercharTableCache& cache) {
  const std::string from = basis_name(x);
  const int q = x.q;
  const Family source = family_of(from), target = family_of(to);
  auto unsupported = [&] { return InvalidInput("no conversion from " + from + " to " + to); };

  if (source == Family::sc || source == Family::sc_dual) {
    const auto hub = labeled_to_hub(from, std::get<LabeledElement>(x.value), q, cache);
    if (target == source) return make(to, q, labeled_from_hub(to, hub, q, cache));
    if (source == Family::sc && target == Family::colored) return make(to, q, expand_k_in_colored_m(hub, q));
    if (q != 2) throw unsupported();
    if (source == Family::sc && target == Family::pi)
      return make(to, q, with_q(partition_from_hub(to, ch_to_monomial(hub)), q));
    if (source == Family::sc_dual && target == Family::pi_dual)
      return make(to, q, with_q(partition_from_hub(to, v_to_u(dual_ch(hub))), q));
    throw unsupported();
  }
  if (source == Family::pi || source == Family::pi_dual) {
    const auto hub = partition_to_hub(from, std::get<PartitionElement>(x.value));
    if (target == source) return make(to, q, with_q(partition_from_hub(to, hub), q));
    if (source == Family::pi_dual && target == Family::sc_dual && q == 2)
      return make(to, q, labeled_from_hub(to, with_q(dual_ch_inverse(u_to_v(hub)), q), q, cache));
    throw unsupported();
  }
  if (source == target) return x;
  throw unsupported();
}

Json pair_elements(const AnyElement& left, const AnyElement& right, SupercharTableCache& cache) {
  if (left.q != right.q) throw InvalidInput("both elements must use the same q");
  const int q = left.q;
  const std::string lb = basis_name(left), rb = basis_name(right);
  const Family lf = family_of(lb), rf = family_of(rb);
  CycRational value(q);
  if (lf == Family::sc_dual && rf == Family::sc && rb != "k") {
    value = duality_pairing(labeled_to_hub(lb, std::get<LabeledElement>(left.value), q, cache),
                            labeled_to_hub(rb, std::get<LabeledElement>(right.value), q, cache));
  } else if (lf == Family::sc && rf == Family::sc_dual && lb != "k") {
    value = duality_pairing(labeled_to_hub(rb, std::get<LabeledElement>(right.value), q, cache),
                            labeled_to_hub(lb, std::get<LabeledElement>(left.value), q, cache));
  } else if (lf == Family::sc && rf == Family::sc && lb != "k" && rb != "k") {
    value = inner_product_kappa(labeled_to_hub(lb, std::get<LabeledElement>(left.value), q, cache),
                                labeled_to_hub(rb, std::get<LabeledElement>(right.value), q, cache), q, cache);
  } else {
    throw InvalidInput("pair expects a kappa_star/chi_star element against a kappa/chi element, or two kappa/chi elements");
  }
  return {{"q", q}, {"value", to_json(value)}};
}

// ---------------------------------------------------------------------------
// Output helpers

void print_table(std::ostream& out, const SupercharTable& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& mu : t.order) header.push_back(mu.to_string());
  cells.push_back(header);
  for (std::size_t r = 0; r < t.order.size(); ++r) {
    std::vector<std::string> row{t.order[r].to_string()};
    for (const auto& v : t.values[r]) row.push_back(v.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::string> sizes{"|K|"};
  for (const auto& s : t.class_sizes) sizes.push_back(s.get_str());
  cells.push_back(std::move(sizes));

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  out << "UT_" << t.n << "(" << t.q << ")\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << (c ? std::right : std::left) << row[c];
    out << '\n';
  }
}

struct Options {
  int n = 3;
  int q = 2;
  std::string basis;
  std::string from, to;
  std::string suite = "hopf";
  std::uint64_t seed = 1;
  int random = 100;
  bool oracle = false;
  bool pretty = false;
  bool json = false;
  std::string cache_dir;
};

SupercharTableCache make_cache(const Options& o) {
  if (const char* env = std::getenv("NCHOPF_CACHE_DIR"); env && *env) return SupercharTableCache(std::filesystem::path(env));
  if (!o.cache_dir.empty()) return SupercharTableCache(std::filesystem::path(o.cache_dir));
  return SupercharTableCache(SupercharTableCache::default_directory());
}

int dispatch(const std::string& command, const Options& o, std::istream& in, std::ostream& out) {
  SupercharTableCache cache = make_cache(o);
  if (command == "table") {
    check_n(o.n);
    check_q(o.q);
    const SupercharTable t = o.oracle ? oracle_supercharacter_table(o.n, o.q) : *cache.table(o.n, o.q);
    if (o.pretty) print_table(out, t);
    else out << to_json(t).dump(2) << '\n';
    return kExitOk;
  }
  if (command == "enumerate") {
    check_n(o.n);
    check_q(o.q);
    const auto all = enumerate_labeled_partitions(o.n, o.q);
    if (o.json) {
      Json arr = Json::array();
      for (const auto& l : all) arr.push_back(to_json(l));
      out << arr.dump(2) << '\n';
    } else {
      for (const auto& l : all) out << l.to_string() << '\n';
    }
    return kExitOk;
  }
  if (command == "verify") {
    VerifyOptions v{o.n, o.q, o.seed, o.random};
    const CheckLog log = run_suite(o.suite, v, cache);
    const Json report = {{"suite", o.suite}, {"n", o.n},           {"q", o.q},
                         {"seed", o.seed},   {"passed", log.passed}, {"failed", log.failed},
                         {"failures", log.failures}};
    out << report.dump(2) << '\n';
    return log.ok() ? kExitOk : kExitVerificationFailure;
  }

  check_q(o.q);
  const Json input = read_json(in);
  if (command == "mul") {
    family_of(o.basis);
    const Json factors = input.is_array() ? input : input.value("factors", Json());
    if (!factors.is_array() || factors.empty()) throw InvalidInput("mul expects a nonempty JSON array of elements");
    AnyElement acc = read_element(factors.front(), o.basis, o.q);
    for (std::size_t i = 1; i < factors.size(); ++i)
      acc = multiply(o.basis, o.q, acc, read_element(factors[i], o.basis, o.q), cache);
    out << to_json(acc).dump(2) << '\n';
    return kExitOk;
  }
  if (command == "comul") {
    family_of(o.basis);
    out << comultiply(o.basis, o.q, read_element(input, o.basis, o.q), cache).dump(2) << '\n';
    return kExitOk;
  }
  if (command == "antipode") {
    family_of(o.basis);
    out << to_json(antipode(o.basis, o.q, read_element(input, o.basis, o.q), cache)).dump(2) << '\n';
    return kExitOk;
  }
  if (command == "convert") {
    family_of(o.from);
    family_of(o.to);
    const AnyElement x = read_element(input, o.from, o.q);
    out << to_json(convert(x, o.to, cache)).dump(2) << '\n';
    return kExitOk;
  }
  if (command == "pair") {
    if (!input.is_object() || !input.contains("left") || !input.contains("right"))
      throw InvalidInput("pair expects {\"left\": element, \"right\": element}");
    const AnyElement left = read_element(input["left"], "", o.q);
    const AnyElement right = read_element(input["right"], "", o.q);
    out << pair_elements(left, right, cache).dump(2) << '\n';
    return kExitOk;
  }
  throw InvalidInput("unknown subcommand '" + command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in superclass and noncommutative symmetric function Hopf algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cache-dir", o.cache_dir, "Table cache directory (NCHOPF_CACHE_DIR takes precedence)");

  auto* table = app.add_subcommand("table", "Supercharacter table of UT_n(q) with class sizes");
  table->add_option("--n", o.n)->required();
  table->add_option("--q", o.q)->required();
  table->add_flag("--oracle", o.oracle, "Compute traces in the group instead of using the formula");
  table->add_flag("--pretty", o.pretty, "Aligned text instead of JSON");

  for (const char* name : {"mul", "comul", "antipode"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " of elements read as JSON from standard input");
    sub->add_option("--basis", o.basis)->required();
    sub->add_option("--q", o.q)->required();
  }

  auto* pair = app.add_subcommand("pair", "Duality pairing or inner product of {\"left\", \"right\"} on standard input");
  pair->add_option("--q", o.q)->required();

  auto* conv = app.add_subcommand("convert", "Change of basis for an element on standard input");
  conv->add_option("--from", o.from)->required();
  conv->add_option("--to", o.to)->required();
  conv->add_option("--q", o.q);

  auto* verify = app.add_subcommand("verify", "Run a property suite and report pass/fail counts");
  verify->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"hopf", "iso", "oracle", "axioms", "duality", "subalgebras", "truncated"}));
  verify->add_option("--n", o.n)->required();
  verify->add_option("--q", o.q)->required();
  verify->add_option("--seed", o.seed);
  verify->add_option("--random", o.random, "Random combinations per basis");

  auto* enumerate = app.add_subcommand("enumerate", "List the labeled set partitions S_n(q)");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--q", o.q)->required();
  enumerate->add_flag("--json", o.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, o, in, out);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBoundExceeded;
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace nchopf

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nchopf/sc_hopf.hpp"

namespace nchopf {

/// Pass/fail tally for a verification suite; keeps the first few failure messages.
struct CheckLog {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::function<std::string()>& describe);
  void merge(const CheckLog& other);
  bool ok() const { return failed == 0; }
};

struct VerifyOptions {
  int n = 3;
  int q = 2;
  std::uint64_t seed = 1;
  int random_combinations = 100;
};

/// Coassociativity, counit, compatibility, (co)commutativity and the antipode on
/// every basis of the SC, Pi and dual families, up to grade n.
CheckLog verify_hopf(const VerifyOptions& options, SupercharTableCache& cache);
/// ch (onto m at q = 2, onto colored k otherwise) and dual_ch (q = 2) are Hopf morphisms up to total grade n.
CheckLog verify_isomorphisms(const VerifyOptions& options);
/// Formula tables and sizes against the brute-force oracle, inner products, and functor adjointness.
CheckLog verify_oracle(const VerifyOptions& options, SupercharTableCache& cache);
/// The four supercharacter theory axioms for every m <= n.
CheckLog verify_axioms(const VerifyOptions& options);
/// Pairing adjointness between kappa* and kappa, plus the dual-side cross-checks.
CheckLog verify_duality(const VerifyOptions& options);
/// SC^(k) closure (k = 1, 2), LSC dimensions, and independence of kappa_[k] products.
CheckLog verify_subalgebras(const VerifyOptions& options, SupercharTableCache& cache);
/// Truncated x_ij realization against product_M for m + n <= options.n at N = m + n + 1.
CheckLog verify_truncated(const VerifyOptions& options);

/// Dispatches on hopf, iso, oracle, axioms, duality, subalgebras, truncated.
CheckLog run_suite(const std::string& suite, const VerifyOptions& options, SupercharTableCache& cache);

/// Bell numbers by the recurrence B(n+1) = sum_k C(n, k) B(k).
std::vector<Integer> bell_numbers(int up_to);

}  // namespace nchopf

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nsym {

struct SweepOptions {
  /// Degree cap; each suite documents what it bounds.
  int max_size = 7;
  /// Cap on length(beta) where a suite sweeps a right factor.
  std::size_t max_length = 4;
  /// Largest single-row factor H_s in the Pieri suites.
  int max_step = 4;
  /// Worker threads, 0 for one per hardware thread.
  unsigned threads = 0;
};

struct SweepReport {
  std::string suite;
  bool passed = true;
  std::size_t checked = 0;
  /// First failing instance in sweep order, empty on a pass.
  std::string counterexample;
  /// Extra findings, e.g. the saturation witnesses.
  std::vector<std::string> notes;
};

/// Default degree cap: NSYM_MAX_DEGREE if set to a positive integer, else 7.
int default_max_size();

/// roundtrip, right-pieri, left-pieri, translation, lr-partition, involution,
/// saturation-sym, saturation-nsym, chi.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite.
SweepReport run_suite(const std::string& name, const SweepOptions& options);

/// H -> S -> H on every H_alpha and S -> H -> S on every S_alpha, |alpha| <= max_size.
SweepReport verify_roundtrip(const SweepOptions& options);
/// right_pieri(alpha, s) against the oracle, |alpha| <= max_size, s <= max_step.
SweepReport verify_right_pieri(const SweepOptions& options);
/// left_pieri(s, beta) against the oracle, |beta| <= max_size,
/// length(beta) <= max_length, s <= min(3, max_step); coefficients in
/// {-1,0,1}; zero-insertion sums agree with the closed form.
SweepReport verify_left_pieri(const SweepOptions& options);
/// C_{alpha,beta}^gamma = C_{alpha+v,beta}^{gamma+v} for |alpha|+|beta| <= max_size,
/// length(v) <= length(alpha), |v| <= 2.
SweepReport verify_translation(const SweepOptions& options);
/// Oracle coefficients of S_alpha S_lambda equal the immaculate Yamanouchi
/// counts, |alpha| + |lambda| <= max_size.
SweepReport verify_lr_partition(const SweepOptions& options);
/// Phi_r laws on T_alpha^beta, |alpha| + |beta| <= max_size.
SweepReport verify_involution(const SweepOptions& options);
/// Saturation for Schur functions with N = 2, |lambda| <= max_size.
SweepReport verify_saturation_sym(const SweepOptions& options);
/// Searches for triples with |gamma| <= max_size violating immaculate
/// saturation for N = 2. Passes when a witness is found, since the property
/// is known to fail.
SweepReport verify_saturation_nsym(const SweepOptions& options);
/// chi(S_lambda) = s_lambda in h, and chi multiplicative on H monomials.
SweepReport verify_chi(const SweepOptions& options);

}  // namespace nsym

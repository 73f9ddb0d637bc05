#include "nsym/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "nsym/algebra.hpp"
#include "nsym/composition.hpp"
#include "nsym/errors.hpp"
#include "nsym/format.hpp"
#include "nsym/involution.hpp"
#include "nsym/pieri.hpp"
#include "nsym/schur.hpp"
#include "nsym/tableau.hpp"

namespace nsym {

namespace {

struct Outcome {
  std::size_t checked = 0;
  std::optional<std::string> failure;
};

/// Runs task(0..n-1) across worker threads and folds the outcomes in index
/// order, so the reported counterexample does not depend on scheduling.
void run_tasks(SweepReport& report, std::size_t n, unsigned threads,
               const std::function<Outcome(std::size_t)>& task) {
  std::vector<Outcome> outcomes(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        outcomes[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned count = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::size_t>(count, std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    report.checked += outcomes[i].checked;
    if (outcomes[i].failure && report.passed) {
      report.passed = false;
      report.counterexample = *outcomes[i].failure;
    }
  }
}

std::vector<Composition> compositions_up_to(int n, std::size_t max_length) {
  std::vector<Composition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = compositions_of(k, max_length);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Composition> compositions_up_to(int n) {
  return compositions_up_to(n, static_cast<std::size_t>(std::max(n, 0)));
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = partitions_of(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

template <class A, class B>
std::vector<std::pair<A, B>> pairs_with_total(const std::vector<A>& as, const std::vector<B>& bs,
                                               int max_total) {
  std::vector<std::pair<A, B>> out;
  for (const auto& a : as)
    for (const auto& b : bs)
      if (a.size() + b.size() <= max_total) out.emplace_back(a, b);
  return out;
}

std::string mismatch(const std::string& what, const LinearCombination& got,
                     const LinearCombination& want) {
  return what + ": got " + render_text(got) + ", expected " + render_text(want);
}

LinearCombination shift_indices(const LinearCombination& f, const Composition& v) {
  LinearCombination out(f.basis());
  for (const auto& [g, c] : f) out.add(add_prefix(g, v), c);
  return out;
}

}  // namespace

int default_max_size() {
  if (const char* env = std::getenv("NSYM_MAX_DEGREE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 7;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "roundtrip",   "right-pieri",    "left-pieri",      "translation", "lr-partition",
      "involution",  "saturation-sym", "saturation-nsym", "chi"};
  return names;
}

SweepReport run_suite(const std::string& name, const SweepOptions& options) {
  static const std::map<std::string, SweepReport (*)(const SweepOptions&)> suites{
      {"roundtrip", verify_roundtrip},
      {"right-pieri", verify_right_pieri},
      {"left-pieri", verify_left_pieri},
      {"translation", verify_translation},
      {"lr-partition", verify_lr_partition},
      {"involution", verify_involution},
      {"saturation-sym", verify_saturation_sym},
      {"saturation-nsym", verify_saturation_nsym},
      {"chi", verify_chi},
  };
  auto it = suites.find(name);
  if (it == suites.end()) throw InvalidArgument("unknown verification suite '" + name + "'");
  return it->second(options);
}

SweepReport verify_roundtrip(const SweepOptions& options) {
  SweepReport report;
  report.suite = "roundtrip";
  const auto alphas = compositions_up_to(options.max_size);
  run_tasks(report, alphas.size(), options.threads, [&](std::size_t i) {
    const Composition& a = alphas[i];
    Outcome o;
    const LinearCombination s_alpha(Basis::S, a);
    const auto back = H_to_immaculate(immaculate_to_H(a));
    ++o.checked;
    if (back != s_alpha) {
      o.failure = mismatch("S->H->S on " + a.to_string(), back, s_alpha);
      return o;
    }
    const LinearCombination h_alpha(Basis::H, a);
    const auto h_back = to_H(H_to_immaculate(h_alpha));
    ++o.checked;
    if (h_back != h_alpha) o.failure = mismatch("H->S->H on " + a.to_string(), h_back, h_alpha);
    return o;
  });
  return report;
}

SweepReport verify_right_pieri(const SweepOptions& options) {
  SweepReport report;
  report.suite = "right-pieri";
  const auto alphas = compositions_up_to(options.max_size);
  run_tasks(report, alphas.size(), options.threads, [&](std::size_t i) {
    Outcome o;
    for (int s = 1; s <= options.max_step && !o.failure; ++s) {
      const auto got = right_pieri(alphas[i], s);
      const auto want = product_in_S_oracle(alphas[i], Composition{s});
      ++o.checked;
      if (got != want)
        o.failure = mismatch("right_pieri(" + alphas[i].to_string() + ", " +
                                 std::to_string(s) + ")",
                             got, want);
    }
    return o;
  });
  return report;
}

SweepReport verify_left_pieri(const SweepOptions& options) {
  SweepReport report;
  report.suite = "left-pieri";
  const auto betas = compositions_up_to(options.max_size, options.max_length);
  const int max_s = std::min(3, options.max_step);
  run_tasks(report, betas.size(), options.threads, [&](std::size_t i) {
    const Composition& beta = betas[i];
    Outcome o;
    for (int s = 1; s <= max_s; ++s) {
      const auto got = left_pieri(s, beta);
      const auto want = product_in_S_oracle(Composition{s}, beta);
      ++o.checked;
      if (got != want) {
        o.failure = mismatch("left_pieri(" + std::to_string(s) + ", " + beta.to_string() + ")",
                             got, want);
        return o;
      }
      for (const auto& [g, c] : got)
        if (c < -1 || c > 1) {
          o.failure = "left_pieri coefficient " + std::to_string(c) + " at " + g.to_string();
          return o;
        }
      if (s != 1) continue;
      // Zero-insertion bookkeeping against the closed form, over every gamma
      // of the two admissible lengths.
      const auto lengths = {beta.length(), beta.length() + 1};
      for (const auto& g : compositions_of(beta.size() + 1, beta.length() + 1)) {
        if (std::find(lengths.begin(), lengths.end(), g.length()) == lengths.end()) continue;
        const Coeff sum = z_signed_sum(beta, g);
        const Coeff closed = left_pieri_unit_coefficient(beta, g);
        ++o.checked;
        if (sum != closed || sum != want.coefficient(g)) {
          o.failure = "zero-insertion sum " + std::to_string(sum) + ", closed form " +
                      std::to_string(closed) + ", oracle " +
                      std::to_string(want.coefficient(g)) + " for beta=" + beta.to_string() +
                      " gamma=" + g.to_string();
          return o;
        }
      }
    }
    return o;
  });
  return report;
}

SweepReport verify_translation(const SweepOptions& options) {
  SweepReport report;
  report.suite = "translation";
  const auto comps = compositions_up_to(options.max_size);
  std::vector<std::pair<Composition, Composition>> pairs;
  for (const auto& [a, b] : pairs_with_total(comps, comps, options.max_size))
    if (!a.empty()) pairs.emplace_back(a, b);
  const std::vector<Composition> shifts{{1}, {2}, {1, 1}};
  run_tasks(report, pairs.size(), options.threads, [&](std::size_t i) {
    const auto& [alpha, beta] = pairs[i];
    Outcome o;
    const auto base = product_in_S_oracle(alpha, beta);
    for (const auto& v : shifts) {
      if (v.length() > alpha.length()) continue;
      const auto shifted = product_in_S_oracle(add_prefix(alpha, v), beta);
      const auto expected = shift_indices(base, v);
      ++o.checked;
      if (shifted != expected) {
        o.failure = mismatch("alpha=" + alpha.to_string() + " beta=" + beta.to_string() +
                                 " v=" + v.to_string(),
                             shifted, expected);
        return o;
      }
    }
    return o;
  });
  return report;
}

SweepReport verify_lr_partition(const SweepOptions& options) {
  SweepReport report;
  report.suite = "lr-partition";
  const auto comps = compositions_up_to(options.max_size);
  const auto parts = partitions_up_to(options.max_size);
  const auto pairs = pairs_with_total(comps, parts, options.max_size);
  run_tasks(report, pairs.size(), options.threads, [&](std::size_t i) {
    const auto& [alpha, lambda] = pairs[i];
    Outcome o;
    const auto want = product_in_S_oracle(alpha, lambda);
    const auto got = immaculate_LR_expansion(alpha, lambda);
    o.checked = std::max<std::size_t>(want.size(), 1);
    if (got != want)
      o.failure = mismatch("alpha=" + alpha.to_string() + " lambda=" + lambda.to_string(), got,
                           want);
    return o;
  });
  return report;
}

SweepReport verify_involution(const SweepOptions& options) {
  SweepReport report;
  report.suite = "involution";
  const auto comps = compositions_up_to(options.max_size);
  std::vector<std::pair<Composition, Composition>> pairs;
  for (const auto& [a, b] : pairs_with_total(comps, comps, options.max_size))
    if (!b.empty()) pairs.emplace_back(a, b);
  run_tasks(report, pairs.size(), options.threads, [&](std::size_t i) {
    const auto& [alpha, beta] = pairs[i];
    Outcome o;
    const int rows = static_cast<int>(alpha.length() + beta.length());
    auto where = [&](const SkewTableau& t, int r) {
      return "alpha=" + alpha.to_string() + " beta=" + beta.to_string() + " T=" + t.to_string() +
             " r=" + std::to_string(r);
    };
    for_each_T_alpha_beta(alpha, beta, [&](const TableauWithSigma& tw) {
      if (o.failure) return;
      const SkewTableau& t = tw.tableau;
      const YImage y = y_map(t, beta);
      ++o.checked;
      if (y_inverse(y.tableau, y.sigma, alpha) != t) {
        o.failure = "Y round trip fails: " + where(t, 0);
        return;
      }
      for (int r = 1; r <= rows; ++r) {
        const SkewTableau image = phi_r(t, beta, r);
        ++o.checked;
        const auto image_sigma = sigma_of(image, beta);
        if (!image_sigma || !is_immaculate(image) || image.inner() != alpha) {
          o.failure = "Phi_r leaves T_alpha^beta: " + where(t, r);
          return;
        }
        if (phi_r(image, beta, r) != t) {
          o.failure = "Phi_r is not an involution: " + where(t, r);
          return;
        }
        if (image.outer_shape() != t.outer_shape()) {
          o.failure = "Phi_r changes the shape: " + where(t, r);
          return;
        }
        const auto acting = most_nefarious_cell(t, beta, r);
        if (acting && acting != leftmost_nefarious_cell(y.tableau, r)) {
          o.failure = "acting cell is not the left-most nefarious cell: " + where(t, r);
          return;
        }
        if (image != t) {
          const Permutation expected =
              Permutation::adjacent_transposition(beta.length(), r - 1).compose(tw.sigma);
          if (image_sigma->sign() != -tw.sigma.sign() || !(*image_sigma == expected)) {
            o.failure = "Phi_r does not reverse the sign: " + where(t, r);
            return;
          }
        }
      }
    });
    return o;
  });
  return report;
}

SweepReport verify_saturation_sym(const SweepOptions& options) {
  SweepReport report;
  report.suite = "saturation-sym";
  const auto parts = partitions_up_to(options.max_size);
  const auto pairs = pairs_with_total(parts, parts, options.max_size);
  run_tasks(report, pairs.size(), options.threads, [&](std::size_t i) {
    const auto& [mu, nu] = pairs[i];
    Outcome o;
    for (const auto& lambda : partitions_of(mu.size() + nu.size())) {
      ++o.checked;
      if (!saturation_check_sym(mu, nu, lambda, 2)) {
        o.failure = "mu=" + mu.to_string() + " nu=" + nu.to_string() +
                    " lambda=" + lambda.to_string() + " N=2";
        return o;
      }
    }
    return o;
  });
  return report;
}

SweepReport verify_saturation_nsym(const SweepOptions& options) {
  SweepReport report;
  report.suite = "saturation-nsym";
  const std::size_t max_combined = options.max_length + 1;
  std::vector<std::string> witnesses;
  for (int n = 2; n <= options.max_size && witnesses.empty(); ++n) {
    std::vector<std::pair<Composition, Composition>> pairs;
    for (int a = 1; a < n; ++a)
      for (const auto& alpha : compositions_of(a))
        for (const auto& beta : compositions_of(n - a))
          if (alpha.length() + beta.length() <= max_combined) pairs.emplace_back(alpha, beta);
    std::vector<std::vector<std::string>> found(pairs.size());
    SweepReport level;
    level.suite = "saturation-nsym";
    run_tasks(level, pairs.size(), options.threads, [&](std::size_t i) {
      const auto& [alpha, beta] = pairs[i];
      Outcome o;
      const auto base = product_in_S_oracle(alpha, beta);
      const auto scaled = product_in_S_oracle(scale(alpha, 2), scale(beta, 2));
      std::map<Composition, std::pair<Coeff, Coeff>> table;
      for (const auto& [g, c] : base) table[g].first = c;
      for (const auto& [g, c] : scaled) {
        if (std::any_of(g.begin(), g.end(), [](int p) { return p % 2 != 0; })) continue;
        std::vector<int> half = g.vector();
        for (int& p : half) p /= 2;
        table[Composition(half)].second = c;
      }
      o.checked = table.size();
      for (const auto& [g, cs] : table)
        if ((cs.first != 0) != (cs.second != 0))
          found[i].push_back("alpha=" + alpha.to_string() + " beta=" + beta.to_string() +
                             " gamma=" + g.to_string() + ": C=" + std::to_string(cs.first) +
                             ", C(2x)=" + std::to_string(cs.second));
      return o;
    });
    report.checked += level.checked;
    for (const auto& f : found) witnesses.insert(witnesses.end(), f.begin(), f.end());
  }
  if (options.max_size >= 9) {
    const Composition alpha{1, 1}, beta{3, 2, 2}, gamma{3, 3, 1, 1, 1};
    const Coeff c = structure_constant(alpha, beta, gamma);
    const Coeff c2 = structure_constant(scale(alpha, 2), scale(beta, 2), scale(gamma, 2));
    report.notes.push_back("alpha=(1,1) beta=(3,2,2) gamma=(3,3,1,1,1): C=" + std::to_string(c) +
                           ", C(2x)=" + std::to_string(c2));
    ++report.checked;
    if (c != 0 || c2 == 0) {
      report.passed = false;
      report.counterexample = "known instance does not violate saturation";
    }
  }
  if (witnesses.empty()) {
    report.passed = false;
    report.counterexample =
        "no saturation witness with |gamma| <= " + std::to_string(options.max_size);
  } else {
    report.notes.insert(report.notes.begin(), "first witness: " + witnesses.front());
    report.notes.insert(report.notes.begin() + 1,
                        "witnesses at that size: " + std::to_string(witnesses.size()));
  }
  return report;
}

SweepReport verify_chi(const SweepOptions& options) {
  SweepReport report;
  report.suite = "chi";
  const auto parts = partitions_up_to(options.max_size);
  run_tasks(report, parts.size(), options.threads, [&](std::size_t i) {
    Outcome o;
    const auto got = forgetful_chi(immaculate_to_H(parts[i]));
    const auto want = schur_to_h(parts[i]);
    ++o.checked;
    if (got != want) o.failure = mismatch("chi(S" + parts[i].to_string() + ")", got, want);
    return o;
  });
  const auto comps = compositions_up_to(std::min(options.max_size, 6));
  const auto pairs = pairs_with_total(comps, comps, std::min(options.max_size, 6));
  run_tasks(report, pairs.size(), options.threads, [&](std::size_t i) {
    const auto& [a, b] = pairs[i];
    Outcome o;
    const LinearCombination ha(Basis::H, a), hb(Basis::H, b);
    const auto lhs = forgetful_chi(h_multiply(ha, hb));
    const auto rhs = sym_multiply(forgetful_chi(ha), forgetful_chi(hb));
    ++o.checked;
    if (lhs != rhs) o.failure = mismatch("chi(H" + a.to_string() + "H" + b.to_string() + ")", lhs, rhs);
    return o;
  });
  return report;
}

}  // namespace nsym

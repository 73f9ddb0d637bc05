// Acceptance run: one PASS/FAIL line per criterion, each with its wall-clock
// budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nsym/algebra.hpp"
#include "nsym/errors.hpp"
#include "nsym/format.hpp"
#include "nsym/pieri.hpp"
#include "nsym/schur.hpp"
#include "nsym/tableau.hpp"
#include "nsym/verify.hpp"

using namespace nsym;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

Outcome from_report(const SweepReport& r) {
  Outcome o;
  o.expect(r.passed, r.suite + ": " + r.counterexample);
  o.detail = o.ok ? std::to_string(r.checked) + " checks" : o.detail;
  return o;
}

std::vector<Composition> compositions_up_to(int n, std::size_t max_length = 64) {
  std::vector<Composition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& c : compositions_of(k, max_length)) out.push_back(c);
  return out;
}

LinearCombination two_times_two_four() {
  LinearCombination f(Basis::S);
  f.add({3, 1, 4}, 1);
  f.add({2, 2, 4}, 1);
  f.add({3, 2, 3}, 1);
  f.add({5, 3}, -1);
  f.add({4, 3, 1}, -1);
  return f;
}

Outcome criterion_1() {
  Outcome o;
  const auto expected = two_times_two_four();
  o.expect(product_in_S_oracle({2}, {2, 4}) == expected, "oracle");
  o.expect(signed_product({2}, {2, 4}) == expected, "signed sum");
  o.expect(signed_product_by_tableaux({2}, {2, 4}) == expected, "signed sum over tableaux");
  o.expect(left_pieri(2, {2, 4}) == expected, "closed-form left Pieri");
  if (o.ok) o.detail = render_text(expected);
  return o;
}

Outcome criterion_2() {
  Outcome o;
  o.expect(structure_constant({1, 1}, {3, 2, 2}, {3, 3, 1, 1, 1}) == 0, "oracle C = 0");
  o.expect(structure_constant({2, 2}, {6, 4, 4}, {6, 6, 2, 2, 2}) == 1, "oracle C(2x) = 1");
  o.expect(count_immaculate_LR({1, 1}, {3, 2, 2}, {3, 3, 1, 1, 1}) == 0, "tableau count 0");
  o.expect(count_immaculate_LR({2, 2}, {6, 4, 4}, {6, 6, 2, 2, 2}) == 1, "tableau count 1");
  // The scaled instance again, counted straight from the filling search.
  FillingOptions opts;
  opts.outer = Composition{6, 6, 2, 2, 2};
  opts.yamanouchi = true;
  std::size_t yamanouchi = 0;
  for_each_filling({2, 2}, {6, 4, 4}, opts, [&](const SkewTableau& t) {
    if (is_immaculate(t) && is_yamanouchi(t)) ++yamanouchi;
  });
  o.expect(yamanouchi == 1, "Yamanouchi count at the scaled instance");
  o.expect(!saturation_check_nsym({1, 1}, {3, 2, 2}, {3, 3, 1, 1, 1}, 2), "saturation fails");
  if (o.ok) o.detail = "C = 0, C(2x) = 1, one Yamanouchi tableau";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const Coeff closed = left_pieri_unit_coefficient({3, 1, 4}, {2, 3, 2, 2});
  o.expect(closed == -1, "closed form");
  o.expect(closed == sgn({1, -1, 2}), "sign vector");
  o.expect(structure_constant({1}, {3, 1, 4}, {2, 3, 2, 2}) == closed, "oracle");
  if (o.ok) o.detail = "C = -1";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& a : compositions_up_to(6))
    for (int s = 1; s <= 4; ++s, ++n)
      o.expect(right_pieri(a, s) == product_in_S_oracle(a, {s}),
               "alpha=" + a.to_string() + " s=" + std::to_string(s));
  if (o.ok) o.detail = std::to_string(n) + " pairs";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& b : compositions_up_to(7, 4))
    for (int s = 1; s <= 3; ++s, ++n) {
      const auto lp = left_pieri(s, b);
      const std::string where = "s=" + std::to_string(s) + " beta=" + b.to_string();
      o.expect(lp == product_in_S_oracle({s}, b), where);
      for (const auto& [g, c] : lp) o.expect(c == 1 || c == -1, where + " coefficient");
    }
  if (o.ok) o.detail = std::to_string(n) + " pairs";
  return o;
}

Outcome criterion_6() {
  SweepOptions opts;
  opts.max_size = 6;
  return from_report(verify_translation(opts));
}

Outcome criterion_7() {
  Outcome o;
  std::size_t n = 0;
  for (int total = 0; total <= 7; ++total)
    for (int k = 0; k <= total; ++k)
      for (const auto& lambda : partitions_of(k))
        for (const auto& a : compositions_of(total - k)) {
          ++n;
          const auto oracle = product_in_S_oracle(a, lambda);
          const std::string where = "alpha=" + a.to_string() + " lambda=" + lambda.to_string();
          o.expect(oracle == immaculate_LR_expansion(a, lambda), where);
          for (const auto& [g, c] : oracle) o.expect(c > 0, where + " sign");
        }
  if (o.ok) o.detail = std::to_string(n) + " pairs";
  return o;
}

Outcome criterion_8() {
  SweepOptions opts;
  opts.max_size = 6;
  return from_report(verify_involution(opts));
}

Outcome criterion_9() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& a : compositions_up_to(8)) {
    ++n;
    const LinearCombination h(Basis::H, a);
    o.expect(to_H(H_to_immaculate(h)) == h, "H" + a.to_string());
    o.expect(H_to_immaculate(immaculate_to_H(a)) == LinearCombination(Basis::S, a),
             "S" + a.to_string());
  }
  if (o.ok) o.detail = std::to_string(n) + " indices";
  return o;
}

Outcome criterion_10() {
  Outcome o;
  std::size_t triples = 0;
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int k = 0; k <= n; ++k)
        for (const auto& mu : partitions_of(k))
          for (const auto& nu : partitions_of(n - k)) {
            ++triples;
            o.expect(static_cast<Coeff>(lr_coefficient_tableau(mu, nu, lambda)) ==
                         lr_coefficient_algebra(mu, nu, lambda),
                     "LR " + mu.to_string() + nu.to_string() + lambda.to_string());
            if (n <= 6)
              o.expect(saturation_check_sym(mu, nu, lambda, 2),
                       "saturation " + mu.to_string() + nu.to_string() + lambda.to_string());
          }
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      o.expect(h_to_schur(forgetful_chi(immaculate_to_H(lambda))) ==
                   LinearCombination(Basis::s, lambda),
               "chi " + lambda.to_string());
  if (o.ok) o.detail = std::to_string(triples) + " LR triples";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "S_2 * S_(2,4) by oracle, signed sum and left Pieri", 1, criterion_1},
      {2, "saturation counterexample constants and tableau counts", 10, criterion_2},
      {3, "left Pieri closed form coefficient -1", 1, criterion_3},
      {4, "right Pieri = oracle, |alpha| <= 6, s <= 4", 120, criterion_4},
      {5, "left Pieri = oracle, |beta| <= 7, length <= 4, s <= 3", 300, criterion_5},
      {6, "translation invariance, |alpha|+|beta| <= 6, |v| <= 2", 300, criterion_6},
      {7, "immaculate LR counts = oracle, |alpha|+|lambda| <= 7", 300, criterion_7},
      {8, "involution laws, |alpha|+|beta| <= 6", 300, criterion_8},
      {9, "basis round trips, degree <= 8", 60, criterion_9},
      {10, "LR rule, Sym saturation, chi(S_lambda) = s_lambda", 300, criterion_10},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_seconds) {
      o.ok = false;
      o.detail = "over budget of " + std::to_string(static_cast<int>(c.budget_seconds)) + " s";
    }
    failures += !o.ok;
    std::printf("%s criterion %2d: %s [%.2f s] %s\n", o.ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

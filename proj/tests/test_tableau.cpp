#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "nsym/algebra.hpp"
#include "nsym/errors.hpp"
#include "nsym/tableau.hpp"
#include "support.hpp"

using namespace nsym;
using nsym::testing::compositions_up_to;
using Rows = std::vector<SkewTableau::Row>;

namespace {

// Sample fillings used throughout.
const SkewTableau kSample{{}, Rows{{1, 1, 2}, {2}, {2, 3}}};
const SkewTableau kSkewSample{{1, 2}, Rows{{1, 1, 2}, {2}, {2, 3}}};
const SkewTableau kSaturationN2{{2, 2}, Rows{{1, 1, 1, 1}, {1, 2, 2, 2}, {1, 3}, {2, 3}, {3, 3}}};
const SkewTableau kSaturationCandidate{{1, 1}, Rows{{1, 1}, {2, 3}, {1}, {2}, {3}}};
const SkewTableau kTranslationExample{{1}, Rows{{2}, {1, 2, 2}, {2}}};
const SkewTableau kFixedPoint511{{1}, Rows{{1}, {1, 1, 3}, {2, 2}, {3, 3}}};

std::vector<Composition> outer_shapes(const std::vector<SkewTableau>& ts) {
  std::vector<Composition> out;
  for (const auto& t : ts) out.push_back(t.outer_shape());
  return out;
}

}  // namespace

TEST_CASE("skew tableau geometry") {
  CHECK(kSample.outer_shape() == Composition{3, 1, 2});
  CHECK(kSkewSample.outer_shape() == Composition{4, 3, 2});
  CHECK(kSkewSample.cell_count() == 6);
  CHECK(kSkewSample.first_column() == std::vector<int>{2});
  CHECK(kSaturationCandidate.first_column() == std::vector<int>{1, 2, 3});
  CHECK(kSkewSample.max_entry() == 3);
  CHECK_THROWS_AS(SkewTableau({}, Rows{{0}}), InvalidArgument);
  // Padding to the inner shape and trimming of trailing empty rows.
  CHECK(SkewTableau({2, 1}, Rows{{1}}).row_count() == 2);
  CHECK(SkewTableau({}, Rows{{1}, {}, {}}).row_count() == 1);
  CHECK_THROWS_AS(SkewTableau({}, Rows{{1}, {}, {2}}).outer_shape(), InvalidArgument);
}

TEST_CASE("reading_word") {
  CHECK(reading_word(kSample) == std::vector<int>{2, 1, 1, 2, 3, 2});
  CHECK(reading_word(SkewTableau{}).empty());
  CHECK(reading_word(kSaturationCandidate) == std::vector<int>{1, 1, 3, 2, 1, 2, 3});
}

TEST_CASE("content") {
  CHECK(content(kSample, 3) == IntVector{2, 3, 1});
  CHECK(content(kTranslationExample, 3) == IntVector{1, 4, 0});
  CHECK(content(SkewTableau{}, 2) == IntVector{0, 0});
  CHECK_THROWS_AS(content(kSample, 2), InvalidArgument);
}

TEST_CASE("is_immaculate") {
  CHECK_FALSE(is_immaculate(kSample));
  CHECK(is_immaculate(kSaturationCandidate));
  CHECK(is_immaculate(SkewTableau({}, Rows{{1, 1, 2}})));
  CHECK_FALSE(is_immaculate(SkewTableau({}, Rows{{2, 1}})));
  CHECK(is_immaculate(kSkewSample));
}

TEST_CASE("is_semistandard") {
  CHECK(is_semistandard(SkewTableau({}, Rows{{1, 1}, {2, 2}})));
  CHECK_FALSE(is_semistandard(SkewTableau({}, Rows{{1, 1}, {1, 2}})));
  CHECK_FALSE(is_semistandard(kSample));
  // Inner offsets shift the column comparison.
  CHECK(is_semistandard(SkewTableau({1}, Rows{{1}, {1, 2}})));
  CHECK_FALSE(is_semistandard(SkewTableau({1}, Rows{{1}, {2, 1}})));
}

TEST_CASE("is_yamanouchi") {
  CHECK_FALSE(is_yamanouchi(kSaturationCandidate));
  CHECK(is_yamanouchi(kSaturationN2));
  CHECK(is_yamanouchi(SkewTableau{}));
  CHECK(is_lattice_word(std::vector<int>{1, 1, 2, 1, 2, 3}));
  CHECK_FALSE(is_lattice_word(std::vector<int>{1, 2, 2}));
  CHECK_FALSE(is_lattice_word(std::vector<int>{2}));
}

TEST_CASE("enumerate_skew_immaculate") {
  const auto ts = enumerate_skew_immaculate({2}, {2});
  std::set<Composition> shapes;
  for (const auto& s : outer_shapes(ts)) shapes.insert(s);
  CHECK(shapes == std::set<Composition>{{4}, {3, 1}, {2, 2}});
  CHECK(ts.size() == 3);

  const auto empty = enumerate_skew_immaculate({}, {0, 0});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].cell_count() == 0);
  CHECK(enumerate_skew_immaculate({}, {}).size() == 1);

  // The single filling of shape beta with content beta.
  const auto fixed = enumerate_skew_immaculate({}, {2, 1, 3}, Composition{2, 1, 3});
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0] == SkewTableau({}, Rows{{1, 1}, {2}, {3, 3, 3}}));

  // The final tableau of the left Pieri worked example has content (3,2,3).
  const auto ex = enumerate_skew_immaculate({1}, {3, 2, 3}, Composition{2, 3, 2, 2});
  CHECK(std::find(ex.begin(), ex.end(), kFixedPoint511) != ex.end());
}

TEST_CASE("enumeration is deterministic and sorted row by row") {
  const auto a = enumerate_skew_immaculate({1, 2}, {2, 1, 1});
  const auto b = enumerate_skew_immaculate({1, 2}, {2, 1, 1});
  CHECK(a == b);
  std::vector<Rows> rows;
  for (const auto& t : a) rows.push_back(t.rows());
  CHECK(std::adjacent_find(rows.begin(), rows.end()) == rows.end());
}

TEST_CASE("enumeration respects the search bound") {
  FillingOptions opts;
  opts.max_nodes = 50;
  CHECK_THROWS_AS(count_fillings({}, {3, 3, 3}, opts), ResourceLimit);
  opts.max_nodes = kDefaultSearchBound;
  CHECK(count_fillings({}, {3, 3, 3}, opts) > 0);
}

TEST_CASE("enumeration properties on generated tableaux") {
  for (const auto& inner : compositions_up_to(3))
    for (const IntVector& c : {IntVector{2, 1}, IntVector{1, 1, 1}, IntVector{2, 0, 2}}) {
      const int cells = std::accumulate(c.begin(), c.end(), 0);
      IntVector padded = c;
      padded.resize(3, 0);
      FillingOptions immaculate_opts, ssyt_opts;
      ssyt_opts.strict_columns = true;
      std::size_t immaculate = 0, semistandard = 0;
      for_each_filling(inner, c, immaculate_opts, [&](const SkewTableau& t) {
        ++immaculate;
        CHECK(is_immaculate(t));
        CHECK(reading_word(t).size() == static_cast<std::size_t>(cells));
        CHECK(content(t, 3) == padded);
        CHECK(t.outer_shape().size() == inner.size() + cells);
      });
      for_each_filling(inner, c, ssyt_opts, [&](const SkewTableau& t) {
        ++semistandard;
        CHECK(is_semistandard(t));
        CHECK(is_immaculate(t));  // strict columns imply a strict first column
      });
      CHECK(semistandard <= immaculate);
    }
}

TEST_CASE("count_immaculate_LR") {
  CHECK(count_immaculate_LR({1, 1}, {3, 2, 2}, {3, 3, 1, 1, 1}) == 0);
  CHECK(count_immaculate_LR({2, 2}, {6, 4, 4}, {6, 6, 2, 2, 2}) == 1);
  CHECK_THROWS_AS(count_immaculate_LR({1}, {1, 2}, {2, 2}), InvalidArgument);
}

TEST_CASE("single-cell content forces a right Pieri successor") {
  for (const auto& a : compositions_up_to(5))
    for (const auto& g : compositions_of(a.size() + 1))
      CHECK(count_immaculate_LR(a, {1}, g) == (is_right_pieri_successor(a, g, 1) ? 1u : 0u));
}

TEST_CASE("immaculate LR expansion equals the oracle, |alpha| + |lambda| <= 6") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& lambda : partitions_of(k))
        for (const auto& a : compositions_of(n - k)) {
          const auto lr = immaculate_LR_expansion(a, lambda);
          CHECK(lr == product_in_S_oracle(a, lambda));
          for (const auto& [g, c] : lr) CHECK(c > 0);
        }
}

TEST_CASE("sigma_of and TableauWithSigma") {
  const auto s = sigma_of(kTranslationExample, {1, 3, 1});
  REQUIRE(s.has_value());
  CHECK(*s == Permutation{1, 3, 2});
  CHECK_FALSE(sigma_of(kTranslationExample, {2, 2, 1}).has_value());
  CHECK_NOTHROW(TableauWithSigma(kTranslationExample, Permutation{1, 3, 2}, {1, 3, 1}));
  CHECK_THROWS_AS(TableauWithSigma(kTranslationExample, Permutation{1, 2, 3}, {1, 3, 1}),
                  InvalidArgument);
}

TEST_CASE("enumerate_T_alpha_beta") {
  auto contains = [](const std::vector<TableauWithSigma>& ts, const SkewTableau& t,
                     const Permutation& s) {
    return std::any_of(ts.begin(), ts.end(),
                       [&](const auto& x) { return x.tableau == t && x.sigma == s; });
  };
  CHECK(contains(enumerate_T_alpha_beta({1}, {1, 3, 1}), kTranslationExample, {1, 3, 2}));
  CHECK(contains(enumerate_T_alpha_beta({1, 2}, {2, 2, 2}), kSkewSample, {1, 3, 2}));
  CHECK(contains(enumerate_T_alpha_beta({1}, {3, 1, 4}), kFixedPoint511, {1, 3, 2}));

  const auto row = enumerate_T_alpha_beta({}, {4});
  REQUIRE(row.size() == 1);
  CHECK(row[0].tableau == SkewTableau({}, Rows{{1, 1, 1, 1}}));
  CHECK(row[0].sigma == Permutation::identity(1));

  // Translating the inner shape keeps membership.
  const SkewTableau small{{1, 1, 2}, Rows{{1}, {1, 2, 3}, {3, 3}}};
  const SkewTableau shifted{{2, 3, 2}, Rows{{1}, {1, 2, 3}, {3, 3}}};
  CHECK(contains(enumerate_T_alpha_beta({1, 1, 2}, {2, 1, 3}), small, Permutation{1, 2, 3}));
  CHECK(contains(enumerate_T_alpha_beta({2, 3, 2}, {2, 1, 3}), shifted, Permutation{1, 2, 3}));
}

TEST_CASE("every member of T_alpha^beta is immaculate with a valid sigma") {
  for (const auto& a : compositions_up_to(3))
    for (const auto& b : compositions_up_to(4, 3))
      for_each_T_alpha_beta(a, b, [&](const TableauWithSigma& ts) {
        CHECK(is_immaculate(ts.tableau));
        CHECK(ts.tableau.inner() == a);
        const auto s = sigma_of(ts.tableau, b);
        REQUIRE(s.has_value());
        CHECK(*s == ts.sigma);
      });
}

TEST_CASE("signed product examples") {
  const auto expected = product_in_S_oracle({2}, {2, 4});
  CHECK(signed_product({2}, {2, 4}) == expected);
  CHECK(signed_product_by_tableaux({2}, {2, 4}) == expected);
  CHECK(signed_product({3, 1}, {}) == LinearCombination(Basis::S, {3, 1}));
  CHECK(signed_product({1}, {2}) == product_in_S_oracle({1}, {2}));
  CHECK(signed_coefficient({1}, {3, 1, 4}, {2, 3, 2, 2}) == -1);
  CHECK(signed_coefficient({2}, {2, 4}, {5, 3}) == -1);
}

TEST_CASE("signed product equals the oracle, |alpha| + |beta| <= 7, length(beta) <= 4") {
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& a : compositions_of(n - k))
        for (const auto& b : compositions_of(k, 4)) {
          const auto oracle = product_in_S_oracle(a, b);
          CHECK(signed_product(a, b) == oracle);
          if (n <= 5) CHECK(signed_product_by_tableaux(a, b) == oracle);
        }
}

TEST_CASE("signed_coefficient agrees with structure_constant") {
  auto rng = nsym::testing::make_rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = nsym::testing::random_composition(rng, 3);
    const auto b = nsym::testing::random_composition(rng, 3);
    for (const auto& g : compositions_of(a.size() + b.size()))
      CHECK(signed_coefficient(a, b, g) == structure_constant(a, b, g));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nsym/errors.hpp"
#include "nsym/involution.hpp"
#include "support.hpp"

using namespace nsym;
using nsym::testing::compositions_up_to;
using Rows = std::vector<SkewTableau::Row>;

namespace {

const SkewTableau kExample54{{1, 2}, Rows{{1, 1, 2}, {2}, {2, 3}}};
const Composition kBeta54{2, 2, 2};

SkewTableau straight(Rows rows) { return SkewTableau({}, std::move(rows)); }

}  // namespace

TEST_CASE("y_map on the worked example") {
  const auto y = y_map(kExample54, kBeta54);
  CHECK(y.sigma == Permutation{1, 3, 2});
  CHECK(y.tableau == straight({{1, 1}, {3}, {1, 2, 3}}));
}

TEST_CASE("y_map on a single row") {
  const auto y = y_map(straight({{1, 1, 1}}), {3});
  CHECK(y.sigma == Permutation::identity(1));
  CHECK(y.tableau == straight({{1, 1, 1}}));
}

TEST_CASE("y_map keeps empty rows") {
  // sigma = (2,3,1): no entry lands in row 1 of the image.
  const SkewTableau t{{1, 2}, Rows{{1, 1}, {2, 2}, {1}, {2}}};
  const auto y = y_map(t, {2, 2, 2});
  CHECK(y.sigma == Permutation{2, 3, 1});
  CHECK(y.tableau.row(0).empty());
  CHECK(y_inverse(y.tableau, y.sigma, t.inner()) == t);
}

TEST_CASE("y_map rejects tableaux outside T_alpha^beta") {
  CHECK_THROWS_AS(y_map(straight({{2, 1}}), {2}), InvalidArgument);
  CHECK_THROWS_AS(y_map(straight({{1, 1}}), {3}), InvalidArgument);
}

TEST_CASE("y_inverse") {
  CHECK(y_inverse(straight({{1, 1}, {3}, {1, 2, 3}}), {1, 3, 2}, {1, 2}) == kExample54);
  // With sigma the identity and diagonal content, the image is the fixed tableau itself.
  const auto fixed = straight({{1, 1}, {2}, {3, 3, 3}});
  CHECK(y_inverse(fixed, Permutation::identity(3), {}) == fixed);
  CHECK_THROWS_AS(y_inverse(straight({{1}, {1}, {1}}), Permutation::identity(2), {}),
                  InvalidArgument);
}

TEST_CASE("nefarious cells") {
  const auto image = straight({{1, 1}, {3}, {1, 2, 3}});
  CHECK(nefarious_cells(image) == std::vector<CellRef>{{3, 1}, {3, 2}, {3, 3}});
  CHECK(nefarious_cells(straight({{1, 1}, {2, 2}})).empty());
  CHECK(nefarious_cells(straight({{1}, {2, 2, 3}})) == std::vector<CellRef>{{2, 2}, {2, 3}});
  CHECK(is_nefarious(image, {3, 1}));
  CHECK_FALSE(is_nefarious(image, {1, 1}));
  CHECK_FALSE(is_nefarious(image, {2, 1}));
  CHECK_THROWS_AS(nefarious_cells(kExample54), InvalidArgument);
  CHECK(leftmost_nefarious_cell(image, 3) == CellRef{3, 1});
  CHECK_FALSE(leftmost_nefarious_cell(image, 2).has_value());
}

TEST_CASE("theta_x on the worked examples") {
  const auto a = straight({{1, 2, 3}, {2, 2, 3}});
  const auto b = straight({{1}, {2, 2, 3}});
  const auto ta = theta_x(a, {2, 2});
  const auto tb = theta_x(b, {2, 2});
  CHECK(ta == straight({{1, 3}, {2, 2, 2, 3}}));
  CHECK(tb == straight({{1, 3}, {2, 2}}));
  CHECK(theta_x(ta, {2, 2}) == a);
  CHECK(theta_x(tb, {2, 2}) == b);
  CHECK_THROWS_AS(theta_x(a, {2, 1}), InvalidArgument);
}

TEST_CASE("theta_x leaves other rows alone") {
  const auto t = straight({{4}, {1, 2, 3}, {2, 2, 3}, {5}});
  const auto out = theta_x(t, {3, 2});
  CHECK(out.rows()[0] == t.rows()[0]);
  CHECK(out.rows()[3] == t.rows()[3]);
}

TEST_CASE("the diagonal tableau is fixed by every phi_r") {
  for (const Composition& b : {Composition{2, 1, 3}, Composition{1, 1, 1}, Composition{3, 2}}) {
    std::vector<SkewTableau::Row> rows;
    for (std::size_t i = 0; i < b.length(); ++i) rows.emplace_back(b[i], static_cast<int>(i + 1));
    const auto t = straight(rows);
    for (int r = 1; r <= static_cast<int>(b.length()); ++r) CHECK(phi_r(t, b, r) == t);
  }
}

TEST_CASE("phi_r laws, |alpha| + |beta| <= 5") {
  std::size_t moved = 0;
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& a : compositions_of(n - k))
        for (const auto& b : compositions_of(k)) {
          const int rows = static_cast<int>(a.length() + b.length());
          for_each_T_alpha_beta(a, b, [&](const TableauWithSigma& ts) {
            const auto& t = ts.tableau;
            const auto y = y_map(t, b);
            CHECK(y.sigma == ts.sigma);
            CHECK(y_inverse(y.tableau, y.sigma, a) == t);
            for (int r = 1; r <= rows; ++r) {
              const auto p = phi_r(t, b, r);
              CHECK(phi_r(p, b, r) == t);
              CHECK(p.outer_shape() == t.outer_shape());
              const auto cell = most_nefarious_cell(t, b, r);
              CHECK(cell.has_value() == (p != t));
              if (cell) {
                ++moved;
                CHECK(cell == leftmost_nefarious_cell(y.tableau, r));
                const auto s = sigma_of(p, b);
                REQUIRE(s.has_value());
                CHECK(s->sign() == -ts.sigma.sign());
                CHECK(*s == Permutation::adjacent_transposition(b.length(), r - 1).compose(ts.sigma));
              }
            }
          });
        }
  CHECK(moved > 0);
}

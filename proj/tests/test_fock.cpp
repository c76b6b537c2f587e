#include "doctest.h"

#include <random>
#include <set>

#include "freefield/error.hpp"
#include "freefield/fock.hpp"

using namespace freefield;
using namespace freefield::fock;
using rootlie::Series;

namespace {

FockVector mode(int ell, int i, Sign s, int twice, const FockVector& v) { return apply_weyl_mode(ell, {i, s, twice}, v); }

FockVector diff(FockVector a, const FockVector& b) {
  add_scaled(a, -1, b);
  return a;
}

/// Sector sizes from the generating function prod_t (1 - x q^t)^{-l} (1 - x^{-1} q^t)^{-l}.
long sector_count(int ell, int s, int d2) {
  const int off = d2;
  // table[d][c + off]
  std::vector<std::vector<long>> t(d2 + 1, std::vector<long>(2 * d2 + 1, 0));
  t[0][off] = 1;
  for (int tw = 1; tw <= d2; tw += 2)
    for (int copy = 0; copy < 2 * ell; ++copy) {
      int dc = copy < ell ? 1 : -1;
      // multiply by 1/(1 - x^dc q^tw)
      for (int d = tw; d <= d2; ++d)
        for (int c = 0; c <= 2 * d2; ++c) {
          int src = c - dc;
          if (src >= 0 && src <= 2 * d2) t[d][c] += t[d - tw][src];
        }
    }
  if (s + off < 0 || s + off > 2 * d2) return 0;
  return t[d2][s + off];
}

std::vector<FockMonomial> small_basis(int ell, int max_d2) {
  std::vector<FockMonomial> out;
  for (int d2 = 0; d2 <= max_d2; ++d2)
    for (int s = -d2; s <= d2; ++s)
      for (auto& m : sector_basis(ell, s, frac(d2, 2))) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("Weyl mode examples") {
  const int l = 2;
  FockVector one = vacuum();
  FockVector am = mode(l, 1, Sign::Minus, -1, one);
  CHECK(mode(l, 1, Sign::Plus, 1, am) == one);
  CHECK(mode(l, 1, Sign::Plus, 1, one).empty());
  FockVector am2 = mode(l, 1, Sign::Minus, -1, am);
  FockVector expect;
  add_scaled(expect, 2, am);
  CHECK(mode(l, 1, Sign::Plus, 1, am2) == expect);
  CHECK_THROWS_AS(mode(l, 3, Sign::Plus, -1, one), Error);
  CHECK(to_string(am) == "a1-(-1/2)");
}

TEST_CASE("canonical commutation relations") {
  const int l = 2;
  auto basis = small_basis(l, 3);
  std::vector<int> idx = {-5, -3, -1, 1, 3, 5};
  for (const auto& m : basis) {
    FockVector v{{m, Rational(1)}};
    for (int i = 1; i <= l; ++i)
      for (int j = 1; j <= l; ++j)
        for (int r : idx)
          for (int s : idx) {
            FockVector c = diff(mode(l, i, Sign::Plus, r, mode(l, j, Sign::Minus, s, v)),
                                mode(l, j, Sign::Minus, s, mode(l, i, Sign::Plus, r, v)));
            FockVector expect = (i == j && r + s == 0) ? v : FockVector{};
            CHECK(c == expect);
            CHECK(diff(mode(l, i, Sign::Plus, r, mode(l, j, Sign::Plus, s, v)),
                       mode(l, j, Sign::Plus, s, mode(l, i, Sign::Plus, r, v)))
                      .empty());
          }
  }
}

TEST_CASE("current examples") {
  for (int l = 2; l <= 5; ++l) {
    GlElement H = GlElement::H(l);
    FockVector c = diff(apply_current(l, H, 1, apply_current(l, H, -1, vacuum())),
                        apply_current(l, H, -1, apply_current(l, H, 1, vacuum())));
    FockVector expect;
    add_scaled(expect, -l, vacuum());
    CHECK(c == expect);
    CHECK(apply_current(l, H, 0, vacuum()).empty());
  }
  const int l = 3;
  FockVector ap = mode(l, 1, Sign::Plus, -1, vacuum());
  CHECK(apply_current(l, GlElement::H(l), 0, ap) == ap);
  FockVector am = mode(l, 2, Sign::Minus, -1, vacuum());
  CHECK(apply_current(l, GlElement::H(l), 0, am) == diff({}, am));
  GlElement e = GlElement::X(1, 2), f = GlElement::X(2, 1);
  FockVector c = diff(apply_current(l, e, 1, apply_current(l, f, -1, vacuum())),
                      apply_current(l, f, -1, apply_current(l, e, 1, vacuum())));
  CHECK(c == diff({}, vacuum()));
  // e(-1) 1 = a1+(-1/2) a2-(-1/2) 1
  CHECK(apply_current(l, e, -1, vacuum()) == mode(l, 1, Sign::Plus, -1, am));
}

TEST_CASE("affine relations at level -1") {
  const int l = 3;
  auto basis = small_basis(l, 3);
  std::vector<GlElement> xs;
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) xs.push_back(GlElement::X(i, j));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    FockVector v{{basis[pick(rng)], Rational(1)}};
    for (const auto& x : xs)
      for (const auto& y : xs)
        for (int m = -2; m <= 2; ++m)
          for (int n = -2; n <= 2; ++n) {
            FockVector lhs = diff(apply_current(l, x, m, apply_current(l, y, n, v)),
                                  apply_current(l, y, n, apply_current(l, x, m, v)));
            FockVector rhs = apply_current(l, gl_bracket(x, y), m + n, v);
            if (m + n == 0) add_scaled(rhs, -m * gl_form(x, y), v);
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("charge additivity and grading") {
  const int l = 3;
  auto basis = small_basis(l, 4);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> sp(1, l), md(-3, 3), kind(0, 2);
  GlElement H = GlElement::H(l);
  int checked = 0;
  for (int trial = 0; trial < 20000 && checked < 1200; ++trial) {
    const auto& m = basis[pick(rng)];
    FockVector v{{m, Rational(1)}};
    FockVector y;
    int cx = 0, shift2 = 0;
    int k = kind(rng);
    if (k == 2) {
      int n = md(rng);
      y = apply_current(l, GlElement::X(sp(rng), sp(rng)), n, v);
      shift2 = -2 * n;
    } else {
      int twice = 2 * md(rng) + 1;
      Sign s = k == 0 ? Sign::Plus : Sign::Minus;
      cx = k == 0 ? 1 : -1;
      y = mode(l, sp(rng), s, twice, v);
      shift2 = -twice;
    }
    if (y.empty()) continue;
    FockVector expect;
    add_scaled(expect, cx + charge(m), y);
    CHECK(apply_current(l, H, 0, y) == expect);
    for (const auto& [mm, c] : y) CHECK(twice_degree(mm) == twice_degree(m) + shift2);
    ++checked;
  }
  CHECK(checked >= 1000);
}

TEST_CASE("sector bases") {
  CHECK(sector_basis(3, 0, 0).size() == 1);
  CHECK(sector_basis(3, 0, 1).size() == 9);
  auto s1 = sector_basis(3, 1, Rational(1, 2));
  REQUIRE(s1.size() == 3);
  std::set<std::vector<int>> weights;
  for (const auto& m : s1) weights.insert(gl_weight(3, m));
  CHECK(weights == std::set<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(sector_basis(3, 1, 1).empty());
  for (int l = 1; l <= 4; ++l)
    for (int d2 = 0; d2 <= 7; ++d2)
      for (int s = -d2; s <= d2; ++s)
        CHECK(static_cast<long>(sector_basis(l, s, frac(d2, 2)).size()) == sector_count(l, s, d2));
}

TEST_CASE("Sugawara decomposition of the conformal vector") {
  for (int l = 2; l <= 5; ++l) {
    auto cv = conformal_vectors(l);
    FockVector sum = cv.omega_sug;
    add_scaled(sum, 1, cv.omega_one);
    CHECK(sum == cv.omega);
    CHECK(apply_current(l, GlElement::H(l), 0, cv.omega).empty());
    for (const auto& [m, c] : cv.omega) CHECK(twice_degree(m) == 4);
  }
}

TEST_CASE("matrix-unit image of the Chevalley basis") {
  for (int l = 3; l <= 5; ++l) {
    rootlie::ChevalleyBasis b(rootlie::RootSystem::build({Series::A, l - 1}));
    auto signs = affine::gl_realization_signs(b);
    for (std::size_t x = 0; x < b.dim(); ++x)
      for (std::size_t y = 0; y < b.dim(); ++y) {
        GlElement expect;
        for (auto [z, c] : b.bracket(x, y)) expect.add(gl_image(b, signs, z), c);
        CHECK(gl_bracket(gl_image(b, signs, x), gl_image(b, signs, y)) == expect);
        CHECK(gl_form(gl_image(b, signs, x), gl_image(b, signs, y)) == b.form(x, y));
      }
  }
}

TEST_CASE("phi kills the explicit singular vector") {
  for (int l = 3; l <= 5; ++l) {
    auto pv = affine::build_paper_vector(affine::VectorKind::A_type, l);
    CHECK(phi_image(l, pv.algebra, pv.vector).empty());
  }
  affine::AffineAlgebra alg({Series::A, 2}, -1);
  auto signs = affine::gl_realization_signs(alg.basis());
  std::size_t e12 = alg.basis().simple_raising(0);
  CHECK(signs[e12] == 1);
  auto v = alg.act_mode(e12, -1, alg.vacuum());
  CHECK(phi_image(3, alg, v) == mode(3, 1, Sign::Plus, -1, mode(3, 2, Sign::Minus, -1, vacuum())));
  CHECK_THROWS_AS(phi_image(4, alg, v), Error);
}

TEST_CASE("singular scans") {
  auto r = singular_scan({3, 0, 2});
  CHECK(r.lowest_singular);
  CHECK(r.clean());
  CHECK(r.cells.front().kernel_dim == 1);
  auto r4 = singular_scan({4, 1, Rational(5, 2)});
  CHECK(r4.clean());
  CHECK(r4.cells.front().sector_dim == 4);
  for (int s = -2; s <= 2; ++s) CHECK(singular_scan({3, s, frac(std::abs(s), 2) + 2}).clean());
}

TEST_CASE("graded characters") {
  auto ch = graded_character({3, 0, 2});
  REQUIRE(ch.dims.size() == 3);
  CHECK(ch.dims[0] == 1);
  CHECK(ch.dims[1] == 9);
  CHECK(ch.quotient[0] == 1);
  // the quotient at degree 1 is the adjoint of sl(3)
  CHECK(ch.quotient[1] == 8);
  auto c1 = graded_character({3, 1, Rational(5, 2)});
  CHECK(c1.degrees.front() == Rational(1, 2));
  CHECK(c1.dims.front() == 3);
  CHECK(c1.quotient.front() == 3);
  CHECK(c1.weight_quotient.at({1, 0, 0}).front() == 1);
  CHECK_THROWS_AS(graded_character({3, 0, Rational(1, 3)}), Error);
}

TEST_CASE("gl invariants of the charge-zero sector") {
  auto dims = gl_invariant_dims(3, 2);
  REQUIRE(dims.size() == 3);
  CHECK(dims[0] == 1);
  CHECK(dims[1] == 1);
}

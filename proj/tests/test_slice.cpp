#include <random>

#include "doctest.h"
#include "mvwb/errors.hpp"
#include "mvwb/json_io.hpp"
#include "mvwb/nilpotent.hpp"
#include "mvwb/slice_point.hpp"

using namespace mvwb;

namespace {

// The worked n=2 point: p = (1,1), a11 = 1, a12 = 1, a21 = -1, a22 = -1.
SlicePoint worked_point() {
  auto comb = derive_slice_combinatorics(2, {2}, {0});
  SlicePoint g(comb);
  g.set(1, 1, 1, rat(1));
  g.set(1, 2, 1, rat(1));
  g.set(2, 1, 1, rat(-1));
  g.set(2, 2, 1, rat(-1));
  return g;
}

}  // namespace

TEST_CASE("validate_point on the worked instances") {
  auto comb = derive_slice_combinatorics(2, {2}, {0});
  SlicePoint zero(comb);
  auto rep0 = validate_point(zero);
  CHECK(rep0.shape_ok);
  CHECK(rep0.det_is_one);

  SlicePoint g = worked_point();
  auto rep = validate_point(g);
  CHECK(rep.shape_ok);
  CHECK(rep.det_is_one);

  SlicePoint h = g;
  h.set(2, 2, 1, rat(0));
  auto rep2 = validate_point(h);
  CHECK(rep2.shape_ok);
  CHECK(!rep2.det_is_one);

  SlicePoint bad = g;
  bad.set(1, 1, 2, rat(1));  // beyond the p_1 = 1 truncation
  CHECK(!validate_point(bad).shape_ok);
}

TEST_CASE("point_to_lattice columns") {
  auto comb = derive_slice_combinatorics(2, {2}, {0});
  SlicePoint zero(comb);
  auto L0 = point_to_lattice(zero);
  CHECK(L0.cols[0][0] == LaurentPoly::term(1, rat(1)));
  CHECK(L0.cols[0][1].is_zero());
  CHECK(L0.cols[1][1] == LaurentPoly::term(1, rat(1)));

  auto L = point_to_lattice(worked_point());
  // Columns (t+1, -1) and (1, t-1).
  CHECK(L.cols[0][0] ==
        LaurentPoly::term(1, rat(1)) + LaurentPoly::constant(1));
  CHECK(L.cols[0][1] == LaurentPoly::constant(-1));
  CHECK(L.cols[1][0] == LaurentPoly::constant(1));
  CHECK(L.cols[1][1] ==
        LaurentPoly::term(1, rat(1)) - LaurentPoly::constant(1));

  auto comb3 = derive_slice_combinatorics(3, {0, 3}, {0, 0});
  REQUIRE(comb3.p == std::vector<long>{1, 1, 1});
  SlicePoint g3(comb3);
  g3.set(1, 3, 1, rat(5));
  auto L3 = point_to_lattice(g3);
  CHECK(L3.cols[2][0] == LaurentPoly::constant(5));
  CHECK(L3.cols[2][2] == LaurentPoly::term(1, rat(1)));
}

TEST_CASE("canonicalize_lattice round trips and rejects bad lattices") {
  SlicePoint g = worked_point();
  auto L = point_to_lattice(g);
  CHECK(canonicalize_lattice(L, g.comb) == g);

  // Column operations by a constant unitriangular matrix keep the point.
  LatticeGens L2 = L;
  for (int i = 0; i < 2; ++i)
    L2.cols[1][i] = L2.cols[1][i] + L2.cols[0][i] * rat(3);
  CHECK(canonicalize_lattice(L2, g.comb) == g);

  // Wrong elementary divisors: columns (t^2, 0), (0, 1).
  LatticeGens bad;
  bad.n = 2;
  bad.cols = {{LaurentPoly::term(2, rat(1)), LaurentPoly()},
              {LaurentPoly(), LaurentPoly::constant(1)}};
  CHECK_THROWS_AS(canonicalize_lattice(bad, g.comb), NotInSlice);
}

TEST_CASE("canonicalize_lattice is constant on high-order column scrambles") {
  std::mt19937_64 eng(17);
  for (auto p : {std::vector<long>{1, 2}, std::vector<long>{2, 2},
                 std::vector<long>{1, 1, 2}}) {
    auto comb = combinatorics_from_pi(p);
    for (int rep = 0; rep < 3; ++rep) {
      SlicePoint g = sample_point(comb, 100 + rep, SampleFamily::Upper);
      auto L = point_to_lattice(g);
      // Random polynomial column operations.
      for (int t = 0; t < 4; ++t) {
        int j = static_cast<int>(eng() % comb.n);
        int k = static_cast<int>(eng() % comb.n);
        if (j == k) continue;
        LaurentPoly q;
        q.set(static_cast<long>(eng() % 3),
              rat(static_cast<long>(eng() % 5) - 2));
        for (int i = 0; i < comb.n; ++i)
          L.cols[k][i] = L.cols[k][i] + q * L.cols[j][i];
      }
      CHECK(canonicalize_lattice(L, comb) == g);
    }
  }
}

TEST_CASE("sampler families and determinism") {
  auto comb = derive_slice_combinatorics(2, {2}, {0});
  SlicePoint up = sample_point(comb, 42, SampleFamily::Upper);
  CHECK(up.a[(2 - 1) * 2 + (1 - 1)].empty());  // a_21 == 0
  CHECK(validate_point(up).det_is_one);
  SlicePoint lo = sample_point(comb, 42, SampleFamily::Lower);
  CHECK(lo.a[(1 - 1) * 2 + (2 - 1)].empty());  // a_12 == 0
  CHECK(validate_point(lo).det_is_one);
  CHECK(sample_point(comb, 42, SampleFamily::Upper) == up);
  SlicePoint rp = sample_point(comb, 42, SampleFamily::ReducedProduct);
  CHECK(validate_point(rp).det_is_one);
  CHECK(sample_point(comb, 42, SampleFamily::ReducedProduct) == rp);
}

TEST_CASE("eval_A / eval_E on the worked point") {
  SlicePoint g = worked_point();
  CHECK(eval_A(g, 1, 1) == 1);
  CHECK(eval_E(g, 1, 1) == -1);
  // Truncation vanishing: A_1^(r) = 0 for r > m'_1 = 1.
  for (long r = 2; r <= 6; ++r) CHECK(eval_A(g, 1, r) == 0);
}

TEST_CASE("truncation vanishing on shaped samples") {
  for (auto p : {std::vector<long>{1, 1, 1}, std::vector<long>{1, 2, 2}}) {
    auto comb = combinatorics_from_pi(p);
    for (unsigned long seed = 0; seed < 5; ++seed) {
      SlicePoint g = sample_point(comb, seed, SampleFamily::Free);
      for (int i = 1; i <= comb.n - 1; ++i)
        for (long r = comb.mprime(i) + 1; r <= comb.mprime(i) + 5; ++r)
          CHECK(eval_A(g, i, r) == 0);
    }
  }
}

TEST_CASE("pyramid numbering and nilpotent") {
  CHECK(pyramid_nilpotent({1, 1}).X.is_zero());
  auto S = pyramid_nilpotent({2, 3, 4});
  QMatrix expect(9, 9);
  expect.at(2, 1) = 1;
  expect.at(5, 4) = 1;
  expect.at(4, 3) = 1;
  expect.at(9, 8) = 1;
  expect.at(8, 7) = 1;
  expect.at(7, 6) = 1;
  CHECK(S.X == expect);
  auto S2 = pyramid_nilpotent({2});
  CHECK(S2.X.at(2, 1) == 1);
  CHECK(jordan_type(S.X) == Partition({4, 3, 2}));
}

TEST_CASE("mv_map worked instances") {
  auto comb = derive_slice_combinatorics(2, {2}, {0});
  SlicePoint zero(comb);
  CHECK(mv_map(zero).X == pyramid_nilpotent(comb.p).X);

  SlicePoint g = worked_point();
  auto X = mv_map(g);
  QMatrix expect(2, 2);
  expect.at(1, 1) = -1;
  expect.at(1, 2) = -1;
  expect.at(2, 1) = 1;
  expect.at(2, 2) = 1;
  CHECK(X.X == expect);
  CHECK(X.X.pow(2).is_zero());

  // p = (1,2): block X_22 carries subdiagonal 1 and column (-a22^(2), -a22^(1)).
  auto comb12 = combinatorics_from_pi({1, 2});
  SlicePoint h(comb12);
  h.set(2, 2, 1, rat(3));
  h.set(2, 2, 2, rat(5));
  auto Y = mv_map(h);
  CHECK(Y.X.at(3, 2) == 1);   // subdiagonal of the 2x2 block
  CHECK(Y.X.at(2, 3) == -5);  // -a22^(2)
  CHECK(Y.X.at(3, 3) == -3);  // -a22^(1)
}

TEST_CASE("mv_map_oracle agrees and flags det != 1") {
  SlicePoint g = worked_point();
  CHECK(mv_map_oracle(g).X == mv_map(g).X);
  auto comb = g.comb;
  SlicePoint zero(comb);
  CHECK(mv_map_oracle(zero).X == pyramid_nilpotent(comb.p).X);

  SlicePoint h = g;
  h.set(2, 2, 1, rat(0));  // det = 1 + t^-1 + t^-2
  CHECK_THROWS_AS(mv_map_oracle(h), NotABasis);
}

TEST_CASE("oracle equivalence across shapes and families") {
  for (auto p : {std::vector<long>{1, 1}, std::vector<long>{1, 2},
                 std::vector<long>{1, 1, 2}, std::vector<long>{2, 2},
                 std::vector<long>{1, 2, 3}}) {
    auto comb = combinatorics_from_pi(p);
    for (auto fam : {SampleFamily::Upper, SampleFamily::Lower,
                     SampleFamily::ReducedProduct}) {
      for (unsigned long seed = 0; seed < 4; ++seed) {
        SlicePoint g = sample_point(comb, seed, fam);
        CHECK(mv_map_oracle(g).X == mv_map(g).X);
        CHECK(mv_inverse(mv_map(g)) == g);
        CHECK(dominance_leq(comb.pi_partition(), jordan_type(mv_map(g).X)));
      }
    }
  }
}

TEST_CASE("mv_inverse error paths") {
  auto S = pyramid_nilpotent({1, 1});
  CHECK(mv_inverse(S) == SlicePoint(combinatorics_from_pi({1, 1})));

  QMatrix bad(2, 2);
  bad.at(1, 1) = 1;  // nonzero trace, slice shape (1,1) final columns
  bad.at(2, 2) = 1;
  CHECK_THROWS_AS(mv_inverse(SliceMatrix({1, 1}, bad)), NotNilpotent);

  QMatrix off(2, 2);
  off.at(2, 1) = 5;  // (1,1)-shape allows entries only in final columns
  CHECK_THROWS_AS(mv_inverse(SliceMatrix({1, 1}, off)), ShapeViolation);
}

TEST_CASE("mv_map is affine-linear with constant term e_pi") {
  auto comb = combinatorics_from_pi({1, 2});
  SlicePoint g1 = sample_point(comb, 1, SampleFamily::Free);
  SlicePoint g2 = sample_point(comb, 2, SampleFamily::Free);
  SlicePoint sum(comb);
  for (int i = 1; i <= comb.n; ++i)
    for (int j = 1; j <= comb.n; ++j) {
      auto [rmin, rmax] = allowed_r_range(comb, i, j);
      for (long r = rmin; r <= rmax; ++r)
        sum.set(i, j, r, g1.coeff(i, j, r) + g2.coeff(i, j, r));
    }
  QMatrix epi = pyramid_nilpotent(comb.p).X;
  CHECK(mv_map(sum).X == mv_map(g1).X + mv_map(g2).X - epi);
}

TEST_CASE("jordan types and orbit dominance") {
  QMatrix zero(3, 3);
  CHECK(jordan_type(zero) == Partition({1, 1, 1}));
  QMatrix X(2, 2);
  X.at(1, 1) = -1;
  X.at(1, 2) = -1;
  X.at(2, 1) = 1;
  X.at(2, 2) = 1;
  CHECK(jordan_type(X) == Partition({2}));
  CHECK(orbit_leq_check(X, Partition({2})));
  CHECK(!orbit_leq_check(X, Partition({1, 1})));
  QMatrix bad(2, 2);
  bad.at(1, 1) = 1;
  CHECK_THROWS_AS(jordan_type(bad), NotNilpotent);
}

TEST_CASE("slice point json round trip") {
  SlicePoint g = worked_point();
  CHECK(slice_point_from_json(slice_point_json(g)) == g);
}

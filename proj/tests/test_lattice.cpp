#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satake/lattice.hpp"

using namespace satake;

namespace {

EvenSymmetricForm q1() { return EvenSymmetricForm{{{-2}}}; }
EvenSymmetricForm q2() { return EvenSymmetricForm{{{-2, -1}, {-1, -2}}}; }

// Exhaustive box scan; the box is generous enough for the small bounds used.
std::vector<SublevelPoint> naive_sublevel(const EvenSymmetricForm& q, const Int& k,
                                          const Covector& shift, const Int& bound,
                                          long long radius) {
  std::vector<SublevelPoint> out;
  int r = q.rank();
  LatticeVector nu(r, -radius);
  while (true) {
    Int val = -eval_covector(shift, nu) - k * eval_q(q, nu, nu) / 2;
    if (val <= bound) out.push_back({nu, val});
    int pos = r - 1;
    while (pos >= 0) {
      if (++nu[pos] <= radius) break;
      nu[pos] = -radius;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end(), [](const SublevelPoint& a, const SublevelPoint& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.nu < b.nu;
  });
  return out;
}

bool same_points(const std::vector<SublevelPoint>& a, const std::vector<SublevelPoint>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].nu != b[i].nu || a[i].value != b[i].value) return false;
  return true;
}

}  // namespace

TEST_CASE("derive_q symmetrizes b") {
  IntegerBilinearForm b{{{-1, 0}, {-1, -1}}};
  EvenSymmetricForm q = derive_q(b);
  CHECK(q.gram == Matrix{{-2, -1}, {-1, -2}});
  CHECK(eval_q(q, {1, 0}, {0, 1}) == -1);
  CHECK(eval_b(IntegerBilinearForm{{{-1}}}, {2}, {1}) == -2);
  CHECK(eval_q(EvenSymmetricForm{{{-2}}}, {3}, {-1}) == 6);
}

TEST_CASE("definiteness by principal minors") {
  CHECK(is_negative_definite(q1()));
  CHECK(is_negative_definite(q2()));
  CHECK_FALSE(is_negative_definite(EvenSymmetricForm{{{2}}}));
  CHECK_FALSE(is_negative_definite(EvenSymmetricForm{{{-2, -3}, {-3, -2}}}));
  CHECK(determinant(Matrix{{0, 1}, {1, 0}}) == -1);  // needs pivoting
  CHECK(determinant(Matrix{{-2, -1}, {-1, -2}}) == 3);
}

TEST_CASE("even-symmetric validation rejects odd diagonals") {
  CHECK_THROWS_AS(validate_even_symmetric(EvenSymmetricForm{{{-1}}}), config_error);
  CHECK_THROWS_AS(validate_even_symmetric(EvenSymmetricForm{{{-2, 1}, {0, -2}}}), config_error);
}

TEST_CASE("e_map extracts form rows") {
  CHECK(e_map(q1(), {1}) == Covector{-2});
  CHECK(e_map(q2(), {1, 0}) == Covector{-2, -1});
  CHECK(e_map(q2(), {0, 0}) == Covector{0, 0});
}

TEST_CASE("sublevel enumeration pinned values") {
  auto pts = enumerate_sublevel(q1(), 1, {0}, 4);
  REQUIRE(pts.size() == 5);
  CHECK(pts[0].nu == LatticeVector{0});
  CHECK(pts[0].value == 0);
  CHECK(pts[1].value == 1);
  CHECK(pts[2].value == 1);
  CHECK(pts[3].value == 4);
  CHECK(pts[4].value == 4);

  CHECK(enumerate_sublevel(q1(), 1, {0}, 0).size() == 1);

  auto shifted = enumerate_sublevel(q1(), 2, {-2}, 3);
  REQUIRE(shifted.size() == 2);
  CHECK(shifted[0].nu == LatticeVector{-1});
  CHECK(shifted[0].value == 0);
  CHECK(shifted[1].nu == LatticeVector{0});
  CHECK(shifted[1].value == 0);

  CHECK_THROWS_AS(enumerate_sublevel(EvenSymmetricForm{{{2}}}, 1, {0}, 4), domain_error);
}

TEST_CASE("sublevel enumeration matches a box scan") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    EvenSymmetricForm q = trial % 2 == 0 ? q1() : q2();
    Covector shift(q.rank());
    for (auto& s : shift) s = rng.range(-4, 4);
    Int k = rng.range(1, 3);
    Int bound = rng.range(-2, 9);
    CHECK(same_points(enumerate_sublevel(q, k, shift, bound),
                      naive_sublevel(q, k, shift, bound, 20)));
  }
}

TEST_CASE("sublevel minimum") {
  CHECK(sublevel_min(q1(), 1, {0}) == 0);
  CHECK(sublevel_min(q1(), 1, e_map(q1(), {1})) == -1);
  // residue (1,1) at level 2: the orbit reaches one step below its box point
  CHECK(sublevel_min(q2(), 2, e_map(q2(), {1, 1})) == -1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satake/config.hpp"
#include "satake/format.hpp"
#include "satake/hecke.hpp"

using namespace satake;

TEST_CASE("config parsing") {
  WorkbenchConfig t = config_from_json_text(R"({"lattice":{"rank":1,"b":[[-1]]}})");
  CHECK(t.q.gram == Matrix{{-2}});
  CHECK(t.rd.is_torus());
  CHECK(t.default_trunc == 8);

  WorkbenchConfig a2 = config_from_json_text(R"({
    "lattice": {"rank": 2, "b": [[-1, 1], [0, -1]]},
    "root_datum": {"kind": "simple", "cartan_type": "A2"},
    "defaults": {"trunc": 5}
  })");
  CHECK(a2.q.gram == Matrix{{-2, 1}, {1, -2}});
  CHECK(a2.rd.ss_rank == 2);
  CHECK(a2.rd.weyl.size() == 6);
  CHECK(a2.default_trunc == 5);

  WorkbenchConfig mixed = config_from_json_text(R"({
    "lattice": {"rank": 2, "b": [[-1, 0], [0, -1]]},
    "root_datum": {"kind": "simple", "cartan_type": "A1", "central_rank": 1}
  })");
  CHECK(mixed.rd.rank == 2);
  CHECK(mixed.rd.ss_rank == 1);
}

TEST_CASE("config rejections") {
  CHECK_THROWS_AS(config_from_json_text(R"({"lattice":{"rank":1,"b":[[1]]}})"),
                  config_error);  // Q = b + b^T not negative definite
  CHECK_THROWS_AS(config_from_json_text(R"({"lattice":{"rank":2,"b":[[-1]]}})"),
                  config_error);
  CHECK_THROWS_AS(config_from_json_text(R"({"lattice":{"rank":1,"b":[[-1]]},
    "root_datum":{"kind":"parabolic"}})"),
                  config_error);
  CHECK_THROWS_AS(config_from_json_text(R"({"lattice":{"rank":1,"b":[[-1]]},
    "root_datum":{"kind":"simple","cartan_type":"B2"}})"),
                  config_error);
  CHECK_THROWS_AS(config_from_json_text(R"({"lattice":{"rank":1,"b":[[-1]]},
    "root_datum":{"kind":"simple","cartan_type":"A2"}})"),
                  config_error);  // Cartan size exceeds lattice rank
  CHECK_THROWS_AS(config_from_json_text("not json"), config_error);
  CHECK_THROWS_AS(load_config("/nonexistent/path.json"), config_error);
}

TEST_CASE("canonical text forms") {
  EvenSymmetricForm q{{{-2}}};
  HeckeElement h = delta({2, 0, {1}}, 4);
  h.set({1, {0}}, 2);
  h.set({2, {0}}, Rat(1, 2));
  CHECK(format_hecke(h) ==
        "level 2 | 1 v^0 x^[1] + 2 v^1 x^[0] + 1/2 v^2 x^[0] (certified to v^4)");

  GradedSeries s = to_theta_series(q, delta({1, 0, {0}}, 3));
  CHECK(format_series(s) ==
        "level 1 | 1 v^0 x^[0] + 1 v^1 x^[-1] + 1 v^1 x^[1] (certified to v^3)");

  GradedSeries empty;
  empty.k = 0;
  empty.trunc = 2;
  CHECK(format_series(empty) == "level 0 | 0 (certified to v^2)");

  PrincipalSeriesElement f;
  f.trunc = 3;
  f.coeffs[AffineWeight{1, {2}, 1}] = Rat(-3);
  CHECK(format_principal(f) == "-3 t^1 v^1 x^[2] (certified to v^3)");

  CHECK(format_heisenberg({-1, {2}, {0}, 3}) == "(-1, [2], [0], 3)");
  CHECK(format_label({2, -4, {1}}) == "(k=2, a=-4, mu=[1])");
  CHECK(format_weight({1, {0, -2}, 5}) == "(1, [0,-2], 5)");
}

TEST_CASE("integer list parsing") {
  CHECK(parse_int_list("1,0,-2") == LatticeVector{1, 0, -2});
  CHECK(parse_int_list(" 7 ") == LatticeVector{7});
  CHECK_THROWS_AS(parse_int_list("1,,2"), config_error);
  CHECK_THROWS_AS(parse_int_list("1,x"), config_error);
}

#include "support.hpp"

#include "addchow/cycles/maps.hpp"
#include "addchow/error.hpp"
#include "addchow/fields/random.hpp"
#include "addchow/milnor/symbol.hpp"

using namespace addchow;
using testing::el;
using testing::form;
using testing::tower;
using testing::tuple;

TEST_SUITE("milnor") {

TEST_CASE("dlog of symbols") {
  const TowerPtr T = tower("Q(t1,t2)");
  CHECK(dlog_symbol(MilnorSymbol::of({el(T, "t1"), el(T, "t2")})) == form(T, "(1/(t1*t2)) dt1^dt2", 2));
  CHECK(dlog_symbol(MilnorSymbol::of({el(T, "t1"), el(T, "1 - t1")})).is_zero());
  CHECK(dlog_symbol(MilnorSymbol::of({el(T, "t1"), el(T, "-t1")})).is_zero());
}

TEST_CASE("symbol_to_point and iota examples") {
  const TowerPtr T = tower("Q(t)");
  const auto p = symbol_to_point({el(T, "t")});
  REQUIRE(p);
  CHECK(p->coordinates() == tuple(T, "(t/(t - 1), -1/(t - 1))"));
  CHECK_FALSE(symbol_to_point({el(T, "1")}));
  CHECK(iota(*p) == QPoint(tuple(T, "(-1, t/(t - 1), -1/(t - 1))")));
  CHECK(milnor_to_additive(MilnorSymbol(T, 1)).is_zero());
  CHECK_THROWS_AS(DeltaPoint(tuple(T, "(t, t)")), Error);
}

TEST_CASE("point and symbol maps are inverse") {
  const TowerPtr T = tower("Q(t1,t2)");
  RandomSource rng(10);
  for (int i = 0; i < 30; ++i) {
    const std::vector<FieldElement> b{rng.nonzero_element(T), rng.nonzero_element(T)};
    const auto p = symbol_to_point(b);
    if (!p) continue;
    const MilnorSymbol s = point_to_symbol(*p);
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].entries == b);
  }
}

TEST_CASE("commutative square on single symbols") {
  for (const char* f : {"Q(t1,t2,t3)", "F5(t1,t2)"}) {
    const TowerPtr T = tower(f);
    RandomSource rng(13);
    for (int w = 1; w <= 3; ++w)
      for (int i = 0; i < 10; ++i) {
        std::vector<FieldElement> e;
        for (int j = 0; j < w; ++j) e.push_back(rng.nonzero_element(T));
        const MilnorSymbol s = MilnorSymbol::of(e);
        const FieldElement sign = FieldElement::from_int(T, w % 2 ? -1 : 1);  // (-1)^(n+1), n = w + 1
        CHECK(eval_gamma(milnor_to_additive(s)) == dlog_symbol(s).scaled(sign));
      }
  }
}

TEST_CASE("symbol arithmetic and rewrites") {
  const TowerPtr T = tower("Q(t1,t2)");
  const MilnorSymbol s = MilnorSymbol::of({el(T, "t1"), el(T, "t2")});
  CHECK((s - s).is_zero());
  CHECK(s.scaled(2).to_string() == "2 {t1, t2}");
  const MilnorSymbol split = split_slot(s, 0, 0, el(T, "t1 + 1"));
  CHECK(split.terms().size() == 2);
  CHECK(dlog_symbol(split) == dlog_symbol(s));
  CHECK(dlog_symbol(swap_slots(s, 0, 0)) == dlog_symbol(s));
}

}  // TEST_SUITE

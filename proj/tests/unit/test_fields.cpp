#include "support.hpp"

#include "addchow/error.hpp"
#include "addchow/fields/factor.hpp"
#include "addchow/fields/modular.hpp"
#include "addchow/fields/random.hpp"
#include "addchow/fields/univariate.hpp"

using namespace addchow;
using testing::el;
using testing::tower;

TEST_SUITE("fields") {

TEST_CASE("worked arithmetic examples") {
  const TowerPtr Qt = tower("Q(t)");
  CHECK(el(Qt, "t") / el(Qt, "t") == el(Qt, "1"));
  CHECK(el(Qt, "1/(t - 1) + 1/(t + 1)") == el(Qt, "2*t/(t^2 - 1)"));
  const TowerPtr F5 = tower("F5");
  CHECK(el(F5, "3") + el(F5, "4") == el(F5, "2"));
  CHECK(el(F5, "1/2") == el(F5, "3"));
}

TEST_CASE("characteristic p: p * x = 0 and Frobenius is additive") {
  const TowerPtr T = tower("F5(t1,t2)");
  RandomSource rng(7);
  for (int i = 0; i < 30; ++i) {
    const FieldElement x = rng.element(T), y = rng.element(T);
    CHECK((x * FieldElement::from_int(T, 5)).is_zero());
    CHECK((x + y).pow(5) == x.pow(5) + y.pow(5));
  }
}

TEST_CASE("field axioms on random elements") {
  for (const char* f : {"Q(t1,t2)", "F5(t)", "Q(t)[th]/(th^2 - t)", "F2(t)[th]/(th^2 + th + t)"}) {
    const TowerPtr T = tower(f);
    RandomSource rng(11);
    for (int i = 0; i < 25; ++i) {
      const FieldElement a = rng.element(T), b = rng.element(T), c = rng.nonzero_element(T);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) - b == a);
      CHECK(c * c.inverse() == FieldElement::from_int(T, 1));
      CHECK((a / c) * c == a);
    }
  }
}

TEST_CASE("canonical rendering re-parses to an equal value") {
  for (const char* f : {"Q(t1,t2,t3)", "F5(t1,t2)", "Q(t)[th]/(th^2 - t)"}) {
    const TowerPtr T = tower(f);
    CHECK(parse_tower(T->to_string())->same_as(*T));
    RandomSource rng(3);
    for (int i = 0; i < 40; ++i) {
      const FieldElement x = rng.element(T);
      CHECK(el(T, x.to_string()) == x);
    }
  }
}

TEST_CASE("parse errors carry a position") {
  const TowerPtr T = tower("Q(t)");
  CHECK_THROWS_AS(el(T, "t +* 2"), Error);
  try {
    el(T, "t + u");
    FAIL("unknown variable accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("unknown variable 'u'") != std::string::npos);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  try {
    el(T, "(t + 1");
    FAIL("unbalanced parenthesis accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

// Multiplication-matrix trace on the power basis, independent of power_traces.
FieldElement matrix_trace(const FieldElement& x) {
  const TowerPtr& T = x.tower();
  FieldElement basis = FieldElement::from_int(T, 1), tr(T->base());
  for (int j = 0; j < T->degree(); ++j) {
    const FieldElement col = x * basis;
    tr += FieldElement::from_base(T->base(), col.coefficients()[static_cast<std::size_t>(j)]);
    basis *= FieldElement::generator(T);
  }
  return tr;
}

TEST_CASE("trace matches the multiplication-matrix oracle") {
  const TowerPtr K = tower("Q[th]/(th^2 - 2)");
  CHECK(K->base()->to_string() == "Q");
  CHECK(el(K, "th").trace() == el(K->base(), "0"));
  CHECK(el(K, "1").trace() == el(K->base(), "2"));
  CHECK(el(K, "3 + th").trace() == el(K->base(), "6"));
  for (const char* f : {"Q(t)[th]/(th^3 - t*th + 1)", "F5(t)[th]/(th^2 - t)", "Q(x)[th]/(th^2 - x*th - 1)"}) {
    const TowerPtr T = tower(f);
    RandomSource rng(5);
    for (int i = 0; i < 20; ++i) {
      const FieldElement x = rng.element(T);
      CHECK(x.trace() == matrix_trace(x));
    }
  }
}

TEST_CASE("partial derivatives") {
  const TowerPtr T = tower("Q(t1,t2)");
  CHECK(el(T, "t1*t2").partial("t1") == el(T, "t2"));
  CHECK(el(T, "7").partial("t1").is_zero());
  const TowerPtr K = tower("Q(t)[th]/(th^2 - t)");
  CHECK(el(K, "th").partial("t") == el(K, "1/(2*th)"));
  // Implicit differentiation oracle: 2 th dth/dt = 1.
  CHECK(el(K, "2*th") * el(K, "th").partial("t") == el(K, "1"));
}

TEST_CASE("partial derivatives satisfy Leibniz and the quotient rule") {
  const TowerPtr T = tower("Q(t)[th]/(th^2 - t)");
  RandomSource rng(9);
  for (int i = 0; i < 25; ++i) {
    const FieldElement a = rng.element(T), b = rng.nonzero_element(T);
    CHECK((a * b).partial("t") == a.partial("t") * b + a * b.partial("t"));
    CHECK((a / b).partial("t") == (a.partial("t") * b - a * b.partial("t")) / (b * b));
  }
}

UPoly upoly(const TowerPtr& T, std::vector<long> c) {
  std::vector<FieldElement> v;
  for (long x : c) v.push_back(FieldElement::from_int(T, x));
  return UPoly(T, v);
}

TEST_CASE("factorization examples") {
  const TowerPtr Q = tower("Q");
  auto f = factor_univariate(upoly(Q, {-1, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].poly.degree() == 1);
  CHECK(f[1].poly.degree() == 1);
  auto g = factor_univariate(upoly(Q, {-2, 0, 1}));
  REQUIRE(g.size() == 1);
  CHECK(g[0].poly.degree() == 2);
  CHECK(g[0].multiplicity == 1);
  const TowerPtr F5 = tower("F5");
  auto h = factor_univariate(upoly(F5, {1, 0, 1}));
  REQUIRE(h.size() == 2);
  std::vector<FieldElement> roots;
  for (const auto& fac : h) roots.push_back(-fac.poly.coefficient(0));
  CHECK(((roots[0] == el(F5, "2") && roots[1] == el(F5, "3")) || (roots[0] == el(F5, "3") && roots[1] == el(F5, "2"))));
}

TEST_CASE("F5 factorization agrees with exhaustive root search") {
  const TowerPtr F5 = tower("F5");
  RandomSource rng(21);
  for (int i = 0; i < 200; ++i) {
    const int deg = static_cast<int>(rng.integer(1, 6));
    std::vector<long> c;
    for (int j = 0; j < deg; ++j) c.push_back(rng.integer(0, 4));
    c.push_back(1);
    const UPoly f = upoly(F5, c);
    const auto fac = factor_univariate(f);
    // Product reassembles f.
    UPoly prod = upoly(F5, {1});
    for (const auto& x : fac)
      for (int m = 0; m < x.multiplicity; ++m) prod = prod * x.poly;
    CHECK(prod == f);
    // Linear factors are exactly the roots found by trying all residues.
    std::vector<long> expected, found;
    for (long r = 0; r < 5; ++r)
      if (f.eval(FieldElement::from_int(F5, r)).is_zero()) expected.push_back(r);
    for (const auto& x : fac)
      if (x.poly.degree() == 1)
        for (long r = 0; r < 5; ++r)
          if (x.poly.eval(FieldElement::from_int(F5, r)).is_zero()) found.push_back(r);
    std::sort(found.begin(), found.end());
    CHECK(found == expected);
  }
}

TEST_CASE("modular factorization over a larger prime") {
  modular::ModPolyRing R(101);
  const modular::ModPoly f({6, 0, 0, 1, 0, 1});
  const auto fac = R.factor(f);
  modular::ModPoly prod({1});
  for (const auto& [g, m] : fac)
    for (int i = 0; i < m; ++i) prod = R.mul(prod, g);
  CHECK(prod == R.monic(f));
  for (const auto& [g, m] : fac) {
    CHECK(g.degree() >= 1);
    if (g.degree() > 1) CHECK(R.roots(g).empty());
  }
}

TEST_CASE("minimal polynomials annihilate their element") {
  for (const char* f : {"Q(t)[th]/(th^2 - t)", "Q[th]/(th^3 - th - 1)", "F5(t)[th]/(th^2 - t)"}) {
    const TowerPtr T = tower(f);
    RandomSource rng(31);
    for (int i = 0; i < 15; ++i) {
      const FieldElement x = rng.nonzero_element(T);
      const UPoly m = minimal_polynomial(x);
      CHECK(m.moved_to(T).eval(x).is_zero());
      CHECK(m.leading() == FieldElement::from_int(m.tower(), 1));
    }
  }
}

TEST_CASE("towers reject reducible or inseparable data") {
  CHECK_THROWS_AS(tower("Q[th]/(th^2 - 1)"), Error);
  CHECK_THROWS_AS(tower("F2(t)[th]/(th^2 - t)"), Error);
}

}  // TEST_SUITE

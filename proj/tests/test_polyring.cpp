#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "detrad/errors.hpp"
#include "detrad/matrix.hpp"
#include "detrad/parser.hpp"

using namespace detrad;

namespace {

const CoeffField Q = CoeffField::rationals();

struct Ring {
  VarPool pool;
  CoeffField field;
  explicit Ring(CoeffField f = CoeffField::rationals()) : field(f) {}
  Polynomial operator()(const std::string& text) {
    return parse_polynomial(text, field, interning_vars(pool));
  }
};

// Independent oracle: largest e with y^e dividing every monomial, found by
// trying e = 0, 1, 2, ... with explicit monomial divisibility tests.
int max_power_oracle(const Polynomial& f, Variable y) {
  int e = 0;
  for (;; ++e) {
    Monomial probe = Monomial::var(y, e + 1);
    bool divides_all = true;
    for (const auto& [m, c] : f.terms())
      if (!probe.divides(m)) divides_all = false;
    if (!divides_all) return e;
  }
}

// Independent oracle: determinant by full permutation expansion.
Polynomial det_permutation_oracle(const std::vector<std::vector<Polynomial>>& g) {
  std::size_t k = g.size();
  CoeffField field = g[0][0].field();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial acc(field);
  do {
    // sign via inversion count
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial prod = Polynomial::constant(field, inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < k; ++i) prod = prod * g[i][perm[i]];
    acc = acc + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

Polynomial random_poly(Ring& ring, const std::vector<Variable>& vars,
                       std::mt19937& rng, int max_terms = 5, int max_exp = 3,
                       int coeff_span = 9) {
  std::uniform_int_distribution<int> terms_dist(0, max_terms);
  std::uniform_int_distribution<int> exp_dist(0, max_exp);
  std::uniform_int_distribution<int> coeff_dist(-coeff_span, coeff_span);
  Polynomial acc(ring.field);
  int terms = terms_dist(rng);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (Variable v : vars) m = m.times(Monomial::var(v, exp_dist(rng)));
    acc = acc + Polynomial::term(ring.field, coeff_dist(rng), m);
  }
  return acc;
}

}  // namespace

TEST_CASE("addition: cancellation, identity, characteristic") {
  Ring R;
  CHECK(R("x + y") + R("-x") == R("y"));
  CHECK(Polynomial(Q) + R("x^2 - 3") == R("x^2 - 3"));

  Ring R3(CoeffField::prime(3));
  CHECK(R3("2x") + R3("x") == Polynomial(R3.field));
}

TEST_CASE("multiplication: expansion, identity, absorber") {
  Ring R;
  CHECK(R("x + y") * R("x - y") == R("x^2 - y^2"));
  Polynomial f = R("3x^2y - 7/2 y + 1");
  CHECK(f * R("1") == f);
  CHECK(f * Polynomial(Q) == Polynomial(Q));
}

TEST_CASE("substitute: relation check, identity, distributivity") {
  Ring R;
  Variable y1 = R.pool.intern("y1"), y2 = R.pool.intern("y2");
  Polynomial f = R("y1^3 - y2^2");
  std::map<Variable, Polynomial> bind{{y1, R("z^2")}, {y2, R("z^3")}};
  CHECK(f.substitute(bind).is_zero());

  Variable x = R.pool.intern("x");
  CHECK(R("x").substitute({}) == R("x"));
  CHECK(R("x y").substitute({{x, R("x + 1")}}) == R("x y + y"));
}

TEST_CASE("substitute: field mismatch rejected") {
  Ring R;
  Variable x = R.pool.intern("x");
  Polynomial f = R("x + 1");
  Polynomial wrong = Polynomial::constant(CoeffField::prime(5), 2);
  CHECK_THROWS_AS(f.substitute({{x, wrong}}), FieldMismatchError);
}

TEST_CASE("max_power: oracle-checked examples") {
  Ring R;
  Variable y1 = R.pool.intern("y1"), y2 = R.pool.intern("y2");
  Polynomial f = R("y1^2 y2^3 + y1^3 y2^3");
  CHECK(max_power_oracle(f, y1) == 2);  // frozen from the oracle
  CHECK(max_power_oracle(f, y2) == 3);
  CHECK(f.max_power(y1) == 2);
  CHECK(f.max_power(y2) == 3);

  Variable x = R.pool.intern("x");
  CHECK(R("x + 1").max_power(x) == 0);
  CHECK_THROWS_AS(Polynomial(Q).max_power(x), InvalidArgumentError);
}

TEST_CASE("max_power: shifts by exact monomial factors") {
  Ring R;
  std::mt19937 rng(7001);
  Variable y = R.pool.intern("y");
  std::vector<Variable> vars{y, R.pool.intern("u"), R.pool.intern("v")};
  for (int round = 0; round < 60; ++round) {
    // ensure at least one y-free monomial so max_power(f, y) == 0
    Polynomial f = random_poly(R, vars, rng) + R("1");
    for (int e = 1; e <= 3; ++e) {
      Polynomial shifted = f * Polynomial::term(Q, 1, Monomial::var(y, e));
      CHECK(shifted.max_power(y) == f.max_power(y) + e);
    }
  }
}

TEST_CASE("determinant: identity, paper 2x2 entry, alternating, non-square") {
  Ring R;
  Polynomial one = R("1"), zero(Q);
  std::vector<std::vector<Polynomial>> id3{{one, zero, zero},
                                           {zero, one, zero},
                                           {zero, zero, one}};
  CHECK(determinant(id3) == one);

  std::vector<std::vector<Polynomial>> g{{R("x3"), R("x4")}, {R("x6"), R("x7")}};
  CHECK(determinant(g) == R("x3 x7 - x4 x6"));
  CHECK(determinant(g).to_string(R.pool) == "-x4*x6 + x3*x7");

  std::vector<std::vector<Polynomial>> eq{{R("x3"), R("x4")}, {R("x3"), R("x4")}};
  CHECK(determinant(eq).is_zero());

  std::vector<std::vector<Polynomial>> bad{{one, zero}};
  CHECK_THROWS_AS(determinant(bad), InvalidArgumentError);
}

TEST_CASE("determinant agrees with the permutation-expansion oracle") {
  Ring R;
  std::mt19937 rng(90210);
  std::vector<Variable> vars{R.pool.intern("a"), R.pool.intern("b"),
                             R.pool.intern("c")};
  for (int size = 1; size <= 4; ++size) {
    for (int round = 0; round < 8; ++round) {
      std::vector<std::vector<Polynomial>> g;
      for (int r = 0; r < size; ++r) {
        std::vector<Polynomial> row;
        for (int c = 0; c < size; ++c)
          row.push_back(random_poly(R, vars, rng, 2, 2, 4));
        g.push_back(std::move(row));
      }
      CHECK(determinant(g) == det_permutation_oracle(g));
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  for (CoeffField field : {CoeffField::rationals(), CoeffField::prime(7)}) {
    Ring R(field);
    std::mt19937 rng(field.characteristic() == 0 ? 11 : 13);
    std::vector<Variable> vars{R.pool.intern("x"), R.pool.intern("y"),
                               R.pool.intern("z")};
    for (int round = 0; round < 40; ++round) {
      Polynomial a = random_poly(R, vars, rng);
      Polynomial b = random_poly(R, vars, rng);
      Polynomial c = random_poly(R, vars, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Polynomial(field));
    }
  }
}

TEST_CASE("substitute is a ring homomorphism") {
  Ring R;
  std::mt19937 rng(4242);
  Variable x = R.pool.intern("x"), y = R.pool.intern("y");
  std::vector<Variable> vars{x, y};
  for (int round = 0; round < 30; ++round) {
    Polynomial f = random_poly(R, vars, rng, 4, 2, 5);
    Polynomial g = random_poly(R, vars, rng, 4, 2, 5);
    std::map<Variable, Polynomial> bind{{x, random_poly(R, vars, rng, 2, 2, 3)},
                                        {y, random_poly(R, vars, rng, 2, 2, 3)}};
    CHECK((f * g).substitute(bind) == f.substitute(bind) * g.substitute(bind));
    CHECK((f + g).substitute(bind) == f.substitute(bind) + g.substitute(bind));
    CHECK(f.substitute({}) == f);
  }
}

TEST_CASE("field mismatch in arithmetic is rejected") {
  Ring RQ;
  Ring R5(CoeffField::prime(5));
  Polynomial a = RQ("x + 1"), b = R5("x + 1");
  CHECK_THROWS_AS(a + b, FieldMismatchError);
  CHECK_THROWS_AS(a * b, FieldMismatchError);
}

TEST_CASE("GF(p) requires a prime modulus") {
  CHECK_THROWS_AS(CoeffField::prime(1), InvalidArgumentError);
  CHECK_THROWS_AS(CoeffField::prime(32004), InvalidArgumentError);
  CHECK(CoeffField::prime(32003).characteristic() == 32003);
}

TEST_CASE("parser: round-trips the printer bit-exactly") {
  for (CoeffField field : {CoeffField::rationals(), CoeffField::prime(11)}) {
    Ring R(field);
    std::mt19937 rng(field.characteristic() == 0 ? 5150 : 6160);
    std::vector<Variable> vars{R.pool.intern("x1"), R.pool.intern("x2"),
                               R.pool.intern("x3")};
    for (int round = 0; round < 80; ++round) {
      Polynomial f = random_poly(R, vars, rng, 6, 4, 12);
      std::string text = f.to_string(R.pool);
      Polynomial again = parse_polynomial(text, field, declared_vars(R.pool));
      CHECK(again == f);
      CHECK(again.to_string(R.pool) == text);
    }
  }
}

TEST_CASE("parser: syntax coverage") {
  Ring R;
  CHECK(R("0").is_zero());
  CHECK(R("2x1 x2^2(x3+1)") == R("2*x1*x2^2*x3 + 2*x1*x2^2"));
  CHECK(R("1/2 x - 1/2 x") == Polynomial(Q));
  CHECK(R("-x^2") == Polynomial(Q) - R("x^2"));
  CHECK(R("x^0") == R("1"));
  CHECK(R("3/4") == Polynomial::constant(Q, mpq_class(3, 4)));
  CHECK(R("(x + y)^2") == R("x^2 + 2x y + y^2"));

  CHECK_THROWS_AS(R("x +"), ParseError);
  CHECK_THROWS_AS(R("(x"), ParseError);
  CHECK_THROWS_AS(R("x^y"), ParseError);
  CHECK_THROWS_AS(R("x $ y"), ParseError);
  CHECK_THROWS_AS(R("1/0"), ParseError);
}

TEST_CASE("parser: declared-variables resolver rejects unknowns and reserved names") {
  VarPool pool;
  pool.intern("x");
  CHECK_THROWS_AS(parse_polynomial("x + q", Q, declared_vars(pool)), ParseError);
  CHECK_THROWS_AS(pool.intern("#z"), ParseError);
  Variable fresh = pool.fresh("z");
  CHECK(pool.name(fresh) == "#z");
}

TEST_CASE("printing: canonical form details") {
  Ring R;
  R.pool.intern("x");
  R.pool.intern("y");
  CHECK(Polynomial(Q).to_string(R.pool) == "0");
  CHECK(R("y - x").to_string(R.pool) == "-x + y");
  CHECK(R("-x - 1").to_string(R.pool) == "-x - 1");
  CHECK(R("x*x*x").to_string(R.pool) == "x^3");
  CHECK(R("1/2*x").to_string(R.pool) == "1/2*x");
  CHECK((R("x") - R("x") + R("7")).to_string(R.pool) == "7");
  // graded order: higher total degree first, ties by reverse lexicography
  CHECK(R("x + x*y + y^2 + 1").to_string(R.pool) == "x*y + y^2 + x + 1");
}

TEST_CASE("matrix invariants: 1 <= t <= m <= n") {
  Ring R;
  std::vector<std::vector<Polynomial>> grid{{R("a"), R("b")}, {R("c"), R("d")}};
  CHECK_THROWS_AS(PolyMatrix(2, 2, 3, grid), InvalidArgumentError);
  CHECK_THROWS_AS(PolyMatrix(2, 2, 0, grid), InvalidArgumentError);
  std::vector<std::vector<Polynomial>> tall{{R("a")}, {R("b")}};
  CHECK_THROWS_AS(PolyMatrix(2, 1, 1, tall), InvalidArgumentError);
  PolyMatrix X(2, 2, 2, grid);
  CHECK(X.corner_minor_det() == R("a d - b c"));
  CHECK(X.entry(1, 2) == R("b"));
  CHECK_THROWS_AS(X.entry(3, 1), InvalidArgumentError);
}

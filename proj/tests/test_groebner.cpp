#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "detrad/errors.hpp"
#include "detrad/groebner.hpp"
#include "detrad/minor_poset.hpp"
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
  MonomialOrder degrevlex() { return MonomialOrder::degrevlex(pool.all()); }
  MonomialOrder lex() { return MonomialOrder::lex(pool.all()); }
};

Polynomial random_poly(Ring& ring, const std::vector<Variable>& vars,
                       std::mt19937& rng, int max_terms = 4, int max_exp = 3,
                       int coeff_span = 6) {
  std::uniform_int_distribution<int> terms_dist(1, max_terms);
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

// Test-side division with randomized divisor choices; confluence of a reduced
// basis means the result must not depend on them.
Polynomial randomized_normal_form(const Polynomial& f, const GroebnerBasis& gb,
                                  std::mt19937& rng) {
  const MonomialOrder& order = gb.order();
  const CoeffField& field = f.field();
  Polynomial work = f;
  Polynomial remainder(field);
  while (!work.is_zero()) {
    // leading term of work under the order
    const Monomial* lead = nullptr;
    const mpq_class* lead_c = nullptr;
    for (const auto& [m, c] : work.terms())
      if (!lead || order.greater(m, *lead)) {
        lead = &m;
        lead_c = &c;
      }
    std::vector<const Polynomial*> divisors;
    for (const auto& g : gb.elements())
      if (!g.is_zero()) {
        const Monomial* glt = nullptr;
        for (const auto& [m, c] : g.terms())
          if (!glt || order.greater(m, *glt)) glt = &m;
        if (glt->divides(*lead)) divisors.push_back(&g);
      }
    if (divisors.empty()) {
      Polynomial lt = Polynomial::term(field, *lead_c, *lead);
      remainder = remainder + lt;
      work = work - lt;
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, divisors.size() - 1);
    const Polynomial& g = *divisors[pick(rng)];
    const Monomial* glt = nullptr;
    const mpq_class* glc = nullptr;
    for (const auto& [m, c] : g.terms())
      if (!glt || order.greater(m, *glt)) {
        glt = &m;
        glc = &c;
      }
    mpq_class factor = field.mul(*lead_c, field.invert(*glc));
    Polynomial mult = Polynomial::term(field, factor, lead->divided_by(*glt));
    work = work - mult * g;
  }
  return remainder;
}

bool same_set(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace

TEST_CASE("normal_form: membership basics") {
  Ring R;
  Polynomial f = R("x^2 y - 3 x + 1");
  GroebnerBasis gb = buchberger(Ideal(Q, {f}), R.degrevlex());
  CHECK(normal_form(f, gb).is_zero());

  GroebnerBasis axes = buchberger(Ideal(Q, {R("x"), R("y")}), R.degrevlex());
  CHECK(normal_form(R("1"), axes) == R("1"));

  // single-variable division oracle: x^2 = (x+1)(x-1) + 1
  GroebnerBasis shifted = buchberger(Ideal(Q, {R("x - 1")}), R.degrevlex());
  CHECK(normal_form(R("x^2"), shifted) == R("1"));
}

TEST_CASE("buchberger: already-reduced pair stays put") {
  Ring R;
  Polynomial a = R("x^2"), b = R("x y");
  GroebnerBasis gb = buchberger(Ideal(Q, {a, b}), R.degrevlex());
  CHECK(same_set(gb.elements(), {a, b}));
  // the S-polynomial of the pair reduces to zero against the basis
  CHECK(normal_form(R("x^2 y") - R("x^2 y"), gb).is_zero());
}

TEST_CASE("buchberger: linear elimination under lex") {
  Ring R;
  R.pool.intern("x");
  R.pool.intern("y");
  R.pool.intern("z");
  GroebnerBasis gb = buchberger(Ideal(Q, {R("x - y"), R("y - z")}), R.lex());
  CHECK(same_set(gb.elements(), {R("x - z"), R("y - z")}));
}

TEST_CASE("buchberger: unit and zero ideals") {
  Ring R;
  R.pool.intern("x");
  GroebnerBasis unit = buchberger(Ideal(Q, {R("7")}), R.degrevlex());
  CHECK(unit.is_unit());
  CHECK(unit.elements() == std::vector<Polynomial>{R("1")});

  GroebnerBasis zero = buchberger(Ideal(Q, {Polynomial(Q)}), R.degrevlex());
  CHECK(zero.elements().empty());
  CHECK_FALSE(zero.is_unit());
  CHECK(normal_form(R("x"), zero) == R("x"));
}

TEST_CASE("buchberger output is a reduced Groebner basis (oracle checks)") {
  Ring R;
  std::mt19937 rng(2024);
  std::vector<Variable> vars{R.pool.intern("x"), R.pool.intern("y"),
                             R.pool.intern("z")};
  MonomialOrder order = R.degrevlex();
  for (int round = 0; round < 12; ++round) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(R, vars, rng, 3, 2, 4));
    GroebnerBasis gb = buchberger(Ideal(Q, gens), order);
    // every generator reduces to zero
    for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
    const auto& basis = gb.elements();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      // monic leading coefficient
      const Monomial* lt = nullptr;
      mpq_class lc;
      for (const auto& [m, c] : basis[i].terms())
        if (!lt || order.greater(m, *lt)) {
          lt = &m;
          lc = c;
        }
      CHECK(lc == 1);
      // no term of any element divisible by the leading term of another
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        const Monomial* ltj = nullptr;
        for (const auto& [m, c] : basis[j].terms())
          if (!ltj || order.greater(m, *ltj)) ltj = &m;
        for (const auto& [m, c] : basis[i].terms()) CHECK_FALSE(ltj->divides(m));
      }
      // S-polynomials reduce to zero
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        const Monomial* lti = nullptr;
        const Monomial* ltj = nullptr;
        for (const auto& [m, c] : basis[i].terms())
          if (!lti || order.greater(m, *lti)) lti = &m;
        for (const auto& [m, c] : basis[j].terms())
          if (!ltj || order.greater(m, *ltj)) ltj = &m;
        Monomial l = Monomial::lcm(*lti, *ltj);
        Polynomial s =
            Polynomial::term(Q, 1, l.divided_by(*lti)) * basis[i] -
            Polynomial::term(Q, 1, l.divided_by(*ltj)) * basis[j];
        CHECK(normal_form(s, gb).is_zero());
      }
    }
  }
}

TEST_CASE("buchberger output is independent of generator order") {
  Ring R;
  std::mt19937 rng(515);
  std::vector<Variable> vars{R.pool.intern("x"), R.pool.intern("y")};
  for (int round = 0; round < 10; ++round) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(R, vars, rng, 3, 3, 4));
    GroebnerBasis gb1 = buchberger(Ideal(Q, gens), R.degrevlex());
    std::shuffle(gens.begin(), gens.end(), rng);
    GroebnerBasis gb2 = buchberger(Ideal(Q, gens), R.degrevlex());
    CHECK(gb1.elements() == gb2.elements());
  }
}

TEST_CASE("normal_form is confluent against a reduced basis") {
  Ring R;
  std::mt19937 rng(31337);
  std::vector<Variable> vars{R.pool.intern("x"), R.pool.intern("y")};
  for (int round = 0; round < 10; ++round) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(random_poly(R, vars, rng, 3, 2, 4));
    GroebnerBasis gb = buchberger(Ideal(Q, gens), R.degrevlex());
    for (int probe = 0; probe < 5; ++probe) {
      Polynomial f = random_poly(R, vars, rng, 5, 4, 6);
      Polynomial nf = normal_form(f, gb);
      for (int variant = 0; variant < 3; ++variant)
        CHECK(randomized_normal_form(f, gb, rng) == nf);
    }
  }
}

TEST_CASE("radical_member: nilpotency, non-membership, monotonicity") {
  Ring R;
  Variable x = R.pool.intern("x"), y = R.pool.intern("y");
  (void)x;
  (void)y;
  Ideal I(Q, {R("x^2")});
  CHECK(radical_member(R("x"), I, R.pool).member);
  CHECK_FALSE(radical_member(R("y"), Ideal(Q, {R("x")}), R.pool).member);

  // monotone under multiplication and under adding ideal elements
  CHECK(radical_member(R("x y"), I, R.pool).member);
  CHECK(radical_member(R("x + x^2"), I, R.pool).member);
  CHECK(radical_member(R("x - 7 x^2"), I, R.pool).member);
}

TEST_CASE("radical_equal: basics") {
  Ring R;
  R.pool.intern("x");
  R.pool.intern("y");
  CHECK(radical_equal(Ideal(Q, {R("x^2")}), Ideal(Q, {R("x")}), R.pool));
  CHECK_FALSE(radical_equal(Ideal(Q, {R("x")}), Ideal(Q, {R("y")}), R.pool));

  RadicalEqualReport report = radical_equal_report(
      Ideal(Q, {R("x^2")}), Ideal(Q, {R("x")}), R.pool, Budget{},
      MonomialOrder::Kind::DegRevLex, {"f"}, {"g"});
  CHECK(report.equal);
  CHECK(report.forward.size() == 1);
  CHECK(report.forward[0].label == "f");
  CHECK(report.backward[0].label == "g");
}

TEST_CASE("budget exhaustion raises, never truncates") {
  Ring R;
  std::vector<Polynomial> gens{R("x^2 + y"), R("x y + x"), R("y^3 - x")};
  Budget tiny;
  tiny.max_pairs = 1;
  CHECK_THROWS_AS(buchberger(Ideal(Q, gens), R.degrevlex(), tiny), BudgetError);
}

TEST_CASE("radical membership on the filled 3x3 example generators") {
  Ring R;
  for (int i = 1; i <= 7; ++i) R.pool.intern("x" + std::to_string(i));
  Polynomial e12 = R("x3 x7 - x4 x6");
  Polynomial e11 = R("x2 x7 - x4 x5 + (x3 x7 - x4 x6) x7 - x1 x6");
  PolyMatrix Xp(3, 3, 2,
                {{e11, e12, R("x1")},
                 {R("x2"), R("x3"), R("x4")},
                 {R("x5"), R("x6"), R("x7")}});
  RankedGeneratorSet gens = rank_slice_prefix(4, Xp);
  std::vector<Polynomial> qs;
  for (const auto& g : gens.items) qs.push_back(g.poly);
  Ideal J(Q, qs);
  // minors of the sparse X = [[0,0,x1],[x2,x3,x4],[x5,x6,x7]]:
  // [12|12] = 0 (trivially a member), [12|13] = -x1*x2
  PolyMatrix X(3, 3, 2,
               {{Polynomial(Q), Polynomial(Q), R("x1")},
                {R("x2"), R("x3"), R("x4")},
                {R("x5"), R("x6"), R("x7")}});
  CHECK(radical_member(X.submatrix_det({1, 2}, {1, 2}), J, R.pool).member);
  CHECK(radical_member(X.submatrix_det({1, 2}, {1, 3}), J, R.pool).member);
  CHECK(radical_member(X.submatrix_det({2, 3}, {2, 3}), J, R.pool).member);
  // and something visibly outside the radical
  CHECK_FALSE(radical_member(R("x1"), J, R.pool).member);
}

TEST_CASE("prefix property on the generic 2x3 matrix (all h, GF(32003))") {
  CoeffField gf = CoeffField::prime(32003);
  Ring R(gf);
  PolyMatrix X(2, 3, 2,
               {{R("a"), R("b"), R("c")}, {R("d"), R("e"), R("f")}});
  PosetContext ctx = context_of(X);
  for (int h = 1; h <= ctx.top_rank(); ++h) {
    // ideal of all minors with rank <= h
    std::vector<Polynomial> low_rank;
    for (int i = 1; i <= h; ++i)
      for (const auto& d : minors_of_rank(i, ctx))
        low_rank.push_back(X.submatrix_det(d.row_indices(), d.col_indices()));
    RankedGeneratorSet prefix = rank_slice_prefix(h, X);
    std::vector<Polynomial> qs;
    for (const auto& g : prefix.items) qs.push_back(g.poly);
    CHECK(radical_equal(Ideal(gf, low_rank), Ideal(gf, qs), R.pool));
  }
}

TEST_CASE("monomial orders: degrevlex and lex disagree as expected") {
  Ring R;
  Variable x = R.pool.intern("x"), y = R.pool.intern("y"), z = R.pool.intern("z");
  MonomialOrder grl = R.degrevlex();
  MonomialOrder lx = R.lex();
  Monomial x1 = Monomial::var(x);
  Monomial yz = Monomial::var(y).times(Monomial::var(z));
  // lex: x > yz; degrevlex: yz (degree 2) > x (degree 1)
  CHECK(lx.compare(x1, yz) > 0);
  CHECK(grl.compare(x1, yz) < 0);
  // degrevlex tie-break: x*z < y^2 because z is the least variable
  Monomial xz = Monomial::var(x).times(Monomial::var(z));
  Monomial y2 = Monomial::var(y, 2);
  CHECK(grl.compare(xz, y2) < 0);
  CHECK(lx.compare(xz, y2) > 0);
}

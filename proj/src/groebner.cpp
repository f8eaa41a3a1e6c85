#include "detrad/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "detrad/errors.hpp"

namespace detrad {

MonomialOrder MonomialOrder::degrevlex(std::vector<Variable> priority) {
  return MonomialOrder{Kind::DegRevLex, std::move(priority)};
}

MonomialOrder MonomialOrder::lex(std::vector<Variable> priority) {
  return MonomialOrder{Kind::Lex, std::move(priority)};
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind == Kind::DegRevLex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
      int d = a.exponent(*it) - b.exponent(*it);
      if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
  }
  for (const Variable& v : priority) {
    int d = a.exponent(v) - b.exponent(v);
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  return kind == Kind::DegRevLex ? "degrevlex" : "lex";
}

Ideal::Ideal(CoeffField f, std::vector<Polynomial> gens)
    : field(f), generators(std::move(gens)) {
  for (const auto& g : generators)
    if (g.field() != field)
      throw FieldMismatchError("ideal generator over " + g.field().to_string() +
                               " in an ideal over " + field.to_string());
}

Ideal Ideal::map_field(CoeffField target) const {
  std::vector<Polynomial> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(g.map_field(target));
  return Ideal(target, std::move(gens));
}

GroebnerBasis::GroebnerBasis(CoeffField field, MonomialOrder order,
                             std::vector<Polynomial> basis, GroebnerStats stats)
    : field_(field), order_(std::move(order)), basis_(std::move(basis)), stats_(stats) {}

bool GroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

namespace {

using Term = std::pair<Monomial, mpq_class>;

struct MonoGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->compare(a, b) > 0;
  }
};

// Term list ordered leading-first under the ambient order.
struct OPoly {
  std::vector<Term> terms;
  const Monomial& lt() const { return terms.front().first; }
  const mpq_class& lc() const { return terms.front().second; }
};

using WorkPoly = std::map<Monomial, mpq_class, MonoGreater>;

OPoly to_opoly(const Polynomial& p, const MonomialOrder& order) {
  OPoly out;
  out.terms.assign(p.terms().begin(), p.terms().end());
  std::sort(out.terms.begin(), out.terms.end(),
            [&order](const Term& a, const Term& b) {
              return order.compare(a.first, b.first) > 0;
            });
  return out;
}

Polynomial to_polynomial(const WorkPoly& w, const CoeffField& field) {
  Polynomial acc(field);
  for (const auto& [m, c] : w) acc = acc + Polynomial::term(field, c, m);
  return acc;
}

void make_monic(OPoly& p, const CoeffField& field) {
  mpq_class inv = field.invert(p.lc());
  for (auto& [m, c] : p.terms) c = field.mul(c, inv);
}

// work -= c * shift * g
void subtract_multiple(WorkPoly& work, const mpq_class& c, const Monomial& shift,
                       const OPoly& g, const CoeffField& field) {
  for (const auto& [m, gc] : g.terms) {
    Monomial key = shift.times(m);
    auto it = work.find(key);
    mpq_class delta = field.mul(c, gc);
    if (it == work.end()) {
      work.emplace(key, field.neg(delta));
    } else {
      it->second = field.sub(it->second, delta);
      if (field.is_zero(it->second)) work.erase(it);
    }
  }
}

// Full remainder of work modulo the (monic) basis; deterministic first-divisor
// strategy. Consumes work.
WorkPoly reduce_full(WorkPoly work, const std::vector<OPoly>& basis,
                     const CoeffField& field, const MonomialOrder& order) {
  WorkPoly remainder{MonoGreater{&order}};
  while (!work.empty()) {
    // copy: subtract_multiple erases the node these would point into
    Monomial lead_m = work.begin()->first;
    mpq_class lead_c = work.begin()->second;
    bool divided = false;
    for (const auto& g : basis) {
      if (g.lt().divides(lead_m)) {
        subtract_multiple(work, lead_c, lead_m.divided_by(g.lt()), g, field);
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.emplace(std::move(lead_m), std::move(lead_c));
      work.erase(work.begin());
    }
  }
  return remainder;
}

WorkPoly opoly_to_work(const OPoly& p, const MonomialOrder& order) {
  WorkPoly w{MonoGreater{&order}};
  for (const auto& [m, c] : p.terms) w.emplace(m, c);
  return w;
}

OPoly work_to_opoly(const WorkPoly& w) {
  OPoly out;
  out.terms.assign(w.begin(), w.end());
  return out;
}

WorkPoly s_polynomial(const OPoly& f, const OPoly& g, const CoeffField& field,
                      const MonomialOrder& order) {
  Monomial l = Monomial::lcm(f.lt(), g.lt());
  WorkPoly s{MonoGreater{&order}};
  // both inputs monic
  subtract_multiple(s, field.neg(1), l.divided_by(f.lt()), f, field);
  subtract_multiple(s, mpq_class(1), l.divided_by(g.lt()), g, field);
  return s;
}

void check_order_covers(const MonomialOrder& order, const std::vector<Polynomial>& polys) {
  std::set<Variable> prio(order.priority.begin(), order.priority.end());
  for (const auto& p : polys)
    for (Variable v : p.support())
      if (!prio.count(v))
        throw InvalidArgumentError("monomial order priority list does not cover all variables");
}

struct PairKey {
  int degree;
  Monomial lcm;
  std::size_t i, j;
  bool operator<(const PairKey& other) const {
    return std::tie(degree, lcm, i, j) <
           std::tie(other.degree, other.lcm, other.i, other.j);
  }
};

// Minimize + tail-reduce + sort: the unique reduced basis.
std::vector<OPoly> reduce_basis(std::vector<OPoly> basis, const CoeffField& field,
                                const MonomialOrder& order) {
  std::sort(basis.begin(), basis.end(), [&order](const OPoly& a, const OPoly& b) {
    return order.compare(a.lt(), b.lt()) < 0;
  });
  std::vector<OPoly> kept;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& h : kept)
      if (h.lt().divides(g.lt())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<OPoly> others;
      others.reserve(kept.size() - 1);
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      WorkPoly reduced = reduce_full(opoly_to_work(kept[i], order), others, field, order);
      OPoly r = work_to_opoly(reduced);
      if (r.terms != kept[i].terms) {
        kept[i] = std::move(r);
        changed = true;
      }
    }
  }
  std::sort(kept.begin(), kept.end(), [&order](const OPoly& a, const OPoly& b) {
    return order.compare(a.lt(), b.lt()) < 0;
  });
  return kept;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const Budget& budget) {
  check_order_covers(order, ideal.generators);
  const CoeffField& field = ideal.field;

  std::vector<OPoly> basis;
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    OPoly p = to_opoly(g, order);
    make_monic(p, field);
    basis.push_back(std::move(p));
  }

  GroebnerStats stats;
  std::set<PairKey> pairs;
  auto push_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].lt(), basis[j].lt());
      pairs.insert(PairKey{l.degree(), std::move(l), i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

  while (!pairs.empty()) {
    if (++stats.pairs_processed > budget.max_pairs)
      throw BudgetError("Groebner pair budget exceeded (" +
                        std::to_string(budget.max_pairs) +
                        " pairs); result inconclusive");
    PairKey key = *pairs.begin();
    pairs.erase(pairs.begin());
    const OPoly& f = basis[key.i];
    const OPoly& g = basis[key.j];
    if (f.lt().coprime_with(g.lt())) continue;  // product criterion
    WorkPoly s = s_polynomial(f, g, field, order);
    WorkPoly r = reduce_full(std::move(s), basis, field, order);
    if (r.empty()) continue;
    OPoly nb = work_to_opoly(r);
    make_monic(nb, field);
    basis.push_back(std::move(nb));
    if (basis.size() > budget.max_basis)
      throw BudgetError("Groebner basis size budget exceeded (" +
                        std::to_string(budget.max_basis) +
                        " elements); result inconclusive");
    push_pairs_with(basis.size() - 1);
  }

  std::vector<OPoly> reduced = reduce_basis(std::move(basis), field, order);
  stats.basis_size = reduced.size();

  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (const auto& p : reduced) {
    Polynomial acc(field);
    for (const auto& [m, c] : p.terms) acc = acc + Polynomial::term(field, c, m);
    out.push_back(std::move(acc));
  }
  return GroebnerBasis(field, order, std::move(out), stats);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (f.field() != basis.field())
    throw FieldMismatchError("normal form of a polynomial over " +
                             f.field().to_string() + " against a basis over " +
                             basis.field().to_string());
  check_order_covers(basis.order(), {f});
  std::vector<OPoly> ops;
  ops.reserve(basis.elements().size());
  for (const auto& g : basis.elements()) ops.push_back(to_opoly(g, basis.order()));
  WorkPoly work{MonoGreater{&basis.order()}};
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);
  WorkPoly r = reduce_full(std::move(work), ops, f.field(), basis.order());
  return to_polynomial(r, f.field());
}

RadicalMembership radical_member(const Polynomial& f, const Ideal& ideal,
                                 VarPool& pool, const Budget& budget,
                                 MonomialOrder::Kind kind) {
  if (f.field() != ideal.field)
    throw FieldMismatchError("radical membership across different fields");
  Variable z = pool.fresh("z");
  std::set<Variable> vars;
  for (const auto& g : ideal.generators)
    for (Variable v : g.support()) vars.insert(v);
  for (Variable v : f.support()) vars.insert(v);
  std::vector<Variable> priority(vars.begin(), vars.end());
  priority.push_back(z);  // the adjoined variable goes last

  std::vector<Polynomial> gens = ideal.generators;
  Polynomial one = Polynomial::constant(ideal.field, 1);
  gens.push_back(one - Polynomial::variable(ideal.field, z) * f);

  MonomialOrder order{kind, std::move(priority)};
  GroebnerBasis gb = buchberger(Ideal(ideal.field, std::move(gens)), order, budget);
  return RadicalMembership{gb.is_unit(), gb.stats()};
}

RadicalEqualReport radical_equal_report(const Ideal& I, const Ideal& J,
                                        VarPool& pool, const Budget& budget,
                                        MonomialOrder::Kind kind,
                                        const std::vector<std::string>& labels_I,
                                        const std::vector<std::string>& labels_J) {
  if (I.field != J.field)
    throw FieldMismatchError("radical equality across different fields");
  RadicalEqualReport report;
  report.field = I.field;
  report.order_name = kind == MonomialOrder::Kind::DegRevLex ? "degrevlex" : "lex";

  auto run_direction = [&](const Ideal& from, const Ideal& onto,
                           const std::vector<std::string>& labels,
                           std::vector<MembershipRecord>& records) {
    for (std::size_t i = 0; i < from.generators.size(); ++i) {
      const Polynomial& g = from.generators[i];
      std::string label = i < labels.size() ? labels[i]
                                            : "g" + std::to_string(i + 1);
      if (g.is_zero()) {
        records.push_back({label, true, 0, 0});
        continue;
      }
      RadicalMembership m = radical_member(g, onto, pool, budget, kind);
      records.push_back({label, m.member, m.stats.basis_size, m.stats.pairs_processed});
      if (!m.member) {
        report.equal = false;
        break;  // direction decided
      }
    }
  };

  run_direction(I, J, labels_I, report.forward);
  if (report.equal) run_direction(J, I, labels_J, report.backward);
  return report;
}

bool radical_equal(const Ideal& I, const Ideal& J, VarPool& pool,
                   const Budget& budget, MonomialOrder::Kind kind) {
  return radical_equal_report(I, J, pool, budget, kind).equal;
}

}  // namespace detrad

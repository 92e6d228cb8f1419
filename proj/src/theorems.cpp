#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "proxideal/harness.hpp"

namespace proxideal {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 18> kTheoremNames{{
    {TheoremId::RadExt, "RAD-EXT"},   {TheoremId::ThmA, "THM-A"},
    {TheoremId::ThmB, "THM-B"},       {TheoremId::ThmC, "THM-C"},
    {TheoremId::PropD, "PROP-D"},     {TheoremId::CorE, "COR-E"},
    {TheoremId::LemF, "LEM-F"},       {TheoremId::LemFRev, "LEM-F-REV"},
    {TheoremId::ThmG, "THM-G"},       {TheoremId::PropH, "PROP-H"},
    {TheoremId::ThmI, "THM-I"},       {TheoremId::PropJ1, "PROP-J1"},
    {TheoremId::PropJ2, "PROP-J2"},   {TheoremId::ThmK, "THM-K"},
    {TheoremId::ThmL, "THM-L"},       {TheoremId::ThmM, "THM-M"},
    {TheoremId::ThmN, "THM-N"},       {TheoremId::ConvK, "CONV-K"},
}};

bool has(std::uint64_t set, Point p) { return ((set >> p) & 1U) != 0; }
bool within(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

}  // namespace

std::string_view to_string(TheoremId id) {
  for (auto const& [k, name] : kTheoremNames)
    if (k == id) return name;
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view s) {
  for (auto const& [k, name] : kTheoremNames)
    if (name == s) return k;
  return std::nullopt;
}

std::vector<TheoremId> const& all_theorems() {
  static std::vector<TheoremId> const ids = [] {
    std::vector<TheoremId> out;
    for (auto const& entry : kTheoremNames) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

bool is_claim(TheoremId id) { return id != TheoremId::ConvK; }

std::string_view to_string(FindingStatus s) {
  switch (s) {
    case FindingStatus::Confirmed: return "CONFIRMED";
    case FindingStatus::Counterexample: return "COUNTEREXAMPLE";
    case FindingStatus::HypothesisNotMet: return "HYPOTHESIS-NOT-MET";
  }
  return "?";
}

Stratum Stratum::of(AlgebraInstance const& inst) {
  auto const& f = inst.flags();
  return {f.op_closed.holds, f.semigroup_add.holds && f.semigroup_mul.holds,
          inst.space().injective_probe(), f.upper_closed_add.holds && f.upper_closed_mul.holds};
}

namespace {

// Commutative approx ring with a unique zero, a unique unity and every
// carrier point negated.
bool unital_commutative_ring(AlgebraInstance const& inst) {
  auto const& f = inst.flags();
  auto const& ids = inst.identities();
  if (!f.ring || !f.commutative || !ids.zero() || !ids.one()) return false;
  return std::all_of(inst.carrier().begin(), inst.carrier().end(),
                     [&](Point a) { return ids.neg[a].has_value(); });
}

struct IdealFacts {
  std::uint64_t bits = 0;
  std::uint64_t upper = 0;
  std::uint64_t rad = 0;
  bool prime = false;
  bool primary = false;
  bool one_absorbing = false;
};

class Context {
 public:
  explicit Context(AlgebraInstance const& inst) : inst_(inst), ringu_(unital_commutative_ring(inst)) {
    try {
      for (Subset const& w : enumerate_ideals(inst)) {
        IdealFacts f;
        f.bits = w.bits();
        f.upper = inst.space().upper_bits(f.bits);
        f.rad = detail::radical_bits(inst, f.bits);
        f.prime = detail::prime_scan(inst, f.bits).holds;
        f.primary = detail::primary_scan(inst, f.bits).holds;
        if (inst.identities().one()) f.one_absorbing = detail::one_absorbing_scan(inst, f.bits).holds;
        ideals_.push_back(f);
      }
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      too_large_ = true;
    }
  }

  AlgebraInstance const& inst() const { return inst_; }
  bool ringu() const { return ringu_; }
  bool too_large() const { return too_large_; }
  std::vector<IdealFacts> const& ideals() const { return ideals_; }
  Subset set(std::uint64_t bits) const { return Subset::from_bits(inst_.size(), bits); }

  bool is_ideal(std::uint64_t m) const {
    if (m == 0 || !within(m, inst_.carrier().bits()) || !inst_.identities().zero()) return false;
    return detail::ideal_scan(inst_, m).holds;
  }

  bool prime_ideal(std::uint64_t m) const { return is_ideal(m) && detail::prime_scan(inst_, m).holds; }

  // Every ideal whose radical is a prime ideal is primary.
  bool semi_primary_property() {
    if (!property_) {
      property_ = std::all_of(ideals_.begin(), ideals_.end(), [&](IdealFacts const& f) {
        return f.primary || !prime_ideal(f.rad);
      });
    }
    return *property_;
  }

 private:
  AlgebraInstance const& inst_;
  bool ringu_;
  bool too_large_ = false;
  std::vector<IdealFacts> ideals_;
  std::optional<bool> property_;
};

class Outcome {
 public:
  void count() { ++cases_; }
  bool failed() const { return witness_.has_value(); }
  void fail(TheoremWitness w) {
    if (!witness_) witness_ = std::move(w);
  }

  TheoremFinding finish(TheoremId id, AlgebraInstance const& inst, Stratum const& stratum) {
    TheoremFinding f;
    f.theorem = id;
    f.fingerprint = inst.fingerprint();
    f.stratum = stratum;
    f.cases = cases_;
    if (witness_) {
      f.status = FindingStatus::Counterexample;
      f.witness = std::move(*witness_);
    } else {
      f.status = cases_ > 0 ? FindingStatus::Confirmed : FindingStatus::HypothesisNotMet;
    }
    return f;
  }

 private:
  std::size_t cases_ = 0;
  std::optional<TheoremWitness> witness_;
};

using Check = void (*)(Context&, Outcome&);

void check_rad_ext(Context& cx, Outcome& out) {
  for (auto const& w : cx.ideals()) {
    out.count();
    if (std::uint64_t const lost = w.bits & ~w.rad; lost != 0) {
      out.fail({{cx.set(w.bits)}, {static_cast<Point>(std::countr_zero(lost))}, "member outside r(W)"});
      return;
    }
  }
}

void check_prime_primary(Context& cx, Outcome& out) {
  for (auto const& w : cx.ideals()) {
    if (!w.prime) continue;
    out.count();
    if (!w.primary) {
      Decision const d = detail::primary_scan(cx.inst(), w.bits);
      out.fail({{cx.set(w.bits)}, d.witness.points, "prime but not primary"});
      return;
    }
  }
}

void check_colon_intersection(Context& cx, Outcome& out) {
  auto const& ideals = cx.ideals();
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i; j < ideals.size(); ++j)
      for (Point s : cx.inst().carrier()) {
        out.count();
        std::uint64_t const lhs = detail::colon_bits(cx.inst(), ideals[i].bits & ideals[j].bits, s);
        std::uint64_t const rhs = detail::colon_bits(cx.inst(), ideals[i].bits, s) &
                                  detail::colon_bits(cx.inst(), ideals[j].bits, s);
        if (lhs != rhs) {
          out.fail({{cx.set(ideals[i].bits), cx.set(ideals[j].bits)}, {s}, "colon sets differ"});
          return;
        }
      }
}

void check_radical_intersection(Context& cx, Outcome& out) {
  auto const& ideals = cx.ideals();
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i; j < ideals.size(); ++j) {
      out.count();
      std::uint64_t const lhs = detail::radical_bits(cx.inst(), ideals[i].bits & ideals[j].bits);
      std::uint64_t const rhs = ideals[i].rad & ideals[j].rad;
      if (!within(lhs, rhs)) {
        out.fail({{cx.set(ideals[i].bits), cx.set(ideals[j].bits)},
                  {static_cast<Point>(std::countr_zero(lhs & ~rhs))},
                  "r(W1 n W2) not within r(W1) n r(W2)"});
        return;
      }
    }
}

void check_radical_intersection_reverse(Context& cx, Outcome& out) {
  auto const& f = cx.inst().flags();
  if (!f.op_closed || !f.semigroup_mul || !f.commutative) return;
  auto const& ideals = cx.ideals();
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i; j < ideals.size(); ++j) {
      out.count();
      std::uint64_t const lhs = ideals[i].rad & ideals[j].rad;
      std::uint64_t const rhs = detail::radical_bits(cx.inst(), ideals[i].bits & ideals[j].bits);
      if (!within(lhs, rhs)) {
        out.fail({{cx.set(ideals[i].bits), cx.set(ideals[j].bits)},
                  {static_cast<Point>(std::countr_zero(lhs & ~rhs))},
                  "r(W1) n r(W2) not within r(W1 n W2)"});
        return;
      }
    }
}

void check_zero_divisors(Context& cx, Outcome& out) {
  if (!cx.ringu()) return;
  for (auto const& w : cx.ideals()) {
    if (!w.primary) continue;
    QuotientStructure const q = quotient(cx.inst(), cx.set(w.bits));
    if (!q.well_defined) continue;
    out.count();
    for (std::size_t c = 0; c < q.coset_count(); ++c) {
      if (q.is_zero_divisor(c) && !q.is_nilpotent(c)) {
        out.fail({{cx.set(w.bits)}, q.zero_divisor[c]->points, "zero divisor coset is not nilpotent"});
        return;
      }
    }
  }
}

bool upper_closed_both(AlgebraInstance const& inst) {
  return inst.flags().upper_closed_add.holds && inst.flags().upper_closed_mul.holds;
}

void check_radical_ideal(Context& cx, Outcome& out) {
  if (!cx.ringu() || !upper_closed_both(cx.inst())) return;
  for (auto const& w : cx.ideals()) {
    out.count();
    if (!cx.is_ideal(w.rad)) {
      out.fail({{cx.set(w.bits), cx.set(w.rad)}, {}, "r(W) is not an ideal"});
      return;
    }
  }
}

void check_smallest_prime(Context& cx, Outcome& out) {
  if (!cx.ringu()) return;
  for (auto const& w : cx.ideals()) {
    if (!w.primary) continue;
    out.count();
    if (!cx.prime_ideal(w.rad)) {
      out.fail({{cx.set(w.bits), cx.set(w.rad)}, {}, "r(W) is not a prime ideal"});
      return;
    }
    for (auto const& p : cx.ideals()) {
      if (p.prime && within(w.bits, p.bits) && !within(w.rad, p.bits)) {
        out.fail({{cx.set(w.bits), cx.set(p.bits)},
                  {static_cast<Point>(std::countr_zero(w.rad & ~p.bits))},
                  "r(W) not within a prime containing W"});
        return;
      }
    }
  }
}

void check_prime_radical(Context& cx, Outcome& out) {
  if (!cx.ringu()) return;
  for (auto const& w : cx.ideals()) {
    if (!w.prime) continue;
    out.count();
    if (w.rad != w.bits) {
      std::uint64_t const diff = w.rad ^ w.bits;
      out.fail({{cx.set(w.bits)}, {static_cast<Point>(std::countr_zero(diff))}, "r(W) differs from W"});
      return;
    }
  }
}

void check_primary_intersection(Context& cx, Outcome& out) {
  if (!cx.ringu()) return;
  auto const& ideals = cx.ideals();
  for (auto const& p : ideals) {
    if (!p.prime) continue;
    std::vector<IdealFacts const*> members;
    for (auto const& w : ideals)
      if (w.primary && w.rad == p.bits) members.push_back(&w);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i; j < members.size(); ++j) {
        auto const& a = *members[i];
        auto const& b = *members[j];
        std::uint64_t const meet = a.bits & b.bits;
        if (cx.inst().space().upper_bits(meet) != (a.upper & b.upper)) continue;
        out.count();
        std::string why;
        if (meet == 0) {
          why = "intersection is empty";
        } else if (!cx.is_ideal(meet)) {
          why = "intersection is not an ideal";
        } else if (!detail::primary_scan(cx.inst(), meet)) {
          why = "intersection is not primary";
        } else if (detail::radical_bits(cx.inst(), meet) != p.bits) {
          why = "radical of the intersection differs from P";
        }
        if (!why.empty()) {
          out.fail({{cx.set(a.bits), cx.set(b.bits), cx.set(p.bits)}, {}, why});
          return;
        }
      }
  }
}

void check_colon_ideal(Context& cx, Outcome& out) {
  if (!cx.ringu() || !upper_closed_both(cx.inst())) return;
  for (auto const& w : cx.ideals())
    for (Point s : cx.inst().carrier()) {
      out.count();
      std::uint64_t const c = detail::colon_bits(cx.inst(), w.bits, s);
      if (!cx.is_ideal(c)) {
        out.fail({{cx.set(w.bits), cx.set(c)}, {s}, c == 0 ? "W:s is empty" : "W:s is not an ideal"});
        return;
      }
    }
}

void check_quotient_property(Context& cx, Outcome& out) {
  if (!cx.ringu() || !cx.semi_primary_property()) return;
  AlgebraInstance const& inst = cx.inst();
  for (auto const& o : cx.ideals()) {
    if (o.bits == inst.carrier().bits()) continue;
    QuotientStructure const q = quotient(inst, cx.set(o.bits));
    if (!q.well_defined || !q.tables_total()) continue;
    AlgebraInstance const qi = quotient_instance(inst, q);
    out.count();
    Context qcx(qi);
    for (auto const& j : qcx.ideals()) {
      if (j.primary || !qcx.prime_ideal(j.rad)) continue;
      std::uint64_t preimage = 0;
      for (Point c : qcx.set(j.bits)) preimage |= q.cosets[c].bits();
      Decision const d = detail::primary_scan(qi, j.bits);
      std::vector<Point> pts;
      for (Point c : d.witness.points) pts.push_back(q.cosets[c].front());
      out.fail({{cx.set(o.bits), cx.set(preimage)}, pts,
                "semi-primary ideal of the quotient is not primary"});
      return;
    }
  }
}

void check_between_primary(Context& cx, Outcome& out) {
  if (!cx.ringu() || !cx.semi_primary_property()) return;
  for (auto const& q : cx.ideals()) {
    if (!q.primary || !cx.prime_ideal(q.rad)) continue;
    for (auto const& w : cx.ideals()) {
      if (!within(q.bits, w.bits) || !within(w.bits, q.rad)) continue;
      out.count();
      if (!w.primary || w.rad != q.rad) {
        out.fail({{cx.set(q.bits), cx.set(w.bits)}, {},
                  w.primary ? "r(W) differs from r(Q)" : "W is not primary"});
        return;
      }
    }
  }
}

void check_primary_absorbing(Context& cx, Outcome& out) {
  if (!cx.ringu()) return;
  for (auto const& q : cx.ideals()) {
    if (!q.primary) continue;
    out.count();
    if (!q.one_absorbing) {
      Decision const d = detail::one_absorbing_scan(cx.inst(), q.bits);
      out.fail({{cx.set(q.bits)}, d.witness.points, "primary but not 1-absorbing primary"});
      return;
    }
  }
}

void check_absorbing_radical(Context& cx, Outcome& out) {
  if (!cx.ringu()) return;
  for (auto const& q : cx.ideals()) {
    if (!q.one_absorbing) continue;
    out.count();
    if (!cx.is_ideal(q.rad)) {
      out.fail({{cx.set(q.bits), cx.set(q.rad)}, {}, "r(Q) is not an ideal"});
      return;
    }
    if (Decision const d = detail::prime_scan(cx.inst(), q.rad); !d) {
      out.fail({{cx.set(q.bits), cx.set(q.rad)}, d.witness.points, "r(Q) is not prime"});
      return;
    }
  }
}

void check_irreducible(Context& cx, Outcome& out) {
  if (!cx.ringu()) return;
  AlgebraInstance const& inst = cx.inst();
  Subset const non_units = inst.carrier() - inst.identities().units;
  for (auto const& w : cx.ideals()) {
    if (!w.one_absorbing || w.primary) continue;
    for (Point a : non_units) {
      if (has(w.bits, a)) continue;
      for (Point b : non_units) {
        if (has(w.rad, b) || !has(w.upper, inst.mul(a, b))) continue;
        out.count();
        if (Decision const d = is_irreducible(inst, a); !d) {
          std::vector<Point> pts{a, b};
          pts.insert(pts.end(), d.witness.points.begin(), d.witness.points.end());
          out.fail({{cx.set(w.bits)}, pts, "a is not irreducible"});
          return;
        }
      }
    }
  }
}

std::uint64_t product_bits(Subset const& left, Subset const& right) {
  std::size_t const n2 = right.universe();
  std::uint64_t out = 0;
  for (Point a : left)
    for (Point b : right) out |= std::uint64_t{1} << (a * n2 + b);
  return out;
}

void check_product_primary(Context& cx, Outcome& out) {
  AlgebraInstance const& inst = cx.inst();
  ProductFactors const* fac = inst.factors();
  if (fac == nullptr || !unital_commutative_ring(*fac->left) || !unital_commutative_ring(*fac->right)) {
    return;
  }
  AlgebraInstance const& r1 = *fac->left;
  AlgebraInstance const& r2 = *fac->right;
  if (inst.upper_carrier().bits() != product_bits(r1.upper_carrier(), r2.upper_carrier())) return;
  if (r1.carrier().size() > 16) return;
  std::uint64_t const c1 = r1.carrier().bits();
  std::uint64_t sub = 0;
  do {
    sub = (sub - c1) & c1;
    if (sub == 0) break;
    std::uint64_t const m = product_bits(Subset::from_bits(r1.size(), sub), r2.carrier());
    if (!cx.is_ideal(m) || !detail::primary_scan(inst, m)) continue;
    out.count();
    bool const n_ideal = detail::ideal_scan(r1, sub).holds;
    if (!n_ideal || !detail::primary_scan(r1, sub)) {
      out.fail({{cx.set(m), Subset::from_bits(r1.size(), sub)}, {},
                n_ideal ? "N is not primary" : "N is not an ideal"});
      return;
    }
  } while (sub != 0);
}

void check_absorbing_converse(Context& cx, Outcome& out) {
  if (!cx.ringu()) return;
  for (auto const& q : cx.ideals()) {
    if (!q.one_absorbing) continue;
    out.count();
    if (!q.primary) {
      Decision const d = detail::primary_scan(cx.inst(), q.bits);
      out.fail({{cx.set(q.bits)}, d.witness.points, "1-absorbing primary but not primary"});
      return;
    }
  }
}

Check check_for(TheoremId id) {
  switch (id) {
    case TheoremId::RadExt: return check_rad_ext;
    case TheoremId::ThmA: return check_prime_primary;
    case TheoremId::ThmB: return check_zero_divisors;
    case TheoremId::ThmC: return check_radical_ideal;
    case TheoremId::PropD: return check_smallest_prime;
    case TheoremId::CorE: return check_prime_radical;
    case TheoremId::LemF: return check_radical_intersection;
    case TheoremId::LemFRev: return check_radical_intersection_reverse;
    case TheoremId::ThmG: return check_primary_intersection;
    case TheoremId::PropH: return check_colon_ideal;
    case TheoremId::ThmI: return check_colon_intersection;
    case TheoremId::PropJ1: return check_quotient_property;
    case TheoremId::PropJ2: return check_between_primary;
    case TheoremId::ThmK: return check_primary_absorbing;
    case TheoremId::ThmL: return check_absorbing_radical;
    case TheoremId::ThmM: return check_irreducible;
    case TheoremId::ThmN: return check_product_primary;
    case TheoremId::ConvK: return check_absorbing_converse;
  }
  return nullptr;
}

}  // namespace

std::vector<TheoremFinding> evaluate_instance(AlgebraInstance const& inst,
                                              std::vector<TheoremId> const& selection) {
  Context cx(inst);
  Stratum const stratum = Stratum::of(inst);
  std::vector<TheoremFinding> out;
  out.reserve(selection.size());
  for (TheoremId id : selection) {
    Outcome o;
    if (!cx.too_large()) check_for(id)(cx, o);
    out.push_back(o.finish(id, inst, stratum));
  }
  return out;
}

std::vector<TheoremFinding> run_theorem_suite(std::vector<AlgebraInstance> const& instances,
                                              std::vector<TheoremId> const& selection) {
  std::vector<TheoremFinding> out;
  for (auto const& inst : instances) {
    auto f = evaluate_instance(inst, selection);
    out.insert(out.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  }
  auto rank = [](TheoremId id) { return static_cast<int>(id); };
  std::stable_sort(out.begin(), out.end(), [&](TheoremFinding const& a, TheoremFinding const& b) {
    if (a.fingerprint != b.fingerprint) return a.fingerprint < b.fingerprint;
    return rank(a.theorem) < rank(b.theorem);
  });
  return out;
}

namespace {

bool ideal(AlgebraInstance const& inst, Subset const& s) {
  return !s.empty() && s.is_subset_of(inst.carrier()) && is_approx_ideal(inst, s).holds;
}

bool prime_ideal(AlgebraInstance const& inst, Subset const& s) {
  return ideal(inst, s) && is_prime(inst, s).holds;
}

bool primary_ideal(AlgebraInstance const& inst, Subset const& s) {
  return ideal(inst, s) && is_primary(inst, s).holds;
}

bool semi_primary_property(AlgebraInstance const& inst) {
  for (Subset const& o : enumerate_ideals(inst)) {
    if (prime_ideal(inst, radical(inst, o)) && !is_primary(inst, o)) return false;
  }
  return true;
}

bool replay_checked(AlgebraInstance const& inst, TheoremFinding const& f) {
  auto const& sets = f.witness.sets;
  auto const& pts = f.witness.points;
  auto set = [&](std::size_t i) -> Subset const& { return sets.at(i); };
  auto pt = [&](std::size_t i) { return pts.at(i); };

  switch (f.theorem) {
    case TheoremId::RadExt:
      return ideal(inst, set(0)) && !set(0).is_subset_of(radical(inst, set(0)));
    case TheoremId::ThmA:
      return ideal(inst, set(0)) && is_prime(inst, set(0)) && !is_primary(inst, set(0));
    case TheoremId::ThmI: {
      if (!ideal(inst, set(0)) || !ideal(inst, set(1))) return false;
      Subset const lhs = colon(inst, intersect_ideals(inst, {set(0), set(1)}), pt(0));
      return lhs != (colon(inst, set(0), pt(0)) & colon(inst, set(1), pt(0)));
    }
    case TheoremId::LemF:
    case TheoremId::LemFRev: {
      if (!ideal(inst, set(0)) || !ideal(inst, set(1))) return false;
      Subset const meet = radical(inst, intersect_ideals(inst, {set(0), set(1)}));
      Subset const both = radical(inst, set(0)) & radical(inst, set(1));
      return f.theorem == TheoremId::LemF ? !meet.is_subset_of(both) : !both.is_subset_of(meet);
    }
    case TheoremId::ThmB: {
      if (!primary_ideal(inst, set(0))) return false;
      QuotientStructure const q = quotient(inst, set(0));
      int const c = q.coset_of.at(pt(0));
      if (!q.well_defined || c < 0) return false;
      auto const k = static_cast<std::size_t>(c);
      return q.is_zero_divisor(k) && !q.is_nilpotent(k);
    }
    case TheoremId::ThmC:
      return ideal(inst, set(0)) && !ideal(inst, radical(inst, set(0)));
    case TheoremId::PropD: {
      if (!primary_ideal(inst, set(0))) return false;
      Subset const rad = radical(inst, set(0));
      if (sets.size() == 2 && set(1) == rad) return !prime_ideal(inst, rad);
      return prime_ideal(inst, set(1)) && set(0).is_subset_of(set(1)) && !rad.is_subset_of(set(1));
    }
    case TheoremId::CorE:
      return prime_ideal(inst, set(0)) && radical(inst, set(0)) != set(0);
    case TheoremId::ThmG: {
      Subset const& p = set(2);
      if (!ideal(inst, set(0)) || !ideal(inst, set(1)) || !ideal(inst, p)) return false;
      if (!is_p_primary(inst, set(0), p) || !is_p_primary(inst, set(1), p)) return false;
      Subset const meet = intersect_ideals(inst, {set(0), set(1)});
      if (inst.upper(meet) != (inst.upper(set(0)) & inst.upper(set(1)))) return false;
      return !primary_ideal(inst, meet) || radical(inst, meet) != p;
    }
    case TheoremId::PropH: {
      if (!ideal(inst, set(0))) return false;
      return !ideal(inst, colon(inst, set(0), pt(0)));
    }
    case TheoremId::PropJ1: {
      Subset const& o = set(0);
      if (!ideal(inst, o) || o == inst.carrier() || !semi_primary_property(inst)) return false;
      QuotientStructure const q = quotient(inst, o);
      if (!q.well_defined || !q.tables_total()) return false;
      AlgebraInstance const qi = quotient_instance(inst, q);
      Subset j(qi.size());
      for (std::size_t c : q.image(set(1))) j.insert(static_cast<Point>(c));
      return ideal(qi, j) && is_semi_primary(qi, j) && !is_primary(qi, j);
    }
    case TheoremId::PropJ2: {
      Subset const& q = set(0);
      Subset const& w = set(1);
      if (!ideal(inst, q) || !ideal(inst, w) || !semi_primary_property(inst)) return false;
      Subset const rad = radical(inst, q);
      if (!prime_ideal(inst, rad) || !is_p_primary(inst, q, rad)) return false;
      if (!q.is_subset_of(w) || !w.is_subset_of(rad)) return false;
      return !is_p_primary(inst, w, rad);
    }
    case TheoremId::ThmK:
      return primary_ideal(inst, set(0)) && !is_one_absorbing_primary(inst, set(0));
    case TheoremId::ThmL: {
      if (!ideal(inst, set(0)) || !is_one_absorbing_primary(inst, set(0))) return false;
      return !prime_ideal(inst, radical(inst, set(0)));
    }
    case TheoremId::ThmM: {
      Subset const& w = set(0);
      if (!ideal(inst, w) || !is_one_absorbing_primary(inst, w) || is_primary(inst, w)) return false;
      Point const a = pt(0);
      Point const b = pt(1);
      Subset const u = units(inst);
      if (u.contains(a) || u.contains(b) || w.contains(a) || radical(inst, w).contains(b)) return false;
      if (!inst.upper(w).contains(inst.mul(a, b))) return false;
      return !is_irreducible(inst, a);
    }
    case TheoremId::ThmN: {
      ProductFactors const* fac = inst.factors();
      if (fac == nullptr) return false;
      Subset const& m = set(0);
      Subset const& n = set(1);
      if (m.bits() != product_bits(n, fac->right->carrier())) return false;
      if (!primary_ideal(inst, m)) return false;
      return !primary_ideal(*fac->left, n);
    }
    case TheoremId::ConvK:
      return ideal(inst, set(0)) && is_one_absorbing_primary(inst, set(0)) &&
             !is_primary(inst, set(0));
  }
  return false;
}

}  // namespace

bool replay_counterexample(AlgebraInstance const& inst, TheoremFinding const& finding) {
  if (finding.status != FindingStatus::Counterexample) return false;
  if (inst.fingerprint() != finding.fingerprint) return false;
  try {
    return replay_checked(inst, finding);
  } catch (Error const&) {
    return false;
  } catch (std::out_of_range const&) {
    return false;
  }
}

}  // namespace proxideal

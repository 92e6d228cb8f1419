#include "proxideal/ideals.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace proxideal {

namespace {

bool has(std::uint64_t set, Point p) { return ((set >> p) & 1U) != 0; }

void require_nonempty_in_carrier(AlgebraInstance const& inst, Subset const& s) {
  inst.space().check_member(s);
  if (s.empty()) throw Error(ErrorKind::EmptySet, "ideal candidates must be nonempty");
  if (!s.is_subset_of(inst.carrier())) {
    Subset const outside = s - inst.carrier();
    throw Error(ErrorKind::NotInCarrier, "subset leaves the carrier at " + inst.name(outside.front()),
                outside.members());
  }
}

void require_ideal(AlgebraInstance const& inst, Subset const& w, char const* role) {
  Decision const d = is_approx_ideal(inst, w);
  if (!d) {
    throw Error(ErrorKind::NotAnIdeal,
                std::string(role) + " is not an approx ideal (" + d.witness.rule + ")",
                d.witness.points);
  }
}

}  // namespace

namespace detail {

Decision ideal_scan(AlgebraInstance const& inst, std::uint64_t q) {
  auto const& neg = inst.identities().neg;
  for (std::uint64_t rest = q; rest != 0; rest &= rest - 1) {
    auto const a = static_cast<Point>(std::countr_zero(rest));
    if (!neg[a]) return Decision::no("missing-inverse", {a});
    if (!has(q, *neg[a])) return Decision::no("negation", {a, *neg[a]});
  }
  std::uint64_t const upper = inst.space().upper_bits(q);
  for (std::uint64_t ra = q; ra != 0; ra &= ra - 1) {
    auto const a = static_cast<Point>(std::countr_zero(ra));
    for (std::uint64_t rb = q; rb != 0; rb &= rb - 1) {
      auto const b = static_cast<Point>(std::countr_zero(rb));
      if (!has(upper, inst.add(a, b))) return Decision::no("sum", {a, b});
    }
  }
  for (Point r : inst.carrier()) {
    for (std::uint64_t ra = q; ra != 0; ra &= ra - 1) {
      auto const a = static_cast<Point>(std::countr_zero(ra));
      if (!has(upper, inst.mul(r, a))) return Decision::no("multiple", {r, a});
    }
  }
  return Decision::yes();
}

Decision prime_scan(AlgebraInstance const& inst, std::uint64_t w) {
  std::uint64_t const upper = inst.space().upper_bits(w);
  for (Point a : inst.carrier()) {
    if (has(w, a)) continue;
    for (Point b : inst.carrier()) {
      if (!has(w, b) && has(upper, inst.mul(a, b))) return Decision::no("factors", {a, b});
    }
  }
  return Decision::yes();
}

Decision primary_scan(AlgebraInstance const& inst, std::uint64_t w) {
  std::uint64_t const upper = inst.space().upper_bits(w);
  for (Point a : inst.carrier()) {
    if (has(w, a)) continue;
    for (Point b : inst.carrier()) {
      if ((inst.power_bits(b) & w) == 0 && has(upper, inst.mul(a, b))) {
        return Decision::no("factors", {a, b});
      }
    }
  }
  return Decision::yes();
}

std::uint64_t radical_bits(AlgebraInstance const& inst, std::uint64_t w) {
  std::uint64_t out = 0;
  for (Point s : inst.carrier())
    if ((inst.power_bits(s) & w) != 0) out |= std::uint64_t{1} << s;
  return out;
}

std::uint64_t colon_bits(AlgebraInstance const& inst, std::uint64_t w, Point s) {
  std::uint64_t out = 0;
  for (Point l : inst.carrier())
    if (has(w, inst.mul(s, l))) out |= std::uint64_t{1} << l;
  return out;
}

Decision one_absorbing_scan(AlgebraInstance const& inst, std::uint64_t q) {
  Subset const non_units = inst.carrier() - inst.identities().units;
  std::uint64_t const upper = inst.space().upper_bits(q);
  std::uint64_t const rad = radical_bits(inst, q);
  for (Point a : non_units)
    for (Point b : non_units) {
      Point const ab = inst.mul(a, b);
      if (has(q, ab)) continue;
      for (Point c : non_units)
        if (!has(rad, c) && has(upper, inst.mul(ab, c))) return Decision::no("triple", {a, b, c});
    }
  return Decision::yes();
}

}  // namespace detail

Decision is_approx_ideal(AlgebraInstance const& inst, Subset const& q) {
  require_nonempty_in_carrier(inst, q);
  require_zero(inst);
  Decision d = detail::ideal_scan(inst, q.bits());
  if (!d && d.witness.rule == "missing-inverse") {
    Point const a = d.witness.points.front();
    throw Error(ErrorKind::MissingInverse,
                "no additive inverse of " + inst.name(a) + " in the carrier", {a});
  }
  return d;
}

Decision is_prime(AlgebraInstance const& inst, Subset const& w) {
  require_ideal(inst, w, "W");
  return detail::prime_scan(inst, w.bits());
}

Decision is_primary(AlgebraInstance const& inst, Subset const& w) {
  require_ideal(inst, w, "W");
  return detail::primary_scan(inst, w.bits());
}

Subset radical(AlgebraInstance const& inst, Subset const& w) {
  inst.space().check_member(w);
  if (!w.is_subset_of(inst.carrier())) {
    throw Error(ErrorKind::NotInCarrier, "radical argument leaves the carrier",
                (w - inst.carrier()).members());
  }
  return Subset::from_bits(inst.size(), detail::radical_bits(inst, w.bits()));
}

Decision is_p_primary(AlgebraInstance const& inst, Subset const& w, Subset const& p) {
  require_ideal(inst, w, "W");
  require_ideal(inst, p, "P");
  if (Decision d = detail::primary_scan(inst, w.bits()); !d) {
    return Decision::no("W not primary: " + d.witness.rule, d.witness.points);
  }
  if (Decision d = detail::prime_scan(inst, p.bits()); !d) {
    return Decision::no("P not prime: " + d.witness.rule, d.witness.points);
  }
  Subset const rad = radical(inst, w);
  if (rad != p) {
    Subset const diff = (rad - p) | (p - rad);
    return Decision::no("radical-mismatch", diff.members());
  }
  return Decision::yes();
}

Decision is_semi_primary(AlgebraInstance const& inst, Subset const& o) {
  require_ideal(inst, o, "O");
  std::uint64_t const rad = detail::radical_bits(inst, o.bits());
  if (Decision d = detail::ideal_scan(inst, rad); !d) {
    throw Error(ErrorKind::RadicalNotIdeal, "r(O) is not an approx ideal (" + d.witness.rule + ")",
                d.witness.points);
  }
  return detail::prime_scan(inst, rad);
}

Decision is_one_absorbing_primary(AlgebraInstance const& inst, Subset const& q) {
  require_ideal(inst, q, "Q");
  require_one(inst);
  return detail::one_absorbing_scan(inst, q.bits());
}

Subset colon(AlgebraInstance const& inst, Subset const& w, Point s) {
  inst.space().check_member(w);
  require_in_carrier(inst, s);
  return Subset::from_bits(inst.size(), detail::colon_bits(inst, w.bits(), s));
}

Subset intersect_ideals(AlgebraInstance const& inst, std::vector<Subset> const& ideals) {
  if (ideals.empty()) throw Error(ErrorKind::EmptyList, "nothing to intersect");
  Subset out = ideals.front();
  inst.space().check_member(out);
  for (auto const& w : ideals) out &= w;
  return out;
}

bool QuotientStructure::tables_total() const {
  return std::none_of(add_table.begin(), add_table.end(), [](int c) { return c < 0; }) &&
         std::none_of(mul_table.begin(), mul_table.end(), [](int c) { return c < 0; });
}

std::vector<std::size_t> QuotientStructure::image(Subset const& i) const {
  std::vector<std::size_t> out;
  for (Point x : i) {
    if (x < coset_of.size() && coset_of[x] >= 0) out.push_back(static_cast<std::size_t>(coset_of[x]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

class Partition {
 public:
  explicit Partition(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }
  Point find(Point x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<Point> parent_;
};

}  // namespace

QuotientStructure quotient(AlgebraInstance const& inst, Subset const& w, ZeroTest mode) {
  require_ideal(inst, w, "W");
  IdentityInfo const ids = locate_identities(inst);
  Subset const& r = inst.carrier();
  std::size_t const n = inst.size();
  std::uint64_t const wb = w.bits();

  // a ~ b, for a anywhere in X and b in the carrier.
  auto const related = [&](Point a, Point b) { return has(wb, inst.add(a, *ids.neg[b])); };

  QuotientStructure q;
  q.ideal = w;
  q.mode = mode;
  q.well_defined = Decision::yes();
  auto const flag = [&](Decision d) {
    if (q.well_defined) q.well_defined = std::move(d);
  };

  for (Point a : r)
    if (!related(a, a)) flag(Decision::no("reflexivity", {a}));
  for (Point a : r)
    for (Point b : r)
      if (related(a, b) && !related(b, a)) flag(Decision::no("symmetry", {a, b}));
  for (Point a : r)
    for (Point b : r) {
      if (!related(a, b)) continue;
      for (Point c : r)
        if (related(b, c) && !related(a, c)) flag(Decision::no("transitivity", {a, b, c}));
    }

  Partition part(n);
  for (Point a : r)
    for (Point b : r)
      if (related(a, b)) part.unite(a, b);

  q.coset_of.assign(n, -1);
  // Union-find keeps the least member as root, so roots appear first.
  for (Point a : r) {
    Point const root = part.find(a);
    if (root == a) {
      q.coset_of[a] = static_cast<int>(q.cosets.size());
      q.cosets.emplace_back(n);
    } else {
      q.coset_of[a] = q.coset_of[root];
    }
    q.cosets[static_cast<std::size_t>(q.coset_of[a])].insert(a);
  }
  for (Point x = 0; x < n; ++x) {
    if (r.contains(x)) continue;
    for (Point b : r)
      if (related(x, b)) {
        q.coset_of[x] = q.coset_of[b];
        break;
      }
  }
  if (q.coset_of[ids.zero] >= 0) q.zero_coset = static_cast<std::size_t>(q.coset_of[ids.zero]);

  std::size_t const k = q.cosets.size();
  auto build = [&](std::vector<int>& table, auto op, std::string const& name) {
    table.assign(k * k, -1);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t d = 0; d < k; ++d) {
        Point const rc = q.cosets[c].front();
        Point const rd = q.cosets[d].front();
        int const cell = q.coset_of[op(rc, rd)];
        table[c * k + d] = cell;
        if (cell < 0) {
          flag(Decision::no(name + "-escapes", {rc, rd}));
          continue;
        }
        for (Point a : q.cosets[c])
          for (Point b : q.cosets[d])
            if (q.coset_of[op(a, b)] != cell) flag(Decision::no(name + "-representatives", {a, b, rc, rd}));
      }
  };
  build(q.add_table, [&](Point a, Point b) { return inst.add(a, b); }, "add");
  build(q.mul_table, [&](Point a, Point b) { return inst.mul(a, b); }, "mul");

  std::uint64_t const zero_set = mode == ZeroTest::Strict ? wb : inst.space().upper_bits(wb);
  auto const zero_test = [&](Point x) { return has(zero_set, x); };
  q.zero.assign(k, 0);
  for (std::size_t c = 0; c < k; ++c)
    q.zero[c] = (q.cosets[c].bits() & zero_set) != 0 ? 1 : 0;

  q.zero_divisor.assign(k, std::nullopt);
  q.nilpotent_exponent.assign(k, std::nullopt);
  for (std::size_t c = 0; c < k; ++c) {
    for (Point s : q.cosets[c])
      for (std::size_t m = 1; m <= n; ++m)
        if (zero_test(inst.power(s, m))) {
          if (!q.nilpotent_exponent[c] || m < *q.nilpotent_exponent[c]) q.nilpotent_exponent[c] = m;
          break;
        }
    if (q.zero[c]) continue;
    for (std::size_t d = 0; d < k && !q.zero_divisor[c]; ++d) {
      if (q.zero[d]) continue;
      for (Point s : q.cosets[c]) {
        for (Point l : q.cosets[d])
          if (zero_test(inst.mul(s, l))) {
            q.zero_divisor[c] = Witness{"zero-divisor", {s, l}};
            break;
          }
        if (q.zero_divisor[c]) break;
      }
    }
  }
  return q;
}

void require_well_defined(QuotientStructure const& q) {
  if (!q.well_defined) {
    throw Error(ErrorKind::NotWellDefined, "quotient is not well defined (" +
                                               q.well_defined.witness.rule + ")",
                q.well_defined.witness.points);
  }
}

AlgebraInstance quotient_instance(AlgebraInstance const& inst, QuotientStructure const& q) {
  require_well_defined(q);
  if (!q.tables_total()) throw Error(ErrorKind::NotWellDefined, "quotient tables are partial");
  std::size_t const k = q.coset_count();
  std::size_t const classes = inst.space().class_count();
  std::vector<FeatureVector> features;
  std::vector<std::string> names;
  for (auto const& c : q.cosets) {
    FeatureVector f(classes, 0);
    for (Point p : c) f[inst.space().class_of(p)] = 1;
    features.push_back(std::move(f));
    names.push_back("[" + inst.name(c.front()) + "]");
  }
  std::vector<Point> add(q.add_table.begin(), q.add_table.end());
  std::vector<Point> mul(q.mul_table.begin(), q.mul_table.end());
  return AlgebraInstance(DescriptiveSpace(std::move(features)), OpTable(k, std::move(add)),
                         OpTable(k, std::move(mul)), Subset::full(k), std::move(names));
}

AlgebraInstance product_instance(AlgebraInstance const& left, AlgebraInstance const& right,
                                 std::size_t max_points) {
  std::size_t const n1 = left.size();
  std::size_t const n2 = right.size();
  if (n1 * n2 > std::min(max_points, kMaxPoints)) {
    throw Error(ErrorKind::SizeOverflow, "product of " + std::to_string(n1) + " and " +
                                             std::to_string(n2) + " points exceeds " +
                                             std::to_string(std::min(max_points, kMaxPoints)));
  }
  std::size_t const n = n1 * n2;
  auto const at = [n2](Point a, Point b) { return static_cast<Point>(a * n2 + b); };
  std::vector<FeatureVector> features;
  std::vector<std::string> names;
  Subset carrier(n);
  for (Point a = 0; a < n1; ++a)
    for (Point b = 0; b < n2; ++b) {
      FeatureVector f = left.space().feature(a);
      auto const& g = right.space().feature(b);
      f.insert(f.end(), g.begin(), g.end());
      features.push_back(std::move(f));
      names.push_back("(" + left.name(a) + "," + right.name(b) + ")");
      if (left.carrier().contains(a) && right.carrier().contains(b)) carrier.insert(at(a, b));
    }
  auto table = [&](auto op1, auto op2) {
    return OpTable::from_function(n, [&](Point x, Point y) {
      return at(op1(static_cast<Point>(x / n2), static_cast<Point>(y / n2)),
                op2(static_cast<Point>(x % n2), static_cast<Point>(y % n2)));
    });
  };
  OpTable add = table([&](Point a, Point b) { return left.add(a, b); },
                      [&](Point a, Point b) { return right.add(a, b); });
  OpTable mul = table([&](Point a, Point b) { return left.mul(a, b); },
                      [&](Point a, Point b) { return right.mul(a, b); });
  AlgebraInstance out(DescriptiveSpace(std::move(features)), std::move(add), std::move(mul),
                      carrier, std::move(names));
  out.set_factors({std::make_shared<AlgebraInstance const>(left),
                   std::make_shared<AlgebraInstance const>(right)});
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

namespace {

VerdictEntry entry(Decision const& d) {
  if (d) return {Verdict::Holds, {}};
  return {Verdict::Fails, d.witness};
}

VerdictEntry not_applicable(std::string reason) {
  return {Verdict::NotApplicable, Witness{std::move(reason), {}}};
}

}  // namespace

ClassificationReport classify_ideal(AlgebraInstance const& inst, Subset const& w) {
  require_nonempty_in_carrier(inst, w);
  require_zero(inst);
  ClassificationReport rep;
  rep.members = w;
  rep.radical = Subset::from_bits(inst.size(), detail::radical_bits(inst, w.bits()));

  rep.ideal = entry(detail::ideal_scan(inst, w.bits()));
  if (!rep.ideal.holds()) {
    rep.prime = rep.primary = rep.semi_primary = rep.one_absorbing =
        not_applicable("not an ideal");
    return rep;
  }
  Decision const prime = detail::prime_scan(inst, w.bits());
  Decision const primary = detail::primary_scan(inst, w.bits());
  if (prime && !primary) {
    throw std::logic_error("prime ideal failed the primary scan; the predicates disagree");
  }
  rep.prime = entry(prime);
  rep.primary = entry(primary);

  std::uint64_t const rad = rep.radical.bits();
  bool radical_prime = false;
  if (Decision d = detail::ideal_scan(inst, rad); !d) {
    rep.semi_primary = {Verdict::Fails, Witness{"radical-not-ideal: " + d.witness.rule,
                                                d.witness.points}};
  } else {
    Decision const p = detail::prime_scan(inst, rad);
    radical_prime = p.holds;
    rep.semi_primary = p ? VerdictEntry{Verdict::Holds, {}}
                         : VerdictEntry{Verdict::Fails,
                                        Witness{"radical-not-prime: " + p.witness.rule,
                                                p.witness.points}};
  }

  auto const& ones = inst.identities().one_candidates;
  if (ones.empty()) {
    rep.one_absorbing = not_applicable("no unity");
  } else if (ones.size() > 1) {
    rep.one_absorbing = not_applicable("ambiguous unity");
  } else {
    rep.one_absorbing = entry(detail::one_absorbing_scan(inst, w.bits()));
  }

  if (primary && radical_prime) rep.p_primary_target = rep.radical;
  return rep;
}

}  // namespace proxideal

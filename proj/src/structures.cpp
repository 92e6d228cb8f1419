#include "proxideal/structures.hpp"

#include <array>
#include <cstdio>
#include <string>

namespace proxideal {

OpTable::OpTable(std::size_t n, std::vector<Point> cells) : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != n_ * n_) {
    throw Error(ErrorKind::ValidationError, "operation table has " + std::to_string(cells_.size()) +
                                                " cells, expected " + std::to_string(n_ * n_));
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] >= n_) {
      throw Error(ErrorKind::ValidationError,
                  "table entry " + std::to_string(cells_[i]) + " at row " +
                      std::to_string(i / n_) + ", column " + std::to_string(i % n_) +
                      " is not a point index",
                  {static_cast<Point>(i / n_), static_cast<Point>(i % n_)});
    }
  }
}

OpTable OpTable::from_function(std::size_t n, std::function<Point(Point, Point)> const& f) {
  std::vector<Point> cells;
  cells.reserve(n * n);
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b) cells.push_back(f(a, b));
  return OpTable(n, std::move(cells));
}

OpTable OpTable::modular_add(std::size_t n) {
  return from_function(n, [n](Point a, Point b) { return static_cast<Point>((a + b) % n); });
}

OpTable OpTable::modular_mul(std::size_t n) {
  return from_function(n, [n](Point a, Point b) { return static_cast<Point>((a * b) % n); });
}

std::vector<std::pair<std::string_view, Decision const*>> StructureFlags::entries() const {
  return {{"groupoid_add", &groupoid_add},
          {"semigroup_add", &semigroup_add},
          {"group_add", &group_add},
          {"abelian_add", &abelian_add},
          {"groupoid_mul", &groupoid_mul},
          {"semigroup_mul", &semigroup_mul},
          {"distributive", &distributive},
          {"ring", &ring},
          {"commutative", &commutative},
          {"has_unity", &has_unity},
          {"op_closed", &op_closed},
          {"upper_closed_add", &upper_closed_add},
          {"upper_closed_mul", &upper_closed_mul},
          {"mul_associative", &mul_associative}};
}

std::optional<Point> IdentityScan::zero() const {
  if (zero_candidates.size() != 1) return std::nullopt;
  return zero_candidates.front();
}

std::optional<Point> IdentityScan::one() const {
  if (one_candidates.size() != 1) return std::nullopt;
  return one_candidates.front();
}

namespace {

std::vector<std::string> const& default_names(std::size_t n) {
  static std::array<std::vector<std::string>, kMaxPoints + 1> const table = [] {
    std::array<std::vector<std::string>, kMaxPoints + 1> t;
    for (std::size_t k = 0; k <= kMaxPoints; ++k)
      for (std::size_t i = 0; i < k; ++i) t[k].push_back(std::to_string(i));
    return t;
  }();
  return table.at(n);
}

class Fnv64 {
 public:
  void word(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      hash_ ^= (v >> (8 * i)) & 0xffU;
      hash_ *= 0x100000001b3ULL;
    }
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::uint64_t compute_fingerprint(DescriptiveSpace const& space, OpTable const& add,
                                  OpTable const& mul, Subset const& carrier) {
  Fnv64 h;
  h.word(space.size());
  h.word(space.arity());
  for (auto const& f : space.features())
    for (auto v : f) h.word(static_cast<std::uint64_t>(v));
  for (Point c : add.cells()) h.word(c);
  for (Point c : mul.cells()) h.word(c);
  h.word(carrier.bits());
  return h.value();
}

// Scans below iterate carrier elements in ascending order, so the first
// violation found is the lexicographically least one.
template <class Op>
Decision closure(Subset const& carrier, std::uint64_t target, Op op, char const* rule) {
  for (Point a : carrier)
    for (Point b : carrier)
      if (((target >> op(a, b)) & 1U) == 0) return Decision::no(rule, {a, b});
  return Decision::yes();
}

template <class Op>
Decision associativity(Subset const& carrier, std::uint64_t target, Op op) {
  for (Point a : carrier)
    for (Point b : carrier)
      for (Point c : carrier) {
        Point const left = op(op(a, b), c);
        if (left != op(a, op(b, c)) || ((target >> left) & 1U) == 0) {
          return Decision::no("associativity", {a, b, c});
        }
      }
  return Decision::yes();
}

template <class Op>
Decision commutativity(Subset const& carrier, Op op) {
  for (Point a : carrier)
    for (Point b : carrier)
      if (op(a, b) != op(b, a)) return Decision::no("commutativity", {a, b});
  return Decision::yes();
}

template <class Op>
Subset identity_candidates(Subset const& carrier, Subset const& upper, Op op) {
  Subset out(carrier.universe());
  for (Point e : upper) {
    bool ok = true;
    for (Point a : carrier) {
      if (op(a, e) != a || op(e, a) != a) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(e);
  }
  return out;
}

Decision prefixed(std::string_view flag, Decision const& d) {
  return Decision::no(std::string(flag) + ": " + d.witness.rule, d.witness.points);
}

}  // namespace

AlgebraInstance::AlgebraInstance(DescriptiveSpace space, OpTable add, OpTable mul,
                                 Subset carrier, std::vector<std::string> names)
    : space_(std::move(space)),
      add_(std::move(add)),
      mul_(std::move(mul)),
      carrier_(carrier),
      names_(std::move(names)) {
  std::size_t const n = space_.size();
  if (add_.size() != n || mul_.size() != n) {
    throw Error(ErrorKind::ValidationError, "operation tables must be " + std::to_string(n) +
                                                "x" + std::to_string(n));
  }
  space_.check_member(carrier_);
  if (carrier_.empty()) throw Error(ErrorKind::ValidationError, "carrier must be nonempty");
  if (!names_.empty() && names_.size() != n) {
    throw Error(ErrorKind::ValidationError, "expected " + std::to_string(n) + " point names");
  }
  upper_carrier_ = space_.upper_approx(carrier_);

  auto const add_op = [this](Point a, Point b) { return add_(a, b); };
  auto const mul_op = [this](Point a, Point b) { return mul_(a, b); };

  scan_.zero_candidates = identity_candidates(carrier_, upper_carrier_, add_op);
  scan_.one_candidates = identity_candidates(carrier_, upper_carrier_, mul_op);
  scan_.neg.assign(n, std::nullopt);
  if (auto zero = scan_.zero()) {
    for (Point a : carrier_) {
      for (Point b : carrier_) {
        if (add_(a, b) == *zero && add_(b, a) == *zero) {
          scan_.neg[a] = b;
          break;
        }
      }
    }
  }
  scan_.units = Subset(n);
  if (auto one = scan_.one()) {
    for (Point u : carrier_)
      for (Point v : carrier_)
        if (mul_(u, v) == *one && mul_(v, u) == *one) {
          scan_.units.insert(u);
          break;
        }
  }

  powers_.resize(n * n);
  power_bits_.assign(n, 0);
  for (Point s = 0; s < n; ++s) {
    Point p = s;
    for (std::size_t m = 1; m <= n; ++m) {
      powers_[s * n + (m - 1)] = p;
      power_bits_[s] |= std::uint64_t{1} << p;
      p = mul_(p, s);
    }
  }

  flags_ = analyze_structure(*this);
  fingerprint_ = compute_fingerprint(space_, add_, mul_, carrier_);
}

AlgebraInstance AlgebraInstance::modular(std::size_t n, DescriptiveSpace space,
                                         std::optional<Subset> carrier) {
  Subset c = carrier ? *carrier : Subset::full(n);
  return AlgebraInstance(std::move(space), OpTable::modular_add(n), OpTable::modular_mul(n), c);
}

Point AlgebraInstance::power(Point s, std::size_t m) const {
  std::size_t const n = size();
  if (s >= n) throw Error(ErrorKind::InvalidArgument, "point out of range", {s});
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "exponent must be positive");
  if (m <= n) return powers_[s * n + (m - 1)];
  Point p = powers_[s * n + (n - 1)];
  for (std::size_t k = n; k < m; ++k) p = mul_(p, s);
  return p;
}

std::string const& AlgebraInstance::name(Point p) const { return names().at(p); }

std::vector<std::string> const& AlgebraInstance::names() const {
  return names_.empty() ? default_names(size()) : names_;
}

void AlgebraInstance::set_factors(ProductFactors factors) {
  factors_ = std::make_shared<ProductFactors const>(std::move(factors));
}

std::string AlgebraInstance::fingerprint_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint_));
  return buf;
}

StructureFlags analyze_structure(AlgebraInstance const& inst) {
  Subset const& r = inst.carrier();
  std::uint64_t const upper = inst.upper_carrier().bits();
  auto const add = [&](Point a, Point b) { return inst.add(a, b); };
  auto const mul = [&](Point a, Point b) { return inst.mul(a, b); };
  IdentityScan const& ids = inst.identities();

  StructureFlags f;
  f.groupoid_add = closure(r, upper, add, "closure");
  f.semigroup_add = f.groupoid_add ? associativity(r, upper, add) : f.groupoid_add;
  if (!f.semigroup_add) {
    f.group_add = f.semigroup_add;
  } else if (ids.zero_candidates.empty()) {
    f.group_add = Decision::no("identity", {});
  } else {
    // Some identity in Phi*R must admit an inverse in R for every element.
    std::optional<Decision> first_failure;
    for (Point e : ids.zero_candidates) {
      Decision d = Decision::yes();
      for (Point a : r) {
        bool found = false;
        for (Point b : r)
          if (inst.add(a, b) == e && inst.add(b, a) == e) {
            found = true;
            break;
          }
        if (!found) {
          d = Decision::no("inverse", {a});
          break;
        }
      }
      if (d) {
        first_failure.reset();
        break;
      }
      if (!first_failure) first_failure = d;
    }
    f.group_add = first_failure ? *first_failure : Decision::yes();
  }
  f.abelian_add = commutativity(r, add);
  f.groupoid_mul = closure(r, upper, mul, "closure");
  f.semigroup_mul = f.groupoid_mul ? associativity(r, upper, mul) : f.groupoid_mul;

  f.distributive = Decision::yes();
  for (Point a : r) {
    for (Point b : r) {
      for (Point c : r) {
        Point const left = inst.mul(a, inst.add(b, c));
        if (left != inst.add(inst.mul(a, b), inst.mul(a, c)) || ((upper >> left) & 1U) == 0) {
          f.distributive = Decision::no("left-distributivity", {a, b, c});
          break;
        }
        Point const right = inst.mul(inst.add(a, b), c);
        if (right != inst.add(inst.mul(a, c), inst.mul(b, c)) || ((upper >> right) & 1U) == 0) {
          f.distributive = Decision::no("right-distributivity", {a, b, c});
          break;
        }
      }
      if (!f.distributive) break;
    }
    if (!f.distributive) break;
  }

  if (!f.group_add) {
    f.ring = prefixed("group_add", f.group_add);
  } else if (!f.abelian_add) {
    f.ring = prefixed("abelian_add", f.abelian_add);
  } else if (!f.semigroup_mul) {
    f.ring = prefixed("semigroup_mul", f.semigroup_mul);
  } else if (!f.distributive) {
    f.ring = prefixed("distributive", f.distributive);
  } else {
    f.ring = Decision::yes();
  }

  f.commutative = commutativity(r, mul);
  f.has_unity = ids.one_candidates.empty() ? Decision::no("no-unity", {}) : Decision::yes();

  f.op_closed = Decision::yes();
  for (Point a : r) {
    for (Point b : r) {
      if (!r.contains(inst.add(a, b))) {
        f.op_closed = Decision::no("add", {a, b});
        break;
      }
      if (!r.contains(inst.mul(a, b))) {
        f.op_closed = Decision::no("mul", {a, b});
        break;
      }
    }
    if (!f.op_closed) break;
  }

  Subset const& u = inst.upper_carrier();
  f.upper_closed_add = closure(u, upper, add, "closure");
  f.upper_closed_mul = closure(u, upper, mul, "closure");
  f.mul_associative = associativity(inst.space().all(), low_mask(inst.size()), mul);
  return f;
}

Point require_zero(AlgebraInstance const& inst) {
  auto const& z = inst.identities().zero_candidates;
  if (z.empty()) {
    throw Error(ErrorKind::NoAdditiveIdentity, "no additive identity in the upper approximation");
  }
  if (z.size() > 1) {
    throw Error(ErrorKind::AmbiguousIdentity, "several additive identities", z.members());
  }
  return z.front();
}

Point require_one(AlgebraInstance const& inst) {
  auto const& o = inst.identities().one_candidates;
  if (o.empty()) throw Error(ErrorKind::NoUnity, "no unity in the upper approximation");
  if (o.size() > 1) {
    throw Error(ErrorKind::AmbiguousIdentity, "several multiplicative identities", o.members());
  }
  return o.front();
}

void require_in_carrier(AlgebraInstance const& inst, Point p) {
  if (!inst.carrier().contains(p)) {
    throw Error(ErrorKind::NotInCarrier, "point " + std::to_string(p) + " is not in the carrier",
                {p});
  }
}

IdentityInfo locate_identities(AlgebraInstance const& inst) {
  IdentityInfo info;
  info.zero = require_zero(inst);
  auto const& o = inst.identities().one_candidates;
  if (o.size() > 1) {
    throw Error(ErrorKind::AmbiguousIdentity, "several multiplicative identities", o.members());
  }
  if (o.size() == 1) info.one = o.front();
  info.neg = inst.identities().neg;
  for (Point a : inst.carrier()) {
    if (!info.neg[a]) {
      throw Error(ErrorKind::MissingInverse,
                  "no additive inverse of " + inst.name(a) + " in the carrier", {a});
    }
  }
  return info;
}

Point power(AlgebraInstance const& inst, Point s, std::size_t n) { return inst.power(s, n); }

Subset units(AlgebraInstance const& inst) {
  require_one(inst);
  return inst.identities().units;
}

Nilpotency is_nilpotent(AlgebraInstance const& inst, Point s) {
  require_in_carrier(inst, s);
  Point const zero = require_zero(inst);
  // The orbit of left-normed powers takes at most size() values, each first
  // reached within size() steps, so the bound is complete.
  for (std::size_t m = 1; m <= inst.size(); ++m) {
    Point const p = inst.power(s, m);
    if (p == zero && inst.upper_carrier().contains(p)) return {true, m};
  }
  return {};
}

Decision is_irreducible(AlgebraInstance const& inst, Point x) {
  require_in_carrier(inst, x);
  Subset const u = units(inst);
  if (u.contains(x)) return Decision::no("unit", {x});
  for (Point y : inst.carrier())
    for (Point z : inst.carrier()) {
      Point const p = inst.mul(y, z);
      if (p == x && inst.upper_carrier().contains(p) && !u.contains(y) && !u.contains(z)) {
        return Decision::no("factorization", {y, z});
      }
    }
  return Decision::yes();
}

Decision is_integral_domain(AlgebraInstance const& inst) {
  if (!inst.flags().ring || !inst.flags().commutative) {
    throw Error(ErrorKind::NotARing, "integral domains are commutative approx rings");
  }
  Point const zero = require_zero(inst);
  for (Point m : inst.carrier())
    for (Point n : inst.carrier()) {
      Point const p = inst.mul(m, n);
      if (p == zero && inst.upper_carrier().contains(p) && m != zero && n != zero) {
        return Decision::no("zero-divisor", {m, n});
      }
    }
  return Decision::yes();
}

Decision upper_closed(AlgebraInstance const& inst, Operation op) {
  return op == Operation::Add ? inst.flags().upper_closed_add : inst.flags().upper_closed_mul;
}

}  // namespace proxideal

#include <vector>

#include "proxideal/harness.hpp"

namespace proxideal {

namespace {

// Textbook notions computed straight from the tables, sharing nothing with
// the approximate predicates beyond the instance accessors.
class ClassicalRing {
 public:
  explicit ClassicalRing(AlgebraInstance const& inst) : inst_(inst) {
    for (Point p : inst.carrier()) elems_.push_back(p);
    for (Point e : elems_) {
      bool add_id = true;
      bool mul_id = true;
      for (Point x : elems_) {
        add_id = add_id && inst.add(e, x) == x && inst.add(x, e) == x;
        mul_id = mul_id && inst.mul(e, x) == x && inst.mul(x, e) == x;
      }
      if (add_id) zeros_.push_back(e);
      if (mul_id) ones_.push_back(e);
    }
    if (ones_.size() == 1) {
      for (Point u : elems_)
        for (Point v : elems_)
          if (inst.mul(u, v) == ones_[0] && inst.mul(v, u) == ones_[0]) {
            units_.push_back(u);
            break;
          }
    }
  }

  bool in(std::vector<char> const& set, Point p) const { return set[p] != 0; }

  std::vector<char> mask(Subset const& s) const {
    std::vector<char> m(inst_.size(), 0);
    for (Point p : s) m[p] = 1;
    return m;
  }

  bool is_unit(Point p) const {
    for (Point u : units_)
      if (u == p) return true;
    return false;
  }

  std::optional<Witness> ideal_violation(std::vector<char> const& w) const {
    if (zeros_.size() != 1) return Witness{"no zero", {}};
    for (Point a : elems_) {
      if (!in(w, a)) continue;
      bool negated = false;
      for (Point b : elems_)
        if (in(w, b) && inst_.add(a, b) == zeros_[0]) negated = true;
      if (!negated) return Witness{"negation", {a}};
      for (Point b : elems_)
        if (in(w, b) && !in(w, inst_.add(a, b))) return Witness{"sum", {a, b}};
      for (Point r : elems_)
        if (!in(w, inst_.mul(r, a))) return Witness{"multiple", {r, a}};
    }
    return std::nullopt;
  }

  bool some_power_in(Point s, std::vector<char> const& w) const {
    Point p = s;
    for (std::size_t m = 1; m <= inst_.size(); ++m) {
      if (in(w, p)) return true;
      p = inst_.mul(p, s);
    }
    return false;
  }

  std::vector<char> radical(std::vector<char> const& w) const {
    std::vector<char> r(inst_.size(), 0);
    for (Point s : elems_)
      if (some_power_in(s, w)) r[s] = 1;
    return r;
  }

  std::optional<Witness> prime_violation(std::vector<char> const& w) const {
    for (Point a : elems_)
      for (Point b : elems_)
        if (in(w, inst_.mul(a, b)) && !in(w, a) && !in(w, b)) return Witness{"factors", {a, b}};
    return std::nullopt;
  }

  std::optional<Witness> primary_violation(std::vector<char> const& w) const {
    for (Point a : elems_)
      for (Point b : elems_)
        if (in(w, inst_.mul(a, b)) && !in(w, a) && !some_power_in(b, w)) {
          return Witness{"factors", {a, b}};
        }
    return std::nullopt;
  }

  std::optional<Witness> absorbing_violation(std::vector<char> const& w) const {
    std::vector<char> const r = radical(w);
    for (Point a : elems_)
      for (Point b : elems_)
        for (Point c : elems_) {
          if (is_unit(a) || is_unit(b) || is_unit(c)) continue;
          Point const ab = inst_.mul(a, b);
          if (in(w, inst_.mul(ab, c)) && !in(w, ab) && !in(r, c)) return Witness{"triple", {a, b, c}};
        }
    return std::nullopt;
  }

  std::size_t one_count() const { return ones_.size(); }

 private:
  AlgebraInstance const& inst_;
  std::vector<Point> elems_;
  std::vector<Point> zeros_;
  std::vector<Point> ones_;
  std::vector<Point> units_;
};

VerdictEntry verdict(std::optional<Witness> const& violation) {
  if (violation) return {Verdict::Fails, *violation};
  return {Verdict::Holds, {}};
}

}  // namespace

std::vector<ClassificationReport> classical_oracle(AlgebraInstance const& inst) {
  if (!inst.space().injective_probe() || !inst.flags().op_closed) {
    throw Error(ErrorKind::NotClassical,
                "the classical oracle needs an injective probe and a carrier closed under both tables");
  }
  if (inst.carrier().size() > 16) {
    throw Error(ErrorKind::TooLarge, "the classical oracle scans at most 16 carrier points");
  }
  ClassicalRing const ring(inst);
  std::size_t const n = inst.size();
  std::vector<ClassificationReport> out;
  std::uint64_t const carrier = inst.carrier().bits();
  for (std::uint64_t bits = 1; bits <= carrier; ++bits) {
    if ((bits & ~carrier) != 0) continue;
    Subset const w = Subset::from_bits(n, bits);
    auto const wm = ring.mask(w);
    if (ring.ideal_violation(wm)) continue;

    ClassificationReport rep;
    rep.members = w;
    rep.ideal = {Verdict::Holds, {}};
    auto const rad = ring.radical(wm);
    rep.radical = Subset(n);
    for (Point p = 0; p < n; ++p)
      if (rad[p]) rep.radical.insert(p);
    rep.prime = verdict(ring.prime_violation(wm));
    rep.primary = verdict(ring.primary_violation(wm));
    if (ring.ideal_violation(rad)) {
      rep.semi_primary = {Verdict::Fails, Witness{"radical-not-ideal", {}}};
    } else {
      auto const v = ring.prime_violation(rad);
      rep.semi_primary = v ? VerdictEntry{Verdict::Fails, *v} : VerdictEntry{Verdict::Holds, {}};
    }
    if (ring.one_count() != 1) {
      rep.one_absorbing = {Verdict::NotApplicable,
                           Witness{ring.one_count() == 0 ? "no unity" : "ambiguous unity", {}}};
    } else {
      rep.one_absorbing = verdict(ring.absorbing_violation(wm));
    }
    if (rep.primary.holds() && rep.semi_primary.holds()) rep.p_primary_target = rep.radical;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace proxideal

#include <string>

#include "proxideal/harness.hpp"
#include "proxideal/random.hpp"

namespace proxideal {

std::vector<std::string> const& fixture_names() {
  static std::vector<std::string> const names{"F-Z4p", "F-Z6i", "F-Z8i",
                                              "F-R013", "F-Z2", "F-Z2xZ2",
                                              "F-Z10m3"};
  return names;
}

AlgebraInstance make_fixture(std::string_view name) {
  if (name == "F-Z4p") return AlgebraInstance::modular(4, DescriptiveSpace::modular(4, 2));
  if (name == "F-Z6i") return AlgebraInstance::modular(6, DescriptiveSpace::injective(6));
  if (name == "F-Z8i") return AlgebraInstance::modular(8, DescriptiveSpace::injective(8));
  if (name == "F-R013") {
    return AlgebraInstance::modular(4, DescriptiveSpace::modular(4, 2), Subset(4, {0, 1, 3}));
  }
  if (name == "F-Z2") return AlgebraInstance::modular(2, DescriptiveSpace::injective(2));
  if (name == "F-Z2xZ2") return product_instance(make_fixture("F-Z2"), make_fixture("F-Z2"));
  if (name == "F-Z10m3") {
    return AlgebraInstance::modular(10, DescriptiveSpace::modular(10, 3), Subset(10, {0, 2, 3, 7, 8}));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Exhaustive: return "exhaustive";
    case Family::Modular: return "modular";
    case Family::RandomTables: return "random";
    case Family::Fixtures: return "fixtures";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  for (Family f : {Family::Exhaustive, Family::Modular, Family::RandomTables, Family::Fixtures})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Restricted growth strings: set partitions of n points into <= max_blocks classes.
std::vector<std::vector<std::int64_t>> partitions(std::size_t n, std::size_t max_blocks) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t blocks) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= blocks && static_cast<std::size_t>(v) < max_blocks; ++v) {
      cur[i] = v;
      self(self, i + 1, std::max(blocks, v + 1));
    }
  };
  if (n == 0) return {{}};
  cur[0] = 0;
  rec(rec, 1, 1);
  return out;
}

OpTable decode_table(std::size_t n, std::uint64_t index) {
  std::vector<Point> cells(n * n);
  for (auto& c : cells) {
    c = static_cast<Point>(index % n);
    index /= n;
  }
  return OpTable(n, std::move(cells));
}

std::vector<OpTable> addition_tables(std::size_t n) {
  std::vector<OpTable> out;
  if (n <= 2) {
    for (std::uint64_t i = 0; i < ipow(n, n * n); ++i) out.push_back(decode_table(n, i));
    return out;
  }
  // The three cyclic group structures on {0,1,2}, one per choice of identity.
  for (Point e = 0; e < n; ++e) {
    out.push_back(OpTable::from_function(n, [n, e](Point a, Point b) {
      return static_cast<Point>((a + b + 2 * n - e) % n);
    }));
  }
  return out;
}

std::size_t block_limit(GenParams const& p, std::size_t n) {
  return p.alphabet == 0 ? n : std::min(p.alphabet, n);
}

void validate(GenParams const& p) {
  auto infeasible = [](std::string const& why) { throw Error(ErrorKind::InfeasibleParams, why); };
  if (p.min_points < 1) infeasible("n_points range must start at 1 or above");
  if (p.min_points > p.max_points) infeasible("n_points range is empty");
  if (p.max_points > kMaxPoints) infeasible("n_points above " + std::to_string(kMaxPoints));
  if (p.family == Family::Exhaustive && p.max_points > 3) {
    infeasible("exhaustive family is limited to n_points <= 3, got " +
               std::to_string(p.max_points));
  }
  if (p.family == Family::RandomTables && p.rejection_budget == 0) {
    infeasible("random family needs a positive rejection budget");
  }
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

Subset draw_zn_carrier(Rng& rng, std::size_t n) {
  auto const divs = divisors(n);
  auto subgroup = [&](std::size_t d) {
    Subset s(n);
    for (std::size_t i = 0; i < n; i += d) s.insert(static_cast<Point>(i));
    return s;
  };
  Subset s(n);
  switch (rng.below(5)) {
    case 0:
      return Subset::full(n);
    case 1:
      return subgroup(divs[rng.below(divs.size())]);
    case 2: {
      // Union of cosets i + dZ_n.
      std::size_t const d = divs[rng.below(divs.size())];
      std::uint64_t pick = 0;
      while (pick == 0) pick = rng.next() & low_mask(d);
      for (std::size_t i = 0; i < n; ++i)
        if ((pick >> (i % d)) & 1U) s.insert(static_cast<Point>(i));
      return s;
    }
    case 3: {
      s = subgroup(divs[rng.below(divs.size())]);
      s.insert(static_cast<Point>(rng.below(n)));
      return s;
    }
    default: {
      std::uint64_t bits = 0;
      while (bits == 0) bits = rng.next() & low_mask(n);
      return Subset::from_bits(n, bits);
    }
  }
}

AlgebraInstance draw_modular(Rng& rng, GenParams const& p, std::size_t n) {
  std::size_t const k = rng.between(1, block_limit(p, n));
  Subset const carrier = draw_zn_carrier(rng, n);
  return AlgebraInstance::modular(n, DescriptiveSpace::modular(n, k), carrier);
}

}  // namespace

struct InstanceStream::State {
  // Exhaustive cursor.
  std::size_t n = 0;
  std::vector<std::vector<std::int64_t>> probes;
  std::vector<OpTable> adds;
  std::uint64_t mul_count = 0;
  std::size_t probe_index = 0;
  std::uint64_t carrier = 1;
  std::size_t add_index = 0;
  std::uint64_t mul_index = 0;
  std::optional<DescriptiveSpace> space;

  // Fixture cursor.
  std::size_t fixture = 0;

  Rng rng{0};

  void enter(GenParams const& p, std::size_t points) {
    n = points;
    probes = partitions(n, block_limit(p, n));
    adds = addition_tables(n);
    mul_count = ipow(n, n * n);
    probe_index = 0;
    carrier = 1;
    add_index = 0;
    mul_index = 0;
    space.emplace(DescriptiveSpace::from_labels(probes[0]));
  }
};

InstanceStream::InstanceStream(GenParams params)
    : params_(params), state_(std::make_unique<State>()) {
  validate(params_);
  state_->rng = Rng(params_.seed);
  if (params_.family == Family::Exhaustive) state_->enter(params_, params_.min_points);
}

InstanceStream::~InstanceStream() = default;
InstanceStream::InstanceStream(InstanceStream&&) noexcept = default;
InstanceStream& InstanceStream::operator=(InstanceStream&&) noexcept = default;

std::optional<AlgebraInstance> InstanceStream::next() {
  State& s = *state_;
  switch (params_.family) {
    case Family::Fixtures: {
      if (s.fixture >= fixture_names().size()) return std::nullopt;
      ++stats_.produced;
      return make_fixture(fixture_names()[s.fixture++]);
    }
    case Family::Exhaustive: {
      if (s.n > params_.max_points) return std::nullopt;
      AlgebraInstance out(*s.space, s.adds[s.add_index], decode_table(s.n, s.mul_index),
                          Subset::from_bits(s.n, s.carrier));
      ++stats_.produced;
      // Advance: mul fastest, then add, carrier, probe, n.
      if (++s.mul_index < s.mul_count) return out;
      s.mul_index = 0;
      if (++s.add_index < s.adds.size()) return out;
      s.add_index = 0;
      if (++s.carrier <= low_mask(s.n)) return out;
      s.carrier = 1;
      if (++s.probe_index < s.probes.size()) {
        s.space.emplace(DescriptiveSpace::from_labels(s.probes[s.probe_index]));
        return out;
      }
      if (s.n + 1 <= params_.max_points) {
        s.enter(params_, s.n + 1);
      } else {
        s.n = params_.max_points + 1;
      }
      return out;
    }
    case Family::Modular: {
      if (stats_.produced >= params_.samples) return std::nullopt;
      ++stats_.produced;
      std::size_t const hi = params_.max_points;
      if (params_.products && hi >= 4 && s.rng.chance(1, 8)) {
        std::size_t const n1 = s.rng.between(2, hi / 2);
        std::size_t const n2 = s.rng.between(2, hi / n1);
        AlgebraInstance const left = draw_modular(s.rng, params_, n1);
        AlgebraInstance const right = draw_modular(s.rng, params_, n2);
        return product_instance(left, right, hi);
      }
      return draw_modular(s.rng, params_, s.rng.between(params_.min_points, hi));
    }
    case Family::RandomTables: {
      std::uint64_t const budget = params_.samples * params_.rejection_budget;
      while (stats_.produced < params_.samples && stats_.attempts < budget) {
        ++stats_.attempts;
        std::size_t const n = s.rng.between(params_.min_points, params_.max_points);
        std::size_t const labels = block_limit(params_, n);
        std::vector<std::int64_t> probe(n);
        for (auto& v : probe) v = static_cast<std::int64_t>(s.rng.below(labels));
        std::uint64_t bits = 0;
        while (bits == 0) bits = s.rng.next() & low_mask(n);
        std::vector<Point> add(n * n), mul(n * n);
        for (auto& c : add) c = static_cast<Point>(s.rng.below(n));
        for (auto& c : mul) c = static_cast<Point>(s.rng.below(n));
        AlgebraInstance inst(DescriptiveSpace::from_labels(probe), OpTable(n, std::move(add)),
                             OpTable(n, std::move(mul)), Subset::from_bits(n, bits));
        if (inst.flags().ring) {
          ++stats_.produced;
          return inst;
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::uint64_t InstanceStream::exhaustive_count(GenParams const& params) {
  GenParams p = params;
  p.family = Family::Exhaustive;
  validate(p);
  std::uint64_t total = 0;
  for (std::size_t n = p.min_points; n <= p.max_points; ++n) {
    total += partitions(n, block_limit(p, n)).size() * low_mask(n) * addition_tables(n).size() *
             ipow(n, n * n);
  }
  return total;
}

std::vector<AlgebraInstance> generate_instances(GenParams const& params) {
  InstanceStream stream(params);
  std::vector<AlgebraInstance> out;
  while (auto inst = stream.next()) out.push_back(std::move(*inst));
  return out;
}

std::vector<Subset> enumerate_ideals(AlgebraInstance const& inst) {
  if (inst.carrier().size() > 16) {
    throw Error(ErrorKind::TooLarge, "ideal enumeration limited to carriers of 16 points, got " +
                                         std::to_string(inst.carrier().size()));
  }
  std::vector<Subset> out;
  if (!inst.identities().zero()) return out;
  // Submasks of the carrier in ascending numeric order.
  std::uint64_t const carrier = inst.carrier().bits();
  std::uint64_t sub = 0;
  do {
    sub = (sub - carrier) & carrier;
    if (sub != 0 && detail::ideal_scan(inst, sub)) out.push_back(Subset::from_bits(inst.size(), sub));
  } while (sub != 0);
  return out;
}

}  // namespace proxideal

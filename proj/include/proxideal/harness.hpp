#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proxideal/ideals.hpp"

namespace proxideal {

// ---------------------------------------------------------------- fixtures

/// Built-in fixtures: F-Z4p, F-Z6i, F-Z8i, F-R013, F-Z2, F-Z2xZ2, F-Z10m3.
std::vector<std::string> const& fixture_names();
AlgebraInstance make_fixture(std::string_view name);

// --------------------------------------------------------------- generator

enum class Family { Exhaustive, Modular, RandomTables, Fixtures };
std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

struct GenParams {
  Family family = Family::Modular;
  std::size_t min_points = 1;
  std::size_t max_points = 4;
  // Exhaustive: most probe classes; modular: largest probe modulus k;
  // random: probe label count. Zero means "as many as there are points".
  std::size_t alphabet = 0;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  // Random family: attempts allowed per requested instance.
  std::size_t rejection_budget = 20000;
  // Modular family: mix in componentwise products of two smaller rings.
  bool products = true;
};

struct StreamStats {
  std::uint64_t produced = 0;
  std::uint64_t attempts = 0;  // random family: tables drawn
};

/// Deterministic stream of instances for one parameter set.
///
/// Exhaustive: for each n, every probe partition with at most `alphabet`
/// classes, every nonempty carrier, every multiplication table and every
/// addition table (n <= 2) or every labelled cyclic group table (n = 3).
/// Modular: seeded samples of Z_n with probe i mod k and carriers drawn
/// among subgroups, coset unions, padded subgroups and arbitrary subsets.
/// Random: seeded rejection sampling of tables that pass the ring flags.
class InstanceStream {
 public:
  explicit InstanceStream(GenParams params);
  ~InstanceStream();
  InstanceStream(InstanceStream&&) noexcept;
  InstanceStream& operator=(InstanceStream&&) noexcept;

  std::optional<AlgebraInstance> next();
  StreamStats const& stats() const noexcept { return stats_; }
  GenParams const& params() const noexcept { return params_; }

  /// Number of instances the exhaustive family yields for these params.
  static std::uint64_t exhaustive_count(GenParams const& params);

 private:
  struct State;
  GenParams params_;
  StreamStats stats_;
  std::unique_ptr<State> state_;
};

std::vector<AlgebraInstance> generate_instances(GenParams const& params);

/// Every approx ideal of the instance in ascending mask order; empty when
/// the additive identity is missing or ambiguous. Throws TooLarge when the
/// carrier has more than 16 points.
std::vector<Subset> enumerate_ideals(AlgebraInstance const& inst);

// ---------------------------------------------------------------- theorems

enum class TheoremId {
  RadExt,   // W is contained in r(W)
  ThmA,     // prime => primary
  ThmB,     // zero divisors of R/W are nilpotent
  ThmC,     // r(W) is an ideal
  PropD,    // r(W) smallest prime over a primary W
  CorE,     // prime => r(W) = W
  LemF,     // r(W1 n W2) within r(W1) n r(W2)
  LemFRev,  // reverse inclusion (op-closed, associative, commutative)
  ThmG,     // intersections of P-primary ideals
  PropH,    // W:s is an ideal
  ThmI,     // colon distributes over intersection
  PropJ1,   // quotients inherit "semi-primary => primary"
  PropJ2,   // Q <= W <= r(Q) with Q r(Q)-primary
  ThmK,     // primary => 1-absorbing primary
  ThmL,     // 1-absorbing primary => r(Q) prime
  ThmM,     // irreducibility under a non-primary 1-absorbing ideal
  ThmN,     // primary N x R2 gives primary N
  ConvK,    // exploration: 1-absorbing primary => primary (not claimed)
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view s);
std::vector<TheoremId> const& all_theorems();
/// False for exploration entries that record behaviour rather than a claim.
bool is_claim(TheoremId id);

enum class FindingStatus { Confirmed, Counterexample, HypothesisNotMet };
std::string_view to_string(FindingStatus s);

struct Stratum {
  bool op_closed = false;
  bool associative = false;
  bool injective_probe = false;
  bool upper_closed = false;

  bool classical() const noexcept { return injective_probe && op_closed; }
  static Stratum of(AlgebraInstance const& inst);
};

struct TheoremWitness {
  std::vector<Subset> sets;   // ideals involved, in the order the theorem names them
  std::vector<Point> points;  // elements involved
  std::string note;
};

struct TheoremFinding {
  TheoremId theorem = TheoremId::ThmA;
  std::uint64_t fingerprint = 0;
  FindingStatus status = FindingStatus::HypothesisNotMet;
  TheoremWitness witness;
  Stratum stratum;
  std::size_t cases = 0;  // hypothesis-satisfying cases examined
};

/// One finding per selected theorem.
std::vector<TheoremFinding> evaluate_instance(AlgebraInstance const& inst,
                                              std::vector<TheoremId> const& selection);

/// Findings for every instance, ordered by (fingerprint, theorem).
std::vector<TheoremFinding> run_theorem_suite(std::vector<AlgebraInstance> const& instances,
                                              std::vector<TheoremId> const& selection);

/// Re-evaluates a COUNTEREXAMPLE's witness on `inst` through the public
/// predicates; true when the violation reproduces.
bool replay_counterexample(AlgebraInstance const& inst, TheoremFinding const& finding);

// ---------------------------------------------------------------- campaigns

struct TheoremTally {
  std::uint64_t confirmed = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t hypothesis_not_met = 0;
};

struct CampaignOptions {
  std::size_t threads = 1;
  std::size_t batch = 2048;
  // Counterexamples kept per theorem (least fingerprints first).
  std::size_t max_examples = 5;
};

struct KeptCounterexample {
  TheoremFinding finding;
  std::shared_ptr<AlgebraInstance const> instance;
};

struct CampaignResult {
  GenParams params;
  std::vector<TheoremId> selection;
  std::uint64_t instances = 0;
  std::uint64_t classical_instances = 0;
  std::map<TheoremId, TheoremTally> tallies;
  std::map<TheoremId, TheoremTally> classical_tallies;  // injective probe and op-closed
  std::vector<KeptCounterexample> counterexamples;       // by theorem, then fingerprint
  StreamStats stream;
};

CampaignResult run_campaign(GenParams const& params, std::vector<TheoremId> const& selection,
                            CampaignOptions const& options = {});

/// Runs a campaign over an explicit instance list (e.g. the fixtures).
CampaignResult run_campaign(std::vector<AlgebraInstance> const& instances,
                            std::vector<TheoremId> const& selection,
                            CampaignOptions const& options = {});

// ------------------------------------------------------------------ oracle

/// Textbook classification with Phi* replaced by the identity, computed
/// directly from the tables. One report per classical ideal in ascending
/// mask order. Throws NotClassical unless the probe is injective and the
/// carrier is closed under both tables.
std::vector<ClassificationReport> classical_oracle(AlgebraInstance const& inst);

}  // namespace proxideal

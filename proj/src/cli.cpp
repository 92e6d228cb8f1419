#include "proxideal/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "proxideal/report.hpp"

namespace proxideal {

namespace {

struct Options {
  bool machine = false;
  std::size_t max_points = kMaxPoints;
  std::string file;
  std::string ideal;
  std::string element;
  bool strict = false;

  std::string family = "modular";
  std::string n_points = "1..4";
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::string theorems = "all";
  std::size_t alphabet = 0;
  std::size_t budget = 20000;
  std::size_t threads = 1;
  std::size_t max_examples = 5;
  bool no_products = false;
  std::vector<std::string> inputs;

  std::string out_dir;
  std::string fixture;
};

std::pair<std::size_t, std::size_t> parse_range(std::string const& text) {
  auto number = [&](std::string const& s) -> std::size_t {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (std::exception const&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw Error(ErrorKind::InvalidArgument, "--n-points expects N or LO..HI, got '" + text + "'");
    }
    return v;
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
  }
  return {1, number(text)};
}

std::vector<TheoremId> parse_selection(std::string const& text) {
  if (text == "all") return all_theorems();
  std::vector<TheoremId> out;
  std::istringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    auto id = parse_theorem_id(tok);
    if (!id) throw Error(ErrorKind::InvalidArgument, "unknown theorem id '" + tok + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json run_suite(Options const& o) {
  std::vector<TheoremId> const selection = parse_selection(o.theorems);
  CampaignOptions copts;
  copts.threads = o.threads;
  copts.max_examples = o.max_examples;
  if (!o.inputs.empty()) {
    std::vector<AlgebraInstance> instances;
    for (auto const& path : o.inputs) instances.push_back(load_instance(path, o.max_points).instance);
    return suite_report(run_campaign(instances, selection, copts));
  }
  auto family = parse_family(o.family);
  if (!family) throw Error(ErrorKind::InvalidArgument, "unknown family '" + o.family + "'");
  if (*family == Family::Fixtures) {
    std::vector<AlgebraInstance> instances;
    for (auto const& name : fixture_names()) instances.push_back(make_fixture(name));
    return suite_report(run_campaign(instances, selection, copts));
  }
  GenParams p;
  p.family = *family;
  std::tie(p.min_points, p.max_points) = parse_range(o.n_points);
  if (p.max_points > o.max_points) {
    throw Error(ErrorKind::TooLarge, "n_points " + std::to_string(p.max_points) +
                                         " exceeds --max-points " + std::to_string(o.max_points));
  }
  p.alphabet = o.alphabet;
  p.samples = o.samples;
  p.seed = o.seed;
  p.rejection_budget = o.budget;
  p.products = !o.no_products;
  return suite_report(run_campaign(p, selection, copts));
}

void run_fixtures(Options const& o, std::ostream& out) {
  std::vector<std::string> names = fixture_names();
  if (!o.fixture.empty()) {
    make_fixture(o.fixture);
    names = {o.fixture};
  }
  if (o.out_dir.empty()) {
    bool first = true;
    for (auto const& name : names) {
      out << (first ? "" : "\n") << serialize_instance(document_with_ideals(name, make_fixture(name)));
      first = false;
    }
    return;
  }
  std::filesystem::create_directories(o.out_dir);
  Json j;
  j["report"] = "fixtures";
  j["tool_version"] = kToolVersion;
  Json files = Json::array();
  for (auto const& name : names) {
    InstanceDocument const doc = document_with_ideals(name, make_fixture(name));
    std::filesystem::path const path = std::filesystem::path(o.out_dir) / (name + ".inst");
    std::ofstream f(path, std::ios::binary);
    f << serialize_instance(doc);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path.string() + "'");
    Json e;
    e["name"] = name;
    e["file"] = path.string();
    e["fingerprint"] = doc.instance.fingerprint_hex();
    e["ideals"] = doc.ideals.size();
    files.push_back(std::move(e));
  }
  j["files"] = std::move(files);
  out << (o.machine ? render_machine(j) : render_text(j));
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge:
    case ErrorKind::InfeasibleParams:
    case ErrorKind::SizeOverflow:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Approximate ideals in descriptive relator spaces", "proxideal"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--machine", o.machine, "Structured JSON output");
  app.add_option("--max-points", o.max_points, "Largest accepted point count")
      ->envname("PROXIDEAL_MAX_POINTS")
      ->check(CLI::Range(std::size_t{1}, kMaxPoints));

  auto file_command = [&](char const* name, char const* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", o.file, "Instance file")->required();
    return sub;
  };
  CLI::App* structure = file_command("check-structure", "Structure flags and identities");
  CLI::App* classify = file_command("classify", "Classify a named ideal");
  classify->add_option("--ideal", o.ideal, "Ideal name")->required();
  CLI::App* rad = file_command("radical", "Radical of a named ideal");
  rad->add_option("--ideal", o.ideal, "Ideal name")->required();
  CLI::App* col = file_command("colon", "Colon of a named ideal by an element");
  col->add_option("--ideal", o.ideal, "Ideal name")->required();
  col->add_option("--element", o.element, "Point name")->required();
  CLI::App* quo = file_command("quotient", "Quotient by a named ideal");
  quo->add_option("--ideal", o.ideal, "Ideal name")->required();
  quo->add_flag("--strict", o.strict, "Zero coset test by membership in W");
  CLI::App* ideals = file_command("ideals", "Enumerate every approx ideal");

  CLI::App* suite = app.add_subcommand("suite", "Run the theorem campaign");
  suite->add_option("--family", o.family, "exhaustive | modular | random | fixtures")->capture_default_str();
  suite->add_option("--n-points", o.n_points, "N or LO..HI")->capture_default_str();
  suite->add_option("--samples", o.samples, "Instances to sample")->capture_default_str();
  suite->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  suite->add_option("--theorems", o.theorems, "Comma-separated ids or 'all'")->capture_default_str();
  suite->add_option("--alphabet", o.alphabet, "Probe label bound (0 = points)")->capture_default_str();
  suite->add_option("--budget", o.budget, "Random family attempts per instance")->capture_default_str();
  suite->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
  suite->add_option("--max-examples", o.max_examples, "Counterexamples kept per theorem")
      ->capture_default_str();
  suite->add_flag("--no-products", o.no_products, "Modular family without product rings");
  suite->add_option("--input", o.inputs, "Instance files to run instead of a family");

  CLI::App* fixtures = app.add_subcommand("fixtures", "Emit the built-in fixtures");
  fixtures->add_option("--out-dir", o.out_dir, "Write NAME.inst files here");
  fixtures->add_option("--name", o.fixture, "Only this fixture");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    std::ostringstream msg, diag;
    int const code = app.exit(e, msg, diag);
    out << msg.str();
    err << diag.str();
    return code == 0 ? 0 : 1;
  }

  try {
    Json report;
    auto file = [&] { return load_instance(o.file, o.max_points); };
    if (structure->parsed()) {
      report = structure_report(file());
    } else if (classify->parsed()) {
      report = classify_report(file(), o.ideal);
    } else if (rad->parsed()) {
      report = radical_report(file(), o.ideal);
    } else if (col->parsed()) {
      report = colon_report(file(), o.ideal, o.element);
    } else if (quo->parsed()) {
      report = quotient_report(file(), o.ideal, o.strict ? ZeroTest::Strict : ZeroTest::Descriptive);
    } else if (ideals->parsed()) {
      report = ideals_report(file());
    } else if (suite->parsed()) {
      report = run_suite(o);
    } else if (fixtures->parsed()) {
      run_fixtures(o, out);
      return 0;
    }
    out << (o.machine ? render_machine(report) : render_text(report));
    return 0;
  } catch (Error const& e) {
    if (o.machine) {
      Json j;
      j["report"] = "error";
      j["tool_version"] = kToolVersion;
      j["kind"] = std::string(to_string(e.kind()));
      j["message"] = e.what();
      out << render_machine(j);
    }
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace proxideal

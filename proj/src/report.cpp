#include "proxideal/report.hpp"

#include <cstdio>
#include <sstream>

namespace proxideal {

namespace {

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json header(char const* kind, InstanceDocument const& doc) {
  Json j;
  j["report"] = kind;
  j["tool_version"] = kToolVersion;
  j["instance"] = doc.label;
  j["fingerprint"] = doc.instance.fingerprint_hex();
  return j;
}

Json names(AlgebraInstance const& inst, Subset const& s) {
  Json out = Json::array();
  for (Point p : s) out.push_back(inst.name(p));
  return out;
}

Json names(AlgebraInstance const& inst, std::vector<Point> const& pts) {
  Json out = Json::array();
  for (Point p : pts) out.push_back(p < inst.size() ? inst.name(p) : std::to_string(p));
  return out;
}

Json decision(AlgebraInstance const& inst, Decision const& d) {
  Json j;
  j["holds"] = d.holds;
  if (!d.holds) {
    j["rule"] = d.witness.rule;
    j["witness"] = names(inst, d.witness.points);
  }
  return j;
}

Json verdict(AlgebraInstance const& inst, VerdictEntry const& v) {
  Json j;
  j["status"] = std::string(to_string(v.status));
  if (v.status == Verdict::Fails) {
    j["rule"] = v.witness.rule;
    j["witness"] = names(inst, v.witness.points);
  } else if (v.status == Verdict::NotApplicable) {
    j["reason"] = v.witness.rule;
  }
  return j;
}

Json named_ideal(InstanceDocument const& doc, std::string const& name) {
  Json j;
  j["name"] = name;
  j["members"] = names(doc.instance, doc.ideal(name));
  return j;
}

// Whether a raw subset passes the ideal test, as a decision; empty sets and
// sets leaving the carrier fail with their own rule.
Decision ideal_decision(AlgebraInstance const& inst, Subset const& s) {
  if (s.empty()) return Decision::no("empty", {});
  if (!s.is_subset_of(inst.carrier())) return Decision::no("outside-carrier", (s - inst.carrier()).members());
  return is_approx_ideal(inst, s);
}

}  // namespace

Json structure_report(InstanceDocument const& doc) {
  AlgebraInstance const& inst = doc.instance;
  Json j = header("check-structure", doc);
  j["points"] = inst.size();
  j["feature_classes"] = inst.space().class_count();
  j["injective_probe"] = inst.space().injective_probe();
  j["carrier"] = names(inst, inst.carrier());
  j["upper_carrier"] = names(inst, inst.upper_carrier());
  Json flags;
  for (auto const& [name, d] : inst.flags().entries()) flags[std::string(name)] = decision(inst, *d);
  j["flags"] = std::move(flags);

  auto const& ids = inst.identities();
  Json id;
  id["zero_candidates"] = names(inst, ids.zero_candidates);
  id["one_candidates"] = names(inst, ids.one_candidates);
  id["zero"] = ids.zero() ? Json(inst.name(*ids.zero())) : Json(nullptr);
  id["one"] = ids.one() ? Json(inst.name(*ids.one())) : Json(nullptr);
  Json neg = Json::object();
  if (ids.zero()) {
    for (Point a : inst.carrier())
      neg[inst.name(a)] = ids.neg[a] ? Json(inst.name(*ids.neg[a])) : Json(nullptr);
  }
  id["negation"] = std::move(neg);
  id["units"] = ids.one() ? names(inst, ids.units) : Json(nullptr);
  j["identities"] = std::move(id);
  return j;
}

Json classify_report(InstanceDocument const& doc, std::string const& ideal) {
  AlgebraInstance const& inst = doc.instance;
  ClassificationReport const rep = classify_ideal(inst, doc.ideal(ideal));
  Json j = header("classify", doc);
  j["ideal"] = named_ideal(doc, ideal);
  Json v;
  v["ideal"] = verdict(inst, rep.ideal);
  v["prime"] = verdict(inst, rep.prime);
  v["primary"] = verdict(inst, rep.primary);
  v["semi_primary"] = verdict(inst, rep.semi_primary);
  v["one_absorbing_primary"] = verdict(inst, rep.one_absorbing);
  j["verdicts"] = std::move(v);
  j["radical"] = names(inst, rep.radical);
  j["p_primary_target"] = rep.p_primary_target ? names(inst, *rep.p_primary_target) : Json(nullptr);
  return j;
}

Json radical_report(InstanceDocument const& doc, std::string const& ideal) {
  AlgebraInstance const& inst = doc.instance;
  Subset const rad = radical(inst, doc.ideal(ideal));
  Json j = header("radical", doc);
  j["ideal"] = named_ideal(doc, ideal);
  j["radical"] = names(inst, rad);
  j["radical_is_ideal"] = decision(inst, ideal_decision(inst, rad));
  return j;
}

Json colon_report(InstanceDocument const& doc, std::string const& ideal, std::string const& element) {
  AlgebraInstance const& inst = doc.instance;
  Point const s = doc.point(element);
  Subset const c = colon(inst, doc.ideal(ideal), s);
  Json j = header("colon", doc);
  j["ideal"] = named_ideal(doc, ideal);
  j["element"] = element;
  j["colon"] = names(inst, c);
  j["colon_is_ideal"] = decision(inst, ideal_decision(inst, c));
  return j;
}

Json quotient_report(InstanceDocument const& doc, std::string const& ideal, ZeroTest mode) {
  AlgebraInstance const& inst = doc.instance;
  QuotientStructure const q = quotient(inst, doc.ideal(ideal), mode);
  Json j = header("quotient", doc);
  j["ideal"] = named_ideal(doc, ideal);
  j["zero_test"] = mode == ZeroTest::Strict ? "strict" : "descriptive";
  j["well_defined"] = decision(inst, q.well_defined);
  auto rep = [&](int c) {
    return c < 0 ? Json(nullptr) : Json(inst.name(q.cosets[static_cast<std::size_t>(c)].front()));
  };
  j["zero_coset"] = q.zero_coset ? rep(static_cast<int>(*q.zero_coset)) : Json(nullptr);
  Json cosets = Json::array();
  for (std::size_t c = 0; c < q.coset_count(); ++c) {
    Json e;
    e["representative"] = rep(static_cast<int>(c));
    e["members"] = names(inst, q.cosets[c]);
    e["zero"] = q.is_zero(c);
    if (auto const& zd = q.zero_divisor[c]) {
      Json w;
      w["rule"] = zd->rule;
      w["witness"] = names(inst, zd->points);
      e["zero_divisor"] = std::move(w);
    } else {
      e["zero_divisor"] = nullptr;
    }
    e["nilpotent_exponent"] = q.nilpotent_exponent[c] ? Json(*q.nilpotent_exponent[c]) : Json(nullptr);
    cosets.push_back(std::move(e));
  }
  j["cosets"] = std::move(cosets);
  auto table = [&](auto cell) {
    Json rows = Json::array();
    for (std::size_t a = 0; a < q.coset_count(); ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < q.coset_count(); ++b) row.push_back(rep(cell(a, b)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["add_table"] = table([&](std::size_t a, std::size_t b) { return q.add(a, b); });
  j["mul_table"] = table([&](std::size_t a, std::size_t b) { return q.mul(a, b); });
  return j;
}

Json ideals_report(InstanceDocument const& doc) {
  AlgebraInstance const& inst = doc.instance;
  Json j = header("ideals", doc);
  Json list = Json::array();
  for (Subset const& w : enumerate_ideals(inst)) {
    Json e;
    e["name"] = nullptr;
    for (auto const& [name, s] : doc.ideals)
      if (s == w) {
        e["name"] = name;
        break;
      }
    e["members"] = names(inst, w);
    list.push_back(std::move(e));
  }
  j["count"] = list.size();
  j["ideals"] = std::move(list);
  return j;
}

namespace {

Json set_names(AlgebraInstance const& inst, Subset const& s) {
  if (s.universe() == inst.size()) return names(inst, s);
  if (ProductFactors const* f = inst.factors(); f != nullptr && s.universe() == f->left->size()) {
    return names(*f->left, s);
  }
  Json out = Json::array();
  for (Point p : s) out.push_back(std::to_string(p));
  return out;
}

Json tally(TheoremTally const& t) {
  Json j;
  j["confirmed"] = t.confirmed;
  j["counterexample"] = t.counterexamples;
  j["hypothesis_not_met"] = t.hypothesis_not_met;
  return j;
}

Json stratum(Stratum const& s) {
  Json j;
  j["op_closed"] = s.op_closed;
  j["associative"] = s.associative;
  j["injective_probe"] = s.injective_probe;
  j["upper_closed"] = s.upper_closed;
  return j;
}

}  // namespace

Json suite_report(CampaignResult const& result) {
  Json j;
  j["report"] = "suite";
  j["tool_version"] = kToolVersion;
  GenParams const& p = result.params;
  Json params;
  params["family"] = std::string(to_string(p.family));
  if (p.family != Family::Fixtures) {
    params["n_points"] = Json::array({p.min_points, p.max_points});
    params["alphabet"] = p.alphabet;
    if (p.family != Family::Exhaustive) {
      params["samples"] = p.samples;
      params["seed"] = p.seed;
    }
    if (p.family == Family::RandomTables) params["rejection_budget"] = p.rejection_budget;
  }
  j["parameters"] = std::move(params);
  j["instances"] = result.instances;
  j["classical_instances"] = result.classical_instances;
  if (p.family == Family::RandomTables) j["tables_drawn"] = result.stream.attempts;

  Json theorems = Json::array();
  for (TheoremId id : result.selection) {
    Json t;
    t["id"] = std::string(to_string(id));
    t["claim"] = is_claim(id);
    t["all"] = tally(result.tallies.at(id));
    t["classical"] = tally(result.classical_tallies.at(id));
    theorems.push_back(std::move(t));
  }
  j["theorems"] = std::move(theorems);

  Json cex = Json::array();
  for (auto const& k : result.counterexamples) {
    AlgebraInstance const& inst = *k.instance;
    TheoremFinding const& f = k.finding;
    Json e;
    e["theorem"] = std::string(to_string(f.theorem));
    e["fingerprint"] = hex(f.fingerprint);
    e["stratum"] = stratum(f.stratum);
    e["cases"] = f.cases;
    Json w;
    Json sets = Json::array();
    for (Subset const& s : f.witness.sets) sets.push_back(set_names(inst, s));
    w["sets"] = std::move(sets);
    w["points"] = names(inst, f.witness.points);
    w["note"] = f.witness.note;
    e["witness"] = std::move(w);
    e["replayed"] = replay_counterexample(inst, f);
    cex.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(cex);
  return j;
}

namespace {

bool scalar_array(Json const& v) {
  if (!v.is_array()) return false;
  for (auto const& e : v)
    if (e.is_structured()) return false;
  return true;
}

std::string scalar(Json const& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (scalar_array(v)) {
    std::string out = "[";
    bool first = true;
    for (auto const& e : v) {
      out += (first ? "" : ", ") + scalar(e);
      first = false;
    }
    return out + "]";
  }
  return v.dump();
}

void text(std::ostringstream& out, Json const& v, std::size_t depth) {
  std::string const pad(depth * 2, ' ');
  if (v.is_object()) {
    for (auto const& [key, val] : v.items()) {
      if (val.is_structured() && !scalar_array(val) && !val.empty()) {
        out << pad << key << ":\n";
        text(out, val, depth + 1);
      } else {
        out << pad << key << ": " << scalar(val) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (auto const& e : v) {
      if (e.is_structured() && !scalar_array(e)) {
        out << pad << "-\n";
        text(out, e, depth + 1);
      } else {
        out << pad << "- " << scalar(e) << "\n";
      }
    }
  } else {
    out << pad << scalar(v) << "\n";
  }
}

}  // namespace

std::string render_text(Json const& report) {
  std::ostringstream out;
  text(out, report, 0);
  return out.str();
}

std::string render_machine(Json const& report) { return report.dump(2) + "\n"; }

}  // namespace proxideal

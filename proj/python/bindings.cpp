#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "proxideal/cli.hpp"
#include "proxideal/harness.hpp"
#include "proxideal/instance_io.hpp"
#include "proxideal/report.hpp"

namespace py = pybind11;
using namespace proxideal;

namespace {

Subset to_subset(std::size_t n, std::vector<Point> const& points) {
  Subset s(n);
  for (Point p : points) {
    if (p >= n) throw Error(ErrorKind::InvalidArgument, "point " + std::to_string(p) + " out of range");
    s.insert(p);
  }
  return s;
}

OpTable to_table(std::vector<std::vector<Point>> const& rows) {
  std::vector<Point> cells;
  for (auto const& row : rows) {
    if (row.size() != rows.size()) throw Error(ErrorKind::ValidationError, "operation table must be square");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return OpTable(rows.size(), std::move(cells));
}

std::vector<std::vector<Point>> from_table(OpTable const& t) {
  std::vector<std::vector<Point>> rows(t.size());
  for (Point a = 0; a < t.size(); ++a)
    for (Point b = 0; b < t.size(); ++b) rows[a].push_back(t(a, b));
  return rows;
}

py::object to_python(Json const& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict decision_dict(Decision const& d) {
  py::dict out;
  out["holds"] = d.holds;
  out["rule"] = d.witness.rule;
  out["points"] = d.witness.points;
  return out;
}

py::dict verdict_dict(VerdictEntry const& v) {
  py::dict out;
  out["status"] = std::string(to_string(v.status));
  out["rule"] = v.witness.rule;
  out["points"] = v.witness.points;
  return out;
}

template <class F>
auto on_subset(F f) {
  return [f](AlgebraInstance const& inst, std::vector<Point> const& w) {
    return decision_dict(f(inst, to_subset(inst.size(), w)));
  };
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Approximate ideals in descriptive relator spaces";
  m.attr("__version__") = std::string(kToolVersion);

  static py::exception<Error> error_type(m, "ProxidealError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (Error const& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.kind())), std::string(e.what()), e.points());
      PyErr_SetObject(error_type.ptr(), args.ptr());
    }
  });

  py::class_<DescriptiveSpace>(m, "DescriptiveSpace")
      .def(py::init<std::vector<FeatureVector>>(), py::arg("features"))
      .def_static("injective", &DescriptiveSpace::injective, py::arg("n"))
      .def_static("constant", &DescriptiveSpace::constant, py::arg("n"))
      .def_static("modular", &DescriptiveSpace::modular, py::arg("n"), py::arg("k"))
      .def_property_readonly("size", &DescriptiveSpace::size)
      .def_property_readonly("arity", &DescriptiveSpace::arity)
      .def_property_readonly("class_count", &DescriptiveSpace::class_count)
      .def_property_readonly("injective_probe", &DescriptiveSpace::injective_probe)
      .def_property_readonly("features", &DescriptiveSpace::features)
      .def("upper_approx",
           [](DescriptiveSpace const& s, std::vector<Point> const& a) {
             return s.upper_approx(to_subset(s.size(), a)).members();
           })
      .def("descriptive_intersection",
           [](DescriptiveSpace const& s, std::vector<Point> const& a, std::vector<Point> const& b) {
             return s.descriptive_intersection(to_subset(s.size(), a), to_subset(s.size(), b)).members();
           })
      .def("near",
           [](DescriptiveSpace const& s, std::vector<Point> const& a, std::vector<Point> const& b) {
             return s.near(to_subset(s.size(), a), to_subset(s.size(), b));
           })
      .def("check_dp_axioms", [](DescriptiveSpace const& s, std::size_t samples, std::uint64_t seed) {
        DpCheckOptions opts;
        opts.samples = samples;
        opts.seed = seed;
        DpReport const r = check_dp_axioms(ProximityRelation::derived(s), opts);
        py::dict out;
        for (auto const& a : r.axioms) out[py::str(a.axiom)] = a.holds;
        return out;
      }, py::arg("samples") = 0, py::arg("seed") = 0);

  py::class_<AlgebraInstance>(m, "Instance")
      .def(py::init([](DescriptiveSpace space, std::vector<std::vector<Point>> const& add,
                       std::vector<std::vector<Point>> const& mul, std::vector<Point> const& carrier) {
             std::size_t const n = space.size();
             return AlgebraInstance(std::move(space), to_table(add), to_table(mul), to_subset(n, carrier));
           }),
           py::arg("space"), py::arg("add"), py::arg("mul"), py::arg("carrier"))
      .def_static("modular",
                  [](std::size_t n, std::optional<std::size_t> k, std::optional<std::vector<Point>> carrier) {
                    DescriptiveSpace space = k ? DescriptiveSpace::modular(n, *k) : DescriptiveSpace::injective(n);
                    std::optional<Subset> c;
                    if (carrier) c = to_subset(n, *carrier);
                    return AlgebraInstance::modular(n, std::move(space), c);
                  },
                  py::arg("n"), py::arg("k") = py::none(), py::arg("carrier") = py::none())
      .def_static("fixture", [](std::string const& name) { return make_fixture(name); }, py::arg("name"))
      .def_static("parse", [](std::string const& text) { return parse_instance(text).instance; }, py::arg("text"))
      .def_property_readonly("size", &AlgebraInstance::size)
      .def_property_readonly("space", &AlgebraInstance::space)
      .def_property_readonly("carrier", [](AlgebraInstance const& i) { return i.carrier().members(); })
      .def_property_readonly("upper_carrier", [](AlgebraInstance const& i) { return i.upper_carrier().members(); })
      .def_property_readonly("add_table", [](AlgebraInstance const& i) { return from_table(i.add_table()); })
      .def_property_readonly("mul_table", [](AlgebraInstance const& i) { return from_table(i.mul_table()); })
      .def_property_readonly("fingerprint", &AlgebraInstance::fingerprint_hex)
      .def_property_readonly("zero", [](AlgebraInstance const& i) { return i.identities().zero(); })
      .def_property_readonly("one", [](AlgebraInstance const& i) { return i.identities().one(); })
      .def("flags",
           [](AlgebraInstance const& i) {
             py::dict out;
             for (auto const& [name, d] : i.flags().entries()) out[py::str(std::string(name))] = d->holds;
             return out;
           })
      .def("units", [](AlgebraInstance const& i) { return units(i).members(); })
      .def("power", &AlgebraInstance::power, py::arg("s"), py::arg("m"))
      .def("serialize", [](AlgebraInstance const& i, std::string const& label) {
        return serialize_instance(document_with_ideals(label, i));
      }, py::arg("label") = "instance");

  m.def("fixture_names", &fixture_names);
  m.def("enumerate_ideals", [](AlgebraInstance const& inst) {
    std::vector<std::vector<Point>> out;
    for (Subset const& s : enumerate_ideals(inst)) out.push_back(s.members());
    return out;
  });
  m.def("is_approx_ideal", on_subset(is_approx_ideal), py::arg("inst"), py::arg("q"));
  m.def("is_prime", on_subset(is_prime), py::arg("inst"), py::arg("w"));
  m.def("is_primary", on_subset(is_primary), py::arg("inst"), py::arg("w"));
  m.def("is_semi_primary", on_subset(is_semi_primary), py::arg("inst"), py::arg("o"));
  m.def("is_one_absorbing_primary", on_subset(is_one_absorbing_primary), py::arg("inst"), py::arg("q"));
  m.def("radical", [](AlgebraInstance const& inst, std::vector<Point> const& w) {
    return radical(inst, to_subset(inst.size(), w)).members();
  }, py::arg("inst"), py::arg("w"));
  m.def("colon", [](AlgebraInstance const& inst, std::vector<Point> const& w, Point s) {
    return colon(inst, to_subset(inst.size(), w), s).members();
  }, py::arg("inst"), py::arg("w"), py::arg("s"));
  m.def("classify", [](AlgebraInstance const& inst, std::vector<Point> const& w) {
    ClassificationReport const r = classify_ideal(inst, to_subset(inst.size(), w));
    py::dict out;
    out["members"] = r.members.members();
    out["ideal"] = verdict_dict(r.ideal);
    out["prime"] = verdict_dict(r.prime);
    out["primary"] = verdict_dict(r.primary);
    out["semi_primary"] = verdict_dict(r.semi_primary);
    out["one_absorbing_primary"] = verdict_dict(r.one_absorbing);
    out["radical"] = r.radical.members();
    return out;
  }, py::arg("inst"), py::arg("w"));
  m.def("quotient", [](AlgebraInstance const& inst, std::vector<Point> const& w, bool strict) {
    QuotientStructure const q = quotient(inst, to_subset(inst.size(), w), strict ? ZeroTest::Strict : ZeroTest::Descriptive);
    py::dict out;
    std::vector<std::vector<Point>> cosets;
    for (Subset const& c : q.cosets) cosets.push_back(c.members());
    out["cosets"] = cosets;
    out["well_defined"] = q.well_defined.holds;
    out["zero_coset"] = q.zero_coset;
    std::vector<bool> zd, nil;
    for (std::size_t c = 0; c < q.coset_count(); ++c) {
      zd.push_back(q.is_zero_divisor(c));
      nil.push_back(q.is_nilpotent(c));
    }
    out["zero_divisor"] = zd;
    out["nilpotent"] = nil;
    return out;
  }, py::arg("inst"), py::arg("w"), py::arg("strict") = false);
  m.def("classical_oracle", [](AlgebraInstance const& inst) {
    py::list out;
    for (auto const& r : classical_oracle(inst)) {
      py::dict d;
      d["members"] = r.members.members();
      d["prime"] = verdict_dict(r.prime);
      d["primary"] = verdict_dict(r.primary);
      d["radical"] = r.radical.members();
      out.append(d);
    }
    return out;
  });
  m.def("theorem_ids", [] {
    std::vector<std::string> out;
    for (TheoremId id : all_theorems()) out.emplace_back(to_string(id));
    return out;
  });
  m.def("run_suite",
        [](std::string const& family, std::size_t min_points, std::size_t max_points, std::size_t samples,
           std::uint64_t seed, std::vector<std::string> const& theorems, std::size_t threads) {
          std::vector<TheoremId> selection;
          for (auto const& t : theorems) {
            auto id = parse_theorem_id(t);
            if (!id) throw Error(ErrorKind::InvalidArgument, "unknown theorem id '" + t + "'");
            selection.push_back(*id);
          }
          if (selection.empty()) selection = all_theorems();
          std::sort(selection.begin(), selection.end());
          selection.erase(std::unique(selection.begin(), selection.end()), selection.end());
          auto fam = parse_family(family);
          if (!fam) throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
          CampaignOptions opts;
          opts.threads = threads;
          Json report;
          {
            py::gil_scoped_release release;
            if (*fam == Family::Fixtures) {
              std::vector<AlgebraInstance> instances;
              for (auto const& name : fixture_names()) instances.push_back(make_fixture(name));
              report = suite_report(run_campaign(instances, selection, opts));
            } else {
              GenParams p;
              p.family = *fam;
              p.min_points = min_points;
              p.max_points = max_points;
              p.samples = samples;
              p.seed = seed;
              report = suite_report(run_campaign(p, selection, opts));
            }
          }
          return to_python(report);
        },
        py::arg("family") = "modular", py::arg("min_points") = 1, py::arg("max_points") = 4,
        py::arg("samples") = 100, py::arg("seed") = 0, py::arg("theorems") = std::vector<std::string>{},
        py::arg("threads") = 1);
  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "proxideal");
    std::vector<char const*> argv;
    for (auto const& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int const code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}

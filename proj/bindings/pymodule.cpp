#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "xcoh/cli.hpp"
#include "xcoh/csv.hpp"
#include "xcoh/svg.hpp"
#include "xcoh/verify.hpp"

namespace py = pybind11;
using namespace xcoh;

namespace {

FamilyKind family_from_name(const std::string& name) {
  if (name == "mnms") return FamilyKind::Mnms;
  if (name == "werner") return FamilyKind::Werner;
  if (name == "mems") return FamilyKind::Mems;
  if (name == "rho_l") return FamilyKind::RhoL;
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected mnms, werner, mems, or rho_l)");
}

Subsystem subsystem_from_name(const std::string& name) {
  if (name == "A" || name == "a") return Subsystem::A;
  if (name == "B" || name == "b") return Subsystem::B;
  throw std::invalid_argument("subsystem must be 'A' or 'B'");
}

BoundaryAxis axis_from_name(const std::string& name) {
  if (name == "c_rel") return BoundaryAxis::CRel;
  if (name == "c_skew") return BoundaryAxis::CSkew;
  throw std::invalid_argument("axis must be 'c_rel' or 'c_skew'");
}

std::string repr_xstate(const XState& s) {
  std::ostringstream os;
  os << "XState(r11=" << s.r11() << ", r22=" << s.r22() << ", r33=" << s.r33()
     << ", r44=" << s.r44() << ", r14=" << s.r14().real();
  if (s.r14().imag() != 0.0) os << (s.r14().imag() > 0 ? "+" : "") << s.r14().imag() << "j";
  os << ", r23=" << s.r23().real();
  if (s.r23().imag() != 0.0) os << (s.r23().imag() > 0 ? "+" : "") << s.r23().imag() << "j";
  os << ")";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coherence quantifiers, random ensembles, and claim verification "
            "for two-qubit X states";

  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);

  py::class_<XState>(m, "XState")
      .def_property_readonly("r11", &XState::r11)
      .def_property_readonly("r22", &XState::r22)
      .def_property_readonly("r33", &XState::r33)
      .def_property_readonly("r44", &XState::r44)
      .def_property_readonly("r14", &XState::r14)
      .def_property_readonly("r23", &XState::r23)
      .def_property_readonly("diagonal", &XState::diagonal)
      .def("__repr__", &repr_xstate);

  py::class_<MeasureSet>(m, "MeasureSet")
      .def_readonly("c_rel", &MeasureSet::c_rel)
      .def_readonly("c_l1", &MeasureSet::c_l1)
      .def_readonly("c_skew", &MeasureSet::c_skew)
      .def_readonly("c_tr", &MeasureSet::c_tr)
      .def_readonly("c_rob", &MeasureSet::c_rob)
      .def_readonly("concurrence", &MeasureSet::concurrence)
      .def_readonly("d2", &MeasureSet::d2)
      .def_readonly("d2max", &MeasureSet::d2max)
      .def("as_dict", [](const MeasureSet& ms) {
        py::dict d;
        d["c_rel"] = ms.c_rel;
        d["c_l1"] = ms.c_l1;
        d["c_skew"] = ms.c_skew;
        d["c_tr"] = ms.c_tr;
        d["c_rob"] = ms.c_rob;
        d["concurrence"] = ms.concurrence;
        d["d2"] = ms.d2;
        d["d2max"] = ms.d2max;
        return d;
      });

  py::class_<EnsembleRecord>(m, "EnsembleRecord")
      .def_readonly("rho11", &EnsembleRecord::rho11)
      .def_readonly("rho22", &EnsembleRecord::rho22)
      .def_readonly("rho33", &EnsembleRecord::rho33)
      .def_readonly("rho44", &EnsembleRecord::rho44)
      .def_readonly("re_rho14", &EnsembleRecord::re_rho14)
      .def_readonly("im_rho14", &EnsembleRecord::im_rho14)
      .def_readonly("re_rho23", &EnsembleRecord::re_rho23)
      .def_readonly("im_rho23", &EnsembleRecord::im_rho23)
      .def_readonly("measures", &EnsembleRecord::measures)
      .def("state", &record_state);

  py::class_<ClaimResult>(m, "ClaimResult")
      .def_readonly("id", &ClaimResult::id)
      .def_readonly("title", &ClaimResult::title)
      .def_readonly("checked", &ClaimResult::checked)
      .def_readonly("violations", &ClaimResult::violations)
      .def_readonly("worst_margin", &ClaimResult::worst_margin)
      .def_readonly("tolerance", &ClaimResult::tolerance)
      .def_readonly("passed", &ClaimResult::pass)
      .def_readonly("note", &ClaimResult::note);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("claims", &VerificationReport::claims)
      .def("all_pass", &VerificationReport::all_pass)
      .def("__str__",
           [](const VerificationReport& r) { return format_report(r); });

  m.def("make_xstate", &XState::make, py::arg("r11"), py::arg("r22"),
        py::arg("r33"), py::arg("r44"), py::arg("r14"), py::arg("r23"),
        "Validate and build an X state from its seven parameters");
  m.def("canonicalize", &canonicalize);
  m.def("eigenvalues", &eigenvalues_closed_form,
        "Closed-form spectrum, sorted descending");
  m.def("mix", &mix, py::arg("s1"), py::arg("s2"), py::arg("p"));
  m.def(
      "reduced_diagonal",
      [](const XState& s, const std::string& which) {
        return reduced_diagonal(s, subsystem_from_name(which));
      },
      py::arg("state"), py::arg("subsystem"));
  m.def("purity",
        [](double p, double q) { return purity({p, q}); });
  m.def(
      "family",
      [](const std::string& name, double epsilon) {
        return family(family_from_name(name), epsilon);
      },
      py::arg("name"), py::arg("epsilon"));
  m.def("sample_random", &sample_random, py::arg("seed"), py::arg("index"),
        py::arg("phases") = false);

  m.def("c_rel", &c_rel);
  m.def("c_l1", &c_l1);
  m.def("c_skew", &c_skew);
  m.def("k_coherence_summand", &k_coherence_summand, py::arg("state"),
        py::arg("i"));
  m.def("concurrence", &concurrence);
  m.def("d2_first_order", &d2_first_order);
  m.def("d2_max", &d2_max);
  m.def(
      "mnms_ceiling_l1",
      [](double c, const std::string& axis) {
        return mnms_ceiling_l1(c, axis_from_name(axis));
      },
      py::arg("c"), py::arg("axis") = "c_rel");
  m.def("measure_all", &measure_all);

  m.def("run_ensemble", &run_ensemble, py::arg("seed"), py::arg("n"),
        py::arg("phases") = false, py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("write_csv",
        [](const std::filesystem::path& path,
           const std::vector<EnsembleRecord>& records) {
          write_csv(path, records);
        });
  m.def("read_csv", [](const std::filesystem::path& path) {
    return read_csv(path);
  });
  m.def("verify", [](const std::vector<EnsembleRecord>& records) {
    return verify(records);
  });
  m.def(
      "emit_svg_scatter",
      [](const std::string& x, const std::string& y,
         const std::vector<std::string>& overlays,
         const std::vector<EnsembleRecord>& records,
         const std::filesystem::path& out) {
        FigureSpec spec;
        spec.x_column = x;
        spec.y_column = y;
        for (const auto& name : overlays)
          spec.overlays.push_back(family_from_name(name));
        emit_svg_scatter(spec, records, out);
      },
      py::arg("x"), py::arg("y"), py::arg("overlays"), py::arg("records"),
      py::arg("out"));
  m.def(
      "cli",
      [](const std::vector<std::string>& args) { return run_cli(args); },
      "Run a CLI subcommand in-process; returns the exit code");
}

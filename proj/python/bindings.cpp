#include "convexdiff/construction.hpp"
#include "convexdiff/convex_set.hpp"
#include "convexdiff/decimal.hpp"
#include "convexdiff/errors.hpp"
#include "convexdiff/oracle.hpp"
#include "convexdiff/rational.hpp"
#include "convexdiff/report.hpp"
#include "convexdiff/statistics.hpp"

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace convexdiff;

namespace {

// GMP integers cross the boundary as arbitrary-precision Python ints.
py::int_ to_py_int(const Integer& z) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Rational rational_from_object(const py::object& obj) {
    if (py::isinstance<Rational>(obj))
        return obj.cast<Rational>();
    if (py::isinstance<py::int_>(obj))
        return Rational::parse(py::str(obj).cast<std::string>());
    if (py::isinstance<py::str>(obj))
        return Rational::parse(obj.cast<std::string>());
    throw ValidationError("expected a Rational, int, or rational string");
}

std::vector<Rational> rationals_from_iterable(const py::iterable& values) {
    std::vector<Rational> out;
    for (py::handle item : values)
        out.push_back(rational_from_object(py::reinterpret_borrow<py::object>(item)));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Convex difference sets: extremal constructions, exact statistics, and "
              "exhaustive verification of the representation bound";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const InternalError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const ValidationError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::object& obj) { return rational_from_object(obj); }),
             py::arg("value"))
        .def(py::init([](long long num, long long den) { return Rational(num, den); }),
             py::arg("numerator"), py::arg("denominator"))
        .def_property_readonly("numerator", [](const Rational& r) { return to_py_int(r.numerator()); })
        .def_property_readonly("denominator",
                               [](const Rational& r) { return to_py_int(r.denominator()); })
        .def("is_integer", &Rational::is_integer)
        .def("floor", [](const Rational& r) { return to_py_int(r.floor()); })
        .def("__abs__", &Rational::abs)
        .def("__neg__", [](const Rational& r) { return -r; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.str())); })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; });
    py::implicitly_convertible<py::int_, Rational>();
    py::implicitly_convertible<py::str, Rational>();

    py::class_<ConvexSet>(m, "ConvexSet")
        .def(py::init([](const py::iterable& elements) {
                 return ConvexSet::validate(rationals_from_iterable(elements));
             }),
             py::arg("elements"),
             "Validate a strictly increasing sequence with strictly increasing gaps")
        .def("__len__", &ConvexSet::size)
        .def_property_readonly("elements", &ConvexSet::elements)
        .def("element", &ConvexSet::element, py::arg("i"), "1-based: element(1) is a_1")
        .def("gaps", &ConvexSet::gaps)
        .def("dilate_to_integers",
             [](const ConvexSet& set) {
                 auto [dilated, scale] = set.dilate_to_integers();
                 return py::make_tuple(dilated, to_py_int(scale));
             })
        .def("translate",
             [](const ConvexSet& set, const py::object& shift) {
                 return set.translate(rational_from_object(shift));
             },
             py::arg("shift"))
        .def("scale",
             [](const ConvexSet& set, const py::object& factor) {
                 return set.scale(rational_from_object(factor));
             },
             py::arg("factor"))
        .def(py::self == py::self)
        .def("__repr__", [](const ConvexSet& set) {
            std::string out = "ConvexSet([";
            const auto& elements = set.elements();
            for (std::size_t i = 0; i < elements.size(); ++i) {
                if (i)
                    out += ", ";
                if (i == 8 && elements.size() > 12) {
                    out += "... " + std::to_string(elements.size() - i) + " more";
                    break;
                }
                out += elements[i].str();
            }
            return out + "])";
        });

    m.def("from_gaps",
          [](const std::vector<long long>& gaps) {
              return ConvexSet::from_gap_sequence(GapSequence::validate(gaps));
          },
          py::arg("gaps"), "Integer convex set {0, g_1, g_1+g_2, ...} from increasing gaps");

    py::class_<ConstructionResult>(m, "ConstructionResult")
        .def_readonly("set", &ConstructionResult::set)
        .def_readonly("rich_difference", &ConstructionResult::rich_difference)
        .def_readonly("delta", &ConstructionResult::delta)
        .def_readonly("m", &ConstructionResult::m)
        .def("__repr__", [](const ConstructionResult& r) {
            return "ConstructionResult(m=" + std::to_string(r.m) + ", d=" +
                   r.rich_difference.str() + ")";
        });

    m.def("default_delta", &default_delta, py::arg("m"));
    m.def("construct",
          [](unsigned long m_value, const std::optional<py::object>& delta) {
              if (delta)
                  return construct(m_value, rational_from_object(*delta));
              return construct(m_value);
          },
          py::arg("m"), py::arg("delta") = std::nullopt,
          "Size-2m convex set whose difference d = a_{m+1} is represented m times");

    py::class_<GluedResult>(m, "GluedResult")
        .def_readonly("set", &GluedResult::set)
        .def_readonly("t", &GluedResult::t)
        .def_readonly("copies", &GluedResult::copies)
        .def_readonly("rich_differences", &GluedResult::rich_differences)
        .def("__repr__", [](const GluedResult& r) {
            return "GluedResult(t=" + std::to_string(r.t) +
                   ", copies=" + std::to_string(r.copies) + ")";
        });
    m.def("glue", &glue, py::arg("t"), py::arg("copies"),
          "Concatenation of scaled copies of construct(t); one rich difference per copy");

    py::class_<DiffStats>(m, "DiffStats")
        .def_readonly("n", &DiffStats::n)
        .def_readonly("diff_set_size", &DiffStats::diff_set_size)
        .def_property_readonly("energy", [](const DiffStats& s) { return to_py_int(s.energy); })
        .def_property_readonly("rep_counts",
                               [](const DiffStats& s) {
                                   py::dict out;
                                   for (const auto& [d, count] : s.rep_counts)
                                       out[py::cast(d)] = count;
                                   return out;
                               })
        .def("__repr__", [](const DiffStats& s) {
            return "DiffStats(n=" + std::to_string(s.n) + ", energy=" + s.energy.get_str() + ")";
        });

    m.def("rep_diff",
          [](const ConvexSet& A, const py::object& x) {
              return rep_diff(A, rational_from_object(x));
          },
          py::arg("set"), py::arg("x"), "Ordered pairs (a, b) with a - b = x");
    m.def("rep_sum",
          [](const ConvexSet& A, const py::object& C) {
              return rep_sum(A, rational_from_object(C));
          },
          py::arg("set"), py::arg("C"), "Ordered pairs (a, b) with a + b = C");
    m.def("diff_stats", &diff_stats, py::arg("set"));
    m.def("rich_count",
          [](const ConvexSet& A, long long t) { return rich_count(A, t); }, py::arg("set"),
          py::arg("t"), "Positive differences with count >= t");

    py::class_<MaxRep>(m, "MaxRep")
        .def_readonly("value", &MaxRep::value)
        .def_readonly("count", &MaxRep::count)
        .def("__repr__", [](const MaxRep& r) {
            return "MaxRep(value=" + r.value.str() + ", count=" + std::to_string(r.count) + ")";
        });
    m.def("max_rep_diff", [](const ConvexSet& A) { return max_rep_diff(A); }, py::arg("set"));
    m.def("max_rep_sum", &max_rep_sum, py::arg("set"));

    py::class_<RepWitness>(m, "RepWitness")
        .def_readonly("j", &RepWitness::j)
        .def_readonly("k", &RepWitness::k)
        .def(py::self == py::self)
        .def("__repr__", [](const RepWitness& w) {
            return "RepWitness(j=" + std::to_string(w.j) + ", k=" + std::to_string(w.k) + ")";
        });
    m.def("witnesses",
          [](const ConvexSet& A, const py::object& d) {
              return witnesses(A, rational_from_object(d));
          },
          py::arg("set"), py::arg("d"),
          "All (j, k) with a_{j+k} - a_j = d, sorted by decreasing k");

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("n", &BoundReport::n)
        .def_readonly("bound", &BoundReport::bound)
        .def_readonly("d", &BoundReport::d)
        .def_readonly("count", &BoundReport::count)
        .def_readonly("margin", &BoundReport::margin)
        .def_readonly("witnesses", &BoundReport::witnesses)
        .def("__repr__", [](const BoundReport& r) {
            return "BoundReport(d=" + r.d.str() + ", count=" + std::to_string(r.count) +
                   ", bound=" + std::to_string(r.bound) + ")";
        });
    m.def("verify_bound", [](const ConvexSet& A) { return verify_bound(A); }, py::arg("set"));
    m.def("verify_bound",
          [](const ConvexSet& A, const py::object& d) {
              return verify_bound(A, rational_from_object(d));
          },
          py::arg("set"), py::arg("d"));

    m.def("enumerate_gap_sequences",
          [](std::size_t n, long long max_gap, const py::function& visit) {
              return enumerate_convex(n, max_gap, [&](const GapSequence& gaps) {
                  visit(gaps.values());
              });
          },
          py::arg("n"), py::arg("max_gap"), py::arg("visit"),
          "Visit every increasing gap sequence in [1, max_gap] once, lexicographically");

    py::class_<SearchReport>(m, "SearchReport")
        .def_readonly("n", &SearchReport::n)
        .def_readonly("max_gap", &SearchReport::max_gap)
        .def_readonly("sets_enumerated", &SearchReport::sets_enumerated)
        .def_readonly("max_count_found", &SearchReport::max_count_found)
        .def_readonly("bound", &SearchReport::bound)
        .def_property_readonly("extremal_witness",
                               [](const SearchReport& r) -> std::optional<std::vector<long long>> {
                                   if (!r.extremal_witness)
                                       return std::nullopt;
                                   return r.extremal_witness->values();
                               })
        .def_readonly("witness_lists_checked", &SearchReport::witness_lists_checked)
        .def_readonly("violations", &SearchReport::violations)
        .def("__repr__", [](const SearchReport& r) {
            return "SearchReport(n=" + std::to_string(r.n) + ", max_count_found=" +
                   std::to_string(r.max_count_found) + ", bound=" + std::to_string(r.bound) +
                   ")";
        });
    m.def("search",
          [](std::size_t n, long long max_gap, bool check_witnesses, bool attain,
             unsigned threads) {
              SearchOptions options;
              options.check_witnesses = check_witnesses;
              options.record_attainment = attain;
              options.threads = threads;
              return search_bound(n, max_gap, options);
          },
          py::arg("n"), py::arg("max_gap"), py::arg("check_witnesses") = true,
          py::arg("attain") = false, py::arg("threads") = 1,
          "Exhaustive check of the floor(n/2) bound over all small integer convex sets");

    py::class_<RichEntry>(m, "RichEntry")
        .def_readonly("threshold", &RichEntry::threshold)
        .def_readonly("count", &RichEntry::count)
        .def_readonly("ratio", &RichEntry::ratio);
    py::class_<ScalingRow>(m, "ScalingRow")
        .def_readonly("m", &ScalingRow::m)
        .def_readonly("n", &ScalingRow::n)
        .def_readonly("delta", &ScalingRow::delta)
        .def_property_readonly("scale", [](const ScalingRow& r) { return to_py_int(r.scale); })
        .def_readonly("set", &ScalingRow::set)
        .def_readonly("rich_difference", &ScalingRow::rich_difference)
        .def_property_readonly("energy", [](const ScalingRow& r) { return to_py_int(r.energy); })
        .def_readonly("energy_ratio", &ScalingRow::energy_ratio)
        .def_readonly("max_sum_rep", &ScalingRow::max_sum_rep)
        .def_readonly("sum_ratio", &ScalingRow::sum_ratio)
        .def_readonly("rich", &ScalingRow::rich);
    m.def("scaling_report", &scaling_report, py::arg("m_list"));
    m.def("report_thresholds", &report_thresholds, py::arg("m"));

    m.def("power_ratio_decimal",
          [](const py::int_& x, const py::int_& n, unsigned p, unsigned q, unsigned digits) {
              // repr of a Python int is exactly its decimal digits
              return power_ratio_decimal(Integer(py::repr(x).cast<std::string>()),
                                         Integer(py::repr(n).cast<std::string>()), p, q, digits);
          },
          py::arg("x"), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("digits") = 6,
          "x / n^{p/q} rendered to `digits` significant digits, exactly");
}

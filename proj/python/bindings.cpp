#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <qcft/checks.hpp>
#include <qcft/errors.hpp>
#include <qcft/free_boson.hpp>
#include <qcft/mock_modular.hpp>
#include <qcft/partitions.hpp>
#include <qcft/regularization.hpp>
#include <qcft/special_series.hpp>
#include <qcft/virasoro.hpp>

namespace py = pybind11;

namespace {

py::object to_py(const qcft::BigInt &z)
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const qcft::Rational &r)
{
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(r.numerator()), to_py(r.denominator()));
}

// Accepts int, fractions.Fraction or a "p/q" string.
qcft::Rational to_rational(const py::handle &obj)
{
    return qcft::Rational::parse(py::str(obj).cast<std::string>());
}

py::dict to_py(const qcft::FracQSeries &f)
{
    py::list coeffs;
    for (const auto &c : f.coeffs()) {
        coeffs.append(to_py(c));
    }
    py::dict d;
    d["prefactor"] = to_py(f.prefactor());
    d["coeffs"] = coeffs;
    return d;
}

py::list to_py(const qcft::CountTable &t)
{
    py::list out;
    for (const auto &v : t.values) {
        out.append(to_py(v));
    }
    return out;
}

qcft::PartitionConstraint make_constraint(unsigned min_part, unsigned min_gap, std::optional<unsigned> modulus,
                                          std::optional<std::set<unsigned>> residues,
                                          std::optional<std::pair<unsigned, unsigned>> window,
                                          std::optional<unsigned> max_ones)
{
    qcft::PartitionConstraint c;
    c.min_part = min_part;
    c.min_gap = min_gap;
    if (modulus.has_value() != residues.has_value()) {
        throw std::invalid_argument("modulus and residues go together");
    }
    if (modulus) {
        c.allowed_residues = qcft::ResidueSet{*modulus, *residues};
    }
    if (window) {
        c.window = qcft::Window{window->first, window->second};
    }
    c.max_ones = max_ones;
    return c;
}

qcft::Sector25 sector_from(const std::string &name)
{
    if (name == "V0") {
        return qcft::Sector25::V0;
    }
    if (name == "V-1/5" || name == "Vm15") {
        return qcft::Sector25::Vm15;
    }
    throw std::invalid_argument("sector must be 'V0' or 'V-1/5'");
}

} // namespace

PYBIND11_MODULE(_qcft, m)
{
    m.doc() = "Exact q-series, partition identities and CFT checks";

    // Subclasses map to the same Python type; the message starts with their name.
    py::register_exception<qcft::Error>(m, "QcftError", PyExc_RuntimeError);

    m.attr("default_order") = qcft::default_order;

    // q-series
    m.def("dedekind_eta", [](std::size_t order) { return to_py(qcft::dedekind_eta(order)); },
          py::arg("order") = qcft::default_order);
    m.def("eisenstein", [](unsigned k, std::size_t order) { return to_py(qcft::eisenstein(k, order)); }, py::arg("k"),
          py::arg("order") = qcft::default_order);
    m.def(
        "rr_product",
        [](const std::string &which, std::size_t order) {
            if (which != "G" && which != "H") {
                throw std::invalid_argument("which must be 'G' or 'H'");
            }
            return to_py(qcft::rr_product(which == "G" ? qcft::RRProduct::G : qcft::RRProduct::H, order));
        },
        py::arg("which"), py::arg("order") = qcft::default_order);
    m.def(
        "oscillator_series",
        [](const std::string &progressions, std::size_t order, bool twisted) {
            const auto s = qcft::ArithmeticProgressionSet::parse(progressions);
            return to_py(twisted ? qcft::twisted_oscillator_series(s, order) : qcft::oscillator_partition_series(s, order));
        },
        py::arg("progressions"), py::arg("order") = qcft::default_order, py::arg("twisted") = false);
    m.def("character_25", [](const std::string &sector, std::size_t order) {
        return to_py(qcft::character_25(sector_from(sector), order));
    }, py::arg("sector"), py::arg("order") = qcft::default_order);

    // partitions
    m.def(
        "count_partitions",
        [](std::size_t n_max, unsigned min_part, unsigned min_gap, std::optional<unsigned> modulus,
           std::optional<std::set<unsigned>> residues, std::optional<std::pair<unsigned, unsigned>> window,
           std::optional<unsigned> max_ones) {
            return to_py(qcft::count_partitions(n_max, make_constraint(min_part, min_gap, modulus, residues, window, max_ones)));
        },
        py::arg("n_max"), py::kw_only(), py::arg("min_part") = 1, py::arg("min_gap") = 0, py::arg("modulus") = py::none(),
        py::arg("residues") = py::none(), py::arg("window") = py::none(), py::arg("max_ones") = py::none());
    m.def("unrestricted_p", [](std::size_t n_max) { return to_py(qcft::unrestricted_p(n_max)); });
    m.def("gordon_check", [](unsigned k, unsigned i, std::size_t n_max) { return qcft::gordon_check(k, i, n_max).pass; },
          py::arg("k"), py::arg("i"), py::arg("n_max") = 60);
    m.def("growth_probe", [](std::size_t n) {
        const auto g = qcft::growth_probe(n);
        return py::make_tuple(g.log_p, g.bound);
    });

    // regularization
    m.def("hurwitz_sum", [](long p, long r) { return to_py(qcft::hurwitz_sum(p, r).value); });
    m.def("ramanujan_naive_sum", [](long p, long r) { return to_py(qcft::ramanujan_naive_sum(p, r).value); });
    m.def("casimir_exponent", [](const std::string &progressions) {
        return to_py(qcft::casimir_exponent(qcft::ArithmeticProgressionSet::parse(progressions)));
    });
    m.def("critical_dimension", [] { return qcft::critical_dimension().spacetime; });

    // Virasoro and minimal models
    m.def("central_charge", [](long p, long q) { return to_py(qcft::central_charge({p, q})); });
    m.def("effective_central_charge", [](long p, long q) { return to_py(qcft::effective_central_charge({p, q})); });
    m.def("kac_weight", [](long p, long q, long r, long s) { return to_py(qcft::kac_weight({p, q}, r, s)); });
    m.def(
        "gram_matrix",
        [](unsigned level, bool vacuum) {
            const auto g = qcft::gram_matrix(level, vacuum);
            std::vector<std::vector<std::string>> entries;
            for (const auto &row : g.entries) {
                auto &out = entries.emplace_back();
                for (const auto &e : row) {
                    out.push_back(e.to_string());
                }
            }
            return py::make_tuple(g.basis, entries, qcft::determinant(g.entries).to_string());
        },
        py::arg("level"), py::arg("vacuum") = false,
        "Returns (basis, entries, determinant) with polynomials in c and h as strings.");
    m.def("gram_determinant_at", [](unsigned level, bool vacuum, const py::handle &c, const py::handle &h) {
        return to_py(qcft::determinant_at(qcft::gram_matrix(level, vacuum), to_rational(c), to_rational(h)));
    });
    m.def("null_vector_central_charges", [] {
        py::list out;
        for (const auto &c : qcft::null_vector_central_charges().central_charges) {
            out.append(to_py(c));
        }
        return out;
    });
    m.def("ode_residual_is_zero", [](const std::string &sector, std::size_t order) {
        return qcft::ode_residual(sector_from(sector), order).is_zero();
    }, py::arg("sector"), py::arg("order") = qcft::default_order);
    m.def("torus_partition_function_25", [](qcft::Complex tau) { return qcft::torus_partition_function_25(tau); });
    m.def("scale_anomaly", [](const py::handle &c, long genus, double lambda) {
        return qcft::scale_anomaly(to_rational(c), genus, lambda);
    });

    // free boson
    m.def("boson_partition_function", [](double radius, qcft::Complex tau) {
        return qcft::boson_partition_function(radius, qcft::TorusModulus(tau));
    });
    m.def("twisted_boson_partition_function", [](qcft::Complex tau) {
        return qcft::twisted_boson_partition_function(qcft::TorusModulus(tau));
    });
    m.def("lattice_determinant_ratio", [](std::size_t sites, double m1, double m2, double length) {
        return qcft::lattice_determinant_ratio({sites, sites, length, length}, m1, m2);
    }, py::arg("sites"), py::arg("m1"), py::arg("m2"), py::arg("length") = 1.0);

    // mock modular
    m.def("jacobi_theta", [](int k, qcft::Complex z, qcft::Complex tau) {
        return qcft::jacobi_theta(k, qcft::JacobiPoint{z, tau});
    });
    m.def("elliptic_genus_k3", [](qcft::Complex z, qcft::Complex tau) {
        return qcft::elliptic_genus_k3(qcft::JacobiPoint{z, tau});
    });
    m.def(
        "extract_mock_coefficients",
        [](double y0, std::size_t grid, std::size_t terms, double kappa) {
            qcft::MockExtractionOptions o;
            o.y0 = y0;
            o.grid = grid;
            o.terms = terms;
            o.kappa = kappa;
            return qcft::extract_mock_coefficients(o).values;
        },
        py::arg("y0") = 0.3, py::arg("grid") = 128, py::arg("terms") = 5, py::arg("kappa") = 24.0);

    // Check registry: same report text as the command-line tool.
    m.def(
        "run_report",
        [](const std::string &subcommand, std::size_t order, bool exact_only) {
            qcft::CheckOptions o;
            o.config.order = order;
            o.config.exact_only = exact_only;
            o.config.validate();
            return qcft::serialize_reports(qcft::run_subcommand(subcommand, o));
        },
        py::arg("subcommand"), py::arg("order") = qcft::default_order, py::arg("exact_only") = false);
}

// Python bindings for the exact MDR toolkit. Exact rationals cross the
// boundary as "num/den" strings; the dispersion numerics stay doubles.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmdr/a4.hpp"
#include "qmdr/pheno.hpp"
#include "qmdr/serialize.hpp"
#include "qmdr/verify.hpp"

namespace py = pybind11;
using namespace qmdr;

namespace {

Matrix<Rat> matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty matrix");
    Matrix<Rat> m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rat_from_string(rows[i][j]);
    }
    return m;
}

py::dict enclosure_dict(const Enclosure& e, bool exact) {
    py::dict d;
    d["exact"] = exact;
    d["lo"] = rat_to_string(e.lo);
    d["hi"] = rat_to_string(e.hi);
    d["approx"] = e.midpoint();
    return d;
}

Realization make_realization(const std::string& name, std::optional<std::string> scale_sq) {
    Realization r;
    if (name == "polymer")
        r.kind = RealizationKind::polymer;
    else if (name == "moyal")
        r.kind = RealizationKind::moyal;
    else
        throw std::invalid_argument("realization must be 'polymer' or 'moyal'");
    if (scale_sq) r.scale_sq = rat_from_string(*scale_sq);
    return r;
}

}  // namespace

PYBIND11_MODULE(_qmdr, m) {
    m.doc() = "exact deformation-quantization toolkit for the quartic MDR";

    m.def(
        "verify",
        [](unsigned samples, std::uint64_t seed, unsigned order) {
            VerifyConfig cfg;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.order = order;
            py::list out;
            for (const CheckReport& r : run_verification(cfg)) {
                py::dict d;
                d["check"] = r.check;
                d["pass"] = r.pass;
                d["samples"] = r.samples;
                if (r.note) d["note"] = *r.note;
                if (r.counterexample) d["counterexample"] = *r.counterexample;
                out.append(d);
            }
            return out;
        },
        py::arg("samples") = 50, py::arg("seed") = 0, py::arg("order") = 4,
        "Run the full exact-identity battery; returns one dict per check.");

    m.def(
        "ell_star_squared",
        [](const std::vector<std::vector<std::string>>& omega,
           const std::vector<std::vector<std::string>>& J) {
            SymplecticData data;
            data.omega = matrix_from_rows(omega);
            data.J = matrix_from_rows(J);
            data.dim = data.omega.rows();
            GeometricScale s = ell_star_squared(data);
            return enclosure_dict(s.value, s.exact);
        },
        py::arg("omega"), py::arg("J"),
        "Geometric scale from the operator norm of omega^{-1} J; entries are "
        "\"num/den\" strings.");

    m.def(
        "seiberg_witten",
        [](const std::vector<std::vector<std::string>>& g,
           const std::vector<std::vector<std::string>>& B, const std::string& alpha_prime) {
            BackgroundFields bg;
            bg.g_closed = matrix_from_rows(g);
            bg.B = matrix_from_rows(B);
            bg.dim = bg.g_closed.rows();
            bg.alpha_prime = rat_from_string(alpha_prime);
            OpenStringData open = seiberg_witten_map(bg);
            auto rows = [](const PiMatrix& mat) {
                std::vector<std::vector<std::string>> out(mat.rows());
                for (size_t i = 0; i < mat.rows(); ++i)
                    for (size_t j = 0; j < mat.cols(); ++j)
                        out[i].push_back(mat(i, j).to_string());
                return out;
            };
            py::dict d;
            d["G_open"] = rows(open.G_open);
            d["Theta"] = rows(open.Theta);
            d["theta_norm_sq"] = open.theta_norm_sq.to_string();
            d["theta_norm_approx"] = open.theta_norm.approx;
            return d;
        },
        py::arg("g"), py::arg("B"), py::arg("alpha_prime") = "1",
        "Split (g + 2 pi a' B)^{-1} into the open-string metric and bivector; "
        "pi stays symbolic in the returned strings.");

    m.def(
        "immirzi_from_flux",
        [](long n, const std::string& ell_s, const std::string& ell_P) {
            ScalarResult g = immirzi_from_flux(
                {n, rat_from_string(ell_s), rat_from_string(ell_P)});
            return enclosure_dict(g.value, g.exact);
        },
        py::arg("n"), py::arg("ell_s") = "1", py::arg("ell_P") = "1",
        "gamma = sqrt(|n|) ell_s / ell_P, exact or as a certified enclosure.");

    m.def(
        "mdr",
        [](const std::string& realization, std::optional<std::string> scale_sq,
           unsigned order) {
            Realization r = make_realization(realization, std::move(scale_sq));
            std::vector<std::string> names{"k", "lambda", "theta"};
            Polynomial disp = realization_dispersion(r, order);
            MdrExtract mdr = extract_mdr(disp);
            py::dict d;
            d["sigma"] = mdr.sigma;
            d["dispersion"] = polynomial_to_json(disp, &names).dump();
            d["quartic_coefficient"] = polynomial_to_json(mdr.quartic_coefficient, &names).dump();
            d["ell_star_sq"] = polynomial_to_json(mdr.ell_star_sq, &names).dump();
            return d;
        },
        py::arg("realization"), py::arg("scale_sq") = py::none(), py::arg("order") = 4,
        "Universal-form data of a realization's dispersion; polynomials are "
        "returned as canonical JSON strings.");

    m.def(
        "a4",
        [](const std::string& realization, const std::string& scale_sq) {
            Realization r = make_realization(realization, scale_sq);
            A4Result res = a4_from_symbol({realization_dispersion(r, 6), Rat(0)});
            py::dict d;
            d["a4"] = rat_to_string(res.a4.constant_term().re);
            d["sigma"] = res.sigma;
            d["ell_star_sq"] = rat_to_string(res.ell_star_sq.constant_term().re);
            return d;
        },
        py::arg("realization"), py::arg("scale_sq") = "1",
        "Heat-kernel k^4 coefficient of a realization at a numeric scale.");

    py::class_<Dispersion>(m, "Dispersion")
        .def(py::init([](double m_, double ell_star_sq, int sigma) {
                 return Dispersion{m_, ell_star_sq, sigma};
             }),
             py::arg("m") = 0.0, py::arg("ell_star_sq") = 0.0, py::arg("sigma") = 1)
        .def_readonly("m", &Dispersion::m)
        .def_readonly("ell_star_sq", &Dispersion::ell_star_sq)
        .def_readonly("sigma", &Dispersion::sigma);

    m.def("energy", &energy, py::arg("dispersion"), py::arg("p"));
    m.def("group_velocity", &group_velocity, py::arg("dispersion"), py::arg("p"));
    m.def(
        "time_of_flight_delay",
        [](const Dispersion& d, double distance_time, double e_high, double e_low) {
            return time_of_flight_delay(d, {distance_time, e_high, e_low, 0.0});
        },
        py::arg("dispersion"), py::arg("distance_time"), py::arg("e_high"), py::arg("e_low"));
    m.def(
        "invert_bound",
        [](double distance_time, double e_high, double e_low, double delta_t_bound, int sigma,
           double m_) {
            BoundResult b = invert_bound({distance_time, e_high, e_low, delta_t_bound}, sigma, m_);
            py::dict d;
            d["ell_star_sq_bound"] = b.ell_star_sq_bound;
            d["unconstrained"] = b.unconstrained;
            return d;
        },
        py::arg("distance_time"), py::arg("e_high"), py::arg("e_low"), py::arg("delta_t_bound"),
        py::arg("sigma") = -1, py::arg("m") = 0.0,
        "Largest ell_*^2 compatible with a time-of-flight bound.");

    py::register_exception<DomainError>(m, "QmdrDomainError", PyExc_ValueError);
}

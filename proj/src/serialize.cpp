#include "qmdr/serialize.hpp"

namespace qmdr {

namespace {

const Json& require(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(path + "/" + key, "missing required field");
    return j.at(key);
}

Rat rat_field(const Json& j, const std::string& path) {
    try {
        if (j.is_string()) return rat_from_string(j.get<std::string>());
        if (j.is_number_integer()) return Rat(j.get<long long>());
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
    throw SchemaError(path, "expected a rational as \"num/den\" string or integer");
}

}  // namespace

Json polynomial_to_json(const Polynomial& p, const std::vector<std::string>* names) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {  // std::map order = canonical sorted order
        Json exps = Json::array();
        for (const auto& [v, e] : m.exps) {
            std::string name = names && v < names->size() ? (*names)[v] : "x" + std::to_string(v);
            exps.push_back(Json::array({name, e}));
        }
        Json term;
        term["monomial"] = exps;
        term["re"] = rat_to_string(c.re);
        if (c.im != 0) term["im"] = rat_to_string(c.im);
        terms.push_back(std::move(term));
    }
    return terms;
}

Json series_to_json(const TruncatedSeries& s) {
    const std::vector<std::string>* names = s.registry().empty() ? nullptr : &s.registry();
    Json j;
    j["order"] = s.order();
    Json coeffs = Json::array();
    for (unsigned r = 0; r <= s.order(); ++r)
        coeffs.push_back(polynomial_to_json(s.coefficient(r), names));
    j["coefficients"] = std::move(coeffs);
    return j;
}

Json check_report_to_json(const CheckReport& r) {
    Json j;
    j["check"] = r.check;
    j["order"] = r.order;
    j["samples"] = r.samples;
    j["status"] = r.pass ? "pass" : "fail";
    if (r.failing_grade) j["failing_grade"] = *r.failing_grade;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    if (r.note) j["note"] = *r.note;
    return j;
}

Json enclosure_to_json(const Enclosure& e, bool exact) {
    Json j;
    j["exact"] = exact;
    if (exact) {
        j["value"] = rat_to_string(e.lo);
    } else {
        j["lo"] = rat_to_string(e.lo);
        j["hi"] = rat_to_string(e.hi);
    }
    j["approx"] = e.midpoint();
    return j;
}

Json matrix_to_json(const Matrix<Rat>& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json pi_matrix_to_json(const PiMatrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<Rat> matrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a non-empty array of rows");
    size_t rows = j.size();
    size_t cols = j.at(0).is_array() ? j.at(0).size() : 0;
    if (cols == 0) throw SchemaError(path + "/0", "expected a non-empty row array");
    Matrix<Rat> m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw SchemaError(path + "/" + std::to_string(i), "ragged matrix row");
        for (size_t c = 0; c < cols; ++c)
            m(i, c) = rat_field(row.at(c), path + "/" + std::to_string(i) + "/" +
                                               std::to_string(c));
    }
    return m;
}

SymplecticData symplectic_from_json(const Json& j) {
    SymplecticData data;
    data.dim = require(j, "dim", "").get<size_t>();
    data.omega = matrix_from_json(require(j, "omega", ""), "/omega");
    data.J = matrix_from_json(require(j, "J", ""), "/J");
    data.sigma = j.value("sigma", +1);
    if (data.sigma != 1 && data.sigma != -1) throw SchemaError("/sigma", "must be +1 or -1");
    return data;
}

BackgroundFields background_from_json(const Json& j) {
    BackgroundFields bg;
    bg.dim = require(j, "dim", "").get<size_t>();
    bg.g_closed = matrix_from_json(require(j, "g", ""), "/g");
    bg.B = matrix_from_json(require(j, "B", ""), "/B");
    bg.alpha_prime = rat_field(require(j, "alpha_prime", ""), "/alpha_prime");
    if (bg.alpha_prime <= 0) throw SchemaError("/alpha_prime", "must be positive");
    if (bg.g_closed.rows() != bg.dim) throw SchemaError("/g", "dimension mismatch");
    if (bg.B.rows() != bg.dim) throw SchemaError("/B", "dimension mismatch");
    return bg;
}

FluxData flux_from_json(const Json& j) {
    FluxData f;
    f.n = require(j, "n", "").get<long>();
    f.ell_s = rat_field(require(j, "ell_s", ""), "/ell_s");
    f.ell_P = rat_field(require(j, "ell_P", ""), "/ell_P");
    if (f.ell_s <= 0) throw SchemaError("/ell_s", "must be positive");
    if (f.ell_P <= 0) throw SchemaError("/ell_P", "must be positive");
    return f;
}

Realization realization_from_json(const Json& j) {
    Realization r;
    std::string name = require(j, "name", "").get<std::string>();
    if (name == "polymer")
        r.kind = RealizationKind::polymer;
    else if (name == "moyal")
        r.kind = RealizationKind::moyal;
    else
        throw SchemaError("/name", "must be \"polymer\" or \"moyal\"");
    if (j.contains("scale_sq")) {
        r.scale_sq = rat_field(j.at("scale_sq"), "/scale_sq");
        if (*r.scale_sq <= 0) throw SchemaError("/scale_sq", "must be positive");
    }
    return r;
}

std::vector<ObservationChannel> channels_from_json(const Json& j, const UnitRegistry& units) {
    if (!j.is_array()) throw SchemaError("", "expected an array of channels");
    auto quantity = [&](const Json& q, const std::string& path, const std::string& base) {
        double value = require(q, "value", path).get<double>();
        std::string unit = require(q, "unit", path).get<std::string>();
        try {
            return units.convert(value, unit, base);
        } catch (const std::invalid_argument& e) {
            throw SchemaError(path + "/unit", e.what());
        }
    };
    std::vector<ObservationChannel> out;
    for (size_t i = 0; i < j.size(); ++i) {
        std::string path = "/" + std::to_string(i);
        const Json& c = j.at(i);
        ObservationChannel ch;
        // distance may be a light-travel time or a length (converted via c)
        {
            const Json& dq = require(c, "distance", path);
            std::string unit = require(dq, "unit", path + "/distance").get<std::string>();
            if (unit == "s")
                ch.distance_time = quantity(dq, path + "/distance", "s");
            else
                ch.distance_time =
                    quantity(dq, path + "/distance", "m") / units.speed_of_light_m_s;
        }
        ch.e_high = quantity(require(c, "e_high", path), path + "/e_high", "GeV");
        ch.e_low = quantity(require(c, "e_low", path), path + "/e_low", "GeV");
        ch.delta_t_bound =
            quantity(require(c, "delta_t_bound", path), path + "/delta_t_bound", "s");
        if (ch.distance_time <= 0) throw SchemaError(path + "/distance", "must be positive");
        if (!(ch.e_high > ch.e_low) || ch.e_low < 0)
            throw SchemaError(path + "/e_high", "require e_high > e_low >= 0");
        if (ch.delta_t_bound <= 0) throw SchemaError(path + "/delta_t_bound", "must be positive");
        out.push_back(ch);
    }
    return out;
}

}  // namespace qmdr

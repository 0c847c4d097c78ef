#pragma once

#include <json.hpp>

#include "qmdr/a4.hpp"
#include "qmdr/background.hpp"
#include "qmdr/pheno.hpp"
#include "qmdr/report.hpp"
#include "qmdr/series.hpp"
#include "qmdr/symplectic.hpp"

namespace qmdr {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Schema violation with a JSON-pointer-style path to the offending field.
struct SchemaError : std::runtime_error {
    std::string path;
    SchemaError(std::string p, const std::string& what)
        : std::runtime_error(p + ": " + what), path(std::move(p)) {}
};

// canonical forms (sorted monomials, coefficients as "num/den" strings)
Json polynomial_to_json(const Polynomial& p, const std::vector<std::string>* names = nullptr);
Json series_to_json(const TruncatedSeries& s);
Json check_report_to_json(const CheckReport& r);
Json enclosure_to_json(const Enclosure& e, bool exact);
Json matrix_to_json(const Matrix<Rat>& m);
Json pi_matrix_to_json(const PiMatrix& m);

Matrix<Rat> matrix_from_json(const Json& j, const std::string& path);
SymplecticData symplectic_from_json(const Json& j);
BackgroundFields background_from_json(const Json& j);
FluxData flux_from_json(const Json& j);
Realization realization_from_json(const Json& j);
std::vector<ObservationChannel> channels_from_json(const Json& j, const UnitRegistry& units);

}  // namespace qmdr

#pragma once

#include <optional>
#include <string>

namespace qmdr {

/// Outcome of one verification suite, serialized as
/// {check, order, samples, status, counterexample?}.
struct CheckReport {
    std::string check;
    unsigned order = 0;
    unsigned samples = 0;
    bool pass = true;
    std::optional<std::string> counterexample;
    std::optional<unsigned> failing_grade;
    std::optional<std::string> note;

    static CheckReport ok(std::string name, unsigned order, unsigned samples) {
        return {std::move(name), order, samples, true, std::nullopt, std::nullopt, std::nullopt};
    }
    CheckReport& fail(std::string why) {
        pass = false;
        if (!counterexample) counterexample = std::move(why);
        return *this;
    }
};

}  // namespace qmdr

/**
 * @file report.hpp
 * @brief Machine-readable verdict objects emitted by every checker.
 *
 * Schema: {"check": str, "target": str, "verdict": "pass"|"fail",
 *          "witness": optional term, "valid_level": rat, "details": obj}.
 * All numeric fields are exact strings ("num/den"), never floats, so that
 * repeated runs are byte-identical.
 */
#ifndef GKZMIRROR_REPORT_HPP
#define GKZMIRROR_REPORT_HPP

#include <json.hpp>

#include <optional>
#include <string>

#include "gkzmirror/rational.hpp"

namespace gkz {

using Json = nlohmann::ordered_json;

// A single witness term of a series: exponent, coefficient, free-form note.
struct WitnessTerm {
    ExpVec u;
    Rat c;
    std::string note;

    Json to_json() const;
};

struct Report {
    std::string check;
    std::string target;
    bool pass = true;
    std::optional<WitnessTerm> witness;
    std::optional<Rat> valid_level;
    Json details = Json::object();

    void fail_with(WitnessTerm w) {
        pass = false;
        if (!witness) witness = std::move(w);
    }

    Json to_json() const;
};

} // namespace gkz

#endif // GKZMIRROR_REPORT_HPP

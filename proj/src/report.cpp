#include "gkzmirror/report.hpp"

namespace gkz {

Json WitnessTerm::to_json() const {
    Json j;
    j["u"] = u;
    j["c"] = rat_str(c);
    if (!note.empty()) j["note"] = note;
    return j;
}

Json Report::to_json() const {
    Json j;
    j["check"] = check;
    j["target"] = target;
    j["verdict"] = pass ? "pass" : "fail";
    if (witness) j["witness"] = witness->to_json();
    if (valid_level) j["valid_level"] = rat_str(*valid_level);
    if (!details.empty()) j["details"] = details;
    return j;
}

} // namespace gkz

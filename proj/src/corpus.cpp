#include "gkzmirror/corpus.hpp"

namespace gkz {

std::vector<AConfiguration> builtin_corpus() {
    std::vector<AConfiguration> out;
    out.push_back(validate_configuration(1, {{1}, {1}}, "E1"));
    out.push_back(validate_configuration(2, {{1, 0}, {0, 1}, {2, -1}}, "E2"));
    out.push_back(validate_configuration(2, {{1, 0}, {0, 1}}, "E3"));
    out.push_back(validate_configuration(1, {{1}, {1}, {1}}, "E4"));
    out.push_back(
        validate_configuration(2, {{1, 0}, {0, 1}, {2, -1}, {-1, 2}}, "E5"));
    return out;
}

std::optional<AConfiguration> builtin_config(const std::string& name) {
    for (AConfiguration& cfg : builtin_corpus())
        if (cfg.name == name) return std::move(cfg);
    return std::nullopt;
}

} // namespace gkz

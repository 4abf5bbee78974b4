#ifndef GKZMIRROR_CORPUS_HPP
#define GKZMIRROR_CORPUS_HPP

#include <optional>
#include <vector>

#include "gkzmirror/config.hpp"

namespace gkz {

// Built-in example configurations E1..E5.
std::vector<AConfiguration> builtin_corpus();

std::optional<AConfiguration> builtin_config(const std::string& name);

} // namespace gkz

#endif // GKZMIRROR_CORPUS_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace scew {

// Parameter errors map to CLI exit code 1 via std::invalid_argument.
// Degenerate inputs (empty recoverability denominator, m < k, ...) map to 2.
class DegenerateInput : public std::runtime_error {
public:
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

} // namespace scew

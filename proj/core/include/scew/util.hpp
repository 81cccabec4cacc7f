#pragma once

#include <cstdio>
#include <string>

namespace scew {

// canonical float formatting for all serialized artifacts
inline std::string g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace scew

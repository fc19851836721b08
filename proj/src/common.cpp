// SPDX-License-Identifier: Apache-2.0
#include "impulseper/common.hpp"

#include <charconv>

namespace impulseper {

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace impulseper

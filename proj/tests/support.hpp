#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qhkit/error.hpp"
#include "gen.hpp"
#include "qhkit/geometry.hpp"

namespace qhtest {

/// Runs `prop` on `count` generated cases; the property returns an error
/// message on failure. Stops at the first counterexample.
inline void for_all(std::size_t count, std::uint64_t seed,
                    const std::function<std::optional<std::string>(Gen&)>& prop) {
    Gen gen(seed);
    for (std::size_t i = 0; i < count; ++i) {
        if (auto msg = prop(gen)) {
            ADD_FAILURE() << "counterexample at case " << i << " (seed " << seed << "): " << *msg;
            return;
        }
    }
}

inline std::string describe(const Point& p) { return p.to_string(); }

template <typename... Ts>
std::string cat(const Ts&... parts) {
    std::ostringstream os;
    os.precision(17);
    (os << ... << parts);
    return os.str();
}

}  // namespace qhtest

#define EXPECT_ERROR_KIND(stmt, expected_kind)                                          \
    do {                                                                                \
        try {                                                                           \
            (void)(stmt);                                                               \
            ADD_FAILURE() << #stmt " did not throw";                                    \
        } catch (const qhkit::Error& e_) {                                              \
            EXPECT_EQ(e_.kind(), expected_kind) << e_.what();                           \
        }                                                                               \
    } while (0)

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgproj {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major, all rows equal length
using RatVec = std::vector<Rat>;

// User-facing input problems: bad files, bad expressions, violated preconditions.
// The CLI maps these to exit code 2.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grading does not generate the group; caller should effectivize first.
struct NotEffective : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Operation asked for a chart of an irrelevant element.
struct NotRelevant : InvalidInput {
    using InvalidInput::InvalidInput;
};

// A configured search/step budget was exhausted. Mapped to exit code 3.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

// Floor division; q = floor(a/b) for b > 0, so a - q*b lies in [0, b).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_int(a / gcd_int(a, b) * b);
}

}  // namespace mgproj

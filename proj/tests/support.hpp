#pragma once

#include "stratakit/errors.hpp"
#include "stratakit/spec_io.hpp"

#include <initializer_list>
#include <string>

namespace test {

inline stratakit::ActionSpec bundled(const std::string& name) {
    return stratakit::load_spec_file(std::string(STRATAKIT_DATA_DIR) + "/" + name + ".json");
}

inline stratakit::QVector q(std::initializer_list<long> xs) {
    stratakit::QVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline stratakit::Rational r(const char* text) { return stratakit::parse_rational(text); }

inline stratakit::Angle quarter_turns(long count) {
    stratakit::Rational t(count % 4, 4);
    t.canonicalize();
    return stratakit::Angle::from_turns(t);
}

inline const char* const kAllSpecs[] = {"example", "trivial", "z2_line", "s1_plane", "z2z2_plane"};

} // namespace test

#define CHECK_THROWS_KIND(expr, expected_kind)                                      \
    do {                                                                            \
        bool thrown_ = false;                                                       \
        try {                                                                       \
            (void)(expr);                                                           \
        } catch (const stratakit::Error& e_) {                                      \
            thrown_ = true;                                                         \
            CHECK_MESSAGE(e_.kind() == (expected_kind), std::string(e_.what()));               \
        }                                                                           \
        CHECK_MESSAGE(thrown_, "expected " << stratakit::to_string(expected_kind)); \
    } while (false)

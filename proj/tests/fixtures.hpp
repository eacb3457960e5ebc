#pragma once

// The small networks used throughout the tests, built directly with the
// library constructors (no netspec involved).

#include "softev/core.hpp"
#include "softev/distribution.hpp"
#include "softev/rational.hpp"

namespace fixtures {

using softev::Rational;

inline Rational q(long a, long b = 1) { return Rational(a, b); }

inline softev::Space disease() { return softev::Space("disease", {"d", "~d"}); }
inline softev::Space test() { return softev::Space("test", {"t", "~t"}); }
inline softev::Space certainty() { return softev::Space("certainty", {"c", "~c"}); }

inline softev::State disease_prior(Rational pd = q(1, 100)) {
    return softev::make_state(disease(), {{"d", pd}, {"~d", 1 - pd}});
}

inline softev::Channel sensitivity() {
    return softev::make_channel(disease(), test(),
                                {{"d", {{"t", q(9, 10)}, {"~t", q(1, 10)}}},
                                 {"~d", {{"t", q(1, 20)}, {"~t", q(19, 20)}}}});
}

// Certainty node below the test, for evidence strength r.
inline softev::Channel certainty_channel(Rational r = q(8, 10)) {
    return softev::make_channel(test(), certainty(),
                                {{"t", {{"c", r}, {"~c", 1 - r}}}, {"~t", {{"c", 1 - r}, {"~c", r}}}});
}

inline softev::Predicate positive_evidence() {
    return softev::make_predicate(test(), {{"t", q(8, 10)}, {"~t", q(2, 10)}});
}

inline softev::State positive_state() { return softev::make_state(test(), {{"t", q(8, 10)}, {"~t", q(2, 10)}}); }

inline softev::Space color() { return softev::Space("color", {"r", "b", "g", "y"}); }
inline softev::Space shade() { return softev::Space("shade", {"gb", "ry"}); }

inline softev::State color_prior() {
    return softev::make_state(color(), {{"r", q(1, 5)}, {"b", q(1, 5)}, {"g", q(1, 5)}, {"y", q(2, 5)}});
}

inline softev::Channel darkness() {
    return softev::lift_function(color(), shade(), {{"r", "ry"}, {"b", "gb"}, {"g", "gb"}, {"y", "ry"}});
}

inline softev::State glimpse() { return softev::make_state(shade(), {{"gb", q(7, 10)}, {"ry", q(3, 10)}}); }

inline softev::Predicate glimpse_evidence() {
    return softev::make_predicate(shade(), {{"gb", q(7, 10)}, {"ry", q(3, 10)}});
}

inline softev::Space burglar() { return softev::Space("burglar", {"b", "~b"}); }
inline softev::Space quake() { return softev::Space("quake", {"e", "~e"}); }
inline softev::Space alarm() { return softev::Space("alarm", {"a", "~a"}); }

inline softev::State burglar_prior() {
    return softev::make_state(burglar(), {{"b", q(1, 100)}, {"~b", q(99, 100)}});
}

inline softev::State quake_prior() {
    return softev::make_state(quake(), {{"e", q(1, 1000000)}, {"~e", q(999999, 1000000)}});
}

inline softev::Channel alarm_cpt() {
    auto world = softev::Space::product(burglar(), quake());
    return softev::make_channel(world, alarm(),
                                {{"b,e", {{"a", q(9999, 10000)}, {"~a", q(1, 10000)}}},
                                 {"b,~e", {{"a", q(99, 100)}, {"~a", q(1, 100)}}},
                                 {"~b,e", {{"a", q(99, 100)}, {"~a", q(1, 100)}}},
                                 {"~b,~e", {{"a", q(1, 10000)}, {"~a", q(9999, 10000)}}}});
}

inline softev::Space competence() { return softev::Space("competence", {"c", "~c"}); }
inline softev::Space experience() { return softev::Space("experience", {"e", "~e"}); }

inline softev::State candidate_prior() {
    auto candidate = softev::Space::product(competence(), experience());
    return softev::make_state(candidate,
                              {{"c,e", q(4, 10)}, {"c,~e", q(1, 10)}, {"~c,e", q(1, 10)}, {"~c,~e", q(4, 10)}});
}

}  // namespace fixtures

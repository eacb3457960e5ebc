#pragma once
// Text forms of states, predicates and channels.

#include "softev/distribution.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace softev {

struct RenderOptions {
    bool show_zeros = false;
    /// Decimal digits instead of exact fractions.
    std::optional<int> decimal_digits;
};

/// Ket sum in element order: "1/100|d> + 99/100|~d>".
std::string render_state(const State& sigma, const RenderOptions& options = {});

/// Braced element map: "{ d: 9/10, ~d: 1/20 }". All elements are listed.
std::string render_predicate(const Predicate& p, const RenderOptions& options = {});

/// One line per domain element: "t: 2/13|d> + 11/13|~d>".
std::string render_channel(const Channel& c, const RenderOptions& options = {});

std::string render_scalar(const Rational& value, const RenderOptions& options = {});

/// Reads a ket sum such as "148/4702|d> + 4554/4702|~d>" back into a state
/// on `space`. Weights may be fractions or decimals and need not be reduced.
State parse_ket(const Space& space, std::string_view text);

}  // namespace softev

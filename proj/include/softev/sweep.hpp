#pragma once
// Evidence-strength sweep comparing Jeffrey and Pearl on a binary
// evidence space.

#include "softev/distribution.hpp"
#include "softev/render.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace softev {

struct SweepRow {
    Rational r;
    Rational jeffrey;  // posterior probability of the target element
    Rational pearl;
};

/// Rows r = i/steps, i = 0..steps. Jeffrey uses the state r|y1> + (1-r)|y2>,
/// Pearl the predicate {y1: r, y2: 1-r}, with y1, y2 the codomain elements in
/// order. Throws NonBinaryEvidenceSpace unless the codomain has two elements.
std::vector<SweepRow> sweep(const State& prior, const Channel& c, std::string_view target, int steps);

/// Header `r,jeffrey,pearl`, one line per row.
std::string sweep_csv(const std::vector<SweepRow>& rows, const RenderOptions& options = {});

}  // namespace softev

#include "softev/sweep.hpp"

#include "softev/error.hpp"
#include "softev/update.hpp"

namespace softev {

std::vector<SweepRow> sweep(const State& prior, const Channel& c, std::string_view target, int steps) {
    if (c.codomain().size() != 2) {
        throw ProbError(ErrorKind::NonBinaryEvidenceSpace,
                        "evidence space '" + c.codomain().name() + "' has " + std::to_string(c.codomain().size()) +
                            " elements, expected 2");
    }
    if (steps < 1) {
        throw ProbError(ErrorKind::InvalidValue, "sweep needs at least one step");
    }
    std::size_t target_index = prior.space().index_of(target);
    const Space& evidence = c.codomain();
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        Rational r(i, steps);
        State rho(evidence, {r, 1 - r});
        Predicate q(evidence, {r, 1 - r});
        // At the endpoints rho is a point mass; only that inverted row is needed.
        auto mode = (i == 0 || i == steps) ? JeffreyMode::Relaxed : JeffreyMode::Strict;
        State jeffrey = jeffrey_update(prior, c, rho, mode);
        State pearl = pearl_update(prior, c, q);
        rows.push_back({r, jeffrey[target_index], pearl[target_index]});
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, const RenderOptions& options) {
    std::string out = "r,jeffrey,pearl\n";
    for (const auto& row : rows) {
        out += render_scalar(row.r, options) + "," + render_scalar(row.jeffrey, options) + "," +
               render_scalar(row.pearl, options) + "\n";
    }
    return out;
}

}  // namespace softev

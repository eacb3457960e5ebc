#pragma once
// Brute-force reference computations over materialized joint tables.
//
// Nothing here calls the transformation or conditioning operators; every
// result is obtained by enumerating (x, y) cells and summing. Tests compare
// these against the library to catch errors in either route.

#include "softev/distribution.hpp"
#include "softev/rational.hpp"

#include <functional>
#include <vector>

namespace softev::oracle {

/// mass[x][y] over domain x codomain, total exactly 1.
struct JointTable {
    Space domain;
    Space codomain;
    std::vector<std::vector<Rational>> mass;

    friend bool operator==(const JointTable&, const JointTable&) = default;
};

/// mass(x, y) = sigma(x) * c(x)(y).
JointTable joint(const State& sigma, const Channel& c);

/// Views a state on a product space L x R as a joint table over L, R.
/// Throws NotAProductSpace.
JointTable from_product_state(const State& tau);

using CellWeight = std::function<Rational(std::size_t x, std::size_t y)>;

/// mass(x, y) proportional to joint(x, y) * weight(x, y). Throws ZeroMass.
JointTable oracle_condition(const JointTable& joint, const CellWeight& weight);

State domain_marginal(const JointTable& joint);
State codomain_marginal(const JointTable& joint);

/// sum_y rho(y) * (domain marginal of joint conditioned on y). Throws
/// ZeroMass when some y with rho(y) > 0 carries no mass.
State oracle_jeffrey(const JointTable& joint, const State& rho);

/// Domain marginal of the joint conditioned on the cell y, for every y.
/// Throws ZeroMass at a y without mass.
std::vector<State> oracle_inverted_rows(const JointTable& joint);

/// Pearl by enumeration: weight(x, y) = q(y).
State oracle_pearl(const State& sigma, const Channel& c, const Predicate& q);

/// Plain conditioning by enumeration: weight(x, y) = p(x) over a trivial
/// channel.
State oracle_condition_state(const State& sigma, const Predicate& p);

}  // namespace softev::oracle

#pragma once
// State/predicate transformation, validity and conditioning along channels.

#include "softev/distribution.hpp"
#include "softev/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace softev {

/// c >> sigma: (c >> sigma)(y) = sum_x sigma(x) * c(x)(y).
State state_transform(const Channel& c, const State& sigma);

/// c << q: (c << q)(x) = sum_y c(x)(y) * q(y).
Predicate predicate_transform(const Channel& c, const Predicate& q);

/// sigma |= p, the expected value of p.
Rational validity(const State& sigma, const Predicate& p);

/// sigma|_p. Throws ZeroValidity when sigma |= p is 0.
State condition(const State& sigma, const Predicate& p);

/// d . c: first c, then d.
Channel compose(const Channel& d, const Channel& c);

Channel identity_channel(const Space& space);

/// Deterministic channel x -> 1|f(x)>. `mapping` lists (x, f(x)) pairs and
/// must cover the domain.
Channel lift_function(const Space& domain, const Space& codomain,
                      const std::vector<std::pair<std::string, std::string>>& mapping);

State product_state(const State& sigma, const State& omega);

enum class Side { First, Second };

/// Throws NotAProductSpace unless tau lives on a product.
State marginal(const State& tau, Side which);

/// Deterministic projection channel from a product space onto one factor.
Channel projection(const Space& product, Side which);

// Predicate algebra.
Predicate truth(const Space& space);
Predicate falsity(const Space& space);
Predicate point(const Space& space, std::string_view element);
Predicate indicator(const Space& space, const std::vector<std::string>& subset);
/// Pointwise product p & q.
Predicate conjunction(const Predicate& p, const Predicate& q);
/// s * p for s in [0,1].
Predicate scale(const Rational& s, const Predicate& p);
/// Pointwise 1 - p.
Predicate negation(const Predicate& p);

}  // namespace softev

#pragma once
// Seeded generators of small exact instances for randomized law checking.

#include "softev/distribution.hpp"

#include <cstdint>
#include <random>

namespace softev {

struct InstanceLimits {
    std::size_t max_size = 5;
    long max_denominator = 20;
};

class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed, InstanceLimits limits = {});

    /// Space of size in [min_size, max_size], named `name`.
    Space space(const std::string& name, std::size_t min_size = 1);
    /// Weights k_i / D with D <= max_denominator; full support on request
    /// (needs D >= size, so D may then exceed the limit for large spaces).
    State state(const Space& space, bool full_support = false);
    /// Values a / b with b <= max_denominator.
    Predicate predicate(const Space& space, bool nonzero = false);
    Channel channel(const Space& domain, const Space& codomain, bool full_support_rows = false);
    /// A function X -> I as (x, f(x)) pairs.
    std::vector<std::pair<std::string, std::string>> function(const Space& domain, const Space& codomain);
    Rational unit_rational(bool nonzero = false);
    long integer(long low, long high);

private:
    std::mt19937_64 rng_;
    InstanceLimits limits_;
};

}  // namespace softev

#include "softev/random_instances.hpp"

namespace softev {

InstanceGenerator::InstanceGenerator(std::uint64_t seed, InstanceLimits limits) : rng_(seed), limits_(limits) {}

long InstanceGenerator::integer(long low, long high) { return std::uniform_int_distribution<long>(low, high)(rng_); }

Space InstanceGenerator::space(const std::string& name, std::size_t min_size) {
    auto size = static_cast<std::size_t>(integer(static_cast<long>(min_size), static_cast<long>(limits_.max_size)));
    std::vector<std::string> elements;
    for (std::size_t i = 0; i < size; ++i) {
        elements.push_back(name + std::to_string(i));
    }
    return Space(name, std::move(elements));
}

State InstanceGenerator::state(const Space& space, bool full_support) {
    const auto n = static_cast<long>(space.size());
    long denominator = integer(full_support ? n : 1, std::max(limits_.max_denominator, full_support ? n : 1L));
    // Random composition of the denominator into n parts (each >= 1 when
    // full support is required).
    long spare = full_support ? denominator - n : denominator;
    std::vector<long> parts(space.size(), full_support ? 1 : 0);
    for (long unit = 0; unit < spare; ++unit) {
        parts[static_cast<std::size_t>(integer(0, n - 1))] += 1;
    }
    std::vector<Rational> weights;
    for (long k : parts) {
        weights.emplace_back(k, denominator);
    }
    return State(space, std::move(weights));
}

Rational InstanceGenerator::unit_rational(bool nonzero) {
    long b = integer(1, limits_.max_denominator);
    long a = integer(nonzero ? 1 : 0, b);
    return Rational(a, b);
}

Predicate InstanceGenerator::predicate(const Space& space, bool nonzero) {
    std::vector<Rational> values;
    for (std::size_t i = 0; i < space.size(); ++i) {
        values.push_back(unit_rational(nonzero));
    }
    return Predicate(space, std::move(values));
}

Channel InstanceGenerator::channel(const Space& domain, const Space& codomain, bool full_support_rows) {
    std::vector<State> rows;
    for (std::size_t x = 0; x < domain.size(); ++x) {
        rows.push_back(state(codomain, full_support_rows));
    }
    return Channel(domain, codomain, std::move(rows));
}

std::vector<std::pair<std::string, std::string>> InstanceGenerator::function(const Space& domain,
                                                                               const Space& codomain) {
    std::vector<std::pair<std::string, std::string>> mapping;
    for (const auto& x : domain.elements()) {
        mapping.emplace_back(x, codomain.element(static_cast<std::size_t>(
                                    integer(0, static_cast<long>(codomain.size()) - 1))));
    }
    return mapping;
}

}  // namespace softev

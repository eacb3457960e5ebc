#pragma once
// States, predicates and channels over finite spaces.

#include "softev/rational.hpp"
#include "softev/space.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace softev {

/// (element, value) pairs; elements left out mean exactly 0.
using Entries = std::vector<std::pair<std::string, Rational>>;

/// A probability distribution on a space. Weights are stored in the
/// space's element order, zeros included, and sum to exactly 1.
class State {
public:
    /// Throws ProbError(InvalidValue) for a weight outside [0,1] or a size
    /// mismatch and ProbError(WeightSumNotOne) when the sum is not 1.
    State(Space space, std::vector<Rational> weights);

    const Space& space() const { return space_; }
    std::span<const Rational> weights() const { return weights_; }
    const Rational& operator[](std::size_t index) const { return weights_[index]; }
    const Rational& weight(std::string_view element) const;
    std::size_t size() const { return weights_.size(); }

    bool has_full_support() const;

    friend bool operator==(const State&, const State&) = default;

private:
    Space space_;
    std::vector<Rational> weights_;
};

/// A fuzzy predicate: every element gets a value in [0,1].
class Predicate {
public:
    Predicate(Space space, std::vector<Rational> values);

    const Space& space() const { return space_; }
    std::span<const Rational> values() const { return values_; }
    const Rational& operator[](std::size_t index) const { return values_[index]; }
    const Rational& value(std::string_view element) const;
    std::size_t size() const { return values_.size(); }

    friend bool operator==(const Predicate&, const Predicate&) = default;

private:
    Space space_;
    std::vector<Rational> values_;
};

/// A stochastic map from domain elements to states on the codomain.
class Channel {
public:
    /// One row per domain element, in domain order, each a State on the
    /// codomain.
    Channel(Space domain, Space codomain, std::vector<State> rows);

    const Space& domain() const { return domain_; }
    const Space& codomain() const { return codomain_; }
    const State& row(std::size_t index) const { return rows_[index]; }
    const State& row(std::string_view element) const;
    std::span<const State> rows() const { return rows_; }
    /// c(x)(y)
    const Rational& operator()(std::size_t x, std::size_t y) const { return rows_[x][y]; }

    /// Every row is a point mass.
    bool is_deterministic() const;

    friend bool operator==(const Channel&, const Channel&) = default;

private:
    Space domain_;
    Space codomain_;
    std::vector<State> rows_;
};

/// Errors: UnknownElement, DuplicateElement, InvalidValue, WeightSumNotOne.
State make_state(const Space& space, const Entries& weights);
/// Absent elements get value 0. Errors as make_state minus the sum check.
Predicate make_predicate(const Space& space, const Entries& values);
/// Rows keyed by domain element; every domain element needs a row
/// (MissingEntry otherwise).
Channel make_channel(const Space& domain, const Space& codomain,
                     const std::vector<std::pair<std::string, Entries>>& rows);

State point_state(const Space& space, std::string_view element);
State uniform_state(const Space& space);

}  // namespace softev

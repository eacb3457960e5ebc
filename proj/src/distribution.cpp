#include "softev/distribution.hpp"

#include "softev/error.hpp"

#include <numeric>
#include <optional>
#include <unordered_set>

namespace softev {

namespace {

std::vector<Rational> dense_values(const Space& space, const Entries& entries, std::string_view what) {
    std::vector<Rational> values(space.size());
    std::unordered_set<std::size_t> seen;
    for (const auto& [element, value] : entries) {
        std::size_t index = space.index_of(element);
        if (!seen.insert(index).second) {
            throw ProbError(ErrorKind::DuplicateElement,
                            std::string(what) + " lists '" + element + "' twice");
        }
        values[index] = value;
    }
    return values;
}

void check_unit_interval(const Space& space, std::span<const Rational> values, std::string_view what) {
    if (values.size() != space.size()) {
        throw ProbError(ErrorKind::InvalidValue, std::string(what) + " has " + std::to_string(values.size()) +
                                                     " entries for space '" + space.name() + "' of size " +
                                                     std::to_string(space.size()));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!in_unit_interval(values[i])) {
            throw ProbError(ErrorKind::InvalidValue, std::string(what) + " value " + to_fraction(values[i]) +
                                                         " at '" + space.element(i) + "' is outside [0,1]");
        }
    }
}

}  // namespace

State::State(Space space, std::vector<Rational> weights) : space_(std::move(space)), weights_(std::move(weights)) {
    check_unit_interval(space_, weights_, "state");
    Rational total = std::accumulate(weights_.begin(), weights_.end(), Rational(0));
    if (total != 1) {
        throw ProbError(ErrorKind::WeightSumNotOne, "weights sum to " + to_fraction(total) + ", expected 1");
    }
}

const Rational& State::weight(std::string_view element) const { return weights_[space_.index_of(element)]; }

bool State::has_full_support() const {
    for (const auto& w : weights_) {
        if (w == 0) {
            return false;
        }
    }
    return true;
}

Predicate::Predicate(Space space, std::vector<Rational> values) : space_(std::move(space)), values_(std::move(values)) {
    check_unit_interval(space_, values_, "predicate");
}

const Rational& Predicate::value(std::string_view element) const { return values_[space_.index_of(element)]; }

Channel::Channel(Space domain, Space codomain, std::vector<State> rows)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), rows_(std::move(rows)) {
    if (rows_.size() != domain_.size()) {
        throw ProbError(ErrorKind::MissingEntry, "channel needs " + std::to_string(domain_.size()) +
                                                     " rows, got " + std::to_string(rows_.size()));
    }
    for (std::size_t x = 0; x < rows_.size(); ++x) {
        require_same_space(codomain_, rows_[x].space(), "channel row '" + domain_.element(x) + "'");
    }
}

const State& Channel::row(std::string_view element) const { return rows_[domain_.index_of(element)]; }

bool Channel::is_deterministic() const {
    for (const auto& r : rows_) {
        bool point = false;
        for (const auto& w : r.weights()) {
            if (w == 1) {
                point = true;
            }
        }
        if (!point) {
            return false;
        }
    }
    return true;
}

State make_state(const Space& space, const Entries& weights) {
    return State(space, dense_values(space, weights, "state"));
}

Predicate make_predicate(const Space& space, const Entries& values) {
    return Predicate(space, dense_values(space, values, "predicate"));
}

Channel make_channel(const Space& domain, const Space& codomain,
                     const std::vector<std::pair<std::string, Entries>>& rows) {
    std::vector<std::optional<State>> dense(domain.size());
    for (const auto& [element, entries] : rows) {
        std::size_t index = domain.index_of(element);
        if (dense[index]) {
            throw ProbError(ErrorKind::DuplicateElement, "channel row '" + element + "' given twice");
        }
        dense[index] = make_state(codomain, entries);
    }
    std::vector<State> result;
    result.reserve(dense.size());
    for (std::size_t x = 0; x < dense.size(); ++x) {
        if (!dense[x]) {
            throw ProbError(ErrorKind::MissingEntry, "channel has no row for '" + domain.element(x) + "'");
        }
        result.push_back(std::move(*dense[x]));
    }
    return Channel(domain, codomain, std::move(result));
}

State point_state(const Space& space, std::string_view element) {
    std::vector<Rational> weights(space.size());
    weights[space.index_of(element)] = 1;
    return State(space, std::move(weights));
}

State uniform_state(const Space& space) {
    return State(space, std::vector<Rational>(space.size(), Rational(1, static_cast<long>(space.size()))));
}

}  // namespace softev

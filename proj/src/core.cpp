#include "softev/core.hpp"

#include "softev/error.hpp"

#include <optional>

namespace softev {

State state_transform(const Channel& c, const State& sigma) {
    require_same_space(c.domain(), sigma.space(), "state transformation");
    std::vector<Rational> out(c.codomain().size());
    for (std::size_t x = 0; x < sigma.size(); ++x) {
        if (sigma[x] == 0) {
            continue;
        }
        for (std::size_t y = 0; y < out.size(); ++y) {
            out[y] += sigma[x] * c(x, y);
        }
    }
    return State(c.codomain(), std::move(out));
}

Predicate predicate_transform(const Channel& c, const Predicate& q) {
    require_same_space(c.codomain(), q.space(), "predicate transformation");
    std::vector<Rational> out(c.domain().size());
    for (std::size_t x = 0; x < out.size(); ++x) {
        for (std::size_t y = 0; y < q.size(); ++y) {
            out[x] += c(x, y) * q[y];
        }
    }
    return Predicate(c.domain(), std::move(out));
}

Rational validity(const State& sigma, const Predicate& p) {
    require_same_space(sigma.space(), p.space(), "validity");
    Rational total;
    for (std::size_t x = 0; x < sigma.size(); ++x) {
        total += sigma[x] * p[x];
    }
    return total;
}

State condition(const State& sigma, const Predicate& p) {
    Rational v = validity(sigma, p);
    if (v == 0) {
        throw ProbError(ErrorKind::ZeroValidity, "predicate has validity 0, conditioning is undefined");
    }
    std::vector<Rational> out(sigma.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
        out[x] = sigma[x] * p[x] / v;
    }
    return State(sigma.space(), std::move(out));
}

Channel compose(const Channel& d, const Channel& c) {
    require_same_space(d.domain(), c.codomain(), "channel composition");
    std::vector<State> rows;
    rows.reserve(c.domain().size());
    for (const auto& row : c.rows()) {
        rows.push_back(state_transform(d, row));
    }
    return Channel(c.domain(), d.codomain(), std::move(rows));
}

Channel identity_channel(const Space& space) {
    std::vector<State> rows;
    rows.reserve(space.size());
    for (const auto& x : space.elements()) {
        rows.push_back(point_state(space, x));
    }
    return Channel(space, space, std::move(rows));
}

Channel lift_function(const Space& domain, const Space& codomain,
                      const std::vector<std::pair<std::string, std::string>>& mapping) {
    std::vector<std::optional<State>> rows(domain.size());
    for (const auto& [x, fx] : mapping) {
        std::size_t index = domain.index_of(x);
        if (rows[index]) {
            throw ProbError(ErrorKind::DuplicateElement, "function maps '" + x + "' twice");
        }
        rows[index] = point_state(codomain, fx);
    }
    std::vector<State> dense;
    dense.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i]) {
            throw ProbError(ErrorKind::MissingEntry, "function has no image for '" + domain.element(i) + "'");
        }
        dense.push_back(std::move(*rows[i]));
    }
    return Channel(domain, codomain, std::move(dense));
}

State product_state(const State& sigma, const State& omega) {
    Space space = Space::product(sigma.space(), omega.space());
    std::vector<Rational> weights;
    weights.reserve(space.size());
    for (const auto& a : sigma.weights()) {
        for (const auto& b : omega.weights()) {
            weights.push_back(a * b);
        }
    }
    return State(std::move(space), std::move(weights));
}

State marginal(const State& tau, Side which) {
    const Space& space = tau.space();
    const Space& left = space.left();
    const Space& right = space.right();
    std::vector<Rational> out(which == Side::First ? left.size() : right.size());
    for (std::size_t l = 0; l < left.size(); ++l) {
        for (std::size_t r = 0; r < right.size(); ++r) {
            out[which == Side::First ? l : r] += tau[space.pair_index(l, r)];
        }
    }
    return State(which == Side::First ? left : right, std::move(out));
}

Channel projection(const Space& product, Side which) {
    const Space& left = product.left();
    const Space& right = product.right();
    std::vector<State> rows;
    rows.reserve(product.size());
    for (std::size_t l = 0; l < left.size(); ++l) {
        for (std::size_t r = 0; r < right.size(); ++r) {
            rows.push_back(which == Side::First ? point_state(left, left.element(l))
                                                : point_state(right, right.element(r)));
        }
    }
    return Channel(product, which == Side::First ? left : right, std::move(rows));
}

Predicate truth(const Space& space) { return Predicate(space, std::vector<Rational>(space.size(), Rational(1))); }

Predicate falsity(const Space& space) { return Predicate(space, std::vector<Rational>(space.size())); }

Predicate point(const Space& space, std::string_view element) {
    std::vector<Rational> values(space.size());
    values[space.index_of(element)] = 1;
    return Predicate(space, std::move(values));
}

Predicate indicator(const Space& space, const std::vector<std::string>& subset) {
    std::vector<Rational> values(space.size());
    for (const auto& element : subset) {
        values[space.index_of(element)] = 1;
    }
    return Predicate(space, std::move(values));
}

Predicate conjunction(const Predicate& p, const Predicate& q) {
    require_same_space(p.space(), q.space(), "conjunction");
    std::vector<Rational> values(p.size());
    for (std::size_t x = 0; x < values.size(); ++x) {
        values[x] = p[x] * q[x];
    }
    return Predicate(p.space(), std::move(values));
}

Predicate scale(const Rational& s, const Predicate& p) {
    if (!in_unit_interval(s)) {
        throw ProbError(ErrorKind::InvalidValue, "scalar " + to_fraction(s) + " is outside [0,1]");
    }
    std::vector<Rational> values(p.size());
    for (std::size_t x = 0; x < values.size(); ++x) {
        values[x] = s * p[x];
    }
    return Predicate(p.space(), std::move(values));
}

Predicate negation(const Predicate& p) {
    std::vector<Rational> values(p.size());
    for (std::size_t x = 0; x < values.size(); ++x) {
        values[x] = 1 - p[x];
    }
    return Predicate(p.space(), std::move(values));
}

}  // namespace softev

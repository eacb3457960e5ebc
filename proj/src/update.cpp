#include "softev/update.hpp"

#include "softev/error.hpp"

#include <algorithm>

namespace softev {

Event::Event(Space space, const std::vector<std::string>& members)
    : space_(std::move(space)), mask_(space_.size(), false) {
    for (const auto& m : members) {
        std::size_t index = space_.index_of(m);
        if (mask_[index]) {
            throw ProbError(ErrorKind::DuplicateElement, "event lists '" + m + "' twice");
        }
        mask_[index] = true;
    }
}

std::vector<std::string> Event::members() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < mask_.size(); ++i) {
        if (mask_[i]) {
            out.push_back(space_.element(i));
        }
    }
    return out;
}

bool Event::empty() const { return std::none_of(mask_.begin(), mask_.end(), [](bool b) { return b; }); }

bool Event::proper() const { return !std::all_of(mask_.begin(), mask_.end(), [](bool b) { return b; }); }

Predicate Event::indicator() const {
    std::vector<Rational> values(mask_.size());
    for (std::size_t i = 0; i < mask_.size(); ++i) {
        values[i] = mask_[i] ? 1 : 0;
    }
    return Predicate(space_, std::move(values));
}

std::string_view to_string(Rule rule) {
    switch (rule) {
        case Rule::Jeffrey: return "jeffrey";
        case Rule::Pearl: return "pearl";
        case Rule::ATC: return "atc";
        case Rule::NEC: return "nec";
        case Rule::Blend: return "blend";
    }
    return "unknown";
}

namespace {

// sigma|_{c << 1_y}, assuming (c >> sigma)(y) > 0.
State inverted_row(const Channel& c, const State& sigma, std::size_t y) {
    return condition(sigma, predicate_transform(c, point(c.codomain(), c.codomain().element(y))));
}

[[noreturn]] void not_full_support(const Channel& c, std::size_t y) {
    throw ProbError(ErrorKind::NotFullSupport,
                    "predicted state gives '" + c.codomain().element(y) + "' probability 0, cannot invert");
}

void require_event(const Event& event, const State& omega) {
    require_same_space(omega.space(), event.space(), "event");
    if (event.empty() || !event.proper()) {
        throw ProbError(ErrorKind::DegenerateEvent, "event must be a nonempty proper subset");
    }
}

// (omega |= 1_E, omega |= 1_{not E})
std::pair<Rational, Rational> event_masses(const State& omega, const Event& event) {
    Rational inside;
    Rational outside;
    for (std::size_t x = 0; x < omega.size(); ++x) {
        (event.contains(x) ? inside : outside) += omega[x];
    }
    return {inside, outside};
}

}  // namespace

Channel dagger(const Channel& c, const State& sigma) {
    require_same_space(c.domain(), sigma.space(), "dagger");
    State predicted = state_transform(c, sigma);
    std::vector<State> rows;
    rows.reserve(predicted.size());
    for (std::size_t y = 0; y < predicted.size(); ++y) {
        if (predicted[y] == 0) {
            not_full_support(c, y);
        }
        rows.push_back(inverted_row(c, sigma, y));
    }
    return Channel(c.codomain(), c.domain(), std::move(rows));
}

UpdateReport pearl_report(const State& sigma, const Channel& c, const Predicate& q) {
    require_same_space(c.domain(), sigma.space(), "pearl prior");
    Predicate transformed = predicate_transform(c, q);
    Rational v = validity(sigma, transformed);
    State posterior = condition(sigma, transformed);
    UpdateReport report{Rule::Pearl, sigma, PredicateEvidence{q}, std::move(posterior)};
    report.predicted = state_transform(c, sigma);
    report.transformed = std::move(transformed);
    report.evidence_validity = std::move(v);
    return report;
}

State pearl_update(const State& sigma, const Channel& c, const Predicate& q) {
    return condition(sigma, predicate_transform(c, q));
}

UpdateReport jeffrey_report(const State& sigma, const Channel& c, const State& rho, JeffreyMode mode) {
    require_same_space(c.domain(), sigma.space(), "jeffrey prior");
    require_same_space(c.codomain(), rho.space(), "jeffrey evidence");
    State predicted = state_transform(c, sigma);
    std::optional<Channel> inverted;
    std::vector<Rational> out(sigma.size());
    if (mode == JeffreyMode::Strict) {
        inverted = dagger(c, sigma);
        State posterior = state_transform(*inverted, rho);
        out.assign(posterior.weights().begin(), posterior.weights().end());
    } else {
        for (std::size_t y = 0; y < rho.size(); ++y) {
            if (rho[y] == 0) {
                continue;
            }
            if (predicted[y] == 0) {
                not_full_support(c, y);
            }
            State row = inverted_row(c, sigma, y);
            for (std::size_t x = 0; x < out.size(); ++x) {
                out[x] += rho[y] * row[x];
            }
        }
    }
    UpdateReport report{Rule::Jeffrey, sigma, StateEvidence{rho}, State(sigma.space(), std::move(out))};
    report.predicted = std::move(predicted);
    report.inverted = std::move(inverted);
    return report;
}

State jeffrey_update(const State& sigma, const Channel& c, const State& rho, JeffreyMode mode) {
    if (mode == JeffreyMode::Strict) {
        require_same_space(c.codomain(), rho.space(), "jeffrey evidence");
        return state_transform(dagger(c, sigma), rho);
    }
    return jeffrey_report(sigma, c, rho, mode).posterior;
}

Predicate state_to_predicate_ratio(const State& rho, const State& tau) {
    require_same_space(tau.space(), rho.space(), "state ratio");
    std::vector<Rational> ratios(rho.size());
    Rational max_ratio;
    for (std::size_t y = 0; y < rho.size(); ++y) {
        if (rho[y] == 0) {
            continue;
        }
        if (tau[y] == 0) {
            throw ProbError(ErrorKind::DivisionBySupportGap,
                            "'" + rho.space().element(y) + "' has positive weight but reference weight 0");
        }
        ratios[y] = rho[y] / tau[y];
        max_ratio = std::max(max_ratio, ratios[y]);
    }
    for (auto& r : ratios) {
        r /= max_ratio;
    }
    return Predicate(rho.space(), std::move(ratios));
}

Predicate state_to_predicate(const State& sigma) {
    return Predicate(sigma.space(), std::vector<Rational>(sigma.weights().begin(), sigma.weights().end()));
}

State normalize_predicate(const Predicate& p) {
    Rational total;
    for (const auto& v : p.values()) {
        total += v;
    }
    if (total == 0) {
        throw ProbError(ErrorKind::ZeroValidity, "cannot normalize the zero predicate");
    }
    std::vector<Rational> weights(p.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        weights[i] = p[i] / total;
    }
    return State(p.space(), std::move(weights));
}

State partition_jeffrey(const Channel& f, const State& omega, const State& rho) {
    require_same_space(f.domain(), omega.space(), "partition prior");
    require_same_space(f.codomain(), rho.space(), "partition evidence");
    if (!f.is_deterministic()) {
        throw ProbError(ErrorKind::NotDeterministic, "partition channel must map every element to a point");
    }
    std::vector<std::size_t> block(omega.size());
    std::vector<Rational> block_mass(rho.size());
    for (std::size_t x = 0; x < omega.size(); ++x) {
        const auto& row = f.row(x).weights();
        block[x] = static_cast<std::size_t>(std::find(row.begin(), row.end(), Rational(1)) - row.begin());
        block_mass[block[x]] += omega[x];
    }
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] > 0 && block_mass[i] == 0) {
            throw ProbError(ErrorKind::EmptyBlockWithMass,
                            "block '" + rho.space().element(i) + "' has no prior mass but positive new weight");
        }
    }
    std::vector<Rational> out(omega.size());
    for (std::size_t x = 0; x < omega.size(); ++x) {
        std::size_t i = block[x];
        if (rho[i] != 0) {
            out[x] = rho[i] * omega[x] / block_mass[i];
        }
    }
    return State(omega.space(), std::move(out));
}

UpdateReport atc_report(const State& omega, const Event& event, const Rational& q) {
    require_event(event, omega);
    if (!in_unit_interval(q)) {
        throw ProbError(ErrorKind::InvalidValue, "event strength " + to_fraction(q) + " is outside [0,1]");
    }
    auto [inside, outside] = event_masses(omega, event);
    if ((q > 0 && inside == 0) || (q < 1 && outside == 0)) {
        throw ProbError(ErrorKind::DegenerateEvent,
                        "prior gives the event probability " + to_fraction(inside) + ", cannot move it to " +
                            to_fraction(q));
    }
    std::vector<Rational> out(omega.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
        if (event.contains(x)) {
            out[x] = q == 0 ? Rational(0) : Rational(q * omega[x] / inside);
        } else {
            out[x] = q == 1 ? Rational(0) : Rational((1 - q) * omega[x] / outside);
        }
    }
    UpdateReport report{Rule::ATC, omega, EventStrength{event, q}, State(omega.space(), std::move(out))};
    report.evidence_validity = inside;
    return report;
}

State atc_update(const State& omega, const Event& event, const Rational& q) {
    return atc_report(omega, event, q).posterior;
}

UpdateReport nec_report(const State& omega, const Event& event, const Rational& k) {
    require_event(event, omega);
    if (k <= 0) {
        throw ProbError(ErrorKind::InvalidValue, "Bayes factor " + to_fraction(k) + " must be positive");
    }
    auto [inside, outside] = event_masses(omega, event);
    Rational denominator = k * inside + outside;
    if (denominator == 0) {
        throw ProbError(ErrorKind::DegenerateDenominator, "k * Pr(E) + Pr(not E) is 0");
    }
    std::vector<Rational> out(omega.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
        out[x] = (event.contains(x) ? k * omega[x] : omega[x]) / denominator;
    }
    UpdateReport report{Rule::NEC, omega, BayesFactor{event, k}, State(omega.space(), std::move(out))};
    // The equivalent Pearl predicate, scaled so its larger value is 1.
    Rational top = std::max(k, Rational(1));
    std::vector<Rational> values(omega.size());
    for (std::size_t x = 0; x < values.size(); ++x) {
        values[x] = event.contains(x) ? Rational(k / top) : Rational(1 / top);
    }
    report.transformed = Predicate(omega.space(), std::move(values));
    report.evidence_validity = inside;
    return report;
}

State nec_update(const State& omega, const Event& event, const Rational& k) {
    return nec_report(omega, event, k).posterior;
}

State blend_update(const Rational& s, const State& jr, const State& pr) {
    require_same_space(jr.space(), pr.space(), "blend");
    if (!in_unit_interval(s)) {
        throw ProbError(ErrorKind::InvalidValue, "blend weight " + to_fraction(s) + " is outside [0,1]");
    }
    std::vector<Rational> out(jr.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
        out[x] = s * jr[x] + (1 - s) * pr[x];
    }
    return State(jr.space(), std::move(out));
}

Rational total_variation(const State& sigma, const State& other) {
    require_same_space(sigma.space(), other.space(), "total variation");
    Rational total;
    for (std::size_t x = 0; x < sigma.size(); ++x) {
        total += abs(sigma[x] - other[x]);
    }
    return total;
}

State forward_inference(const State& sigma, const Channel& c, const Predicate& p) {
    return state_transform(c, condition(sigma, p));
}

}  // namespace softev

#pragma once
// Bayesian inversion and the soft-evidence update rules.

#include "softev/core.hpp"
#include "softev/distribution.hpp"
#include "softev/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace softev {

/// A subset of a space, stored as a membership mask in element order.
class Event {
public:
    /// Throws UnknownElement / DuplicateElement.
    Event(Space space, const std::vector<std::string>& members);

    const Space& space() const { return space_; }
    bool contains(std::size_t index) const { return mask_[index]; }
    std::vector<std::string> members() const;
    bool empty() const;
    bool proper() const;
    Predicate indicator() const;

    friend bool operator==(const Event&, const Event&) = default;

private:
    Space space_;
    std::vector<bool> mask_;
};

struct PredicateEvidence {
    Predicate predicate;
};
struct StateEvidence {
    State state;
};
/// "All things considered": the event should end up with validity q.
struct EventStrength {
    Event event;
    Rational q;
};
/// "Nothing else considered": a Bayes factor k > 0 in favour of the event.
struct BayesFactor {
    Event event;
    Rational k;
};

using Evidence = std::variant<PredicateEvidence, StateEvidence, EventStrength, BayesFactor>;

enum class Rule { Jeffrey, Pearl, ATC, NEC, Blend };

std::string_view to_string(Rule rule);

/// What an update did, kept for step-by-step explanations.
struct UpdateReport {
    Rule rule;
    State prior;
    std::optional<Evidence> evidence;  // absent for Blend
    State posterior;

    // Intermediates; which are present depends on the rule.
    std::optional<State> predicted = std::nullopt;             // c >> prior
    std::optional<Predicate> transformed = std::nullopt;       // c << q
    std::optional<Rational> evidence_validity = std::nullopt;  // prior |= c << q
    std::optional<Channel> inverted = std::nullopt;            // dagger rows
};

enum class JeffreyMode {
    Strict,   // c >> sigma must have full support
    Relaxed,  // only rows y with rho(y) > 0 are needed
};

/// c^dagger_sigma: row y is sigma|_{c << 1_y}. Throws NotFullSupport naming
/// the first y with (c >> sigma)(y) = 0.
Channel dagger(const Channel& c, const State& sigma);

/// Pearl: sigma|_{c << q}.
State pearl_update(const State& sigma, const Channel& c, const Predicate& q);
UpdateReport pearl_report(const State& sigma, const Channel& c, const Predicate& q);

/// Jeffrey: c^dagger_sigma >> rho.
State jeffrey_update(const State& sigma, const Channel& c, const State& rho,
                     JeffreyMode mode = JeffreyMode::Strict);
UpdateReport jeffrey_report(const State& sigma, const Channel& c, const State& rho,
                            JeffreyMode mode = JeffreyMode::Strict);

/// rho/tau divided by its maximum, so the largest value is exactly 1.
/// Throws DivisionBySupportGap where rho > 0 but tau = 0.
Predicate state_to_predicate_ratio(const State& rho, const State& tau);

/// A state read as a predicate (weights are in [0,1]).
Predicate state_to_predicate(const State& sigma);
/// p / sum(p). Throws ZeroValidity for the zero predicate.
State normalize_predicate(const Predicate& p);

/// Jeffrey on a deterministic channel, computed blockwise as
/// sum_i rho(i) * omega|_{1_{U_i}}. Throws NotDeterministic,
/// EmptyBlockWithMass.
State partition_jeffrey(const Channel& f, const State& omega, const State& rho);

/// Event E gets posterior validity exactly q; inside and outside E the
/// prior's proportions are kept.
State atc_update(const State& omega, const Event& event, const Rational& q);
UpdateReport atc_report(const State& omega, const Event& event, const Rational& q);

/// Bayes factor k on E: weight k * omega(x) inside E, omega(x) outside,
/// renormalized.
State nec_update(const State& omega, const Event& event, const Rational& k);
UpdateReport nec_report(const State& omega, const Event& event, const Rational& k);

/// s * jr + (1 - s) * pr.
State blend_update(const Rational& s, const State& jr, const State& pr);

/// sum_x |sigma(x) - sigma'(x)|, without the customary 1/2.
Rational total_variation(const State& sigma, const State& other);

/// c >> (sigma|_p).
State forward_inference(const State& sigma, const Channel& c, const Predicate& p);

}  // namespace softev

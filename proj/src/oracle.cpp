#include "softev/oracle.hpp"

#include "softev/error.hpp"

namespace softev::oracle {

namespace {

Rational total_mass(const JointTable& joint) {
    Rational total;
    for (const auto& row : joint.mass) {
        for (const auto& m : row) {
            total += m;
        }
    }
    return total;
}

}  // namespace

JointTable joint(const State& sigma, const Channel& c) {
    if (!(sigma.space() == c.domain())) {
        throw ProbError(ErrorKind::SpaceMismatch, "oracle joint: prior and channel domain differ");
    }
    JointTable table{c.domain(), c.codomain(), {}};
    table.mass.assign(c.domain().size(), std::vector<Rational>(c.codomain().size()));
    for (std::size_t x = 0; x < c.domain().size(); ++x) {
        for (std::size_t y = 0; y < c.codomain().size(); ++y) {
            table.mass[x][y] = sigma[x] * c(x, y);
        }
    }
    return table;
}

JointTable from_product_state(const State& tau) {
    const Space& space = tau.space();
    JointTable table{space.left(), space.right(), {}};
    table.mass.assign(space.left().size(), std::vector<Rational>(space.right().size()));
    // Left-major order: cell (l, r) sits at l * |right| + r.
    for (std::size_t i = 0; i < tau.size(); ++i) {
        table.mass[i / space.right().size()][i % space.right().size()] = tau[i];
    }
    return table;
}

JointTable oracle_condition(const JointTable& joint, const CellWeight& weight) {
    JointTable out = joint;
    for (std::size_t x = 0; x < out.mass.size(); ++x) {
        for (std::size_t y = 0; y < out.mass[x].size(); ++y) {
            out.mass[x][y] *= weight(x, y);
        }
    }
    Rational total = total_mass(out);
    if (total == 0) {
        throw ProbError(ErrorKind::ZeroMass, "oracle: weighted joint has no mass");
    }
    for (auto& row : out.mass) {
        for (auto& m : row) {
            m /= total;
        }
    }
    return out;
}

State domain_marginal(const JointTable& joint) {
    std::vector<Rational> out(joint.domain.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
        for (const auto& m : joint.mass[x]) {
            out[x] += m;
        }
    }
    return State(joint.domain, std::move(out));
}

State codomain_marginal(const JointTable& joint) {
    std::vector<Rational> out(joint.codomain.size());
    for (const auto& row : joint.mass) {
        for (std::size_t y = 0; y < out.size(); ++y) {
            out[y] += row[y];
        }
    }
    return State(joint.codomain, std::move(out));
}

std::vector<State> oracle_inverted_rows(const JointTable& joint) {
    std::vector<State> rows;
    for (std::size_t y = 0; y < joint.codomain.size(); ++y) {
        auto hit = [y](std::size_t, std::size_t cell) { return Rational(cell == y ? 1 : 0); };
        rows.push_back(domain_marginal(oracle_condition(joint, hit)));
    }
    return rows;
}

State oracle_jeffrey(const JointTable& joint, const State& rho) {
    std::vector<Rational> out(joint.domain.size());
    for (std::size_t y = 0; y < joint.codomain.size(); ++y) {
        if (rho[y] == 0) {
            continue;
        }
        auto hit = [y](std::size_t, std::size_t cell) { return Rational(cell == y ? 1 : 0); };
        State given_y = domain_marginal(oracle_condition(joint, hit));
        for (std::size_t x = 0; x < out.size(); ++x) {
            out[x] += rho[y] * given_y[x];
        }
    }
    return State(joint.domain, std::move(out));
}

State oracle_pearl(const State& sigma, const Channel& c, const Predicate& q) {
    auto weight = [&q](std::size_t, std::size_t y) { return q[y]; };
    return domain_marginal(oracle_condition(joint(sigma, c), weight));
}

State oracle_condition_state(const State& sigma, const Predicate& p) {
    Space unit("unit", {"*"});
    JointTable table{sigma.space(), unit, {}};
    for (std::size_t x = 0; x < sigma.size(); ++x) {
        table.mass.push_back({sigma[x]});
    }
    auto weight = [&p](std::size_t x, std::size_t) { return p[x]; };
    return domain_marginal(oracle_condition(table, weight));
}

}  // namespace softev::oracle

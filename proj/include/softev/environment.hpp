#pragma once
// Compiling parsed netspec declarations into library values and evaluating
// named queries against them.

#include "softev/distribution.hpp"
#include "softev/netspec.hpp"
#include "softev/render.hpp"
#include "softev/update.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace softev::netspec {

using Value = std::variant<State, Predicate, Channel, Rational>;

struct QueryResult {
    std::string name;
    Value value;
    /// Root operator of the query, or the declaration kind for plain names.
    std::string rule;
    /// Argument expressions as written.
    std::vector<std::string> inputs;
    /// Present when the root operator is an update rule.
    std::optional<UpdateReport> report;
};

std::string render_value(const Value& value, const RenderOptions& options = {});

/// CSV with header `element,value` (states, predicates), `from,to,value`
/// (channels) or `value` (scalars).
std::string to_csv(const QueryResult& result, const RenderOptions& options = {});

/// Raised by load() when the source does not parse.
class LoadError : public std::runtime_error {
public:
    explicit LoadError(std::vector<ParseDiagnostic> diagnostics);
    const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<ParseDiagnostic> diagnostics_;
};

class Environment {
public:
    const Space& space(std::string_view name) const;
    const State& state(std::string_view name) const;
    const Predicate& predicate(std::string_view name) const;
    /// Channels and lifted functions.
    const Channel& channel(std::string_view name) const;

    bool contains(std::string_view name) const;
    /// Every declared value and query name, in declaration order.
    const std::vector<std::string>& names() const { return order_; }
    const std::vector<std::string>& query_names() const { return query_order_; }

    /// Evaluates a query, or echoes a declared state/predicate/channel.
    /// Throws ProbError; the message names the query.
    QueryResult evaluate(std::string_view name) const;

    friend Environment compile(const std::vector<Declaration>& declarations);
    friend class Checker;

private:
    struct Evaluated {
        Value value;
        std::optional<UpdateReport> report;
    };
    Evaluated eval(const Expr& expr, const std::string& path) const;

    std::map<std::string, Space, std::less<>> spaces_;
    std::map<std::string, State, std::less<>> states_;
    std::map<std::string, Predicate, std::less<>> predicates_;
    std::map<std::string, Channel, std::less<>> channels_;
    std::map<std::string, std::string, std::less<>> value_kind_;
    std::map<std::string, Expr, std::less<>> queries_;
    std::vector<std::string> order_;
    std::vector<std::string> query_order_;
};

/// Builds every declared value and statically space-checks every query.
/// Throws ProbError (SpaceMismatch etc.) naming the query and argument.
Environment compile(const std::vector<Declaration>& declarations);

/// parse + compile; throws LoadError on diagnostics.
Environment load(std::string_view source);

}  // namespace softev::netspec

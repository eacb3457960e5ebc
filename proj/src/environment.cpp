#include "softev/environment.hpp"

#include "softev/core.hpp"
#include "softev/error.hpp"

namespace softev::netspec {

namespace {

Space resolve_space(const std::map<std::string, Space, std::less<>>& spaces, const SpaceRef& ref) {
    std::optional<Space> result;
    for (const auto& factor : ref.factors) {
        auto it = spaces.find(factor);
        if (it == spaces.end()) {
            throw ProbError(ErrorKind::UnknownElement, "unknown space '" + factor + "'");
        }
        result = result ? Space::product(*result, it->second) : it->second;
    }
    return *result;
}

Entries to_entries(const std::vector<Entry>& entries) { return Entries(entries.begin(), entries.end()); }

std::string arg_path(const std::string& path, const Expr& call, std::size_t index) {
    return path + " > " + call.text + " argument " + std::to_string(index + 1);
}

[[noreturn]] void rethrow_with(const ProbError& e, const std::string& context) {
    throw ProbError(e.kind(), context + ": " + e.detail());
}

}  // namespace

/// Static description of what an expression evaluates to.
struct StaticType {
    enum class Kind { State, Predicate, Channel, Scalar, Event, Side } kind;
    std::optional<Space> space;     // State, Predicate, Channel domain
    std::optional<Space> codomain;  // Channel
};

static std::string_view kind_text(StaticType::Kind kind) {
    switch (kind) {
        case StaticType::Kind::State: return "state";
        case StaticType::Kind::Predicate: return "predicate";
        case StaticType::Kind::Channel: return "channel";
        case StaticType::Kind::Scalar: return "scalar";
        case StaticType::Kind::Event: return "event";
        case StaticType::Kind::Side: return "side";
    }
    return "value";
}

class Checker {
public:
    using Kind = StaticType::Kind;

    explicit Checker(const Environment& env) : env_(env) {}

    StaticType check_query(const std::string& name, const Expr& expr) {
        StaticType type = check(expr, "query '" + name + "'");
        query_types_.emplace(name, type);
        return type;
    }

private:
    [[noreturn]] void mismatch(const std::string& path, const std::string& message) {
        throw ProbError(ErrorKind::SpaceMismatch, path + ": " + message);
    }

    void expect_kind(const StaticType& type, Kind kind, const std::string& path) {
        if (type.kind != kind) {
            mismatch(path, "expected a " + std::string(kind_text(kind)) + ", got a " +
                               std::string(kind_text(type.kind)));
        }
    }

    void expect_space(const Space& expected, const Space& actual, const std::string& path) {
        if (!(expected == actual)) {
            mismatch(path, "expected space '" + expected.name() + "', got '" + actual.name() + "'");
        }
    }

    void check_event(const Expr& event, const Space& space, const std::string& path) {
        for (const auto& element : event.elements) {
            if (!space.find(element)) {
                throw ProbError(ErrorKind::UnknownElement,
                                path + ": '" + element + "' is not an element of space '" + space.name() + "'");
            }
        }
    }

    StaticType check(const Expr& expr, const std::string& path) {
        switch (expr.kind) {
            case Expr::Kind::Number:
                return {Kind::Scalar, {}, {}};
            case Expr::Kind::Event:
                return {Kind::Event, {}, {}};
            case Expr::Kind::Side:
                return {Kind::Side, {}, {}};
            case Expr::Kind::Name:
                return check_name(expr, path);
            case Expr::Kind::Call:
                break;
        }
        std::vector<StaticType> args;
        for (std::size_t i = 0; i < expr.args.size(); ++i) {
            args.push_back(check(expr.args[i], arg_path(path, expr, i)));
        }
        auto at = [&](std::size_t i) { return arg_path(path, expr, i); };
        const std::string& op = expr.text;
        if (op == "transform") {
            expect_kind(args[0], Kind::Channel, at(0));
            expect_kind(args[1], Kind::State, at(1));
            expect_space(*args[0].space, *args[1].space, at(1));
            return {Kind::State, args[0].codomain, {}};
        }
        if (op == "predtransform") {
            expect_kind(args[0], Kind::Channel, at(0));
            expect_kind(args[1], Kind::Predicate, at(1));
            expect_space(*args[0].codomain, *args[1].space, at(1));
            return {Kind::Predicate, args[0].space, {}};
        }
        if (op == "validity" || op == "condition") {
            expect_kind(args[0], Kind::State, at(0));
            expect_kind(args[1], Kind::Predicate, at(1));
            expect_space(*args[0].space, *args[1].space, at(1));
            return op == "validity" ? StaticType{Kind::Scalar, {}, {}} : StaticType{Kind::State, args[0].space, {}};
        }
        if (op == "compose") {
            expect_kind(args[0], Kind::Channel, at(0));
            expect_kind(args[1], Kind::Channel, at(1));
            expect_space(*args[0].space, *args[1].codomain, at(0));
            return {Kind::Channel, args[1].space, args[0].codomain};
        }
        if (op == "dagger") {
            expect_kind(args[0], Kind::Channel, at(0));
            expect_kind(args[1], Kind::State, at(1));
            expect_space(*args[0].space, *args[1].space, at(1));
            return {Kind::Channel, args[0].codomain, args[0].space};
        }
        if (op == "pearl" || op == "jeffrey" || op == "forward") {
            expect_kind(args[0], Kind::State, at(0));
            expect_kind(args[1], Kind::Channel, at(1));
            expect_space(*args[1].space, *args[0].space, at(1));
            if (op == "forward") {
                expect_kind(args[2], Kind::Predicate, at(2));
                expect_space(*args[0].space, *args[2].space, at(2));
                return {Kind::State, args[1].codomain, {}};
            }
            expect_kind(args[2], op == "pearl" ? Kind::Predicate : Kind::State, at(2));
            expect_space(*args[1].codomain, *args[2].space, at(2));
            return {Kind::State, args[0].space, {}};
        }
        if (op == "product") {
            expect_kind(args[0], Kind::State, at(0));
            expect_kind(args[1], Kind::State, at(1));
            return {Kind::State, Space::product(*args[0].space, *args[1].space), {}};
        }
        if (op == "marginal") {
            expect_kind(args[0], Kind::State, at(0));
            expect_kind(args[1], Kind::Side, at(1));
            if (!args[0].space->is_product()) {
                throw ProbError(ErrorKind::NotAProductSpace,
                                at(0) + ": space '" + args[0].space->name() + "' is not a product");
            }
            const Space& side = expr.args[1].text == "first" ? args[0].space->left() : args[0].space->right();
            return {Kind::State, side, {}};
        }
        if (op == "atc" || op == "nec") {
            expect_kind(args[0], Kind::State, at(0));
            expect_kind(args[1], Kind::Event, at(1));
            expect_kind(args[2], Kind::Scalar, at(2));
            check_event(expr.args[1], *args[0].space, at(1));
            return {Kind::State, args[0].space, {}};
        }
        if (op == "blend") {
            expect_kind(args[0], Kind::Scalar, at(0));
            expect_kind(args[1], Kind::State, at(1));
            expect_kind(args[2], Kind::State, at(2));
            expect_space(*args[1].space, *args[2].space, at(2));
            return {Kind::State, args[1].space, {}};
        }
        mismatch(path, "unknown operator '" + op + "'");
    }

    StaticType check_name(const Expr& expr, const std::string& path) {
        const std::string& name = expr.text;
        if (auto it = env_.states_.find(name); it != env_.states_.end()) {
            return {Kind::State, it->second.space(), {}};
        }
        if (auto it = env_.predicates_.find(name); it != env_.predicates_.end()) {
            return {Kind::Predicate, it->second.space(), {}};
        }
        if (auto it = env_.channels_.find(name); it != env_.channels_.end()) {
            return {Kind::Channel, it->second.domain(), it->second.codomain()};
        }
        if (auto it = query_types_.find(name); it != query_types_.end()) {
            return it->second;
        }
        throw ProbError(ErrorKind::UnknownElement, path + ": unknown name '" + name + "'");
    }

    const Environment& env_;
    std::map<std::string, StaticType, std::less<>> query_types_;
};

Environment compile(const std::vector<Declaration>& declarations) {
    Environment env;
    Checker checker(env);
    for (const auto& decl : declarations) {
        const std::string context = "declaration '" + decl.name() + "' (line " + std::to_string(decl.pos.line) + ")";
        try {
            std::visit(
                [&](const auto& d) {
                    using T = std::decay_t<decltype(d)>;
                    if constexpr (std::is_same_v<T, SpaceDecl>) {
                        Space space = d.product.factors.empty() ? Space(d.name, d.elements)
                                                                : resolve_space(env.spaces_, d.product);
                        env.spaces_.emplace(d.name, std::move(space));
                        return;
                    } else if constexpr (std::is_same_v<T, StateDecl>) {
                        env.states_.emplace(d.name,
                                            make_state(resolve_space(env.spaces_, d.space), to_entries(d.weights)));
                        env.value_kind_.emplace(d.name, "state");
                    } else if constexpr (std::is_same_v<T, PredicateDecl>) {
                        env.predicates_.emplace(
                            d.name, make_predicate(resolve_space(env.spaces_, d.space), to_entries(d.values)));
                        env.value_kind_.emplace(d.name, "predicate");
                    } else if constexpr (std::is_same_v<T, ChannelDecl>) {
                        std::vector<std::pair<std::string, Entries>> rows;
                        for (const auto& [x, entries] : d.rows) {
                            rows.emplace_back(x, to_entries(entries));
                        }
                        env.channels_.emplace(d.name, make_channel(resolve_space(env.spaces_, d.domain),
                                                                   resolve_space(env.spaces_, d.codomain), rows));
                        env.value_kind_.emplace(d.name, "channel");
                    } else if constexpr (std::is_same_v<T, FunctionDecl>) {
                        env.channels_.emplace(d.name, lift_function(resolve_space(env.spaces_, d.domain),
                                                                    resolve_space(env.spaces_, d.codomain), d.mapping));
                        env.value_kind_.emplace(d.name, "function");
                    } else {
                        checker.check_query(d.name, d.expr);
                        env.queries_.emplace(d.name, d.expr);
                        env.query_order_.push_back(d.name);
                        env.value_kind_.emplace(d.name, "query");
                    }
                    env.order_.push_back(d.name);
                },
                decl.body);
        } catch (const ProbError& e) {
            rethrow_with(e, context);
        }
    }
    return env;
}

const Space& Environment::space(std::string_view name) const {
    auto it = spaces_.find(name);
    if (it == spaces_.end()) {
        throw ProbError(ErrorKind::UnknownElement, "no space named '" + std::string(name) + "'");
    }
    return it->second;
}

const State& Environment::state(std::string_view name) const {
    auto it = states_.find(name);
    if (it == states_.end()) {
        throw ProbError(ErrorKind::UnknownElement, "no state named '" + std::string(name) + "'");
    }
    return it->second;
}

const Predicate& Environment::predicate(std::string_view name) const {
    auto it = predicates_.find(name);
    if (it == predicates_.end()) {
        throw ProbError(ErrorKind::UnknownElement, "no predicate named '" + std::string(name) + "'");
    }
    return it->second;
}

const Channel& Environment::channel(std::string_view name) const {
    auto it = channels_.find(name);
    if (it == channels_.end()) {
        throw ProbError(ErrorKind::UnknownElement, "no channel named '" + std::string(name) + "'");
    }
    return it->second;
}

bool Environment::contains(std::string_view name) const { return value_kind_.find(name) != value_kind_.end(); }

Environment::Evaluated Environment::eval(const Expr& expr, const std::string& path) const {
    switch (expr.kind) {
        case Expr::Kind::Number:
            return {expr.number, {}};
        case Expr::Kind::Name: {
            if (auto it = states_.find(expr.text); it != states_.end()) return {it->second, {}};
            if (auto it = predicates_.find(expr.text); it != predicates_.end()) return {it->second, {}};
            if (auto it = channels_.find(expr.text); it != channels_.end()) return {it->second, {}};
            if (auto it = queries_.find(expr.text); it != queries_.end()) {
                return {eval(it->second, path + " > query '" + expr.text + "'").value, {}};
            }
            throw ProbError(ErrorKind::UnknownElement, path + ": unknown name '" + expr.text + "'");
        }
        case Expr::Kind::Event:
        case Expr::Kind::Side:
            throw ProbError(ErrorKind::InvalidValue, path + ": '" + render_expr(expr) + "' is not a value");
        case Expr::Kind::Call:
            break;
    }
    std::vector<Value> args;
    for (std::size_t i = 0; i < expr.args.size(); ++i) {
        const Expr& arg = expr.args[i];
        if (arg.kind == Expr::Kind::Event || arg.kind == Expr::Kind::Side) {
            args.emplace_back(Rational(0));  // placeholder, read from the expression itself
            continue;
        }
        args.push_back(eval(arg, arg_path(path, expr, i)).value);
    }
    const std::string& op = expr.text;
    auto st = [&](std::size_t i) -> const State& { return std::get<State>(args[i]); };
    auto pr = [&](std::size_t i) -> const Predicate& { return std::get<Predicate>(args[i]); };
    auto ch = [&](std::size_t i) -> const Channel& { return std::get<Channel>(args[i]); };
    auto sc = [&](std::size_t i) -> const Rational& { return std::get<Rational>(args[i]); };
    try {
        if (op == "transform") return {state_transform(ch(0), st(1)), {}};
        if (op == "predtransform") return {predicate_transform(ch(0), pr(1)), {}};
        if (op == "validity") return {validity(st(0), pr(1)), {}};
        if (op == "condition") return {condition(st(0), pr(1)), {}};
        if (op == "compose") return {compose(ch(0), ch(1)), {}};
        if (op == "dagger") return {dagger(ch(0), st(1)), {}};
        if (op == "forward") return {forward_inference(st(0), ch(1), pr(2)), {}};
        if (op == "product") return {product_state(st(0), st(1)), {}};
        if (op == "marginal") {
            return {marginal(st(0), expr.args[1].text == "first" ? Side::First : Side::Second), {}};
        }
        if (op == "pearl") {
            auto report = pearl_report(st(0), ch(1), pr(2));
            return {report.posterior, report};
        }
        if (op == "jeffrey") {
            auto report = jeffrey_report(st(0), ch(1), st(2));
            return {report.posterior, report};
        }
        if (op == "atc" || op == "nec") {
            Event event(st(0).space(), expr.args[1].elements);
            auto report = op == "atc" ? atc_report(st(0), event, sc(2)) : nec_report(st(0), event, sc(2));
            return {report.posterior, report};
        }
        if (op == "blend") {
            State mixed = blend_update(sc(0), st(1), st(2));
            UpdateReport report{Rule::Blend, st(2), std::nullopt, mixed};
            return {std::move(mixed), std::move(report)};
        }
    } catch (const ProbError& e) {
        rethrow_with(e, path + " > " + op);
    }
    throw ProbError(ErrorKind::InvalidValue, path + ": unknown operator '" + op + "'");
}

QueryResult Environment::evaluate(std::string_view name) const {
    auto kind = value_kind_.find(name);
    if (kind == value_kind_.end()) {
        throw ProbError(ErrorKind::UnknownElement, "no query or value named '" + std::string(name) + "'");
    }
    QueryResult result{std::string(name), Rational(0), kind->second, {}, {}};
    auto query = queries_.find(name);
    if (query == queries_.end()) {
        Expr ref;
        ref.kind = Expr::Kind::Name;
        ref.text = std::string(name);
        result.value = eval(ref, "'" + std::string(name) + "'").value;
        return result;
    }
    const Expr& expr = query->second;
    auto evaluated = eval(expr, "query '" + std::string(name) + "'");
    result.value = std::move(evaluated.value);
    result.report = std::move(evaluated.report);
    if (expr.kind == Expr::Kind::Call) {
        result.rule = expr.text;
        for (const auto& arg : expr.args) {
            result.inputs.push_back(render_expr(arg));
        }
    } else {
        result.rule = "alias";
        result.inputs.push_back(render_expr(expr));
    }
    return result;
}

std::string render_value(const Value& value, const RenderOptions& options) {
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, State>) {
                return render_state(v, options);
            } else if constexpr (std::is_same_v<T, Predicate>) {
                return render_predicate(v, options);
            } else if constexpr (std::is_same_v<T, Channel>) {
                return render_channel(v, options);
            } else {
                return render_scalar(v, options);
            }
        },
        value);
}

namespace {

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char ch : text) {
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return out + "\"";
}

}  // namespace

std::string to_csv(const QueryResult& result, const RenderOptions& options) {
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            std::string out;
            if constexpr (std::is_same_v<T, State> || std::is_same_v<T, Predicate>) {
                out = "element,value\n";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    out += csv_field(v.space().element(i)) + "," + render_scalar(v[i], options) + "\n";
                }
            } else if constexpr (std::is_same_v<T, Channel>) {
                out = "from,to,value\n";
                for (std::size_t x = 0; x < v.domain().size(); ++x) {
                    for (std::size_t y = 0; y < v.codomain().size(); ++y) {
                        out += csv_field(v.domain().element(x)) + "," + csv_field(v.codomain().element(y)) + "," +
                               render_scalar(v(x, y), options) + "\n";
                    }
                }
            } else {
                out = "value\n" + render_scalar(v, options) + "\n";
            }
            return out;
        },
        result.value);
}

LoadError::LoadError(std::vector<ParseDiagnostic> diagnostics)
    : std::runtime_error(diagnostics.empty() ? "parse failed" : diagnostics.front().format()),
      diagnostics_(std::move(diagnostics)) {}

Environment load(std::string_view source) {
    ParseResult parsed = parse(source);
    if (!parsed.ok()) {
        throw LoadError(std::move(parsed.diagnostics));
    }
    return compile(parsed.declarations);
}

}  // namespace softev::netspec

#include "softev/netspec.hpp"

namespace softev::netspec {

namespace {

std::string element_text(const std::string& element) {
    return element.find(',') == std::string::npos ? element : "(" + element + ")";
}

std::string value_map(const std::vector<Entry>& entries) {
    std::string out = "{ ";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out += (i ? ", " : "") + element_text(entries[i].first) + ": " + to_fraction(entries[i].second);
    }
    return out + (entries.empty() ? "}" : " }");
}

struct DeclRenderer {
    std::string operator()(const SpaceDecl& d) const {
        if (!d.product.factors.empty()) {
            return "space " + d.name + " = " + d.product.text();
        }
        std::string out = "space " + d.name + " = { ";
        for (std::size_t i = 0; i < d.elements.size(); ++i) {
            out += (i ? ", " : "") + d.elements[i];
        }
        return out + " }";
    }
    std::string operator()(const StateDecl& d) const {
        return "state " + d.name + " : " + d.space.text() + " = " + value_map(d.weights);
    }
    std::string operator()(const PredicateDecl& d) const {
        return "predicate " + d.name + " : " + d.space.text() + " = " + value_map(d.values);
    }
    std::string operator()(const ChannelDecl& d) const {
        std::string out = "channel " + d.name + " : " + d.domain.text() + " -> " + d.codomain.text() + " = {\n";
        for (std::size_t i = 0; i < d.rows.size(); ++i) {
            out += "  " + element_text(d.rows[i].first) + ": " + value_map(d.rows[i].second);
            out += i + 1 < d.rows.size() ? ",\n" : "\n";
        }
        return out + "}";
    }
    std::string operator()(const FunctionDecl& d) const {
        std::string out = "function " + d.name + " : " + d.domain.text() + " -> " + d.codomain.text() + " = { ";
        for (std::size_t i = 0; i < d.mapping.size(); ++i) {
            out += (i ? ", " : "") + element_text(d.mapping[i].first) + ": " + element_text(d.mapping[i].second);
        }
        return out + " }";
    }
    std::string operator()(const QueryDecl& d) const { return "query " + d.name + " = " + render_expr(d.expr); }
};

}  // namespace

std::string render_expr(const Expr& expr) {
    switch (expr.kind) {
        case Expr::Kind::Name:
        case Expr::Kind::Side:
            return expr.text;
        case Expr::Kind::Number:
            return to_fraction(expr.number);
        case Expr::Kind::Event: {
            std::string out = "{";
            for (std::size_t i = 0; i < expr.elements.size(); ++i) {
                out += (i ? ", " : "") + element_text(expr.elements[i]);
            }
            return out + "}";
        }
        case Expr::Kind::Call: {
            std::string out = expr.text + "(";
            for (std::size_t i = 0; i < expr.args.size(); ++i) {
                out += (i ? ", " : "") + render_expr(expr.args[i]);
            }
            return out + ")";
        }
    }
    return {};
}

std::string render(const std::vector<Declaration>& declarations) {
    std::string out;
    for (const auto& d : declarations) {
        out += std::visit(DeclRenderer{}, d.body) + "\n";
    }
    return out;
}

}  // namespace softev::netspec

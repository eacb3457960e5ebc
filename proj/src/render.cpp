#include "softev/render.hpp"

#include "softev/error.hpp"

namespace softev {

std::string render_scalar(const Rational& value, const RenderOptions& options) {
    return options.decimal_digits ? to_decimal(value, *options.decimal_digits) : to_fraction(value);
}

std::string render_state(const State& sigma, const RenderOptions& options) {
    std::string out;
    for (std::size_t x = 0; x < sigma.size(); ++x) {
        if (sigma[x] == 0 && !options.show_zeros) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += render_scalar(sigma[x], options) + "|" + sigma.space().element(x) + ">";
    }
    return out;
}

std::string render_predicate(const Predicate& p, const RenderOptions& options) {
    std::string out = "{ ";
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (x > 0) {
            out += ", ";
        }
        const std::string& element = p.space().element(x);
        out += element.find(',') == std::string::npos ? element : "(" + element + ")";
        out += ": " + render_scalar(p[x], options);
    }
    return out + " }";
}

std::string render_channel(const Channel& c, const RenderOptions& options) {
    std::string out;
    for (std::size_t x = 0; x < c.domain().size(); ++x) {
        if (x > 0) {
            out += "\n";
        }
        out += c.domain().element(x) + ": " + render_state(c.row(x), options);
    }
    return out;
}

State parse_ket(const Space& space, std::string_view text) {
    Entries entries;
    while (!text.empty()) {
        auto bar = text.find('|');
        auto close = text.find('>', bar);
        if (bar == std::string_view::npos || close == std::string_view::npos) {
            throw ProbError(ErrorKind::InvalidValue, "malformed ket sum '" + std::string(text) + "'");
        }
        auto weight = text.substr(0, bar);
        while (!weight.empty() && weight.front() == ' ') {
            weight.remove_prefix(1);
        }
        while (!weight.empty() && weight.back() == ' ') {
            weight.remove_suffix(1);
        }
        entries.emplace_back(std::string(text.substr(bar + 1, close - bar - 1)), parse_rational(weight));
        text.remove_prefix(close + 1);
        while (!text.empty() && (text.front() == ' ' || text.front() == '+')) {
            text.remove_prefix(1);
        }
    }
    return make_state(space, entries);
}

}  // namespace softev

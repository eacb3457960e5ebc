#include "softev/netspec.hpp"

#include "softev/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace softev::netspec {

namespace {

constexpr Signature kOperators[] = {
    {"transform", 2}, {"predtransform", 2}, {"validity", 2}, {"condition", 2}, {"compose", 2},
    {"dagger", 2},    {"pearl", 3},         {"jeffrey", 3},  {"product", 2},   {"marginal", 2},
    {"atc", 3},       {"nec", 3},           {"blend", 3},    {"forward", 3},
};

constexpr std::string_view kKeywords[] = {"space", "state", "channel", "predicate", "function", "query"};

bool is_keyword(std::string_view text) {
    return std::find(std::begin(kKeywords), std::end(kKeywords), text) != std::end(kKeywords);
}

enum class Tok { Ident, Number, LBrace, RBrace, LParen, RParen, Colon, Comma, Equals, Arrow, Star, End, Invalid };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourcePos pos;
    bool line_start = false;
};

bool ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' || ch == '~'; }

bool ident_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '~' || ch == '\'';
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    bool line_start = true;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        i += n;
        column += static_cast<int>(n);
    };
    while (i < src.size()) {
        char ch = src[i];
        if (ch == '\n') {
            ++i;
            ++line;
            column = 1;
            line_start = true;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        if (ch == '#') {
            while (i < src.size() && src[i] != '\n') {
                ++i;
            }
            continue;
        }
        Token tok;
        tok.pos = {line, column};
        tok.line_start = line_start;
        line_start = false;
        std::size_t start = i;
        if (ident_start(ch)) {
            while (i < src.size() && ident_char(src[i])) {
                advance(1);
            }
            tok.kind = Tok::Ident;
        } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.' ||
                                      src[i] == '/')) {
                advance(1);
            }
            tok.kind = Tok::Number;
        } else if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            advance(2);
            tok.kind = Tok::Arrow;
        } else {
            advance(1);
            switch (ch) {
                case '{': tok.kind = Tok::LBrace; break;
                case '}': tok.kind = Tok::RBrace; break;
                case '(': tok.kind = Tok::LParen; break;
                case ')': tok.kind = Tok::RParen; break;
                case ':': tok.kind = Tok::Colon; break;
                case ',': tok.kind = Tok::Comma; break;
                case '=': tok.kind = Tok::Equals; break;
                case '*': tok.kind = Tok::Star; break;
                default: tok.kind = Tok::Invalid; break;
            }
        }
        tok.text = std::string(src.substr(start, i - start));
        tokens.push_back(std::move(tok));
    }
    Token end;
    end.kind = Tok::End;
    end.pos = {line, column};
    end.line_start = true;
    tokens.push_back(end);
    return tokens;
}

struct SyntaxError {
    SourcePos pos;
    std::string message;
    std::string token;
};

enum class ValueKind { State, Predicate, Channel, Function, Query };

class Parser {
public:
    explicit Parser(std::string_view source) : tokens_(lex(source)) {}

    ParseResult run() {
        while (peek().kind != Tok::End) {
            std::size_t before = pos_;
            try {
                parse_declaration();
            } catch (const SyntaxError& e) {
                error(e.pos, e.message, e.token);
                if (pos_ == before) {
                    ++pos_;
                }
                recover();
            }
        }
        return std::move(result_);
    }

private:
    // Token helpers.
    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }

    const Token& next() {
        const Token& tok = peek();
        if (pos_ < tokens_.size() - 1) {
            ++pos_;
        }
        return tok;
    }

    [[noreturn]] void fail(const Token& tok, const std::string& message) {
        throw SyntaxError{tok.pos, message, tok.kind == Tok::End ? "<end of input>" : tok.text};
    }

    const Token& expect(Tok kind, std::string_view what) {
        if (peek().kind != kind) {
            fail(peek(), "expected " + std::string(what));
        }
        return next();
    }

    bool accept(Tok kind) {
        if (peek().kind == kind) {
            next();
            return true;
        }
        return false;
    }

    void recover() {
        while (peek().kind != Tok::End && !(peek().line_start && peek().kind == Tok::Ident && is_keyword(peek().text))) {
            next();
        }
    }

    void error(SourcePos pos, std::string message, std::string token) {
        result_.diagnostics.push_back({Severity::Error, pos.line, pos.column, std::move(message), std::move(token)});
    }

    // Symbol table.
    void declare_value(const Token& name, ValueKind kind) {
        if (spaces_.count(name.text) || values_.count(name.text)) {
            fail(name, "duplicate name '" + name.text + "'");
        }
        values_[name.text] = kind;
    }

    const std::vector<std::string>& space_elements(const SpaceRef& ref, const Token& at) {
        auto key = ref.text();
        if (auto it = resolved_.find(key); it != resolved_.end()) {
            return it->second;
        }
        std::vector<std::string> elements;
        for (std::size_t i = 0; i < ref.factors.size(); ++i) {
            auto it = spaces_.find(ref.factors[i]);
            if (it == spaces_.end()) {
                fail(at, "unknown space '" + ref.factors[i] + "'");
            }
            if (i == 0) {
                elements = it->second;
                continue;
            }
            std::vector<std::string> joined;
            for (const auto& l : elements) {
                for (const auto& r : it->second) {
                    joined.push_back(l + "," + r);
                }
            }
            elements = std::move(joined);
        }
        return resolved_[key] = std::move(elements);
    }

    void check_member(const std::vector<std::string>& elements, const std::string& element, const SpaceRef& ref,
                      const Token& at) {
        if (std::find(elements.begin(), elements.end(), element) == elements.end()) {
            throw SyntaxError{at.pos, "'" + element + "' is not an element of space '" + ref.text() + "'", at.text};
        }
    }

    // Grammar.
    void parse_declaration() {
        const Token& kw = peek();
        if (kw.kind != Tok::Ident || !is_keyword(kw.text)) {
            fail(kw, "expected a declaration (space, state, channel, predicate, function or query)");
        }
        next();
        if (kw.text == "space") {
            parse_space(kw);
        } else if (kw.text == "state") {
            parse_state(kw);
        } else if (kw.text == "predicate") {
            parse_predicate(kw);
        } else if (kw.text == "channel") {
            parse_channel(kw);
        } else if (kw.text == "function") {
            parse_function(kw);
        } else {
            parse_query(kw);
        }
    }

    SpaceRef parse_space_ref() {
        SpaceRef ref;
        ref.factors.push_back(expect(Tok::Ident, "a space name").text);
        while (accept(Tok::Star)) {
            ref.factors.push_back(expect(Tok::Ident, "a space name").text);
        }
        return ref;
    }

    std::string parse_element() {
        if (peek().kind == Tok::Ident) {
            return next().text;
        }
        if (accept(Tok::LParen)) {
            std::string joined = parse_element();
            while (accept(Tok::Comma)) {
                joined += "," + parse_element();
            }
            expect(Tok::RParen, "')'");
            return joined;
        }
        fail(peek(), "expected an element name");
    }

    Rational parse_number() {
        const Token& tok = expect(Tok::Number, "a number");
        try {
            return parse_rational(tok.text);
        } catch (const ProbError& e) {
            fail(tok, "malformed number '" + tok.text + "'");
        }
    }

    // `{ elem: value, ... }` with values checked against [0,1].
    std::vector<Entry> parse_value_map(const SpaceRef& ref, const Token& at) {
        const auto& elements = space_elements(ref, at);
        std::vector<Entry> entries;
        std::set<std::string> seen;
        expect(Tok::LBrace, "'{'");
        while (peek().kind != Tok::RBrace) {
            const Token& elem_tok = peek();
            std::string element = parse_element();
            check_member(elements, element, ref, elem_tok);
            if (!seen.insert(element).second) {
                throw SyntaxError{elem_tok.pos, "'" + element + "' listed twice", elem_tok.text};
            }
            expect(Tok::Colon, "':'");
            const Token& num_tok = peek();
            Rational value = parse_number();
            if (!in_unit_interval(value)) {
                throw SyntaxError{num_tok.pos, "value " + to_fraction(value) + " is outside [0,1]", num_tok.text};
            }
            entries.emplace_back(std::move(element), std::move(value));
            if (!accept(Tok::Comma)) {
                break;
            }
        }
        expect(Tok::RBrace, "'}'");
        return entries;
    }

    static Rational sum_of(const std::vector<Entry>& entries) {
        Rational total;
        for (const auto& e : entries) {
            total += e.second;
        }
        return total;
    }

    void push(const Token& kw, auto body) { result_.declarations.push_back({std::move(body), kw.pos}); }

    void parse_space(const Token& kw) {
        const Token& name = expect(Tok::Ident, "a space name");
        if (spaces_.count(name.text) || values_.count(name.text)) {
            fail(name, "duplicate name '" + name.text + "'");
        }
        expect(Tok::Equals, "'='");
        SpaceDecl decl{name.text, {}, {}};
        if (accept(Tok::LBrace)) {
            std::set<std::string> seen;
            do {
                const Token& elem = expect(Tok::Ident, "an element name");
                if (!seen.insert(elem.text).second) {
                    fail(elem, "element '" + elem.text + "' repeated in space '" + name.text + "'");
                }
                decl.elements.push_back(elem.text);
            } while (accept(Tok::Comma) && peek().kind != Tok::RBrace);
            expect(Tok::RBrace, "'}'");
            spaces_[name.text] = decl.elements;
        } else {
            const Token& at = peek();
            decl.product = parse_space_ref();
            if (decl.product.factors.size() < 2) {
                fail(at, "expected '{' or a product 'a * b'");
            }
            spaces_[name.text] = space_elements(decl.product, at);
        }
        push(kw, std::move(decl));
    }

    void parse_state(const Token& kw) {
        const Token& name = expect(Tok::Ident, "a state name");
        expect(Tok::Colon, "':'");
        const Token& space_tok = peek();
        StateDecl decl{name.text, parse_space_ref(), {}};
        space_elements(decl.space, space_tok);
        expect(Tok::Equals, "'='");
        decl.weights = parse_value_map(decl.space, space_tok);
        declare_value(name, ValueKind::State);
        if (Rational total = sum_of(decl.weights); total != 1) {
            error(name.pos, "weights sum to " + to_fraction(total) + ", expected 1", name.text);
            return;
        }
        push(kw, std::move(decl));
    }

    void parse_predicate(const Token& kw) {
        const Token& name = expect(Tok::Ident, "a predicate name");
        expect(Tok::Colon, "':'");
        const Token& space_tok = peek();
        PredicateDecl decl{name.text, parse_space_ref(), {}};
        space_elements(decl.space, space_tok);
        expect(Tok::Equals, "'='");
        decl.values = parse_value_map(decl.space, space_tok);
        declare_value(name, ValueKind::Predicate);
        push(kw, std::move(decl));
    }

    void parse_channel(const Token& kw) {
        const Token& name = expect(Tok::Ident, "a channel name");
        expect(Tok::Colon, "':'");
        const Token& dom_tok = peek();
        ChannelDecl decl{name.text, parse_space_ref(), {}, {}};
        const auto domain = space_elements(decl.domain, dom_tok);
        expect(Tok::Arrow, "'->'");
        const Token& cod_tok = peek();
        decl.codomain = parse_space_ref();
        space_elements(decl.codomain, cod_tok);
        expect(Tok::Equals, "'='");
        expect(Tok::LBrace, "'{'");
        std::set<std::string> seen;
        bool sums_ok = true;
        while (peek().kind != Tok::RBrace) {
            const Token& row_tok = peek();
            std::string element = parse_element();
            check_member(domain, element, decl.domain, row_tok);
            if (!seen.insert(element).second) {
                fail(row_tok, "row '" + element + "' given twice");
            }
            expect(Tok::Colon, "':'");
            auto entries = parse_value_map(decl.codomain, cod_tok);
            if (Rational total = sum_of(entries); total != 1) {
                error(row_tok.pos, "row '" + element + "' weights sum to " + to_fraction(total) + ", expected 1",
                      row_tok.text);
                sums_ok = false;
            }
            decl.rows.emplace_back(std::move(element), std::move(entries));
            if (!accept(Tok::Comma)) {
                break;
            }
        }
        const Token& close = expect(Tok::RBrace, "'}'");
        declare_value(name, ValueKind::Channel);
        for (const auto& x : domain) {
            if (!seen.count(x)) {
                error(close.pos, "channel '" + name.text + "' has no row for '" + x + "'", close.text);
                sums_ok = false;
            }
        }
        if (sums_ok) {
            push(kw, std::move(decl));
        }
    }

    void parse_function(const Token& kw) {
        const Token& name = expect(Tok::Ident, "a function name");
        expect(Tok::Colon, "':'");
        const Token& dom_tok = peek();
        FunctionDecl decl{name.text, parse_space_ref(), {}, {}};
        const auto domain = space_elements(decl.domain, dom_tok);
        expect(Tok::Arrow, "'->'");
        const Token& cod_tok = peek();
        decl.codomain = parse_space_ref();
        const auto codomain = space_elements(decl.codomain, cod_tok);
        expect(Tok::Equals, "'='");
        expect(Tok::LBrace, "'{'");
        std::set<std::string> seen;
        while (peek().kind != Tok::RBrace) {
            const Token& from_tok = peek();
            std::string from = parse_element();
            check_member(domain, from, decl.domain, from_tok);
            if (!seen.insert(from).second) {
                fail(from_tok, "'" + from + "' mapped twice");
            }
            expect(Tok::Colon, "':'");
            const Token& to_tok = peek();
            std::string to = parse_element();
            check_member(codomain, to, decl.codomain, to_tok);
            decl.mapping.emplace_back(std::move(from), std::move(to));
            if (!accept(Tok::Comma)) {
                break;
            }
        }
        const Token& close = expect(Tok::RBrace, "'}'");
        declare_value(name, ValueKind::Function);
        for (const auto& x : domain) {
            if (!seen.count(x)) {
                fail(close, "function '" + name.text + "' has no image for '" + x + "'");
            }
        }
        push(kw, std::move(decl));
    }

    void parse_query(const Token& kw) {
        const Token& name = expect(Tok::Ident, "a query name");
        expect(Tok::Equals, "'='");
        QueryDecl decl{name.text, parse_expr()};
        declare_value(name, ValueKind::Query);
        push(kw, std::move(decl));
    }

    Expr parse_expr() {
        const Token& tok = peek();
        Expr expr;
        expr.pos = tok.pos;
        if (tok.kind == Tok::Number) {
            expr.kind = Expr::Kind::Number;
            expr.number = parse_number();
            return expr;
        }
        if (tok.kind == Tok::LBrace) {
            next();
            expr.kind = Expr::Kind::Event;
            do {
                expr.elements.push_back(parse_element());
            } while (accept(Tok::Comma));
            expect(Tok::RBrace, "'}'");
            return expr;
        }
        if (tok.kind != Tok::Ident) {
            fail(tok, "expected an expression");
        }
        next();
        expr.text = tok.text;
        if (!accept(Tok::LParen)) {
            auto it = values_.find(tok.text);
            if (it == values_.end()) {
                fail(tok, "unknown name '" + tok.text + "'");
            }
            expr.kind = Expr::Kind::Name;
            return expr;
        }
        expr.kind = Expr::Kind::Call;
        auto op = std::find_if(std::begin(kOperators), std::end(kOperators),
                               [&](const Signature& s) { return s.name == tok.text; });
        if (op == std::end(kOperators)) {
            fail(tok, "unknown operator '" + tok.text + "'");
        }
        if (peek().kind != Tok::RParen) {
            do {
                if (tok.text == "marginal" && expr.args.size() == 1 && peek().kind == Tok::Ident &&
                    (peek().text == "first" || peek().text == "second")) {
                    Expr side;
                    side.kind = Expr::Kind::Side;
                    side.pos = peek().pos;
                    side.text = next().text;
                    expr.args.push_back(std::move(side));
                    continue;
                }
                expr.args.push_back(parse_expr());
            } while (accept(Tok::Comma));
        }
        expect(Tok::RParen, "')'");
        if (expr.args.size() != op->arity) {
            fail(tok, "'" + tok.text + "' takes " + std::to_string(op->arity) + " arguments, got " +
                          std::to_string(expr.args.size()));
        }
        if (tok.text == "marginal" && expr.args[1].kind != Expr::Kind::Side) {
            throw SyntaxError{expr.args[1].pos, "marginal expects 'first' or 'second'", expr.args[1].text};
        }
        return expr;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    ParseResult result_;
    std::map<std::string, std::vector<std::string>> spaces_;
    std::map<std::string, std::vector<std::string>> resolved_;
    std::map<std::string, ValueKind> values_;
};

}  // namespace

std::string SpaceRef::text() const {
    std::string out;
    for (const auto& f : factors) {
        out += out.empty() ? f : " * " + f;
    }
    return out;
}

bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.text == b.text && a.number == b.number && a.elements == b.elements &&
           a.args == b.args;
}

const std::string& Declaration::name() const {
    return std::visit([](const auto& d) -> const std::string& { return d.name; }, body);
}

std::string ParseDiagnostic::format() const {
    std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " +
                      (severity == Severity::Error ? "error" : "warning") + ": " + message;
    if (!token.empty()) {
        out += " (at '" + token + "')";
    }
    return out;
}

bool ParseResult::ok() const {
    return std::none_of(diagnostics.begin(), diagnostics.end(),
                        [](const ParseDiagnostic& d) { return d.severity == Severity::Error; });
}

ParseResult parse(std::string_view source) { return Parser(source).run(); }

std::span<const Signature> operators() { return kOperators; }

}  // namespace softev::netspec

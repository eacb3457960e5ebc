#pragma once
// The .netspec declaration language: spaces, states, channels, predicates,
// deterministic functions and named queries over them.

#include "softev/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace softev::netspec {

struct SourcePos {
    int line = 0;
    int column = 0;
};

/// A space written as a name or a left-nested product `a * b * c`.
struct SpaceRef {
    std::vector<std::string> factors;

    std::string text() const;
    friend bool operator==(const SpaceRef&, const SpaceRef&) = default;
};

/// Element names are stored flattened: the tuple `(c, e)` becomes "c,e".
using Entry = std::pair<std::string, Rational>;

struct SpaceDecl {
    std::string name;
    std::vector<std::string> elements;  // plain space
    SpaceRef product;                   // or a product of earlier spaces
    friend bool operator==(const SpaceDecl&, const SpaceDecl&) = default;
};

struct StateDecl {
    std::string name;
    SpaceRef space;
    std::vector<Entry> weights;
    friend bool operator==(const StateDecl&, const StateDecl&) = default;
};

struct PredicateDecl {
    std::string name;
    SpaceRef space;
    std::vector<Entry> values;
    friend bool operator==(const PredicateDecl&, const PredicateDecl&) = default;
};

struct ChannelDecl {
    std::string name;
    SpaceRef domain;
    SpaceRef codomain;
    std::vector<std::pair<std::string, std::vector<Entry>>> rows;
    friend bool operator==(const ChannelDecl&, const ChannelDecl&) = default;
};

struct FunctionDecl {
    std::string name;
    SpaceRef domain;
    SpaceRef codomain;
    std::vector<std::pair<std::string, std::string>> mapping;
    friend bool operator==(const FunctionDecl&, const FunctionDecl&) = default;
};

/// Query expression tree. Positions are carried for diagnostics and do not
/// take part in equality.
struct Expr {
    enum class Kind { Name, Number, Event, Side, Call };

    Kind kind = Kind::Name;
    std::string text;                   // name, operator, or first/second
    Rational number;                    // Kind::Number
    std::vector<std::string> elements;  // Kind::Event
    std::vector<Expr> args;             // Kind::Call
    SourcePos pos;

    friend bool operator==(const Expr& a, const Expr& b);
};

struct QueryDecl {
    std::string name;
    Expr expr;
    friend bool operator==(const QueryDecl&, const QueryDecl&) = default;
};

struct Declaration {
    std::variant<SpaceDecl, StateDecl, ChannelDecl, PredicateDecl, FunctionDecl, QueryDecl> body;
    SourcePos pos;

    const std::string& name() const;
    friend bool operator==(const Declaration& a, const Declaration& b) { return a.body == b.body; }
};

enum class Severity { Error, Warning };

struct ParseDiagnostic {
    Severity severity = Severity::Error;
    int line = 0;
    int column = 0;
    std::string message;
    std::string token;

    /// "line:column: error: message (at 'token')"
    std::string format() const;
};

struct ParseResult {
    std::vector<Declaration> declarations;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const;
};

/// Single forward pass. Besides syntax this checks references, duplicate
/// names, element membership, value ranges and exact weight sums.
ParseResult parse(std::string_view source);

/// Canonical text for a declaration list; parse(render(d)) gives back d.
std::string render(const std::vector<Declaration>& declarations);
std::string render_expr(const Expr& expr);

/// Operators accepted in queries.
struct Signature {
    std::string_view name;
    std::size_t arity;
};
std::span<const Signature> operators();

}  // namespace softev::netspec

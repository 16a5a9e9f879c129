#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "element.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "json_io.hpp"
#include "ordering.hpp"

namespace grassbanach {

enum class builtin_fn : std::uint8_t { inv, norm, body, soul, even, odd, parity };

/// Expression AST. Literals are parsed into field scalars up front, so a
/// tree is only meaningful for the field it was parsed against.
struct expr_node {
    enum class kind : std::uint8_t {
        literal,
        generator,
        unit,
        add,
        sub,
        mul,
        power,
        negate,
        call
    };

    kind k;
    scalar lit;                              // literal
    generator_label label = 0;               // generator
    std::shared_ptr<const expr_node> lhs;    // binary left / unary operand
    std::shared_ptr<const expr_node> rhs;    // binary right
    std::uint64_t exponent = 0;              // power
    builtin_fn fn = builtin_fn::inv;         // call
};

using expr_ptr = std::shared_ptr<const expr_node>;

namespace detail {

class expr_parser {
public:
    expr_parser(std::string_view text, const field_descriptor& field)
        : text_(text), field_(field) {}

    expr_ptr parse() {
        expr_ptr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error(pos_, "unexpected trailing input");
        return e;
    }

private:
    static expr_ptr node(expr_node n) { return std::make_shared<const expr_node>(std::move(n)); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    // expr := term (('+'|'-') term)*
    expr_ptr parse_expr() {
        expr_ptr lhs = parse_term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            expr_ptr rhs = parse_term();
            expr_node n;
            n.k = c == '+' ? expr_node::kind::add : expr_node::kind::sub;
            n.lhs = std::move(lhs);
            n.rhs = std::move(rhs);
            lhs = node(std::move(n));
        }
    }

    // term := factor ('*' factor)*
    expr_ptr parse_term() {
        expr_ptr lhs = parse_factor();
        while (consume('*')) {
            expr_node n;
            n.k = expr_node::kind::mul;
            n.lhs = std::move(lhs);
            n.rhs = parse_factor();
            lhs = node(std::move(n));
        }
        return lhs;
    }

    // factor := '-' factor | primary ('^' uint)?
    expr_ptr parse_factor() {
        if (consume('-')) {
            expr_node n;
            n.k = expr_node::kind::negate;
            n.lhs = parse_factor();
            return node(std::move(n));
        }
        expr_ptr base = parse_primary();
        if (consume('^')) {
            expr_node n;
            n.k = expr_node::kind::power;
            n.lhs = std::move(base);
            n.exponent = parse_uint("expected a nonnegative integer exponent");
            return node(std::move(n));
        }
        return base;
    }

    // primary := scalar | 'e' uint | 'e' | fn '(' expr ')' | '(' expr ')'
    expr_ptr parse_primary() {
        if (at_end()) throw parse_error(pos_, "expected a value");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            expr_ptr inner = parse_expr();
            if (!consume(')')) throw parse_error(pos_, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        throw parse_error(pos_, std::string("unexpected character '") + c + "'");
    }

    std::uint64_t parse_uint(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error(start, what);
        std::uint64_t value = 0;
        auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc()) throw parse_error(start, "integer out of range");
        return value;
    }

    // Numeric literal, lexed per field: digits with an optional adjacent
    // '.digits' (real64) or '/digits' (rational); plain digits for padic.
    expr_ptr parse_literal() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const char next = pos_ < text_.size() ? text_[pos_] : '\0';
        if (field_.kind() == field_kind::real64 && next == '.') {
            ++pos_;
            const std::size_t frac = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == frac) throw parse_error(frac, "expected digits after '.'");
        } else if (field_.kind() == field_kind::rational && next == '/') {
            ++pos_;
            const std::size_t den = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == den) throw parse_error(den, "expected digits after '/'");
        }
        const std::string_view span = text_.substr(start, pos_ - start);
        expr_node n;
        n.k = expr_node::kind::literal;
        try {
            n.lit = scalar::parse(span, field_);
        } catch (const parse_error& e) {
            throw parse_error(start + e.offset(), "invalid literal");
        }
        return node(std::move(n));
    }

    expr_ptr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "e") {
            // Adjacent digits index a generator; a bare 'e' is the unit.
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                expr_node n;
                n.k = expr_node::kind::generator;
                n.label = parse_uint("expected a generator index");
                return node(std::move(n));
            }
            expr_node n;
            n.k = expr_node::kind::unit;
            return node(std::move(n));
        }
        builtin_fn fn;
        if (name == "inv")
            fn = builtin_fn::inv;
        else if (name == "norm")
            fn = builtin_fn::norm;
        else if (name == "body")
            fn = builtin_fn::body;
        else if (name == "soul")
            fn = builtin_fn::soul;
        else if (name == "even")
            fn = builtin_fn::even;
        else if (name == "odd")
            fn = builtin_fn::odd;
        else if (name == "parity")
            fn = builtin_fn::parity;
        else
            throw parse_error(start, "unknown function \"" + std::string(name) + "\"");
        if (!consume('(')) throw parse_error(pos_, "expected '(' after function name");
        expr_ptr arg = parse_expr();
        if (!consume(')')) throw parse_error(pos_, "expected ')'");
        expr_node n;
        n.k = expr_node::kind::call;
        n.fn = fn;
        n.lhs = std::move(arg);
        return node(std::move(n));
    }

    std::string_view text_;
    field_descriptor field_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the expression grammar against a field (literal syntax is
/// field-specific). Throws parse_error with the byte offset on failure.
inline expr_ptr parse_expression(std::string_view text, const field_descriptor& field) {
    return detail::expr_parser(text, field).parse();
}

enum class output_format : std::uint8_t { text, json };

struct session_config {
    field_descriptor field = field_descriptor::rational();
    norm_mode norm = norm_mode::l1;
    ordering_function ordering = ordering_function::canonical();
    output_format format = output_format::text;
};

/// Rejects configurations whose algebra does not exist (sup norm over an
/// Archimedean field).
inline void validate(const session_config& cfg) {
    grassmann_algebra probe(cfg.field, cfg.norm, cfg.ordering);
    (void)probe;
}

/// norm(...) evaluates to a real number and parity(...) to a parity tag;
/// everything else evaluates to an algebra element. The non-element
/// results are terminal: feeding them back into arithmetic is an error.
using eval_result = std::variant<grassmann_element, double, parity_kind>;

namespace detail {

inline const grassmann_element& element_of(const eval_result& r) {
    if (const auto* e = std::get_if<grassmann_element>(&r)) return *e;
    throw config_error("norm and parity values cannot be used in arithmetic");
}

}  // namespace detail

inline eval_result evaluate(const expr_ptr& ast, const session_config& cfg) {
    using kind = expr_node::kind;
    switch (ast->k) {
        case kind::literal:
            return grassmann_element::unit(cfg.field, cfg.ordering).scaled(ast->lit);
        case kind::generator:
            return grassmann_element::generator(cfg.field, ast->label, cfg.ordering);
        case kind::unit:
            return grassmann_element::unit(cfg.field, cfg.ordering);
        case kind::add:
            return detail::element_of(evaluate(ast->lhs, cfg)) +
                   detail::element_of(evaluate(ast->rhs, cfg));
        case kind::sub:
            return detail::element_of(evaluate(ast->lhs, cfg)) -
                   detail::element_of(evaluate(ast->rhs, cfg));
        case kind::mul:
            return detail::element_of(evaluate(ast->lhs, cfg)) *
                   detail::element_of(evaluate(ast->rhs, cfg));
        case kind::power:
            return detail::element_of(evaluate(ast->lhs, cfg)).pow(ast->exponent);
        case kind::negate:
            return -detail::element_of(evaluate(ast->lhs, cfg));
        case kind::call: {
            const grassmann_element arg = detail::element_of(evaluate(ast->lhs, cfg));
            switch (ast->fn) {
                case builtin_fn::inv: return arg.inverse();
                case builtin_fn::norm:
                    return cfg.norm == norm_mode::l1 ? arg.norm_l1() : arg.norm_linf();
                case builtin_fn::body:
                    return grassmann_element::unit(cfg.field, cfg.ordering).scaled(arg.body());
                case builtin_fn::soul: return arg.soul();
                case builtin_fn::even: return arg.grade_projection(0);
                case builtin_fn::odd: return arg.grade_projection(1);
                case builtin_fn::parity: return arg.parity();
            }
            throw internal_error("unreachable builtin");
        }
    }
    throw internal_error("unreachable node kind");
}

inline const char* parity_name(parity_kind p) {
    switch (p) {
        case parity_kind::even: return "even";
        case parity_kind::odd: return "odd";
        case parity_kind::mixed: return "mixed";
        case parity_kind::zero: return "zero";
    }
    return "?";
}

namespace detail {

// Splits a coefficient into (is_negative, magnitude) for rendering. The
// p-adic fields have no sign to extract; their coefficients print as is.
inline std::pair<bool, scalar> render_sign(const scalar& c) {
    switch (c.descriptor().kind()) {
        case field_kind::real64:
            return std::signbit(c.real_value()) ? std::make_pair(true, -c)
                                                : std::make_pair(false, c);
        case field_kind::rational:
            return c.rational_value() < 0 ? std::make_pair(true, -c) : std::make_pair(false, c);
        case field_kind::padic:
            return std::make_pair(false, c);
    }
    return std::make_pair(false, c);
}

}  // namespace detail

/// Canonical text form: terms in graded-lex monomial order, the body as a
/// bare coefficient, unit coefficients elided, signs folded into the
/// separators for the signed fields. Examples: "0", "1 + e1*e2",
/// "2 + 3*e1 - e1*e2", "-e1".
inline std::string render_text(const grassmann_element& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& t : a.terms()) {
        const auto [negative, magnitude] = detail::render_sign(t.coeff);
        std::string piece;
        if (t.mono.empty()) {
            piece = magnitude.to_string();
        } else {
            if (!magnitude.is_one()) piece = magnitude.to_string() + "*";
            bool first_label = true;
            for (generator_label l : t.mono.labels()) {
                if (!first_label) piece += "*";
                piece += "e" + std::to_string(l);
                first_label = false;
            }
        }
        if (out.empty())
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

inline std::string render_text(const eval_result& r) {
    if (const auto* e = std::get_if<grassmann_element>(&r)) return render_text(*e);
    if (const auto* n = std::get_if<double>(&r)) return detail::double_to_string(*n);
    return parity_name(std::get<parity_kind>(r));
}

inline std::string render_json(const eval_result& r) {
    if (const auto* e = std::get_if<grassmann_element>(&r)) return to_json(*e).dump();
    json j;
    if (const auto* n = std::get_if<double>(&r))
        j["norm"] = *n;
    else
        j["parity"] = parity_name(std::get<parity_kind>(r));
    return j.dump();
}

inline std::string render(const eval_result& r, const session_config& cfg) {
    return cfg.format == output_format::text ? render_text(r) : render_json(r);
}

}  // namespace grassbanach

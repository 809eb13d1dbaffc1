#ifndef BASEFREE_PARSER_HPP
#define BASEFREE_PARSER_HPP

#include <cctype>
#include <string>
#include <vector>

#include "basefree/multipoly.hpp"

namespace basefree {

// Recursive-descent parser for the polynomial text grammar:
// rational literals (12, -3/7), named variables, + - * ^, parentheses.
// Multiplication is explicit; whitespace is insignificant.
class PolyParser {
  public:
    explicit PolyParser(VarsPtr vars) : vars_(std::move(vars)) {}

    PolyQ parse(const std::string& text) const {
        State st{text, 0};
        PolyQ p = parse_expr(st);
        skip_ws(st);
        if (st.pos != st.text.size())
            throw parse_error("unexpected character '" + std::string(1, st.text[st.pos]) +
                              "' at offset " + std::to_string(st.pos));
        return p;
    }

  private:
    struct State {
        const std::string& text;
        size_t pos;
    };

    static void skip_ws(State& st) {
        while (st.pos < st.text.size() && std::isspace(static_cast<unsigned char>(st.text[st.pos])))
            ++st.pos;
    }

    static bool peek(State& st, char c) {
        skip_ws(st);
        return st.pos < st.text.size() && st.text[st.pos] == c;
    }
    static bool accept(State& st, char c) {
        if (!peek(st, c)) return false;
        ++st.pos;
        return true;
    }

    PolyQ parse_expr(State& st) const {
        PolyQ acc = parse_term(st);
        for (;;) {
            if (accept(st, '+'))
                acc += parse_term(st);
            else if (accept(st, '-'))
                acc -= parse_term(st);
            else
                return acc;
        }
    }

    PolyQ parse_term(State& st) const {
        PolyQ acc = parse_factor(st);
        while (accept(st, '*')) acc *= parse_factor(st);
        return acc;
    }

    PolyQ parse_factor(State& st) const {
        bool negate = false;
        while (true) {
            if (accept(st, '-'))
                negate = !negate;
            else if (accept(st, '+'))
                ;
            else
                break;
        }
        PolyQ base = parse_atom(st);
        if (accept(st, '^')) {
            unsigned long e = parse_natural(st);
            base = base.pow(e);
        }
        return negate ? -base : base;
    }

    PolyQ parse_atom(State& st) const {
        skip_ws(st);
        if (st.pos >= st.text.size()) throw parse_error("unexpected end of input");
        char c = st.text[st.pos];
        if (c == '(') {
            ++st.pos;
            PolyQ inner = parse_expr(st);
            if (!accept(st, ')')) throw parse_error("missing ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number(st);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable(st);
        throw parse_error("unexpected character '" + std::string(1, c) + "' at offset " +
                          std::to_string(st.pos));
    }

    PolyQ parse_number(State& st) const {
        std::string num = read_digits(st);
        std::string den;
        // '/' binds only between integer literals, forming a rational literal
        size_t save = st.pos;
        if (accept(st, '/')) {
            skip_ws(st);
            if (st.pos < st.text.size() && std::isdigit(static_cast<unsigned char>(st.text[st.pos]))) {
                den = read_digits(st);
            } else {
                st.pos = save;
            }
        }
        Rational q(den.empty() ? num : num + "/" + den);
        q.canonicalize();
        return PolyQ::constant(vars_, q);
    }

    std::string read_digits(State& st) const {
        skip_ws(st);
        std::string s;
        while (st.pos < st.text.size() && std::isdigit(static_cast<unsigned char>(st.text[st.pos])))
            s += st.text[st.pos++];
        if (s.empty()) throw parse_error("expected digits at offset " + std::to_string(st.pos));
        return s;
    }

    unsigned long parse_natural(State& st) const {
        return std::stoul(read_digits(st));
    }

    PolyQ parse_variable(State& st) const {
        std::string name;
        while (st.pos < st.text.size()) {
            char c = st.text[st.pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                name += c, ++st.pos;
            else
                break;
        }
        for (size_t i = 0; i < vars_->size(); ++i)
            if ((*vars_)[i] == name) return PolyQ::variable(vars_, i, Rational(1));
        throw parse_error("unknown variable '" + name + "'");
    }

    VarsPtr vars_;
};

inline PolyQ parse_poly(const std::string& text, const VarsPtr& vars) {
    return PolyParser(vars).parse(text);
}

}  // namespace basefree

#endif

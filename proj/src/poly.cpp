#include "homstar/poly.hpp"

#include <cctype>
#include <sstream>

namespace homstar {

namespace {

std::string monomial_str(const VarSpec& vars, const Exps& e) {
    std::string s;
    for (int v = 0; v < vars.nvars(); ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.var_name(v);
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s;
}

std::string hbar_coeff_str(const HbarPoly& c) {
    // Renders c as a sum of scalar*h^k pieces; a lone non-real scalar is
    // parenthesised so the printed form re-parses unambiguously.
    std::string s;
    bool first = true;
    for (const auto& [k, v] : c.coef()) {
        std::string piece;
        Scalar a = v;
        bool neg = false;
        if (a.im == 0 && a.re < 0) {
            neg = true;
            a = -a;
        }
        std::string coef = a.str();
        bool needs_paren = (a.re != 0 && a.im != 0);
        if (needs_paren) coef = "(" + coef + ")";
        if (k == 0) {
            piece = coef;
        } else {
            std::string hp = (k == 1) ? "h" : ("h^" + std::to_string(k));
            piece = (coef == "1") ? hp : coef + "*" + hp;
        }
        if (first) {
            s = (neg ? "-" : "") + piece;
            first = false;
        } else {
            s += (neg ? "-" : "+") + piece;
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono = monomial_str(vars_, e);
        std::string coef = hbar_coeff_str(c);
        bool multi = c.coef().size() > 1;
        std::string piece;
        if (mono.empty()) {
            piece = multi ? "(" + coef + ")" : coef;
        } else if (coef == "1") {
            piece = mono;
        } else if (coef == "-1") {
            piece = "-" + mono;
        } else {
            if (multi) coef = "(" + coef + ")";
            piece = coef + "*" + mono;
        }
        if (first) {
            s = piece;
            first = false;
        } else {
            s += (piece[0] == '-') ? piece : "+" + piece;
            // keep "a-b" instead of "a+-b"
        }
    }
    return s;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return pos < s.size() ? s[pos++] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::string r;
        while (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])))) r += s[pos++];
        return r;
    }
    std::string digits() {
        skip_ws();
        std::string r;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) r += s[pos++];
        return r;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw StructuralError("parse_poly: " + msg + " at position " + std::to_string(pos) + " in \"" +
                              s + "\"");
    }
};

struct PolyParser {
    Lexer lx;
    VarSpec vars;
    int trunc;

    PolyParser(const std::string& text, VarSpec v, int k) : lx(text), vars(v), trunc(k) {}

    Poly parse() {
        Poly p = parse_sum();
        lx.skip_ws();
        if (lx.pos != lx.s.size()) lx.fail("trailing input");
        return p;
    }

    Poly parse_sum() {
        Poly acc(vars, trunc);
        bool neg = false;
        if (lx.eat('+')) {
        } else if (lx.eat('-')) {
            neg = true;
        }
        acc += parse_product(neg);
        while (true) {
            char c = lx.peek();
            if (c == '+') {
                lx.get();
                acc += parse_product(false);
            } else if (c == '-') {
                lx.get();
                acc += parse_product(true);
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_product(bool negated) {
        Poly acc = parse_factor();
        while (lx.eat('*')) acc = acc * parse_factor();
        return negated ? -acc : acc;
    }

    Poly parse_factor() {
        char c = lx.peek();
        if (c == '(') {
            lx.get();
            Poly inner = parse_sum();
            if (!lx.eat(')')) lx.fail("expected ')'");
            return maybe_power(inner);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lx.digits();
            Rational r(num);
            if (lx.eat('/')) {
                std::string den = lx.digits();
                if (den.empty()) lx.fail("expected denominator");
                r /= Rational(den);
            }
            r.canonicalize();
            return maybe_power(Poly::constant(vars, trunc, Scalar(r)));
        }
        std::string id = lx.ident();
        if (id == "i") return maybe_power(Poly::constant(vars, trunc, Scalar::i()));
        if (id == "h") return maybe_power(Poly::hbar(vars, trunc));
        if (id == "x" || id == "xi") {
            std::string idx = lx.digits();
            if (idx.empty()) lx.fail("expected variable index");
            int n = std::stoi(idx);
            int v;
            if (id == "x") {
                if (n < 1 || n > vars.dim) lx.fail("base variable index out of range");
                v = n - 1;
            } else {
                if (n < 1 || n > vars.rank) lx.fail("fibre variable index out of range");
                v = vars.dim + n - 1;
            }
            return maybe_power(Poly::variable(vars, trunc, v));
        }
        lx.fail("unexpected token");
    }

    Poly maybe_power(Poly base) {
        if (!lx.eat('^')) return base;
        std::string d = lx.digits();
        if (d.empty()) lx.fail("expected exponent");
        int n = std::stoi(d);
        Poly acc = Poly::constant(vars, trunc, Scalar(1));
        for (int j = 0; j < n; ++j) acc = acc * base;
        return acc;
    }
};

} // namespace

Poly parse_poly(const std::string& text, VarSpec vars, int trunc) {
    return PolyParser(text, vars, trunc).parse();
}

Rational multi_multinomial(const Exps& alpha, const std::vector<const Exps*>& parts) {
    Rational r(1);
    for (size_t v = 0; v < alpha.size(); ++v) {
        int rem = alpha[v];
        for (const Exps* p : parts) {
            r *= binomial(rem, (*p)[v]);
            rem -= (*p)[v];
        }
    }
    return r;
}

namespace {

void splittings_rec(const Exps& alpha, int nparts, size_t v, std::vector<Exps>& parts, Exps& rem,
                    const std::function<void(const std::vector<Exps>&, const Rational&)>& fn) {
    if (v == alpha.size()) {
        std::vector<const Exps*> ptrs;
        ptrs.reserve(parts.size());
        for (const auto& p : parts) ptrs.push_back(&p);
        fn(parts, multi_multinomial(alpha, ptrs));
        return;
    }
    // distribute rem[v] = alpha[v] over nparts slots
    std::function<void(int, int)> go = [&](int slot, int left) {
        if (slot == nparts - 1) {
            parts[slot][v] = left;
            splittings_rec(alpha, nparts, v + 1, parts, rem, fn);
            parts[slot][v] = 0;
            return;
        }
        for (int take = 0; take <= left; ++take) {
            parts[slot][v] = take;
            go(slot + 1, left - take);
        }
        parts[slot][v] = 0;
    };
    go(0, alpha[v]);
}

} // namespace

void for_each_splitting(const Exps& alpha, int nparts,
                        const std::function<void(const std::vector<Exps>&, const Rational&)>& fn) {
    if (nparts <= 0) throw StructuralError("for_each_splitting: nparts must be positive");
    std::vector<Exps> parts(nparts, Exps(alpha.size(), 0));
    Exps rem = alpha;
    splittings_rec(alpha, nparts, 0, parts, rem, fn);
}

} // namespace homstar

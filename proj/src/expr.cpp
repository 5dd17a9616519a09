#include "hallp1/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace hallp1 {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    long q;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    long parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", pos);
        return std::strtol(s.substr(start, pos - start).c_str(), nullptr, 10);
    }
    long parse_int() {
        skip_ws();
        bool neg = accept('-');
        long n = parse_uint();
        return neg ? -n : n;
    }
};

Partition parse_partition_body(Cursor& cur) {
    cur.expect('[');
    Partition p;
    if (!cur.accept(']')) {
        p.push_back(static_cast<int>(cur.parse_uint()));
        while (cur.accept(',')) p.push_back(static_cast<int>(cur.parse_uint()));
        cur.expect(']');
    }
    if (!is_valid_partition(p)) throw ParseError("parts must be positive and weakly decreasing", cur.pos);
    return p;
}

ClosedPoint parse_point_body(Cursor& cur) {
    if (cur.peek() == 'i') {
        std::size_t at = cur.pos;
        if (cur.s.compare(cur.pos, 3, "inf") == 0) {
            cur.pos += 3;
            return ClosedPoint::infinity(cur.q);
        }
        throw ParseError("expected 'inf' or a coefficient list", at);
    }
    std::size_t at = cur.pos;
    cur.expect('[');
    std::vector<int> coeffs;
    coeffs.push_back(static_cast<int>(cur.parse_int()));
    while (cur.accept(',')) coeffs.push_back(static_cast<int>(cur.parse_int()));
    cur.expect(']');
    try {
        return ClosedPoint::finite(FqPoly{cur.q, coeffs});
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), at);
    }
}

HallElement parse_expr(Cursor& cur);

// One class or scalar or parenthesized subexpression, as an element.
HallElement parse_factor(Cursor& cur) {
    char c = cur.peek();
    std::size_t at = cur.pos;
    if (c == '(') {
        cur.expect('(');
        HallElement e = parse_expr(cur);
        cur.expect(')');
        return e;
    }
    if (c == 'O') {
        ++cur.pos;
        cur.expect('(');
        int n = static_cast<int>(cur.parse_int());
        cur.expect(')');
        int a = 1;
        if (cur.accept('^')) {
            a = static_cast<int>(cur.parse_uint());
            if (a <= 0) throw ParseError("exponent must be positive", at);
        }
        return HallElement::single(cur.q, SheafClass::line_power(n, a), Coeff::one(cur.q));
    }
    if (c == 'T') {
        ++cur.pos;
        cur.expect('(');
        ClosedPoint x = parse_point_body(cur);
        cur.expect(',');
        Partition lam = parse_partition_body(cur);
        cur.expect(')');
        return HallElement::single(cur.q, SheafClass::of_torsion(TorsionClass::at(x, lam)),
                                   Coeff::one(cur.q));
    }
    if (c == 'v') {
        ++cur.pos;
        long k = 1;
        if (cur.accept('^')) k = cur.parse_int();
        return HallElement::unit(cur.q).scaled(Coeff::v_pow(k, cur.q));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        long num = cur.parse_uint();
        long den = 1;
        if (cur.accept('/')) {
            den = cur.parse_uint();
            if (den == 0) throw ParseError("zero denominator", at);
        }
        return HallElement::unit(cur.q).scaled(Coeff::from_rat(make_rat(num, den), cur.q));
    }
    throw ParseError("expected a class, scalar, or '('", at);
}

HallElement parse_term(Cursor& cur) {
    HallElement acc = parse_factor(cur);
    for (;;) {
        char c = cur.peek();
        if (c == '*') {
            ++cur.pos;
            acc = ringel_product(acc, parse_factor(cur));
        } else if (c == '.') {
            ++cur.pos;
            acc = hall_product(acc, parse_factor(cur));
        } else {
            return acc;
        }
    }
}

HallElement parse_expr(Cursor& cur) {
    bool neg = cur.accept('-');
    HallElement acc = parse_term(cur);
    if (neg) acc = acc.scaled(-Coeff::one(cur.q));
    for (;;) {
        char c = cur.peek();
        if (c == '+') {
            ++cur.pos;
            acc = acc + parse_term(cur);
        } else if (c == '-') {
            ++cur.pos;
            acc = acc - parse_term(cur);
        } else {
            return acc;
        }
    }
}

}  // namespace

Partition parse_partition(const std::string& s) {
    Cursor cur{s, 0, 2};
    Partition p = parse_partition_body(cur);
    if (!cur.eof()) throw ParseError("trailing input after partition", cur.pos);
    return p;
}

ClosedPoint parse_point(const std::string& s, long q) {
    Cursor cur{s, 0, q};
    ClosedPoint x = parse_point_body(cur);
    if (!cur.eof()) throw ParseError("trailing input after point", cur.pos);
    return x;
}

HallElement parse_element_expr(const std::string& s, long q) {
    Cursor cur{s, 0, q};
    if (cur.eof()) throw ParseError("empty expression", cur.pos);
    HallElement e = parse_expr(cur);
    if (!cur.eof()) throw ParseError("trailing input after expression", cur.pos);
    return e;
}

GenWord parse_gen_word(const std::string& s) {
    GenWord w;
    std::istringstream in(s);
    std::string tok;
    std::size_t offset = 0;
    while (in >> tok) {
        std::size_t at = s.find(tok, offset);
        offset = at + tok.size();
        if (tok.size() < 2 || (tok[0] != 'g' && tok[0] != 'h'))
            throw ParseError("letter must look like g<int> or h<uint>", at);
        Cursor cur{tok, 1, 2};
        long idx = cur.parse_int();
        if (cur.pos != tok.size()) throw ParseError("trailing input in letter", at + cur.pos);
        if (tok[0] == 'h') {
            if (idx <= 0) throw ParseError("h-index must be positive", at);
            w.push_back(h_letter(static_cast<int>(idx)));
        } else {
            w.push_back(g_letter(static_cast<int>(idx)));
        }
    }
    return w;
}

}  // namespace hallp1

/*
   Copyright 2026 the circinv developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "circinv/parse.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace circinv {

namespace {

// Recursive-descent parser over an abstract polynomial ring. The ring hook
// resolves variable references; everything else is shared between the x/y and
// z/w front ends.
template <typename PolyT>
class Parser {
public:
    using VarHook = std::function<PolyT(char family, unsigned index, size_t pos)>;

    Parser(const std::string& text, unsigned n, PolyT unit, VarHook hook)
        : text_(text), n_(n), one_(std::move(unit)), var_(std::move(hook))
    {
    }

    PolyT run()
    {
        skip_ws();
        PolyT result = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        std::ostringstream os;
        os << "syntax error at position " << pos_ << ": " << msg;
        throw Error(ErrorCode::SyntaxError, os.str());
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    unsigned long parse_uint()
    {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 1000000000ul) fail("number too large");
            ++pos_;
        }
        return v;
    }

    PolyT parse_expr()
    {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        PolyT acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    PolyT parse_term()
    {
        PolyT acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    PolyT parse_factor()
    {
        PolyT base = parse_primary();
        if (eat('^')) {
            unsigned long k = parse_uint();
            PolyT acc = one_;
            for (unsigned long i = 0; i < k; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    PolyT parse_primary()
    {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            PolyT inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long num = parse_uint();
            if (eat('/')) {
                size_t at = pos_;
                unsigned long den = parse_uint();
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
                return one_.scaled(CycElement::from_rational(
                    n_, Rational(static_cast<long>(num), static_cast<long>(den))));
            }
            return one_.scaled(CycElement::from_int(n_, static_cast<long>(num)));
        }
        if (text_.compare(pos_, 4, "zeta") == 0) {
            pos_ += 4;
            long k = 1;
            if (eat('^')) k = static_cast<long>(parse_uint());
            return one_.scaled(CycElement::zeta_power(n_, k));
        }
        if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
            size_t at = pos_;
            ++pos_;
            unsigned long idx = parse_uint();
            return var_(c, static_cast<unsigned>(idx), at);
        }
        fail("expected a number, variable, zeta, or '('");
    }

    const std::string& text_;
    unsigned n_;
    PolyT one_;
    typename Parser::VarHook var_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, unsigned n, Basis basis)
{
    const char family = basis == Basis::X ? 'x' : 'y';
    auto hook = [&](char fam, unsigned index, size_t pos) -> Poly {
        if (fam != family) {
            std::ostringstream os;
            os << "syntax error at position " << pos << ": variable '" << fam
               << "' does not belong to the " << basis_name(basis) << " basis";
            throw Error(ErrorCode::SyntaxError, os.str());
        }
        if (index >= n) {
            std::ostringstream os;
            os << "variable subscript " << index << " out of range for n = " << n;
            throw Error(ErrorCode::IndexOutOfRange, os.str());
        }
        return Poly::variable(n, basis, index);
    };
    Parser<Poly> parser(text, n, Poly::constant(n, basis, CycElement::one(n)), hook);
    return parser.run();
}

GenPoly parse_genpoly(const std::string& text, unsigned n, unsigned p, unsigned q)
{
    auto hook = [&](char fam, unsigned index, size_t pos) -> GenPoly {
        if (fam == 'z') {
            if (index >= n / p)
                throw Error(ErrorCode::IndexOutOfRange,
                            "z subscript " + std::to_string(index) + " out of range");
            return GenPoly::z_var(n, p, q, index);
        }
        if (fam == 'w') {
            if (index >= n / q)
                throw Error(ErrorCode::IndexOutOfRange,
                            "w subscript " + std::to_string(index) + " out of range");
            return GenPoly::w_var(n, p, q, index);
        }
        std::ostringstream os;
        os << "syntax error at position " << pos << ": expected a z or w variable";
        throw Error(ErrorCode::SyntaxError, os.str());
    };
    Parser<GenPoly> parser(text, n, GenPoly::constant(n, p, q, CycElement::one(n)), hook);
    return parser.run();
}

namespace {

void print_coeff_and_monomial(std::ostream& os, const CycElement& c, const std::string& monomial,
                              bool first)
{
    bool negated = false;
    CycElement coeff = c;
    if (c.is_rational() && c.rational_value() < 0) {
        negated = true;
        coeff = -c;
    }
    if (first)
        os << (negated ? "-" : "");
    else
        os << (negated ? " - " : " + ");
    bool unit = coeff.is_rational() && coeff.rational_value() == 1 && !monomial.empty();
    if (!unit) {
        if (coeff.is_rational()) {
            os << coeff.rational_value().get_str();
        } else {
            os << "(" << coeff.str() << ")";
        }
        if (!monomial.empty()) os << "*";
    }
    if (monomial.empty() && unit) os << "1";
    os << monomial;
}

std::string monomial_str(const char* family, const ExpVec& exp)
{
    std::ostringstream os;
    bool printed = false;
    for (size_t i = 0; i < exp.size(); ++i) {
        if (exp.e[i] == 0) continue;
        if (printed) os << "*";
        printed = true;
        os << family << i;
        if (exp.e[i] > 1) os << "^" << exp.e[i];
    }
    return os.str();
}

}  // namespace

std::string print_poly(const Poly& f)
{
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        print_coeff_and_monomial(os, it->second, monomial_str(basis_name(f.basis()), it->first), first);
        first = false;
    }
    return os.str();
}

std::string print_genpoly(const GenPoly& f)
{
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        std::string mono = monomial_str("z", it->first.c);
        std::string wpart = monomial_str("w", it->first.d);
        if (!mono.empty() && !wpart.empty())
            mono += "*" + wpart;
        else if (!wpart.empty())
            mono = wpart;
        print_coeff_and_monomial(os, it->second, mono, first);
        first = false;
    }
    return os.str();
}

}  // namespace circinv

#include "mfk/ratexpr.hpp"

#include "mfk/errors.hpp"

namespace mfk {

RatExpr::RatExpr(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw ZeroDenominator();
    if (num.is_zero()) {
        num_ = Poly{};
        den_ = Poly::constant(1);
        return;
    }
    Poly n = num, d = den;
    if (!d.is_constant() && !n.is_constant()) {
        Poly g = Poly::gcd(n, d);
        if (!g.is_one()) {
            n = Poly::divexact(n, g);
            d = Poly::divexact(d, g);
        }
    }
    // den integer-primitive with positive leading coefficient
    Rat c = d.rational_content();
    if (d.leading_coeff() < 0) c = -c;
    den_ = d.scaled(Rat(1) / c);
    num_ = n.scaled(Rat(1) / c);
}

RatExpr normalize(const Poly& num, const Poly& den) { return RatExpr(num, den); }

RatExpr RatExpr::operator+(const RatExpr& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatExpr(num_ + o.num_, den_);
    Poly g = Poly::gcd(den_, o.den_);
    if (g.is_one() || g.is_constant()) return RatExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Poly da = Poly::divexact(den_, g);
    Poly db = Poly::divexact(o.den_, g);
    return RatExpr(num_ * db + o.num_ * da, da * o.den_);
}

RatExpr RatExpr::operator-(const RatExpr& o) const { return *this + (-o); }

RatExpr RatExpr::operator-() const {
    RatExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

RatExpr RatExpr::operator*(const RatExpr& o) const {
    if (is_zero() || o.is_zero()) return RatExpr{};
    // cross-cancel before multiplying to keep the gcd inputs small
    RatExpr a(num_, o.den_);
    RatExpr b(o.num_, den_);
    return RatExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RatExpr RatExpr::operator/(const RatExpr& o) const {
    if (o.is_zero()) throw ZeroDenominator("division by zero expression");
    return *this * RatExpr(o.den_, o.num_);
}

RatExpr RatExpr::pow(int e) const {
    if (e < 0) {
        if (is_zero()) throw ZeroDenominator("zero to a negative power");
        return RatExpr(den_, num_).pow(-e);
    }
    return RatExpr(num_.pow(e), den_.pow(e));
}

std::set<Indet> RatExpr::vars() const {
    std::set<Indet> s = num_.vars();
    for (auto& v : den_.vars()) s.insert(v);
    return s;
}

RatExpr RatExpr::diff(const Indet& v) const {
    if (!num_.contains(v) && !den_.contains(v)) return RatExpr{};
    if (den_.is_constant()) return RatExpr(num_.diff(v), den_);
    return RatExpr(num_.diff(v) * den_ - num_ * den_.diff(v), den_ * den_);
}

// simultaneous: a binding's image is never re-substituted
RatExpr RatExpr::substitute(const std::map<Indet, RatExpr>& bindings) const {
    auto apply = [&](const Poly& p) {
        RatExpr acc;
        for (auto& [m, c] : p.terms()) {
            RatExpr term = RatExpr::constant(c);
            for (auto& [v, e] : m.factors()) {
                auto it = bindings.find(v);
                const RatExpr base = it == bindings.end() ? RatExpr::var(v) : it->second;
                term *= base.pow(e);
            }
            acc += term;
        }
        return acc;
    };
    RatExpr d = apply(den_);
    if (d.is_zero()) throw ZeroDenominator("substitution sends a denominator to zero");
    return apply(num_) / d;
}

RatExpr diff_partial(const RatExpr& e, const Indet& v) { return e.diff(v); }

RatExpr substitute(const RatExpr& e, const std::map<Indet, RatExpr>& bindings) {
    return e.substitute(bindings);
}

std::string RatExpr::to_string() const {
    if (den_.is_one()) return num_.to_string();
    auto wrap = [](const Poly& p, bool denominator) {
        std::string s = p.to_string();
        if (p.term_count() > 1) return "(" + s + ")";
        // a denominator must re-parse as one factor, so any '*' forces parens
        if (denominator && s.find('*') != std::string::npos) return "(" + s + ")";
        return s;
    };
    return wrap(num_, false) + " / " + wrap(den_, true);
}

} // namespace mfk

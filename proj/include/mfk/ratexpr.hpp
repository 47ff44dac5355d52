#pragma once

#include <map>

#include "mfk/poly.hpp"

namespace mfk {

// Exact rational function: num/den coprime, den integer-primitive with
// positive leading coefficient (so den = 1 whenever it is constant).
class RatExpr {
public:
    RatExpr() : num_(), den_(Poly::constant(1)) {}
    RatExpr(const Poly& num, const Poly& den); // normalizes
    /*implicit*/ RatExpr(const Poly& num) : num_(num), den_(Poly::constant(1)) {}

    static RatExpr constant(const Rat& c) { return RatExpr(Poly::constant(c)); }
    static RatExpr constant(long c) { return RatExpr(Poly::constant(c)); }
    static RatExpr var(const Indet& v) { return RatExpr(Poly::var(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatExpr operator+(const RatExpr& o) const;
    RatExpr operator-(const RatExpr& o) const;
    RatExpr operator*(const RatExpr& o) const;
    RatExpr operator/(const RatExpr& o) const; // throws ZeroDenominator on o = 0
    RatExpr operator-() const;
    RatExpr& operator+=(const RatExpr& o) { return *this = *this + o; }
    RatExpr& operator-=(const RatExpr& o) { return *this = *this - o; }
    RatExpr& operator*=(const RatExpr& o) { return *this = *this * o; }
    RatExpr pow(int e) const; // negative exponents allowed away from zero
    bool operator==(const RatExpr& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::set<Indet> vars() const;
    RatExpr diff(const Indet& v) const;
    RatExpr substitute(const std::map<Indet, RatExpr>& bindings) const;

    std::string to_string() const;

private:
    Poly num_, den_;
};

// the spec-level entry point: canonical representative of num/den
RatExpr normalize(const Poly& num, const Poly& den);

RatExpr diff_partial(const RatExpr& e, const Indet& v);
RatExpr substitute(const RatExpr& e, const std::map<Indet, RatExpr>& bindings);

} // namespace mfk

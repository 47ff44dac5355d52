#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "mfk/indet.hpp"

namespace mfk {

using Rat = mpq_class;

// Power product over Indets.  Factors sorted ascending by the canonical
// indeterminate order, exponents strictly positive.
class Monomial {
public:
    Monomial() = default;

    int degree() const;
    int deg(const Indet& v) const;
    bool empty() const { return f_.empty(); }
    const std::vector<std::pair<Indet, int>>& factors() const { return f_; }

    Monomial times(const Indet& v, int e) const;
    Monomial operator*(const Monomial& o) const;
    // exact quotient, nullopt if o does not divide *this
    std::optional<Monomial> divided_by(const Monomial& o) const;

    // graded lexicographic: total degree first, then exponents compared from the
    // highest indeterminate down
    static int cmp(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const { return cmp(*this, o) == 0; }

private:
    std::vector<std::pair<Indet, int>> f_;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) < 0; }
};

// Sparse multivariate polynomial over Q.
class Poly {
public:
    Poly() = default;
    static Poly constant(const Rat& c);
    static Poly constant(long c) { return constant(Rat(c)); }
    static Poly var(const Indet& v, int exp = 1);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    Rat constant_value() const; // requires is_constant
    bool is_one() const { return is_constant() && !is_zero() && constant_value() == 1; }

    const std::map<Monomial, Rat, MonomialLess>& terms() const { return t_; }
    size_t term_count() const { return t_.size(); }

    // leading data w.r.t. the canonical (graded-lex) order
    const Monomial& leading_monomial() const;
    const Rat& leading_coeff() const;
    int total_degree() const; // -1 for zero

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly scaled(const Rat& c) const;
    Poly pow(int e) const;
    bool operator==(const Poly& o) const;

    // variables
    std::set<Indet> vars() const;
    std::optional<Indet> max_var() const; // highest indeterminate present
    int degree_in(const Indet& v) const;
    bool contains(const Indet& v) const;

    // coefficients of v^k, as polynomials in the remaining indeterminates
    std::vector<Poly> coeffs_in(const Indet& v) const; // index = power of v, size deg+1

    Poly diff(const Indet& v) const;

    // exact division; throws Error if not exact (internal misuse)
    static Poly divexact(const Poly& a, const Poly& b);
    // canonical gcd: integer-primitive with positive leading coefficient;
    // gcd(0,0) = 0, gcd with a nonzero constant = 1
    static Poly gcd(const Poly& a, const Poly& b);

    // rational c > 0 such that (*this)/c has coprime integer coefficients
    Rat rational_content() const;
    // integer-primitive, positive leading coefficient version of *this
    Poly normalized_primitive() const;

    std::string to_string() const;

private:
    void insert_term(const Monomial& m, const Rat& c);
    std::map<Monomial, Rat, MonomialLess> t_;
};

} // namespace mfk

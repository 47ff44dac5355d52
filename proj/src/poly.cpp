#include "mfk/poly.hpp"

#include <algorithm>
#include <random>

#include "mfk/errors.hpp"

namespace mfk {

// ---------------------------------------------------------------- Monomial

int Monomial::degree() const {
    int d = 0;
    for (auto& [v, e] : f_) d += e;
    return d;
}

int Monomial::deg(const Indet& v) const {
    for (auto& [w, e] : f_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::times(const Indet& v, int e) const {
    if (e == 0) return *this;
    Monomial r;
    bool placed = false;
    for (auto& [w, we] : f_) {
        if (!placed && v.cmp(w) < 0) {
            r.f_.emplace_back(v, e);
            placed = true;
        }
        if (w == v) {
            int ne = we + e;
            if (ne < 0) throw Error("Monomial: negative exponent");
            if (ne > 0) r.f_.emplace_back(w, ne);
            placed = true;
        } else {
            r.f_.emplace_back(w, we);
        }
    }
    if (!placed) r.f_.emplace_back(v, e);
    return r;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->first.cmp(b->first) < 0)) {
            r.f_.push_back(*a++);
        } else if (a == f_.end() || b->first.cmp(a->first) < 0) {
            r.f_.push_back(*b++);
        } else {
            r.f_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
    Monomial r;
    auto a = f_.begin();
    for (auto& [v, e] : o.f_) {
        while (a != f_.end() && a->first.cmp(v) < 0) r.f_.push_back(*a++);
        if (a == f_.end() || !(a->first == v) || a->second < e) return std::nullopt;
        if (a->second > e) r.f_.emplace_back(a->first, a->second - e);
        ++a;
    }
    while (a != f_.end()) r.f_.push_back(*a++);
    return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // compare from the highest indeterminate down
    auto ia = a.f_.rbegin();
    auto ib = b.f_.rbegin();
    while (ia != a.f_.rend() && ib != b.f_.rend()) {
        int c = ia->first.cmp(ib->first);
        if (c != 0) {
            // the monomial owning the higher indeterminate is larger
            return c > 0 ? 1 : -1;
        }
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != a.f_.rend()) return 1;
    if (ib != b.f_.rend()) return -1;
    return 0;
}

// -------------------------------------------------------------------- Poly

void Poly::insert_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly Poly::constant(const Rat& c) {
    Poly p;
    p.insert_term(Monomial{}, c);
    return p;
}

Poly Poly::var(const Indet& v, int exp) {
    if (exp < 0) throw Error("Poly::var: negative exponent");
    Poly p;
    p.insert_term(Monomial{}.times(v, exp), Rat(1));
    return p;
}

Rat Poly::constant_value() const {
    if (t_.empty()) return Rat(0);
    if (!is_constant()) throw Error("Poly::constant_value on non-constant");
    return t_.begin()->second;
}

const Monomial& Poly::leading_monomial() const {
    if (t_.empty()) throw Error("leading term of zero polynomial");
    return t_.rbegin()->first;
}

const Rat& Poly::leading_coeff() const {
    if (t_.empty()) throw Error("leading term of zero polynomial");
    return t_.rbegin()->second;
}

int Poly::total_degree() const { return t_.empty() ? -1 : t_.rbegin()->first.degree(); }

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.t_) insert_term(m, c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.t_) insert_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [ma, ca] : t_)
        for (auto& [mb, cb] : o.t_) r.insert_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return Poly{};
    Poly r;
    for (auto& [m, k] : t_) r.t_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw Error("Poly::pow: negative exponent");
    Poly r = constant(1);
    Poly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto a = t_.begin();
    auto b = o.t_.begin();
    for (; a != t_.end(); ++a, ++b)
        if (!(a->first == b->first) || a->second != b->second) return false;
    return true;
}

std::set<Indet> Poly::vars() const {
    std::set<Indet> s;
    for (auto& [m, c] : t_)
        for (auto& [v, e] : m.factors()) s.insert(v);
    return s;
}

std::optional<Indet> Poly::max_var() const {
    std::optional<Indet> best;
    for (auto& [m, c] : t_)
        for (auto& [v, e] : m.factors())
            if (!best || best->cmp(v) < 0) best = v;
    return best;
}

int Poly::degree_in(const Indet& v) const {
    int d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.deg(v));
    return d;
}

bool Poly::contains(const Indet& v) const {
    for (auto& [m, c] : t_)
        if (m.deg(v) > 0) return true;
    return false;
}

std::vector<Poly> Poly::coeffs_in(const Indet& v) const {
    std::vector<Poly> out(static_cast<size_t>(degree_in(v)) + 1);
    for (auto& [m, c] : t_) {
        int e = m.deg(v);
        out[static_cast<size_t>(e)].insert_term(*m.divided_by(Monomial{}.times(v, e)), c);
    }
    return out;
}

Poly Poly::diff(const Indet& v) const {
    Poly r;
    for (auto& [m, c] : t_) {
        int e = m.deg(v);
        if (e == 0) continue;
        r.insert_term(m.times(v, -1), c * e);
    }
    return r;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("divexact by zero");
    Poly rem = a;
    Poly q;
    while (!rem.is_zero()) {
        auto mq = rem.leading_monomial().divided_by(b.leading_monomial());
        if (!mq) throw Error("divexact: not divisible");
        Rat cq = rem.leading_coeff() / b.leading_coeff();
        Poly t;
        t.insert_term(*mq, cq);
        q += t;
        rem -= t * b;
    }
    return q;
}

Rat Poly::rational_content() const {
    if (t_.empty()) return Rat(1);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [m, c] : t_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat r(num_gcd, den_lcm);
    r.canonicalize();
    if (r < 0) r = -r;
    return r;
}

Poly Poly::normalized_primitive() const {
    if (t_.empty()) return *this;
    Rat c = rational_content();
    if (leading_coeff() < 0) c = -c;
    return scaled(Rat(1) / c);
}

namespace {

// min-exponent power product over all terms (the monomial part of the content)
Monomial monomial_content(const Poly& p) {
    Monomial g;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        if (first) {
            g = m;
            first = false;
            continue;
        }
        Monomial next;
        for (auto& [v, e] : g.factors()) {
            int d = std::min(e, m.deg(v));
            if (d > 0) next = next.times(v, d);
        }
        g = next;
        if (g.empty()) break;
    }
    return g;
}

Poly divide_by_monomial(const Poly& p, const Monomial& m) {
    if (m.empty()) return p;
    Poly q;
    for (auto& [mm, c] : p.terms()) {
        auto d = mm.divided_by(m);
        if (!d) throw Error("divide_by_monomial: not a common factor");
        Poly t;
        t += Poly::constant(c);
        for (auto& [v, e] : d->factors()) t = t * Poly::var(v, e);
        q += t;
    }
    return q;
}

Poly monomial_to_poly(const Monomial& m) {
    Poly t = Poly::constant(1);
    for (auto& [v, e] : m.factors()) t = t * Poly::var(v, e);
    return t;
}

// univariate gcd degree by plain Euclid over Q; inputs as dense coefficient
// vectors (index = power).  Returns -1 when either input is identically zero.
int euclid_degree(std::vector<Rat> A, std::vector<Rat> B) {
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(A);
    trim(B);
    if (A.empty() || B.empty()) return -1;
    while (!B.empty()) {
        if (A.size() < B.size()) std::swap(A, B);
        // A -= (lcA/lcB) x^(dA-dB) B
        Rat f = A.back() / B.back();
        size_t shift = A.size() - B.size();
        for (size_t i = 0; i < B.size(); ++i) A[i + shift] -= f * B[i];
        trim(A);
        std::swap(A, B);
    }
    return static_cast<int>(A.size()) - 1;
}

// coefficients of p in v after substituting fixed rational values for every
// other indeterminate
std::vector<Rat> specialize(const Poly& p, const Indet& v, const std::map<Indet, Rat>& pt) {
    std::vector<Rat> c(static_cast<size_t>(p.degree_in(v)) + 1, Rat(0));
    for (auto& [m, coef] : p.terms()) {
        Rat val = coef;
        int e = 0;
        for (auto& [w, ex] : m.factors()) {
            if (w == v) {
                e = ex;
                continue;
            }
            const Rat& base = pt.at(w);
            for (int i = 0; i < ex; ++i) val *= base;
        }
        c[static_cast<size_t>(e)] += val;
    }
    return c;
}

// pseudo-remainder of a by b w.r.t. main variable v: lc(b)^(da-db+1) * a mod b
Poly prem(const Poly& a, const Poly& b, const Indet& v, const std::vector<Poly>& bc) {
    int db = static_cast<int>(bc.size()) - 1;
    const Poly& lb = bc.back();
    Poly r = a;
    int dr = r.degree_in(v);
    while (!r.is_zero() && dr >= db) {
        auto rc = r.coeffs_in(v);
        const Poly& lr = rc.back();
        // r = lb * r - lr * v^(dr-db) * b
        r = lb * r - lr * Poly::var(v, dr - db) * b;
        int nd = r.degree_in(v);
        if (!r.is_zero() && nd >= dr) throw Error("prem: degree did not drop");
        dr = r.is_zero() ? -1 : nd;
    }
    return r;
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.normalized_primitive();
    if (b.is_zero()) return a.normalized_primitive();
    if (a.is_constant() || b.is_constant()) return constant(1);
    if (a == b) return a.normalized_primitive();

    // pull out pure power-product factors first
    Monomial ma = monomial_content(a), mb = monomial_content(b);
    if (!ma.empty() || !mb.empty()) {
        Monomial common;
        for (auto& [v, e] : ma.factors()) {
            int d = std::min(e, mb.deg(v));
            if (d > 0) common = common.times(v, d);
        }
        Poly inner = gcd(divide_by_monomial(a, ma), divide_by_monomial(b, mb));
        return (inner * monomial_to_poly(common)).normalized_primitive();
    }

    Indet v = *a.max_var();
    if (auto w = b.max_var(); v.cmp(*w) < 0) v = *w;

    // contents and primitive parts w.r.t. v
    auto content_wrt = [&](const Poly& p) {
        Poly g;
        for (auto& c : p.coeffs_in(v))
            if (!c.is_zero()) {
                g = gcd(g, c);
                if (g.is_one()) break;
            }
        return g;
    };

    if (!a.contains(v)) {
        // v only in b: gcd(a, cont_v(b))
        return gcd(a, content_wrt(b));
    }
    if (!b.contains(v)) return gcd(b, content_wrt(a));

    std::set<Indet> others = a.vars();
    for (auto& w : b.vars()) others.insert(w);
    others.erase(v);

    if (others.empty()) {
        // genuinely univariate: plain Euclid over Q, keep the last remainder
        auto A = specialize(a, v, {});
        auto B = specialize(b, v, {});
        auto trim = [](std::vector<Rat>& p) {
            while (!p.empty() && p.back() == 0) p.pop_back();
        };
        trim(A);
        trim(B);
        while (!B.empty()) {
            if (A.size() < B.size()) std::swap(A, B);
            Rat f = A.back() / B.back();
            size_t shift = A.size() - B.size();
            for (size_t i = 0; i < B.size(); ++i) A[i + shift] -= f * B[i];
            trim(A);
            std::swap(A, B);
        }
        Poly g;
        for (size_t i = 0; i < A.size(); ++i) g += var(v, static_cast<int>(i)).scaled(A[i]);
        return g.normalized_primitive();
    }

    // Coprimality filter: specializing the other indeterminates can only raise
    // the gcd degree in v (when the leading coefficients survive), so a
    // specialized gcd of degree 0 proves the true gcd is free of v.
    {
        thread_local std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> val(2, 97);
        for (int attempt = 0; attempt < 4; ++attempt) {
            std::map<Indet, Rat> pt;
            for (auto& w : others) pt.emplace(w, Rat(val(rng)));
            auto A = specialize(a, v, pt);
            auto B = specialize(b, v, pt);
            if (A.back() == 0 || B.back() == 0) continue; // unlucky point
            if (euclid_degree(A, B) == 0) return gcd(content_wrt(a), content_wrt(b));
            break;
        }
    }

    Poly ca = content_wrt(a);
    Poly cb = content_wrt(b);
    Poly g0 = gcd(ca, cb);
    Poly A = divexact(a, ca);
    Poly B = divexact(b, cb);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);

    // subresultant polynomial remainder sequence
    Poly g = constant(1), h = constant(1);
    while (true) {
        auto bc = B.coeffs_in(v);
        int d = A.degree_in(v) - B.degree_in(v);
        Poly R = prem(A, B, v, bc);
        if (R.is_zero()) break;
        if (R.degree_in(v) == 0) {
            // coprime in v; gcd is the content part only
            return g0.normalized_primitive();
        }
        A = B;
        Poly divisor = g * h.pow(d);
        B = divexact(R, divisor);
        g = bc.back();
        // h = g^d * h^(1-d)
        if (d == 0) {
            // h unchanged
        } else if (d == 1) {
            h = g;
        } else {
            h = divexact(g.pow(d), h.pow(d - 1));
        }
    }
    // primitive part of the final B w.r.t. v
    Poly cB = content_wrt(B);
    Poly pp = divexact(B, cB);
    return (g0 * pp).normalized_primitive();
}

std::string Poly::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    // canonical order, leading term first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Rat& c = it->second;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string body;
        for (auto& [v, e] : it->first.factors()) {
            if (!body.empty()) body += "*";
            body += v.to_string();
            if (e != 1) body += "^" + std::to_string(e);
        }
        if (body.empty()) {
            out += ac.get_str();
        } else if (ac == 1) {
            out += body;
        } else {
            out += ac.get_str() + "*" + body;
        }
    }
    return out;
}

} // namespace mfk

#include "mfk/rewrite.hpp"

#include <mutex>

namespace mfk {

namespace {

std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}

MultiIndex beta_of(const Indet& sym, int m) {
    return sym.is_mono() ? sym.beta() : MultiIndex(m);
}

} // namespace

// ------------------------------------------------------------------ psi / nx

RatExpr MonoAlgebra::psi_low(const RatExpr& f) const {
    int sp1 = fr_->s() + 1;
    std::map<Indet, RatExpr> sub;
    for (const Indet& v : f.vars()) {
        switch (v.kind()) {
        case Indet::Kind::Param:
            break;
        case Indet::Kind::Independent:
            sub.emplace(v, RatExpr::var(Indet::inv(v)));
            break;
        case Indet::Kind::JetCoord:
            if (v.alpha().order() > sp1)
                throw Error("psi fast path got order " + std::to_string(v.alpha().order()));
            sub.emplace(v, RatExpr::var(Indet::inv(v)));
            break;
        default:
            throw IllegalIndeterminate("psi expects a jet expression, got " + v.to_string());
        }
    }
    return f.substitute(sub);
}

RatExpr MonoAlgebra::psi_embed(const RatExpr& f) const {
    int sp1 = fr_->s() + 1;
    std::map<Indet, RatExpr> sub;
    for (const Indet& v : f.vars()) {
        switch (v.kind()) {
        case Indet::Kind::Param:
            break;
        case Indet::Kind::Independent:
            sub.emplace(v, RatExpr::var(Indet::inv(v)));
            break;
        case Indet::Kind::JetCoord:
            if (v.alpha().order() <= sp1)
                sub.emplace(v, RatExpr::var(Indet::inv(v)));
            else
                sub.emplace(v, rewrite_to_normal(v.index(), v.alpha()));
            break;
        default:
            throw IllegalIndeterminate("psi expects a jet expression, got " + v.to_string());
        }
    }
    return f.substitute(sub);
}

RatExpr MonoAlgebra::rewrite_to_normal(int dep, const MultiIndex& beta) const {
    const Indet u = Indet::jet(dep, beta);
    int sp1 = fr_->s() + 1;
    if (beta.order() <= sp1) return RatExpr::var(Indet::inv(u));
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        auto it = nx_memo_.find(u);
        if (it != nx_memo_.end()) return it->second;
    }
    // iota u_beta = D_f(iota u_gamma) + sum_a K_fa iota(V_a(u_gamma)), f = fs
    int f = beta.fs();
    MultiIndex gamma = beta.minus(f);
    RatExpr out = normal_derive(f, rewrite_to_normal(dep, gamma));
    const Matrix& k = fr_->mc_matrix();
    for (size_t a = 0; a < fr_->generators().size(); ++a)
        out += k[size_t(f - 1)][a] *
               psi_embed(fr_->apply(int(a) + 1, RatExpr::var(Indet::jet(dep, gamma))));
    std::lock_guard<std::mutex> lock(memo_mutex());
    nx_memo_.emplace(u, out);
    return out;
}

// ------------------------------------------------------ semantic derivation

RatExpr MonoAlgebra::normal_symbol_derive(int i, const Indet& sym) const {
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        auto it = dn_memo_.find({i, sym});
        if (it != dn_memo_.end()) return it->second;
    }
    const int m = fr_->ctx().m;
    const int sp1 = fr_->s() + 1;
    const Matrix& k = fr_->mc_matrix();
    const size_t r = fr_->generators().size();
    const Indet base = sym.base();
    const MultiIndex delta = beta_of(sym, m);

    RatExpr out;
    if (base.is_independent()) {
        if (!delta.is_zero())
            throw Error("derived independent symbol " + sym.to_string() + " in a normal form");
        // D_i(iota x_j) = delta_ij - sum_a K_ia psi(xi_a_j)
        if (i == base.index()) out = RatExpr::constant(1);
        for (size_t a = 0; a < r; ++a)
            out -= k[size_t(i - 1)][a] *
                   psi_low(fr_->generators()[a].xi[size_t(base.index() - 1)]);
    } else {
        const MultiIndex gamma = base.alpha();
        if (delta.is_zero()) {
            if (gamma.order() < sp1) {
                // D_i(iota u_gamma) = iota u_{gamma+e_i} - sum_a K_ia psi(V_a(u_gamma))
                out = RatExpr::var(Indet::inv(Indet::jet(base.index(), gamma.plus(i))));
                for (size_t a = 0; a < r; ++a)
                    out -= k[size_t(i - 1)][a] *
                           psi_embed(fr_->apply(int(a) + 1, RatExpr::var(base)));
            } else if (gamma.order() == sp1) {
                if (i <= gamma.fs()) {
                    out = RatExpr::var(Indet::mono(base, MultiIndex::unit(m, i)));
                } else {
                    // exchange move: land on the monotone neighbour
                    int f = gamma.fs();
                    Indet nb = Indet::jet(base.index(), gamma.plus(i).minus(f));
                    out = RatExpr::var(Indet::mono(nb, MultiIndex::unit(m, f)));
                    for (size_t a = 0; a < r; ++a) {
                        out += k[size_t(f - 1)][a] *
                               psi_embed(fr_->apply(int(a) + 1, RatExpr::var(nb)));
                        out -= k[size_t(i - 1)][a] *
                               psi_embed(fr_->apply(int(a) + 1, RatExpr::var(base)));
                    }
                }
            } else {
                throw Error("symbol base order exceeds the section order bound");
            }
        } else {
            if (gamma.order() != sp1)
                throw Error("non-normal symbol " + sym.to_string() + " under derivation");
            if (i <= delta.fs()) {
                out = RatExpr::var(Indet::mono(base, delta.plus(i)));
            } else {
                // commute past the leading factor: D_i D_f = D_f D_i + [D_i, D_f]
                int f = delta.fs();
                Indet shorter = Indet::mono(base, delta.minus(f));
                RatExpr inner = normal_symbol_derive(i, shorter);
                out = normal_derive(f, inner);
                for (int l = 1; l <= m; ++l) {
                    RatExpr lam = fr_->commutator_coeff(i, f, l);
                    if (!lam.is_zero()) out += lam * normal_symbol_derive(l, shorter);
                }
            }
        }
    }
    std::lock_guard<std::mutex> lock(memo_mutex());
    dn_memo_.emplace(std::make_pair(i, sym), out);
    return out;
}

RatExpr MonoAlgebra::normal_derive(int i, const RatExpr& n) const {
    RatExpr out;
    for (const Indet& v : n.vars()) {
        if (v.is_param()) continue;
        if (!v.is_inv() && !v.is_mono())
            throw IllegalIndeterminate("normal_derive expects monotone symbols, got " +
                                       v.to_string());
        out += n.diff(v) * normal_symbol_derive(i, v);
    }
    return out;
}

// ------------------------------------------------------- formal derivation

RatExpr MonoAlgebra::formal_derive_symbol(int i, const Indet& sym, int depth) const {
    if (depth > kMaxDepth) throw RecursionDepth("formal derivation exceeded the depth guard");
    const int m = fr_->ctx().m;
    const MultiIndex beta = beta_of(sym, m);
    const Indet base = sym.base();
    if (i <= beta.fs()) return RatExpr::var(Indet::mono(base, beta.plus(i)));
    int f = beta.fs();
    Indet shorter = Indet::mono(base, beta.minus(f));
    RatExpr inner = formal_derive_symbol(i, shorter, depth + 1);
    RatExpr out = formal_derive_guarded(f, inner, depth + 1);
    for (int l = 1; l <= m; ++l) {
        RatExpr c = fr_->commutator_coeff(i, f, l); // psi is the identity on these symbols
        if (!c.is_zero()) out += c * formal_derive_symbol(l, shorter, depth + 1);
    }
    return out;
}

RatExpr MonoAlgebra::formal_derive_guarded(int i, const RatExpr& t, int depth) const {
    if (depth > kMaxDepth) throw RecursionDepth("formal derivation exceeded the depth guard");
    RatExpr out;
    for (const Indet& v : t.vars()) {
        if (v.is_param()) continue;
        if (!v.is_inv() && !v.is_mono())
            throw IllegalIndeterminate("formal_derive expects monotone symbols, got " +
                                       v.to_string());
        out += t.diff(v) * formal_derive_symbol(i, v, depth + 1);
    }
    return out;
}

RatExpr MonoAlgebra::formal_derive(int i, const RatExpr& t) const {
    if (i < 1 || i > fr_->ctx().m) throw Error("derivation index out of range");
    return formal_derive_guarded(i, t, 0);
}

// ------------------------------------------------------------------- phi

RatExpr MonoAlgebra::phi_symbol(const Indet& sym) const {
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        auto it = phi_memo_.find(sym);
        if (it != phi_memo_.end()) return it->second;
    }
    RatExpr out;
    if (sym.is_inv()) {
        out = fr_->iota_rules().reduce(RatExpr::var(sym));
    } else {
        // peel the leading derivation of the monotone word
        const MultiIndex beta = sym.beta();
        int f = beta.fs();
        out = fr_->derive_inv_expr(f, phi_symbol(Indet::mono(sym.base(), beta.minus(f))));
    }
    std::lock_guard<std::mutex> lock(memo_mutex());
    phi_memo_.emplace(sym, out);
    return out;
}

RatExpr MonoAlgebra::phi_eval(const RatExpr& t) const {
    std::map<Indet, RatExpr> sub;
    for (const Indet& v : t.vars()) {
        if (v.is_param()) continue;
        if (!v.is_inv() && !v.is_mono())
            throw IllegalIndeterminate("phi expects monotone symbols, got " + v.to_string());
        sub.emplace(v, phi_symbol(v));
    }
    return fr_->iota_rules().reduce(t.substitute(sub));
}

// ------------------------------------------------------------------- checks

bool MonoAlgebra::is_normal(const RatExpr& t) const {
    int sp1 = fr_->s() + 1;
    for (const Indet& v : t.vars()) {
        if (v.is_param()) continue;
        if (v.is_inv()) {
            Indet b = v.base();
            if (b.is_jet() && b.alpha().order() > sp1) return false;
            continue;
        }
        if (!v.is_mono()) return false;
        Indet b = v.base();
        if (b.is_independent()) return false; // derived x-symbols are never normal
        auto sp = (v.beta() + b.alpha()).split(sp1);
        if (!(sp.hat == v.beta() && sp.bar == b.alpha())) return false;
    }
    return true;
}

} // namespace mfk

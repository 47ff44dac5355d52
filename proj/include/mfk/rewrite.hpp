#pragma once

#include "mfk/frame.hpp"

namespace mfk {

// The algebra of monotone-derivative symbols M(Y;beta) = D^beta(iota Y) for
// Y among the x_i and the u_alpha with |alpha| <= s+1.  Provides
//   - rewrite_to_normal: iota u_beta as an expression in normal derivatives,
//   - psi_embed:         the canonical section of phi over jet expressions,
//   - formal_derive:     the recursively defined formal derivations,
//   - phi_eval:          evaluation back to genuine invariants.
class MonoAlgebra {
public:
    explicit MonoAlgebra(const Frame& fr) : fr_(&fr) {}

    const Frame& frame() const { return *fr_; }

    // iota u_{j,beta} over normal derivatives only
    RatExpr rewrite_to_normal(int dep, const MultiIndex& beta) const;

    // ring-morphic embedding of a jet expression; image is in normal form
    RatExpr psi_embed(const RatExpr& f) const;

    // semantic derivation D_i on a normal-form expression, staying normal
    RatExpr normal_derive(int i, const RatExpr& n) const;

    // the formal derivation of the double-scripted algebra, literal recursion
    RatExpr formal_derive(int i, const RatExpr& t) const;

    // phi: M(Y;beta) -> D^beta(iota Y), extended as a ring morphism
    RatExpr phi_eval(const RatExpr& t) const;

    // every u-based symbol passes the monotone-split normality test and no
    // x-based symbol carries a derivation index
    bool is_normal(const RatExpr& t) const;

    // depth guard for the formal recursion (a safety net; the recursion
    // provably terminates)
    static constexpr int kMaxDepth = 512;

private:
    const Frame* fr_;

    mutable std::map<Indet, RatExpr> nx_memo_;  // normal form of one iota u_beta
    mutable std::map<std::pair<int, Indet>, RatExpr> dn_memo_;
    mutable std::map<Indet, RatExpr> phi_memo_;

    RatExpr normal_symbol_derive(int i, const Indet& sym) const;
    RatExpr psi_low(const RatExpr& f) const; // order <= s+1 fast path
    RatExpr phi_symbol(const Indet& sym) const;
    RatExpr formal_derive_symbol(int i, const Indet& sym, int depth) const;
    RatExpr formal_derive_guarded(int i, const RatExpr& t, int depth) const;
};

} // namespace mfk

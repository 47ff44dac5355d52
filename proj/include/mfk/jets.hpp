#pragma once

#include "mfk/ratexpr.hpp"

namespace mfk {

// Ambient jet geometry: m independent variables, n dependent variables, and
// the monotone split bound s+1 once a cross-section order is known.
struct JetContext {
    int m = 1;
    int n = 1;
    int s_plus_1 = 0; // 0 = unset

    JetContext() = default;
    JetContext(int m_, int n_, int s_plus_1_ = 0) : m(m_), n(n_), s_plus_1(s_plus_1_) {
        if (m < 1 || n < 1) throw Error("JetContext: need m >= 1 and n >= 1");
    }

    MultiIndex zero() const { return MultiIndex(m); }
    MultiIndex unit(int i) const { return MultiIndex::unit(m, i); }
};

// Total derivation D_i, via the finite chain rule over the indeterminates that
// actually occur: D_i(e) = de/dx_i + sum u_{alpha+e_i} de/du_alpha.
// Rejects iota-/monotone symbols.
RatExpr total_derive(const JetContext& ctx, const RatExpr& e, int i);

// D^alpha = D_1^{a_1} ... D_m^{a_m}
RatExpr total_derive_multi(const JetContext& ctx, const RatExpr& e, const MultiIndex& alpha);

// max |alpha| over JetCoords present; -1 when none
int jet_order(const RatExpr& e);

// all multi-indices of length m with |alpha| = k, in graded-lex order
std::vector<MultiIndex> multi_indices_of_order(int m, int k);
// ... and with |alpha| <= k
std::vector<MultiIndex> multi_indices_up_to(int m, int k);

// convenience wrappers around MultiIndex
inline std::pair<MultiIndex, MultiIndex> mi_split(const MultiIndex& beta, int s_plus_1) {
    auto sp = beta.split(s_plus_1);
    return {sp.hat, sp.bar};
}
inline std::pair<int, int> mi_fs_ls(const MultiIndex& beta) { return {beta.fs(), beta.ls()}; }

} // namespace mfk

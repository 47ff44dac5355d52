#pragma once

#include "mfk/action.hpp"
#include "mfk/linalg.hpp"
#include "mfk/reduction.hpp"

namespace mfk {

// One solved cross-section rule: z^power = rhs, with z an order-0 or jet
// coordinate and rhs free of iota/monotone symbols.
struct CrossSectionRule {
    Indet coord;
    int power = 1;
    RatExpr rhs;

    RatExpr section_function() const { // p = z^power - rhs
        return RatExpr(Poly::var(coord, power)) - rhs;
    }
    int lhs_order() const { return coord.is_jet() ? coord.alpha().order() : 0; }
};

struct CrossSection {
    std::vector<CrossSectionRule> rules;

    int size() const { return static_cast<int>(rules.size()); }
    int order() const { // s
        int s = 0;
        for (auto& r : rules) s = std::max(s, r.lhs_order());
        return s;
    }
};

struct SectionDiagnostics {
    int r = 0;
    int s = 0;
    bool minimal_order = false;
    std::vector<std::pair<int, int>> ranks; // (k, r_k) for k <= s
};

// Everything derived from (action, cross-section): the iota reduction system,
// the matrix K, the invariant derivations and their commutators.
class Frame {
public:
    Frame(JetContext ctx, std::vector<Generator> gens, CrossSection cs);

    const JetContext& ctx() const { return ctx_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const CrossSection& section() const { return cs_; }
    int r() const { return cs_.size(); }
    int s() const { return cs_.order(); }
    const SectionDiagnostics& diagnostics() const { return diag_; }
    const ReductionSystem& iota_rules() const { return iota_rules_; }

    // replace every coordinate of f by its iota-symbol, then reduce
    RatExpr invariantize(const RatExpr& f) const;

    // K = iota(D(P)) . iota(V(P))^-1, m x r
    const Matrix& mc_matrix() const;

    // D_i(iota f) via the recurrence: iota(D_i f) - sum_a K_ia iota(V_a(f))
    RatExpr derive_invariantized(int i, const RatExpr& f) const;

    // Leibniz extension to expressions in iota-symbols
    RatExpr derive_inv_expr(int i, const RatExpr& e) const;

    // Lambda_ijk: [D_i, D_j] = sum_k Lambda_ijk D_k
    RatExpr commutator_coeff(int i, int j, int k) const;

    // V_a(f) with the prolongation cached per generator
    RatExpr apply(int a, const RatExpr& f) const;

    bool check_invariant(const RatExpr& f) const;

private:
    JetContext ctx_;
    std::vector<Generator> gens_;
    CrossSection cs_;
    ReductionSystem iota_rules_;
    SectionDiagnostics diag_;

    mutable std::vector<std::optional<ProlongedGenerator>> prolonged_;
    mutable std::optional<Matrix> k_;
    mutable std::map<std::tuple<int, int, int>, RatExpr> lambda_;

    void validate();
    const ProlongedGenerator& prolonged(int a, int min_order) const;
};

// spec-level entry points
SectionDiagnostics validate_cross_section(const JetContext& ctx, const CrossSection& cs,
                                          const std::vector<Generator>& gens);
inline Matrix maurer_cartan(const Frame& fr) { return fr.mc_matrix(); }

bool check_invariant(const JetContext& ctx, const RatExpr& f, const std::vector<Generator>& gens,
                     int k);

// classical construction: A = (D_i f_j) for m independent invariants, plus its
// inverse (the frame of invariant derivations A^-1 D)
std::pair<Matrix, Matrix> classical_derivations(const JetContext& ctx,
                                                const std::vector<Generator>& gens,
                                                const std::vector<RatExpr>& fs);

} // namespace mfk

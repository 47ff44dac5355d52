#include "mfk/frame.hpp"

#include <mutex>

namespace mfk {

namespace {

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

// coordinates -> iota-symbols, no reduction
RatExpr symbolize(const RatExpr& f) {
    std::map<Indet, RatExpr> sub;
    for (const Indet& v : f.vars()) {
        switch (v.kind()) {
        case Indet::Kind::Param:
            break;
        case Indet::Kind::Independent:
        case Indet::Kind::JetCoord:
            sub.emplace(v, RatExpr::var(Indet::inv(v)));
            break;
        default:
            throw IllegalIndeterminate("invariantize expects plain coordinates, got " +
                                       v.to_string());
        }
    }
    return f.substitute(sub);
}

} // namespace

Frame::Frame(JetContext ctx, std::vector<Generator> gens, CrossSection cs)
    : ctx_(std::move(ctx)), gens_(std::move(gens)), cs_(std::move(cs)) {
    ctx_.s_plus_1 = cs_.order() + 1;
    prolonged_.resize(gens_.size());
    validate();
}

void Frame::validate() {
    for (auto& g : gens_) validate_generator(ctx_, g);

    if (cs_.size() != static_cast<int>(gens_.size()))
        throw RuleShapeError("cross-section has " + std::to_string(cs_.size()) +
                             " rules for a group of dimension " + std::to_string(gens_.size()));

    std::vector<ReductionRule> irules;
    for (auto& rule : cs_.rules) {
        if (!rule.coord.is_jet() && !rule.coord.is_independent())
            throw RuleShapeError("cross-section left side must be a coordinate, got " +
                                 rule.coord.to_string());
        for (const Indet& v : rule.rhs.vars())
            if (!v.is_param() && !v.is_independent() && !v.is_jet())
                throw RuleShapeError("cross-section right side contains " + v.to_string());
        if (rule.rhs.vars().count(rule.coord))
            throw RuleShapeError("cross-section rule for " + rule.coord.to_string() +
                                 " is not solved");
        irules.push_back({Indet::inv(rule.coord), rule.power, symbolize(rule.rhs)});
    }
    iota_rules_ = ReductionSystem(std::move(irules)); // duplicate/triangularity checks

    // transversality: iota(V(P)) must have full rank r
    Matrix ivp(gens_.size(), std::vector<RatExpr>(gens_.size()));
    for (size_t a = 0; a < gens_.size(); ++a)
        for (size_t j = 0; j < gens_.size(); ++j)
            ivp[a][j] = invariantize(apply(int(a) + 1, cs_.rules[j].section_function()));
    int rank = generic_rank(ivp);
    if (rank != cs_.size())
        throw TransversalityFailure("iota(V(P)) has rank " + std::to_string(rank) + ", need " +
                                    std::to_string(cs_.size()));

    diag_.r = cs_.size();
    diag_.s = cs_.order();
    diag_.ranks = stabilization_scan(ctx_, gens_, diag_.s);
    diag_.minimal_order = true;
    for (auto& [k, rk] : diag_.ranks) {
        int covered = 0;
        for (auto& rule : cs_.rules)
            if (rule.lhs_order() <= k) ++covered;
        if (covered != rk) diag_.minimal_order = false;
    }
}

const ProlongedGenerator& Frame::prolonged(int a, int min_order) const {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto& slot = prolonged_[size_t(a - 1)];
    if (!slot || slot->order() < min_order)
        slot.emplace(ctx_, gens_[size_t(a - 1)], std::max(min_order, s() + 1));
    return *slot;
}

RatExpr Frame::apply(int a, const RatExpr& f) const {
    if (a < 1 || a > static_cast<int>(gens_.size())) throw Error("generator index out of range");
    return prolonged(a, std::max(jet_order(f), 0)).apply(f);
}

RatExpr Frame::invariantize(const RatExpr& f) const { return iota_rules_.reduce(symbolize(f)); }

const Matrix& Frame::mc_matrix() const {
    std::lock_guard<std::mutex> lock(cache_mutex());
    if (k_) return *k_;
    size_t m = size_t(ctx_.m), r = gens_.size();
    Matrix idp(m, std::vector<RatExpr>(r));
    Matrix ivp(r, std::vector<RatExpr>(r));
    for (size_t j = 0; j < r; ++j) {
        RatExpr pj = cs_.rules[j].section_function();
        for (size_t i = 0; i < m; ++i)
            idp[i][j] = iota_rules_.reduce(symbolize(total_derive(ctx_, pj, int(i) + 1)));
        for (size_t a = 0; a < r; ++a) {
            const ProlongedGenerator& pg = [&]() -> const ProlongedGenerator& {
                auto& slot = prolonged_[a];
                int need = std::max(jet_order(pj), 0);
                if (!slot || slot->order() < need)
                    slot.emplace(ctx_, gens_[a], std::max(need, s() + 1));
                return *slot;
            }();
            ivp[a][j] = iota_rules_.reduce(symbolize(pg.apply(pj)));
        }
    }
    k_ = matrix_mul(idp, matrix_inverse(ivp));
    return *k_;
}

RatExpr Frame::derive_invariantized(int i, const RatExpr& f) const {
    if (i < 1 || i > ctx_.m) throw Error("derivation index out of range");
    const Matrix& k = mc_matrix();
    RatExpr out = invariantize(total_derive(ctx_, f, i));
    for (size_t a = 0; a < gens_.size(); ++a)
        out -= k[size_t(i - 1)][a] * invariantize(apply(int(a) + 1, f));
    return iota_rules_.reduce(out);
}

RatExpr Frame::derive_inv_expr(int i, const RatExpr& e) const {
    RatExpr out;
    for (const Indet& v : e.vars()) {
        switch (v.kind()) {
        case Indet::Kind::Param:
            break;
        case Indet::Kind::InvSym:
            out += e.diff(v) * derive_invariantized(i, RatExpr::var(v.base()));
            break;
        default:
            throw IllegalIndeterminate("invariant derivation of an expression in " +
                                       v.to_string());
        }
    }
    return iota_rules_.reduce(out);
}

RatExpr Frame::commutator_coeff(int i, int j, int k) const {
    if (i < 1 || j < 1 || k < 1 || i > ctx_.m || j > ctx_.m || k > ctx_.m)
        throw Error("commutator index out of range");
    if (i == j) return RatExpr();
    if (i > j) return -commutator_coeff(j, i, k);
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = lambda_.find({i, j, k});
        if (it != lambda_.end()) return it->second;
    }
    const Matrix& K = mc_matrix();
    RatExpr out;
    for (size_t c = 0; c < gens_.size(); ++c) {
        const RatExpr& xi_ck = gens_[c].xi[size_t(k - 1)];
        out += K[size_t(i - 1)][c] * invariantize(total_derive(ctx_, xi_ck, j));
        out -= K[size_t(j - 1)][c] * invariantize(total_derive(ctx_, xi_ck, i));
    }
    out = iota_rules_.reduce(out);
    std::lock_guard<std::mutex> lock(cache_mutex());
    lambda_.emplace(std::make_tuple(i, j, k), out);
    return out;
}

bool Frame::check_invariant(const RatExpr& f) const {
    for (size_t a = 0; a < gens_.size(); ++a)
        if (!apply(int(a) + 1, f).is_zero()) return false;
    return true;
}

SectionDiagnostics validate_cross_section(const JetContext& ctx, const CrossSection& cs,
                                          const std::vector<Generator>& gens) {
    return Frame(ctx, gens, cs).diagnostics();
}

bool check_invariant(const JetContext& ctx, const RatExpr& f, const std::vector<Generator>& gens,
                     int k) {
    for (auto& g : gens)
        if (!apply_generator(ctx, g, f, k).is_zero()) return false;
    return true;
}

std::pair<Matrix, Matrix> classical_derivations(const JetContext& ctx,
                                                const std::vector<Generator>& gens,
                                                const std::vector<RatExpr>& fs) {
    if (static_cast<int>(fs.size()) != ctx.m)
        throw ArityMismatch("need exactly " + std::to_string(ctx.m) + " invariants");
    for (auto& f : fs)
        if (!check_invariant(ctx, f, gens, std::max(jet_order(f), 0)))
            throw NotInvariant(f.to_string() + " is not invariant under the action");
    Matrix a(size_t(ctx.m), std::vector<RatExpr>(size_t(ctx.m)));
    for (int i = 1; i <= ctx.m; ++i)
        for (int j = 1; j <= ctx.m; ++j)
            a[size_t(i - 1)][size_t(j - 1)] = total_derive(ctx, fs[size_t(j - 1)], i);
    return {a, matrix_inverse(a)};
}

} // namespace mfk

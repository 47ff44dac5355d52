#include "mfk/action.hpp"

#include "mfk/linalg.hpp"

namespace mfk {

Generator::Generator(std::string name_, std::vector<RatExpr> xi_, std::vector<RatExpr> eta_)
    : name(std::move(name_)), xi(std::move(xi_)), eta(std::move(eta_)) {}

void validate_generator(const JetContext& ctx, const Generator& g) {
    if (static_cast<int>(g.xi.size()) != ctx.m || static_cast<int>(g.eta.size()) != ctx.n)
        throw ArityMismatch("generator " + g.name + ": expected " + std::to_string(ctx.m) + "+" +
                            std::to_string(ctx.n) + " coefficients");
    auto check = [&](const RatExpr& c) {
        for (const Indet& v : c.vars()) {
            bool ok = v.is_param() || v.is_independent() ||
                      (v.is_jet() && v.alpha().order() == 0);
            if (!ok)
                throw IllegalIndeterminate("generator " + g.name +
                                           " has a non-J0 coefficient containing " + v.to_string());
        }
    };
    for (auto& c : g.xi) check(c);
    for (auto& c : g.eta) check(c);
}

ProlongedGenerator::ProlongedGenerator(const JetContext& ctx, const Generator& g, int k)
    : ctx_(ctx), order_(k), xi_(g.xi) {
    if (k < 0) throw Error("prolong: negative order");
    validate_generator(ctx, g);

    for (int j = 1; j <= ctx.n; ++j) {
        RatExpr zeta = g.eta[size_t(j - 1)];
        for (int i = 1; i <= ctx.m; ++i)
            zeta -= g.xi[size_t(i - 1)] * RatExpr::var(Indet::jet(j, ctx.unit(i)));

        // D^alpha(zeta) by one extra derivation per layer, reusing the parent
        std::map<MultiIndex, RatExpr> dz;
        dz.emplace(ctx.zero(), zeta);
        for (int d = 1; d <= k; ++d)
            for (const auto& alpha : multi_indices_of_order(ctx.m, d)) {
                int f = alpha.fs();
                dz.emplace(alpha, total_derive(ctx, dz.at(alpha.minus(f)), f));
            }

        for (const auto& alpha : multi_indices_up_to(ctx.m, k)) {
            RatExpr c = dz.at(alpha);
            for (int i = 1; i <= ctx.m; ++i)
                c += g.xi[size_t(i - 1)] * RatExpr::var(Indet::jet(j, alpha.plus(i)));
            u_coeff_.emplace(std::make_pair(j, alpha), c);
        }
    }
}

const RatExpr& ProlongedGenerator::coeff_x(int i) const {
    if (i < 1 || i > ctx_.m) throw Error("coeff_x: index out of range");
    return xi_[size_t(i - 1)];
}

const RatExpr& ProlongedGenerator::coeff_u(int j, const MultiIndex& alpha) const {
    auto it = u_coeff_.find({j, alpha});
    if (it == u_coeff_.end())
        throw OrderTooLow("prolongation of order " + std::to_string(order_) +
                          " has no coefficient for u" + std::to_string(j) + "[" + alpha.to_string() + "]");
    return it->second;
}

RatExpr ProlongedGenerator::apply(const RatExpr& f) const {
    RatExpr r;
    for (const Indet& v : f.vars()) {
        switch (v.kind()) {
        case Indet::Kind::Param:
            break;
        case Indet::Kind::Independent:
            r += coeff_x(v.index()) * f.diff(v);
            break;
        case Indet::Kind::JetCoord:
            r += coeff_u(v.index(), v.alpha()) * f.diff(v);
            break;
        default:
            throw IllegalIndeterminate("generators do not act on " + v.to_string());
        }
    }
    return r;
}

ProlongedGenerator prolong(const JetContext& ctx, const Generator& g, int k) {
    return ProlongedGenerator(ctx, g, k);
}

RatExpr apply_generator(const JetContext& ctx, const Generator& g, const RatExpr& f, int k) {
    int need = jet_order(f);
    if (k < need)
        throw OrderTooLow("apply_generator: order " + std::to_string(k) + " < jet order " +
                          std::to_string(need) + " of the argument");
    return ProlongedGenerator(ctx, g, k).apply(f);
}

std::vector<std::pair<int, int>> stabilization_scan(const JetContext& ctx,
                                                    const std::vector<Generator>& gens, int k_max) {
    if (k_max < 0) throw Error("stabilization_scan: negative order");
    std::vector<ProlongedGenerator> pr;
    pr.reserve(gens.size());
    for (auto& g : gens) pr.emplace_back(ctx, g, k_max);

    std::vector<std::pair<int, int>> out;
    for (int k = 0; k <= k_max; ++k) {
        // rows = generators, columns = all coordinates of order <= k
        Matrix mat;
        for (auto& p : pr) {
            std::vector<RatExpr> row;
            for (int i = 1; i <= ctx.m; ++i) row.push_back(p.coeff_x(i));
            for (int j = 1; j <= ctx.n; ++j)
                for (const auto& alpha : multi_indices_up_to(ctx.m, k))
                    row.push_back(p.coeff_u(j, alpha));
            mat.push_back(std::move(row));
        }
        out.emplace_back(k, generic_rank(mat));
    }
    return out;
}

} // namespace mfk

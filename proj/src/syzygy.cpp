#include "mfk/syzygy.hpp"

namespace mfk {

std::string SyzygyRec::kind_string() const {
    switch (kind) {
    case Kind::R: return "R";
    case Kind::S: return "S";
    default: return "T";
    }
}

std::string SyzygyRec::indices_string() const {
    if (kind == Kind::R) return std::to_string(rule);
    return std::to_string(i) + ";" + target.to_string();
}

std::string SyzygyRec::dump_line() const {
    return kind_string() + "\t" + indices_string() + "\t" + body.to_string();
}

std::vector<SyzygyRec> gen_R(const Frame& fr) {
    std::vector<SyzygyRec> out;
    MonoAlgebra alg(fr);
    int idx = 0;
    for (const auto& rule : fr.section().rules) {
        SyzygyRec rec;
        rec.kind = SyzygyRec::Kind::R;
        rec.rule = ++idx;
        rec.target = rule.coord;
        rec.body = alg.psi_embed(rule.section_function());
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<SyzygyRec> gen_S(const MonoAlgebra& alg) {
    const Frame& fr = alg.frame();
    const JetContext& ctx = fr.ctx();
    const Matrix& k = fr.mc_matrix();
    size_t r = fr.generators().size();
    std::vector<SyzygyRec> out;
    for (int i = 1; i <= ctx.m; ++i) {
        for (int j = 1; j <= ctx.m; ++j) {
            SyzygyRec rec;
            rec.kind = SyzygyRec::Kind::S;
            rec.i = i;
            rec.target = Indet::independent(j);
            RatExpr body = RatExpr::var(Indet::mono(rec.target, MultiIndex::unit(ctx.m, i)));
            if (i == j) body -= RatExpr::constant(1);
            for (size_t a = 0; a < r; ++a)
                body += k[size_t(i - 1)][a] *
                        alg.psi_embed(fr.generators()[a].xi[size_t(j - 1)]);
            rec.body = std::move(body);
            out.push_back(std::move(rec));
        }
        for (int j = 1; j <= ctx.n; ++j) {
            for (const MultiIndex& a : multi_indices_up_to(ctx.m, fr.s())) {
                SyzygyRec rec;
                rec.kind = SyzygyRec::Kind::S;
                rec.i = i;
                rec.target = Indet::jet(j, a);
                RatExpr body =
                    RatExpr::var(Indet::mono(rec.target, MultiIndex::unit(ctx.m, i))) -
                    RatExpr::var(Indet::inv(Indet::jet(j, a.plus(i))));
                for (size_t g = 0; g < r; ++g)
                    body += k[size_t(i - 1)][g] *
                            alg.psi_embed(fr.apply(int(g) + 1, RatExpr::var(rec.target)));
                rec.body = std::move(body);
                out.push_back(std::move(rec));
            }
        }
    }
    return out;
}

std::vector<SyzygyRec> gen_T(const MonoAlgebra& alg) {
    const Frame& fr = alg.frame();
    const JetContext& ctx = fr.ctx();
    const Matrix& k = fr.mc_matrix();
    size_t r = fr.generators().size();
    std::vector<SyzygyRec> out;
    for (int j = 1; j <= ctx.n; ++j) {
        for (const MultiIndex& beta : multi_indices_of_order(ctx.m, fr.s() + 1)) {
            int f = beta.fs();
            for (int i = f + 1; i <= ctx.m; ++i) {
                MultiIndex shifted = beta.plus(i).minus(f);
                Indet ub = Indet::jet(j, beta), ubp = Indet::jet(j, shifted);
                SyzygyRec rec;
                rec.kind = SyzygyRec::Kind::T;
                rec.i = i;
                rec.target = ub;
                RatExpr body = RatExpr::var(Indet::mono(ub, MultiIndex::unit(ctx.m, i))) -
                               RatExpr::var(Indet::mono(ubp, MultiIndex::unit(ctx.m, f)));
                for (size_t g = 0; g < r; ++g)
                    body += k[size_t(i - 1)][g] *
                                alg.psi_embed(fr.apply(int(g) + 1, RatExpr::var(ub))) -
                            k[size_t(f - 1)][g] *
                                alg.psi_embed(fr.apply(int(g) + 1, RatExpr::var(ubp)));
                rec.body = std::move(body);
                out.push_back(std::move(rec));
            }
        }
    }
    return out;
}

bool verify_zero(const MonoAlgebra& alg, const SyzygyRec& rec) {
    return alg.frame().iota_rules().reduce(alg.phi_eval(rec.body)).is_zero();
}

int count_S(const JetContext& ctx, int s) {
    return ctx.m * (ctx.m + ctx.n * int(multi_indices_up_to(ctx.m, s).size()));
}

int count_T(const JetContext& ctx, int s) {
    int total = 0;
    for (const MultiIndex& beta : multi_indices_of_order(ctx.m, s + 1))
        total += ctx.m - beta.fs();
    return ctx.n * total;
}

GenSet edge_invariants(const Frame& fr) {
    if (!fr.diagnostics().minimal_order)
        throw NotMinimalOrder("the cross-section is not of minimal order");
    GenSet out;
    out.minimal = true;
    const JetContext& ctx = fr.ctx();
    int j = 0;
    for (const auto& rule : fr.section().rules) {
        ++j;
        RatExpr p = rule.section_function();
        for (int i = 1; i <= ctx.m; ++i)
            out.members.emplace_back("D" + std::to_string(i) + "(p" + std::to_string(j) + ")",
                                     fr.invariantize(total_derive(ctx, p, i)));
    }
    for (int i = 1; i <= ctx.m; ++i) {
        Indet x = Indet::independent(i);
        out.members.emplace_back(Indet::inv(x).to_string(), fr.invariantize(RatExpr::var(x)));
    }
    for (int d = 1; d <= ctx.n; ++d) {
        Indet u0 = Indet::jet(d, ctx.zero());
        out.members.emplace_back(Indet::inv(u0).to_string(), fr.invariantize(RatExpr::var(u0)));
    }
    return out;
}

} // namespace mfk

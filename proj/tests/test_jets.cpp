#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mfk/jets.hpp"

using namespace mfk;

namespace {

Indet U1(std::initializer_list<int> a) { return Indet::jet(1, MultiIndex(a)); }
RatExpr rx(const Indet& v) { return RatExpr::var(v); }

RatExpr random_jet_expr(std::mt19937& rng, const JetContext& ctx, int max_order) {
    std::uniform_int_distribution<int> coef(-3, 3), dep(1, ctx.n), ex(0, 2);
    auto idx = multi_indices_up_to(ctx.m, max_order);
    std::uniform_int_distribution<int> pick(0, int(idx.size()) - 1);
    Poly num, den;
    auto mono = [&] {
        Poly t = Poly::constant(coef(rng));
        for (int f = 0; f < 2; ++f) {
            int e = ex(rng);
            if (e) t = t * Poly::var(Indet::jet(dep(rng), idx[size_t(pick(rng))]), e);
        }
        return t;
    };
    for (int t = 0; t < 3; ++t) num += mono();
    den = mono() + Poly::constant(1);
    while (den.is_zero()) den = mono() + Poly::constant(1);
    return RatExpr(num, den);
}

} // namespace

TEST_CASE("multi-index split and fs/ls") {
    CHECK(mi_fs_ls(MultiIndex({0, 2, 1})) == std::pair<int, int>(2, 3));
    CHECK(mi_fs_ls(MultiIndex({1, 0, 0})) == std::pair<int, int>(1, 1));
    CHECK(mi_fs_ls(MultiIndex({0, 0, 0})) == std::pair<int, int>(4, 0));

    auto [c1, b1] = mi_split(MultiIndex({1, 1}), 2);
    CHECK(c1 == MultiIndex({0, 0}));
    CHECK(b1 == MultiIndex({1, 1}));

    auto [c2, b2] = mi_split(MultiIndex({3, 0}), 2);
    CHECK(c2 == MultiIndex({1, 0}));
    CHECK(b2 == MultiIndex({2, 0}));

    auto [c3, b3] = mi_split(MultiIndex({1, 0, 2}), 2);
    CHECK(c3 == MultiIndex({1, 0, 0}));
    CHECK(b3 == MultiIndex({0, 0, 2}));
}

TEST_CASE("mi_split exhaustive: reassembly, bound, monotonicity") {
    for (int m = 1; m <= 4; ++m)
        for (int sp1 = 1; sp1 <= 4; ++sp1)
            for (int d = 0; d <= 6; ++d)
                for (const auto& beta : multi_indices_of_order(m, d)) {
                    auto [hat, bar] = mi_split(beta, sp1);
                    CHECK(hat + bar == beta);
                    CHECK(bar.order() <= sp1);
                    if (beta.order() > sp1) CHECK(bar.order() == sp1);
                    CHECK((hat.is_zero() || hat.ls() <= bar.fs()));
                }
}

TEST_CASE("total_derive coordinate cases") {
    JetContext ctx(2, 1);
    CHECK(total_derive(ctx, rx(U1({0, 0})), 1) == rx(U1({1, 0})));
    CHECK(total_derive(ctx, rx(Indet::independent(1)), 1) == RatExpr::constant(1));
    CHECK(total_derive(ctx, rx(Indet::independent(2)), 1).is_zero());

    for (int d = 0; d <= 4; ++d)
        for (const auto& a : multi_indices_of_order(2, d))
            for (int i = 1; i <= 2; ++i)
                CHECK(total_derive(ctx, rx(Indet::jet(1, a)), i) == rx(Indet::jet(1, a.plus(i))));
}

TEST_CASE("total_derive product rule (m=1)") {
    JetContext ctx(1, 1);
    RatExpr x = rx(Indet::independent(1)), u1 = rx(U1({1})), u2 = rx(U1({2}));
    CHECK(total_derive(ctx, x * u1, 1) == u1 + x * u2);
}

TEST_CASE("D(P) row for the surface section") {
    JetContext ctx(2, 1);
    std::vector<RatExpr> p = {rx(Indet::independent(1)), rx(Indet::independent(2)),
                              rx(U1({0, 0})),            rx(U1({1, 0})),
                              rx(U1({0, 1})),            rx(U1({1, 1}))};
    std::vector<RatExpr> d1 = {RatExpr::constant(1), RatExpr(), rx(U1({1, 0})),
                               rx(U1({2, 0})),       rx(U1({1, 1})), rx(U1({2, 1}))};
    for (size_t j = 0; j < p.size(); ++j) CHECK(total_derive(ctx, p[j], 1) == d1[j]);
}

TEST_CASE("total_derive rejects invariant symbols") {
    JetContext ctx(1, 1);
    CHECK_THROWS_AS(total_derive(ctx, rx(Indet::inv(U1({1}))), 1), IllegalIndeterminate);
    CHECK_THROWS_AS(total_derive(ctx, rx(Indet::mono(U1({1}), MultiIndex({2}))), 1),
                    IllegalIndeterminate);
}

TEST_CASE("jet_order") {
    CHECK(jet_order(rx(Indet::jet(1, {2, 1})) + rx(Indet::independent(1))) == 3);
    CHECK(jet_order(rx(Indet::independent(1)) / rx(Indet::independent(2))) == -1);

    std::mt19937 rng(555);
    JetContext ctx(2, 2);
    for (int t = 0; t < 25; ++t) {
        RatExpr e = random_jet_expr(rng, ctx, 3);
        int k = jet_order(e);
        for (int i = 1; i <= 2; ++i) CHECK(jet_order(total_derive(ctx, e, i)) <= k + 1);
    }
}

TEST_CASE("total derivations commute") {
    std::mt19937 rng(101);
    JetContext ctx(3, 2);
    for (int t = 0; t < 20; ++t) {
        RatExpr e = random_jet_expr(rng, ctx, 3);
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                CHECK(total_derive(ctx, total_derive(ctx, e, j), i) ==
                      total_derive(ctx, total_derive(ctx, e, i), j));
    }
}

TEST_CASE("total_derive_multi composes single steps") {
    JetContext ctx(2, 1);
    std::mt19937 rng(77);
    for (int t = 0; t < 10; ++t) {
        RatExpr e = random_jet_expr(rng, ctx, 2);
        RatExpr lhs = total_derive_multi(ctx, e, MultiIndex({2, 1}));
        RatExpr rhs = total_derive(ctx, total_derive(ctx, total_derive(ctx, e, 2), 1), 1);
        CHECK(lhs == rhs);
    }
}

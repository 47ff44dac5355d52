#pragma once

// The recurring group actions used across the test binaries, built directly
// against the library API (the spec-file front end has its own parser tests).

#include "mfk/frame.hpp"

namespace fixtures {

using namespace mfk;

inline RatExpr fx_rx(const Indet& v) { return RatExpr::var(v); }
inline Indet fx_jet(int dep, std::initializer_list<int> a) {
    return Indet::jet(dep, MultiIndex(a));
}

// scaling + translation on the line: x = 0, u1 = 1
inline Frame sl1() {
    JetContext ctx(1, 1);
    std::vector<Generator> gens{{"v1", {fx_rx(Indet::independent(1))}, {RatExpr()}},
                                {"v2", {RatExpr::constant(1)}, {RatExpr()}}};
    CrossSection cs{{{Indet::independent(1), 1, RatExpr()},
                     {fx_jet(1, {1}), 1, RatExpr::constant(1)}}};
    return Frame(ctx, gens, cs);
}

// translations + dilation on the plane: x1 = 0, x2 = 0, u01^2 = 1 - u10^2
inline Frame sl2() {
    JetContext ctx(2, 1);
    RatExpr zero;
    std::vector<Generator> gens{
        {"v1", {RatExpr::constant(1), zero}, {zero}},
        {"v2", {zero, RatExpr::constant(1)}, {zero}},
        {"v3", {fx_rx(Indet::independent(1)), fx_rx(Indet::independent(2))}, {zero}}};
    CrossSection cs{{{Indet::independent(1), 1, RatExpr()},
                     {Indet::independent(2), 1, RatExpr()},
                     {fx_jet(1, {0, 1}), 2,
                      RatExpr::constant(1) - RatExpr(Poly::var(fx_jet(1, {1, 0}), 2))}}};
    return Frame(ctx, gens, cs);
}

// rigid motions of 3-space on curves (x, u(x), v(x)), minimal cross-section
inline Frame curves_minimal() {
    JetContext ctx(1, 2);
    RatExpr x = fx_rx(Indet::independent(1)), u0 = fx_rx(fx_jet(1, {0})),
            v0 = fx_rx(fx_jet(2, {0})), one = RatExpr::constant(1), zero;
    std::vector<Generator> gens{{"v1", {one}, {zero, zero}},
                                {"v2", {zero}, {one, zero}},
                                {"v3", {zero}, {zero, one}},
                                {"v4", {zero}, {v0, -u0}},
                                {"v5", {-u0}, {x, zero}},
                                {"v6", {-v0}, {zero, x}}};
    CrossSection cs{{{Indet::independent(1), 1, RatExpr()},
                     {fx_jet(1, {0}), 1, RatExpr()},
                     {fx_jet(2, {0}), 1, RatExpr()},
                     {fx_jet(1, {1}), 1, RatExpr()},
                     {fx_jet(2, {1}), 1, RatExpr()},
                     {fx_jet(2, {2}), 1, fx_rx(fx_jet(1, {2}))}}};
    return Frame(ctx, gens, cs);
}

// same action, third-order cross-section that skips the minimal-order condition
inline Frame curves_nonminimal() {
    JetContext ctx(1, 2);
    RatExpr x = fx_rx(Indet::independent(1)), u0 = fx_rx(fx_jet(1, {0})),
            v0 = fx_rx(fx_jet(2, {0})), one = RatExpr::constant(1), zero;
    std::vector<Generator> gens{{"v1", {one}, {zero, zero}},
                                {"v2", {zero}, {one, zero}},
                                {"v3", {zero}, {zero, one}},
                                {"v4", {zero}, {v0, -u0}},
                                {"v5", {-u0}, {x, zero}},
                                {"v6", {-v0}, {zero, x}}};
    CrossSection cs{{{Indet::independent(1), 1, RatExpr()},
                     {fx_jet(1, {0}), 1, RatExpr()},
                     {fx_jet(2, {0}), 1, RatExpr()},
                     {fx_jet(2, {1}), 1, RatExpr()},
                     {fx_jet(2, {2}), 1, RatExpr()},
                     {fx_jet(2, {3}), 1, RatExpr::constant(1)}}};
    return Frame(ctx, gens, cs);
}

// rigid motions of 3-space on graphs z = u(x1, x2), classical cross-section
inline Frame surfaces() {
    JetContext ctx(2, 1);
    RatExpr x1 = fx_rx(Indet::independent(1)), x2 = fx_rx(Indet::independent(2)),
            u0 = fx_rx(fx_jet(1, {0, 0})), one = RatExpr::constant(1), zero;
    std::vector<Generator> gens{{"v1", {one, zero}, {zero}},
                                {"v2", {zero, one}, {zero}},
                                {"v3", {zero, zero}, {one}},
                                {"v4", {-u0, zero}, {x1}},
                                {"v5", {zero, -u0}, {x2}},
                                {"v6", {-x2, x1}, {zero}}};
    CrossSection cs{{{Indet::independent(1), 1, RatExpr()},
                     {Indet::independent(2), 1, RatExpr()},
                     {fx_jet(1, {0, 0}), 1, RatExpr()},
                     {fx_jet(1, {1, 0}), 1, RatExpr()},
                     {fx_jet(1, {0, 1}), 1, RatExpr()},
                     {fx_jet(1, {1, 1}), 1, RatExpr()}}};
    return Frame(ctx, gens, cs);
}

// (pseudo-)rotations of R^3 acting on the independent variables only
inline Frame o3(long eps) {
    JetContext ctx(3, 1);
    RatExpr x1 = fx_rx(Indet::independent(1)), x2 = fx_rx(Indet::independent(2)),
            x3 = fx_rx(Indet::independent(3)), e = RatExpr::constant(eps), zero;
    std::vector<Generator> gens{{"v1", {x2, -x1, zero}, {zero}},
                                {"v2", {x3, zero, -(e * x1)}, {zero}},
                                {"v3", {zero, x3, -(e * x2)}, {zero}}};
    CrossSection cs{{{Indet::independent(1), 1, RatExpr()},
                     {Indet::independent(2), 1, RatExpr()},
                     {fx_jet(1, {1, 0, 0}), 1, RatExpr()}}};
    return Frame(ctx, gens, cs);
}

// the same rotations extended by the three translations
inline Frame e3(long eps) {
    JetContext ctx(3, 1);
    RatExpr x1 = fx_rx(Indet::independent(1)), x2 = fx_rx(Indet::independent(2)),
            x3 = fx_rx(Indet::independent(3)), e = RatExpr::constant(eps),
            one = RatExpr::constant(1), zero;
    std::vector<Generator> gens{{"v1", {x2, -x1, zero}, {zero}},
                                {"v2", {x3, zero, -(e * x1)}, {zero}},
                                {"v3", {zero, x3, -(e * x2)}, {zero}},
                                {"v4", {one, zero, zero}, {zero}},
                                {"v5", {zero, one, zero}, {zero}},
                                {"v6", {zero, zero, one}, {zero}}};
    CrossSection cs{{{Indet::independent(1), 1, RatExpr()},
                     {Indet::independent(2), 1, RatExpr()},
                     {Indet::independent(3), 1, RatExpr()},
                     {fx_jet(1, {1, 0, 0}), 1, RatExpr()},
                     {fx_jet(1, {0, 1, 0}), 1, RatExpr()},
                     {fx_jet(1, {1, 1, 0}), 1, RatExpr()}}};
    return Frame(ctx, gens, cs);
}

} // namespace fixtures

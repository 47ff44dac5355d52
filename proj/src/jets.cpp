#include "mfk/jets.hpp"

namespace mfk {

RatExpr total_derive(const JetContext& ctx, const RatExpr& e, int i) {
    if (i < 1 || i > ctx.m) throw Error("total_derive: direction out of range");
    RatExpr r;
    for (const Indet& v : e.vars()) {
        switch (v.kind()) {
        case Indet::Kind::Param:
            break; // constants
        case Indet::Kind::Independent:
            if (v.index() == i) r += e.diff(v);
            break;
        case Indet::Kind::JetCoord:
            r += e.diff(v) * RatExpr::var(Indet::jet(v.index(), v.alpha().plus(i)));
            break;
        default:
            throw IllegalIndeterminate("total derivation does not act on " + v.to_string());
        }
    }
    return r;
}

RatExpr total_derive_multi(const JetContext& ctx, const RatExpr& e, const MultiIndex& alpha) {
    if (alpha.size() != ctx.m) throw Error("total_derive_multi: index length mismatch");
    RatExpr r = e;
    for (int i = 1; i <= ctx.m; ++i)
        for (int k = 0; k < alpha[i]; ++k) r = total_derive(ctx, r, i);
    return r;
}

int jet_order(const RatExpr& e) {
    int best = -1;
    for (const Indet& v : e.vars())
        if (v.is_jet()) best = std::max(best, v.alpha().order());
    return best;
}

namespace {
void fill_indices(std::vector<int>& cur, int pos, int remaining, bool exact,
                  std::vector<MultiIndex>& out) {
    if (pos == static_cast<int>(cur.size())) {
        if (!exact || remaining == 0) out.push_back(MultiIndex(cur));
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        cur[size_t(pos)] = v;
        fill_indices(cur, pos + 1, remaining - v, exact, out);
    }
    cur[size_t(pos)] = 0;
}
} // namespace

std::vector<MultiIndex> multi_indices_of_order(int m, int k) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<size_t>(m), 0);
    fill_indices(cur, 0, k, true, out);
    return out;
}

std::vector<MultiIndex> multi_indices_up_to(int m, int k) {
    std::vector<MultiIndex> out;
    for (int d = 0; d <= k; ++d) {
        auto layer = multi_indices_of_order(m, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace mfk

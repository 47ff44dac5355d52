#include "mfk/indet.hpp"

namespace mfk {

NameScheme& active_names() {
    static NameScheme scheme;
    return scheme;
}

Indet Indet::inv(const Indet& base) {
    if (!base.is_independent() && !base.is_jet())
        throw IllegalIndeterminate("I(...) base must be a coordinate, got " + base.to_string());
    Indet v;
    v.kind_ = Kind::InvSym;
    v.idx_ = base.idx_;
    v.alpha_ = base.alpha_;
    v.base_is_indep_ = base.is_independent();
    return v;
}

Indet Indet::mono(const Indet& base, MultiIndex beta) {
    if (beta.is_zero()) return inv(base);
    if (!base.is_independent() && !base.is_jet())
        throw IllegalIndeterminate("M(...) base must be a coordinate, got " + base.to_string());
    Indet v;
    v.kind_ = Kind::MonoSym;
    v.idx_ = base.idx_;
    v.alpha_ = base.alpha_;
    v.base_is_indep_ = base.is_independent();
    v.beta_ = std::move(beta);
    return v;
}

Indet Indet::base() const {
    if (!is_inv() && !is_mono()) throw Error("Indet::base on a plain coordinate");
    return base_is_indep_ ? independent(idx_) : jet(idx_, alpha_);
}

// Stable total order: Param < Independent < JetCoord < InvSym < MonoSym;
// JetCoord by (dep, |alpha|, lex alpha); InvSym by base; MonoSym by
// (base, |beta|, lex beta).  Params compare by name.
int Indet::cmp(const Indet& o) const {
    auto coord_cmp = [](bool a_indep, int a_idx, const MultiIndex& a_al, bool b_indep, int b_idx,
                        const MultiIndex& b_al) -> int {
        if (a_indep != b_indep) return a_indep ? -1 : 1; // Independent before JetCoord
        if (a_indep) return a_idx == b_idx ? 0 : (a_idx < b_idx ? -1 : 1);
        if (a_idx != b_idx) return a_idx < b_idx ? -1 : 1;
        return graded_lex_cmp(a_al, b_al);
    };
    if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_) ? -1 : 1;
    switch (kind_) {
    case Kind::Param:
        return name_ == o.name_ ? 0 : (name_ < o.name_ ? -1 : 1);
    case Kind::Independent:
        return idx_ == o.idx_ ? 0 : (idx_ < o.idx_ ? -1 : 1);
    case Kind::JetCoord:
        return coord_cmp(false, idx_, alpha_, false, o.idx_, o.alpha_);
    case Kind::InvSym:
        return coord_cmp(base_is_indep_, idx_, alpha_, o.base_is_indep_, o.idx_, o.alpha_);
    case Kind::MonoSym: {
        int c = coord_cmp(base_is_indep_, idx_, alpha_, o.base_is_indep_, o.idx_, o.alpha_);
        if (c) return c;
        return graded_lex_cmp(beta_, o.beta_);
    }
    }
    return 0;
}

std::string Indet::to_string() const {
    const NameScheme& ns = active_names();
    auto coord_str = [&](bool indep, int idx, const MultiIndex& al) {
        if (indep) return ns.independent(idx);
        return ns.dependent(idx) + "[" + al.to_string() + "]";
    };
    switch (kind_) {
    case Kind::Param:
        return name_;
    case Kind::Independent:
        return ns.independent(idx_);
    case Kind::JetCoord:
        return coord_str(false, idx_, alpha_);
    case Kind::InvSym:
        return "I(" + coord_str(base_is_indep_, idx_, alpha_) + ")";
    case Kind::MonoSym:
        return "M(" + coord_str(base_is_indep_, idx_, alpha_) + ";" + beta_.to_string() + ")";
    }
    return "?";
}

} // namespace mfk

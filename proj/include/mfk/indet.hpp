#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mfk/multiindex.hpp"

namespace mfk {

// Display names for the coordinate functions.  The engine core only tracks
// positional indices; printing consults the active naming scheme.  Parsing a
// spec file installs one; tests that build expressions by hand may install
// their own or live with the x1/u1 defaults.
struct NameScheme {
    std::vector<std::string> independents; // size m
    std::vector<std::string> dependents;   // size n

    std::string independent(int i) const {
        if (i >= 1 && i <= static_cast<int>(independents.size())) return independents[size_t(i - 1)];
        return "x" + std::to_string(i);
    }
    std::string dependent(int j) const {
        if (j >= 1 && j <= static_cast<int>(dependents.size())) return dependents[size_t(j - 1)];
        return "u" + std::to_string(j);
    }
};

NameScheme& active_names(); // process-wide; set once per run (see cli module)

// One indeterminate of the rational-function universe.
//
//   Param         a named rational parameter bound at parse time (eps)
//   Independent   x_i
//   JetCoord      u_{j,alpha}
//   InvSym        I(z): the invariantization symbol of an Independent/JetCoord
//   MonoSym       M(z;beta): the monotone-derivative symbol D^beta applied to I(z)
//
// MonoSym with beta = 0 *is* InvSym of the same base; the factory canonicalizes.
class Indet {
public:
    enum class Kind : unsigned char { Param = 0, Independent = 1, JetCoord = 2, InvSym = 3, MonoSym = 4 };

    static Indet param(std::string name) {
        Indet v;
        v.kind_ = Kind::Param;
        v.name_ = std::move(name);
        return v;
    }
    static Indet independent(int i) {
        Indet v;
        v.kind_ = Kind::Independent;
        v.idx_ = i;
        return v;
    }
    static Indet jet(int dep, MultiIndex alpha) {
        Indet v;
        v.kind_ = Kind::JetCoord;
        v.idx_ = dep;
        v.alpha_ = std::move(alpha);
        return v;
    }
    // base must be Independent or JetCoord
    static Indet inv(const Indet& base);
    static Indet mono(const Indet& base, MultiIndex beta);

    Kind kind() const { return kind_; }
    bool is_param() const { return kind_ == Kind::Param; }
    bool is_independent() const { return kind_ == Kind::Independent; }
    bool is_jet() const { return kind_ == Kind::JetCoord; }
    bool is_inv() const { return kind_ == Kind::InvSym; }
    bool is_mono() const { return kind_ == Kind::MonoSym; }

    const std::string& param_name() const { return name_; }
    int index() const { return idx_; }              // Independent: i; JetCoord: dep j
    const MultiIndex& alpha() const { return alpha_; } // JetCoord derivative index
    const MultiIndex& beta() const { return beta_; }   // MonoSym derivation index

    // For InvSym/MonoSym: the underlying coordinate.
    Indet base() const;

    int cmp(const Indet& o) const;
    bool operator==(const Indet& o) const { return cmp(o) == 0; }
    bool operator!=(const Indet& o) const { return cmp(o) != 0; }
    bool operator<(const Indet& o) const { return cmp(o) < 0; }

    std::string to_string() const;

private:
    Kind kind_ = Kind::Param;
    int idx_ = 0;
    std::string name_;  // Param name
    MultiIndex alpha_;  // JetCoord alpha (also the base alpha for InvSym/MonoSym over a jet)
    MultiIndex beta_;   // MonoSym beta
    bool base_is_indep_ = false; // for InvSym/MonoSym
};

} // namespace mfk

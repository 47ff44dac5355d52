#pragma once

#include <vector>

#include "mfk/ratexpr.hpp"

namespace mfk {

// Triangular rewrite system: each rule replaces a pure power v^k of a single
// indeterminate by a RatExpr free of any indeterminate >= v (triangular order
// = the canonical Indet order restricted to the rule heads).
struct ReductionRule {
    Indet head;
    int power = 1;
    RatExpr rhs;
};

class ReductionSystem {
public:
    ReductionSystem() = default;
    explicit ReductionSystem(std::vector<ReductionRule> rules); // validates

    const std::vector<ReductionRule>& rules() const { return rules_; }
    bool empty() const { return rules_.empty(); }

    RatExpr reduce(const RatExpr& e) const;

private:
    RatExpr rewrite_pass(const Poly& p, bool& applied) const;
    std::vector<ReductionRule> rules_;
};

inline RatExpr reduce_triangular(const RatExpr& e, const ReductionSystem& rs) { return rs.reduce(e); }

} // namespace mfk

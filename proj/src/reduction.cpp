#include "mfk/reduction.hpp"

#include <map>

#include "mfk/errors.hpp"

namespace mfk {

ReductionSystem::ReductionSystem(std::vector<ReductionRule> rules) : rules_(std::move(rules)) {
    std::map<Indet, const ReductionRule*> by_head;
    for (auto& r : rules_) {
        if (r.power < 1) throw RuleShapeError("rule power must be >= 1");
        if (!by_head.emplace(r.head, &r).second)
            throw RuleShapeError("duplicate rule head " + r.head.to_string());
    }
    // triangularity over the heads only: a right side may mention arbitrary
    // irreducible indeterminates, but any reducible one must be strictly
    // smaller than the rule's own head
    for (auto& r : rules_) {
        for (auto& v : r.rhs.vars()) {
            if (by_head.count(v) && !(v.cmp(r.head) < 0))
                throw RuleShapeError("rule for " + r.head.to_string() +
                                     " has right side containing " + v.to_string());
        }
    }
}

// One full rewrite pass over a polynomial: every factor v^e with e >= k(v) is
// replaced by rhs^(e div k) * v^(e mod k).
RatExpr ReductionSystem::rewrite_pass(const Poly& p, bool& applied) const {
    std::map<Indet, const ReductionRule*> by_head;
    for (auto& r : rules_) by_head.emplace(r.head, &r);

    RatExpr acc;
    for (auto& [m, c] : p.terms()) {
        RatExpr term = RatExpr::constant(c);
        for (auto& [v, e] : m.factors()) {
            auto it = by_head.find(v);
            if (it != by_head.end() && e >= it->second->power) {
                int q = e / it->second->power;
                int rem = e % it->second->power;
                term *= it->second->rhs.pow(q);
                if (rem) term *= RatExpr(Poly::var(v, rem));
                applied = true;
            } else {
                term *= RatExpr(Poly::var(v, e));
            }
        }
        acc += term;
    }
    return acc;
}

RatExpr ReductionSystem::reduce(const RatExpr& e) const {
    if (rules_.empty()) return e;
    RatExpr cur = e;
    // Triangularity bounds the number of passes by the rule count; the +1 pass
    // detects the fixpoint.
    for (size_t pass = 0; pass <= rules_.size() + 1; ++pass) {
        bool applied = false;
        RatExpr num = rewrite_pass(cur.num(), applied);
        RatExpr den = rewrite_pass(cur.den(), applied);
        if (den.is_zero()) throw ZeroDenominator("reduction sends a denominator to zero");
        cur = num / den;
        if (!applied) return cur;
    }
    throw Error("reduce_triangular: no fixpoint (system not triangular?)");
}

} // namespace mfk

#pragma once

#include "mfk/rewrite.hpp"

namespace mfk {

// One relation in the kernel of the evaluation morphism phi.  Bodies live in
// the monotone-symbol algebra:
//   R  the cross-section equations over order-0 symbols,
//   S  the first derivative of each symbol of order <= s versus its successor,
//   T  the cross-derivative exchange for the symbols of order s+1.
struct SyzygyRec {
    enum class Kind { R, S, T };

    Kind kind;
    int i = 0;     // derivation index (S and T)
    int rule = 0;  // originating cross-section rule, 1-based (R)
    Indet target;  // the coordinate being derived (S, T) or the rule head (R)
    RatExpr body;

    std::string kind_string() const;
    std::string indices_string() const;
    std::string dump_line() const; // KIND \t INDICES \t canonical expression
};

std::vector<SyzygyRec> gen_R(const Frame& fr);
std::vector<SyzygyRec> gen_S(const MonoAlgebra& alg);
std::vector<SyzygyRec> gen_T(const MonoAlgebra& alg);

// true iff the phi-image of the body reduces to zero exactly
bool verify_zero(const MonoAlgebra& alg, const SyzygyRec& rec);

// closed-form record counts, for self-checks
int count_S(const JetContext& ctx, int s);
int count_T(const JetContext& ctx, int s);

// A generating set of differential invariants given by named iota-expressions.
struct GenSet {
    std::vector<std::pair<std::string, RatExpr>> members;
    bool minimal = false;
};

// the invariantized derivatives of the section functions together with the
// order-0 normalized invariants; requires a minimal-order cross-section
GenSet edge_invariants(const Frame& fr);

} // namespace mfk

#pragma once

#include <iosfwd>
#include <map>

#include "mfk/frame.hpp"

namespace mfk {

// Name environment for the expression grammar.  Params map to whatever the
// caller wants substituted (a bound rational for spec files, a Param
// indeterminate for round-trip tests).
struct ExprEnv {
    std::vector<std::string> independents;
    std::vector<std::string> dependents;
    std::map<std::string, RatExpr> params;
    bool allow_inv_symbols = true; // I(...) / M(...;...)
};

// Parses one expression: rationals, names, + - * / ^ (non-negative integer
// exponents) and parentheses.  line/col_base locate diagnostics when the text
// is a slice of a larger file.
RatExpr parse_expression(const std::string& text, const ExprEnv& env, int line = 1,
                         int col_base = 1);

// A fully validated input file.
struct ActionSpecFile {
    std::vector<std::string> independents;
    std::vector<std::string> dependents;
    std::vector<std::pair<std::string, Rat>> params;
    std::vector<Generator> generators;
    CrossSection section;
    int declared_order = 0;

    JetContext ctx() const {
        return JetContext(static_cast<int>(independents.size()),
                          static_cast<int>(dependents.size()));
    }
};

ActionSpecFile parse_action_spec(const std::string& text);

// point the process-wide printing scheme at this file's names
void install_names(const ActionSpecFile& spec);

// install_names + Frame construction
Frame build_frame(const ActionSpecFile& spec);

} // namespace mfk

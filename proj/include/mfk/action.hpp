#pragma once

#include <string>
#include <utility>

#include "mfk/jets.hpp"

namespace mfk {

// Infinitesimal generator on J0: sum xi_i d/dx_i + sum eta_j d/du_j, with
// coefficients that are rational in the order-0 coordinates and parameters.
struct Generator {
    std::string name;
    std::vector<RatExpr> xi;  // size m
    std::vector<RatExpr> eta; // size n

    Generator() = default;
    Generator(std::string name_, std::vector<RatExpr> xi_, std::vector<RatExpr> eta_);
};

// checks the J0 restriction (no jets of order >= 1, no iota/monotone symbols)
void validate_generator(const JetContext& ctx, const Generator& g);

// Prolongation to jet order k: coefficient of u_{j,alpha} is
//   sum_i xi_i u_{j,alpha+e_i} + D^alpha(zeta_j),   zeta_j = eta_j - sum_i xi_i u_{j,e_i}.
class ProlongedGenerator {
public:
    ProlongedGenerator(const JetContext& ctx, const Generator& g, int k);

    int order() const { return order_; }
    const RatExpr& coeff_x(int i) const;                       // = xi_i
    const RatExpr& coeff_u(int j, const MultiIndex& alpha) const; // |alpha| <= order

    // V^{(k)}(f) for f of jet order <= k
    RatExpr apply(const RatExpr& f) const;

private:
    JetContext ctx_;
    int order_;
    std::vector<RatExpr> xi_;
    std::map<std::pair<int, MultiIndex>, RatExpr> u_coeff_;
};

ProlongedGenerator prolong(const JetContext& ctx, const Generator& g, int k);

// V^{(k)}(f); throws OrderTooLow when k < jet_order(f)
RatExpr apply_generator(const JetContext& ctx, const Generator& g, const RatExpr& f, int k);

// orbit-dimension ranks r_k for k = 0..k_max
std::vector<std::pair<int, int>> stabilization_scan(const JetContext& ctx,
                                                    const std::vector<Generator>& gens, int k_max);

} // namespace mfk

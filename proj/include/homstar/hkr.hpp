#ifndef HOMSTAR_HKR_HPP
#define HOMSTAR_HKR_HPP

#include <functional>

#include "homstar/cochain.hpp"
#include "homstar/multivector.hpp"

namespace homstar {

/// The Hochschild-Kostant-Rosenberg chain map: a p-vector field becomes
/// the totally antisymmetric (p-1)-cochain
///   hkr(X)(f_1,...,f_p) = (1/p!) sum_{b} X^{b_1...b_p} d_{b_1}f_1 ... d_{b_p}f_p.
Cochain hkr(const Multivector& X);

/// One-sided inverse on closed cochains: the unique multivector X with
/// hkr(X) = Alt(D), extracted by evaluating Alt(D) on coordinate tuples.
/// Requires dD = 0 (checked); the retract identity hkr(X) == Alt(D) is
/// re-verified before returning.
Multivector hkr_inv_closed(const Cochain& D);

/// Optional per-block restriction hook for solve_potential: given the
/// coefficient monomial of a block and a candidate derivative key, return
/// false to exclude the candidate from the solution basis.
using CandidateFilter = std::function<bool(const Exps& coeff_monomial, const DerivKey& key)>;

/// Deterministic stand-in for the deformation-retract homotopy: returns C
/// with dC = R, homogeneous of the same degree as R, vanishing on
/// constants. Preconditions dR = 0 and Alt(R) = 0 are checked (they
/// guarantee exactness). The solve is blocked by (coefficient monomial,
/// total derivative multi-index), which the differential preserves;
/// canonical solution by reduced row echelon with free variables at zero.
/// Escalates order_bound twice before reporting infeasibility.
Cochain solve_potential(const Cochain& R, int order_bound = -1,
                        const CandidateFilter& filter = nullptr);

} // namespace homstar

#endif

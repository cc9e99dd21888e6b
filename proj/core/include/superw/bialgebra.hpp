#pragma once

#include "superw/report.hpp"
#include "superw/tensor.hpp"
#include "superw/window.hpp"

#include <optional>
#include <vector>

namespace superw {

/// Candidate r-matrix: a parity-homogeneous element of L (x) L with its skew
/// flag cached. Skewness is not required here; the coalgebra verifier insists
/// on skew even r, everything else accepts any homogeneous r.
struct RMatrix {
    TensorElement value;
    Parity parity = Parity::Even;
    bool skew = true;
};

/// Throws std::invalid_argument when u has mixed parity. A zero u takes the
/// fallback parity (cobrackets of an odd r are accepted but experimental: an
/// odd coboundary cannot be a super-cobracket in the sense of the axioms).
RMatrix make_rmatrix(TensorElement u, Parity parity_if_zero = Parity::Even);

/// Coboundary cobracket Delta_r(x) = (-1)^([r][x]) x o r.
/// x must be parity-homogeneous.
TensorElement cobracket(const RMatrix& r, const AlgElement& x);

/// CYBE obstruction c(r) = [r12,r13] + [r12,r23] + [r13,r23], computed by the
/// three explicit sums in L (x) L (x) L; nothing is ever materialized in the
/// enveloping algebra.
TripleTensor cybe(const RMatrix& r);

/// Support-based sufficiency bound for annihilator scans: each term is killed
/// by [L_(eps m), .] for at most one positive m (the coefficients are degree-1
/// polynomials in m), so support size + 1 positive values of m always include
/// a witness when the element is nonzero.
long long annihilator_bound(const TensorElement& u);
long long annihilator_bound(const TripleTensor& w);

/// Modified Yang-Baxter check: x o c(r) must vanish for every x in test_set.
CheckReport mybe_check(const Algebra& algebra, const RMatrix& r,
                       const std::vector<BasisSymbol>& test_set);

/// MYBE over the bound-M scan set {L_(eps m) : 1 <= m <= M(c(r))}; by the
/// annihilator bound this passes iff c(r) = 0 (the desk-scale half of the
/// CYBE/MYBE equivalence).
CheckReport mybe_bound_scan(const Algebra& algebra, const RMatrix& r);

/// Super-coalgebra axioms for Delta_r over every basis x in the window:
/// (a) Delta_r(x) lands in Im(1(x)1 - tau);
/// (b) co-Jacobi (1 + xi + xi^2)(1 (x) Delta_r) Delta_r(x) = 0.
/// Requires r skew and even; rejected with a diagnostic otherwise.
CheckReport verify_coalgebra(const Algebra& algebra, const RMatrix& r, const DegreeWindow& window);

/// Cocycle identity of the coboundary for all basis pairs in the window:
/// Delta_r[x,y] = (-1)^([r][x]) x o Delta_r(y) - (-1)^([y]([r]+[x])) y o Delta_r(x),
/// which for even r is exactly the bialgebra compatibility axiom. Must pass
/// for every homogeneous r.
CheckReport verify_compatibility(const Algebra& algebra, const RMatrix& r,
                                 const DegreeWindow& window);

}  // namespace superw

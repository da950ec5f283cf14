#pragma once

#include "drazin/matrix.hpp"

namespace drazin {

/// The g-Drazin inverse of a together with its index and spectral
/// idempotent.  In M_n over Q(i) every element has one, and it is the
/// unique b with ab = ba, b = bab and a - a^2 b nilpotent.
struct DrazinResult {
    Matrix a_d;        // the inverse itself
    std::size_t index; // least k with rank(a^k) = rank(a^(k+1))
    Matrix a_pi;       // spectral idempotent 1 - a*a_d
};

/// Compute the Drazin inverse by full-rank-factorization descent:
/// factor a = B*C, recurse on the strictly smaller (or invertible)
/// C*B and lift through (BC)^d = B ((CB)^d)^2 C.  Invertible and zero
/// matrices are the base cases (ordinary inverse, zero).
DrazinResult drazin_inverse(const Matrix& a);

/// Truth of each defining identity for a candidate inverse b.
struct AxiomReport {
    bool commute = false;      // ab = ba
    bool inner = false;        // b = bab
    Nilpotency defect;         // a - a^2 b nilpotent, with witness exponent
    bool all() const { return commute && inner && defect.nilpotent; }
};

AxiomReport verify_drazin_axioms(const Matrix& a, const Matrix& b);

/// (yx)^d = y ((xy)^d)^2 x given (xy)^d.  This is the step the descent
/// and the block-matrix chains are built from.
Matrix cline_lift(const Matrix& x, const Matrix& y, const Matrix& xy_d);

/// Cline's formula: returns b ((ab)^d)^2 a, which equals (ba)^d.
Matrix cline_transfer(const Matrix& a, const Matrix& b);

/// (ab)^d = a^d b^d for commuting a, b; throws HypothesisError when
/// ab != ba.
Matrix commuting_product_drazin(const Matrix& a, const Matrix& b);

/// Additive formula for pq = 0:
///   (p+q)^d = sum_{i=0..n} (q^d)^{i+1} p^i p^pi
///           + sum_{i=0..n} q^pi q^i (p^d)^{i+1}
/// with both sums finite because indices are at most n.  Throws
/// HypothesisError when pq != 0.
Matrix additive_pq_zero(const Matrix& p, const Matrix& q);

/// The same sums evaluated from already-known inverses of the summands.
Matrix additive_lift(const Matrix& p, const Matrix& q, const Matrix& p_d,
                     const Matrix& q_d);

} // namespace drazin

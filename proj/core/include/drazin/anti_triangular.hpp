#pragma once

#include "drazin/decompose.hpp"
#include "drazin/drazin.hpp"

namespace drazin {

/// 2x2 block matrix over M_n, stored with its 2n x 2n embedding.
struct Block2x2 {
    Matrix a, b, c, d;

    /// Row/column-block embedding into M_{2n}.
    Matrix embedded() const;

    /// Read the four n x n blocks back out of a 2n x 2n matrix.
    static Block2x2 split(const Matrix& m);
};

/// Convenience: the embedding of [[a, b], [c, d]].
Matrix embed_blocks(const Matrix& a, const Matrix& b, const Matrix& c,
                    const Matrix& d);

/// U(m) = sum_{i=0..floor(m/2)} binom(m-i, i) a^i for m >= 0, U(-1) = 0.
/// Throws DomainError for m < -1.
Matrix u_poly(const Matrix& a, long m);

/// U(-1), U(0), ..., U(last) built from the recurrence
/// U(n) = U(n-1) + U(n-2) a; an independent route to the closed form.
std::vector<Matrix> u_sequence(const Matrix& a, long last);

/// Certified power identity for M = [[1, 1], [a, 0]]:
/// M^n = [[U(n), U(n-1)], [U(n-1)a, U(n-2)a]], plus the recurrence and
/// the closed-form/recurrence cross-check.
Conditions power_check_lemma31(const Matrix& a, std::size_t n);

bool power_check_lemma31_ok(const Matrix& a, std::size_t n);

/// Blocks of M^d for M = [[1, 1], [a, 0]], with the witness relations
/// they satisfy and the Drazin inverse of a refined from x12.
struct Lemma32Data {
    Matrix x11, x12, x21, x22;
    Matrix a_d;
};

Lemma32Data lemma32_extract(const Matrix& a);

Conditions certify_lemma32(const Matrix& a, const Lemma32Data& d);

/// M^d for M = [[a, b], [c, 0]] with a idempotent and ab = b, assembled
/// by the constructive chain: Cline transfer to bca, the block entry
/// [[1,1],[bca,0]], a commuting-product step with diag(a,a), one
/// pq = 0 additive step, and two Cline transfers back to M.  Every
/// derived step is certified against the Drazin axioms.
/// Throws HypothesisError naming whichever of a^2 = a, ab = b fails.
Matrix thm33_chain(const Matrix& a, const Matrix& b, const Matrix& c);

/// M^d for M = [[a, b], [c, 0]] under c a a^d = c and a^d bc = bc a^d,
/// via the factorization M = [[1,1],[ca^d,0]] diag(a,b): a commuting
/// product on diag(a,a) with [[1,1],[(a^d)^2 bc,0]] followed by a Cline
/// transfer.  Throws HypothesisError naming the failed condition.
Matrix lem35_chain(const Matrix& a, const Matrix& b, const Matrix& c);

/// M^d for M = [[a, b], [c, 0]] under bc a^pi = 0 and a^d bc = bc a^d:
/// split M = P + Q with P = [[a,b],[c a a^d,0]], Q = [[0,0],[c a^pi,0]],
/// certify PQ = 0 and Q^2 = 0, chain P through lem35 and combine
/// additively.  Throws HypothesisError naming the failed condition.
Matrix thm36_split(const Matrix& a, const Matrix& b, const Matrix& c);

/// M^d for M = [[a, b], [c, 0]] under a^pi bc = 0 and abc = bca.
/// Derives a^d bc = bc a^d (a^d is a polynomial in a) and bc a^pi = 0,
/// then delegates to thm36_split.
Matrix cor37_derive(const Matrix& a, const Matrix& b, const Matrix& c);

} // namespace drazin

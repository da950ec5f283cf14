#include "drazin/drazin.hpp"

namespace drazin {

namespace {

Matrix drazin_descend(const Matrix& a) {
    if (a.is_zero()) {
        return Matrix::zero(a.rows(), a.cols());
    }
    if (std::optional<Matrix> inv = try_inverse(a)) {
        return *inv;
    }
    // Singular and nonzero: a = B*C with C*B strictly smaller.
    FullRankFactors f = *full_rank_factorize(a);
    Matrix core = f.coords * f.basis;
    Matrix core_d = drazin_descend(core);
    return f.basis * core_d * core_d * f.coords;
}

} // namespace

DrazinResult drazin_inverse(const Matrix& a) {
    detail::require_square(a, "drazin_inverse");
    DrazinResult out;
    out.a_d = drazin_descend(a);
    out.a_pi = Matrix::identity(a.rows()) - a * out.a_d;

    // index = least k with rank(a^k) = rank(a^(k+1)); a^0 = identity.
    std::size_t prev = a.rows();
    Matrix power = a;
    out.index = 0;
    while (true) {
        std::size_t r = rank_of(power);
        if (r == prev) {
            break;
        }
        prev = r;
        ++out.index;
        power = power * a;
    }
    return out;
}

AxiomReport verify_drazin_axioms(const Matrix& a, const Matrix& b) {
    detail::require_square_pair(a, b, "verify_drazin_axioms");
    AxiomReport r;
    r.commute = a * b == b * a;
    r.inner = b * a * b == b;
    r.defect = nilpotency(a - a * a * b);
    return r;
}

Matrix cline_lift(const Matrix& x, const Matrix& y, const Matrix& xy_d) {
    return y * xy_d * xy_d * x;
}

Matrix cline_transfer(const Matrix& a, const Matrix& b) {
    detail::require_square_pair(a, b, "cline_transfer");
    return cline_lift(a, b, drazin_inverse(a * b).a_d);
}

Matrix commuting_product_drazin(const Matrix& a, const Matrix& b) {
    detail::require_square_pair(a, b, "commuting_product_drazin");
    if (a * b != b * a) {
        throw HypothesisError("ab = ba");
    }
    return drazin_inverse(a).a_d * drazin_inverse(b).a_d;
}

Matrix additive_lift(const Matrix& p, const Matrix& q, const Matrix& p_d,
                     const Matrix& q_d) {
    std::size_t n = p.rows();
    Matrix ident = Matrix::identity(n);
    Matrix p_pi = ident - p * p_d;
    Matrix q_pi = ident - q * q_d;

    Matrix acc = Matrix::zero(n, n);
    Matrix qd_power = q_d;      // (q^d)^(i+1)
    Matrix p_power = ident;     // p^i
    Matrix q_power = ident;     // q^i
    Matrix pd_power = p_d;      // (p^d)^(i+1)
    for (std::size_t i = 0; i <= n; ++i) {
        acc = acc + qd_power * p_power * p_pi + q_pi * q_power * pd_power;
        qd_power = qd_power * q_d;
        p_power = p_power * p;
        q_power = q_power * q;
        pd_power = pd_power * p_d;
    }
    return acc;
}

Matrix additive_pq_zero(const Matrix& p, const Matrix& q) {
    detail::require_square_pair(p, q, "additive_pq_zero");
    if (!(p * q).is_zero()) {
        throw HypothesisError("pq = 0");
    }
    return additive_lift(p, q, drazin_inverse(p).a_d, drazin_inverse(q).a_d);
}

} // namespace drazin

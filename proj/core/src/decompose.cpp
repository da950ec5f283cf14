#include "drazin/decompose.hpp"

namespace drazin {

std::string first_failure(const Conditions& conditions) {
    for (const auto& [name, ok] : conditions) {
        if (!ok) {
            return name;
        }
    }
    return {};
}

StronglyDrazinVerdict strongly_drazin_check(const Matrix& a) {
    detail::require_square(a, "strongly_drazin_check");
    StronglyDrazinVerdict v;
    v.holds = is_nilpotent(a - a * a);
    if (v.holds) {
        v.e = a * drazin_inverse(a).a_d;
    }
    return v;
}

Conditions certify_strongly_drazin(const Matrix& a, const StronglyDrazinVerdict& v) {
    if (!v.holds) {
        return {{"a - a^2 nilpotent", false}};
    }
    return {
        {"a - a^2 nilpotent", true},
        {"e idempotent", v.e * v.e == v.e},
        {"ea = ae", v.e * a == a * v.e},
        {"a - e nilpotent", is_nilpotent(a - v.e)},
    };
}

bool thm22_witness_check(const Matrix& a, const Matrix& x) {
    detail::require_square_pair(a, x, "thm22_witness_check");
    return a * x == x * a && is_nilpotent(a - a * a * x);
}

WitnessRefinement thm22_refine(const Matrix& a, const Matrix& x) {
    detail::require_square_pair(a, x, "thm22_refine");
    if (a * x != x * a) {
        throw HypothesisError("xa = ax");
    }
    if (!is_nilpotent(a - a * a * x)) {
        throw HypothesisError("a - a^2 x nilpotent");
    }
    WitnessRefinement r;
    r.z = x * a * x;
    Matrix az = a * r.z;
    r.e = az * drazin_inverse(az).a_d;
    Matrix ident = Matrix::identity(a.rows());
    r.a_d = *try_inverse(a + ident - r.e) * r.e;
    return r;
}

Conditions certify_refinement(const Matrix& a, const Matrix& x,
                              const WitnessRefinement& r) {
    Matrix ident = Matrix::identity(a.rows());
    Matrix az = a * r.z;
    return {
        {"z = xax", r.z == x * a * x},
        {"a - a^2 z nilpotent", is_nilpotent(a - a * a * r.z)},
        {"z - z^2 a nilpotent", is_nilpotent(r.z - r.z * r.z * a)},
        {"az - (az)^2 nilpotent", is_nilpotent(az - az * az)},
        {"e idempotent", r.e * r.e == r.e},
        {"ea = ae", r.e * a == a * r.e},
        {"a + 1 - e invertible", try_inverse(a + ident - r.e).has_value()},
        {"a(1 - e) nilpotent", is_nilpotent(a * (ident - r.e))},
    };
}

QuasipolarCertificate quasipolar(const Matrix& a) {
    detail::require_square(a, "quasipolar");
    DrazinResult d = drazin_inverse(a);
    QuasipolarCertificate c;
    c.p = d.a_pi;
    Matrix ident = Matrix::identity(a.rows());
    c.b = *try_inverse(a + c.p) * (ident - c.p);
    return c;
}

QuasipolarCertificate quasipolar_with(const Matrix& a, const Matrix& p) {
    detail::require_square_pair(a, p, "quasipolar");
    if (a * p != p * a) {
        throw HypothesisError("pa = ap");
    }
    std::optional<Matrix> inv = try_inverse(a + p);
    if (!inv) {
        throw HypothesisError("a + p invertible");
    }
    if (!is_nilpotent(a * p)) {
        throw HypothesisError("ap nilpotent");
    }
    QuasipolarCertificate c;
    c.p = p;
    c.b = *inv * (Matrix::identity(a.rows()) - p);
    return c;
}

Conditions certify_quasipolar(const Matrix& a, const QuasipolarCertificate& c) {
    Matrix ident = Matrix::identity(a.rows());
    std::optional<Matrix> inv = try_inverse(a + c.p);
    return {
        {"pa = ap", a * c.p == c.p * a},
        {"a + p invertible", inv.has_value()},
        {"ap nilpotent", is_nilpotent(a * c.p)},
        {"b = (a+p)^{-1}(1-p)", inv && c.b == *inv * (ident - c.p)},
        {"b is a witness", thm22_witness_check(a, c.b)},
    };
}

Matrix cor23_scaler(const Matrix& a) {
    detail::require_square(a, "cor23_scaler");
    DrazinResult d = drazin_inverse(a);
    return *try_inverse(a + d.a_pi);
}

Conditions certify_scaler(const Matrix& a, const Matrix& u) {
    Matrix au = a * u;
    return {
        {"u invertible", try_inverse(u).has_value()},
        {"ua = au", u * a == a * u},
        {"au - (au)^2 nilpotent", is_nilpotent(au - au * au)},
    };
}

EUWDecomposition euw_decompose(const Matrix& a) {
    detail::require_square(a, "euw_decompose");
    DrazinResult d = drazin_inverse(a);
    Matrix ident = Matrix::identity(a.rows());
    EUWDecomposition out;
    out.e = a * d.a_d;
    out.w = a * (ident - out.e);
    out.u = a * out.e + (ident - out.e);
    return out;
}

Conditions certify_euw(const Matrix& a, const EUWDecomposition& d) {
    std::optional<Matrix> u_inv = try_inverse(d.u);
    return {
        {"e idempotent", d.e * d.e == d.e},
        {"u invertible", u_inv.has_value()},
        {"w nilpotent", is_nilpotent(d.w)},
        {"eu = ue", d.e * d.u == d.u * d.e},
        {"ew = we", d.e * d.w == d.w * d.e},
        {"uw = wu", d.u * d.w == d.w * d.u},
        {"a = eu + w", a == d.e * d.u + d.w},
        {"a - a^2 u^{-1} nilpotent", u_inv && is_nilpotent(a - a * a * *u_inv)},
    };
}

UnitPair two_units(const Matrix& a) {
    detail::require_square(a, "two_units");
    if (a.rows() == 0) {
        throw ShapeError("two_units: matrix must be at least 1x1, got " +
                         shape_string(a));
    }
    Matrix half = a.scaled(Gaussian(Rational(1, 2)));
    EUWDecomposition d = euw_decompose(half);
    Matrix ident = Matrix::identity(a.rows());
    UnitPair out;
    out.u1 = (d.e.scaled(Gaussian(2)) - ident) * d.u;
    out.u2 = d.u + d.w.scaled(Gaussian(2)); // u(1 + 2u^{-1}w), uw = wu
    return out;
}

Conditions certify_two_units(const Matrix& a, const UnitPair& p) {
    return {
        {"u1 invertible", !determinant(p.u1).is_zero()},
        {"u2 invertible", !determinant(p.u2).is_zero()},
        {"u1 + u2 = a", p.u1 + p.u2 == a},
    };
}

namespace {

CornerData corner_from_idempotent(const Matrix& a, const Matrix& e) {
    Matrix ident = Matrix::identity(a.rows());
    Matrix v = e * a * e + ident - e;
    std::optional<Matrix> v_inv = try_inverse(v);
    if (!v_inv) {
        throw HypothesisError("eae + 1 - e invertible");
    }
    if (!is_nilpotent((ident - e) * a * (ident - e))) {
        throw HypothesisError("(1-e)a(1-e) nilpotent");
    }
    CornerData out;
    out.e = e;
    out.a_d = e * *v_inv;
    out.corner_inverse = e * *v_inv * e;
    return out;
}

} // namespace

CornerData corner_characterize(const Matrix& a) {
    detail::require_square(a, "corner_characterize");
    Matrix e = a * drazin_inverse(a).a_d;
    return corner_from_idempotent(a, e);
}

CornerData corner_characterize_with(const Matrix& a, const Matrix& e) {
    detail::require_square_pair(a, e, "corner_characterize");
    if (e * e != e) {
        throw HypothesisError("e idempotent");
    }
    if (e * a != a * e) {
        throw HypothesisError("ea = ae");
    }
    return corner_from_idempotent(a, e);
}

Conditions certify_corner(const Matrix& a, const CornerData& c) {
    Matrix ident = Matrix::identity(a.rows());
    Matrix eae = c.e * a * c.e;
    return {
        {"e idempotent", c.e * c.e == c.e},
        {"ea = ae", c.e * a == a * c.e},
        {"eae + 1 - e invertible", try_inverse(eae + ident - c.e).has_value()},
        {"(1-e)a(1-e) nilpotent",
         is_nilpotent((ident - c.e) * a * (ident - c.e))},
        {"corner inverse inverts eae in eAe",
         c.corner_inverse * eae == c.e && eae * c.corner_inverse == c.e},
    };
}

Splitting invariant_splitting(const Matrix& a) {
    detail::require_square(a, "invariant_splitting");
    Matrix e = a * drazin_inverse(a).a_d;
    Matrix complement = Matrix::identity(a.rows()) - e;

    Splitting s;
    s.basis_p = e.columns(rref_decompose(e).pivot_columns);
    s.basis_q = complement.columns(rref_decompose(complement).pivot_columns);
    // a maps each subspace into itself, so these solves are consistent.
    s.restriction_p = *solve(s.basis_p, a * s.basis_p);
    s.restriction_q = *solve(s.basis_q, a * s.basis_q);
    return s;
}

Conditions certify_splitting(const Matrix& a, const Splitting& s) {
    std::size_t n = a.rows();
    std::size_t dim_p = s.basis_p.cols();
    std::size_t dim_q = s.basis_q.cols();
    Matrix change = hcat(s.basis_p, s.basis_q);
    std::optional<Matrix> change_inv =
        change.is_square() ? try_inverse(change) : std::nullopt;

    bool reassembles =
        change_inv &&
        change * direct_sum(s.restriction_p, s.restriction_q) * *change_inv == a;
    return {
        {"dim P + dim Q = n", dim_p + dim_q == n},
        {"bases span with trivial intersection", change_inv.has_value()},
        {"P is a-invariant", a * s.basis_p == s.basis_p * s.restriction_p},
        {"Q is a-invariant", a * s.basis_q == s.basis_q * s.restriction_q},
        {"restriction to P invertible", try_inverse(s.restriction_p).has_value()},
        {"restriction to Q nilpotent", is_nilpotent(s.restriction_q)},
        {"reassembly recovers a", reassembles},
    };
}

} // namespace drazin

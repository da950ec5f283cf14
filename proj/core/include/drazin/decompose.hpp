#pragma once

#include <string>
#include <utility>
#include <vector>

#include "drazin/drazin.hpp"

namespace drazin {

/// Named certificate conditions, evaluated exactly.  Reports and the
/// decompose command surface these verbatim.
using Conditions = std::vector<std::pair<std::string, bool>>;

/// First failed condition name, empty when all hold.
std::string first_failure(const Conditions& conditions);

/// a is strongly Drazin invertible iff a - a^2 is nilpotent; when it
/// is, e = a*a^d is the idempotent summand of a commuting
/// idempotent-plus-nilpotent decomposition of a.
struct StronglyDrazinVerdict {
    bool holds = false;
    Matrix e; // meaningful only when holds
};

StronglyDrazinVerdict strongly_drazin_check(const Matrix& a);

Conditions certify_strongly_drazin(const Matrix& a, const StronglyDrazinVerdict& v);

/// True iff xa = ax and a - a^2 x is nilpotent.
bool thm22_witness_check(const Matrix& a, const Matrix& x);

/// Refinement of a commuting witness into the Drazin inverse:
/// z = xax, e = (az)(az)^d, a_d = (a + 1 - e)^{-1} e.
struct WitnessRefinement {
    Matrix z;
    Matrix e;
    Matrix a_d;
};

/// Throws HypothesisError naming the failed precondition when x is not
/// a valid witness.
WitnessRefinement thm22_refine(const Matrix& a, const Matrix& x);

Conditions certify_refinement(const Matrix& a, const Matrix& x,
                              const WitnessRefinement& r);

/// Quasipolar data: p commutes with a, a + p is invertible, ap is
/// nilpotent, and b = (a+p)^{-1}(1-p).  With idempotent p (always the
/// case in the forward direction, where p = a^pi) b is the Drazin
/// inverse itself; for general p it is still a thm 2.2 witness.
struct QuasipolarCertificate {
    Matrix p;
    Matrix b;
};

QuasipolarCertificate quasipolar(const Matrix& a);

/// Witness-consuming direction; throws HypothesisError identifying
/// which of the three conditions on p failed.
QuasipolarCertificate quasipolar_with(const Matrix& a, const Matrix& p);

Conditions certify_quasipolar(const Matrix& a, const QuasipolarCertificate& c);

/// u = (a + a^pi)^{-1}: an invertible element of comm(a) making au
/// strongly Drazin invertible.
Matrix cor23_scaler(const Matrix& a);

Conditions certify_scaler(const Matrix& a, const Matrix& u);

/// a = eu + w with e idempotent, u a unit, w nilpotent, all three
/// commuting: e = a a^d, w = a(1-e), u = ae + (1-e).
struct EUWDecomposition {
    Matrix e;
    Matrix u;
    Matrix w;
};

EUWDecomposition euw_decompose(const Matrix& a);

Conditions certify_euw(const Matrix& a, const EUWDecomposition& d);

/// a as the sum of two units, via the eu + w shape of a/2.
struct UnitPair {
    Matrix u1;
    Matrix u2;
};

UnitPair two_units(const Matrix& a);

Conditions certify_two_units(const Matrix& a, const UnitPair& p);

/// Corner characterization: a commuting idempotent e with eae
/// invertible in the corner algebra eAe and (1-e)a(1-e) nilpotent.
/// a_d = e (eae + 1 - e)^{-1}; corner_inverse is the corner-algebra
/// inverse of eae (equal to a_d).
struct CornerData {
    Matrix e;
    Matrix corner_inverse;
    Matrix a_d;
};

CornerData corner_characterize(const Matrix& a);

/// Witness-consuming direction; throws HypothesisError when e is not a
/// commuting idempotent or either corner condition fails.
CornerData corner_characterize_with(const Matrix& a, const Matrix& e);

Conditions certify_corner(const Matrix& a, const CornerData& c);

/// Direct-sum splitting of the column space into a-invariant subspaces
/// on which a acts invertibly resp. nilpotently.  Zero-dimensional
/// parts are legal: an empty basis with a 0x0 restriction, whose
/// invertibility/nilpotency are vacuously true.
struct Splitting {
    Matrix basis_p;       // n x dim(P), column-space basis of a*a^d
    Matrix basis_q;       // n x dim(Q), column-space basis of 1 - a*a^d
    Matrix restriction_p; // coordinates of a on P, invertible
    Matrix restriction_q; // coordinates of a on Q, nilpotent
};

Splitting invariant_splitting(const Matrix& a);

Conditions certify_splitting(const Matrix& a, const Splitting& s);

} // namespace drazin

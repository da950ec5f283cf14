#include "drazin/generate.hpp"

#include <array>
#include <limits>
#include <random>

#include "drazin/drazin.hpp"

namespace drazin {

namespace {

constexpr std::array<const char*, 10> kKindNames = {
    "nilpotent", "idempotent", "unit",  "drazin_structured", "commuting_witness",
    "thm33",     "lem35",      "thm36", "cor37",             "pq_zero",
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [lo, hi], inclusive; rejection sampling keeps the
    /// stream a pure function of the mt19937_64 output.
    long range(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t draw = eng_();
        while (draw >= limit) {
            draw = eng_();
        }
        return lo + static_cast<long>(draw % span);
    }

    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(range(0, static_cast<long>(n) - 1));
    }

    bool chance(long num, long den) { return range(1, den) <= num; }

private:
    std::mt19937_64 eng_;
};

Gaussian entry(Rng& rng, long bound) {
    Rational re(rng.range(-bound, bound));
    Rational im(rng.chance(1, 4) ? rng.range(-bound, bound) : 0);
    return {re, im};
}

Gaussian nonzero_entry(Rng& rng, long bound) {
    Gaussian z = entry(rng, bound);
    while (z.is_zero()) {
        z = entry(rng, bound);
    }
    return z;
}

Matrix raw(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = entry(rng, bound);
        }
    }
    return m;
}

Matrix strict_upper(Rng& rng, std::size_t n, long bound) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = entry(rng, bound);
        }
    }
    return m;
}

/// S and S^{-1} built together from elementary integer operations
/// (transvections, swaps, row negations), so det(S) is +-1 and the
/// inverse is exact with bounded entries.
std::pair<Matrix, Matrix> unimodular_pair(Rng& rng, std::size_t n, long bound) {
    Matrix s = Matrix::identity(n);
    Matrix s_inv = Matrix::identity(n);
    if (n < 2) {
        return {s, s_inv};
    }
    std::size_t ops = n + 2;
    for (std::size_t k = 0; k < ops; ++k) {
        std::size_t i = rng.index(n);
        std::size_t j = rng.index(n - 1);
        if (j >= i) {
            ++j;
        }
        if (rng.chance(1, 6)) {
            // swap rows i, j of S; columns i, j of S^{-1}
            s.swap_rows(i, j);
            for (std::size_t r = 0; r < n; ++r) {
                std::swap(s_inv(r, i), s_inv(r, j));
            }
            continue;
        }
        long m = rng.range(1, bound) * (rng.chance(1, 2) ? 1 : -1);
        Gaussian factor{Rational(m), Rational(0)};
        // S <- E S with E = I + m e_i e_j^T; S^{-1} <- S^{-1} E^{-1}
        for (std::size_t col = 0; col < n; ++col) {
            s(i, col) += factor * s(j, col);
        }
        for (std::size_t r = 0; r < n; ++r) {
            s_inv(r, j) -= factor * s_inv(r, i);
        }
    }
    return {s, s_inv};
}

/// Invertible matrix with Gaussian-integer entries: elementary
/// operations with unit or small-integer multipliers, plus occasional
/// diagonal scalings by nonzero entries.
Matrix unit_matrix(Rng& rng, std::size_t n, long bound) {
    Matrix u = Matrix::identity(n);
    if (n == 0) {
        return u;
    }
    std::size_t ops = n + 2;
    for (std::size_t k = 0; k < ops; ++k) {
        if (n >= 2 && !rng.chance(1, 4)) {
            std::size_t i = rng.index(n);
            std::size_t j = rng.index(n - 1);
            if (j >= i) {
                ++j;
            }
            Gaussian m = nonzero_entry(rng, bound);
            for (std::size_t col = 0; col < n; ++col) {
                u(i, col) += m * u(j, col);
            }
        } else {
            std::size_t i = rng.index(n);
            Gaussian m = nonzero_entry(rng, bound);
            for (std::size_t col = 0; col < n; ++col) {
                u(i, col) *= m;
            }
        }
    }
    return u;
}

/// Rank for split constructions; extreme ranks stay possible but rare.
std::size_t pick_rank(Rng& rng, std::size_t n) {
    std::size_t r = rng.index(n + 1);
    if ((r == 0 || r == n) && n >= 2 && !rng.chance(1, 8)) {
        r = 1 + rng.index(n - 1);
    }
    return r;
}

Matrix conjugated(Rng& rng, const Matrix& core, long bound) {
    auto [s, s_inv] = unimodular_pair(rng, core.rows(), bound);
    return s * core * s_inv;
}

/// Random polynomial in a with Gaussian-integer coefficients,
/// degree < max(deg_bound, 1).
Matrix random_polynomial(Rng& rng, const Matrix& a, std::size_t deg_bound,
                         long bound) {
    std::size_t degree = deg_bound == 0 ? 1 : deg_bound;
    Matrix out(a.rows(), a.cols());
    Matrix power = Matrix::identity(a.rows());
    for (std::size_t i = 0; i < degree; ++i) {
        out = out + power.scaled(entry(rng, bound));
        if (i + 1 < degree) {
            power = power * a;
        }
    }
    return out;
}

Matrix structured_core(Rng& rng, std::size_t n, std::size_t invertible_rank,
                       long bound) {
    Matrix d = unit_matrix(rng, invertible_rank, bound);
    Matrix nil = strict_upper(rng, n - invertible_rank, bound);
    return direct_sum(d, nil);
}

void require_generated(bool ok, const char* hypothesis, const GenSpec& spec) {
    if (!ok) {
        throw GenerationError(std::string("generated instance violates ") +
                              hypothesis + " (kind " + kind_name(spec.kind) +
                              ", seed " + std::to_string(spec.seed) + ")");
    }
}

NamedMatrices gen_lem35_family(Rng& rng, const GenSpec& spec) {
    std::size_t n = spec.size;
    long bound = spec.entry_bound;
    std::size_t r = pick_rank(rng, n);
    Matrix d = unit_matrix(rng, r, bound);
    Matrix nil = strict_upper(rng, n - r, bound);
    auto [s, s_inv] = unimodular_pair(rng, n, bound);
    Matrix a = s * direct_sum(d, nil) * s_inv;

    if (spec.kind == Kind::lem35) {
        // In the adapted basis: c = [[C1, 0], [C2, 0]] with C1 a unit
        // (so c a a^d = c), and b chosen so that bc has commuting core
        // block q(D) and zero lower-left block.
        Matrix c1 = unit_matrix(rng, r, bound);
        Matrix b4 = unit_matrix(rng, n - r, bound);
        Matrix b2 = raw(rng, r, n - r, bound);
        Matrix b3 = raw(rng, n - r, r, bound);
        Matrix q_of_d = random_polynomial(rng, d, r, bound);
        Matrix c2 = -(*try_inverse(b4) * b3 * c1);
        Matrix b1 = (q_of_d - b2 * c2) * *try_inverse(c1);

        Matrix b_adapted(n, n);
        b_adapted.set_block(0, 0, b1);
        b_adapted.set_block(0, r, b2);
        b_adapted.set_block(r, 0, b3);
        b_adapted.set_block(r, r, b4);
        Matrix c_adapted(n, n);
        c_adapted.set_block(0, 0, c1);
        c_adapted.set_block(r, 0, c2);

        Matrix b = s * b_adapted * s_inv;
        Matrix c = s * c_adapted * s_inv;

        DrazinResult da = drazin_inverse(a);
        require_generated(c * a * da.a_d == c, "c a a^d = c", spec);
        Matrix bc = b * c;
        require_generated(da.a_d * bc == bc * da.a_d, "a^d bc = bc a^d", spec);
        return {{"a", a}, {"b", b}, {"c", c}};
    }

    // thm36 / cor37: bc = q(D) (+) 0 in the adapted basis, realized by
    // making one factor invertible.
    Matrix target = direct_sum(random_polynomial(rng, d, r, bound),
                               Matrix::zero(n - r, n - r));
    Matrix b_adapted;
    Matrix c_adapted;
    if (rng.chance(1, 2)) {
        c_adapted = unit_matrix(rng, n, bound);
        b_adapted = target * *try_inverse(c_adapted);
    } else {
        b_adapted = unit_matrix(rng, n, bound);
        c_adapted = *try_inverse(b_adapted) * target;
    }
    Matrix b = s * b_adapted * s_inv;
    Matrix c = s * c_adapted * s_inv;

    DrazinResult da = drazin_inverse(a);
    Matrix bc = b * c;
    if (spec.kind == Kind::thm36) {
        require_generated((bc * da.a_pi).is_zero(), "bc a^pi = 0", spec);
        require_generated(da.a_d * bc == bc * da.a_d, "a^d bc = bc a^d", spec);
    } else {
        require_generated((da.a_pi * bc).is_zero(), "a^pi bc = 0", spec);
        require_generated(a * bc == bc * a, "abc = bca", spec);
    }
    return {{"a", a}, {"b", b}, {"c", c}};
}

} // namespace

const char* kind_name(Kind k) {
    return kKindNames[static_cast<std::size_t>(k)];
}

Kind kind_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (name == kKindNames[i]) {
            return static_cast<Kind>(i);
        }
    }
    throw DomainError("unknown generator kind: " + name);
}

Matrix gen_element(const GenSpec& spec) {
    Rng rng(spec.seed);
    std::size_t n = spec.size;
    long bound = spec.entry_bound;
    switch (spec.kind) {
    case Kind::nilpotent:
        return conjugated(rng, strict_upper(rng, n, bound), bound);
    case Kind::idempotent: {
        std::size_t r = pick_rank(rng, n);
        Matrix core = direct_sum(Matrix::identity(r),
                                 Matrix::zero(n - r, n - r));
        return conjugated(rng, core, bound);
    }
    case Kind::unit:
        return unit_matrix(rng, n, bound);
    case Kind::drazin_structured: {
        std::size_t r = pick_rank(rng, n);
        return conjugated(rng, structured_core(rng, n, r, bound), bound);
    }
    default:
        throw DomainError(std::string("gen_element: kind ") +
                          kind_name(spec.kind) + " yields a tuple, use "
                          "gen_theorem_instance");
    }
}

NamedMatrices gen_theorem_instance(const GenSpec& spec) {
    Rng rng(spec.seed);
    std::size_t n = spec.size;
    long bound = spec.entry_bound;
    switch (spec.kind) {
    case Kind::commuting_witness: {
        std::size_t r = pick_rank(rng, n);
        Matrix a = conjugated(rng, structured_core(rng, n, r, bound), bound);
        Matrix x = random_polynomial(rng, a, n, bound);
        require_generated(a * x == x * a, "ax = xa", spec);
        return {{"a", a}, {"x", x}};
    }
    case Kind::thm33: {
        std::size_t r = pick_rank(rng, n);
        Matrix core = direct_sum(Matrix::identity(r),
                                 Matrix::zero(n - r, n - r));
        Matrix a = conjugated(rng, core, bound);
        Matrix b = a * raw(rng, n, n, bound);
        Matrix c = raw(rng, n, n, bound);
        require_generated(a * a == a, "a^2 = a", spec);
        require_generated(a * b == b, "ab = b", spec);
        return {{"a", a}, {"b", b}, {"c", c}};
    }
    case Kind::lem35:
    case Kind::thm36:
    case Kind::cor37:
        return gen_lem35_family(rng, spec);
    case Kind::pq_zero: {
        std::size_t r = pick_rank(rng, n);
        Matrix p = raw(rng, n, r, bound) * raw(rng, r, n, bound);
        Matrix kernel = rref_decompose(p).kernel;
        Matrix q = kernel * raw(rng, kernel.cols(), n, bound);
        require_generated((p * q).is_zero(), "pq = 0", spec);
        return {{"p", p}, {"q", q}};
    }
    default:
        throw DomainError(std::string("gen_theorem_instance: kind ") +
                          kind_name(spec.kind) + " yields one matrix, use "
                          "gen_element");
    }
}

SimilarityData similarity_conjugate(const Matrix& a, std::uint64_t seed) {
    detail::require_square(a, "similarity_conjugate");
    Rng rng(seed);
    SimilarityData out;
    auto [s, s_inv] = unimodular_pair(rng, a.rows(), 3);
    out.s = s;
    out.s_inv = s_inv;
    out.conjugated = s * a * s_inv;
    return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    // splitmix64 of master advanced by the stream index.
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

} // namespace drazin

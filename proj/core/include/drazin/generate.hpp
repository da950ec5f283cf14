#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "drazin/matrix.hpp"

namespace drazin {

/// What to generate.  Single matrices for the first four kinds, named
/// tuples for the rest.
enum class Kind {
    nilpotent,
    idempotent,
    unit,
    drazin_structured,
    commuting_witness,
    thm33,
    lem35,
    thm36,
    cor37,
    pq_zero,
};

const char* kind_name(Kind k);
Kind kind_from_name(const std::string& name); // throws DomainError

/// Deterministic generation request: identical specs yield bit-identical
/// output.  Randomness comes from std::mt19937_64 seeded with `seed`;
/// bounded draws use rejection sampling, so the stream depends on the
/// generator alone.  Raw entries are Gaussian integers with both parts
/// bounded by entry_bound (denominators 1).
struct GenSpec {
    std::uint64_t seed = 0;
    std::size_t size = 2;
    long entry_bound = 3;
    Kind kind = Kind::drazin_structured;
};

/// One structured matrix for kinds nilpotent / idempotent / unit /
/// drazin_structured; throws DomainError for tuple kinds.
Matrix gen_element(const GenSpec& spec);

using NamedMatrices = std::vector<std::pair<std::string, Matrix>>;

/// Hypothesis-satisfying tuples for the theorem kinds (including
/// commuting_witness and pq_zero).  Every tuple is re-verified against
/// its own hypotheses before being returned; a failed re-verification
/// throws GenerationError.
NamedMatrices gen_theorem_instance(const GenSpec& spec);

/// Unimodular conjugation data: S integer with det +-1, exact inverse,
/// and S a S^{-1}.
struct SimilarityData {
    Matrix s;
    Matrix s_inv;
    Matrix conjugated;
};

SimilarityData similarity_conjugate(const Matrix& a, std::uint64_t seed);

/// Per-trial seed: splitmix64 over (master, stream), so parallel and
/// serial runs draw identical corpora.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

} // namespace drazin

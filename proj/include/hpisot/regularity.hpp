#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hpisot/cohomology.hpp"
#include "hpisot/number_field.hpp"
#include "hpisot/substitution.hpp"

namespace hpisot {

/// Exact tile lengths in Q(lambda).  Lengths form a positive left
/// eigenvector; the shortest tile (first letter on ties) has length 1 = L.
struct TileGeometry {
    FieldPtr field;
    std::vector<FieldElement> lengths;
    FieldElement base_length;  ///< L
    Letter unit_letter = 0;    ///< the tile scaled to length 1
};

TileGeometry tile_geometry(const Substitution& s, const PisotReport& pisot);
TileGeometry tile_geometry(const Substitution& s);

/// Power-basis coordinates c of x / L, so x = L * sum c_i lambda^i.
std::vector<Rational> coordinates(const FieldElement& x, const TileGeometry& g);

/// Start positions q in [from, to) with w[q, q + |p|) = p; the occurrence may
/// run past `to`.
std::size_t count_occurrences(const Word& w, const Word& p, std::size_t from, std::size_t to);

struct ERPFit {
    Word patch;
    std::vector<Rational> alphas;  ///< empty when no exact solution exists
    std::size_t sample_count = 0;  ///< return samples (consecutive anchor pairs)
    std::size_t distinct_samples = 0;
    std::size_t rank = 0;  ///< rank of the sampled coordinate vectors
    bool residual_zero = false;
    std::size_t sample_len = 0;
    Word anchor;  ///< anchor word Q; its length stands in for L'
    std::size_t anchor_offset = 0;  ///< anchor vertex inside Q
    std::vector<bool> a0_membership;
};

inline constexpr std::size_t kMinReturnSamples = 20;
inline constexpr unsigned kMaxAnchorDoublings = 4;
inline constexpr std::size_t kMaxSampleLen = 1 << 22;

/// Fits count(p in [x0, x0 + tau)) = sum alpha_i c_i(tau) over consecutive
/// returns of an anchor word in a fixed-point prefix.  Rank deficiency
/// enlarges the prefix 4x once; a residual doubles the anchor up to
/// kMaxAnchorDoublings times, enlarging the prefix as needed.
/// PreconditionError for patches outside the language or persistent rank deficiency.
ERPFit fit_erp_functional(const Substitution& s, const TileGeometry& g, const Integer& a0, const Word& p,
                          std::size_t sample_len);
ERPFit fit_erp_functional(const Substitution& s, const Word& p, std::size_t sample_len);

struct ERPReport {
    bool homological_pisot = false;
    std::vector<Rational> base_length;  ///< L in the power basis
    std::vector<ERPFit> fits;
    bool all_exact = false;  ///< every residual zero and every alpha in Z[1/a0]
    bool flag = false;       ///< exact failure on a homological Pisot input
    std::string verdict;
};

/// Patches are all letters, then allowed 2- and 3-letter words, truncated to
/// `num_patches` (0 keeps them all).
std::vector<Word> erp_patches(const Substitution& s, std::size_t num_patches);
ERPReport verify_erp(const Substitution& s, std::size_t num_patches, std::size_t sample_len);

}  // namespace hpisot

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hpisot/int_matrix.hpp"
#include "hpisot/substitution.hpp"

namespace hpisot {

/// sigma as 1-based images (sigma(1), sigma(2), sigma(3)).
using Permutation = std::array<unsigned, 3>;

/// Cover transitions are X_i Y_{sigma_XY(i)}.
struct PermutationAssignment {
    std::map<Transition, Permutation> sigma;
    /// ValidationError when (x, y) has no permutation.
    [[nodiscard]] const Permutation& at(Letter x, Letter y, const Substitution& base) const;
};

/// sigma_XA = (3 2 1), sigma_XB = (2 1 3), identity into every other letter,
/// on all transitions of the base.  Requires letters named A and B.
PermutationAssignment standard_assignment(const Substitution& base);

struct CoverSpec {
    Substitution base;
    PermutationAssignment assignment;
};

/// {"base": substitution document, "permutations": {"XY": [s1, s2, s3], ...}};
/// without "permutations" the standard assignment is used.
CoverSpec cover_spec_from_json(const nlohmann::json& doc);
CoverSpec parse_cover_spec(std::string_view text);
nlohmann::ordered_json to_json(const CoverSpec& spec);

/// Cover letter for (x, i) is 3x + i - 1, named lowercase(name(x)) + i.
inline Letter cover_letter(Letter x, unsigned i) { return 3 * x + (i - 1); }
std::vector<std::string> cover_names(const Substitution& base);

/// Lift of w starting at index `start` in {1, 2, 3}.
Word lift_word(const Word& w, unsigned start, const Substitution& base, const PermutationAssignment& a);

enum class CoverMode { Strict, Record };

struct CoverResult {
    Substitution base;
    PermutationAssignment assignment;
    Substitution cover;
    /// Record mode: rules whose lift does not end at a_i, as "x_i: <lift>".
    std::vector<std::string> anchor_violations;
};

/// phi_2(x_i) = lift of phi_1(x) from i.  Strict mode throws ValidationError
/// when a lift does not end at a_i; Record mode keeps it for validation.
CoverResult build_triple_cover(const CoverSpec& spec, CoverMode mode = CoverMode::Strict);

struct CoverValidation {
    bool prefix_suffix = false;  ///< (1) phi_2(x_i) begins with x_i, ends with a_i
    std::string prefix_suffix_failure;
    bool disjoint_lifts = false;  ///< (2) lifts disagree everywhere and are exactly the cover language
    std::string disjoint_failure;
    std::size_t max_word_length = 0;
    std::size_t words_checked = 0;
    bool cohomology_preserved = false;  ///< (3) equal dim H^1 and 3 components
    std::size_t dim_base = 0;
    std::size_t dim_cover = 0;
    std::size_t components = 0;
    bool cr_ok = false;  ///< (4)
    std::optional<std::size_t> cr;  ///< exact, constant-length covers only
    std::string cr_note;
    [[nodiscard]] bool all_pass() const { return prefix_suffix && disjoint_lifts && cohomology_preserved && cr_ok; }
};

CoverValidation validate_cover(const CoverResult& r, std::size_t max_word_length = 12);

/// (V B^b W A^a Y)^3 with b, a odd; V, W, Y avoid A and B.
Word make_padding(const Word& v, const Word& w, const Word& y, std::size_t b, std::size_t a, Letter A, Letter B);

struct Example4 {
    IntMatrix m0;
    unsigned k = 0;
    IntMatrix m1;  ///< 3 M0^k
    Substitution base;
    CoverResult cover;
    CoverValidation validation;
    IntMatrix m2;
    std::size_t rank_m2 = 0;
    std::size_t kernel_dim = 0;     ///< expected >= 2d - 2
    bool charpoly_divides = false;  ///< char poly of M1 divides that of M2
    bool block_structure = false;   ///< non-{A,B} blocks are multiples of J
    bool padding_balanced = false;  ///< each padding block has equal x_1, x_2, x_3 populations
    bool dim_equals_d = false;
};

inline constexpr unsigned kExample4MaxK = 64;

/// Realizes M1 = 3 M0^k on letters A, B, C, ... with greedy padding and builds
/// the standard triple cover.  k is searched when absent.  PreconditionError
/// when no valid k exists or the padding cannot meet M1's columns.
Example4 example4_generator(const IntMatrix& m0, std::optional<unsigned> k = std::nullopt);

}  // namespace hpisot

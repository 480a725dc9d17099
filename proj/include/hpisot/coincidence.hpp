#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpisot/cohomology.hpp"
#include "hpisot/pisot.hpp"
#include "hpisot/substitution.hpp"

namespace hpisot {

/// Letter -> letter map; column k of phi^n sends a to phi^n(a)_k.
using Column = std::vector<Letter>;

/// Unit-length rewriting of a d = 1 substitution.  Letter (a, i) stands for
/// the i-th unit piece of tile a; `provenance` records (a, i) per new letter.
struct ConstantLengthForm {
    Substitution unit;
    std::size_t length = 0;  ///< N, the dilatation
    std::vector<std::pair<Letter, std::size_t>> provenance;
    std::vector<Integer> tile_lengths;  ///< integer left PF eigenvector, gcd 1
};

/// PreconditionError unless the dilatation is an integer (d = 1).
ConstantLengthForm to_constant_length(const Substitution& s);

struct ColumnSemigroup {
    std::vector<Column> generators;
    /// Closure in breadth-first order: every element is reached by a shortest
    /// generator word, and words[i] lists its columns k_1, ..., k_n, so that
    /// elements[i] = f_{k_n} o ... o f_{k_1} is column sum k_i N^{n-i} of phi^n.
    std::vector<Column> elements;
    std::vector<std::vector<std::size_t>> words;
};

inline constexpr std::size_t kSemigroupCap = 2'000'000;

/// PreconditionError unless s has constant length.
ColumnSemigroup column_semigroup(const Substitution& s, std::size_t cap = kSemigroupCap);

struct CoincidenceReport {
    std::size_t cr = 0;
    std::size_t semigroup_size = 0;
    Column witness;                           ///< first element of minimal image size
    std::vector<std::size_t> witness_word;    ///< its columns k_1..k_n
    std::vector<Letter> stable_tuple;         ///< image of the witness, ascending
    std::vector<std::pair<Letter, Letter>> eventually_coincident;  ///< a < b
    std::vector<std::vector<Letter>> strong_classes;              ///< ascending, by first member
};

CoincidenceReport coincidence_rank(const Substitution& s);

/// Classes of the transitive closure of strong coincidence.  InternalError
/// when a class contains a pair that is not itself strongly coincident.
std::vector<std::vector<Letter>> strongly_coincident_classes(const Substitution& s, const ColumnSemigroup& g);
std::vector<std::vector<Letter>> strongly_coincident_classes(const Substitution& s);

/// Identifies strongly coincident letters; each class keeps the name of its
/// first member.  PreconditionError when the rules are not class-compatible.
Substitution quotient_substitution(const Substitution& s);

struct PureCore {
    Substitution unit;  ///< constant-length input
    std::size_t height = 1;
    Substitution core;
    std::size_t prefix_length = 0;  ///< fixed-point prefix used for the height
    std::vector<Word> blocks;       ///< h-blocks naming the core letters
};

/// Height from return positions of u_0 in a fixed-point prefix of length
/// max(10^4, N^4); the core regroups aligned h-blocks.
PureCore pure_core(const Substitution& s);

enum class Verdict { Pass, Fail, NotApplicable, Flag };
std::string to_string(Verdict v);

struct CrcVerdict {
    Verdict crc = Verdict::NotApplicable;
    /// cr != 2 for d = 1 homological Pisot: Pass, Flag if violated, NotApplicable (vacuous) otherwise.
    Verdict thm13 = Verdict::NotApplicable;
    std::optional<std::size_t> cr;
    std::string note;
};

/// Coincidence rank conjecture check for d = 1 homological Pisot inputs.
CrcVerdict crc_check(const Substitution& s, const HomologicalPisot& hp);
CrcVerdict crc_check(const Substitution& s);

enum class Periodicity { Aperiodic, Periodic, Unknown };
std::string to_string(Periodicity p);

struct AperiodicityResult {
    Periodicity verdict = Periodicity::Unknown;
    std::string evidence;
};

/// d >= 2: aperiodic.  d = 1: bounded heuristic on a fixed-point prefix.
AperiodicityResult aperiodicity_check(const Substitution& s, const PisotReport& pisot);
AperiodicityResult aperiodicity_check(const Substitution& s);

}  // namespace hpisot

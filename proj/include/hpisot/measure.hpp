#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpisot/coincidence.hpp"
#include "hpisot/regularity.hpp"

namespace hpisot {

/// d-vector r with C r = lambda r and (1, lambda, ..., lambda^{d-1}) r = 1,
/// C the companion matrix with last column -a_0, ..., -a_{d-1}.
std::vector<FieldElement> companion_limit_vector(const FieldPtr& field);

/// Induced substitution on allowed ell-words: w maps to the |phi(w_1)|
/// consecutive ell-windows of phi(w) starting at offset 0.
struct CollaredSubstitution {
    std::size_t ell = 1;
    std::vector<Word> alphabet;  ///< words_of_length(base, ell), sorted
    Substitution collared;       ///< letter i stands for alphabet[i]
    IntMatrix abelianization;
};

CollaredSubstitution collar(const Substitution& s, std::size_t ell);

/// Occurrences per unit length of each collared letter; transient letters
/// get 0.  Normalized so that sum_w freq(w) * omega(w_1) = 1.
std::vector<FieldElement> frequencies(const CollaredSubstitution& c, const TileGeometry& g, const FieldElement& lambda);

/// Exact word frequencies with memoization.  Words of length <= 2 come from
/// the collared eigenvector; longer words from a power phi^m whose rules all
/// have length >= 2, via freq(Q) = lambda^-m sum_U freq(U) #{j < |phi^m(U_1)| : Q at j in phi^m(U)}.
class WordFrequencies {
public:
    WordFrequencies(const Substitution& s, const PisotReport& pisot, const TileGeometry& g);
    [[nodiscard]] FieldElement operator()(const Word& w);
    [[nodiscard]] const TileGeometry& geometry() const { return g_; }
    [[nodiscard]] const Substitution& substitution() const { return s_; }
    /// Allowed words of length `len`, cached.
    const std::vector<Word>& words(std::size_t len);

private:
    Substitution s_;
    Substitution power_;
    FieldElement inv_lambda_power_;
    TileGeometry g_;
    std::map<Word, FieldElement> memo_;
    std::map<std::size_t, std::vector<Word>> words_;
};

struct CylinderMeasure {
    Word patch;
    FieldElement value;
    /// value = q(lambda) / (a0^k p'(lambda)); k minimal in [0, 64].
    IntPolynomial q;
    unsigned k = 0;
    bool q_integer = false;  ///< false is a FLAG
    std::optional<Rational> rational;
};

inline constexpr unsigned kMaxCanonicalK = 64;

/// value * p'(lambda) * a0^k with the smallest k making it integral.
CylinderMeasure canonical_form(Word patch, const FieldElement& value, const PisotReport& pisot);

/// Cylinder of tilings whose origin lies inside a p patch, as the disjoint
/// union over (2|p|+1)-words Q whose centre tile is covered by an occurrence
/// of p in Q: sum freq(Q) * omega(Q centre).
/// The tile and return lattices must agree: automatic for constant-length
/// inputs of height 1, otherwise `assert_lattices_equal` must be set.
CylinderMeasure cylinder_measure(const Substitution& s, const Word& p, bool assert_lattices_equal = false);
CylinderMeasure cylinder_measure(WordFrequencies& freq, const PisotReport& pisot, const Word& p);

/// Some power has all images starting with one letter and ending with one letter.
bool has_proper_power(const Substitution& s);

/// PreconditionError unless the lattices are known or asserted equal: a
/// proper power, a constant-length input of height 1, or the caller's assertion.
void require_lattice_hypothesis(const Substitution& s, bool assert_lattices_equal);

struct RationalityVerdict {
    Verdict thm10 = Verdict::NotApplicable;          ///< m | a0^k gcd(p')
    Verdict rational_measure = Verdict::NotApplicable;  ///< m | d a0^k
};

RationalityVerdict rationality_divisibility_check(const std::optional<Rational>& value, const PisotReport& pisot);
inline RationalityVerdict rationality_divisibility_check(const CylinderMeasure& m, const PisotReport& pisot) {
    return rationality_divisibility_check(m.rational, pisot);
}

struct WitnessBlock {
    Letter image = 0;             ///< b_j
    std::vector<Letter> letters;  ///< B_j, ascending
    FieldElement measure;
};

struct MeasureWitness {
    std::size_t cr = 0;
    std::vector<std::size_t> witness_word;  ///< columns k_1..k_n of the witness
    std::vector<WitnessBlock> blocks;
    bool all_equal_inverse_cr = false;
    bool in_hypothesis = false;  ///< homological Pisot with no strongly coincident pairs
    RationalityVerdict verdicts;  ///< for the measure 1/cr
};

/// Letter sets B_j = {a : f(a) = b_j} for a minimal-image column f, with the
/// exact total measure of each.
MeasureWitness measure_fraction_witness(const Substitution& s);

}  // namespace hpisot

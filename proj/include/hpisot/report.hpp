#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hpisot/cover.hpp"
#include "hpisot/measure.hpp"

namespace hpisot {

/// Reports keep insertion order so repeated runs serialize byte-identically.
using Json = nlohmann::ordered_json;

/// Exact values are strings: "p" or "p/q".
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const IntPolynomial& p);
Json to_json(const IntMatrix& m);
/// {"coords": [...power basis...], "approx": "%.15g"}.
Json to_json(const FieldElement& x);
Json to_json(const Factorization& f);
std::string format_double(double x);

Json to_json(const PisotReport& p, unsigned precision_bits);
Json to_json(const CohomologyReport& c);
Json to_json(const CoincidenceReport& c, const Substitution& s);
Json to_json(const CrcVerdict& v);
Json to_json(const ERPReport& e, const Substitution& s);
Json to_json(const CylinderMeasure& m, const Substitution& s, const PisotReport& pisot);
Json to_json(const MeasureWitness& w, const Substitution& s);
Json to_json(const CoverValidation& v);
Json to_json(const CoverResult& r, const CoverValidation& v);
Json to_json(const Example4& ex);

/// Rational eigenvalues with multiplicity, descending, when the
/// characteristic polynomial splits over Q.
std::optional<std::vector<Rational>> rational_eigenvalues(const Factorization& f);

struct AnalysisOptions {
    std::size_t max_word_length = 1;  ///< measures for all allowed words up to this length
    bool assert_lattices_equal = false;
    std::size_t erp_patches = 0;  ///< 0: every allowed word of length <= 3
    std::size_t sample_len = 10'000;
    unsigned precision_bits = 64;
};

/// Full pipeline.  PreconditionError for non-primitive input; analyses that
/// do not apply appear under "skipped" with a reason.
Json analyze(const Substitution& s, const AnalysisOptions& opt);

/// Coincidence data for d = 1 inputs, rewritten to constant length when needed.
Json coincidence_report(const Substitution& s);

/// Cylinder measures of the given patches with rationality verdicts.
Json measure_report(const Substitution& s, const std::vector<Word>& patches, bool assert_lattices_equal,
                    unsigned precision_bits);

}  // namespace hpisot

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hpisot/int_matrix.hpp"

namespace hpisot {

/// Letters are indices into the alphabet; names exist only at the I/O boundary.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using Transition = std::pair<Letter, Letter>;

inline constexpr std::size_t kDefaultWordCap = 10'000'000;

/// A substitution rule set on a finite alphabet.  Immutable once built; the
/// constructor rejects unknown letters, empty rules and duplicate names.
class Substitution {
public:
    Substitution(std::vector<std::string> names, std::vector<Word> rules);

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] const std::string& name(Letter a) const { return names_.at(a); }
    [[nodiscard]] const std::vector<Word>& rules() const { return rules_; }
    [[nodiscard]] const Word& rule(Letter a) const { return rules_.at(a); }
    [[nodiscard]] std::optional<Letter> find(std::string_view name) const;

    [[nodiscard]] std::size_t max_rule_length() const;
    [[nodiscard]] std::size_t min_rule_length() const;
    /// N when every rule has length N.
    [[nodiscard]] std::optional<std::size_t> constant_length() const;
    /// True when every letter name is a single byte, so words print without separators.
    [[nodiscard]] bool compact_names() const;

    /// phi(w), letterwise concatenation; throws ResourceError beyond `cap`.
    [[nodiscard]] Word apply(std::span<const Letter> w, std::size_t cap = kDefaultWordCap) const;
    [[nodiscard]] Substitution power(unsigned n) const;

    [[nodiscard]] std::string format(std::span<const Letter> w) const;
    /// Inverse of format(): compact alphabets read one byte per letter,
    /// otherwise names are separated by spaces or commas.
    [[nodiscard]] Word parse_word(std::string_view text) const;

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    std::vector<std::string> names_;
    std::vector<Word> rules_;
};

/// Parses the JSON substitution document
/// {"alphabet": [names...], "rules": {name: "word" | [names...]}}.
Substitution parse_substitution(std::string_view text);
Substitution substitution_from_json(const nlohmann::json& doc);
/// Canonical document: keys in alphabet order, string rules when names are
/// single characters and array rules otherwise.
nlohmann::ordered_json to_json(const Substitution& s);
std::string serialize(const Substitution& s);

/// Entry (i, j) counts letter i in rule j.
IntMatrix abelianization(const Substitution& s);

struct Primitivity {
    bool primitive = false;
    std::optional<unsigned> witness;  ///< least m with A^m > 0
};

/// Searches m up to the Wielandt bound n^2 - 2n + 2.
Primitivity is_primitive(const Substitution& s);

/// phi^n(a).
Word iterate(const Substitution& s, Letter a, unsigned n, std::size_t cap = kDefaultWordCap);

/// All allowed words of length 1..maxlen.
std::set<Word> language(const Substitution& s, std::size_t maxlen, std::size_t cap = kDefaultWordCap);
/// Allowed words of length exactly `len`, in lexicographic letter order.
std::vector<Word> words_of_length(const Substitution& s, std::size_t len);

/// Allowed two-letter words as ordered pairs, sorted.
std::vector<Transition> transitions(const Substitution& s);

struct FixedPoint {
    Letter seed = 0;     ///< first letter of the one-sided fixed word
    unsigned power = 1;  ///< p with phi^p(seed) starting with seed
    Word prefix;
};

/// Length-len prefix of the one-sided fixed word of phi^p grown from `a`,
/// where p is the period of `a` under "first letter of the image".  Throws
/// PreconditionError when `a` is not on such a cycle.
Word fixed_point_prefix(const Substitution& s, Letter a, std::size_t len, std::size_t cap = kDefaultWordCap);
/// Same, seeded by the first letter (alphabet order) that lies on a cycle.
FixedPoint fixed_point(const Substitution& s, std::size_t len, std::size_t cap = kDefaultWordCap);

}  // namespace hpisot

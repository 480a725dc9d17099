#include "hpisot/substitution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "hpisot/error.hpp"

namespace hpisot {

Substitution::Substitution(std::vector<std::string> names, std::vector<Word> rules)
    : names_(std::move(names)), rules_(std::move(rules)) {
    if (names_.empty()) throw ValidationError("alphabet is empty");
    if (rules_.size() != names_.size())
        throw ValidationError("expected one rule per letter, got " + std::to_string(rules_.size()) + " rules for " +
                              std::to_string(names_.size()) + " letters");
    std::set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw ValidationError("empty letter name");
        if (!seen.insert(n).second) throw ValidationError("duplicate letter name '" + n + "'");
    }
    for (std::size_t a = 0; a < rules_.size(); ++a) {
        if (rules_[a].empty()) throw ValidationError("rule for '" + names_[a] + "' is empty");
        for (Letter b : rules_[a])
            if (b >= names_.size())
                throw ValidationError("rule for '" + names_[a] + "' references letter index " + std::to_string(b));
    }
}

std::optional<Letter> Substitution::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Letter>(i);
    return std::nullopt;
}

std::size_t Substitution::max_rule_length() const {
    std::size_t m = 0;
    for (const auto& r : rules_) m = std::max(m, r.size());
    return m;
}

std::size_t Substitution::min_rule_length() const {
    std::size_t m = rules_.front().size();
    for (const auto& r : rules_) m = std::min(m, r.size());
    return m;
}

std::optional<std::size_t> Substitution::constant_length() const {
    const std::size_t n = rules_.front().size();
    for (const auto& r : rules_)
        if (r.size() != n) return std::nullopt;
    return n;
}

bool Substitution::compact_names() const {
    return std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
}

Word Substitution::apply(std::span<const Letter> w, std::size_t cap) const {
    std::size_t total = 0;
    for (Letter a : w) total += rules_[a].size();
    if (total > cap)
        throw ResourceError("substituted word would have " + std::to_string(total) + " letters (cap " +
                            std::to_string(cap) + ")");
    Word out;
    out.reserve(total);
    for (Letter a : w) out.insert(out.end(), rules_[a].begin(), rules_[a].end());
    return out;
}

Substitution Substitution::power(unsigned n) const {
    std::vector<Word> rules;
    rules.reserve(size());
    for (Letter a = 0; a < size(); ++a) rules.push_back(iterate(*this, a, n));
    return Substitution(names_, std::move(rules));
}

std::string Substitution::format(std::span<const Letter> w) const {
    std::string out;
    const bool compact = compact_names();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i) out += ' ';
        out += names_.at(w[i]);
    }
    return out;
}

Word Substitution::parse_word(std::string_view text) const {
    Word w;
    auto lookup = [&](std::string_view tok) {
        auto a = find(tok);
        if (!a) throw ParseError("unknown letter '" + std::string(tok) + "'");
        w.push_back(*a);
    };
    if (compact_names()) {
        for (char c : text) {
            if (c == ' ' || c == ',') continue;
            lookup(std::string_view(&c, 1));
        }
    } else {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
            std::size_t j = i;
            while (j < text.size() && text[j] != ' ' && text[j] != ',') ++j;
            if (j > i) lookup(text.substr(i, j - i));
            i = j;
        }
    }
    return w;
}

namespace {

Word rule_from_json(const nlohmann::json& value, const std::unordered_map<std::string, Letter>& index,
                    bool compact, const std::string& owner) {
    Word w;
    auto lookup = [&](const std::string& tok) {
        auto it = index.find(tok);
        if (it == index.end())
            throw ValidationError("rule for '" + owner + "' references unknown letter '" + tok + "'");
        w.push_back(it->second);
    };
    if (value.is_string()) {
        if (!compact)
            throw ParseError("rule for '" + owner + "' must use the array form (multi-character letter names)");
        for (char c : value.get<std::string>()) lookup(std::string(1, c));
    } else if (value.is_array()) {
        for (const auto& tok : value) {
            if (!tok.is_string()) throw ParseError("rule for '" + owner + "' contains a non-string entry");
            lookup(tok.get<std::string>());
        }
    } else {
        throw ParseError("rule for '" + owner + "' must be a string or an array of strings");
    }
    if (w.empty()) throw ValidationError("rule for '" + owner + "' is empty");
    return w;
}

}  // namespace

Substitution substitution_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("substitution document must be a JSON object");
    if (!doc.contains("alphabet") || !doc["alphabet"].is_array()) throw ParseError("missing array 'alphabet'");
    if (!doc.contains("rules") || !doc["rules"].is_object()) throw ParseError("missing object 'rules'");
    std::vector<std::string> names;
    std::unordered_map<std::string, Letter> index;
    for (const auto& n : doc["alphabet"]) {
        if (!n.is_string()) throw ParseError("alphabet entries must be strings");
        auto name = n.get<std::string>();
        if (!index.emplace(name, static_cast<Letter>(names.size())).second)
            throw ValidationError("duplicate letter name '" + name + "'");
        names.push_back(std::move(name));
    }
    if (names.empty()) throw ValidationError("alphabet is empty");
    const bool compact =
        std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });
    const auto& rules = doc["rules"];
    for (auto it = rules.begin(); it != rules.end(); ++it)
        if (!index.count(it.key())) throw ValidationError("rule given for unknown letter '" + it.key() + "'");
    std::vector<Word> words;
    for (const auto& name : names) {
        if (!rules.contains(name)) throw ValidationError("no rule for letter '" + name + "'");
        words.push_back(rule_from_json(rules[name], index, compact, name));
    }
    return Substitution(std::move(names), std::move(words));
}

Substitution parse_substitution(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return substitution_from_json(doc);
}

nlohmann::ordered_json to_json(const Substitution& s) {
    nlohmann::ordered_json doc;
    doc["alphabet"] = s.names();
    nlohmann::ordered_json rules = nlohmann::ordered_json::object();
    const bool compact = s.compact_names();
    for (Letter a = 0; a < s.size(); ++a) {
        if (compact) {
            rules[s.name(a)] = s.format(s.rule(a));
        } else {
            auto arr = nlohmann::ordered_json::array();
            for (Letter b : s.rule(a)) arr.push_back(s.name(b));
            rules[s.name(a)] = std::move(arr);
        }
    }
    doc["rules"] = std::move(rules);
    return doc;
}

std::string serialize(const Substitution& s) { return to_json(s).dump(2) + "\n"; }

IntMatrix abelianization(const Substitution& s) {
    IntMatrix m(s.size(), s.size());
    for (Letter j = 0; j < s.size(); ++j)
        for (Letter i : s.rule(j)) m(i, j) += 1;
    return m;
}

Primitivity is_primitive(const Substitution& s) {
    const std::size_t n = s.size();
    // Boolean pattern of A^m; positivity only depends on the zero pattern.
    std::vector<char> base(n * n, 0);
    for (Letter j = 0; j < n; ++j)
        for (Letter i : s.rule(j)) base[i * n + j] = 1;
    const unsigned bound = n <= 1 ? 1U : static_cast<unsigned>(n * n - 2 * n + 2);
    std::vector<char> cur = base;
    for (unsigned m = 1; m <= bound; ++m) {
        if (std::all_of(cur.begin(), cur.end(), [](char c) { return c != 0; })) return {true, m};
        std::vector<char> next(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (cur[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (base[k * n + j]) next[i * n + j] = 1;
        cur = std::move(next);
    }
    return {false, std::nullopt};
}

Word iterate(const Substitution& s, Letter a, unsigned n, std::size_t cap) {
    Word w{a};
    for (unsigned i = 0; i < n; ++i) w = s.apply(w, cap);
    return w;
}

std::set<Word> language(const Substitution& s, std::size_t maxlen, std::size_t cap) {
    if (maxlen == 0) return {};
    constexpr int kMaxRounds = 64;
    std::set<Word> words;
    std::vector<Word> frontier;
    for (Letter a = 0; a < s.size(); ++a) {
        words.insert(Word{a});
        frontier.push_back(Word{a});
    }
    // Every allowed word of length <= maxlen is a factor of phi(u) for an
    // allowed u of length <= maxlen, so closing under that step is exact.
    for (int round = 0; !frontier.empty(); ++round) {
        if (round >= kMaxRounds)
            throw ResourceError("language of length " + std::to_string(maxlen) + " did not stabilize within " +
                                std::to_string(kMaxRounds) + " rounds");
        std::vector<Word> next;
        for (const Word& u : frontier) {
            const Word img = s.apply(u, cap);
            for (std::size_t i = 0; i < img.size(); ++i) {
                for (std::size_t len = 1; len <= maxlen && i + len <= img.size(); ++len) {
                    Word f(img.begin() + static_cast<std::ptrdiff_t>(i),
                           img.begin() + static_cast<std::ptrdiff_t>(i + len));
                    if (words.insert(f).second) next.push_back(std::move(f));
                }
            }
        }
        frontier = std::move(next);
    }
    return words;
}

std::vector<Word> words_of_length(const Substitution& s, std::size_t len) {
    std::vector<Word> out;
    for (auto& w : language(s, len))
        if (w.size() == len) out.push_back(w);
    return out;
}

std::vector<Transition> transitions(const Substitution& s) {
    std::vector<Transition> out;
    for (const auto& w : words_of_length(s, 2)) out.emplace_back(w[0], w[1]);
    return out;
}

namespace {

std::optional<unsigned> first_letter_period(const Substitution& s, Letter a) {
    Letter x = a;
    for (unsigned p = 1; p <= s.size(); ++p) {
        x = s.rule(x).front();
        if (x == a) return p;
    }
    return std::nullopt;
}

Word grow_fixed_prefix(const Substitution& s, Letter a, unsigned p, std::size_t len, std::size_t cap) {
    if (len > cap)
        throw ResourceError("requested prefix of " + std::to_string(len) + " letters exceeds cap " +
                            std::to_string(cap));
    Word w{a};
    while (w.size() < len) {
        const std::size_t before = w.size();
        for (unsigned i = 0; i < p; ++i) {
            w = s.apply(w, std::max(cap, len) * std::max<std::size_t>(1, s.max_rule_length()));
            if (w.size() > len) w.resize(len);
        }
        if (w.size() == before)
            throw PreconditionError("fixed word seeded by '" + s.name(a) + "' does not grow");
    }
    w.resize(len);
    return w;
}

}  // namespace

Word fixed_point_prefix(const Substitution& s, Letter a, std::size_t len, std::size_t cap) {
    auto p = first_letter_period(s, a);
    if (!p) throw PreconditionError("no power of the substitution maps '" + s.name(a) + "' to a word beginning with it");
    return grow_fixed_prefix(s, a, *p, len, cap);
}

FixedPoint fixed_point(const Substitution& s, std::size_t len, std::size_t cap) {
    for (Letter a = 0; a < s.size(); ++a) {
        if (auto p = first_letter_period(s, a)) return {a, *p, grow_fixed_prefix(s, a, *p, len, cap)};
    }
    throw InternalError("first-letter map has no cycle");
}

}  // namespace hpisot

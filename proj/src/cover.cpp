#include "hpisot/cover.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hpisot/cohomology.hpp"
#include "hpisot/coincidence.hpp"
#include "hpisot/pisot.hpp"
#include "hpisot/roots.hpp"
#include "hpisot/error.hpp"
#include "hpisot/linalg.hpp"

namespace hpisot {

namespace {

constexpr Permutation kIdentity{1, 2, 3};
constexpr Permutation kIntoA{3, 2, 1};
constexpr Permutation kIntoB{2, 1, 3};

bool is_bijection(const Permutation& p) {
    std::array<bool, 3> seen{};
    for (unsigned v : p) {
        if (v < 1 || v > 3 || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

std::string transition_name(const Substitution& base, Letter x, Letter y) {
    return base.compact_names() ? base.name(x) + base.name(y) : base.name(x) + " " + base.name(y);
}

Letter require_letter(const Substitution& base, std::string_view name) {
    auto x = base.find(name);
    if (!x) throw ValidationError("the standard assignment needs a letter named '" + std::string(name) + "'");
    return *x;
}

}  // namespace

const Permutation& PermutationAssignment::at(Letter x, Letter y, const Substitution& base) const {
    auto it = sigma.find({x, y});
    if (it == sigma.end()) throw ValidationError("no permutation for transition " + transition_name(base, x, y));
    return it->second;
}

PermutationAssignment standard_assignment(const Substitution& base) {
    const Letter a = require_letter(base, "A"), b = require_letter(base, "B");
    PermutationAssignment out;
    for (const auto& [x, y] : transitions(base)) out.sigma[{x, y}] = y == a ? kIntoA : y == b ? kIntoB : kIdentity;
    return out;
}

CoverSpec cover_spec_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("base")) throw ParseError("cover spec needs an object with 'base'");
    Substitution base = substitution_from_json(doc["base"]);
    if (!doc.contains("permutations")) return {base, standard_assignment(base)};
    const auto& perms = doc["permutations"];
    if (!perms.is_object()) throw ParseError("'permutations' must be an object");
    PermutationAssignment a;
    for (auto it = perms.begin(); it != perms.end(); ++it) {
        Word w = base.parse_word(it.key());
        if (w.size() != 2) throw ValidationError("permutation key '" + it.key() + "' is not a two-letter word");
        if (!it->is_array() || it->size() != 3) throw ParseError("permutation for '" + it.key() + "' needs 3 entries");
        Permutation p{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (!(*it)[i].is_number_unsigned()) throw ParseError("permutation entries must be 1, 2 or 3");
            p[i] = (*it)[i].get<unsigned>();
        }
        if (!is_bijection(p)) throw ValidationError("permutation for '" + it.key() + "' is not a bijection of {1,2,3}");
        a.sigma[{w[0], w[1]}] = p;
    }
    for (const auto& [x, y] : transitions(base)) (void)a.at(x, y, base);
    return {base, a};
}

CoverSpec parse_cover_spec(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return cover_spec_from_json(doc);
}

nlohmann::ordered_json to_json(const CoverSpec& spec) {
    nlohmann::ordered_json doc;
    doc["base"] = to_json(spec.base);
    nlohmann::ordered_json perms = nlohmann::ordered_json::object();
    for (const auto& [t, p] : spec.assignment.sigma) perms[transition_name(spec.base, t.first, t.second)] = p;
    doc["permutations"] = std::move(perms);
    return doc;
}

std::vector<std::string> cover_names(const Substitution& base) {
    std::vector<std::string> out;
    for (const auto& n : base.names()) {
        std::string lower = n;
        for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        for (unsigned i = 1; i <= 3; ++i) out.push_back(lower + std::to_string(i));
    }
    return out;
}

Word lift_word(const Word& w, unsigned start, const Substitution& base, const PermutationAssignment& a) {
    if (start < 1 || start > 3) throw PreconditionError("lift start index must be 1, 2 or 3");
    Word out;
    unsigned i = start;
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (t > 0) i = a.at(w[t - 1], w[t], base)[i - 1];
        out.push_back(cover_letter(w[t], i));
    }
    return out;
}

CoverResult build_triple_cover(const CoverSpec& spec, CoverMode mode) {
    const Substitution& base = spec.base;
    std::vector<std::string> names = cover_names(base);
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) throw ValidationError("cover letter names collide");
    std::vector<Word> rules;
    std::vector<std::string> violations;
    std::optional<Letter> a = base.find("A");
    for (Letter x = 0; x < base.size(); ++x)
        for (unsigned i = 1; i <= 3; ++i) {
            Word lift = lift_word(base.rule(x), i, base, spec.assignment);
            // The anchor is a_i, or x_i itself for bases without a letter A.
            const Letter want = cover_letter(a.value_or(x), i);
            if (lift.back() != want) violations.push_back(names[cover_letter(x, i)] + ": ends with " + names[lift.back()]);
            rules.push_back(std::move(lift));
        }
    if (mode == CoverMode::Strict && !violations.empty())
        throw ValidationError("lift does not end at the anchor letter (" + violations.front() + ")");
    Substitution cover(std::move(names), std::move(rules));
    return {base, spec.assignment, std::move(cover), std::move(violations)};
}

CoverValidation validate_cover(const CoverResult& r, std::size_t max_word_length) {
    CoverValidation v;
    const Substitution& base = r.base;
    const Substitution& cover = r.cover;
    const std::optional<Letter> a = base.find("A");

    v.prefix_suffix = true;
    for (Letter x = 0; x < base.size() && v.prefix_suffix; ++x)
        for (unsigned i = 1; i <= 3 && v.prefix_suffix; ++i) {
            const Letter xi = cover_letter(x, i);
            const Word& rule = cover.rule(xi);
            if (rule.front() != xi || rule.back() != cover_letter(a.value_or(x), i)) {
                v.prefix_suffix = false;
                v.prefix_suffix_failure = cover.name(xi) + " -> " + cover.format(rule);
            }
        }

    v.max_word_length = max_word_length;
    v.disjoint_lifts = true;
    std::set<Word> lifts;
    try {
        for (const auto& w : language(base, max_word_length)) {
            ++v.words_checked;
            std::array<Word, 3> l{lift_word(w, 1, base, r.assignment), lift_word(w, 2, base, r.assignment),
                                  lift_word(w, 3, base, r.assignment)};
            for (std::size_t t = 0; t < w.size() && v.disjoint_lifts; ++t)
                if (l[0][t] == l[1][t] || l[0][t] == l[2][t] || l[1][t] == l[2][t]) {
                    v.disjoint_lifts = false;
                    v.disjoint_failure = "lifts of " + base.format(w) + " agree at position " + std::to_string(t);
                }
            lifts.insert(l.begin(), l.end());
        }
        if (v.disjoint_lifts) {
            std::set<Word> lang = language(cover, max_word_length);
            if (lang != lifts) {
                v.disjoint_lifts = false;
                std::vector<Word> diff;
                std::set_symmetric_difference(lang.begin(), lang.end(), lifts.begin(), lifts.end(),
                                              std::back_inserter(diff));
                v.disjoint_failure = "cover language differs from the lifts at " + cover.format(diff.front());
            }
        }
    } catch (const ValidationError& e) {
        v.disjoint_lifts = false;
        v.disjoint_failure = e.what();
    }

    try {
        auto hb = cech_h1_dimension(base);
        auto hc = cech_h1_dimension(cover);
        v.dim_base = hb.dim_h1;
        v.dim_cover = hc.dim_h1;
        v.components = hc.components;
        v.cohomology_preserved = v.dim_base == v.dim_cover && v.components == 3;
    } catch (const Error&) {
        v.cohomology_preserved = false;  // e.g. a non-primitive cover
    }

    if (cover.constant_length().value_or(0) >= 2) {
        try {
            v.cr = coincidence_rank(cover).cr;
            v.cr_ok = v.cr == 3U;
            v.cr_note = "cr = " + std::to_string(*v.cr) + " from the column semigroup";
        } catch (const Error& e) {
            v.cr_note = std::string("cr unavailable: ") + e.what();
        }
    } else {
        v.cr_ok = v.disjoint_lifts;
        v.cr_note = v.cr_ok ? "cr >= 3 certified via disjoint lifts; exact value out of scope"
                            : "disjoint lifts failed; no bound on cr";
    }
    return v;
}

Word make_padding(const Word& v, const Word& w, const Word& y, std::size_t b, std::size_t a, Letter A, Letter B) {
    if (b % 2 == 0 || a % 2 == 0) throw PreconditionError("padding needs odd runs of B and A");
    for (const Word* part : {&v, &w, &y})
        for (Letter x : *part)
            if (x == A || x == B) throw PreconditionError("padding words V, W, Y must avoid A and B");
    Word block(v);
    block.insert(block.end(), b, B);
    block.insert(block.end(), w.begin(), w.end());
    block.insert(block.end(), a, A);
    block.insert(block.end(), y.begin(), y.end());
    Word out;
    for (int r = 0; r < 3; ++r) out.insert(out.end(), block.begin(), block.end());
    return out;
}

namespace {

bool is_identity_mod2(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer r = m(i, j) - (i == j ? 1 : 0);
            if (!mpz_even_p(r.get_mpz_t())) return false;
        }
    return true;
}

bool small_conjugates(const IntMatrix& p) {
    try {
        return count_roots_below(char_poly(p), Rational(1, 3)) == static_cast<int>(p.rows()) - 1;
    } catch (const PrecisionError&) {
        return false;  // a root on the circle |z| = 1/3
    }
}

std::size_t to_size(const Integer& x) {
    if (x < 0 || !x.fits_ulong_p()) throw PreconditionError("letter count out of range");
    return x.get_ui();
}

}  // namespace

Example4 example4_generator(const IntMatrix& m0, std::optional<unsigned> k_opt) {
    const std::size_t d = m0.rows();
    if (d == 0 || d != m0.cols() || d > 26) throw PreconditionError("M0 must be square with 1 to 26 rows");
    if (!mpz_odd_p(m0.determinant().get_mpz_t())) throw PreconditionError("M0 must have odd determinant");
    if (!m0.pow(static_cast<unsigned>(d * d)).all_positive()) throw PreconditionError("M0 must be primitive");
    if (d >= 2 && !pisot_report(m0).is_pisot) throw PreconditionError("M0 must be a Pisot matrix");

    unsigned k_found = 0;
    auto valid = [&](unsigned k) {
        IntMatrix p = m0.pow(k);
        return is_identity_mod2(p) && small_conjugates(p);
    };
    if (k_opt) {
        if (!valid(*k_opt))
            throw PreconditionError("k = " + std::to_string(*k_opt) +
                                    " fails M0^k = I mod 2 or the 1/3 bound on the other eigenvalues");
        k_found = *k_opt;
    } else {
        for (unsigned k = 1; k <= kExample4MaxK && k_found == 0; ++k)
            if (valid(k)) k_found = k;
        if (k_found == 0) throw PreconditionError("no valid k up to " + std::to_string(kExample4MaxK));
    }
    IntMatrix mk = m0.pow(k_found);
    IntMatrix m1 = mk;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m1(i, j) = 3 * mk(i, j);

    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) names.emplace_back(1, static_cast<char>('A' + i));
    std::vector<Word> rules(d);
    std::vector<Word> padding_blocks;
    const Letter A = 0, B = 1;
    if (d == 1) {
        rules[0] = Word(to_size(m1(0, 0)), A);
    } else {
        const Word core_a{A, B, A, B, A, A, A, B, A}, core_b{B, A, A, A, B, A, A, B, A};
        for (Letter j = 0; j < d; ++j) {
            Word rule = j == A ? core_a : j == B ? core_b : Word{};
            // Residual counts per letter, in units of 3 (one unit per block copy).
            std::vector<Integer> need(d);
            for (Letter i = 0; i < d; ++i) {
                Integer have = static_cast<long>(std::count(rule.begin(), rule.end(), i));
                Integer r = m1(i, j) - have;
                if (r < 0 || !mpz_divisible_ui_p(r.get_mpz_t(), 3))
                    throw PreconditionError("padding infeasible for column " + names[j] + ": letter " + names[i] +
                                            " residual " + r.get_str());
                need[i] = r / 3;
            }
            // Each block holds odd runs of A and B, so the block count m has the
            // parity of need[A] and need[B].  The lift closes up at a_i only for
            // m odd in column A and m even elsewhere; other columns start with
            // their own letter, so they need m >= 2.
            const bool need_any = j != A && j != B;
            const bool odd = mpz_odd_p(need[A].get_mpz_t()) != 0;
            bool extra = false;
            for (Letter i = 2; i < d; ++i) extra = extra || need[i] > 0;
            const std::size_t blocks = j == A ? 1 : (need_any || extra || need[A] > 0 || need[B] > 0) ? 2 : 0;
            if (odd != (j == A) || odd != (mpz_odd_p(need[B].get_mpz_t()) != 0) || need[A] < blocks ||
                need[B] < blocks || (need_any && need[j] < 1))
                throw PreconditionError("padding infeasible for column " + names[j] + ": A needs " +
                                        need[A].get_str() + ", B needs " + need[B].get_str() + " in " +
                                        std::to_string(blocks) + " odd runs");
            for (std::size_t blk = 0; blk < blocks; ++blk) {
                Word v;
                if (blk == 0) {
                    if (need_any) v.push_back(j);
                    for (Letter i = 2; i < d; ++i) {
                        std::size_t extra = to_size(need[i]) - (need_any && i == j ? 1 : 0);
                        v.insert(v.end(), extra, i);
                    }
                }
                const bool last = blk + 1 == blocks;
                const std::size_t b = last ? to_size(need[B]) - (blocks - 1) : 1;
                const std::size_t a = last ? to_size(need[A]) - (blocks - 1) : 1;
                Word block = make_padding(v, {}, {}, b, a, A, B);
                padding_blocks.push_back(block);
                rule.insert(rule.end(), block.begin(), block.end());
            }
            rules[j] = std::move(rule);
        }
    }
    Substitution base(names, rules);
    if (!(abelianization(base) == m1)) throw InternalError("realized substitution misses M1");

    PermutationAssignment assignment;
    for (const auto& [x, y] : transitions(base))
        assignment.sigma[{x, y}] = y == A ? kIntoA : (d >= 2 && y == B) ? kIntoB : kIdentity;

    Example4 ex{.m0 = m0, .k = k_found, .m1 = m1, .base = base, .cover = build_triple_cover({base, assignment}),
                 .validation = {}, .m2 = {}};
    ex.validation = validate_cover(ex.cover);

    ex.m2 = abelianization(ex.cover.cover);
    ex.rank_m2 = ex.m2.rank();
    ex.kernel_dim = 3 * d - ex.rank_m2;
    ex.charpoly_divides = char_poly(ex.m2).divide_exact(char_poly(ex.m1)).has_value();
    ex.block_structure = true;
    for (std::size_t bi = 0; bi < d; ++bi)
        for (std::size_t bj = 0; bj < d; ++bj) {
            if (bi <= B && bj <= B && d >= 2) continue;
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c)
                    if (ex.m2(3 * bi + r, 3 * bj + c) != ex.m2(3 * bi, 3 * bj)) ex.block_structure = false;
        }
    ex.padding_balanced = true;
    for (const auto& block : padding_blocks) {
        // Populations of the lift from index 1, entered from an A.
        Word entered{A};
        entered.insert(entered.end(), block.begin(), block.end());
        Word lift = lift_word(entered, 1, ex.base, assignment);
        std::array<std::size_t, 3> pop{};
        for (std::size_t t = 1; t < lift.size(); ++t) ++pop[lift[t] % 3];
        if (pop[0] != pop[1] || pop[1] != pop[2] || lift.back() != cover_letter(A, 1)) ex.padding_balanced = false;
    }
    try {
        ex.dim_equals_d = cech_h1_dimension(ex.cover.cover).dim_h1 == d;
    } catch (const Error&) {
        ex.dim_equals_d = false;  // the d = 1 cover splits into separate pieces
    }
    return ex;
}

}  // namespace hpisot

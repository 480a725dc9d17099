#include "hpisot/coincidence.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hpisot/error.hpp"
#include "hpisot/linalg.hpp"

namespace hpisot {

ConstantLengthForm to_constant_length(const Substitution& s) {
    PisotReport pr = minimal_polynomial_of_dilatation(s);
    if (pr.degree != 1) throw PreconditionError("constant-length form needs an integer dilatation (d = 1)");
    const Integer n_big = -pr.min_poly.coeff(0);
    if (!n_big.fits_ulong_p()) throw ResourceError("dilatation too large for a constant-length rewrite");
    const std::size_t n = s.size();
    const IntMatrix a = abelianization(s);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(j, i)) - (i == j ? Rational(n_big) : Rational(0));
    auto kernel = kernel_basis(m, n, Rational(0), Rational(1));
    if (kernel.size() != 1) throw InternalError("Perron-Frobenius eigenspace is not one-dimensional");
    // Clear denominators, divide by the gcd, make positive.
    Integer l = 1;
    for (const auto& q : kernel[0]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> w;
    Integer g = 0;
    for (const auto& q : kernel[0]) {
        Rational v = q * Rational(l);
        w.push_back(v.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.back().get_mpz_t());
    }
    if (w[0] < 0) g = -g;
    for (auto& v : w) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    for (const auto& v : w)
        if (v <= 0) throw InternalError("Perron-Frobenius eigenvector is not positive");

    const std::size_t length = n_big.get_ui();
    std::vector<std::pair<Letter, std::size_t>> provenance;
    std::vector<std::string> names;
    std::vector<std::size_t> first_unit(n);
    for (Letter x = 0; x < n; ++x) {
        first_unit[x] = provenance.size();
        const std::size_t len = w[x].get_ui();
        for (std::size_t i = 0; i < len; ++i) {
            provenance.emplace_back(x, i);
            names.push_back(len == 1 ? s.name(x) : s.name(x) + "(" + std::to_string(i + 1) + ")");
        }
    }
    std::vector<Word> rules;
    for (Letter x = 0; x < n; ++x) {
        Word expansion;
        for (Letter y : s.rule(x))
            for (std::size_t i = 0; i < w[y].get_ui(); ++i) expansion.push_back(static_cast<Letter>(first_unit[y] + i));
        const std::size_t len = w[x].get_ui();
        if (expansion.size() != len * length) throw InternalError("unit expansion has the wrong length");
        for (std::size_t i = 0; i < len; ++i)
            rules.emplace_back(expansion.begin() + static_cast<std::ptrdiff_t>(i * length),
                               expansion.begin() + static_cast<std::ptrdiff_t>((i + 1) * length));
    }
    return {Substitution(std::move(names), std::move(rules)), length, std::move(provenance), std::move(w)};
}

ColumnSemigroup column_semigroup(const Substitution& s, std::size_t cap) {
    auto len = s.constant_length();
    if (!len) throw PreconditionError("column semigroup needs a constant-length substitution");
    ColumnSemigroup g;
    for (std::size_t k = 0; k < *len; ++k) {
        Column c(s.size());
        for (Letter a = 0; a < s.size(); ++a) c[a] = s.rule(a)[k];
        g.generators.push_back(std::move(c));
    }
    std::map<Column, std::size_t> seen;
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
        if (seen.emplace(g.generators[k], g.elements.size()).second) {
            g.elements.push_back(g.generators[k]);
            g.words.push_back({k});
        }
    }
    for (std::size_t head = 0; head < g.elements.size(); ++head) {
        for (std::size_t k = 0; k < g.generators.size(); ++k) {
            Column c(s.size());
            for (Letter a = 0; a < s.size(); ++a) c[a] = g.generators[k][g.elements[head][a]];
            if (seen.count(c)) continue;
            if (g.elements.size() >= cap)
                throw ResourceError("column semigroup exceeds " + std::to_string(cap) + " elements");
            seen.emplace(c, g.elements.size());
            g.elements.push_back(std::move(c));
            auto word = g.words[head];
            word.push_back(k);
            g.words.push_back(std::move(word));
        }
    }
    return g;
}

namespace {

std::size_t image_size(const Column& c) { return std::set<Letter>(c.begin(), c.end()).size(); }

using Pair = std::pair<Letter, Letter>;
Pair ordered(Letter a, Letter b) { return a < b ? Pair{a, b} : Pair{b, a}; }

std::set<Pair> eventually_coincident_pairs(const ColumnSemigroup& g, std::size_t n) {
    std::set<Pair> out;
    for (const auto& c : g.elements)
        for (Letter a = 0; a < n; ++a)
            for (Letter b = a + 1; b < n; ++b)
                if (c[a] == c[b]) out.insert({a, b});
    return out;
}

bool strongly_coincident(const ColumnSemigroup& g, const std::set<Pair>& ec, Letter a, Letter b) {
    std::set<Pair> seen{ordered(a, b)};
    std::deque<Pair> todo{ordered(a, b)};
    while (!todo.empty()) {
        auto [x, y] = todo.front();
        todo.pop_front();
        if (x != y && !ec.count({x, y})) return false;
        for (const auto& f : g.generators) {
            Pair p = ordered(f[x], f[y]);
            if (seen.insert(p).second) todo.push_back(p);
        }
    }
    return true;
}

}  // namespace

std::vector<std::vector<Letter>> strongly_coincident_classes(const Substitution& s, const ColumnSemigroup& g) {
    const std::size_t n = s.size();
    const auto ec = eventually_coincident_pairs(g, n);
    std::vector<std::vector<char>> strong(n, std::vector<char>(n, 0));
    std::vector<Letter> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::function<Letter(Letter)> find = [&](Letter x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    for (Letter a = 0; a < n; ++a) {
        strong[a][a] = 1;
        for (Letter b = a + 1; b < n; ++b) {
            if (!ec.count({a, b}) || !strongly_coincident(g, ec, a, b)) continue;
            strong[a][b] = strong[b][a] = 1;
            Letter ra = find(a), rb = find(b);
            if (ra != rb) rep[std::max(ra, rb)] = std::min(ra, rb);
        }
    }
    std::map<Letter, std::vector<Letter>> classes;
    for (Letter a = 0; a < n; ++a) classes[find(a)].push_back(a);
    std::vector<std::vector<Letter>> out;
    for (auto& [root, members] : classes) {
        for (Letter x : members)
            for (Letter y : members)
                if (!strong[x][y])
                    throw InternalError("strong coincidence is not transitive on {" + s.name(x) + ", " + s.name(y) + "}");
        out.push_back(members);
    }
    return out;
}

std::vector<std::vector<Letter>> strongly_coincident_classes(const Substitution& s) {
    return strongly_coincident_classes(s, column_semigroup(s));
}

CoincidenceReport coincidence_rank(const Substitution& s) {
    ColumnSemigroup g = column_semigroup(s);
    CoincidenceReport r;
    r.semigroup_size = g.elements.size();
    r.cr = s.size() + 1;
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        std::size_t m = image_size(g.elements[i]);
        if (m < r.cr) {
            r.cr = m;
            r.witness = g.elements[i];
            r.witness_word = g.words[i];
        }
    }
    std::set<Letter> img(r.witness.begin(), r.witness.end());
    r.stable_tuple.assign(img.begin(), img.end());
    for (const auto& p : eventually_coincident_pairs(g, s.size())) r.eventually_coincident.push_back(p);
    r.strong_classes = strongly_coincident_classes(s, g);
    return r;
}

Substitution quotient_substitution(const Substitution& s) {
    auto classes = strongly_coincident_classes(s);
    std::vector<Letter> cls(s.size());
    std::vector<std::string> names;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (Letter a : classes[c]) cls[a] = static_cast<Letter>(c);
        names.push_back(s.name(classes[c].front()));
    }
    std::vector<Word> rules;
    for (const auto& members : classes) {
        Word image;
        for (Letter x : s.rule(members.front())) image.push_back(cls[x]);
        for (Letter a : members) {
            Word other;
            for (Letter x : s.rule(a)) other.push_back(cls[x]);
            if (other != image)
                throw PreconditionError("strong coincidence classes are not compatible with the rule of '" +
                                        s.name(a) + "'");
        }
        rules.push_back(std::move(image));
    }
    return Substitution(std::move(names), std::move(rules));
}

PureCore pure_core(const Substitution& s) {
    auto len = s.constant_length();
    if (!len) throw PreconditionError("pure core needs a constant-length substitution");
    const std::size_t n = *len;
    if (n < 2) throw PreconditionError("pure core needs length at least 2");
    if (auto ap = aperiodicity_check(s); ap.verdict == Periodicity::Periodic)
        throw PreconditionError("pure core needs an aperiodic substitution: " + ap.evidence);
    PureCore pc{s, 1, s, 0, {}};
    std::size_t n4 = n * n * n * n;
    pc.prefix_length = std::max<std::size_t>(10'000, n4);
    FixedPoint fp = fixed_point(s, pc.prefix_length);
    const Word& u = fp.prefix;
    unsigned long g = 0;
    for (std::size_t k = 1; k < u.size(); ++k)
        if (u[k] == u[0]) g = std::gcd(g, static_cast<unsigned long>(k));
    if (g == 0) throw PreconditionError("first letter does not recur in the fixed-point prefix");
    for (unsigned long c = std::gcd(g, static_cast<unsigned long>(n)); c > 1; c = std::gcd(g, static_cast<unsigned long>(n)))
        g /= c;
    pc.height = g;
    for (Letter a = 0; a < s.size(); ++a) pc.blocks.push_back(Word{a});
    if (pc.height == 1) return pc;

    const std::size_t h = pc.height;
    std::map<Word, Letter> index;
    pc.blocks.clear();
    for (std::size_t p = 0; p + h <= u.size(); p += h) {
        Word b(u.begin() + static_cast<std::ptrdiff_t>(p), u.begin() + static_cast<std::ptrdiff_t>(p + h));
        if (index.emplace(b, static_cast<Letter>(pc.blocks.size())).second) pc.blocks.push_back(b);
    }
    std::vector<std::string> names;
    for (const auto& b : pc.blocks) {
        std::string name;
        for (Letter x : b) name += s.name(x);
        names.push_back(name);
    }
    std::vector<Word> rules;
    for (const auto& b : pc.blocks) {
        Word img = s.apply(b);
        Word rule;
        for (std::size_t p = 0; p < img.size(); p += h) {
            Word piece(img.begin() + static_cast<std::ptrdiff_t>(p), img.begin() + static_cast<std::ptrdiff_t>(p + h));
            auto it = index.find(piece);
            if (it == index.end()) throw InternalError("core block missing from the fixed-point prefix");
            rule.push_back(it->second);
        }
        rules.push_back(std::move(rule));
    }
    pc.core = Substitution(std::move(names), std::move(rules));
    return pc;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::NotApplicable: return "NOT_APPLICABLE";
        case Verdict::Flag: return "FLAG";
    }
    return "?";
}

std::string to_string(Periodicity p) {
    switch (p) {
        case Periodicity::Aperiodic: return "aperiodic";
        case Periodicity::Periodic: return "periodic";
        case Periodicity::Unknown: return "unknown";
    }
    return "?";
}

CrcVerdict crc_check(const Substitution& s, const HomologicalPisot& hp) {
    CrcVerdict v;
    if (hp.pisot.degree == 1) {
        const Substitution unit = s.constant_length() ? s : to_constant_length(s).unit;
        if (unit.constant_length().value_or(0) >= 2) v.cr = coincidence_rank(unit).cr;
    }
    const std::string cr_text = v.cr ? std::to_string(*v.cr) : "not computed";
    if (v.cr == 1U) {
        v.crc = Verdict::Pass;
        if (hp.flag) v.thm13 = Verdict::Pass;
        v.note = "cr = 1 has no prime factors; passes trivially";
        return v;
    }
    if (!hp.flag) {
        v.note = "not homological Pisot (cr = " + cr_text + "); the conjecture and the cr != 2 statement are vacuous";
        return v;
    }
    if (hp.pisot.degree != 1 || !v.cr) {
        v.note = "cr not certified for d >= 2";
        return v;
    }
    Integer cr(static_cast<unsigned long>(*v.cr));
    Integer norm = abs(hp.pisot.norm);
    // Every prime of cr divides the norm iff cr | norm^k for large k.
    Integer power = norm;
    for (int i = 0; i < 64 && power < cr; ++i) power *= norm;
    v.crc = (norm != 0 && mpz_divisible_p(power.get_mpz_t(), cr.get_mpz_t())) ? Verdict::Pass : Verdict::Fail;
    v.thm13 = *v.cr == 2 ? Verdict::Flag : Verdict::Pass;
    v.note = "cr = " + cr_text + ", norm = " + hp.pisot.norm.get_str();
    return v;
}

CrcVerdict crc_check(const Substitution& s) { return crc_check(s, is_homological_pisot(s)); }

AperiodicityResult aperiodicity_check(const Substitution& s, const PisotReport& pisot) {
    if (pisot.degree >= 2) return {Periodicity::Aperiodic, "irrational dilatation (degree " + std::to_string(pisot.degree) + ")"};
    const Integer& nb = -pisot.min_poly.coeff(0);
    const std::size_t n = nb.get_ui();
    const std::size_t alpha = s.size();
    const std::size_t len = std::max<std::size_t>(10'000, (n * alpha) * (n * alpha) * (n * alpha));
    const std::size_t max_period = alpha * n * n;
    Word u = fixed_point(s, len).prefix;
    for (std::size_t p = 1; p <= max_period && p < u.size(); ++p) {
        bool periodic = true;
        for (std::size_t i = 0; i + p < u.size(); ++i)
            if (u[i] != u[i + p]) {
                periodic = false;
                break;
            }
        if (periodic)
            return {Periodicity::Periodic, "fixed-point prefix of length " + std::to_string(len) + " has period " +
                                               std::to_string(p)};
    }
    return {Periodicity::Aperiodic, "heuristic: fixed-point prefix of length " + std::to_string(len) +
                                        " has no period <= " + std::to_string(max_period)};
}

AperiodicityResult aperiodicity_check(const Substitution& s) {
    return aperiodicity_check(s, minimal_polynomial_of_dilatation(s));
}

}  // namespace hpisot

#include "hpisot/measure.hpp"

#include <algorithm>

#include "hpisot/error.hpp"
#include "hpisot/linalg.hpp"

namespace hpisot {

std::vector<FieldElement> companion_limit_vector(const FieldPtr& field) {
    const int d = field->degree();
    const IntPolynomial& p = field->min_poly();
    const FieldElement lambda = FieldElement::lambda(field);
    const FieldElement inv_dp = p_prime_at_lambda(field).inverse();
    // r_j = (sum_{i > j} a_i lambda^{i-j-1}) / p'(lambda), a_d = 1.
    std::vector<FieldElement> r;
    for (int j = 0; j < d; ++j) {
        FieldElement sum(field, 0), power(field, 1);
        for (int i = j + 1; i <= d; ++i) {
            sum += Rational(p.coeff(i)) * power;
            power *= lambda;
        }
        r.push_back(sum * inv_dp);
    }
    // C r: row 0 is -a_0 r_{d-1}, row j is r_{j-1} - a_j r_{d-1}.
    FieldElement norm(field, 0), power(field, 1);
    for (int j = 0; j < d; ++j) {
        FieldElement cr = Rational(-p.coeff(j)) * r[static_cast<std::size_t>(d - 1)];
        if (j > 0) cr += r[static_cast<std::size_t>(j - 1)];
        if (!(cr == lambda * r[static_cast<std::size_t>(j)])) throw InternalError("companion eigenvector check failed");
        norm += power * r[static_cast<std::size_t>(j)];
        power *= lambda;
    }
    if (!(norm == FieldElement(field, 1))) throw InternalError("companion eigenvector is not normalized");
    return r;
}

CollaredSubstitution collar(const Substitution& s, std::size_t ell) {
    if (ell == 0) throw PreconditionError("collar length must be at least 1");
    std::vector<Word> alphabet = words_of_length(s, ell);
    std::map<Word, Letter> index;
    for (std::size_t i = 0; i < alphabet.size(); ++i) index.emplace(alphabet[i], static_cast<Letter>(i));
    std::vector<std::string> names;
    const std::string sep = s.compact_names() ? "" : ".";
    for (const auto& w : alphabet) {
        std::string name;
        for (std::size_t i = 0; i < w.size(); ++i) name += (i ? sep : "") + s.name(w[i]);
        names.push_back(name);
    }
    std::vector<Word> rules;
    for (const auto& w : alphabet) {
        const Word img = s.apply(w);
        Word rule;
        for (std::size_t j = 0; j < s.rule(w[0]).size(); ++j) {
            auto it = index.find(Word(img.begin() + static_cast<std::ptrdiff_t>(j),
                                      img.begin() + static_cast<std::ptrdiff_t>(j + ell)));
            if (it == index.end()) throw InternalError("collared image window is not an allowed word");
            rule.push_back(it->second);
        }
        rules.push_back(std::move(rule));
    }
    Substitution collared(std::move(names), std::move(rules));
    IntMatrix a = abelianization(collared);
    return {ell, std::move(alphabet), std::move(collared), std::move(a)};
}

std::vector<FieldElement> frequencies(const CollaredSubstitution& c, const TileGeometry& g, const FieldElement& lambda) {
    const std::size_t n = c.alphabet.size();
    const IntMatrix& a = c.abelianization;
    // Recurrent letters: reachable from every letter in at least one step.
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<std::size_t> stack;
        for (std::size_t v = 0; v < n; ++v)
            if (a(v, u) > 0 && !reach[u][v]) reach[u][v] = 1, stack.push_back(v);
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v)
                if (a(v, x) > 0 && !reach[u][v]) reach[u][v] = 1, stack.push_back(v);
        }
    }
    std::vector<std::size_t> rec;
    for (std::size_t v = 0; v < n; ++v) {
        bool all = true;
        for (std::size_t u = 0; u < n && all; ++u) all = reach[u][v];
        if (all) rec.push_back(v);
    }
    const FieldPtr& k = g.field;
    const FieldElement zero(k, 0), one(k, 1);
    const std::size_t r = rec.size();
    std::vector<std::vector<FieldElement>> m(r, std::vector<FieldElement>(r, zero));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            m[i][j] = FieldElement(k, Rational(a(rec[i], rec[j])));
            if (i == j) m[i][j] -= lambda;
        }
    auto kernel = kernel_basis(m, r, zero, one);
    if (kernel.size() != 1) throw InternalError("collared eigenspace is not one-dimensional on the recurrent part");

    std::vector<FieldElement> freq(n, zero);
    FieldElement total = zero;
    for (std::size_t i = 0; i < r; ++i) {
        freq[rec[i]] = kernel[0][i];
        total += kernel[0][i] * g.lengths[c.alphabet[rec[i]][0]];
    }
    const FieldElement inv = one / total;
    for (std::size_t i : rec) {
        freq[i] = freq[i] * inv;
        if (freq[i].sign() <= 0) throw InternalError("word frequency is not positive");
    }
    return freq;
}

WordFrequencies::WordFrequencies(const Substitution& s, const PisotReport& pisot, const TileGeometry& g)
    : s_(s), power_(s), g_(g) {
    const FieldElement lambda = pisot.dilatation;
    CollaredSubstitution c2 = collar(s, 2);
    auto f2 = frequencies(c2, g, lambda);
    for (Letter x = 0; x < s.size(); ++x) memo_.emplace(Word{x}, FieldElement(g.field, 0));
    for (std::size_t i = 0; i < c2.alphabet.size(); ++i) {
        memo_.emplace(c2.alphabet[i], f2[i]);
        memo_[Word{c2.alphabet[i][0]}] += f2[i];
    }
    unsigned m = 1;
    while (power_.min_rule_length() < 2) power_ = s.power(++m);
    FieldElement lm(g.field, 1);
    for (unsigned i = 0; i < m; ++i) lm *= lambda;
    inv_lambda_power_ = lm.inverse();
}

const std::vector<Word>& WordFrequencies::words(std::size_t len) {
    auto it = words_.find(len);
    if (it == words_.end()) it = words_.emplace(len, words_of_length(s_, len)).first;
    return it->second;
}

FieldElement WordFrequencies::operator()(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    if (w.size() <= 2) return FieldElement(g_.field, 0);  // not allowed
    const std::size_t r = power_.min_rule_length();
    const std::size_t ancestors = 1 + (w.size() - 1 + r - 1) / r;
    FieldElement sum(g_.field, 0);
    for (const Word& u : words(ancestors)) {
        const Word img = power_.apply(u);
        std::size_t hits = 0;
        for (std::size_t j = 0; j < power_.rule(u[0]).size() && j + w.size() <= img.size(); ++j)
            if (std::equal(w.begin(), w.end(), img.begin() + static_cast<std::ptrdiff_t>(j))) ++hits;
        if (hits) sum += Rational(static_cast<unsigned long>(hits)) * (*this)(u);
    }
    FieldElement f = sum * inv_lambda_power_;
    memo_.emplace(w, f);
    return f;
}

CylinderMeasure canonical_form(Word patch, const FieldElement& value, const PisotReport& pisot) {
    CylinderMeasure m;
    m.patch = std::move(patch);
    m.value = value;
    if (value.is_rational()) m.rational = value.rational_value();
    const std::vector<Rational> c = (value * p_prime_at_lambda(pisot.field)).coords();
    Integer scale = 1;
    for (unsigned k = 0; k <= kMaxCanonicalK; ++k, scale *= pisot.a0) {
        std::vector<Integer> q;
        bool integral = true;
        for (const auto& x : c) {
            Rational y = x * Rational(scale);
            if (y.get_den() != 1) {
                integral = false;
                break;
            }
            q.push_back(y.get_num());
        }
        if (integral) {
            m.q = IntPolynomial(std::move(q));
            m.k = k;
            m.q_integer = true;
            return m;
        }
    }
    return m;
}

bool has_proper_power(const Substitution& s) {
    // First and last letters of phi^n(x) are f^n(x) for f = first/last letter map;
    // both images become constant within |A| steps if ever.
    std::vector<Letter> first(s.size()), last(s.size());
    for (Letter x = 0; x < s.size(); ++x) first[x] = last[x] = x;
    auto constant = [](const std::vector<Letter>& v) { return std::all_of(v.begin(), v.end(), [&](Letter y) { return y == v[0]; }); };
    for (std::size_t n = 1; n <= s.size(); ++n) {
        for (Letter x = 0; x < s.size(); ++x) {
            first[x] = s.rule(first[x]).front();
            last[x] = s.rule(last[x]).back();
        }
        if (constant(first) && constant(last)) return true;
    }
    return false;
}

void require_lattice_hypothesis(const Substitution& s, bool assert_lattices_equal) {
    if (assert_lattices_equal || has_proper_power(s)) return;
    if (s.constant_length().value_or(0) >= 2 && pure_core(s).height == 1) return;
    throw PreconditionError(
        "tile and return lattices are not known to agree; no power is proper and the input is not a "
        "constant-length pure core; pass "
        "--assert-lattices-equal");
}

CylinderMeasure cylinder_measure(WordFrequencies& freq, const PisotReport& pisot, const Word& p) {
    const std::size_t l = p.size();
    if (l == 0) throw PreconditionError("empty patch");
    const auto& allowed = freq.words(l);
    if (!std::binary_search(allowed.begin(), allowed.end(), p))
        throw PreconditionError("patch '" + freq.substitution().format(p) + "' is not an allowed word");
    const auto& g = freq.geometry();
    FieldElement total(g.field, 0);
    for (const Word& q : freq.words(2 * l + 1)) {
        bool covered = false;
        for (std::size_t start = 1; start <= l && !covered; ++start)
            covered = std::equal(p.begin(), p.end(), q.begin() + static_cast<std::ptrdiff_t>(start));
        if (covered) total += freq(q) * g.lengths[q[l]];
    }
    return canonical_form(p, total, pisot);
}

CylinderMeasure cylinder_measure(const Substitution& s, const Word& p, bool assert_lattices_equal) {
    require_lattice_hypothesis(s, assert_lattices_equal);
    PisotReport pr = minimal_polynomial_of_dilatation(s);
    if (!pr.is_pisot) throw PreconditionError("cylinder measures need a Pisot substitution");
    WordFrequencies freq(s, pr, tile_geometry(s, pr));
    return cylinder_measure(freq, pr, p);
}

RationalityVerdict rationality_divisibility_check(const std::optional<Rational>& value, const PisotReport& pisot) {
    RationalityVerdict v;
    if (!value) return v;
    const Integer m = value->get_den();
    Integer g = 0;
    const IntPolynomial dp = pisot.min_poly.derivative();
    for (const auto& c : dp.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    // m | B^k for some k iff m | B^e with B^e >= m.
    auto divides_power = [&](const Integer& factor, const Integer& base) {
        Integer acc = factor, b = abs(base);
        for (unsigned k = 0; k <= kMaxCanonicalK; ++k, acc *= b) {
            if (mpz_divisible_p(acc.get_mpz_t(), m.get_mpz_t())) return true;
            if (b <= 1) break;
        }
        return false;
    };
    v.thm10 = divides_power(abs(pisot.a0) * g, pisot.a0) ? Verdict::Pass : Verdict::Fail;
    v.rational_measure = divides_power(Integer(pisot.degree), pisot.a0) ? Verdict::Pass : Verdict::Fail;
    return v;
}

MeasureWitness measure_fraction_witness(const Substitution& s) {
    if (!s.constant_length()) throw PreconditionError("measure witness needs a constant-length substitution");
    HomologicalPisot hp = is_homological_pisot(s);
    CoincidenceReport cr = coincidence_rank(s);
    MeasureWitness w;
    w.cr = cr.cr;
    w.witness_word = cr.witness_word;
    w.in_hypothesis = hp.flag && cr.strong_classes.size() == s.size();
    WordFrequencies freq(s, hp.pisot, tile_geometry(s, hp.pisot));
    const FieldElement target(hp.pisot.field, Rational(1, static_cast<unsigned long>(cr.cr)));
    w.all_equal_inverse_cr = true;
    for (Letter b : cr.stable_tuple) {
        WitnessBlock block;
        block.image = b;
        block.measure = FieldElement(hp.pisot.field, 0);
        for (Letter a = 0; a < s.size(); ++a)
            if (cr.witness[a] == b) {
                block.letters.push_back(a);
                block.measure += cylinder_measure(freq, hp.pisot, Word{a}).value;
            }
        w.all_equal_inverse_cr = w.all_equal_inverse_cr && block.measure == target;
        w.blocks.push_back(std::move(block));
    }
    w.verdicts = rationality_divisibility_check(Rational(1, static_cast<unsigned long>(cr.cr)), hp.pisot);
    return w;
}

}  // namespace hpisot

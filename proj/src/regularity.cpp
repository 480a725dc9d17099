#include "hpisot/regularity.hpp"

#include <algorithm>
#include <map>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "hpisot/error.hpp"
#include "hpisot/linalg.hpp"

namespace hpisot {

TileGeometry tile_geometry(const Substitution& s, const PisotReport& pisot) {
    const std::size_t n = s.size();
    const FieldPtr& k = pisot.field;
    const FieldElement zero(k, 0), one(k, 1);
    const IntMatrix a = abelianization(s);
    // Row j: sum_i A[i][j] w_i - lambda w_j.
    std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(n, zero));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            m[j][i] = FieldElement(k, Rational(a(i, j)));
            if (i == j) m[j][i] -= pisot.dilatation;
        }
    auto kernel = kernel_basis(m, n, zero, one);
    if (kernel.size() != 1) throw InternalError("left eigenspace of the dilatation is not one-dimensional");

    TileGeometry g;
    g.field = k;
    for (Letter x = 1; x < n; ++x)
        if (kernel[0][x] * kernel[0][x] < kernel[0][g.unit_letter] * kernel[0][g.unit_letter]) g.unit_letter = x;
    const FieldElement scale = one / kernel[0][g.unit_letter];
    for (const auto& v : kernel[0]) {
        g.lengths.push_back(v * scale);
        if (g.lengths.back().sign() <= 0) throw InternalError("tile length is not positive");
    }
    g.base_length = one;
    return g;
}

TileGeometry tile_geometry(const Substitution& s) { return tile_geometry(s, minimal_polynomial_of_dilatation(s)); }

std::vector<Rational> coordinates(const FieldElement& x, const TileGeometry& g) {
    std::vector<Rational> c = (x / g.base_length).coords();
    c.resize(static_cast<std::size_t>(g.field->degree()), Rational(0));
    return c;
}

std::size_t count_occurrences(const Word& w, const Word& p, std::size_t from, std::size_t to) {
    if (from > to || to > w.size()) throw PreconditionError("occurrence window outside the word");
    if (p.empty() || p.size() > w.size()) return 0;
    std::size_t count = 0;
    const std::size_t last = std::min(to, w.size() - p.size() + 1);
    for (std::size_t q = from; q < last; ++q)
        if (std::equal(p.begin(), p.end(), w.begin() + static_cast<std::ptrdiff_t>(q))) ++count;
    return count;
}

namespace {

/// Earliest among the most frequent length-`len` factors of w.  Windows are
/// bucketed by a rolling hash; a collision could only change which anchor is
/// chosen, since anchors are matched letter by letter afterwards.
Word most_frequent_word(const Word& w, std::size_t len) {
    if (len == 0 || len > w.size()) return {};
    constexpr std::uint64_t kBase = 1'000'003;
    std::uint64_t top = 1;
    for (std::size_t i = 1; i < len; ++i) top *= kBase;
    std::unordered_map<std::uint64_t, std::pair<std::size_t, std::size_t>> counts;  // hash -> (count, first)
    std::uint64_t h = 0;
    std::size_t best_count = 0, best_at = 0;
    for (std::size_t q = 0; q < w.size(); ++q) {
        if (q >= len) h -= top * (w[q - len] + 1);
        h = h * kBase + (w[q] + 1);
        if (q + 1 < len) continue;
        const std::size_t at = q + 1 - len;
        auto& [c, first] = counts.try_emplace(h, 0, at).first->second;
        ++c;
        if (c > best_count || (c == best_count && first < best_at)) {
            best_count = c;
            best_at = first;
        }
    }
    return Word(w.begin() + static_cast<std::ptrdiff_t>(best_at), w.begin() + static_cast<std::ptrdiff_t>(best_at + len));
}

/// Fixed-point prefixes, anchors and return coordinates shared by all patches.
class ReturnSampler {
public:
    ReturnSampler(const Substitution& s, const TileGeometry& g) : s_(s), g_(g) {
        for (const auto& len : g.lengths) tile_coords_.push_back(coordinates(len, g));
    }

    struct Returns {
        Word anchor;
        std::size_t offset = 0;
        std::vector<std::size_t> vertices;            ///< anchor vertex positions
        std::vector<std::vector<Rational>> coords;    ///< c(tau) for consecutive vertices
    };

    const Word& prefix(std::size_t len) {
        auto it = prefixes_.find(len);
        if (it == prefixes_.end()) it = prefixes_.emplace(len, fixed_point(s_, len).prefix).first;
        return it->second;
    }

    const Returns& returns(std::size_t len, std::size_t anchor_len) {
        auto key = std::make_pair(len, anchor_len);
        if (auto it = returns_.find(key); it != returns_.end()) return it->second;
        const Word& w = prefix(len);
        const std::size_t d = static_cast<std::size_t>(g_.field->degree());
        Returns r;
        r.anchor = most_frequent_word(w, anchor_len);
        r.offset = anchor_len / 2;
        for (std::size_t q = 0; q + anchor_len <= w.size(); ++q)
            if (std::equal(r.anchor.begin(), r.anchor.end(), w.begin() + static_cast<std::ptrdiff_t>(q)))
                r.vertices.push_back(q + r.offset);
        std::vector<std::size_t> count(s_.size());
        for (std::size_t i = 0; i + 1 < r.vertices.size(); ++i) {
            std::fill(count.begin(), count.end(), 0);
            for (std::size_t q = r.vertices[i]; q < r.vertices[i + 1]; ++q) ++count[w[q]];
            std::vector<Rational> c(d, Rational(0));
            for (Letter x = 0; x < s_.size(); ++x)
                if (count[x] != 0)
                    for (std::size_t j = 0; j < d; ++j) c[j] += Rational(static_cast<unsigned long>(count[x])) * tile_coords_[x][j];
            r.coords.push_back(std::move(c));
        }
        return returns_.emplace(key, std::move(r)).first->second;
    }

private:
    const Substitution& s_;
    const TileGeometry& g_;
    std::vector<std::vector<Rational>> tile_coords_;
    std::map<std::size_t, Word> prefixes_;
    std::map<std::pair<std::size_t, std::size_t>, Returns> returns_;
};

ERPFit fit_once(ReturnSampler& sampler, std::size_t d, const Integer& a0, const Word& p, std::size_t sample_len,
                std::size_t anchor_len) {
    ERPFit fit;
    fit.patch = p;
    fit.sample_len = sample_len;
    const Word& w = sampler.prefix(sample_len);
    const auto& r = sampler.returns(sample_len, anchor_len);
    fit.anchor = r.anchor;
    fit.anchor_offset = r.offset;

    const std::size_t n = w.size();
    std::vector<std::size_t> hits(n + 1, 0);
    for (std::size_t q = 0; q < n; ++q)
        hits[q + 1] = hits[q] + (q + p.size() <= n && std::equal(p.begin(), p.end(), w.begin() + static_cast<std::ptrdiff_t>(q)));

    std::set<std::pair<std::vector<Rational>, std::size_t>> samples;
    for (std::size_t i = 0; i + 1 < r.vertices.size(); ++i) {
        const std::size_t from = r.vertices[i], to = r.vertices[i + 1];
        // The patch must fit inside the sampled word for every counted anchor.
        if (to + p.size() > n) break;
        samples.insert({r.coords[i], hits[to] - hits[from]});
        ++fit.sample_count;
    }
    fit.distinct_samples = samples.size();

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& [c, count] : samples) {
        rows.push_back(c);
        rhs.emplace_back(static_cast<unsigned long>(count));
    }
    auto sol = solve_linear(rows, rhs, d, Rational(0), Rational(1));
    fit.rank = sol.rank;
    fit.residual_zero = sol.consistent;
    if (sol.consistent) {
        fit.alphas = sol.x;
        for (const auto& alpha : fit.alphas) fit.a0_membership.push_back(in_Z_one_over_a0(alpha, a0));
    }
    return fit;
}

ERPFit fit_with(ReturnSampler& sampler, const Substitution& s, const TileGeometry& g, const Integer& a0, const Word& p,
                std::size_t sample_len) {
    const std::size_t d = static_cast<std::size_t>(g.field->degree());
    const auto allowed = words_of_length(s, p.size());
    if (p.empty() || !std::binary_search(allowed.begin(), allowed.end(), p))
        throw PreconditionError("patch '" + s.format(p) + "' is not an allowed word");
    const std::size_t anchor_len = 2 * p.size() + 2 * s.max_rule_length();

    ERPFit fit = fit_once(sampler, d, a0, p, sample_len, anchor_len);
    if (fit.rank < d || fit.sample_count < kMinReturnSamples) {
        fit = fit_once(sampler, d, a0, p, 4 * sample_len, anchor_len);
        if (fit.rank < d)
            throw PreconditionError("return coordinates span only " + std::to_string(fit.rank) + " of " +
                                    std::to_string(d) + " dimensions");
    }
    // L' is existential, so a residual may mean the anchor is too short:
    // double it, growing the prefix to keep kMinReturnSamples returns.
    std::size_t len = fit.sample_len, alen = anchor_len;
    for (unsigned step = 0; !fit.residual_zero && step < kMaxAnchorDoublings; ++step) {
        alen *= 2;
        ERPFit longer = fit_once(sampler, d, a0, p, len, alen);
        while ((longer.rank < d || longer.sample_count < kMinReturnSamples) && 4 * len <= kMaxSampleLen) {
            len *= 4;
            longer = fit_once(sampler, d, a0, p, len, alen);
        }
        if (longer.rank < d || longer.sample_count < kMinReturnSamples) break;
        fit = std::move(longer);
    }
    return fit;
}

}  // namespace

ERPFit fit_erp_functional(const Substitution& s, const TileGeometry& g, const Integer& a0, const Word& p,
                          std::size_t sample_len) {
    ReturnSampler sampler(s, g);
    return fit_with(sampler, s, g, a0, p, sample_len);
}

ERPFit fit_erp_functional(const Substitution& s, const Word& p, std::size_t sample_len) {
    PisotReport pr = minimal_polynomial_of_dilatation(s);
    return fit_erp_functional(s, tile_geometry(s, pr), pr.a0, p, sample_len);
}

std::vector<Word> erp_patches(const Substitution& s, std::size_t num_patches) {
    std::vector<Word> out;
    for (std::size_t len = 1; len <= 3; ++len)
        for (auto& w : words_of_length(s, len)) out.push_back(std::move(w));
    if (num_patches != 0 && out.size() > num_patches) out.resize(num_patches);
    return out;
}

ERPReport verify_erp(const Substitution& s, std::size_t num_patches, std::size_t sample_len) {
    HomologicalPisot hp = is_homological_pisot(s);
    if (!hp.pisot.is_pisot) throw PreconditionError("ERP verification needs a Pisot substitution");
    TileGeometry g = tile_geometry(s, hp.pisot);
    ERPReport r;
    r.homological_pisot = hp.flag;
    r.base_length = coordinates(g.base_length, g);
    r.all_exact = true;
    ReturnSampler sampler(s, g);
    for (const auto& p : erp_patches(s, num_patches)) {
        r.fits.push_back(fit_with(sampler, s, g, hp.pisot.a0, p, sample_len));
        const auto& f = r.fits.back();
        const bool exact = f.residual_zero && std::all_of(f.a0_membership.begin(), f.a0_membership.end(),
                                                          [](bool b) { return b; });
        r.all_exact = r.all_exact && exact;
    }
    r.flag = r.homological_pisot && !r.all_exact;
    if (r.all_exact)
        r.verdict = r.homological_pisot ? "ERP verified (empirically)"
                                        : "exact fits on all samples (input is not homological Pisot)";
    else
        r.verdict = r.homological_pisot ? "FLAG: exact ERP failure on a homological Pisot input"
                                        : "residual failures; consistent with ERP forcing homological Pisot";
    return r;
}

}  // namespace hpisot

#include "hpisot/report.hpp"

#include <algorithm>
#include <cstdio>

#include "hpisot/bigfloat.hpp"
#include "hpisot/error.hpp"

namespace hpisot {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

Json to_json(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_str();
}

Json to_json(const Integer& z) { return z.get_str(); }

Json to_json(const IntPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"coeffs_ascending", coeffs}, {"string", p.to_string()}};
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).fits_slong_p() ? Json(m(i, j).get_si()) : to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const FieldElement& x) {
    Json coords = Json::array();
    for (const auto& c : x.coords()) coords.push_back(to_json(c));
    return Json{{"coords", coords}, {"approx", format_double(x.to_double())}};
}

std::optional<std::vector<Rational>> rational_eigenvalues(const Factorization& f) {
    std::vector<Rational> out;
    for (const auto& fp : f.factors) {
        if (fp.factor.degree() != 1) return std::nullopt;
        Rational root(-fp.factor.coeffs()[0], fp.factor.coeffs()[1]);
        root.canonicalize();
        out.insert(out.end(), fp.multiplicity, root);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Json to_json(const Factorization& f) {
    Json factors = Json::array();
    for (const auto& fp : f.factors)
        factors.push_back(Json{{"factor", fp.factor.to_string()}, {"multiplicity", fp.multiplicity}});
    Json out{{"string", f.to_string()}, {"unit", to_json(f.unit)}, {"factors", factors}};
    if (auto ev = rational_eigenvalues(f)) {
        Json list = Json::array();
        for (const auto& q : *ev) list.push_back(to_json(q));
        out["rational_eigenvalues"] = list;
    }
    return out;
}

Json to_json(const PisotReport& p, unsigned precision_bits) {
    auto [lo, hi] = p.field->interval(precision_bits);
    Json out{{"degree", p.degree},
             {"min_poly", to_json(p.min_poly)},
             {"dilatation", Json{{"approx", format_double(p.field->approx())},
                                 {"interval", Json::array({to_json(lo), to_json(hi)})},
                                 {"precision_bits", precision_bits}}},
             {"a0", to_json(p.a0)},
             {"norm", to_json(p.norm)},
             {"is_pisot", p.is_pisot},
             {"method", p.pisot_method}};
    out["conjugate_modulus_bound"] = p.conjugate_modulus_bound ? to_json(*p.conjugate_modulus_bound) : Json(nullptr);
    out["char_poly"] = to_json(p.char_poly);
    out["char_poly_factors"] = to_json(p.char_poly_factors);
    return out;
}

Json to_json(const CohomologyReport& c) {
    return Json{{"dim_h1", c.dim_h1},
                {"eventual_rank", c.eventual_rank},
                {"components", c.components},
                {"independent_cycles", c.independent_cycles},
                {"fixing_power", c.fixing_power},
                {"edge_eigenvalues", to_json(c.eigenvalues)},
                {"three_conditions", Json::array({c.three_conditions[0], c.three_conditions[1], c.three_conditions[2]})},
                {"dim_equals_degree", c.dim_equals_degree},
                {"conditions_agree", c.conditions_agree},
                {"homological_pisot", c.homological_pisot}};
}

namespace {

Json letters_json(const std::vector<Letter>& ls, const Substitution& s) {
    Json out = Json::array();
    for (Letter x : ls) out.push_back(s.name(x));
    return out;
}

Json rationals_json(const std::vector<Rational>& qs) {
    Json out = Json::array();
    for (const auto& q : qs) out.push_back(to_json(q));
    return out;
}

}  // namespace

Json to_json(const CoincidenceReport& c, const Substitution& s) {
    Json classes = Json::array();
    for (const auto& cl : c.strong_classes) classes.push_back(letters_json(cl, s));
    Json pairs = Json::array();
    for (const auto& [a, b] : c.eventually_coincident) pairs.push_back(Json::array({s.name(a), s.name(b)}));
    return Json{{"cr", c.cr},
                {"semigroup_size", c.semigroup_size},
                {"witness_word", c.witness_word},
                {"witness_column", letters_json(c.witness, s)},
                {"stable_tuple", letters_json(c.stable_tuple, s)},
                {"eventually_coincident", pairs},
                {"strong_classes", classes}};
}

Json to_json(const CrcVerdict& v) {
    Json out{{"crc", to_string(v.crc)}, {"thm13", to_string(v.thm13)}};
    out["cr"] = v.cr ? Json(*v.cr) : Json(nullptr);
    out["note"] = v.note;
    return out;
}

Json to_json(const ERPReport& e, const Substitution& s) {
    Json fits = Json::array();
    for (const auto& f : e.fits) {
        const bool in_ring = std::all_of(f.a0_membership.begin(), f.a0_membership.end(), [](bool b) { return b; });
        fits.push_back(Json{{"patch", s.format(f.patch)},
                            {"alphas", rationals_json(f.alphas)},
                            {"residual_zero", f.residual_zero},
                            {"alphas_in_z_inv_a0", in_ring && !f.alphas.empty()},
                            {"sample_count", f.sample_count},
                            {"distinct_samples", f.distinct_samples},
                            {"rank", f.rank},
                            {"sample_len", f.sample_len},
                            {"anchor", s.format(f.anchor)},
                            {"anchor_offset", f.anchor_offset}});
    }
    return Json{{"homological_pisot", e.homological_pisot},
                {"base_length", rationals_json(e.base_length)},
                {"all_exact", e.all_exact},
                {"flag", e.flag},
                {"verdict", e.verdict},
                {"fits", fits}};
}

Json to_json(const CylinderMeasure& m, const Substitution& s, const PisotReport& pisot) {
    Json out{{"patch", s.format(m.patch)}, {"value", to_json(m.value)}};
    out["rational"] = m.rational ? to_json(*m.rational) : Json(nullptr);
    out["canonical"] = Json{{"q", to_json(m.q)}, {"k", m.k}, {"q_integer", m.q_integer}};
    auto v = rationality_divisibility_check(m, pisot);
    out["thm10"] = to_string(v.thm10);
    out["rational_measure"] = to_string(v.rational_measure);
    return out;
}

Json to_json(const MeasureWitness& w, const Substitution& s) {
    Json blocks = Json::array();
    for (const auto& b : w.blocks)
        blocks.push_back(Json{{"image", s.name(b.image)}, {"letters", letters_json(b.letters, s)}, {"measure", to_json(b.measure)}});
    return Json{{"cr", w.cr},
                {"witness_word", w.witness_word},
                {"blocks", blocks},
                {"all_equal_inverse_cr", w.all_equal_inverse_cr},
                {"in_hypothesis", w.in_hypothesis},
                {"thm10", to_string(w.verdicts.thm10)},
                {"rational_measure", to_string(w.verdicts.rational_measure)}};
}

Json to_json(const CoverValidation& v) {
    Json out{{"prefix_suffix", v.prefix_suffix},
             {"prefix_suffix_failure", v.prefix_suffix_failure},
             {"disjoint_lifts", v.disjoint_lifts},
             {"disjoint_failure", v.disjoint_failure},
             {"max_word_length", v.max_word_length},
             {"words_checked", v.words_checked},
             {"cohomology_preserved", v.cohomology_preserved},
             {"dim_base", v.dim_base},
             {"dim_cover", v.dim_cover},
             {"components", v.components},
             {"cr_ok", v.cr_ok}};
    out["cr"] = v.cr ? Json(*v.cr) : Json(nullptr);
    out["cr_note"] = v.cr_note;
    out["all_pass"] = v.all_pass();
    return out;
}

Json to_json(const CoverResult& r, const CoverValidation& v) {
    return Json{{"base", to_json(r.base)},
                {"cover", to_json(r.cover)},
                {"anchor_violations", r.anchor_violations},
                {"abelianization", to_json(abelianization(r.cover))},
                {"validation", to_json(v)}};
}

Json to_json(const Example4& ex) {
    Json out{{"m0", to_json(ex.m0)}, {"k", ex.k}, {"m1", to_json(ex.m1)}};
    out["cover"] = to_json(ex.cover, ex.validation);
    out["m2_rank"] = ex.rank_m2;
    out["kernel_dim"] = ex.kernel_dim;
    out["charpoly_divides"] = ex.charpoly_divides;
    out["block_structure"] = ex.block_structure;
    out["padding_balanced"] = ex.padding_balanced;
    out["dim_equals_d"] = ex.dim_equals_d;
    return out;
}

Json coincidence_report(const Substitution& s) {
    if (s.constant_length()) return Json{{"rewritten", false}, {"rank", to_json(coincidence_rank(s), s)}};
    auto cf = to_constant_length(s);
    return Json{{"rewritten", true}, {"unit", to_json(cf.unit)}, {"rank", to_json(coincidence_rank(cf.unit), cf.unit)}};
}

Json measure_report(const Substitution& s, const std::vector<Word>& patches, bool assert_lattices_equal,
                    unsigned precision_bits) {
    require_lattice_hypothesis(s, assert_lattices_equal);
    PisotReport pr = minimal_polynomial_of_dilatation(s);
    WordFrequencies wf(s, pr, tile_geometry(s, pr));
    Json list = Json::array();
    for (const auto& p : patches) list.push_back(to_json(cylinder_measure(wf, pr, p), s, pr));
    return Json{{"pisot", to_json(pr, precision_bits)}, {"measures", list}};
}

namespace {

/// FAIL dominates PASS; NOT_APPLICABLE when nothing applied.
Verdict combine(Verdict acc, Verdict v) {
    if (acc == Verdict::Flag || v == Verdict::Flag) return Verdict::Flag;
    if (acc == Verdict::Fail || v == Verdict::Fail) return Verdict::Fail;
    if (acc == Verdict::Pass || v == Verdict::Pass) return Verdict::Pass;
    return Verdict::NotApplicable;
}

}  // namespace

Json analyze(const Substitution& s, const AnalysisOptions& opt) {
    PrecisionScope scope(std::max(opt.precision_bits, 64U));
    Json out;
    Json skipped = Json::object();
    Json verdicts = Json::object();
    out["substitution"] = to_json(s);
    auto prim = is_primitive(s);
    out["primitivity"] = Json{{"primitive", prim.primitive}, {"witness", prim.witness ? Json(*prim.witness) : Json(nullptr)}};
    if (!prim.primitive) throw PreconditionError("substitution is not primitive");
    out["abelianization"] = to_json(abelianization(s));

    HomologicalPisot hp = is_homological_pisot(s);
    out["pisot"] = to_json(hp.pisot, opt.precision_bits);
    out["cohomology"] = to_json(hp.cohomology);
    verdicts["homological_pisot"] = hp.flag;
    const bool d1 = hp.pisot.degree == 1;

    // Coincidence (d = 1).
    if (d1) {
        try {
            out["coincidence"] = coincidence_report(s);
            auto crc = crc_check(s, hp);
            out["coincidence"]["crc"] = to_json(crc);
            verdicts["crc"] = to_string(crc.crc);
            verdicts["thm13_consistency"] = to_string(crc.thm13);
            auto ap = aperiodicity_check(s, hp.pisot);
            out["coincidence"]["aperiodicity"] = Json{{"verdict", to_string(ap.verdict)}, {"evidence", ap.evidence}};
        } catch (const Error& e) {
            skipped["coincidence"] = e.what();
        }
    } else {
        skipped["coincidence"] = "dilatation has degree " + std::to_string(hp.pisot.degree) + ", not an integer";
    }

    // Regularity.
    if (hp.flag) {
        try {
            auto erp = verify_erp(s, opt.erp_patches, opt.sample_len);
            out["erp"] = to_json(erp, s);
            verdicts["erp"] = erp.flag ? "FLAG" : erp.all_exact ? "PASS" : "FAIL";
        } catch (const Error& e) {
            skipped["erp"] = e.what();
        }
    } else {
        skipped["erp"] = "not homological Pisot";
    }

    // Measures.
    try {
        require_lattice_hypothesis(s, opt.assert_lattices_equal);
        WordFrequencies wf(s, hp.pisot, tile_geometry(s, hp.pisot));
        Json list = Json::array();
        bool all_integer = true;
        Verdict thm10 = Verdict::NotApplicable;
        for (std::size_t len = 1; len <= std::max<std::size_t>(opt.max_word_length, 1); ++len)
            for (const auto& w : wf.words(len)) {
                auto m = cylinder_measure(wf, hp.pisot, w);
                all_integer = all_integer && m.q_integer;
                thm10 = combine(thm10, rationality_divisibility_check(m, hp.pisot).thm10);
                list.push_back(to_json(m, s, hp.pisot));
            }
        out["measures"] = list;
        if (hp.flag)
            verdicts["thm9"] = all_integer ? "PASS" : "FLAG";
        else
            skipped["thm9"] = "integrality of q needs a homological Pisot input";
        verdicts["thm10"] = to_string(thm10);
        if (!hp.flag && thm10 == Verdict::Fail)
            out["notes"] = Json{{"thm10", "input is not homological Pisot, so a failed divisibility is no contradiction"}};
    } catch (const Error& e) {
        skipped["measures"] = e.what();
    }

    // Measure fraction witness (constant length).
    if (d1 && s.constant_length()) {
        try {
            auto w = measure_fraction_witness(s);
            out["measure_witness"] = to_json(w, s);
            verdicts["thm12"] = !w.in_hypothesis    ? "NOT_APPLICABLE"
                                : w.all_equal_inverse_cr ? "PASS"
                                                         : "FLAG";
        } catch (const Error& e) {
            skipped["measure_witness"] = e.what();
        }
    } else {
        skipped["measure_witness"] = "needs a constant-length substitution";
    }

    out["verdicts"] = verdicts;
    out["skipped"] = skipped;
    return out;
}

}  // namespace hpisot

#include "hpisot/cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hpisot/error.hpp"

namespace hpisot::cli {

namespace fs = std::filesystem;

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

nlohmann::json parse_json(const std::string& text, const std::string& what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(what + ": invalid JSON: " + e.what());
    }
}

/// A bare substitution document or a corpus entry holding one.
Substitution load_substitution(const fs::path& path) {
    auto doc = parse_json(read_text(path), path.string());
    if (doc.is_object() && doc.contains("substitution")) return substitution_from_json(doc["substitution"]);
    if (doc.is_object() && doc.contains("cover")) return build_triple_cover(cover_spec_from_json(doc["cover"])).cover;
    return substitution_from_json(doc);
}

std::string str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string render_analysis(const Json& r) {
    std::ostringstream os;
    const auto& pisot = r["pisot"];
    const auto& coh = r["cohomology"];
    os << "dilatation: root of " << str(pisot["min_poly"]["string"]) << " ~ " << str(pisot["dilatation"]["approx"])
       << " (degree " << pisot["degree"] << ", pisot " << pisot["is_pisot"] << ")\n";
    os << "char poly: " << str(pisot["char_poly_factors"]["string"]) << "\n";
    os << "dim H1: " << coh["dim_h1"] << " (ER components " << coh["components"] << ", cycles "
       << coh["independent_cycles"] << ")\n";
    if (r.contains("coincidence")) os << "cr: " << r["coincidence"]["rank"]["cr"] << "\n";
    if (r.contains("measures"))
        for (const auto& m : r["measures"])
            os << "mu(" << str(m["patch"]) << ") = " << str(m["value"]["approx"])
               << (m["rational"].is_null() ? "" : " = " + str(m["rational"])) << "\n";
    for (const auto& [k, v] : r["verdicts"].items()) os << k << ": " << str(v) << "\n";
    for (const auto& [k, v] : r["skipped"].items()) os << "skipped " << k << ": " << str(v) << "\n";
    return os.str();
}

std::string render_validation(const Json& v) {
    std::ostringstream os;
    os << "check 1 (prefix/suffix): " << v["prefix_suffix"] << "\n"
       << "check 2 (disjoint lifts, words up to " << v["max_word_length"] << "): " << v["disjoint_lifts"] << "\n"
       << "check 3 (dim H1 " << v["dim_base"] << " -> " << v["dim_cover"] << ", " << v["components"]
       << " components): " << v["cohomology_preserved"] << "\n"
       << "check 4 (" << str(v["cr_note"]) << "): " << v["cr_ok"] << "\n";
    for (const char* k : {"prefix_suffix_failure", "disjoint_failure"})
        if (!v[k].get<std::string>().empty()) os << "  " << str(v[k]) << "\n";
    return os.str();
}

fs::path default_cover_path(const fs::path& input) {
    fs::path out = input;
    out.replace_extension();
    return fs::path(out.string() + ".cover.json");
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream o(path, std::ios::binary);
    if (!o) throw ParseError("cannot write " + path.string());
    o << text;
}

Outcome cover_outcome(const CoverResult& r, const CoverOptions& opt, const std::optional<fs::path>& out) {
    auto v = validate_cover(r, opt.max_word_length);
    Outcome o;
    o.json = to_json(r, v);
    if (out) {
        write_file(*out, to_json(r.cover).dump(2) + "\n");
        o.json["written"] = out->filename().string();
    }
    std::ostringstream os;
    for (std::size_t x = 0; x < r.cover.size(); ++x)
        os << r.cover.name(static_cast<Letter>(x)) << " -> " << r.cover.format(r.cover.rule(static_cast<Letter>(x)))
           << "\n";
    for (const auto& a : r.anchor_violations) os << "anchor violation " << a << "\n";
    os << render_validation(o.json["validation"]);
    o.text = os.str();
    return o;
}

}  // namespace

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e)) return kExitParse;
    if (dynamic_cast<const nlohmann::json::exception*>(&e)) return kExitParse;
    return kExitPrecondition;
}

IntMatrix parse_matrix(const std::string& text) {
    auto doc = parse_json(text, "matrix");
    if (!doc.is_array() || doc.empty()) throw ParseError("matrix must be a nonempty array of rows");
    IntMatrix m(doc.size(), doc[0].size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        if (!doc[i].is_array() || doc[i].size() != doc[0].size()) throw ParseError("matrix rows must have equal length");
        for (std::size_t j = 0; j < doc[i].size(); ++j) {
            if (!doc[i][j].is_number_integer()) throw ParseError("matrix entries must be integers");
            m(i, j) = doc[i][j].get<long>();
        }
    }
    return m;
}

Outcome cmd_analyze(const fs::path& path, const AnalysisOptions& opt) {
    Outcome o;
    o.json = analyze(load_substitution(path), opt);
    o.text = render_analysis(o.json);
    return o;
}

Outcome cmd_cover(const fs::path& spec_path, const CoverOptions& opt) {
    auto spec = cover_spec_from_json(parse_json(read_text(spec_path), spec_path.string()));
    auto r = build_triple_cover(spec, CoverMode::Record);
    return cover_outcome(r, opt, opt.out.value_or(default_cover_path(spec_path)));
}

Outcome cmd_example4(const IntMatrix& m0, std::optional<unsigned> k, const CoverOptions& opt) {
    auto ex = example4_generator(m0, k);
    Outcome o = cover_outcome(ex.cover, opt, opt.out);
    Json cover = o.json;
    o.json = to_json(ex);
    o.json["cover"] = cover;
    std::ostringstream os;
    os << "k = " << ex.k << ", rank M2 = " << ex.rank_m2 << ", kernel dim = " << ex.kernel_dim
       << ", char poly divides: " << ex.charpoly_divides << ", blocks: " << ex.block_structure
       << ", padding balanced: " << ex.padding_balanced << ", dim H1 = d: " << ex.dim_equals_d << "\n";
    o.text = os.str() + o.text;
    return o;
}

Outcome cmd_corpus(const fs::path& dir, const AnalysisOptions& opt) {
    if (!fs::is_directory(dir)) throw ParseError(dir.string() + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    Outcome o;
    Json entries = Json::array();
    std::set<std::string> names;
    std::size_t mismatches = 0;
    std::ostringstream table;
    table << "name | d | dim_h1 | cr | verdicts\n";
    for (const auto& f : files) {
        auto doc = parse_json(read_text(f), f.string());
        if (!doc.is_object() || !doc.contains("name")) throw ParseError(f.string() + ": corpus entry needs a name");
        const std::string name = doc["name"].get<std::string>();
        if (!names.insert(name).second) throw ValidationError("duplicate corpus name " + name);
        Substitution s = doc.contains("cover") ? build_triple_cover(cover_spec_from_json(doc["cover"])).cover
                                               : substitution_from_json(doc.at("substitution"));
        AnalysisOptions eo = opt;
        if (doc.contains("options")) {
            const auto& op = doc["options"];
            eo.assert_lattices_equal = op.value("assert_lattices_equal", eo.assert_lattices_equal);
            eo.max_word_length = op.value("max_word_length", eo.max_word_length);
        }
        Json report = analyze(s, eo);
        Json diff = Json::array();
        if (doc.contains("expected"))
            for (const auto& [ptr, want] : doc["expected"].items()) {
                Json actual = nullptr;
                try {
                    actual = report.at(Json::json_pointer(ptr));
                } catch (const nlohmann::json::exception&) {
                }
                Json expected = Json::parse(want.dump());
                if (actual != expected) diff.push_back(Json{{"pointer", ptr}, {"expected", expected}, {"actual", actual}});
            }
        mismatches += diff.size();
        Json cr = report.contains("coincidence") ? report["coincidence"]["rank"]["cr"] : Json(nullptr);
        entries.push_back(Json{{"name", name},
                               {"d", report["pisot"]["degree"]},
                               {"dim_h1", report["cohomology"]["dim_h1"]},
                               {"cr", cr},
                               {"verdicts", report["verdicts"]},
                               {"mismatches", diff},
                               {"report", report}});
        table << name << " | " << report["pisot"]["degree"] << " | " << report["cohomology"]["dim_h1"] << " | "
              << (cr.is_null() ? "-" : cr.dump()) << " |";
        for (const auto& [k, v] : report["verdicts"].items()) table << " " << k << "=" << str(v);
        table << "\n";
        for (const auto& d : diff)
            table << "  MISMATCH " << str(d["pointer"]) << ": expected " << d["expected"].dump() << ", got "
                  << d["actual"].dump() << "\n";
    }
    o.json = Json{{"entries", entries}, {"total", files.size()}, {"mismatches", mismatches}};
    o.text = table.str();
    o.exit_code = mismatches == 0 ? kExitOk : kExitMismatch;
    return o;
}

Outcome cmd_erp(const fs::path& path, std::size_t num_patches, std::size_t sample_len) {
    Substitution s = load_substitution(path);
    auto e = verify_erp(s, num_patches, sample_len);
    Outcome o;
    o.json = to_json(e, s);
    std::ostringstream os;
    for (const auto& f : o.json["fits"]) {
        os << str(f["patch"]) << ": alpha = (";
        for (std::size_t i = 0; i < f["alphas"].size(); ++i) os << (i ? ", " : "") << str(f["alphas"][i]);
        os << "), residual zero " << f["residual_zero"] << ", samples " << f["sample_count"] << "\n";
    }
    os << e.verdict << "\n";
    o.text = os.str();
    return o;
}

Outcome cmd_measure(const fs::path& path, const std::vector<std::string>& patches, std::size_t max_word_length,
                    bool assert_lattices_equal, unsigned precision_bits) {
    Substitution s = load_substitution(path);
    std::vector<Word> words;
    for (const auto& p : patches) words.push_back(s.parse_word(p));
    if (words.empty())
        for (std::size_t len = 1; len <= std::max<std::size_t>(max_word_length, 1); ++len)
            for (auto& w : words_of_length(s, len)) words.push_back(std::move(w));
    Outcome o;
    o.json = measure_report(s, words, assert_lattices_equal, precision_bits);
    std::ostringstream os;
    for (const auto& m : o.json["measures"])
        os << "mu(" << str(m["patch"]) << ") = " << str(m["canonical"]["q"]["string"]) << " / (a0^"
           << m["canonical"]["k"] << " p'(L)) ~ " << str(m["value"]["approx"])
           << (m["rational"].is_null() ? "" : " = " + str(m["rational"])) << ", thm10 " << str(m["thm10"]) << "\n";
    o.text = os.str();
    return o;
}

Outcome cmd_cr(const fs::path& path) {
    Substitution s = load_substitution(path);
    Outcome o;
    o.json = coincidence_report(s);
    auto crc = crc_check(s);
    o.json["crc"] = to_json(crc);
    std::ostringstream os;
    os << "cr = " << o.json["rank"]["cr"] << " (semigroup size " << o.json["rank"]["semigroup_size"] << ")\n"
       << "crc: " << to_string(crc.crc) << ", cr != 2 consistency: " << to_string(crc.thm13);
    if (!crc.note.empty()) os << " (" << crc.note << ")";
    os << "\n";
    o.text = os.str();
    return o;
}

}  // namespace hpisot::cli

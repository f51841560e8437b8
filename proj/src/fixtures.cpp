#include "lue/fixtures.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <sys/stat.h>

using json = nlohmann::json;

namespace lue {

CorrelatorValue CorrelatorFixture::corrected() const {
    CorrelatorValue v = printed;
    if (erratum_const)
        v.num -= MultiPoly(*erratum_const) * blocks_expand(printed.den);
    return v;
}

std::map<int, WLaur> ExpansionFixture::corrected() const {
    if (spurious) return corrected_rows;
    std::map<int, WLaur> out = rows;
    for (const auto& [n, err] : errata) {
        WLaur fixed = out[n] - err;
        if (fixed.is_zero()) out.erase(n);
        else out[n] = fixed;
    }
    return out;
}

static bool dir_exists(const std::string& p) {
    struct stat st {};
    return ::stat(p.c_str(), &st) == 0 && S_ISDIR(st.st_mode);
}

std::string data_dir() {
    if (const char* env = std::getenv("LUE_DATA_DIR"); env && *env) return env;
#ifdef LUE_SOURCE_DATA_DIR
    if (dir_exists(LUE_SOURCE_DATA_DIR)) return LUE_SOURCE_DATA_DIR;
#endif
    return "data";
}

static json load_json(const std::string& name) {
    const std::string path = data_dir() + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("fixtures: cannot open " + path);
    // the files start with // comment headers
    return json::parse(in, nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/true);
}

static std::vector<int> int_list(const json& a) {
    std::vector<int> v;
    for (const auto& x : a) v.push_back(x.get<int>());
    return v;
}

static WLaur wlaur_from_terms(const json& terms) {
    WLaur row;
    for (const auto& t : terms)
        row.add(t.at(0).get<int>(), Rat(t.at(1).get<long>()));
    return row;
}

std::vector<CorrelatorFixture> load_correlator_fixtures() {
    const json doc = load_json("appendix_correlators.json");
    std::vector<CorrelatorFixture> out;
    for (const auto& e : doc) {
        CorrelatorFixture f;
        f.key = int_list(e.at("key"));
        BlockVec den;
        for (const auto& j : e.at("den")) den[j.get<int>()]++;
        f.printed = CorrelatorValue(poly_parse(e.at("num").get<std::string>()), den);
        if (e.contains("erratum_const"))
            f.erratum_const = e.at("erratum_const").get<long>();
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<ExpansionFixture> load_expansion_fixtures() {
    const json doc = load_json("appendix_expansions.json");
    std::vector<ExpansionFixture> out;
    for (const auto& e : doc) {
        ExpansionFixture f;
        f.key = int_list(e.at("key"));
        f.floor = e.at("floor").get<int>();
        f.exact = e.at("exact").get<bool>();
        f.spurious = e.value("spurious", false);
        for (const auto& r : e.at("rows"))
            f.rows[r.at("n").get<int>()] = wlaur_from_terms(r.at("terms"));
        if (e.contains("errata"))
            for (const auto& r : e.at("errata"))
                f.errata[r.at("n").get<int>()] = wlaur_from_terms(r.at("terms"));
        if (e.contains("corrected_rows"))
            for (const auto& r : e.at("corrected_rows"))
                f.corrected_rows[r.at("n").get<int>()] = wlaur_from_terms(r.at("terms"));
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<HurwitzFixture> load_hurwitz_fixtures() {
    const json doc = load_json("appendix_hurwitz.json");
    std::vector<HurwitzFixture> out;
    for (const auto& e : doc) {
        HurwitzFixture f;
        const std::string flavor = e.at("flavor").get<std::string>();
        if (flavor == "strict") f.flavor = MonotoneFlavor::Strict;
        else if (flavor == "weak") f.flavor = MonotoneFlavor::Weak;
        else throw std::runtime_error("fixtures: bad flavor " + flavor);
        f.mu = int_list(e.at("mu"));
        f.g = e.at("g").get<int>();
        f.s = e.at("s").get<int>();
        // values exceed 2^64; stored as decimal strings
        f.value = Int(e.at("value").get<std::string>(), 10);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<std::vector<int>> hurwitz_fixture_mus(const std::vector<HurwitzFixture>& all,
                                                  MonotoneFlavor flavor) {
    std::vector<std::vector<int>> mus;
    for (const auto& f : all) {
        if (f.flavor != flavor) continue;
        bool seen = false;
        for (const auto& m : mus)
            if (m == f.mu) { seen = true; break; }
        if (!seen) mus.push_back(f.mu);
    }
    return mus;
}

} // namespace lue

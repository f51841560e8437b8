// lue — exact Laguerre-ensemble connected correlators, weighted monotone
// Hurwitz tables, brute-force oracles, the Hodge-side combinations, and the
// named verification suites, from one binary.
//
// Output is deterministic (canonical term order, no timestamps). Formats:
// json (default; schema {"request","result","provenance":{"order_margin"}}),
// csv, latex, plain. Exit codes: 0 success, 1 verification failure, 2 usage.

#include "lue/checks.hpp"
#include "lue/hodge.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace lue;

namespace {

enum class Fmt { Json, Csv, Latex, Plain };

Fmt to_fmt(const std::string& s) {
    if (s == "csv") return Fmt::Csv;
    if (s == "latex") return Fmt::Latex;
    if (s == "plain") return Fmt::Plain;
    return Fmt::Json;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void emit_json(json request, json result, int order_margin) {
    json doc;
    doc["request"] = std::move(request);
    doc["result"] = std::move(result);
    doc["provenance"] = json{{"order_margin", order_margin}};
    std::cout << doc.dump(2) << "\n";
}

std::vector<int> as_partition(std::vector<int> mu, const char* flag) {
    if (mu.empty()) throw std::invalid_argument(std::string(flag) + ": needs at least one part");
    for (int m : mu)
        if (m < 1) throw std::invalid_argument(std::string(flag) + ": parts must be positive");
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    return mu;
}

MonotoneFlavor as_flavor(const std::string& s) {
    return s == "weak" ? MonotoneFlavor::Weak : MonotoneFlavor::Strict;
}

void parse_eval(const std::string& s, Rat& N0, Rat& alpha0) {
    bool haveN = false, haveA = false;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--eval: expected name=value, got '" + item + "'");
        std::string name = item.substr(0, eq), val = item.substr(eq + 1);
        try {
            if (name == "N") { N0 = rat_from_string(val); haveN = true; }
            else if (name == "alpha") { alpha0 = rat_from_string(val); haveA = true; }
            else throw std::invalid_argument("unknown variable '" + name + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("--eval: ") + e.what());
        }
    }
    if (!haveN || !haveA)
        throw std::invalid_argument("--eval: both N and alpha must be bound");
}

// ---------------------------------------------------------------------------

int run_correlator(const std::vector<int>& key_in, const std::string& eval_str, Fmt fmt,
                   int margin) {
    EngineOptions opt;
    opt.order_margin = margin;
    std::vector<int> key = canonical_key(key_in);
    CorrelatorValue v = connected_correlator(key, opt);

    const bool have_eval = !eval_str.empty();
    Rat N0, alpha0, value;
    if (have_eval) {
        parse_eval(eval_str, N0, alpha0);
        if (blocks_vanish_at(v.den, alpha0))
            throw std::invalid_argument("--eval: alpha=" + lue::to_string(alpha0) +
                                        " is a zero of the denominator " +
                                        blocks_to_string(v.den));
        value = v.eval(N0, alpha0);
    }

    switch (fmt) {
    case Fmt::Json: {
        json req{{"verb", "correlator"}, {"key", key}, {"format", "json"}, {"margin", margin}};
        if (have_eval)
            req["eval"] = json{{"N", lue::to_string(N0)}, {"alpha", lue::to_string(alpha0)}};
        json res{{"key", key},
                 {"num", poly_to_string(v.num)},
                 {"den", blocks_to_string(v.den)}};
        if (have_eval) res["value"] = lue::to_string(value);
        emit_json(req, res, margin);
        break;
    }
    case Fmt::Plain:
        std::cout << v.to_string() << "\n";
        if (have_eval)
            std::cout << "at N=" << lue::to_string(N0) << ", alpha=" << lue::to_string(alpha0)
                      << ": " << lue::to_string(value) << "\n";
        break;
    case Fmt::Latex:
        std::cout << v.to_string(true) << "\n";
        break;
    case Fmt::Csv:
        std::cout << "key,num,den" << (have_eval ? ",value" : "") << "\n";
        std::cout << csv_quote(join_ints(key)) << "," << csv_quote(poly_to_string(v.num)) << ","
                  << csv_quote(blocks_to_string(v.den));
        if (have_eval) std::cout << "," << csv_quote(lue::to_string(value));
        std::cout << "\n";
        break;
    }
    return 0;
}

int run_hurwitz(const std::string& flavor_str, const std::vector<int>& mu_in, int gmax, int smax,
                Fmt fmt) {
    MonotoneFlavor flavor = as_flavor(flavor_str);
    std::vector<int> mu = as_partition(mu_in, "--mu");
    if (flavor == MonotoneFlavor::Strict && smax > 0)
        throw std::invalid_argument("--smax: only meaningful with --flavor weak "
                                    "(the strict column range is determined by mu)");
    HurwitzTable t = flavor == MonotoneFlavor::Strict ? expand_strict(mu, gmax)
                                                      : expand_weak(mu, gmax, smax > 0 ? smax : -1);

    switch (fmt) {
    case Fmt::Json: {
        json req{{"verb", "hurwitz"}, {"flavor", flavor_str}, {"mu", mu},
                 {"gmax", gmax},      {"format", "json"}};
        if (smax > 0) req["smax"] = smax;
        json entries = json::array();
        for (int g = 0; g <= gmax; ++g)
            for (int s = 1; s <= t.smax; ++s)
                entries.push_back(json{{"g", g}, {"s", s}, {"H", lue::to_string(t.at(g, s))}});
        json res{{"flavor", flavor_str}, {"mu", mu}, {"smax", t.smax}, {"entries", entries}};
        emit_json(req, res, EngineOptions{}.order_margin);
        break;
    }
    case Fmt::Csv:
        std::cout << "g,s,H\n";
        for (int g = 0; g <= gmax; ++g)
            for (int s = 1; s <= t.smax; ++s)
                std::cout << g << "," << s << "," << lue::to_string(t.at(g, s)) << "\n";
        break;
    case Fmt::Plain: {
        std::cout << (flavor == MonotoneFlavor::Strict ? "strict" : "weak") << " mu=("
                  << join_ints(mu) << ")\n";
        std::cout << "g\\s";
        for (int s = 1; s <= t.smax; ++s) std::cout << "\t" << s;
        std::cout << "\n";
        for (int g = 0; g <= gmax; ++g) {
            std::cout << g;
            for (int s = 1; s <= t.smax; ++s) std::cout << "\t" << lue::to_string(t.at(g, s));
            std::cout << "\n";
        }
        break;
    }
    case Fmt::Latex: {
        std::cout << "\\begin{tabular}{c|" << std::string((size_t)t.smax, 'r') << "}\n";
        std::cout << "$g$";
        for (int s = 1; s <= t.smax; ++s) std::cout << " & $s=" << s << "$";
        std::cout << " \\\\\\hline\n";
        for (int g = 0; g <= gmax; ++g) {
            std::cout << g;
            for (int s = 1; s <= t.smax; ++s) std::cout << " & " << lue::to_string(t.at(g, s));
            std::cout << " \\\\\n";
        }
        std::cout << "\\end{tabular}\n";
        break;
    }
    }
    return 0;
}

int run_oracle_hurwitz(const std::string& flavor_str, const std::vector<int>& mu_in,
                       const std::vector<int>& nu_in, int g, Fmt fmt) {
    MonotoneFlavor flavor = as_flavor(flavor_str);
    std::vector<int> mu = as_partition(mu_in, "--mu");
    std::vector<int> nu = as_partition(nu_in, "--nu");
    Int h = hurwitz_brute(mu, nu, g, flavor);

    switch (fmt) {
    case Fmt::Json: {
        json req{{"verb", "oracle hurwitz"}, {"flavor", flavor_str}, {"mu", mu},
                 {"nu", nu},                 {"g", g},               {"format", "json"}};
        emit_json(req, json{{"h", lue::to_string(h)}}, 0);
        break;
    }
    case Fmt::Csv:
        std::cout << "flavor,mu,nu,g,h\n"
                  << flavor_str << "," << csv_quote(join_ints(mu)) << ","
                  << csv_quote(join_ints(nu)) << "," << g << "," << lue::to_string(h) << "\n";
        break;
    case Fmt::Plain:
        std::cout << lue::to_string(h) << "\n";
        break;
    case Fmt::Latex:
        std::cout << "$h^{" << (flavor == MonotoneFlavor::Strict ? ">" : "\\geq") << "}_{" << g
                  << "}((" << join_ints(mu) << ");(" << join_ints(nu)
                  << ")) = " << lue::to_string(h) << "$\n";
        break;
    }
    return 0;
}

int run_oracle_lue(const std::vector<int>& key_in, int N_small, Fmt fmt) {
    std::vector<int> key = canonical_key(key_in);
    UniRatFn o = lue_eigenvalue_oracle(key, N_small);

    switch (fmt) {
    case Fmt::Json: {
        json req{{"verb", "oracle lue"}, {"key", key}, {"N", N_small}, {"format", "json"}};
        emit_json(req, json{{"num", poly_to_string(o.num)}, {"den", poly_to_string(o.den)}}, 0);
        break;
    }
    case Fmt::Csv:
        std::cout << "key,N,num,den\n"
                  << csv_quote(join_ints(key)) << "," << N_small << ","
                  << csv_quote(poly_to_string(o.num)) << "," << csv_quote(poly_to_string(o.den))
                  << "\n";
        break;
    case Fmt::Plain:
        std::cout << "(" << poly_to_string(o.num) << ") / (" << poly_to_string(o.den) << ")\n";
        break;
    case Fmt::Latex:
        std::cout << "\\frac{" << poly_to_string(o.num, true) << "}{" << poly_to_string(o.den, true)
                  << "}\n";
        break;
    }
    return 0;
}

int run_oracle_gue(const std::vector<int>& key_in, Fmt fmt) {
    std::vector<int> key = as_partition(key_in, "-k");
    MultiPoly p = gue_even_oracle(key);

    switch (fmt) {
    case Fmt::Json: {
        json req{{"verb", "oracle gue"}, {"key", key}, {"format", "json"}};
        emit_json(req, json{{"value", poly_to_string(p)}}, 0);
        break;
    }
    case Fmt::Csv:
        std::cout << "key,value\n"
                  << csv_quote(join_ints(key)) << "," << csv_quote(poly_to_string(p)) << "\n";
        break;
    case Fmt::Plain:
        std::cout << poly_to_string(p) << "\n";
        break;
    case Fmt::Latex:
        std::cout << poly_to_string(p, true) << "\n";
        break;
    }
    return 0;
}

int run_hodge(const std::string& mode, const std::vector<int>& mu_in, int gmax, Fmt fmt) {
    std::vector<int> mu = as_partition(mu_in, "--mu");
    json req{{"verb", "hodge " + mode}, {"mu", mu}, {"format", "json"}};

    if (mode == "rhs") {
        HodgeSeries h = hodge_rhs(mu, gmax);
        req["gmax"] = gmax;
        switch (fmt) {
        case Fmt::Json: {
            json rows = json::array();
            for (const auto& [p, q] : h)
                rows.push_back(json{{"eps", p}, {"coeff", poly_to_string(q)}});
            emit_json(req, json{{"series", rows}}, EngineOptions{}.order_margin);
            break;
        }
        case Fmt::Csv:
            std::cout << "eps,coeff\n";
            for (const auto& [p, q] : h)
                std::cout << p << "," << csv_quote(poly_to_string(q)) << "\n";
            break;
        case Fmt::Plain:
            for (const auto& [p, q] : h)
                std::cout << "eps^" << p << ": " << poly_to_string(q) << "\n";
            break;
        case Fmt::Latex:
            for (const auto& [p, q] : h)
                std::cout << "\\epsilon^{" << p << "}\\left(" << poly_to_string(q, true)
                          << "\\right)\\\\\n";
            break;
        }
        return 0;
    }

    if (mode == "genus0") {
        MultiPoly p = hodge_genus0(mu);
        switch (fmt) {
        case Fmt::Json:
            emit_json(req, json{{"value", poly_to_string(p)}}, EngineOptions{}.order_margin);
            break;
        case Fmt::Csv:
            std::cout << "mu,value\n"
                      << csv_quote(join_ints(mu)) << "," << csv_quote(poly_to_string(p)) << "\n";
            break;
        case Fmt::Plain:
            std::cout << poly_to_string(p) << "\n";
            break;
        case Fmt::Latex:
            std::cout << poly_to_string(p, true) << "\n";
            break;
        }
        return 0;
    }

    // elsv: the binomial bracket at a single genus (taken from --gmax)
    ElsvCombination e = elsv_combination(mu, gmax);
    req["g"] = gmax;
    switch (fmt) {
    case Fmt::Json:
        emit_json(req,
                  json{{"hurwitz_side", lue::to_string(e.hurwitz_side)},
                       {"predicted_integral", lue::to_string(e.predicted_integral)}},
                  EngineOptions{}.order_margin);
        break;
    case Fmt::Csv:
        std::cout << "mu,g,hurwitz_side,predicted_integral\n"
                  << csv_quote(join_ints(mu)) << "," << gmax << ","
                  << lue::to_string(e.hurwitz_side) << "," << lue::to_string(e.predicted_integral)
                  << "\n";
        break;
    case Fmt::Plain:
        std::cout << "hurwitz_side = " << lue::to_string(e.hurwitz_side) << "\n"
                  << "predicted_integral = " << lue::to_string(e.predicted_integral) << "\n";
        break;
    case Fmt::Latex:
        std::cout << "$" << lue::to_string(e.hurwitz_side) << "$ / $"
                  << lue::to_string(e.predicted_integral) << "$\n";
        break;
    }
    return 0;
}

int run_check(const std::string& suite, Fmt fmt) {
    std::vector<CheckReport> reports = run_checks(suite);
    bool all_ok = true;
    for (const auto& rep : reports) all_ok = all_ok && rep.ok();

    switch (fmt) {
    case Fmt::Json: {
        json req{{"verb", "check"}, {"suite", suite}, {"format", "json"}};
        json suites = json::array();
        for (const auto& rep : reports) {
            json items = json::array();
            for (const auto& it : rep.items)
                items.push_back(json{{"name", it.name}, {"ok", it.ok}, {"detail", it.detail}});
            suites.push_back(json{{"suite", rep.suite}, {"ok", rep.ok()}, {"items", items}});
        }
        emit_json(req, json{{"ok", all_ok}, {"suites", suites}},
                  EngineOptions{}.order_margin);
        break;
    }
    case Fmt::Csv:
        std::cout << "suite,item,ok,detail\n";
        for (const auto& rep : reports)
            for (const auto& it : rep.items)
                std::cout << rep.suite << "," << csv_quote(it.name) << ","
                          << (it.ok ? "ok" : "FAIL") << "," << csv_quote(it.detail) << "\n";
        break;
    case Fmt::Plain:
        for (const auto& rep : reports)
            for (const auto& it : rep.items) {
                std::cout << (it.ok ? "ok   " : "FAIL ") << rep.suite << ": " << it.name;
                if (!it.detail.empty()) {
                    if (it.ok) std::cout << "  [" << it.detail << "]";
                    else {
                        std::string d = it.detail;
                        size_t pos = 0;
                        while ((pos = d.find('\n', pos)) != std::string::npos)
                            d.replace(pos, 1, "\n      "), pos += 7;
                        std::cout << "\n      " << d;
                    }
                }
                std::cout << "\n";
            }
        std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
        break;
    case Fmt::Latex:
        std::cout << "\\begin{tabular}{llc}\n";
        for (const auto& rep : reports)
            for (const auto& it : rep.items)
                std::cout << rep.suite << " & " << it.name << " & "
                          << (it.ok ? "\\checkmark" : "\\times") << " \\\\\n";
        std::cout << "\\end{tabular}\n";
        break;
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Laguerre-ensemble correlators and weighted monotone Hurwitz numbers"};
    app.require_subcommand(1);
    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json|csv|latex|plain")
            ->check(CLI::IsMember({"json", "csv", "latex", "plain"}));
    };

    // correlator
    auto* c = app.add_subcommand("correlator", "connected correlator for integer keys");
    std::vector<int> key;
    std::string eval_str;
    int margin = EngineOptions{}.order_margin;
    c->add_option("-k,--key", key, "nonzero integer exponents, e.g. -k 2,2 or --key=-3,3")
        ->required()
        ->delimiter(',');
    c->add_option("--eval", eval_str, "substitute after the symbolic computation, e.g. N=3,alpha=1/2");
    c->add_option("--margin", margin, "extra truncation orders kept by the engine")
        ->check(CLI::NonNegativeNumber);
    add_format(c);

    // hurwitz
    auto* h = app.add_subcommand("hurwitz", "weighted monotone double Hurwitz table H_g(mu;s)");
    std::string flavor;
    std::vector<int> mu;
    int gmax = 0, smax = 0;
    h->add_option("--flavor", flavor, "strict|weak")
        ->required()
        ->check(CLI::IsMember({"strict", "weak"}));
    h->add_option("--mu", mu, "partition, e.g. --mu 3,1")->required()->delimiter(',');
    h->add_option("--gmax", gmax, "genus rows 0..gmax")->required()->check(CLI::NonNegativeNumber);
    h->add_option("--smax", smax, "column range for the weak table (default |mu|)")
        ->check(CLI::PositiveNumber);
    add_format(h);

    // oracle {hurwitz, lue, gue}
    auto* o = app.add_subcommand("oracle", "brute-force ground-truth computations");
    o->require_subcommand(1);
    auto* oh = o->add_subcommand("hurwitz", "monotone factorization count h_g(mu;nu)");
    std::vector<int> nu;
    int g = 0;
    oh->add_option("--flavor", flavor, "strict|weak")
        ->required()
        ->check(CLI::IsMember({"strict", "weak"}));
    oh->add_option("--mu", mu, "partition")->required()->delimiter(',');
    oh->add_option("--nu", nu, "partition")->required()->delimiter(',');
    oh->add_option("--g", g, "genus")->required()->check(CLI::NonNegativeNumber);
    add_format(oh);
    auto* ol = o->add_subcommand("lue", "eigenvalue-integral connected correlator at small N");
    int N_small = 1;
    ol->add_option("-k,--key", key, "nonzero integer exponents")->required()->delimiter(',');
    ol->add_option("--N", N_small, "matrix size")->required()->check(CLI::Range(1, 3));
    add_format(ol);
    auto* og = o->add_subcommand("gue", "Wick-pairing connected moment, even couplings");
    og->add_option("-k,--key", key, "positive even exponents")->required()->delimiter(',');
    add_format(og);

    // hodge {rhs, genus0, elsv}
    auto* hd = app.add_subcommand("hodge", "Hurwitz side of the Hodge correspondence");
    hd->require_subcommand(1);
    int hodge_gmax = 1;
    for (const char* m : {"rhs", "genus0", "elsv"}) {
        auto* sub = hd->add_subcommand(m);
        sub->add_option("--mu", mu, "partition")->required()->delimiter(',');
        if (std::string(m) != "genus0")
            sub->add_option("--gmax", hodge_gmax, "genus bound (or the single genus for elsv)")
                ->check(CLI::NonNegativeNumber);
        add_format(sub);
    }

    // check
    auto* ck = app.add_subcommand("check", "run a named verification suite");
    std::string suite;
    ck->add_option("suite", suite, "all|recursions|projector|symmetry|virasoro|parity|"
                                   "integrality|fixtures|factorization|hodge")
        ->required()
        ->check(CLI::IsMember({"all", "recursions", "projector", "symmetry", "virasoro", "parity",
                               "integrality", "fixtures", "factorization", "hodge"}));
    add_format(ck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems land here
    }

    try {
        Fmt fmt = to_fmt(format);
        if (c->parsed()) return run_correlator(key, eval_str, fmt, margin);
        if (h->parsed()) return run_hurwitz(flavor, mu, gmax, smax, fmt);
        if (o->parsed()) {
            if (oh->parsed()) return run_oracle_hurwitz(flavor, mu, nu, g, fmt);
            if (ol->parsed()) return run_oracle_lue(key, N_small, fmt);
            return run_oracle_gue(key, fmt);
        }
        if (hd->parsed()) {
            std::string mode = hd->get_subcommands().front()->get_name();
            return run_hodge(mode, mu, hodge_gmax, fmt);
        }
        return run_check(suite, fmt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const TruncationError& e) {
        std::cerr << "error: " << e.what() << " (see --margin)\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// Command-line front end: normal forms, antipodes, basis conversion,
// dimension tables, and the verification suites, with JSON or TSV output and
// a persistent Adem cache.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "steenrod/adem_cache.hpp"
#include "steenrod/basis_theorem.hpp"
#include "steenrod/expr.hpp"
#include "steenrod/milnor.hpp"
#include "steenrod/parallel.hpp"
#include "steenrod/quotients.hpp"
#include "steenrod/thom_sw.hpp"

using nlohmann::json;
using namespace steenrod;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
    int max_degree = 56;
    std::string module = "bo";
    std::string format = "tsv";
    std::string cache_path;
    int jobs = 1;
};

std::string resolve_cache_path(const std::string& flag_value) {
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("STEENROD_ADEM_CACHE"))
        return env;
    return {};
}

struct CacheSession {
    std::string path;
    int cap = 0;

    void open(const std::string& resolved) {
        path = resolved;
        if (path.empty())
            return;
        AdemCacheLoad load = load_adem_cache(path);
        if (!load.loaded && !load.warning.empty())
            std::cerr << "warning: " << load.warning << "\n";
    }
    void note_degree(int d) { cap = std::max(cap, d); }
    void close() {
        if (path.empty())
            return;
        std::string error;
        if (!save_adem_cache(path, cap, &error))
            std::cerr << "warning: " << error << "\n";
    }
};

json seq_list_json(const std::vector<Seq>& seqs) {
    json out = json::array();
    for (const Seq& s : seqs)
        out.push_back(sq_string(s));
    return out;
}

json report_json(const BasisReport& r) {
    return json{{"module", r.module},       {"degree", r.degree}, {"count", r.count},
                {"quotient_dim", r.quotient_dim}, {"rank", r.rank},     {"spanning", r.spanning},
                {"pass", r.pass},           {"candidates", seq_list_json(r.candidates)}};
}

void print_reports(const std::vector<BasisReport>& reports, const std::string& format) {
    if (format == "json") {
        json out = json::array();
        for (const BasisReport& r : reports)
            out.push_back(report_json(r));
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "degree\tcount\tdim\trank\tverdict\n";
    for (const BasisReport& r : reports)
        std::cout << r.degree << '\t' << r.count << '\t' << r.quotient_dim << '\t' << r.rank << '\t'
                  << (r.pass ? "pass" : "FAIL") << "\n";
}

// Admissible J = (head, ...) of degree <= cap, head fixed.
std::vector<Seq> headed_sequences(int head, int degree_cap) {
    std::vector<Seq> out;
    for (int d = head; d <= degree_cap; ++d)
        for (const Seq& tail : enumerate_admissible_capped(d - head, head / 2, nullptr, 1)) {
            Seq j{head};
            j.insert(j.end(), tail.begin(), tail.end());
            out.push_back(std::move(j));
        }
    return out;
}

int run_suite_theorem(const Config& cfg, CacheSession& cache, const std::string& module) {
    SubalgebraSpec spec = module == "bo" ? SubalgebraSpec::a(1) : SubalgebraSpec::e1();
    QuotientContext ctx(spec, cfg.max_degree);
    ctx.prepare_all(cfg.jobs);
    cache.note_degree(cfg.max_degree);
    std::vector<BasisReport> reports;
    bool pass = true;
    for (int d = 0; d <= cfg.max_degree; ++d) {
        reports.push_back(verify_theorem(ctx, module, d));
        pass = pass && reports.back().pass;
    }
    std::vector<std::pair<int, bool>> suffix;
    if (module == "bu") {
        for (int d = 0; d <= std::min(40, cfg.max_degree); ++d) {
            suffix.emplace_back(d, verify_suffix_basis(ctx, d));
            pass = pass && suffix.back().second;
        }
    }
    if (cfg.format == "json") {
        json out{{"suite", "theorem-" + module}, {"pass", pass}};
        out["reports"] = json::array();
        for (const BasisReport& r : reports)
            out["reports"].push_back(report_json(r));
        if (module == "bu") {
            out["suffix_basis"] = json::array();
            for (auto [d, ok] : suffix)
                out["suffix_basis"].push_back(json{{"degree", d}, {"pass", ok}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        print_reports(reports, cfg.format);
        for (auto [d, ok] : suffix)
            std::cout << "suffix\t" << d << '\t' << (ok ? "pass" : "FAIL") << "\n";
    }
    for (const BasisReport& r : reports)
        if (!r.pass)
            std::cerr << "FAIL " << module << " degree " << r.degree << ": count " << r.count << ", dim "
                      << r.quotient_dim << ", rank " << r.rank << "\n";
    return pass ? kExitPass : kExitFail;
}

int run_suite_prop_basic(const Config& cfg, CacheSession& cache, int a_max, int b_max, int degree_cap) {
    cache.note_degree(a_max + degree_cap);
    PropBasicResult res = check_prop_basic(a_max, b_max, degree_cap, std::min(b_max, 12));
    if (cfg.format == "json") {
        json out{{"suite", "prop-basic"},
                 {"pass", res.pass},
                 {"checked", res.checked},
                 {"attained", res.attained},
                 {"not_attained", res.not_attained}};
        out["violations"] = json::array();
        for (const auto& [a, b, seq] : res.violations)
            out["violations"].push_back(json{{"a", a}, {"b", b}, {"I", sq_string(seq)}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "checked\t" << res.checked << "\nverdict\t" << (res.pass ? "pass" : "FAIL") << "\n";
    }
    for (const auto& [a, b, seq] : res.violations)
        std::cerr << "FAIL bound: a=" << a << " b=" << b << " I=" << sq_string(seq) << "\n";
    for (int b : res.not_attained)
        std::cerr << "FAIL sharpness: bound 2b-1 not attained for b=" << b << "\n";
    return res.pass ? kExitPass : kExitFail;
}

int run_suite_prop_an(const Config& cfg, CacheSession& cache, int m_max_a1, int m_max_a2, int jobs) {
    bool pass = true;
    json cases = json::array();
    auto run_an = [&](int n, int m_max) {
        QuotientContext ctx(SubalgebraSpec::a(n), m_max + 1);
        std::vector<int> ms;
        for (int m = 1; m <= m_max; ++m)
            if (alpha(static_cast<std::uint64_t>(m)) <= n)
                ms.push_back(m);
        std::vector<int> degrees;
        for (int m : ms)
            degrees.push_back(m + 1);
        ctx.prepare(degrees, jobs);
        cache.note_degree(m_max + 1);
        for (int m : ms) {
            bool ok = verify_prop_an(ctx, m);
            pass = pass && ok;
            cases.push_back(json{{"n", n}, {"m", m}, {"pass", ok}});
            if (!ok)
                std::cerr << "FAIL prop-an: A(" << n << "), m=" << m << "\n";
            if (cfg.format != "json")
                std::cout << "A(" << n << ")\tm=" << m << '\t' << (ok ? "pass" : "FAIL") << "\n";
        }
    };
    run_an(1, m_max_a1);
    run_an(2, m_max_a2);
    if (cfg.format == "json")
        std::cout << json{{"suite", "prop-an"}, {"pass", pass}, {"cases", cases}}.dump(2) << "\n";
    return pass ? kExitPass : kExitFail;
}

int run_suite_stringk(const Config& cfg, CacheSession& cache, int n_max, int degree_cap, int jobs,
                      bool excess_form) {
    QuotientContext ctx(SubalgebraSpec::a(1), degree_cap);
    std::vector<int> degrees;
    for (int d = 0; d <= degree_cap; ++d)
        degrees.push_back(d);
    ctx.prepare(degrees, jobs);
    cache.note_degree(degree_cap);
    bool pass = true;
    json cases = json::array();
    std::optional<int> min_gap;
    for (int n = 0; n <= n_max; ++n) {
        int head = (1 << (n + 1)) + 1;
        for (const Seq& j : headed_sequences(head, degree_cap)) {
            if (excess_form) {
                ExcessLemmaResult res = verify_excess_lemma(ctx, n, j);
                pass = pass && res.pass;
                json c{{"n", n}, {"J", sq_string(j)}, {"pass", res.pass}};
                if (res.excess_gap) {
                    c["excess_gap"] = *res.excess_gap;
                    min_gap = min_gap ? std::min(*min_gap, *res.excess_gap) : *res.excess_gap;
                }
                cases.push_back(c);
                if (!res.pass)
                    std::cerr << "FAIL excess: n=" << n << " J=" << sq_string(j) << "\n";
                if (cfg.format != "json")
                    std::cout << "n=" << n << '\t' << sq_string(j) << '\t' << (res.pass ? "pass" : "FAIL")
                              << (res.excess_gap ? "\tgap=" + std::to_string(*res.excess_gap) : "")
                              << "\n";
            } else {
                StringkResult res = verify_stringk(ctx, n, j);
                pass = pass && res.pass;
                cases.push_back(
                    json{{"n", n}, {"J", sq_string(j)}, {"pass", res.pass}, {"strengthened", res.strengthened}});
                if (!res.pass)
                    std::cerr << "FAIL stringk: n=" << n << " J=" << sq_string(j) << "\n";
                if (cfg.format != "json")
                    std::cout << "n=" << n << '\t' << sq_string(j) << '\t' << (res.pass ? "pass" : "FAIL")
                              << '\t' << (res.strengthened ? "strong" : "-") << "\n";
            }
        }
    }
    if (cfg.format == "json") {
        json out{{"suite", excess_form ? "excess" : "stringk"}, {"pass", pass}, {"cases", cases}};
        if (excess_form && min_gap)
            out["min_excess_gap"] = *min_gap;
        std::cout << out.dump(2) << "\n";
    } else if (excess_form && min_gap) {
        std::cout << "min_excess_gap\t" << *min_gap << "\n";
    }
    return pass ? kExitPass : kExitFail;
}

int run_suite_induction(const Config& cfg, CacheSession& cache, int n_max, int degree_cap, int jobs) {
    QuotientContext ctx(SubalgebraSpec::a(1), degree_cap);
    std::vector<int> degrees;
    for (int d = 0; d <= degree_cap; ++d)
        degrees.push_back(d);
    ctx.prepare(degrees, jobs);
    cache.note_degree(degree_cap);
    bool pass = true;
    json cases = json::array();
    for (int n = 0; n <= n_max; ++n) {
        int head = (1 << (n + 1)) + 1;
        for (const Seq& j : headed_sequences(head, degree_cap)) {
            if (j.size() < 2)
                continue;  // the induction needs a nonempty tail
            Seq tail(j.begin() + 1, j.end());
            bool ok = verify_induction(ctx, n, tail);
            pass = pass && ok;
            cases.push_back(json{{"n", n}, {"tail", sq_string(tail)}, {"pass", ok}});
            if (!ok)
                std::cerr << "FAIL induction: n=" << n << " tail=" << sq_string(tail) << "\n";
            if (cfg.format != "json")
                std::cout << "n=" << n << '\t' << sq_string(tail) << '\t' << (ok ? "pass" : "FAIL") << "\n";
        }
    }
    if (cfg.format == "json")
        std::cout << json{{"suite", "induction"}, {"pass", pass}, {"cases", cases}}.dump(2) << "\n";
    return pass ? kExitPass : kExitFail;
}

int run_suite_thom(const Config& cfg, CacheSession& cache, int degree_cap) {
    cache.note_degree(degree_cap);
    bool pass = true;
    long long checked = 0;
    json failures = json::array();
    for (int d = 0; d <= degree_cap; ++d)
        for (const Seq& seq : admissible_basis(d)) {
            if (seq.empty())
                continue;
            ++checked;
            if (!verify_thom_lemma(seq)) {
                pass = false;
                failures.push_back(sq_string(seq));
                std::cerr << "FAIL thom-lemma: I=" << sq_string(seq) << "\n";
            }
        }
    // Reference chain for the monomial order.
    SWMonomial m1 = SWMonomial::w(4);
    SWMonomial m2 = SWMonomial::w(4) * SWMonomial::w(1, 2);
    SWMonomial m3 = SWMonomial::w(4) * SWMonomial::w(2) * SWMonomial::w(1);
    SWMonomial m4 = SWMonomial::w(4) * SWMonomial::w(3);
    bool chain = monomial_order(m1, m2) == std::strong_ordering::less &&
                 monomial_order(m2, m3) == std::strong_ordering::less &&
                 monomial_order(m3, m4) == std::strong_ordering::less;
    pass = pass && chain;
    if (!chain)
        std::cerr << "FAIL thom-lemma: monomial order chain w4 < w4 w1^2 < w4 w2 w1 < w4 w3\n";
    if (cfg.format == "json")
        std::cout << json{{"suite", "thom-lemma"},
                          {"pass", pass},
                          {"checked", checked},
                          {"order_chain", chain},
                          {"failures", failures}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "checked\t" << checked << "\norder_chain\t" << (chain ? "pass" : "FAIL")
                  << "\nverdict\t" << (pass ? "pass" : "FAIL") << "\n";
    return pass ? kExitPass : kExitFail;
}

int run_suite_bspin(const Config& cfg, int max_k, int max_n) {
    BSpinReport report = verify_bspin_formulas(max_k, max_n);
    if (cfg.format == "json") {
        json cases = json::array();
        for (const BSpinCase& c : report.cases)
            cases.push_back(json{{"case", c.label}, {"pass", c.pass}});
        std::cout << json{{"suite", "bspin"}, {"pass", report.pass}, {"cases", cases}}.dump(2) << "\n";
    } else {
        for (const BSpinCase& c : report.cases)
            std::cout << c.label << '\t' << (c.pass ? "pass" : "FAIL") << "\n";
    }
    for (const BSpinCase& c : report.cases)
        if (!c.pass)
            std::cerr << "FAIL bspin: " << c.label << "\n";
    return report.pass ? kExitPass : kExitFail;
}

int run_suite_degree49(const Config& cfg, CacheSession& cache, int jobs) {
    QuotientContext ctx(SubalgebraSpec::a(2), 49);
    ctx.prepare({49}, jobs);
    cache.note_degree(49);
    Degree49Report report = verify_degree49(ctx);
    if (cfg.format == "json")
        std::cout << json{{"suite", "degree49"},
                          {"pass", report.pass},
                          {"antipode_degree", report.antipode_degree},
                          {"antipode_terms", report.antipode_terms},
                          {"reduces_nonzero", report.reduces_nonzero},
                          {"conjecture_count", report.conjecture_count},
                          {"quotient_dim", report.quotient_dim}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "antipode_degree\t" << report.antipode_degree << "\nantipode_terms\t"
                  << report.antipode_terms << "\nreduces_nonzero\t" << (report.reduces_nonzero ? "yes" : "no")
                  << "\nconjecture_count\t" << report.conjecture_count << "\nquotient_dim\t"
                  << report.quotient_dim << "\nverdict\t" << (report.pass ? "pass" : "FAIL") << "\n";
    if (!report.reduces_nonzero)
        std::cerr << "FAIL degree49: antipode image reduces to zero\n";
    if (report.conjecture_count != 0)
        std::cerr << "FAIL degree49: conjectured pattern is nonempty in degree 49\n";
    return report.pass ? kExitPass : kExitFail;
}

int run_dims(const Config& cfg, CacheSession& cache) {
    if (cfg.module != "bo" && cfg.module != "bu") {
        std::cerr << "error: dims supports --module bo or bu\n";
        return kExitUsage;
    }
    SubalgebraSpec spec = cfg.module == "bo" ? SubalgebraSpec::a(1) : SubalgebraSpec::e1();
    QuotientContext ctx(spec, cfg.max_degree);
    ctx.prepare_all(cfg.jobs);
    cache.note_degree(cfg.max_degree);
    std::vector<long long> gf = cfg.module == "bo" ? gf_dims_bo(cfg.max_degree) : gf_dims_bu(cfg.max_degree);
    json rows = json::array();
    if (cfg.format != "json")
        std::cout << "degree\tcandidates\tgf_dim\tquotient_dim\n";
    for (int d = 0; d <= cfg.max_degree; ++d) {
        int count = static_cast<int>(
            (cfg.module == "bo" ? candidate_basis_bo(d) : candidate_basis_bu(d)).size());
        int qdim = ctx.quotient_dim(d);
        if (cfg.format == "json")
            rows.push_back(json{{"degree", d}, {"candidates", count}, {"gf_dim", gf[d]}, {"quotient_dim", qdim}});
        else
            std::cout << d << '\t' << count << '\t' << gf[d] << '\t' << qdim << "\n";
    }
    if (cfg.format == "json")
        std::cout << rows.dump(2) << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic calculator and verifier for the mod-2 Steenrod algebra"};
    app.require_subcommand(1);

    Config cfg;
    std::string cache_flag;
    app.add_option("--cache", cache_flag, "Adem cache file (also via STEENROD_ADEM_CACHE)");

    std::string expr;
    std::string to_basis;

    CLI::App* cmd_normalize = app.add_subcommand("normalize", "Print the admissible normal form");
    cmd_normalize->add_option("expr", expr, "element expression, e.g. 'Sq[2]*Sq[2]'")->required();

    CLI::App* cmd_antipode = app.add_subcommand("antipode", "Apply the antipode");
    cmd_antipode->add_option("expr", expr)->required();
    cmd_antipode->add_option("--to", to_basis, "output basis: admissible|milnor");

    CLI::App* cmd_convert = app.add_subcommand("convert", "Change of basis");
    cmd_convert->add_option("expr", expr)->required();
    cmd_convert->add_option("--to", to_basis, "output basis: admissible|milnor")->required();

    CLI::App* cmd_sw = app.add_subcommand("sw", "Steenrod action on Stiefel-Whitney polynomials");
    std::string sw_ops;
    std::string sw_model = "bo";
    cmd_sw->add_option("expr", expr, "polynomial, e.g. 'w[4]*w[2]^2 + w[8]'")->required();
    cmd_sw->add_option("--sq", sw_ops, "comma-separated word applied right to left, e.g. '2,1'");
    cmd_sw->add_option("--model", sw_model, "bo|bso (bso sets w_1 = 0)");

    CLI::App* cmd_dims = app.add_subcommand("dims", "Candidate counts and both dimension oracles");
    cmd_dims->add_option("--module", cfg.module, "bo|bu");
    cmd_dims->add_option("--max-degree", cfg.max_degree);
    cmd_dims->add_option("--format", cfg.format, "tsv|json");
    cmd_dims->add_option("--jobs", cfg.jobs);

    CLI::App* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    int a_max = 24, b_max = 24, basic_cap = 48;
    int m_max_a1 = 48, m_max_a2 = 40;
    int n_max = 3, degree_cap = -1;
    int k_max = 4;
    cmd_verify
        ->add_option("suite", suite,
                     "theorem-bo|theorem-bu|prop-basic|prop-an|stringk|induction|excess|thom-lemma|"
                     "bspin|degree49")
        ->required();
    cmd_verify->add_option("--max-degree", cfg.max_degree, "degree sweep cap (theorem suites)");
    cmd_verify->add_option("--a-max", a_max);
    cmd_verify->add_option("--b-max", b_max);
    cmd_verify->add_option("--m-max", m_max_a1, "prop-an cap for A(1); A(2) uses min(this, 40)");
    cmd_verify->add_option("--n-max", n_max);
    cmd_verify->add_option("--k-max", k_max);
    cmd_verify->add_option("--degree-cap", degree_cap);
    cmd_verify->add_option("--format", cfg.format, "tsv|json");
    cmd_verify->add_option("--jobs", cfg.jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    if (cfg.jobs < 1 || cfg.max_degree < 0) {
        std::cerr << "error: --jobs must be >= 1 and --max-degree >= 0\n";
        return kExitUsage;
    }

    CacheSession cache;
    cache.open(resolve_cache_path(cache_flag));

    try {
        if (cmd_normalize->parsed()) {
            ParsedElement parsed = parse_element(expr);
            std::cout << to_string(parsed.value) << "\n";
            cache.note_degree(parsed.value.degree);
            cache.close();
            return kExitPass;
        }
        if (cmd_antipode->parsed() || cmd_convert->parsed()) {
            ParsedElement parsed = parse_element(expr);
            Element value = parsed.value;
            if (cmd_antipode->parsed())
                value = antipode(value);
            bool milnor_out = to_basis.empty()
                                  ? (cmd_convert->parsed() ? false : parsed.saw_milnor && !parsed.saw_sq)
                                  : to_basis == "milnor";
            if (!to_basis.empty() && to_basis != "milnor" && to_basis != "admissible") {
                std::cerr << "error: --to must be admissible or milnor\n";
                return kExitUsage;
            }
            if (milnor_out)
                std::cout << to_string(admissible_to_milnor(value)) << "\n";
            else
                std::cout << to_string(value) << "\n";
            cache.note_degree(value.degree);
            cache.close();
            return kExitPass;
        }
        if (cmd_sw->parsed()) {
            if (sw_model != "bo" && sw_model != "bso") {
                std::cerr << "error: --model must be bo or bso\n";
                return kExitUsage;
            }
            SWModel model = sw_model == "bso" ? SWModel::bso : SWModel::bo;
            SWPolynomial p = parse_sw_polynomial(expr, model);
            if (!sw_ops.empty()) {
                Seq word;
                std::size_t pos = 0;
                while (pos < sw_ops.size()) {
                    std::size_t next = sw_ops.find(',', pos);
                    if (next == std::string::npos)
                        next = sw_ops.size();
                    word.push_back(std::stoi(sw_ops.substr(pos, next - pos)));
                    pos = next + 1;
                }
                p = sq_word_on_polynomial(word, p, model);
            }
            std::cout << to_string(p) << "\n";
            cache.close();
            return kExitPass;
        }
        if (cmd_dims->parsed()) {
            int code = run_dims(cfg, cache);
            cache.close();
            return code;
        }
        if (cmd_verify->parsed()) {
            int code;
            if (suite == "theorem-bo")
                code = run_suite_theorem(cfg, cache, "bo");
            else if (suite == "theorem-bu")
                code = run_suite_theorem(cfg, cache, "bu");
            else if (suite == "prop-basic")
                code = run_suite_prop_basic(cfg, cache, a_max, b_max,
                                            degree_cap > 0 ? degree_cap : basic_cap);
            else if (suite == "prop-an")
                code = run_suite_prop_an(cfg, cache, m_max_a1, std::min(m_max_a1, m_max_a2), cfg.jobs);
            else if (suite == "stringk")
                code = run_suite_stringk(cfg, cache, n_max, degree_cap > 0 ? degree_cap : 40, cfg.jobs,
                                         false);
            else if (suite == "excess")
                code = run_suite_stringk(cfg, cache, n_max, degree_cap > 0 ? degree_cap : 40, cfg.jobs,
                                         true);
            else if (suite == "induction")
                code = run_suite_induction(cfg, cache, n_max, degree_cap > 0 ? degree_cap : 36, cfg.jobs);
            else if (suite == "thom-lemma")
                code = run_suite_thom(cfg, cache, degree_cap > 0 ? degree_cap : 18);
            else if (suite == "bspin")
                code = run_suite_bspin(cfg, k_max, cmd_verify->count("--n-max") ? n_max : 4);
            else if (suite == "degree49")
                code = run_suite_degree49(cfg, cache, cfg.jobs);
            else {
                std::cerr << "error: unknown suite '" << suite << "'\n";
                return kExitUsage;
            }
            cache.close();
            return code;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " at position " << e.position << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

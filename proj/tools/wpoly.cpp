// wpoly: descent polynomials of labeled posets and their real-rootedness.

#include "wpoly/asymptotics.hpp"
#include "wpoly/closed_form.hpp"
#include "wpoly/json_io.hpp"
#include "wpoly/linext.hpp"
#include "wpoly/poset.hpp"
#include "wpoly/realroots.hpp"
#include "wpoly/reproduction.hpp"
#include "wpoly/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using namespace wpoly;

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_bad_poset = 2,
    exit_budget = 4,
    exit_not_real_rooted = 10,
};

enum class Family { pmn, chains, antichain, chain };
enum class Method { enumerate, formula, both };
enum class Output { human, json };

struct Source {
    std::optional<Family> family;
    int m = 0;
    int n = 0;
    int p = 0;
    std::string poset_file;
    std::string poly_file;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_source_options(CLI::App& cmd, Source& src, bool allow_poly)
{
    const std::map<std::string, Family> families{
        {"pmn", Family::pmn}, {"chains", Family::chains}, {"antichain", Family::antichain}, {"chain", Family::chain}};
    auto* fam = cmd.add_option("--family", src.family, "Poset family: pmn, chains (m,n) or antichain, chain (p)")
                    ->transform(CLI::CheckedTransformer(families, CLI::ignore_case));
    cmd.add_option("-m", src.m, "First chain length");
    cmd.add_option("-n", src.n, "Second chain length");
    cmd.add_option("-p", src.p, "Ground set size for antichain/chain");
    auto* file = cmd.add_option("--file", src.poset_file, "Poset text file")->excludes(fam);
    if (allow_poly)
        cmd.add_option("--poly", src.poly_file, "Polynomial JSON file ({\"coeffs\": [...]})")->excludes(fam)->excludes(file);
}

int require(int v, const char* flag, const char* family)
{
    if (v < 1)
        throw UsageError(std::string("family ") + family + " needs " + flag + " >= 1");
    return v;
}

Poset load_poset_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open poset file '" + path + "'");
    return read_poset(in);
}

Poset family_poset(const Source& src)
{
    switch (*src.family) {
    case Family::pmn:
        return make_pmn(require(src.m, "-m", "pmn"), require(src.n, "-n", "pmn"));
    case Family::chains:
        return make_disjoint_chains(require(src.m, "-m", "chains"), require(src.n, "-n", "chains"));
    case Family::antichain:
        return make_antichain(require(src.p, "-p", "antichain"));
    case Family::chain:
        return make_chain(require(src.p, "-p", "chain"));
    }
    throw UsageError("unknown family");
}

IntPolynomial family_formula(const Source& src)
{
    switch (*src.family) {
    case Family::pmn:
        return w_pmn(require(src.m, "-m", "pmn"), require(src.n, "-n", "pmn"));
    case Family::chains:
        return w_disjoint_chains(require(src.m, "-m", "chains"), require(src.n, "-n", "chains"));
    case Family::antichain:
        return eulerian_polynomial(require(src.p, "-p", "antichain"));
    case Family::chain:
        require(src.p, "-p", "chain");
        return IntPolynomial{1};
    }
    throw UsageError("unknown family");
}

void print_polynomial(const IntPolynomial& w, Output output)
{
    if (output == Output::json)
        std::cout << polynomial_to_json(w).dump() << "\n";
    else
        std::cout << to_string(w) << "\n";
}

struct ComputeConfig {
    Source source;
    std::optional<Method> method;
    std::uint64_t budget = default_enumeration_budget;
    bool print_poset = false;
    Output output = Output::human;
};

int cmd_compute(const ComputeConfig& cfg)
{
    const Source& src = cfg.source;
    if (!src.family && src.poset_file.empty())
        throw UsageError("compute needs --family or --file");
    const Method method = cfg.method.value_or(src.family ? Method::formula : Method::enumerate);
    if (!src.family && method != Method::enumerate)
        throw UsageError("file-loaded posets support --method enum only");

    std::optional<Poset> poset;
    if (src.family && (method != Method::formula || cfg.print_poset))
        poset = family_poset(src);
    if (!src.family)
        poset = load_poset_file(src.poset_file);
    if (cfg.print_poset && poset)
        std::cout << format_poset(*poset);

    std::optional<IntPolynomial> by_formula;
    std::optional<IntPolynomial> by_enum;
    if (method != Method::enumerate)
        by_formula = family_formula(src);
    if (method != Method::formula)
        by_enum = w_polynomial_enumerative(*poset, cfg.budget);

    if (by_formula && by_enum && *by_formula != *by_enum) {
        std::cerr << "mismatch: formula " << to_string(*by_formula) << " vs enumeration " << to_string(*by_enum)
                  << "\n";
        return exit_failure;
    }
    print_polynomial(by_formula ? *by_formula : *by_enum, cfg.output);
    if (by_formula && by_enum && cfg.output == Output::human)
        std::cout << "formula and enumeration agree\n";
    return exit_ok;
}

struct CheckConfig {
    Source source;
    std::uint64_t budget = default_enumeration_budget;
    bool approx = true;
    Output output = Output::human;
};

std::string decimal(const Rational& q)
{
    std::ostringstream os;
    os << std::setprecision(10) << q.get_d();
    return os.str();
}

int cmd_check(const CheckConfig& cfg)
{
    const Source& src = cfg.source;
    IntPolynomial w;
    if (src.family) {
        w = family_formula(src);
    } else if (!src.poset_file.empty()) {
        w = w_polynomial_enumerative(load_poset_file(src.poset_file), cfg.budget);
    } else if (!src.poly_file.empty()) {
        std::ifstream in(src.poly_file);
        if (!in)
            throw UsageError("cannot open polynomial file '" + src.poly_file + "'");
        w = polynomial_from_json(nlohmann::json::parse(in));
    } else {
        throw UsageError("check needs --family, --file or --poly");
    }
    if (w.is_zero())
        throw UsageError("the zero polynomial has no root census");

    const RootReport report = analyze(w, cfg.approx);
    const bool real_rooted = report.nonreal_with_multiplicity == 0;
    if (cfg.output == Output::json) {
        nlohmann::json j = {
            {"polynomial", polynomial_to_json(w)},
            {"real_rooted", real_rooted},
            {"report", report_to_json(report)},
        };
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "W = " << to_string(w) << "\n";
        std::cout << "degree " << report.degree << ", zero root multiplicity " << report.zero_root_multiplicity
                  << "\n";
        std::cout << "real roots: " << report.distinct_real_roots << " distinct, "
                  << report.real_roots_with_multiplicity << " with multiplicity\n";
        for (const auto& iv : report.isolating_intervals)
            std::cout << "  root in (" << iv.lo.get_str() << ", " << iv.hi.get_str() << ")  ~ ["
                      << decimal(iv.lo) << ", " << decimal(iv.hi) << "]\n";
        std::cout << "non-real roots: " << report.nonreal_with_multiplicity << " with multiplicity\n";
        if (report.nonreal_approx)
            for (const auto& z : *report.nonreal_approx)
                std::cout << "  approx " << std::setprecision(8) << z.real() << (z.imag() < 0 ? " - " : " + ")
                          << std::abs(z.imag()) << "i\n";
        if (real_rooted)
            std::cout << "REAL-ROOTED\n";
        else
            std::cout << "NOT REAL-ROOTED (" << report.nonreal_with_multiplicity << ")\n";
    }
    return real_rooted ? exit_ok : exit_not_real_rooted;
}

struct SearchConfig {
    std::string m_range = "1:12";
    std::string n_range = "1:12";
    bool only_failures = false;
    bool approx = false;
    std::optional<MinimalityOrder> minimal;
    std::string jsonl_path;
    unsigned jobs = 0;
    Output output = Output::human;
};

int cmd_search(const SearchConfig& cfg)
{
    const IntRange m_range = parse_range(cfg.m_range);
    const IntRange n_range = parse_range(cfg.n_range);
    std::vector<SearchResult> results;
    if (cfg.minimal) {
        if (m_range.lo != 1 || n_range.lo != 1)
            throw UsageError("--minimal searches boxes [1,M] x [1,N]; ranges must start at 1");
        results = minimal_counterexamples(m_range.hi, n_range.hi, *cfg.minimal, cfg.jobs);
    } else {
        ScanOptions options;
        options.only_failures = cfg.only_failures;
        options.want_approx = cfg.approx;
        options.jobs = cfg.jobs;
        results = scan(m_range, n_range, options);
    }

    if (!cfg.jsonl_path.empty()) {
        std::ofstream out(cfg.jsonl_path);
        if (!out)
            throw UsageError("cannot write '" + cfg.jsonl_path + "'");
        for (const auto& r : results)
            out << search_result_to_json(r).dump() << "\n";
    }
    if (cfg.output == Output::json) {
        for (const auto& r : results)
            std::cout << search_result_to_json(r).dump() << "\n";
        return exit_ok;
    }
    std::cout << std::setw(5) << "m" << std::setw(5) << "n" << std::setw(8) << "degree" << std::setw(9) << "nonreal"
              << "\n";
    int failures = 0;
    for (const auto& r : results) {
        std::cout << std::setw(5) << r.m << std::setw(5) << r.n << std::setw(8) << r.degree << std::setw(9)
                  << r.nonreal_count;
        if (r.report.nonreal_approx)
            for (const auto& z : *r.report.nonreal_approx)
                std::cout << "  " << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
        std::cout << "\n";
        failures += r.nonreal_count > 0 ? 1 : 0;
    }
    std::cout << results.size() << " cells listed, " << failures << " not real-rooted\n";
    return exit_ok;
}

struct AsymptoticsConfig {
    int m = 11;
    int n = 11;
    std::string a = "4";
    int samples = 100;
    int truncation = 30;
    Output output = Output::human;
};

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw UsageError("bad rational '" + text + "'");
    q.canonicalize();
    return q;
}

int cmd_asymptotics(const AsymptoticsConfig& cfg)
{
    const Rational a = parse_rational(cfg.a);
    const double gap = convergence_gap(cfg.m, cfg.n, a, cfg.samples);
    const bool near_unit = near_unit_magnitude_check(cfg.m, cfg.n, a);
    const double j1 = first_bessel_zero();
    const auto zeros = zeros_of_F_truncation(cfg.truncation, a);
    const SturmChain chain(squarefree_part(clear_denominators(f_truncation(cfg.truncation))));

    std::vector<IsolatingInterval> refined;
    for (const auto& iv : zeros)
        refined.push_back(refine_root(chain, iv, Rational(1, 1000000000)));

    if (cfg.output == Output::json) {
        auto zs = nlohmann::json::array();
        for (const auto& iv : refined)
            zs.push_back({iv.lo.get_str(), iv.hi.get_str()});
        nlohmann::json j = {
            {"m", cfg.m},
            {"n", cfg.n},
            {"a", a.get_str()},
            {"samples", cfg.samples},
            {"truncation_order", truncation_order(a)},
            {"convergence_gap", gap},
            {"near_unit_magnitude", near_unit},
            {"bessel_j0_first_zero", j1},
            {"F_truncation_degree", cfg.truncation},
            {"F_zeros", zs},
        };
        std::cout << j.dump() << "\n";
        return exit_ok;
    }
    std::cout << std::setprecision(12);
    std::cout << "f_{" << cfg.m << "," << cfg.n << "} vs F - 1 on (-" << a.get_str() << ", 0), " << cfg.samples
              << " samples, F truncated at degree " << truncation_order(a) << "\n";
    std::cout << "  max gap: " << gap << "\n";
    std::cout << "  |f + 1| < 1 on the grid: " << (near_unit ? "yes" : "no") << "\n";
    std::cout << "J_0 first zero j1 = " << j1 << ", -j1^2/4 = " << -j1 * j1 / 4 << "\n";
    std::cout << "zeros of F (degree " << cfg.truncation << " truncation) in (-" << a.get_str() << ", 0): "
              << zeros.size() << "\n";
    for (const auto& iv : refined)
        std::cout << "  in [" << iv.lo.get_d() << ", " << iv.hi.get_d() << "]\n";
    return exit_ok;
}

int cmd_verify(bool quick, bool corrupt)
{
    BatteryOptions options;
    options.quick = quick;
    options.corrupt_expected = corrupt;
    bool all = true;
    for (const auto& c : run_reproduction_battery(options)) {
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
        if (!c.passed && !c.detail.empty())
            std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
        all = all && c.passed;
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? exit_ok : exit_failure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Descent polynomials W(P,t) of labeled posets, real-rootedness certificates, and the P_{m,n} "
                 "counterexample family"};
    app.require_subcommand(1);

    const std::map<std::string, Output> outputs{{"human", Output::human}, {"json", Output::json}};
    auto add_output = [&](CLI::App& cmd, Output& out) {
        cmd.add_option("--output", out, "human or json")->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
    };

    ComputeConfig compute;
    auto* compute_cmd = app.add_subcommand("compute", "Compute W(P,t)");
    add_source_options(*compute_cmd, compute.source, false);
    const std::map<std::string, Method> methods{
        {"enum", Method::enumerate}, {"formula", Method::formula}, {"both", Method::both}};
    compute_cmd->add_option("--method", compute.method, "enum, formula or both")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    compute_cmd->add_option("--budget", compute.budget, "Maximum number of linear extensions to enumerate");
    compute_cmd->add_flag("--print-poset", compute.print_poset, "Print the poset in canonical text form first");
    add_output(*compute_cmd, compute.output);

    CheckConfig check;
    auto* check_cmd = app.add_subcommand("check", "Certify whether W(P,t) is real-rooted");
    add_source_options(*check_cmd, check.source, true);
    check_cmd->add_option("--budget", check.budget, "Maximum number of linear extensions to enumerate");
    check_cmd->add_flag("!--no-approx", check.approx, "Skip floating approximations of non-real roots");
    add_output(*check_cmd, check.output);

    SearchConfig search;
    auto* search_cmd = app.add_subcommand("search", "Scan P_{m,n} for non-real-rooted W");
    search_cmd->add_option("--m-range", search.m_range, "m values, a or a:b")->capture_default_str();
    search_cmd->add_option("--n-range", search.n_range, "n values, a or a:b")->capture_default_str();
    search_cmd->add_flag("--only-failures", search.only_failures, "List only non-real-rooted cells");
    search_cmd->add_flag("--approx", search.approx, "Approximate the non-real roots");
    const std::map<std::string, MinimalityOrder> orders{{"by_sum", MinimalityOrder::by_sum},
                                                        {"by_degree", MinimalityOrder::by_degree}};
    search_cmd->add_option("--minimal", search.minimal, "Report minimal failures: by_sum or by_degree")
        ->transform(CLI::CheckedTransformer(orders, CLI::ignore_case));
    search_cmd->add_option("--jsonl", search.jsonl_path, "Also write results as JSON Lines to this file");
    search_cmd->add_option("-j,--jobs", search.jobs, "Worker threads (0 = all cores)")->envname("WPOLY_JOBS");
    add_output(*search_cmd, search.output);

    int eulerian_p = 0;
    Output eulerian_output = Output::human;
    auto* eulerian_cmd = app.add_subcommand("eulerian", "Eulerian polynomial A_p(t)");
    eulerian_cmd->add_option("-p", eulerian_p, "Order")->required()->check(CLI::PositiveNumber);
    add_output(*eulerian_cmd, eulerian_output);

    AsymptoticsConfig asym;
    auto* asym_cmd = app.add_subcommand("asymptotics", "Scaled f_{m,n} against the Bessel-type limit F - 1");
    asym_cmd->add_option("-m", asym.m, "First chain length")->capture_default_str();
    asym_cmd->add_option("-n", asym.n, "Second chain length")->capture_default_str();
    asym_cmd->add_option("-a", asym.a, "Interval (-a, 0), rational such as 4 or 1/4")->capture_default_str();
    asym_cmd->add_option("--samples", asym.samples, "Interior grid points")->capture_default_str();
    asym_cmd->add_option("-K,--truncation", asym.truncation, "Degree of the F truncation for zero isolation")
        ->capture_default_str();
    add_output(*asym_cmd, asym.output);

    bool quick = false;
    bool corrupt = false;
    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the reproduction battery");
    verify_cmd->add_flag("--quick", quick, "Skip the P_{36,6} enumeration");
    verify_cmd->add_flag("--corrupt-expected", corrupt, "Test hook: perturb one expected value")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_failure;
    }

    try {
        if (*compute_cmd)
            return cmd_compute(compute);
        if (*check_cmd)
            return cmd_check(check);
        if (*search_cmd)
            return cmd_search(search);
        if (*eulerian_cmd) {
            print_polynomial(eulerian_polynomial(eulerian_p), eulerian_output);
            return exit_ok;
        }
        if (*asym_cmd)
            return cmd_asymptotics(asym);
        if (*verify_cmd)
            return cmd_verify(quick, corrupt);
    } catch (const PosetError& e) {
        std::cerr << "wpoly: invalid poset: " << e.what() << "\n";
        return exit_bad_poset;
    } catch (const BudgetExceeded& e) {
        std::cerr << "wpoly: " << e.what() << " (raise --budget to override)\n";
        return exit_budget;
    } catch (const std::exception& e) {
        std::cerr << "wpoly: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_failure;
}

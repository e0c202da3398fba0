// Command-line surface over the library: enumeration, domination-search
// experiments, basis computation, membership, dimension tables, and the
// verification suites.  Exit codes: 0 success, 1 property failure, 2 input
// error, 3 internal cross-check failure.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gcat/counting.hpp"
#include "gcat/groebner.hpp"
#include "gcat/io.hpp"
#include "gcat/polynomial.hpp"
#include "gcat/rank_oracle.hpp"
#include "gcat/rng.hpp"
#include "gcat/verify.hpp"

namespace {

using namespace gcat;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCrossCheckFailure = 3;

struct RunConfig {
    int p = 2;
    int width = 1;
    std::uint64_t seed = 0;
    std::string input;
    std::string output;
    std::string format = "json";
};

void require_prime(int p) {
    if (p < 2 || p > 65535 || !is_prime(p))
        throw std::invalid_argument("characteristic must be a prime <= 65535");
}

int cmd_homs(const std::string& kind_name, int m, int n, const std::string& format) {
    CatKind kind = parse_cat_kind(kind_name);
    auto homs = enumerate_homs(kind, m, n);
    if (format == "csv") {
        std::cout << "count," << homs.size() << "\n";
        for (const FinMap& f : homs) {
            for (int i = 1; i <= f.domain_size(); ++i) {
                if (i > 1) std::cout << ',';
                std::cout << f(i);
            }
            std::cout << "\n";
        }
    } else {
        json out{{"kind", cat_kind_name(kind)}, {"from", m}, {"to", n},
                 {"count", homs.size()},        {"homs", to_json(homs)}};
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

json domination_to_json(const DominationResult& result) {
    if (std::holds_alternative<std::monostate>(result)) return nullptr;
    if (const auto* pair = std::get_if<DominationPair>(&result))
        return json{{"i", pair->i}, {"j", pair->j}};
    return json{{"chain", std::get<std::vector<int>>(result)}};
}

int cmd_wqo(const RunConfig& config, int budget, const std::string& mode_name,
            long long random_count, int length, int max_target, int max_domain) {
    DominationMode mode =
        mode_name == "chain" ? DominationMode::chain : DominationMode::first_pair;
    json out;
    if (!config.input.empty()) {
        std::vector<FinMap> seq = finmap_sequence_from_json(read_json_file(config.input));
        int effective_budget = budget > 0 ? budget : static_cast<int>(seq.size());
        DominationResult result =
            find_domination(std::span<const FinMap>(seq), effective_budget, mode);
        out = json{{"mode", mode_name},
                   {"budget", effective_budget},
                   {"length", seq.size()},
                   {"result", domination_to_json(result)}};
    } else {
        WqoExperiment experiment{random_count, length, max_target, max_domain, config.seed};
        auto results = wqo_random_batch(experiment, mode, ExecPolicy::parallel);
        long long found = 0;
        json items = json::array();
        for (const auto& r : results) {
            if (!std::holds_alternative<std::monostate>(r)) ++found;
            items.push_back(domination_to_json(r));
        }
        out = json{{"mode", mode_name},       {"sequences", random_count},
                   {"length", length},        {"max_target", max_target},
                   {"max_domain", max_domain}, {"seed", config.seed},
                   {"found", found},          {"results", std::move(items)}};
    }
    std::string text = out.dump(2) + "\n";
    if (!config.output.empty())
        write_text_file(config.output, text);
    else
        std::cout << text;
    return kExitOk;
}

// Generators files hold either a list of module elements or a list of
// {"poly": ...} objects; the latter selects the monoid instance.
bool generators_are_polynomials(const json& gens) {
    return gens.is_array() && !gens.empty() && gens.front().contains("poly");
}

int run_os_groebner(const json& gens_json, const RunConfig& config, bool check_oracle,
                    const std::string& hilbert_out) {
    std::vector<Element<OsCategory>> gens;
    for (const auto& g : gens_json) gens.push_back(os_element_from_json(g));
    if (gens.empty()) throw std::invalid_argument("groebner: generator list is empty");
    for (const auto& g : gens) require_prime(g.prime());
    OsCategory cat(gens.front().target());
    auto pres = make_presentation(std::move(gens), config.width);
    GroebnerBasis<OsCategory> gb = buchberger(cat, pres);
    auto table = hilbert_table(cat, pres, gb);

    if (check_oracle) {
        SplitMix64 rng(config.seed);
        for (int probe = 0; probe < 32; ++probe) {
            Element<OsCategory> v(pres.target, pres.coords, pres.prime);
            int t = pres.target + probe % (pres.width - pres.target + 1);
            auto homs = cat.monomials_of_grade(t);
            if (homs.empty()) continue;
            for (int i = 0; i < 3; ++i)
                v.add_term(Mono<OsCategory>{homs[static_cast<std::size_t>(rng.uniform(
                                                0, static_cast<int>(homs.size()) - 1))],
                                            rng.uniform(1, pres.coords)},
                           rng.uniform(0, pres.prime - 1));
            if (is_member(cat, v, gb) != oracle_member(cat, v, pres)) {
                std::cerr << "cross-check failure: membership disagreement at level " << t << "\n";
                return kExitCrossCheckFailure;
            }
        }
        for (const HilbertRow& row : table)
            if (!row.agree()) {
                std::cerr << "cross-check failure: dimension disagreement at level " << row.level
                          << "\n";
                return kExitCrossCheckFailure;
            }
    }

    json out = to_json(gb);
    out["hilbert"] = hilbert_rows_to_json(table);
    std::string text = out.dump(2) + "\n";
    if (!config.output.empty())
        write_text_file(config.output, text);
    else
        std::cout << text;
    if (!hilbert_out.empty()) write_text_file(hilbert_out, hilbert_rows_to_csv(table));
    return kExitOk;
}

int run_nat_groebner(const json& gens_json, const RunConfig& config, bool check_oracle,
                     const std::string& hilbert_out) {
    require_prime(config.p);
    std::vector<Element<NatMonoid>> gens;
    for (const auto& g : gens_json) gens.push_back(nat_element_from_json(g, config.p));
    NatMonoid cat;
    auto pres = make_presentation(std::move(gens), config.width, 0, 1, config.p);
    GroebnerBasis<NatMonoid> gb = buchberger(cat, pres);
    auto table = hilbert_table(cat, pres, gb);

    if (check_oracle) {
        SplitMix64 rng(config.seed);
        for (int probe = 0; probe < 32; ++probe) {
            Poly candidate(static_cast<std::size_t>(rng.uniform(0, config.width)) + 1, 0);
            for (auto& c : candidate) c = rng.uniform(0, config.p - 1);
            Element<NatMonoid> v = poly_to_element(poly_normalize(candidate, config.p), config.p);
            if (is_member(cat, v, gb) != oracle_member(cat, v, pres)) {
                std::cerr << "cross-check failure: membership disagreement\n";
                return kExitCrossCheckFailure;
            }
        }
    }

    json out = to_json(gb);
    out["hilbert"] = hilbert_rows_to_json(table);
    std::string text = out.dump(2) + "\n";
    if (!config.output.empty())
        write_text_file(config.output, text);
    else
        std::cout << text;
    if (!hilbert_out.empty()) write_text_file(hilbert_out, hilbert_rows_to_csv(table));
    return kExitOk;
}

int cmd_member(const std::string& basis_path, const std::string& element_path) {
    json basis_json = read_json_file(basis_path);
    json element_json = read_json_file(element_path);
    bool member;
    if (basis_json.value("category", "gamma_os") == "nat_monoid") {
        GroebnerBasis<NatMonoid> gb = nat_basis_from_json(basis_json);
        member = is_member(NatMonoid{}, nat_element_from_json(element_json, gb.prime), gb);
    } else {
        GroebnerBasis<OsCategory> gb = os_basis_from_json(basis_json);
        OsCategory cat(gb.target);
        member = is_member(cat, os_element_from_json(element_json), gb);
    }
    std::cout << json{{"member", member}}.dump() << "\n";
    return kExitOk;
}

int cmd_hilbert(const RunConfig& config) {
    json gens_json = read_json_file(config.input);
    std::vector<HilbertRow> table;
    if (generators_are_polynomials(gens_json)) {
        require_prime(config.p);
        std::vector<Element<NatMonoid>> gens;
        for (const auto& g : gens_json) gens.push_back(nat_element_from_json(g, config.p));
        NatMonoid cat;
        auto pres = make_presentation(std::move(gens), config.width, 0, 1, config.p);
        table = hilbert_table(cat, pres, buchberger(cat, pres));
    } else {
        std::vector<Element<OsCategory>> gens;
        for (const auto& g : gens_json) gens.push_back(os_element_from_json(g));
        if (gens.empty()) throw std::invalid_argument("hilbert: generator list is empty");
        OsCategory cat(gens.front().target());
        auto pres = make_presentation(std::move(gens), config.width);
        table = hilbert_table(cat, pres, buchberger(cat, pres));
    }
    std::string csv = hilbert_rows_to_csv(table);
    if (!config.output.empty())
        write_text_file(config.output, csv);
    else
        std::cout << csv;
    for (const HilbertRow& row : table)
        if (!row.agree()) return kExitCrossCheckFailure;
    return kExitOk;
}

int cmd_verify(const std::string& suite, const SuiteOptions& options,
               const std::string& out_path) {
    SuiteReport report = run_suite(suite, options);
    json out{{"suite", report.suite},       {"cases", report.cases},
             {"failures", report.failures}, {"pass", report.pass()},
             {"counterexamples", report.counterexamples}};
    if (!report.note.empty()) out["note"] = report.note;
    std::string text = out.dump(2) + "\n";
    if (!out_path.empty())
        write_text_file(out_path, text);
    else
        std::cout << text;
    return report.pass() ? kExitOk : kExitPropertyFailure;
}

int cmd_demo_poly(const std::string& gens_csv, int p, int degree, long long trials,
                  std::uint64_t seed) {
    require_prime(p);
    NatMonoid cat;
    std::vector<Element<NatMonoid>> gens;
    std::vector<Poly> polys;
    std::string current;
    for (char ch : gens_csv + ",") {
        if (ch == ',') {
            if (!current.empty()) {
                polys.push_back(poly_parse(current, p));
                gens.push_back(poly_to_element(polys.back(), p));
                current.clear();
            }
        } else {
            current += ch;
        }
    }
    if (gens.empty()) throw std::invalid_argument("demo poly: no generators given");
    auto pres = make_presentation(std::move(gens), degree, 0, 1, p);
    GroebnerBasis<NatMonoid> gb = buchberger(cat, pres);

    Poly divisor = polys.front();
    for (std::size_t i = 1; i < polys.size(); ++i) divisor = poly_gcd(divisor, polys[i], p);

    long long disagreements = 0;
    for (long long i = 0; i < trials; ++i) {
        SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        Poly probe(static_cast<std::size_t>(rng.uniform(0, degree)) + 1, 0);
        for (auto& c : probe) c = rng.uniform(0, p - 1);
        probe = poly_normalize(std::move(probe), p);
        bool member = is_member(cat, poly_to_element(probe, p), gb);
        if (member != poly_divides(divisor, probe, p)) ++disagreements;
    }

    json basis_out = json::array();
    for (const auto& e : gb.elements) basis_out.push_back(poly_print(element_to_poly(e)));
    json out{{"p", p},
             {"width", degree},
             {"basis", std::move(basis_out)},
             {"gcd", poly_print(divisor)},
             {"trials", trials},
             {"disagreements", disagreements}};
    std::cout << out.dump(2) << "\n";
    return disagreements == 0 ? kExitOk : kExitCrossCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner bases over categories of finite sets, with order-theoretic "
                 "experiments and exact linear-algebra cross-checks"};
    app.require_subcommand(1);

    RunConfig config;

    auto* homs = app.add_subcommand("homs", "enumerate a hom-set");
    std::string kind = "all";
    int from = 0, to = 0;
    homs->add_option("--cat", kind, "category: all, sur, os, inj")
        ->check(CLI::IsMember({"all", "sur", "os", "inj"}));
    homs->add_option("--from", from, "domain size")->required();
    homs->add_option("--to", to, "codomain size")->required();
    homs->add_option("--format", config.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* wqo = app.add_subcommand("wqo", "domination search in the divisibility order");
    std::string mode = "first_pair";
    int budget = 0;
    long long random_count = 0;
    int length = 200, max_target = 3, max_domain = 12;
    wqo->add_option("--input", config.input, "json list of maps");
    wqo->add_option("--mode", mode, "first_pair or chain")
        ->check(CLI::IsMember({"first_pair", "chain"}));
    wqo->add_option("--budget", budget, "how many terms to search");
    wqo->add_option("--random", random_count, "number of random sequences instead of --input");
    wqo->add_option("--length", length, "random sequence length");
    wqo->add_option("--target", max_target, "random maps land in {1..n} with n <= this");
    wqo->add_option("--max-domain", max_domain, "random map domain bound");
    wqo->add_option("--seed", config.seed, "random seed");
    wqo->add_option("--out", config.output, "write the report here instead of stdout");

    auto* groebner = app.add_subcommand("groebner", "complete a generator file to a basis");
    std::string hilbert_out;
    bool check_oracle = false;
    groebner->add_option("--gens", config.input, "generators file")->required();
    groebner->add_option("--width", config.width, "truncation width")->required();
    groebner->add_option("--p", config.p, "characteristic (monoid generators only)");
    groebner->add_option("--out", config.output, "basis file (stdout otherwise)");
    groebner->add_option("--hilbert", hilbert_out, "also write the dimension table as csv");
    groebner->add_flag("--check-oracle", check_oracle,
                       "cross-check membership and dimensions against row reduction");
    groebner->add_option("--seed", config.seed, "seed for the cross-check probes");

    auto* member = app.add_subcommand("member", "test membership against a basis file");
    std::string basis_path, element_path;
    member->add_option("--basis", basis_path, "basis file")->required();
    member->add_option("--element", element_path, "element file")->required();

    auto* hilbert = app.add_subcommand("hilbert", "dimension table of a generated subfunctor");
    hilbert->add_option("--gens", config.input, "generators file")->required();
    hilbert->add_option("--width", config.width, "truncation width")->required();
    hilbert->add_option("--p", config.p, "characteristic (monoid generators only)");
    hilbert->add_option("--out", config.output, "csv path (stdout otherwise)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    SuiteOptions suite_options;
    long long trials_opt = -1;
    int max_opt = -1;
    bool serial = false;
    verify
        ->add_option("--suite", suite,
                     "one of: stronglynoeth, higman, contra1, admissible, tilde, adjunction, "
                     "fi-epi, oracle-equiv")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--max", max_opt, "size bound override");
    verify->add_option("--trials", trials_opt, "trial count override");
    verify->add_option("--seed", suite_options.seed, "random seed");
    verify->add_flag("--serial", serial, "disable the parallel kernels");
    verify->add_option("--out", config.output, "write the report here instead of stdout");

    auto* demo = app.add_subcommand("demo", "worked instances");
    auto* demo_poly = demo->add_subcommand("poly", "univariate ideal membership against gcd");
    std::string poly_gens = "x^2+x+1,x^3+1";
    int degree = 8;
    long long demo_trials = 1000;
    demo_poly->add_option("--gens", poly_gens, "comma-separated polynomials");
    demo_poly->add_option("--p", config.p, "characteristic");
    demo_poly->add_option("--deg", degree, "truncation degree");
    demo_poly->add_option("--trials", demo_trials, "membership probes");
    demo_poly->add_option("--seed", config.seed, "random seed");
    demo->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (homs->parsed()) return cmd_homs(kind, from, to, config.format);
        if (wqo->parsed()) {
            if (config.input.empty() && random_count <= 0)
                throw std::invalid_argument("wqo: give --input or --random");
            return cmd_wqo(config, budget, mode, random_count, length, max_target, max_domain);
        }
        if (groebner->parsed()) {
            if (config.width < 1) throw std::invalid_argument("groebner: width must be >= 1");
            json gens_json = read_json_file(config.input);
            if (!gens_json.is_array())
                throw std::invalid_argument("generators file must be a list");
            if (generators_are_polynomials(gens_json))
                return run_nat_groebner(gens_json, config, check_oracle, hilbert_out);
            return run_os_groebner(gens_json, config, check_oracle, hilbert_out);
        }
        if (member->parsed()) return cmd_member(basis_path, element_path);
        if (hilbert->parsed()) {
            if (config.width < 1) throw std::invalid_argument("hilbert: width must be >= 1");
            return cmd_hilbert(config);
        }
        if (verify->parsed()) {
            suite_options.max = max_opt;
            suite_options.trials = trials_opt;
            suite_options.policy = serial ? ExecPolicy::serial : ExecPolicy::parallel;
            return cmd_verify(suite, suite_options, config.output);
        }
        if (demo->parsed())
            return cmd_demo_poly(poly_gens, config.p, degree, demo_trials, config.seed);
    } catch (const TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

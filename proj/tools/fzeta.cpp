// Command-line front end: evaluate finite multiple zeta values, print the
// Ohno generating function next to its depth-three closed form, and run
// the identity catalog.
//
// Exit codes: 0 success / all cells pass, 1 a verified-false cell exists,
// 2 usage or parse error, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fzeta/classical.hpp"
#include "fzeta/fmzv.hpp"
#include "fzeta/series.hpp"
#include "fzeta/verify.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

fzeta::GridOptions parse_grid_params(const std::string& text) {
    fzeta::GridOptions opts;
    std::istringstream in(text);
    std::string clause;
    auto next_clause = [&](std::string& out) {
        out.clear();
        char c;
        while (in.get(c)) {
            if (c == ' ' || c == ',' || c == ';') {
                if (!out.empty()) return true;
                continue;
            }
            out += c;
        }
        return !out.empty();
    };
    while (next_clause(clause)) {
        const std::size_t pos = clause.find("<=");
        if (pos == std::string::npos || pos == 0)
            throw std::invalid_argument("--params clause must look like name<=value: " +
                                        clause);
        const std::string key = clause.substr(0, pos);
        const std::string val = clause.substr(pos + 2);
        if (val.empty() || val.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("--params value must be a nonnegative integer: " +
                                        clause);
        opts.caps[key] = std::stol(val);
    }
    return opts;
}

int cmd_eval(const std::string& index_text, std::uint32_t prime_value, bool star) {
    fzeta::Index k = fzeta::parse_index(index_text);
    fzeta::Prime p(prime_value);
    fzeta::EvalContext ctx(p);
    fzeta::Residue v = fzeta::zeta_finite(
        k, star ? fzeta::ZetaMode::Star : fzeta::ZetaMode::Strict, ctx);
    std::cout << v.value() << "\n";
    return 0;
}

int cmd_series(const std::string& index_text, std::uint32_t prime_value, int cutoff) {
    fzeta::Index k = fzeta::parse_index(index_text);
    if (k.empty() || k.depth() > 3)
        throw std::invalid_argument("series needs an index of depth 1..3");
    fzeta::Prime p(prime_value);
    if (static_cast<std::uint64_t>(cutoff) + 2 > p.value())
        throw std::invalid_argument("cutoff must be at most p-2");
    if (p.value() <= 2 * static_cast<std::uint32_t>(cutoff))
        std::cerr << "note: p <= 2N, identities at this prime are outside the guarantee\n";

    fzeta::EvalContext ctx(p);
    fzeta::TruncSeries o = fzeta::ohno_series(k, ctx, cutoff);
    const bool with_rhs = (k.depth() == 3);
    fzeta::TruncSeries rhs(p, cutoff);
    if (with_rhs) rhs = fzeta::main_rhs_series(k.at(0), k.at(1), k.at(2), ctx, cutoff);

    std::cout << "# \U0001D48C = " << fzeta::to_string(k) << ", \U0001D48C∨ = "
              << fzeta::to_string(fzeta::hoffman_dual(k)) << ", p=" << p.value()
              << ", N=" << cutoff << "\n";
    if (with_rhs) {
        std::printf("%-8s %-12s %-12s %s\n", "weight", "O_A", "closed-form", "match");
        for (int w = 0; w <= cutoff; ++w)
            std::printf("%-8d %-12u %-12u %s\n", w, o.at(w).value(), rhs.at(w).value(),
                        o.at(w) == rhs.at(w) ? "yes" : "NO");
    } else {
        std::printf("%-8s %s\n", "weight", "O_A");
        for (int w = 0; w <= cutoff; ++w)
            std::printf("%-8d %u\n", w, o.at(w).value());
    }
    return 0;
}

struct VerifyConfig {
    bool all = false;
    std::vector<std::string> ids;
    int cutoff = 12;
    std::size_t prime_count = 5;
    std::uint64_t prime_lo = 0;
    bool allow_low_primes = false;
    std::string params_text;
    std::string format = "pretty";
    std::string out_path;
};

void write_report(const fzeta::Report& report, const std::string& format,
                  std::ostream& os) {
    if (format == "json") {
        report.write_json_lines(os);
    } else if (format == "csv") {
        report.write_csv(os);
    } else {
        for (const auto& e : report.entries()) {
            if (e.pass && !e.outside_guarantee) continue;
            os << (e.outside_guarantee ? "[outside guarantee] " : "[FAIL] ")
               << fzeta::identity_name(e.identity) << " " << e.params;
            if (e.prime) os << " p=" << *e.prime;
            if (e.weight) os << " weight=" << *e.weight;
            os << " lhs=" << e.lhs << " rhs=" << e.rhs << "\n";
        }
    }
}

int cmd_verify(const VerifyConfig& cfg) {
    std::vector<fzeta::IdentityId> ids;
    if (cfg.all || cfg.ids.empty()) {
        ids.assign(fzeta::kAllIdentities.begin(), fzeta::kAllIdentities.end());
    } else {
        for (const auto& name : cfg.ids) {
            auto id = fzeta::identity_from_name(name);
            if (!id) throw std::invalid_argument("unknown identity id: " + name);
            ids.push_back(*id);
        }
    }

    fzeta::GridOptions opts;
    if (!cfg.params_text.empty()) {
        if (ids.size() != 1)
            throw std::invalid_argument("--params requires exactly one --id");
        opts = parse_grid_params(cfg.params_text);
    }

    if (cfg.cutoff < 4) throw std::invalid_argument("cutoff must be >= 4");
    const std::uint64_t floor = 2 * static_cast<std::uint64_t>(cfg.cutoff);
    std::uint64_t start = std::max<std::uint64_t>(cfg.prime_lo, floor + 1);
    if (cfg.prime_lo != 0 && cfg.prime_lo <= floor) {
        if (!cfg.allow_low_primes)
            throw std::invalid_argument(
                "--prime-lo is at or below the 2N floor; pass --allow-low-primes "
                "to run outside the guarantee");
        start = cfg.prime_lo;
    }
    std::vector<fzeta::Prime> primes =
        fzeta::primes_above(start - 1, cfg.prime_count);

    fzeta::Report report;
    for (fzeta::IdentityId id : ids)
        report.append(fzeta::run_identity(id, primes, cfg.cutoff, opts));
    report.sort_entries();

    if (!cfg.out_path.empty()) {
        const std::string tmp = cfg.out_path + ".tmp";
        std::ofstream os(tmp);
        if (!os) {
            std::cerr << "cannot open " << tmp << "\n";
            return kExitIo;
        }
        write_report(report, cfg.format, os);
        os.flush();
        if (!os) {
            std::cerr << "write failed: " << tmp << "\n";
            return kExitIo;
        }
        os.close();
        if (std::rename(tmp.c_str(), cfg.out_path.c_str()) != 0) {
            std::cerr << "cannot move report into place: " << cfg.out_path << "\n";
            return kExitIo;
        }
    } else {
        write_report(report, cfg.format, std::cout);
    }

    std::cout << report.summary() << "\n";
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite multiple zeta values mod p: evaluation, Ohno-type "
                 "generating functions, and an identity verification catalog"};
    app.require_subcommand(1);

    // eval
    std::string eval_index;
    std::uint32_t eval_prime = 0;
    bool eval_star = false;
    auto* eval = app.add_subcommand("eval", "evaluate one zeta value mod p");
    eval->add_option("index", eval_index, "index, e.g. \"(1,2)\" or ones:3")->required();
    eval->add_option("-p,--prime", eval_prime, "prime modulus")->required();
    eval->add_flag("--star", eval_star, "use the weakly increasing (star) sum");

    // series
    std::string series_index;
    std::uint32_t series_prime = 0;
    int series_cutoff = 12;
    auto* series = app.add_subcommand(
        "series", "print the Ohno generating function (and, for depth three, "
                  "its closed form) coefficientwise");
    series->add_option("index", series_index, "base index of depth 1..3")->required();
    series->add_option("-p,--prime", series_prime, "prime modulus")->required();
    series->add_option("-N,--cutoff", series_cutoff, "series cutoff (default 12)");

    // verify
    VerifyConfig cfg;
    auto* verify = app.add_subcommand("verify", "run identity checks and write a report");
    verify->add_flag("--all", cfg.all, "run every identity (default when no --id)");
    verify->add_option("--id", cfg.ids, "identity id (repeatable)");
    verify->add_option("-N,--cutoff", cfg.cutoff, "series cutoff (default 12)");
    verify->add_option("--primes", cfg.prime_count, "number of primes (default 5)");
    verify->add_option("--prime-lo", cfg.prime_lo,
                       "lowest candidate prime (default 2N+1)");
    verify->add_flag("--allow-low-primes", cfg.allow_low_primes,
                     "permit primes at or below the 2N floor");
    verify->add_option("--params", cfg.params_text,
                       "grid caps for a single --id, e.g. \"k_sum<=7\"");
    verify->add_option("--format", cfg.format, "pretty|json|csv (default pretty)")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    verify->add_option("--out", cfg.out_path, "report file (written atomically)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(eval_index, eval_prime, eval_star);
        if (*series) return cmd_series(series_index, series_prime, series_cutoff);
        if (*verify) return cmd_verify(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}

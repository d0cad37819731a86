#include "hurwitz/cli.hpp"

#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "hurwitz/closed_form.hpp"
#include "hurwitz/jm_algebra.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/recurrence.hpp"
#include "hurwitz/toprec.hpp"
#include "hurwitz/verify.hpp"

namespace hurwitz {

namespace {

OracleBounds bounds_from(const RunConfig& cfg) {
    OracleBounds b;
    if (cfg.bound_d >= 0) b.monotone_max_d = b.classical_max_d = b.rank_max_d = cfg.bound_d;
    if (cfg.bound_r >= 0) b.monotone_max_r = b.classical_max_r = b.rank_max_r = cfg.bound_r;
    return b;
}

int resolve_r(const Partition& alpha, const RunConfig& cfg) {
    if (cfg.r >= 0 && cfg.genus >= 0)
        throw CLI::ValidationError("give exactly one of --r and --genus");
    if (cfg.r >= 0) return cfg.r;
    if (cfg.genus >= 0) return rh_transposition_count(alpha, cfg.genus);
    throw CLI::ValidationError("one of --r and --genus is required");
}

struct MethodValue {
    std::string method;
    Integer value;
};

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
    const Partition alpha = Partition::parse(cfg.alpha);
    if (alpha.weight() < 1) throw CLI::ValidationError("--alpha must be a nonempty partition");
    const OracleBounds bounds = bounds_from(cfg);

    if (cfg.kind == "bms") {
        if (cfg.r < 1) throw CLI::ValidationError("bms requires --r >= 1");
        const Rational formula = bms_genus0(alpha, cfg.r);
        if (!cfg.all_methods) {
            out << to_fraction(formula) << "\n";
            return 0;
        }
        const Integer enumerated =
            class_size(alpha) *
            count_rank_factorizations(alpha, cfg.r, cfg.genus >= 0 ? cfg.genus : 0, bounds);
        out << "formula: " << to_fraction(formula) << "\n";
        out << "enumeration: " << to_decimal(enumerated) << "\n";
        out << "status: "
            << (formula == Rational(enumerated) ? "agree" : "unreconciled (convention ambiguity)")
            << "\n";
        return 0;
    }

    if (cfg.kind == "oracle") {
        const int r = resolve_r(alpha, cfg);
        Integer value;
        if (cfg.mode == "monotone")
            value = count_monotone(alpha, r, !cfg.total, bounds);
        else if (cfg.mode == "classical")
            value = count_classical(alpha, r, !cfg.total, bounds);
        else if (cfg.mode == "rank")
            value = count_rank_factorizations(alpha, r, cfg.genus >= 0 ? cfg.genus : 0, bounds);
        else
            throw CLI::ValidationError("--mode must be monotone, classical or rank");
        out << to_decimal(value) << "\n";
        return 0;
    }

    if (cfg.kind == "jm-total") {
        if (cfg.r < 0) throw CLI::ValidationError("jm-total requires --r");
        const Rational c = class_coefficient(complete_homogeneous_jm(alpha.weight(), cfg.r), alpha);
        out << to_fraction(c) << "\n";
        return 0;
    }

    const int r = resolve_r(alpha, cfg);
    const auto genus = genus_of(alpha, r);

    std::vector<MethodValue> values;
    auto applicable = [&](const std::string& m) {
        return cfg.all_methods || cfg.method == m ||
               (cfg.method.empty() && ((cfg.kind == "monotone" && m == "recurrence") ||
                                       (cfg.kind == "classical" && m == "joincut")));
    };

    if (cfg.kind == "monotone") {
        MemoTable memo;
        if (!cfg.cache_path.empty() && std::filesystem::exists(cfg.cache_path))
            memo.load(cfg.cache_path);
        if (applicable("recurrence")) values.push_back({"recurrence", monotone_H(alpha, r, memo)});
        if (applicable("closed-form")) {
            if (genus == 0)
                values.push_back({"closed-form", monotone_genus0(alpha)});
            else if (cfg.method == "closed-form")
                throw CLI::ValidationError("closed-form applies to genus 0 only");
        }
        if (applicable("oracle"))
            values.push_back({"oracle", class_size(alpha) * count_monotone(alpha, r, true, bounds)});
        if (!cfg.cache_path.empty()) memo.save(cfg.cache_path);
    } else if (cfg.kind == "classical") {
        if (applicable("joincut")) values.push_back({"joincut", classical_H_joincut(alpha, r)});
        if (applicable("closed-form")) {
            if (genus == 0)
                values.push_back({"closed-form", classical_genus0(alpha)});
            else if (cfg.method == "closed-form")
                throw CLI::ValidationError("closed-form applies to genus 0 only");
        }
        if (applicable("oracle"))
            values.push_back({"oracle", class_size(alpha) * count_classical(alpha, r, true, bounds)});
    } else {
        throw CLI::ValidationError("unknown compute kind: " + cfg.kind);
    }

    if (values.empty()) throw CLI::ValidationError("unknown --method: " + cfg.method);
    if (!cfg.all_methods) {
        out << to_decimal(values.front().value) << "\n";
        return 0;
    }
    bool agree = true;
    for (const MethodValue& mv : values) {
        out << mv.method << ": " << to_decimal(mv.value) << "\n";
        if (mv.value != values.front().value) agree = false;
    }
    out << "agreement: " << (agree ? "true" : "false") << "\n";
    return agree ? 0 : 1;
}

void emit_partition_row(std::ostream& out, const std::string& format, const Partition& alpha,
                        int genus, int r, const Integer& value) {
    if (format == "csv") {
        out << '"' << alpha.str() << "\"," << genus << ',' << to_decimal(value) << "\n";
    } else if (format == "json") {
        out << "{\"alpha\":[";
        for (std::size_t i = 0; i < alpha.parts().size(); ++i)
            out << (i ? "," : "") << alpha.parts()[i];
        out << "],\"genus\":" << genus << ",\"r\":" << r << ",\"value\":\"" << to_decimal(value)
            << "\"}\n";
    } else {
        out << alpha.str() << ' ' << genus << ' ' << r << ' ' << to_decimal(value) << "\n";
    }
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.kind == "toprec") {
        const ToprecCaps caps{2, 3, std::max(cfg.degree, 8)};
        const CoeffTable t = mg_table(cfg.genus >= 0 ? cfg.genus : 0, cfg.points, cfg.degree, caps);
        if (cfg.format == "csv") {
            out << t.csv();
        } else {
            std::vector<int> cur(t.arity(), 0);
            while (true) {
                if (cfg.format == "json") {
                    out << "{\"e\":[";
                    for (std::size_t i = 0; i < cur.size(); ++i) out << (i ? "," : "") << cur[i];
                    out << "],\"value\":\"" << to_fraction(t.at(cur)) << "\"}\n";
                } else {
                    for (int v : cur) out << v << ' ';
                    out << to_fraction(t.at(cur)) << "\n";
                }
                int i = t.arity() - 1;
                while (i >= 0 && cur[i] == t.degree()) cur[i--] = 0;
                if (i < 0) break;
                ++cur[i];
            }
        }
        return 0;
    }

    if (cfg.kind != "monotone" && cfg.kind != "classical")
        throw CLI::ValidationError("unknown table kind: " + cfg.kind);

    MemoTable memo;
    if (!cfg.cache_path.empty() && std::filesystem::exists(cfg.cache_path))
        memo.load(cfg.cache_path);
    memo.reset_stats();
    ClassicalJoincutTable classical;

    for (int d = 1; d <= cfg.d_max; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            for (int g = 0; g <= cfg.genus_max; ++g) {
                const int r = rh_transposition_count(alpha, g);
                const Integer value = cfg.kind == "monotone"
                                          ? monotone_H_genus(alpha, g, memo)
                                          : classical_H_joincut(alpha, r, classical);
                emit_partition_row(out, cfg.format, alpha, g, r, value);
            }
        }
    }

    if (cfg.kind == "monotone" && !cfg.cache_path.empty()) memo.save(cfg.cache_path);
    if (cfg.stats)
        err << "stats: hits=" << memo.stats().hits << " misses=" << memo.stats().misses << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    VerifyOptions opts;
    if (cfg.verify_d_max >= 0) opts.d_max = cfg.verify_d_max;
    if (cfg.r_max >= 0) opts.r_max = cfg.r_max;
    if (cfg.weight >= 0) opts.weight = cfg.weight;
    if (cfg.verify_degree >= 0) opts.degree = cfg.verify_degree;
    opts.cache_path = cfg.cache_path;

    const auto results = run_suites(cfg.suite, opts);
    bool all_pass = true;
    for (const SuiteResult& res : results) {
        out << (res.pass ? "[PASS] " : "[FAIL] ") << res.name;
        if (!res.pass) out << ": " << res.first_failure;
        out << "\n";
        for (const std::string& line : res.lines) out << "    " << line << "\n";
        all_pass = all_pass && res.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact monotone and classical Hurwitz number calculator"};
    app.require_subcommand(1);

    CLI::App* compute = app.add_subcommand(
        "compute", "Compute one number (kinds: monotone, classical, bms, oracle, jm-total)");
    compute->add_option("kind", cfg.kind, "What to compute")->required();
    compute->add_option("--alpha", cfg.alpha, "Target cycle type, e.g. 2,1")->required();
    compute->add_option("--genus", cfg.genus, "Genus g >= 0");
    compute->add_option("--r", cfg.r, "Number of factors");
    compute->add_option("--method", cfg.method, "recurrence | closed-form | oracle | joincut");
    compute->add_flag("--all-methods", cfg.all_methods, "Run every applicable method and compare");
    compute->add_option("--mode", cfg.mode, "oracle kind: monotone | classical | rank");
    compute->add_flag("--total", cfg.total, "oracle kind: drop the transitivity restriction");
    compute->add_option("--bound-d", cfg.bound_d, "Override enumeration weight bound");
    compute->add_option("--bound-r", cfg.bound_r, "Override enumeration factor bound");
    compute->add_option("--cache", cfg.cache_path, "Monotone memo cache file")
        ->envname("HURWITZ_CACHE");

    CLI::App* table = app.add_subcommand("table", "Emit a table of values");
    table->add_option("--kind", cfg.kind, "monotone | classical | toprec")->required();
    table->add_option("--d-max", cfg.d_max, "Max partition weight");
    table->add_option("--genus-max", cfg.genus_max, "Max genus");
    table->add_option("--genus", cfg.genus, "toprec: genus");
    table->add_option("--points", cfg.points, "toprec: number of variables");
    table->add_option("--degree", cfg.degree, "toprec: per-variable degree cap");
    table->add_option("--format", cfg.format, "csv | json | plain")
        ->check(CLI::IsMember({"csv", "json", "plain"}));
    table->add_option("--cache", cfg.cache_path, "Monotone memo cache file")
        ->envname("HURWITZ_CACHE");
    table->add_flag("--stats", cfg.stats, "Print cache hit/miss statistics to stderr");

    CLI::App* verify = app.add_subcommand("verify", "Run cross-verification suites");
    verify->add_option("--suite", cfg.suite,
                       "oracle-vs-recurrence | closed-form | jm-total | exp-log | joincut | "
                       "operator-genus | f3d | toprec | all");
    verify->add_option("--d-max", cfg.verify_d_max, "Partition weight cap");
    verify->add_option("--r-max", cfg.r_max, "Factor count cap");
    verify->add_option("--weight", cfg.weight, "Series weight cap");
    verify->add_option("--degree", cfg.verify_degree, "Catalyst/table degree cap");
    verify->add_option("--cache", cfg.cache_path, "Monotone memo cache file")
        ->envname("HURWITZ_CACHE");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(cfg, out);
        if (table->parsed()) return cmd_table(cfg, out, err);
        if (verify->parsed()) return cmd_verify(cfg, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hurwitz

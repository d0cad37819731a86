#include "hurwitz/verify.hpp"

#include <functional>
#include <map>

#include "hurwitz/closed_form.hpp"
#include "hurwitz/jm_algebra.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/pde.hpp"
#include "hurwitz/recurrence.hpp"
#include "hurwitz/toprec.hpp"

namespace hurwitz {

namespace {

MemoTable preloaded_memo(const VerifyOptions& opts) {
    MemoTable memo;
    if (!opts.cache_path.empty()) memo.load(opts.cache_path);
    return memo;
}

void fail(SuiteResult& res, const std::string& message) {
    if (res.pass) {
        res.pass = false;
        res.first_failure = message;
    }
}

// Series suites accept either --weight or, failing that, --d-max as the
// truncation weight.
int weight_cap(const VerifyOptions& opts, int dflt) {
    if (opts.weight) return *opts.weight;
    if (opts.d_max) return *opts.d_max;
    return dflt;
}

SuiteResult suite_oracle_vs_recurrence(const VerifyOptions& opts) {
    SuiteResult res{"oracle-vs-recurrence"};
    MemoTable memo = preloaded_memo(opts);
    const int d_max = opts.d_max.value_or(5);
    std::size_t cases = 0;
    for (int d = 1; d <= d_max && res.pass; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            const int r_hi = opts.r_max.value_or(d + alpha.length() + 2);
            for (int r = 0; r <= r_hi; ++r) {
                const Integer lhs = monotone_M(alpha, r, memo);
                const Integer rhs = count_monotone(alpha, r, true);
                ++cases;
                if (lhs != rhs) {
                    fail(res, "M^" + std::to_string(r) + "(" + alpha.str() + "): recurrence " +
                                  to_decimal(lhs) + " vs enumeration " + to_decimal(rhs));
                    break;
                }
            }
            if (!res.pass) break;
        }
    }
    res.lines.push_back("monotone recurrence vs enumeration: " + std::to_string(cases) +
                        " cases (d <= " + std::to_string(d_max) + ", genus <= 2)");
    return res;
}

SuiteResult suite_closed_form(const VerifyOptions& opts) {
    SuiteResult res{"closed-form"};
    MemoTable memo = preloaded_memo(opts);
    const int d_formula = opts.d_max.value_or(8);

    std::size_t cases = 0;
    for (int d = 1; d <= d_formula && res.pass; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            const Integer formula = monotone_genus0(alpha);
            const Integer rec = monotone_H_genus(alpha, 0, memo);
            ++cases;
            if (formula != rec) {
                fail(res, "monotone genus-0 formula vs recurrence at (" + alpha.str() + "): " +
                              to_decimal(formula) + " vs " + to_decimal(rec));
                break;
            }
        }
    }
    res.lines.push_back("monotone genus-0 formula vs recurrence: " + std::to_string(cases) +
                        " partitions (d <= " + std::to_string(d_formula) + ")");

    ClassicalJoincutTable classical;
    cases = 0;
    for (int d = 1; d <= 6 && res.pass; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            const Integer formula = classical_genus0(alpha);
            const Integer rec =
                classical_H_joincut(alpha, rh_transposition_count(alpha, 0), classical);
            ++cases;
            if (formula != rec) {
                fail(res, "classical genus-0 formula vs join-cut at (" + alpha.str() + "): " +
                              to_decimal(formula) + " vs " + to_decimal(rec));
                break;
            }
        }
    }
    res.lines.push_back("classical genus-0 formula vs join-cut: " + std::to_string(cases) +
                        " partitions (d <= 6)");

    const UniSeries catalan = one_point_genus0(12);
    for (int d = 1; d <= 12 && res.pass; ++d) {
        const Integer lhs = monotone_genus0_single_cycle(d);
        const Rational rhs = Rational(factorial(d - 1)) * catalan[d - 1];
        if (Rational(lhs) != rhs)
            fail(res, "single-cycle value vs (d-1)! Catalan at d=" + std::to_string(d));
    }
    res.lines.push_back("single-cycle closed form vs Catalan numbers: d <= 12");

    for (int d = 1; d <= 10 && res.pass; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            if (monotone_genus0(alpha) <= 0) fail(res, "monotone_genus0 not positive at " + alpha.str());
            if (classical_genus0(alpha) <= 0) fail(res, "classical_genus0 not positive at " + alpha.str());
        }
    }
    res.lines.push_back("integrality and positivity stress: d <= 10");

    // Report-only comparisons; documented ambiguities, never asserted.
    for (int d : {2, 4}) {
        std::vector<int> ones(d, 1);
        const FormulaReport rep = all_ones_report(d, monotone_genus0(Partition(ones)));
        res.lines.push_back("report-only all-ones d=" + std::to_string(d) + ": " + rep.cross_check);
    }
    struct BmsCase {
        Partition alpha;
        int r;
    };
    for (const BmsCase& c : {BmsCase{Partition{1, 1}, 2}, BmsCase{Partition{2}, 2}, BmsCase{Partition{2}, 3}}) {
        const Integer enumerated =
            class_size(c.alpha) * count_rank_factorizations(c.alpha, c.r, 0);
        const FormulaReport rep = bms_report(c.alpha, c.r, enumerated);
        res.lines.push_back("report-only bms (" + c.alpha.str() + "), r=" + std::to_string(c.r) +
                            ": " + rep.cross_check);
    }
    return res;
}

SuiteResult suite_jm_total(const VerifyOptions& opts) {
    SuiteResult res{"jm-total"};
    const int d_max = opts.d_max.value_or(5);
    const int r_max = opts.r_max.value_or(6);
    std::size_t cases = 0;
    for (int d = 1; d <= d_max && res.pass; ++d) {
        for (int r = 0; r <= r_max && res.pass; ++r) {
            const GroupAlgebraElement h = complete_homogeneous_jm(d, r);
            for (const Partition& alpha : partitions_of(d)) {
                const Rational lhs = class_coefficient(h, alpha);
                const Integer rhs = count_monotone(alpha, r, false);
                ++cases;
                if (lhs.get_den() != 1 || lhs.get_num() < 0 || lhs != Rational(rhs)) {
                    fail(res, "[C_" + alpha.str() + "] h_" + std::to_string(r) + " = " +
                                  to_fraction(lhs) + " vs total monotone count " + to_decimal(rhs));
                    break;
                }
            }
        }
    }
    res.lines.push_back("h_r class coefficients vs total monotone counts: " +
                        std::to_string(cases) + " cases (d <= " + std::to_string(d_max) +
                        ", r <= " + std::to_string(r_max) + ")");

    for (int d = 1; d <= 6 && res.pass; ++d)
        for (int r = 0; r <= 6 && res.pass; ++r)
            if (!centrality_check(complete_homogeneous_jm(d, r)))
                fail(res, "h_" + std::to_string(r) + " not central for d=" + std::to_string(d));
    res.lines.push_back("centrality of h_r: d <= 6, r <= 6");
    return res;
}

SuiteResult suite_exp_log(const VerifyOptions& opts) {
    SuiteResult res{"exp-log"};
    MemoTable memo = preloaded_memo(opts);
    const int d_max = opts.d_max.value_or(5);
    const int r_mon = opts.r_max.value_or(8);
    const int r_cls = std::min(6, r_mon);

    const PartitionSeries hvec = build_monotone_series(d_max, r_mon, memo);
    const PartitionSeries tau_vec = build_tau_monotone_jm(d_max, r_mon);
    if (!(exp_series(hvec) == tau_vec))
        fail(res, "tau-vec != exp(H-vec) within (d <= " + std::to_string(d_max) +
                      ", r <= " + std::to_string(r_mon) + ")");
    res.lines.push_back("monotone exponential formula: d <= " + std::to_string(d_max) +
                        ", r <= " + std::to_string(r_mon));

    ClassicalJoincutTable classical;
    const PartitionSeries h = build_classical_series(d_max, r_cls, classical);
    const PartitionSeries tau = build_tau_classical_oracle(d_max, r_cls);
    if (!(exp_series(h) == tau))
        fail(res, "tau != exp(H) within (d <= " + std::to_string(d_max) + ", r <= " +
                      std::to_string(r_cls) + ")");
    res.lines.push_back("classical exponential formula: d <= " + std::to_string(d_max) +
                        ", r <= " + std::to_string(r_cls));
    return res;
}

SuiteResult suite_joincut(const VerifyOptions& opts) {
    SuiteResult res{"joincut"};
    MemoTable memo = preloaded_memo(opts);
    const int D = weight_cap(opts, 6);
    const int R = opts.r_max.value_or(10);

    const PartitionSeries hvec = build_monotone_series(D, R, memo);
    const PartitionSeries mon_res = joincut_residual(hvec, JoincutMode::monotone);
    if (!mon_res.is_zero())
        fail(res, "monotone join-cut residual nonzero, first term: " +
                      mon_res.dump().substr(0, mon_res.dump().find('\n')));
    res.lines.push_back("monotone join-cut residual == 0: D <= " + std::to_string(D) +
                        ", R <= " + std::to_string(R));

    ClassicalJoincutTable classical;
    const PartitionSeries h = build_classical_series(std::min(D, 5), std::min(R, 7), classical);
    const PartitionSeries cls_res = joincut_residual(h, JoincutMode::classical);
    if (!cls_res.is_zero()) fail(res, "classical join-cut residual nonzero");
    res.lines.push_back("classical join-cut residual == 0: D <= " +
                        std::to_string(std::min(D, 5)) + ", R <= " + std::to_string(std::min(R, 7)));
    return res;
}

SuiteResult suite_operator_genus(const VerifyOptions& opts) {
    SuiteResult res{"operator-genus"};
    MemoTable memo = preloaded_memo(opts);
    const int D = weight_cap(opts, 6);
    const int X = opts.degree.value_or(6);

    if (!genus0_operator_residual(D, X, memo).is_zero())
        fail(res, "genus-0 operator equation residual nonzero");
    res.lines.push_back("genus-0 operator residual == 0: weight <= " + std::to_string(D) +
                        ", x-degree <= " + std::to_string(X));

    const int D1 = std::min(D, 5), X1 = std::min(X, 5);
    const PartitionSeries solved = higher_genus_step(1, D1, X1, memo);
    const PartitionSeries built = lifted_genus_series(1, D1 + X1, memo);
    if (!(solved == built)) fail(res, "genus-1 operator solution differs from recurrence series");
    res.lines.push_back("genus-1 operator step matches recurrence: weight <= " +
                        std::to_string(D1) + ", x-degree <= " + std::to_string(X1));
    return res;
}

SuiteResult suite_f3d(const VerifyOptions& opts) {
    SuiteResult res{"f3d"};
    const int D = weight_cap(opts, 6);
    if (!pq_roundtrip_check(D)) fail(res, "p <-> q round trip failed");
    res.lines.push_back("p <-> q round trip exact: weight <= " + std::to_string(D));
    if (!f3d_residual(D).is_zero()) fail(res, "third-derivative identity residual nonzero");
    res.lines.push_back("(2D-2)(2D-1)(2D)F identity residual == 0: weight <= " + std::to_string(D));
    return res;
}

SuiteResult suite_toprec(const VerifyOptions& opts) {
    SuiteResult res{"toprec"};
    MemoTable memo = preloaded_memo(opts);
    const ToprecCaps caps{2, 3, opts.degree.value_or(12)};
    struct Case {
        int g, ell, degree;
    };
    for (const Case& c : {Case{0, 1, std::min(10, caps.max_degree)}, Case{0, 2, 6},
                          Case{1, 1, 4}, Case{1, 2, 4}}) {
        const ReconcileReport rep = reconcile(c.g, c.ell, c.degree, memo, caps);
        if (!rep.ok)
            fail(res, "toprec (" + std::to_string(c.g) + "," + std::to_string(c.ell) + "," +
                          std::to_string(c.degree) + "): " + rep.detail);
        res.lines.push_back("toprec table (g=" + std::to_string(c.g) + ", l=" +
                            std::to_string(c.ell) + ", degree " + std::to_string(c.degree) +
                            "): " + std::to_string(rep.cells_checked) + " cells reconciled");
    }
    return res;
}

using SuiteFn = std::function<SuiteResult(const VerifyOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"oracle-vs-recurrence", suite_oracle_vs_recurrence},
        {"closed-form", suite_closed_form},
        {"jm-total", suite_jm_total},
        {"exp-log", suite_exp_log},
        {"joincut", suite_joincut},
        {"operator-genus", suite_operator_genus},
        {"f3d", suite_f3d},
        {"toprec", suite_toprec},
    };
    return suites;
}

SuiteResult run_guarded(const std::string& name, const SuiteFn& fn, const VerifyOptions& opts) {
    try {
        return fn(opts);
    } catch (const BoundExceeded&) {
        throw;
    } catch (const std::exception& e) {
        SuiteResult res{name};
        res.pass = false;
        res.first_failure = std::string("exception: ") + e.what();
        return res;
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& opts) {
    std::vector<SuiteResult> out;
    if (name == "all") {
        for (const auto& [suite, fn] : registry()) out.push_back(run_guarded(suite, fn, opts));
        return out;
    }
    for (const auto& [suite, fn] : registry()) {
        if (suite == name) {
            out.push_back(run_guarded(suite, fn, opts));
            return out;
        }
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace hurwitz

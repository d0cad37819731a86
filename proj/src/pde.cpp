#include "hurwitz/pde.hpp"

#include <stdexcept>

#include "hurwitz/jm_algebra.hpp"
#include "hurwitz/oracle.hpp"

namespace hurwitz {

namespace {

std::vector<int> distinct_parts(const Partition& alpha) {
    std::vector<int> out;
    for (int p : alpha.parts())
        if (out.empty() || out.back() != p) out.push_back(p);
    return out;
}

}  // namespace

PartitionSeries build_monotone_series(int D, int R, MemoTable& memo) {
    PartitionSeries s(SeriesCaps{D, R, 0, 0});
    for (int d = 1; d <= D; ++d) {
        const Integer dfact = factorial(d);
        for (const Partition& alpha : partitions_of(d)) {
            for (int r = 0; r <= R; ++r) {
                Integer h = monotone_H(alpha, r, memo);
                if (h == 0) continue;
                s.add({alpha, r, {}}, make_rational(h, dfact));
            }
        }
    }
    return s;
}

PartitionSeries build_classical_series(int D, int R, ClassicalJoincutTable& memo) {
    PartitionSeries s(SeriesCaps{D, R, 0, 0});
    for (int d = 1; d <= D; ++d) {
        const Integer dfact = factorial(d);
        for (const Partition& alpha : partitions_of(d)) {
            for (int r = 0; r <= R; ++r) {
                Integer h = classical_H_joincut(alpha, r, memo);
                if (h == 0) continue;
                s.add({alpha, r, {}}, make_rational(h, dfact * factorial(r)));
            }
        }
    }
    return s;
}

PartitionSeries build_tau_monotone_jm(int D, int R) {
    PartitionSeries s(SeriesCaps{D, R, 0, 0});
    s.add({}, 1);
    for (int d = 1; d <= D; ++d) {
        const Integer dfact = factorial(d);
        for (int r = 0; r <= R; ++r) {
            const GroupAlgebraElement h = complete_homogeneous_jm(d, r);
            for (const Partition& alpha : partitions_of(d)) {
                Rational c = class_coefficient(h, alpha);
                if (c == 0) continue;
                s.add({alpha, r, {}}, c * class_size(alpha) / dfact);
            }
        }
    }
    return s;
}

PartitionSeries build_tau_classical_oracle(int D, int R) {
    PartitionSeries s(SeriesCaps{D, R, 0, 0});
    s.add({}, 1);
    for (int d = 1; d <= D; ++d) {
        const Integer dfact = factorial(d);
        for (const Partition& alpha : partitions_of(d)) {
            for (int r = 0; r <= R; ++r) {
                Integer n = count_classical(alpha, r, /*transitive_only=*/false);
                if (n == 0) continue;
                s.add({alpha, r, {}}, make_rational(class_size(alpha) * n, dfact * factorial(r)));
            }
        }
    }
    return s;
}

PartitionSeries build_genus_series(int g, SeriesCaps caps, MemoTable& memo) {
    PartitionSeries s(caps);
    for (int d = 1; d <= caps.max_weight; ++d) {
        const Integer dfact = factorial(d);
        for (const Partition& alpha : partitions_of(d)) {
            Integer h = monotone_H_genus(alpha, g, memo);
            if (h == 0) continue;
            s.add({alpha, 0, {}}, make_rational(h, dfact));
        }
    }
    return s;
}

PartitionSeries build_F(int D) {
    PartitionSeries s(SeriesCaps{D, 0, 0, 0});
    for (int d = 1; d <= D; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            Rational c = rising(Integer(2 * d + 1), alpha.length() - 3) / Rational(aut_size(alpha));
            for (int part : alpha.parts()) c *= binomial(Integer(2 * part), part);
            s.add({alpha, 0, {}}, c);
        }
    }
    return s;
}

PartitionSeries joincut_operator_rhs(const PartitionSeries& s) {
    PartitionSeries out(s.caps());

    for (const auto& [key, c] : s.terms()) {
        const Partition& beta = key.alpha;
        const auto values = distinct_parts(beta);

        // Join: (i+j) p_i p_j d/dp_{i+j} applied to p_beta.
        for (int part : values) {
            const Rational base = c * part * beta.multiplicity(part);
            const Partition removed = beta.without(part);
            for (int i = 1; i <= part - 1; ++i) {
                PartitionSeries::Key k{removed.with(i).with(part - i), key.t, key.x};
                out.add(std::move(k), base);
            }
        }

        // Cut: ij p_{i+j} d^2/(dp_i dp_j), ordered value pairs (i, j).
        for (int i : values) {
            for (int j : values) {
                Integer ways = (i == j) ? Integer(beta.multiplicity(i)) * (beta.multiplicity(i) - 1)
                                        : Integer(beta.multiplicity(i)) * beta.multiplicity(j);
                if (ways == 0) continue;
                PartitionSeries::Key k{beta.without(i).without(j).with(i + j), key.t, key.x};
                out.add(std::move(k), c * Rational(Integer(i) * j * ways));
            }
        }
    }

    // Product: ij p_{i+j} (dS/dp_i)(dS/dp_j), ordered pairs of terms.
    for (const auto& [k1, c1] : s.terms()) {
        if (k1.alpha.empty()) continue;
        for (const auto& [k2, c2] : s.terms()) {
            if (k2.alpha.empty()) continue;
            for (int i : distinct_parts(k1.alpha)) {
                const Partition left = k1.alpha.without(i);
                const Rational ci = c1 * i * k1.alpha.multiplicity(i);
                for (int j : distinct_parts(k2.alpha)) {
                    PartitionSeries::Key k;
                    std::vector<int> parts = left.parts();
                    const Partition right = k2.alpha.without(j);
                    parts.insert(parts.end(), right.parts().begin(), right.parts().end());
                    parts.push_back(i + j);
                    k.alpha = Partition(std::move(parts));
                    k.t = k1.t + k2.t;
                    k.x.resize(k1.x.size());
                    for (std::size_t a = 0; a < k.x.size(); ++a) k.x[a] = k1.x[a] + k2.x[a];
                    out.add(std::move(k), ci * c2 * j * k2.alpha.multiplicity(j));
                }
            }
        }
    }

    return out;
}

PartitionSeries joincut_residual(const PartitionSeries& s, JoincutMode mode) {
    const PartitionSeries rhs = joincut_operator_rhs(s);
    if (mode == JoincutMode::monotone) {
        // z dS/dz - z p_1 - t * rhs
        PartitionSeries res = euler_operator(s);
        res.add({Partition{1}, 0, {}}, -1);
        for (const auto& [key, value] : rhs.terms()) {
            PartitionSeries::Key k = key;
            k.t += 1;
            res.add(std::move(k), -value);
        }
        return res;
    }
    // dS/dt - rhs/2, truncated to grade R-1 where both sides are exact.
    SeriesCaps caps = s.caps();
    caps.max_t = caps.max_t > 0 ? caps.max_t - 1 : 0;
    PartitionSeries res(caps);
    for (const auto& [key, value] : s.terms()) {
        if (key.t == 0) continue;
        PartitionSeries::Key k = key;
        k.t -= 1;
        res.add(std::move(k), value * key.t);
    }
    for (const auto& [key, value] : rhs.terms()) res.add(key, -value / 2);
    return res;
}

PartitionSeries lifted_genus_series(int g, int total_cap, MemoTable& memo) {
    SeriesCaps caps{total_cap, 0, 2, total_cap, total_cap};
    return lift(build_genus_series(g, caps, memo), 1);
}

PartitionSeries genus0_operator_residual(int D, int X, MemoTable& memo) {
    const int total = D + X;
    PartitionSeries g0 = lifted_genus_series(0, total, memo);
    PartitionSeries res = g0;
    res -= project(split(g0, 1, 2), 2);
    res -= mul(g0, g0);
    res.add({Partition{}, 0, {1, 0}}, -1);
    return res;
}

PartitionSeries higher_genus_step(int g, int D, int X, MemoTable& memo) {
    if (g < 1) throw std::invalid_argument("higher_genus_step: g must be >= 1");
    const int total = D + X;
    const PartitionSeries g0 = lifted_genus_series(0, total, memo);

    PartitionSeries rhs = lift(lifted_genus_series(g - 1, total, memo), 1);
    for (int gp = 1; gp <= g - 1; ++gp)
        rhs += mul(lifted_genus_series(gp, total, memo), lifted_genus_series(g - gp, total, memo));

    // The map G -> 2 G0 G + Pi_2 Split G + rhs contracts in the grading
    // (total grade ascending, x-degree descending), so iteration from zero
    // reaches the exact fixed point.
    PartitionSeries solved(g0.caps());
    const int max_iter = 3 * (total + 2);
    for (int iter = 0;; ++iter) {
        PartitionSeries next = mul(g0, solved);
        next *= 2;
        next += project(split(solved, 1, 2), 2);
        next += rhs;
        if (next == solved) break;
        if (iter >= max_iter) throw std::logic_error("higher_genus_step: iteration did not stabilize");
        solved = std::move(next);
    }
    return solved;
}

QTransformData q_transform(int D) {
    const SeriesCaps caps{D, 0, 0, 0};
    auto gamma_of = [&](const std::vector<PartitionSeries>& q) {
        PartitionSeries g(caps);
        for (int k = 1; k <= D; ++k) {
            PartitionSeries term = q[k - 1];
            term *= Rational(binomial(Integer(2 * k), k));
            g += term;
        }
        return g;
    };

    std::vector<PartitionSeries> q;
    for (int j = 1; j <= D; ++j)
        q.push_back(PartitionSeries::monomial(caps, {Partition{j}, 0, {}}, 1));

    for (int iter = 0; iter <= D + 1; ++iter) {
        PartitionSeries gamma = gamma_of(q);
        PartitionSeries neg_gamma = gamma;
        neg_gamma *= -1;
        std::vector<PartitionSeries> next;
        for (int j = 1; j <= D; ++j) {
            PartitionSeries pj = PartitionSeries::monomial(caps, {Partition{j}, 0, {}}, 1);
            next.push_back(mul(pj, pow_of_one_plus(neg_gamma, -2L * j)));
        }
        if (next == q) break;
        if (iter == D + 1) throw std::logic_error("q_transform: fixed point not reached");
        q = std::move(next);
    }

    QTransformData out{std::move(q), PartitionSeries(caps), PartitionSeries(caps)};
    out.gamma = gamma_of(out.q);
    for (int k = 1; k <= D; ++k) {
        PartitionSeries term = out.q[k - 1];
        term *= Rational(Integer(2 * k + 1) * binomial(Integer(2 * k), k));
        out.eta += term;
    }
    return out;
}

bool pq_roundtrip_check(int D) {
    const SeriesCaps caps{D, 0, 0, 0};
    const QTransformData qt = q_transform(D);
    PartitionSeries neg_gamma = qt.gamma;
    neg_gamma *= -1;
    for (int j = 1; j <= D; ++j) {
        PartitionSeries back = mul(qt.q[j - 1], pow_of_one_plus(neg_gamma, 2L * j));
        if (!(back == PartitionSeries::monomial(caps, {Partition{j}, 0, {}}, 1))) return false;
    }
    return true;
}

PartitionSeries f3d_residual(int D) {
    PartitionSeries lhs = build_F(D);
    {
        PartitionSeries scaled(lhs.caps());
        for (const auto& [key, value] : lhs.terms()) {
            const long d = key.alpha.weight();
            scaled.add(key, value * Rational(Integer(2 * d - 2) * (2 * d - 1) * (2 * d)));
        }
        lhs = std::move(scaled);
    }
    const QTransformData qt = q_transform(D);
    PartitionSeries neg_gamma = qt.gamma;
    neg_gamma *= -1;
    PartitionSeries neg_eta = qt.eta;
    neg_eta *= -1;
    PartitionSeries rhs = mul(pow_of_one_plus(neg_gamma, 3), pow_of_one_plus(neg_eta, -1));
    rhs.add({}, -1);
    return lhs - rhs;
}

UniSeries one_point_genus0(int degree) {
    UniSeries radicand(degree + 1);
    radicand[0] = 1;
    if (degree + 1 >= 1) radicand[1] = -4;
    const UniSeries root = radicand.sqrt_from_one();
    UniSeries out(degree);
    for (int k = 0; k <= degree; ++k) out[k] = -root[k + 1] / 2;
    return out;
}

UniSeries spectral_curve_solution(int degree) {
    UniSeries y(degree);
    y[0] = 1;
    for (int iter = 0; iter <= degree; ++iter) {
        const UniSeries sq = y * y;
        UniSeries next(degree);
        next[0] = 1;
        for (int k = 1; k <= degree; ++k) next[k] = sq[k - 1];
        if (next == y) break;
        y = next;
    }
    if (!(y == one_point_genus0(degree)))
        throw std::logic_error("spectral_curve_solution: disagrees with closed form");
    return y;
}

BiSeries two_point_genus0(int degree) {
    UniSeries radicand(degree);
    radicand[0] = 1;
    if (degree >= 1) radicand[1] = -4;
    const UniSeries root = radicand.sqrt_from_one();

    BiSeries s1(degree), s2(degree);
    for (int k = 0; k <= degree; ++k) {
        s1.at(k, 0) = root[k];
        s2.at(0, k) = root[k];
    }
    BiSeries sum = s1 + s2;
    BiSeries den = s1 * s2 * sum * sum;
    BiSeries out = den.inverse();
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; j <= degree; ++j) out.at(i, j) *= 4;
    return out;
}

}  // namespace hurwitz

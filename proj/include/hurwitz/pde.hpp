#pragma once

#include "hurwitz/recurrence.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

// Generating function of monotone single Hurwitz numbers:
// [t^r p_alpha] = H>^r(alpha) / d! for |alpha| <= D, r <= R.
PartitionSeries build_monotone_series(int D, int R, MemoTable& memo);

// Classical counterpart with exponential t:
// [t^r p_alpha] = H^r(alpha) / (d! r!).
PartitionSeries build_classical_series(int D, int R, ClassicalJoincutTable& memo);

// Not-necessarily-transitive monotone generating function from the group
// algebra: [t^r p_alpha] = |C_alpha| [C_alpha] h_r(J_1..J_d) / d!, with
// constant term 1.
PartitionSeries build_tau_monotone_jm(int D, int R);

// Not-necessarily-transitive classical generating function from brute
// force: [t^r p_alpha] = |C_alpha| count / (d! r!), with constant term 1.
PartitionSeries build_tau_classical_oracle(int D, int R);

// Genus-g slice: [p_alpha] = H>_g(alpha) / d! within the given caps.
PartitionSeries build_genus_series(int g, SeriesCaps caps, MemoTable& memo);

// The explicit genus-zero series:
// [p_alpha] = (1/|Aut alpha|)(2d+1)^{rising(ell-3)} prod_j C(2 alpha_j, alpha_j).
PartitionSeries build_F(int D);

// The common right-hand side of both join-cut equations:
// sum_{i,j>=1} ( (i+j) p_i p_j dS/dp_{i+j} + ij p_{i+j} d2S/dp_i dp_j
//              + ij p_{i+j} (dS/dp_i)(dS/dp_j) ).
PartitionSeries joincut_operator_rhs(const PartitionSeries& s);

enum class JoincutMode { monotone, classical };

// Monotone: residual of  z dH/dz - z p_1 = t * rhs  (the join-cut equation
// multiplied through by 2t, so grade r of the residual is the t^{r-1}
// layer of the original equation; grade 0 is the t^{-1} layer, which
// checks that d * [t^0]-coefficients reproduce z p_1).
// Classical: residual of  dH/dt = rhs / 2, valid to grade R-1.
PartitionSeries joincut_residual(const PartitionSeries& s, JoincutMode mode);

// Delta_1 applied to the recurrence-built genus-g series, exact on
// |alpha| + x-degree <= total_cap.
PartitionSeries lifted_genus_series(int g, int total_cap, MemoTable& memo);

// Residual of Delta_1 H_0 = Pi_2 Split_{1->2} Delta_1 H_0 + (Delta_1 H_0)^2 + x_1
// with the genus-0 series built from the recurrence; exact (hence
// expected identically zero) on weight <= D, x-degree <= X.
PartitionSeries genus0_operator_residual(int D, int X, MemoTable& memo);

// Solves (1 - 2 Delta_1 H_0 - Pi_2 Split_{1->2}) Delta_1 H_g =
//        Delta_1^2 H_{g-1} + sum_{g'=1}^{g-1} Delta_1 H_{g'} Delta_1 H_{g-g'}
// degree by degree for Delta_1 H_g, using only genus < g recurrence data.
// Exact on |alpha| + x-degree <= D + X.
PartitionSeries higher_genus_step(int g, int D, int X, MemoTable& memo);

/// The p -> q change of variables q_j = p_j (1 - gamma)^{-2j} resolved by
/// fixed-point iteration, with gamma = sum C(2k,k) q_k and
/// eta = sum (2k+1) C(2k,k) q_k re-expanded in p.
struct QTransformData {
    std::vector<PartitionSeries> q;  // q[j-1] = q_{j}, j = 1..D
    PartitionSeries gamma;
    PartitionSeries eta;
};

QTransformData q_transform(int D);

// Substitutes the q-expansions back into p_j = q_j (1 - gamma)^{2j}.
bool pq_roundtrip_check(int D);

// Residual of (2D-2)(2D-1)(2D) F = (1-gamma)^3/(1-eta) - 1, fully
// expanded in p.
PartitionSeries f3d_residual(int D);

// (1 - sqrt(1-4x))/(2x): the one-point genus-zero series (Catalan numbers).
UniSeries one_point_genus0(int degree);

// Solves y = 1 + x y^2 by iteration and asserts agreement with the closed
// form above.
UniSeries spectral_curve_solution(int degree);

// 4 / ( sqrt(1-4x1) sqrt(1-4x2) (sqrt(1-4x1)+sqrt(1-4x2))^2 ).
BiSeries two_point_genus0(int degree);

}  // namespace hurwitz

#pragma once

#include <string>

#include "hurwitz/exact.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

// Genus-zero monotone single Hurwitz number
//   (d!/|Aut alpha|) (2d+1)^{rising(ell-3)} prod_j C(2 alpha_j, alpha_j),
// with the reciprocal rising-product convention for ell < 3.  The result
// is asserted integral.
Integer monotone_genus0(const Partition& alpha);

// Special case alpha = (d): (2d-2)!/d!, cross-checked against the general
// formula.
Integer monotone_genus0_single_cycle(int d);

// The (d-1)! 2^{d-1} value quoted for alpha = (1^d).  Disagrees with both
// the general formula and the brute-force count at d = 2 and d = 4; kept
// only for the discrepancy report, never asserted.
Integer monotone_genus0_all_ones_quoted(int d);

// Classical genus-zero Hurwitz number
//   (d!/|Aut alpha|) (d+ell-2)! d^{ell-3} prod_j alpha_j^{alpha_j}/alpha_j!,
// exact rational evaluation (d^{ell-3} with ell < 3 included), asserted
// integral.
Integer classical_genus0(const Partition& alpha);

// Bousquet-Melou--Schaeffer genus-zero count of transitive factorizations
// into r arbitrary permutations, as printed:
//   (d!/|Aut alpha|) r ((r-1)d - ell + 2)^{rising(ell-2)} prod_j C(r alpha_j - 1, alpha_j).
// Evaluated literally; rationals permitted and no integrality asserted,
// since the printed form does not match direct enumeration at small cases.
Rational bms_genus0(const Partition& alpha, int r);

/// One formula evaluation with its cross-check status, for the
/// report-only comparisons.
struct FormulaReport {
    Partition alpha;
    std::string formula;
    Rational value;
    bool integral = false;
    std::string cross_check;
};

FormulaReport bms_report(const Partition& alpha, int r, const Integer& oracle_value);
FormulaReport all_ones_report(int d, const Integer& reference_value);

}  // namespace hurwitz

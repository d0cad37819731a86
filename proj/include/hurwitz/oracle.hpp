#pragma once

#include "hurwitz/bounds.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

/// Enumeration limits.  The oracle is exhaustive search; these keep it
/// from being asked for something that cannot finish.
struct OracleBounds {
    int monotone_max_d = 7;
    int monotone_max_r = 12;
    int classical_max_d = 6;
    int classical_max_r = 8;
    int rank_max_d = 5;
    int rank_max_r = 4;
};

// Number of r-tuples of transpositions (a_i b_i), a_i < b_i, with
// non-decreasing maxima b_1 <= ... <= b_r and left-to-right product equal
// to a fixed canonical permutation of cycle type alpha; restricted to
// tuples generating a transitive group when transitive_only.  Equals
// M^r(alpha) when transitive_only.
Integer count_monotone(const Partition& alpha, int r, bool transitive_only,
                       const OracleBounds& bounds = {});

// Same, without the monotonicity restriction.  class_size(alpha) times the
// transitive count is the single Hurwitz number H^r(alpha).
Integer count_classical(const Partition& alpha, int r, bool transitive_only,
                        const OracleBounds& bounds = {});

// Number of r-tuples of arbitrary permutations with product a fixed sigma
// of type alpha, transitive joint action, and total rank
// d + ell + 2g - 2, where rank(rho) = d - (number of cycles of rho).
// Identity factors (rank 0) are admissible.
Integer count_rank_factorizations(const Partition& alpha, int r, int genus,
                                  const OracleBounds& bounds = {});

// Per-permutation variants used by the class-independence check.
Integer count_monotone_of(const Permutation& sigma, int r, bool transitive_only);
Integer count_classical_of(const Permutation& sigma, int r, bool transitive_only);

// True iff count_monotone computed against every sigma in C_alpha yields
// the same value.
bool class_independence_check(const Partition& alpha, int r,
                              const OracleBounds& bounds = {});

}  // namespace hurwitz

#pragma once

#include <cstdint>
#include <vector>

#include "hurwitz/exact.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

/// Element of the rational group algebra of S_d, stored as a total dense
/// array over all d! permutations indexed by Lehmer rank.  Dense storage is
/// deliberate: complete symmetric polynomials of Jucys-Murphy elements fill
/// the algebra quickly, and the convolution product stays cache-friendly.
/// Default size cap d <= 8 (40320 entries).
class GroupAlgebraElement {
public:
    static GroupAlgebraElement zero(int d);
    static GroupAlgebraElement unit(int d);
    static GroupAlgebraElement basis(const Permutation& sigma);
    static GroupAlgebraElement class_sum(int d, const Partition& alpha);

    int degree() const { return d_; }
    std::size_t size() const { return coeff_.size(); }

    const Rational& coeff(std::uint64_t rank) const { return coeff_[rank]; }
    const Rational& coeff(const Permutation& sigma) const { return coeff_[sigma.lehmer_rank()]; }
    void set_coeff(std::uint64_t rank, Rational value) { coeff_[rank] = std::move(value); }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
    GroupAlgebraElement& operator*=(const Rational& scalar);

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.d_ == b.d_ && a.coeff_ == b.coeff_;
    }

private:
    explicit GroupAlgebraElement(int d);

    int d_ = 0;
    std::vector<Rational> coeff_;
};

// Convolution product under left-to-right composition:
// (ef)(pi) = sum over sigma.then(tau) == pi of e(sigma) f(tau).
GroupAlgebraElement multiply(const GroupAlgebraElement& e, const GroupAlgebraElement& f);

// J_i = (1 i) + (2 i) + ... + (i-1 i); J_1 = 0.  i is 1-based.
GroupAlgebraElement jm_element(int d, int i);

// h_r(J_1, ..., J_d) via the row recursion
// h(n, r) = h(n-1, r) + J_n * h(n, r-1), valid because the J_i commute.
// Memory: one row of r+1 elements, i.e. (r+1) d! rationals.
GroupAlgebraElement complete_homogeneous_jm(int d, int r, int max_d_cap = 8);

// True iff coefficients are constant on every conjugacy class.
bool centrality_check(const GroupAlgebraElement& e);

// Common coefficient of e on the class C_alpha.  When verify_central, the
// whole element is checked first and non-central input raises.
Rational class_coefficient(const GroupAlgebraElement& e, const Partition& alpha,
                           bool verify_central = false);

}  // namespace hurwitz

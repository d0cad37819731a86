#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

/// Permutation of {1,...,d}, stored 0-based as an image table.
/// Products compose left to right throughout: (p.then(q))(x) = q(p(x)),
/// so in a factorization t1 t2 ... tr = sigma, t1 acts first.
class Permutation {
public:
    explicit Permutation(int d);                    // identity
    explicit Permutation(std::vector<int> image);   // 0-based, validated

    static Permutation transposition(int d, int a, int b);  // 0-based, a != b

    // Fixed representative of a cycle type: cycles laid out consecutively,
    // longest first, smallest labels first.  (3,2) -> (1 2 3)(4 5).
    static Permutation canonical_of_type(const Partition& alpha);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& image() const { return img_; }

    Permutation then(const Permutation& g) const;   // apply *this, then g
    Permutation inverse() const;

    Partition cycle_type() const;
    int cycle_count() const;

    // Stable bijection with [0, d!) via the Lehmer code.
    std::uint64_t lehmer_rank() const;
    static Permutation from_lehmer_rank(int d, std::uint64_t rank);

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.img_ == b.img_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

private:
    std::vector<int> img_;
};

// True iff the group generated by the given permutations has a single
// orbit on {1,...,d}; computed by orbit union, not group enumeration.
bool is_transitive(std::span<const Permutation> generators, int d);

std::uint64_t factorial_u64(int n);  // n <= 20

}  // namespace hurwitz

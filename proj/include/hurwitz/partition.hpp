#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/exact.hpp"

namespace hurwitz {

/// Integer partition: the parts are kept sorted non-increasing and all
/// positive.  The empty partition (d = 0) is a valid first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Lenient parse of "3,2,2,1" (any order, surrounding spaces ok);
    // "" parses to the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }           // d
    int length() const { return static_cast<int>(parts_.size()); }  // ell
    bool empty() const { return parts_.empty(); }
    int multiplicity(int k) const;                   // m_k

    Partition with(int k) const;                     // add one part k >= 1
    Partition without(int k) const;                  // remove one part k (must exist)

    std::string str() const;                         // canonical "3,2,2,1"

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    // Table order: by weight, then lexicographically by parts with larger
    // leading parts first, so partitions of 3 run (3), (2,1), (1,1,1).
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
        return a.parts_ > b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Ordered tuple of positive integers; only the topological-recursion
/// module distinguishes order.
struct Composition {
    std::vector<int> parts;
    explicit Composition(std::vector<int> p);
    int weight() const;
    Partition sorted() const;
};

// |C_alpha| = d! / prod_k k^{m_k} m_k!
Integer class_size(const Partition& alpha);

// |Aut alpha| = prod_k m_k!
Integer aut_size(const Partition& alpha);

// Every sub-multiset alpha' of alpha, each listed once with multiplicity
// prod_k C(m_k(alpha), m_k(alpha')); multiplicities sum to 2^ell(alpha).
std::vector<std::pair<Partition, Integer>> sub_multisets(const Partition& alpha);

// r = d + ell + 2g - 2
int rh_transposition_count(const Partition& alpha, int genus);

// Inverse of the above; empty when (r - d - ell + 2) is odd or negative.
std::optional<int> genus_of(const Partition& alpha, int r);

// All partitions of d in table order.
std::vector<Partition> partitions_of(int d);

}  // namespace hurwitz

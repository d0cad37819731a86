#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "hurwitz/exact.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

/// Keyed store (canonical partition, r) -> M^r(alpha) with hit/miss
/// statistics and line-delimited JSON persistence.  Loaded values are
/// trusted as-is, which is what makes a corrupted cache detectable by the
/// verification suites.
class MemoTable {
public:
    struct Stats {
        std::uint64_t hits = 0;
        std::uint64_t misses = 0;
    };

    const Integer* find(const Partition& alpha, int r) const;
    void store(const Partition& alpha, int r, Integer value);

    std::size_t size() const { return table_.size(); }
    const Stats& stats() const { return stats_; }
    void reset_stats() { stats_ = Stats{}; }

    // Format: header {"format":"monotone-memo","version":1}, then one
    // {"alpha":[...],"r":N,"M":"<decimal>"} record per line, sorted by
    // (alpha, r).  Values are decimal strings.
    void save(const std::string& path) const;
    void load(const std::string& path);

    auto begin() const { return table_.begin(); }
    auto end() const { return table_.end(); }

private:
    std::map<std::pair<Partition, int>, Integer> table_;
    mutable Stats stats_;
};

// Which part of the evaluated partition plays the distinguished cycle in
// the recurrence step.  Any choice is valid; largest-part peeling keeps
// the memo small, smallest-part peeling exists as a cross-check.
enum class PeelRule { largest_part, smallest_part };

// M^r(alpha): transitive monotone factorization count of a fixed
// permutation of cycle type alpha into r transpositions, by the
// cut / redundant-join / essential-join recurrence with initial condition
// M^0(alpha) = [alpha = (1)].
Integer monotone_M(const Partition& alpha, int r, MemoTable& memo,
                   PeelRule rule = PeelRule::largest_part);
Integer monotone_M(const Partition& alpha, int r);

// Monotone single Hurwitz number |C_alpha| M^r(alpha).
Integer monotone_H(const Partition& alpha, int r, MemoTable& memo);
Integer monotone_H(const Partition& alpha, int r);

// Genus-indexed form: r = d + ell + 2g - 2.
Integer monotone_H_genus(const Partition& alpha, int genus, MemoTable& memo);
Integer monotone_H_genus(const Partition& alpha, int genus);

/// Memo of classical join-cut coefficients [z^d t^r p_alpha] H, which are
/// H^r(alpha) / (d! r!).
class ClassicalJoincutTable {
public:
    const Rational* find(const Partition& alpha, int r) const;
    void store(const Partition& alpha, int r, Rational value);
    std::size_t size() const { return table_.size(); }

private:
    std::map<std::pair<Partition, int>, Rational> table_;
};

// Single Hurwitz number H^r(alpha) by coefficient extraction from the
// classical join-cut equation, initial condition [t^0] H = z p_1.
Integer classical_H_joincut(const Partition& alpha, int r, ClassicalJoincutTable& memo);
Integer classical_H_joincut(const Partition& alpha, int r);

}  // namespace hurwitz

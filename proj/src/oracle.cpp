#include "hurwitz/oracle.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace hurwitz {

namespace {

constexpr int kMaxGround = 12;

// Depth-first enumeration of transposition tuples against a fixed target.
// Keeps q = p^{-1} sigma up to date, where p is the product of the factors
// chosen so far; appending (a b) swaps q[a] and q[b].  The tuple is a
// factorization exactly when q ends as the identity.  Prunes on the
// minimum transposition count rank(q) = d - cycles(q), its parity, and
// (transitive mode) the number of orbit components still to merge.
class TranspositionSearch {
public:
    TranspositionSearch(const Permutation& sigma, int r, bool transitive_only, bool monotone)
        : d_(sigma.degree()),
          r_(r),
          transitive_only_(transitive_only),
          monotone_(monotone),
          components_(sigma.degree()) {
        for (int x = 0; x < d_; ++x) {
            q_[x] = sigma(x);
            uf_parent_[x] = x;
            uf_size_[x] = 1;
        }
    }

    std::uint64_t run() {
        count_ = 0;
        descend(0, 1);
        return count_;
    }

private:
    int rank_of_q() const {
        std::array<char, kMaxGround> seen{};
        int cycles = 0;
        for (int x = 0; x < d_; ++x) {
            if (seen[x]) continue;
            ++cycles;
            for (int y = x; !seen[y]; y = q_[y]) seen[y] = 1;
        }
        return d_ - cycles;
    }

    int uf_find(int x) const {
        while (uf_parent_[x] != x) x = uf_parent_[x];
        return x;
    }

    // Returns the merged child root, or -1 if already connected.
    int uf_union(int a, int b) {
        a = uf_find(a);
        b = uf_find(b);
        if (a == b) return -1;
        if (uf_size_[a] > uf_size_[b]) std::swap(a, b);
        uf_parent_[a] = b;
        uf_size_[b] += uf_size_[a];
        --components_;
        return a;
    }

    void uf_undo(int child) {
        if (child < 0) return;
        uf_size_[uf_find(child)] -= uf_size_[child];
        uf_parent_[child] = child;
        ++components_;
    }

    void descend(int pos, int b_floor) {
        const int remaining = r_ - pos;
        const int need = rank_of_q();
        if (need > remaining || ((remaining - need) & 1)) return;
        if (transitive_only_ && components_ - 1 > remaining) return;
        if (pos == r_) {
            ++count_;  // need == 0 forces q == id; components check above
            return;
        }
        for (int b = monotone_ ? b_floor : 1; b < d_; ++b) {
            for (int a = 0; a < b; ++a) {
                std::swap(q_[a], q_[b]);
                const int undo = transitive_only_ ? uf_union(a, b) : -1;
                descend(pos + 1, b);
                if (transitive_only_) uf_undo(undo);
                std::swap(q_[a], q_[b]);
            }
        }
    }

    int d_;
    int r_;
    bool transitive_only_;
    bool monotone_;
    int components_;
    std::array<int, kMaxGround> q_{};
    std::array<int, kMaxGround> uf_parent_{};
    std::array<int, kMaxGround> uf_size_{};
    std::uint64_t count_ = 0;
};

// Enumeration over tuples of arbitrary permutations with a prescribed
// total rank.  The last factor is forced to p^{-1} sigma, so only r-1
// slots branch.
class RankSearch {
public:
    RankSearch(const Permutation& sigma, int r, int target_rank)
        : d_(sigma.degree()), r_(r), target_(target_rank), sigma_(sigma) {
        const std::uint64_t n = factorial_u64(d_);
        all_.reserve(n);
        for (std::uint64_t k = 0; k < n; ++k) {
            all_.push_back(Permutation::from_lehmer_rank(d_, k));
            ranks_.push_back(d_ - all_.back().cycle_count());
        }
    }

    std::uint64_t run() {
        count_ = 0;
        if (r_ == 0) {
            // Empty product is the identity; transitive only for d = 1.
            if (sigma_ == Permutation(d_) && target_ == 0 && d_ == 1) count_ = 1;
            return count_;
        }
        chosen_.assign(r_, 0);
        Permutation p(d_);
        descend(0, 0, p);
        return count_;
    }

private:
    void descend(int pos, int ranksum, const Permutation& p) {
        const Permutation rest = p.inverse().then(sigma_);
        const int need = d_ - rest.cycle_count();
        const int budget = target_ - ranksum;
        const int slots = r_ - pos;
        if (budget < need || (budget - need) % 2 != 0) return;
        if (budget > slots * (d_ - 1)) return;
        if (pos == r_ - 1) {
            if (need != budget) return;
            chosen_[pos] = rest.lehmer_rank();
            finish();
            return;
        }
        for (std::uint64_t k = 0; k < all_.size(); ++k) {
            chosen_[pos] = k;
            descend(pos + 1, ranksum + ranks_[k], p.then(all_[k]));
        }
    }

    void finish() {
        std::vector<Permutation> gens;
        gens.reserve(r_);
        for (std::uint64_t k : chosen_) gens.push_back(all_[k]);
        if (is_transitive(gens, d_)) ++count_;
    }

    int d_;
    int r_;
    int target_;
    Permutation sigma_;
    std::vector<Permutation> all_;
    std::vector<int> ranks_;
    std::vector<std::uint64_t> chosen_;
    std::uint64_t count_ = 0;
};

void require(bool ok, const char* what) {
    if (!ok) throw BoundExceeded(what);
}

}  // namespace

Integer count_monotone_of(const Permutation& sigma, int r, bool transitive_only) {
    if (r < 0) throw std::invalid_argument("count_monotone: r must be >= 0");
    require(sigma.degree() <= kMaxGround, "count_monotone: ground set larger than supported");
    TranspositionSearch search(sigma, r, transitive_only, /*monotone=*/true);
    return Integer(static_cast<unsigned long>(search.run()));
}

Integer count_classical_of(const Permutation& sigma, int r, bool transitive_only) {
    if (r < 0) throw std::invalid_argument("count_classical: r must be >= 0");
    require(sigma.degree() <= kMaxGround, "count_classical: ground set larger than supported");
    TranspositionSearch search(sigma, r, transitive_only, /*monotone=*/false);
    return Integer(static_cast<unsigned long>(search.run()));
}

Integer count_monotone(const Partition& alpha, int r, bool transitive_only,
                       const OracleBounds& bounds) {
    if (alpha.weight() < 1) throw std::invalid_argument("count_monotone: alpha must be nonempty");
    require(alpha.weight() <= bounds.monotone_max_d && r <= bounds.monotone_max_r,
            "count_monotone: enumeration bound exceeded");
    return count_monotone_of(Permutation::canonical_of_type(alpha), r, transitive_only);
}

Integer count_classical(const Partition& alpha, int r, bool transitive_only,
                        const OracleBounds& bounds) {
    if (alpha.weight() < 1) throw std::invalid_argument("count_classical: alpha must be nonempty");
    require(alpha.weight() <= bounds.classical_max_d && r <= bounds.classical_max_r,
            "count_classical: enumeration bound exceeded");
    return count_classical_of(Permutation::canonical_of_type(alpha), r, transitive_only);
}

Integer count_rank_factorizations(const Partition& alpha, int r, int genus,
                                  const OracleBounds& bounds) {
    if (alpha.weight() < 1) throw std::invalid_argument("count_rank_factorizations: alpha must be nonempty");
    if (r < 0 || genus < 0) throw std::invalid_argument("count_rank_factorizations: r, genus must be >= 0");
    require(alpha.weight() <= bounds.rank_max_d && r <= bounds.rank_max_r,
            "count_rank_factorizations: enumeration bound exceeded");
    const int target = rh_transposition_count(alpha, genus);
    RankSearch search(Permutation::canonical_of_type(alpha), r, target);
    return Integer(static_cast<unsigned long>(search.run()));
}

bool class_independence_check(const Partition& alpha, int r, const OracleBounds& bounds) {
    require(alpha.weight() <= bounds.monotone_max_d && r <= bounds.monotone_max_r,
            "class_independence_check: enumeration bound exceeded");
    const int d = alpha.weight();
    bool first = true;
    Integer reference = 0;
    for (std::uint64_t k = 0; k < factorial_u64(d); ++k) {
        Permutation sigma = Permutation::from_lehmer_rank(d, k);
        if (sigma.cycle_type() != alpha) continue;
        Integer value = count_monotone_of(sigma, r, true);
        if (first) {
            reference = value;
            first = false;
        } else if (value != reference) {
            return false;
        }
    }
    return true;
}

}  // namespace hurwitz

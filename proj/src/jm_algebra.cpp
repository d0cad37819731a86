#include "hurwitz/jm_algebra.hpp"

#include <map>
#include <stdexcept>

namespace hurwitz {

namespace {

// Cached list of all permutations of S_d in Lehmer order.
const std::vector<Permutation>& all_permutations(int d) {
    static std::map<int, std::vector<Permutation>> cache;
    auto it = cache.find(d);
    if (it == cache.end()) {
        std::vector<Permutation> v;
        const std::uint64_t n = factorial_u64(d);
        v.reserve(n);
        for (std::uint64_t k = 0; k < n; ++k) v.push_back(Permutation::from_lehmer_rank(d, k));
        it = cache.emplace(d, std::move(v)).first;
    }
    return it->second;
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(int d) : d_(d), coeff_(factorial_u64(d)) {
    if (d < 0) throw std::invalid_argument("GroupAlgebraElement: negative degree");
}

GroupAlgebraElement GroupAlgebraElement::zero(int d) { return GroupAlgebraElement(d); }

GroupAlgebraElement GroupAlgebraElement::unit(int d) {
    GroupAlgebraElement e(d);
    e.coeff_[Permutation(d).lehmer_rank()] = 1;
    return e;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& sigma) {
    GroupAlgebraElement e(sigma.degree());
    e.coeff_[sigma.lehmer_rank()] = 1;
    return e;
}

GroupAlgebraElement GroupAlgebraElement::class_sum(int d, const Partition& alpha) {
    if (alpha.weight() != d) throw std::invalid_argument("class_sum: |alpha| != d");
    GroupAlgebraElement e(d);
    const auto& perms = all_permutations(d);
    for (std::uint64_t k = 0; k < perms.size(); ++k)
        if (perms[k].cycle_type() == alpha) e.coeff_[k] = 1;
    return e;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
    if (d_ != other.d_) throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
    for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] += other.coeff_[k];
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
    if (d_ != other.d_) throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
    for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] -= other.coeff_[k];
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& scalar) {
    for (auto& c : coeff_) c *= scalar;
    return *this;
}

GroupAlgebraElement multiply(const GroupAlgebraElement& e, const GroupAlgebraElement& f) {
    if (e.degree() != f.degree()) throw std::invalid_argument("multiply: degree mismatch");
    const int d = e.degree();
    const auto& perms = all_permutations(d);
    GroupAlgebraElement out = GroupAlgebraElement::zero(d);
    for (std::uint64_t i = 0; i < perms.size(); ++i) {
        if (e.coeff(i) == 0) continue;
        for (std::uint64_t j = 0; j < perms.size(); ++j) {
            if (f.coeff(j) == 0) continue;
            const std::uint64_t k = perms[i].then(perms[j]).lehmer_rank();
            out.set_coeff(k, out.coeff(k) + e.coeff(i) * f.coeff(j));
        }
    }
    return out;
}

GroupAlgebraElement jm_element(int d, int i) {
    if (i < 1 || i > d) throw std::out_of_range("jm_element: index out of range");
    GroupAlgebraElement e = GroupAlgebraElement::zero(d);
    for (int j = 1; j < i; ++j) {
        const Permutation t = Permutation::transposition(d, j - 1, i - 1);
        e.set_coeff(t.lehmer_rank(), 1);
    }
    return e;
}

GroupAlgebraElement complete_homogeneous_jm(int d, int r, int max_d_cap) {
    if (d < 1 || r < 0) throw std::invalid_argument("complete_homogeneous_jm: bad arguments");
    if (d > max_d_cap) throw std::out_of_range("complete_homogeneous_jm: d exceeds cap");
    // row[k] = h(n, k) for the current n
    std::vector<GroupAlgebraElement> row(r + 1, GroupAlgebraElement::zero(d));
    row[0] = GroupAlgebraElement::unit(d);  // h(0, 0) = 1, h(0, k>0) = 0
    for (int n = 1; n <= d; ++n) {
        const GroupAlgebraElement jn = jm_element(d, n);
        for (int k = 1; k <= r; ++k) row[k] += multiply(jn, row[k - 1]);
    }
    return row[r];
}

bool centrality_check(const GroupAlgebraElement& e) {
    const auto& perms = all_permutations(e.degree());
    std::map<Partition, Rational> first;
    for (std::uint64_t k = 0; k < perms.size(); ++k) {
        const Partition type = perms[k].cycle_type();
        auto [it, inserted] = first.emplace(type, e.coeff(k));
        if (!inserted && it->second != e.coeff(k)) return false;
    }
    return true;
}

Rational class_coefficient(const GroupAlgebraElement& e, const Partition& alpha,
                           bool verify_central) {
    if (alpha.weight() != e.degree()) throw std::invalid_argument("class_coefficient: |alpha| != d");
    if (verify_central && !centrality_check(e))
        throw std::invalid_argument("class_coefficient: element is not central");
    return e.coeff(Permutation::canonical_of_type(alpha));
}

}  // namespace hurwitz

#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

std::uint64_t factorial_u64(int n) {
    if (n < 0 || n > 20) throw std::domain_error("factorial_u64: out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation::Permutation(int d) : img_(d) {
    if (d < 0) throw std::invalid_argument("Permutation: negative degree");
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("Permutation: image table is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::transposition(int d, int a, int b) {
    if (a < 0 || b < 0 || a >= d || b >= d || a == b)
        throw std::invalid_argument("Permutation::transposition: bad points");
    Permutation t(d);
    std::swap(t.img_[a], t.img_[b]);
    return t;
}

Permutation Permutation::canonical_of_type(const Partition& alpha) {
    Permutation sigma(alpha.weight());
    int base = 0;
    for (int len : alpha.parts()) {  // parts sorted longest first already
        for (int i = 0; i < len; ++i) sigma.img_[base + i] = base + (i + 1) % len;
        base += len;
    }
    return sigma;
}

Permutation Permutation::then(const Permutation& g) const {
    if (degree() != g.degree()) throw std::invalid_argument("Permutation::then: degree mismatch");
    Permutation out(degree());
    for (int x = 0; x < degree(); ++x) out.img_[x] = g.img_[img_[x]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out(degree());
    for (int x = 0; x < degree(); ++x) out.img_[img_[x]] = x;
    return out;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lens;
    std::vector<char> seen(img_.size(), 0);
    for (int x = 0; x < degree(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (int y = x; !seen[y]; y = img_[y]) {
            seen[y] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(std::move(lens));
}

int Permutation::cycle_count() const {
    int cycles = 0;
    std::vector<char> seen(img_.size(), 0);
    for (int x = 0; x < degree(); ++x) {
        if (seen[x]) continue;
        ++cycles;
        for (int y = x; !seen[y]; y = img_[y]) seen[y] = 1;
    }
    return cycles;
}

std::uint64_t Permutation::lehmer_rank() const {
    const int d = degree();
    std::uint64_t rank = 0;
    for (int i = 0; i < d; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < d; ++j)
            if (img_[j] < img_[i]) ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * factorial_u64(d - 1 - i);
    }
    return rank;
}

Permutation Permutation::from_lehmer_rank(int d, std::uint64_t rank) {
    if (rank >= factorial_u64(d)) throw std::invalid_argument("from_lehmer_rank: rank out of range");
    std::vector<int> pool(d);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> image(d);
    for (int i = 0; i < d; ++i) {
        std::uint64_t f = factorial_u64(d - 1 - i);
        int idx = static_cast<int>(rank / f);
        rank %= f;
        image[i] = pool[idx];
        pool.erase(pool.begin() + idx);
    }
    return Permutation(std::move(image));
}

bool is_transitive(std::span<const Permutation> generators, int d) {
    if (d <= 1) return true;
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = d;
    for (const Permutation& g : generators) {
        if (g.degree() != d) throw std::invalid_argument("is_transitive: generator degree mismatch");
        for (int x = 0; x < d; ++x) {
            int a = find(x), b = find(g(x));
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    return components == 1;
}

}  // namespace hurwitz

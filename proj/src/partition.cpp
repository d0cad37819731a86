#include "hurwitz/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
        if (i >= text.size()) break;
        int value = 0;
        bool any = false;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            value = value * 10 + (text[i] - '0');
            any = true;
            ++i;
        }
        if (!any) throw std::invalid_argument("Partition::parse: expected digit in '" + std::string(text) + "'");
        parts.push_back(value);
        while (i < text.size() && text[i] == ' ') ++i;
        if (i < text.size() && text[i] != ',') throw std::invalid_argument("Partition::parse: expected ',' in '" + std::string(text) + "'");
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::with(int k) const {
    if (k < 1) throw std::invalid_argument("Partition::with: part must be >= 1");
    Partition out = *this;
    out.parts_.insert(std::lower_bound(out.parts_.begin(), out.parts_.end(), k, std::greater<int>()), k);
    out.weight_ += k;
    return out;
}

Partition Partition::without(int k) const {
    Partition out = *this;
    auto it = std::find(out.parts_.begin(), out.parts_.end(), k);
    if (it == out.parts_.end()) throw std::invalid_argument("Partition::without: no part of that size");
    out.parts_.erase(it);
    out.weight_ -= k;
    return out;
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts) {
        if (x < 1) throw std::invalid_argument("Composition: parts must be >= 1");
    }
}

int Composition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Composition::sorted() const { return Partition(parts); }

Integer class_size(const Partition& alpha) {
    Integer den = 1;
    int last = -1;
    int run = 0;
    for (int p : alpha.parts()) {
        if (p == last) {
            ++run;
        } else {
            last = p;
            run = 1;
        }
        den *= Integer(p) * run;  // accumulates k^{m_k} m_k! across each run
    }
    Integer num = factorial(alpha.weight());
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Integer aut_size(const Partition& alpha) {
    Integer a = 1;
    int last = -1;
    int run = 0;
    for (int p : alpha.parts()) {
        if (p == last) {
            ++run;
        } else {
            last = p;
            run = 1;
        }
        a *= run;
    }
    return a;
}

std::vector<std::pair<Partition, Integer>> sub_multisets(const Partition& alpha) {
    // Group parts by size, then pick 0..m_k copies of each size.
    std::vector<std::pair<int, int>> groups;  // (size, multiplicity), sizes descending
    for (int p : alpha.parts()) {
        if (!groups.empty() && groups.back().first == p) {
            ++groups.back().second;
        } else {
            groups.emplace_back(p, 1);
        }
    }
    std::vector<std::pair<Partition, Integer>> out;
    std::vector<int> chosen;
    std::function<void(std::size_t, Integer)> rec = [&](std::size_t g, Integer mult) {
        if (g == groups.size()) {
            out.emplace_back(Partition(chosen), mult);
            return;
        }
        auto [size, m] = groups[g];
        for (int c = 0; c <= m; ++c) {
            for (int i = 0; i < c; ++i) chosen.push_back(size);
            rec(g + 1, mult * binomial(Integer(m), c));
            for (int i = 0; i < c; ++i) chosen.pop_back();
        }
    };
    rec(0, 1);
    return out;
}

int rh_transposition_count(const Partition& alpha, int genus) {
    if (genus < 0) throw std::invalid_argument("rh_transposition_count: genus must be >= 0");
    return alpha.weight() + alpha.length() + 2 * genus - 2;
}

std::optional<int> genus_of(const Partition& alpha, int r) {
    int twice_g = r - alpha.weight() - alpha.length() + 2;
    if (twice_g < 0 || twice_g % 2 != 0) return std::nullopt;
    return twice_g / 2;
}

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: d must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

}  // namespace hurwitz

#include "hurwitz/recurrence.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace hurwitz {

const Integer* MemoTable::find(const Partition& alpha, int r) const {
    auto it = table_.find({alpha, r});
    if (it == table_.end()) {
        ++stats_.misses;
        return nullptr;
    }
    ++stats_.hits;
    return &it->second;
}

void MemoTable::store(const Partition& alpha, int r, Integer value) {
    table_.insert_or_assign({alpha, r}, std::move(value));
}

void MemoTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("MemoTable::save: cannot open " + path);
    out << "{\"format\":\"monotone-memo\",\"version\":1}\n";
    for (const auto& [key, value] : table_) {
        nlohmann::ordered_json rec;
        rec["alpha"] = key.first.parts();
        rec["r"] = key.second;
        rec["M"] = to_decimal(value);
        out << rec.dump() << "\n";
    }
    if (!out) throw std::runtime_error("MemoTable::save: write failed for " + path);
}

void MemoTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("MemoTable::load: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("MemoTable::load: empty file");
    const auto header = nlohmann::json::parse(line);
    if (header.value("format", "") != "monotone-memo" || header.value("version", 0) != 1)
        throw std::runtime_error("MemoTable::load: unrecognized header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto rec = nlohmann::json::parse(line);
        Partition alpha(rec.at("alpha").get<std::vector<int>>());
        const int r = rec.at("r").get<int>();
        Integer value(rec.at("M").get<std::string>());
        store(alpha, r, std::move(value));
    }
}

namespace {

bool parity_obstructed(const Partition& alpha, int r) {
    return ((r - (alpha.weight() - alpha.length())) & 1) != 0;
}

Integer monotone_M_impl(const Partition& beta, int r, MemoTable& memo, PeelRule rule) {
    if (r == 0) return beta == Partition{1} ? 1 : 0;
    if (parity_obstructed(beta, r)) return 0;
    if (const Integer* hit = memo.find(beta, r)) return *hit;

    const int k = rule == PeelRule::largest_part ? beta.parts().front() : beta.parts().back();
    const Partition rest = beta.without(k);

    Integer total = 0;

    // Cut: the last factor joined a k'-cycle of rest onto the k-cycle.
    int prev = 0;
    for (int kp : rest.parts()) {
        if (kp == prev) continue;  // one term per distinct part size
        prev = kp;
        total += Integer(kp) * rest.multiplicity(kp) *
                 monotone_M_impl(rest.without(kp).with(k + kp), r - 1, memo, rule);
    }

    // Redundant join: the last factor cut the k-cycle without disconnecting.
    for (int kp = 1; kp <= k - 1; ++kp)
        total += monotone_M_impl(rest.with(kp).with(k - kp), r - 1, memo, rule);

    // Essential join: the last factor merged the two orbits of a split of
    // the k-cycle, the remaining parts distributed between them.
    const auto subs = sub_multisets(rest);
    for (int kp = 1; kp <= k - 1; ++kp) {
        for (const auto& [sub, mult] : subs) {
            Partition left = sub.with(kp);
            Partition right = rest;
            for (int part : sub.parts()) right = right.without(part);
            right = right.with(k - kp);
            for (int rp = 0; rp <= r - 1; ++rp) {
                if (parity_obstructed(left, rp)) continue;
                Integer a = monotone_M_impl(left, rp, memo, rule);
                if (a == 0) continue;
                total += mult * a * monotone_M_impl(right, r - 1 - rp, memo, rule);
            }
        }
    }

    memo.store(beta, r, total);
    return total;
}

}  // namespace

Integer monotone_M(const Partition& alpha, int r, MemoTable& memo, PeelRule rule) {
    if (alpha.weight() < 1) throw std::invalid_argument("monotone_M: alpha must be nonempty");
    if (r < 0) throw std::invalid_argument("monotone_M: r must be >= 0");
    return monotone_M_impl(alpha, r, memo, rule);
}

Integer monotone_M(const Partition& alpha, int r) {
    MemoTable scratch;
    return monotone_M(alpha, r, scratch);
}

Integer monotone_H(const Partition& alpha, int r, MemoTable& memo) {
    return class_size(alpha) * monotone_M(alpha, r, memo);
}

Integer monotone_H(const Partition& alpha, int r) {
    MemoTable scratch;
    return monotone_H(alpha, r, scratch);
}

Integer monotone_H_genus(const Partition& alpha, int genus, MemoTable& memo) {
    return monotone_H(alpha, rh_transposition_count(alpha, genus), memo);
}

Integer monotone_H_genus(const Partition& alpha, int genus) {
    MemoTable scratch;
    return monotone_H_genus(alpha, genus, scratch);
}

const Rational* ClassicalJoincutTable::find(const Partition& alpha, int r) const {
    auto it = table_.find({alpha, r});
    return it == table_.end() ? nullptr : &it->second;
}

void ClassicalJoincutTable::store(const Partition& alpha, int r, Rational value) {
    table_.insert_or_assign({alpha, r}, std::move(value));
}

namespace {

// c_r(alpha) = [z^d t^r p_alpha] H.  Stepping the join-cut equation down:
// (r+1) c_{r+1}(alpha) = (1/2) [p_alpha](join + cut + product) at level r,
// where the product term convolves t-levels.
Rational classical_coeff(const Partition& alpha, int r, ClassicalJoincutTable& memo) {
    if (r == 0) return alpha == Partition{1} ? 1 : 0;
    if (const Rational* hit = memo.find(alpha, r)) return *hit;

    Rational sum = 0;
    const auto& parts = alpha.parts();
    const int len = alpha.length();

    std::vector<int> distinct;
    for (int idx = 0; idx < len; ++idx)
        if (idx == 0 || parts[idx] != parts[idx - 1]) distinct.push_back(parts[idx]);

    // Join: (i+j) p_i p_j d/dp_{i+j}, ordered value pairs (i, j) jointly
    // removable from alpha.
    for (int i : distinct) {
        for (int j : distinct) {
            if (i == j && alpha.multiplicity(i) < 2) continue;
            Partition beta = alpha.without(i).without(j).with(i + j);
            sum += Rational(i + j) * beta.multiplicity(i + j) *
                   classical_coeff(beta, r - 1, memo);
        }
    }

    for (int s : distinct) {  // s = i + j, one term per part value of alpha
        const Partition gamma = alpha.without(s);
        for (int i = 1; i <= s - 1; ++i) {
            const int j = s - i;
            // Cut: i j p_{i+j} d^2/dp_i dp_j.
            Partition beta = gamma.with(i).with(j);
            Integer ways = (i == j)
                               ? Integer(beta.multiplicity(i)) * (beta.multiplicity(i) - 1)
                               : Integer(beta.multiplicity(i)) * beta.multiplicity(j);
            sum += Rational(Integer(i) * j * ways) * classical_coeff(beta, r - 1, memo);
            // Product: i j p_{i+j} (dH/dp_i)(dH/dp_j).  Coefficient
            // extraction splits the monomial gamma into an ordered pair of
            // sub-multisets, each distinct split once, and convolves the
            // t-levels.
            for (const auto& [sub, sub_mult] : sub_multisets(gamma)) {
                (void)sub_mult;  // multiset splits carry no binomial weight here
                Partition left = sub.with(i);
                Partition right = gamma;
                for (int part : sub.parts()) right = right.without(part);
                right = right.with(j);
                for (int rp = 0; rp <= r - 1; ++rp) {
                    Rational a = classical_coeff(left, rp, memo);
                    if (a == 0) continue;
                    Rational b = classical_coeff(right, r - 1 - rp, memo);
                    if (b == 0) continue;
                    sum += Rational(Integer(i) * j * left.multiplicity(i) *
                                    right.multiplicity(j)) *
                           a * b;
                }
            }
        }
    }

    Rational value = sum / (2 * r);
    memo.store(alpha, r, value);
    return value;
}

}  // namespace

Integer classical_H_joincut(const Partition& alpha, int r, ClassicalJoincutTable& memo) {
    if (alpha.weight() < 1) throw std::invalid_argument("classical_H_joincut: alpha must be nonempty");
    if (r < 0) throw std::invalid_argument("classical_H_joincut: r must be >= 0");
    const Rational c = classical_coeff(alpha, r, memo);
    Rational h = c * factorial(alpha.weight()) * factorial(r);
    if (h.get_den() != 1) throw std::logic_error("classical_H_joincut: non-integer count");
    return h.get_num();
}

Integer classical_H_joincut(const Partition& alpha, int r) {
    ClassicalJoincutTable scratch;
    return classical_H_joincut(alpha, r, scratch);
}

}  // namespace hurwitz

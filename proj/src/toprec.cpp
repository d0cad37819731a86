#include "hurwitz/toprec.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/pde.hpp"

namespace hurwitz {

CoeffTable::CoeffTable(int genus, int arity, int degree)
    : genus_(genus), arity_(arity), degree_(degree) {
    if (genus < 0 || arity < 1 || degree < 0) throw std::invalid_argument("CoeffTable: bad shape");
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(degree + 1);
    v_.resize(n);
}

std::size_t CoeffTable::index(std::span<const int> e) const {
    if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("CoeffTable: arity mismatch");
    std::size_t idx = 0;
    for (int i = 0; i < arity_; ++i) {
        if (e[i] < 0 || e[i] > degree_) throw std::out_of_range("CoeffTable: exponent out of range");
        idx = idx * (degree_ + 1) + static_cast<std::size_t>(e[i]);
    }
    return idx;
}

namespace {

// Enumerates exponent tuples in [0, degree]^arity ordered by total degree,
// then lexicographically.
std::vector<std::vector<int>> tuples_by_total(int arity, int degree) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur(arity, 0);
    while (true) {
        all.push_back(cur);
        int i = arity - 1;
        while (i >= 0 && cur[i] == degree) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });
    return all;
}

}  // namespace

bool CoeffTable::symmetric() const {
    for (auto& e : tuples_by_total(arity_, degree_)) {
        std::vector<int> sorted = e;
        std::sort(sorted.begin(), sorted.end());
        if (at(e) != at(sorted)) return false;
    }
    return true;
}

std::string CoeffTable::csv() const {
    std::string out;
    for (int i = 1; i <= arity_; ++i) out += "e" + std::to_string(i) + ",";
    out += "value\n";
    std::vector<int> cur(arity_, 0);
    while (true) {
        for (int v : cur) out += std::to_string(v) + ",";
        out += to_fraction(at(cur)) + "\n";
        int i = arity_ - 1;
        while (i >= 0 && cur[i] == degree_) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

const CoeffTable& ToprecEngine::table(int g, int ell, int degree) {
    auto it = cache_.find({g, ell});
    if (it != cache_.end() && it->second.degree() >= degree) return it->second;
    CoeffTable t = compute(g, ell, degree);
    auto [pos, _] = cache_.insert_or_assign({g, ell}, std::move(t));
    return pos->second;
}

CoeffTable ToprecEngine::compute(int g, int ell, int degree) {
    // Materialize every cross-table dependency first; self-references read
    // the partially filled result at strictly lower total degree.  The
    // x_2..x_l slots of dependency cells run up to the full degree, so the
    // prefetched squares must too.
    if (g >= 1 && degree >= 1) table(g - 1, ell + 1, degree);
    if (ell >= 2) table(g, ell - 1, 2 * degree + 1);
    if (degree >= 1) {
        for (int gp = 0; gp <= g; ++gp) {
            for (int s = 0; s <= ell - 1; ++s) {
                if (!(gp == g && s == ell - 1)) table(gp, s + 1, degree);
                if (!(gp == 0 && s == 0)) table(g - gp, ell - s, degree);
            }
        }
    }

    CoeffTable out(g, ell, degree);
    std::vector<int> sub;  // scratch exponent tuple
    for (const auto& e : tuples_by_total(ell, degree)) {
        Rational v = 0;
        if (g == 0 && ell == 1 && e[0] == 0) v += 1;

        // x1 M_{g-1}(x1, x1, x2, ..., xl)
        if (g >= 1 && e[0] >= 1) {
            const CoeffTable& lower = cache_.at({g - 1, ell + 1});
            sub.assign(ell + 1, 0);
            std::copy(e.begin() + 1, e.end(), sub.begin() + 2);
            for (int c = 0; c <= e[0] - 1; ++c) {
                sub[0] = c;
                sub[1] = e[0] - 1 - c;
                v += lower.at(sub);
            }
        }

        // d/dx_j of the divided difference
        // (x1 M_g(..no x_j..) - x_j M_g(x2..xl)) / (x1 - x_j): the cell
        // (e1, .., ej, ..) draws (ej+1) times the arity-(l-1) cell with
        // first exponent e1+ej+1 and the other slots unchanged.
        if (ell >= 2) {
            const CoeffTable& lower = cache_.at({g, ell - 1});
            for (int j = 1; j <= ell - 1; ++j) {
                sub.assign(ell - 1, 0);
                sub[0] = e[0] + e[j] + 1;
                int pos = 1;
                for (int i = 1; i <= ell - 1; ++i)
                    if (i != j) sub[pos++] = e[i];
                v += Rational(e[j] + 1) * lower.at(sub);
            }
        }

        // x1 sum_{g'} sum_{S} M_{g'}(x1, x_S) M_{g-g'}(x1, x_Sbar)
        if (e[0] >= 1) {
            std::vector<int> es, ebar;
            for (int gp = 0; gp <= g; ++gp) {
                for (unsigned mask = 0; mask < (1u << (ell - 1)); ++mask) {
                    es.assign(1, 0);
                    ebar.assign(1, 0);
                    for (int i = 0; i < ell - 1; ++i) {
                        if (mask & (1u << i))
                            es.push_back(e[i + 1]);
                        else
                            ebar.push_back(e[i + 1]);
                    }
                    const bool left_self = gp == g && es.size() == static_cast<std::size_t>(ell);
                    const bool right_self = gp == 0 && ebar.size() == static_cast<std::size_t>(ell);
                    const CoeffTable& left = left_self ? out : cache_.at({gp, static_cast<int>(es.size())});
                    const CoeffTable& right = right_self ? out : cache_.at({g - gp, static_cast<int>(ebar.size())});
                    for (int u = 0; u <= e[0] - 1; ++u) {
                        es[0] = u;
                        ebar[0] = e[0] - 1 - u;
                        const Rational& a = left.at(es);
                        if (a == 0) continue;
                        v += a * right.at(ebar);
                    }
                }
            }
        }

        out.at(e) = std::move(v);
    }
    return out;
}

CoeffTable mg_table(int g, int ell, int degree, const ToprecCaps& caps) {
    if (g > caps.max_genus || ell > caps.max_arity || degree > caps.max_degree)
        throw BoundExceeded("mg_table: cap exceeded");
    ToprecEngine engine;
    CoeffTable t = engine.table(g, ell, degree);
    if (!t.symmetric()) throw std::logic_error("mg_table: result not symmetric");
    return t;
}

ReconcileReport reconcile(int g, int ell, int degree, MemoTable& memo, const ToprecCaps& caps) {
    ReconcileReport rep;
    const CoeffTable t = mg_table(g, ell, degree, caps);

    UniSeries one(degree >= 0 ? degree : 0);
    BiSeries two(degree >= 0 ? degree : 0);
    const bool check_one = g == 0 && ell == 1;
    const bool check_two = g == 0 && ell == 2;
    if (check_one) one = one_point_genus0(degree);
    if (check_two) two = two_point_genus0(degree);

    std::vector<int> cur(ell, 0);
    while (true) {
        std::vector<int> comp = cur;
        for (int& c : comp) ++c;
        const Partition alpha = Composition(comp).sorted();
        const Rational expected =
            make_rational(monotone_H_genus(alpha, g, memo), class_size(alpha));
        const Rational& got = t.at(cur);
        auto fail = [&](const std::string& against, const Rational& want) {
            rep.ok = false;
            std::string tuple;
            for (std::size_t i = 0; i < cur.size(); ++i)
                tuple += (i ? "," : "") + std::to_string(cur[i]);
            rep.detail = "cell (" + tuple + "): table " + to_fraction(got) + " vs " + against +
                         " " + to_fraction(want);
        };
        if (got != expected) {
            fail("recurrence", expected);
            return rep;
        }
        if (check_one && got != one[cur[0]]) {
            fail("closed form", one[cur[0]]);
            return rep;
        }
        if (check_two && got != two.at(cur[0], cur[1])) {
            fail("closed form", two.at(cur[0], cur[1]));
            return rep;
        }
        ++rep.cells_checked;
        int i = ell - 1;
        while (i >= 0 && cur[i] == degree) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return rep;
}

}  // namespace hurwitz

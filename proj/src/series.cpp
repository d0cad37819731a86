#include "hurwitz/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

int PartitionSeries::Key::total_grade() const {
    return alpha.weight() + std::accumulate(x.begin(), x.end(), 0);
}

namespace {

bool admits(const SeriesCaps& caps, const PartitionSeries::Key& key) {
    if (key.alpha.weight() > caps.max_weight) return false;
    if (key.t > caps.max_t) return false;
    for (int e : key.x)
        if (e > caps.max_xdeg) return false;
    if (caps.max_total >= 0 && key.total_grade() > caps.max_total) return false;
    return true;
}

void normalize_key(PartitionSeries::Key& key, const SeriesCaps& caps) {
    if (static_cast<int>(key.x.size()) > caps.arity)
        throw std::logic_error("PartitionSeries: catalyst tuple longer than arity");
    key.x.resize(caps.arity, 0);
    if (key.t < 0) throw std::logic_error("PartitionSeries: negative t-exponent");
    for (int e : key.x)
        if (e < 0) throw std::logic_error("PartitionSeries: negative catalyst exponent");
}

}  // namespace

PartitionSeries::PartitionSeries(SeriesCaps caps) : caps_(caps) {}

Rational PartitionSeries::at(const Key& key) const {
    Key k = key;
    normalize_key(k, caps_);
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational PartitionSeries::at(const Partition& alpha, int t) const {
    return at(Key{alpha, t, {}});
}

void PartitionSeries::add(Key key, const Rational& value) {
    if (value == 0) return;
    normalize_key(key, caps_);
    if (!admits(caps_, key)) return;
    auto [it, inserted] = terms_.emplace(std::move(key), value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

void PartitionSeries::set(Key key, Rational value) {
    normalize_key(key, caps_);
    if (!admits(caps_, key)) return;
    if (value == 0)
        terms_.erase(key);
    else
        terms_.insert_or_assign(std::move(key), std::move(value));
}

PartitionSeries PartitionSeries::recapped(SeriesCaps caps) const {
    PartitionSeries out(caps);
    for (const auto& [key, value] : terms_) {
        Key k = key;
        if (static_cast<int>(k.x.size()) > caps.arity) {
            for (int slot = caps.arity; slot < static_cast<int>(k.x.size()); ++slot)
                if (k.x[slot] != 0)
                    throw std::logic_error("PartitionSeries::recapped: dropped catalyst slot in use");
            k.x.resize(caps.arity);
        }
        out.add(std::move(k), value);
    }
    return out;
}

PartitionSeries PartitionSeries::constant(SeriesCaps caps, const Rational& value) {
    PartitionSeries s(caps);
    s.add(Key{}, value);
    return s;
}

PartitionSeries PartitionSeries::monomial(SeriesCaps caps, Key key, const Rational& value) {
    PartitionSeries s(caps);
    s.add(std::move(key), value);
    return s;
}

PartitionSeries& PartitionSeries::operator+=(const PartitionSeries& other) {
    if (!(caps_ == other.caps_)) throw std::logic_error("PartitionSeries: caps mismatch");
    for (const auto& [key, value] : other.terms_) add(key, value);
    return *this;
}

PartitionSeries& PartitionSeries::operator-=(const PartitionSeries& other) {
    if (!(caps_ == other.caps_)) throw std::logic_error("PartitionSeries: caps mismatch");
    for (const auto& [key, value] : other.terms_) add(key, -value);
    return *this;
}

PartitionSeries& PartitionSeries::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, value] : terms_) value *= scalar;
    return *this;
}

std::string PartitionSeries::dump() const {
    std::string out;
    for (const auto& [key, value] : terms_) {
        out += "{\"alpha\":[";
        for (std::size_t i = 0; i < key.alpha.parts().size(); ++i) {
            if (i) out += ',';
            out += std::to_string(key.alpha.parts()[i]);
        }
        out += "],\"r\":" + std::to_string(key.t) + ",\"x\":[";
        for (std::size_t i = 0; i < key.x.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(key.x[i]);
        }
        out += "],\"c\":\"" + value.get_num().get_str() + "/" + value.get_den().get_str() + "\"}\n";
    }
    return out;
}

PartitionSeries mul(const PartitionSeries& a, const PartitionSeries& b) {
    if (!(a.caps() == b.caps())) throw std::logic_error("mul: caps mismatch");
    PartitionSeries out(a.caps());
    for (const auto& [ka, va] : a.terms()) {
        for (const auto& [kb, vb] : b.terms()) {
            PartitionSeries::Key key;
            std::vector<int> parts = ka.alpha.parts();
            parts.insert(parts.end(), kb.alpha.parts().begin(), kb.alpha.parts().end());
            key.alpha = Partition(std::move(parts));
            key.t = ka.t + kb.t;
            key.x.resize(ka.x.size());
            for (std::size_t i = 0; i < ka.x.size(); ++i) key.x[i] = ka.x[i] + kb.x[i];
            out.add(std::move(key), va * vb);
        }
    }
    return out;
}

namespace {

int max_power_bound(const SeriesCaps& caps) {
    long x_room = static_cast<long>(caps.arity) * caps.max_xdeg;
    long bound = caps.max_weight + caps.max_t + x_room;
    if (caps.max_total >= 0) bound = std::min<long>(bound, caps.max_total + caps.max_t);
    return static_cast<int>(bound);
}

}  // namespace

PartitionSeries exp_series(const PartitionSeries& s) {
    if (s.at(PartitionSeries::Key{}) != 0)
        throw std::invalid_argument("exp_series: nonzero constant term");
    PartitionSeries result = PartitionSeries::constant(s.caps(), 1);
    PartitionSeries power = result;
    const int bound = max_power_bound(s.caps());
    for (int k = 1; k <= bound + 1; ++k) {
        power = mul(power, s);
        power *= Rational(1, k);
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

PartitionSeries log_series(const PartitionSeries& s) {
    if (s.at(PartitionSeries::Key{}) != 1)
        throw std::invalid_argument("log_series: constant term must be 1");
    PartitionSeries u = s;
    u.add(PartitionSeries::Key{}, -1);
    PartitionSeries result(s.caps());
    PartitionSeries power = PartitionSeries::constant(s.caps(), 1);
    const int bound = max_power_bound(s.caps());
    for (int k = 1; k <= bound + 1; ++k) {
        power = mul(power, u);
        if (power.is_zero()) break;
        PartitionSeries term = power;
        term *= Rational(k % 2 == 1 ? 1 : -1, k);
        result += term;
    }
    return result;
}

PartitionSeries pow_of_one_plus(const PartitionSeries& t, long e) {
    if (t.at(PartitionSeries::Key{}) != 0)
        throw std::invalid_argument("pow_of_one_plus: nonzero constant term");
    PartitionSeries result = PartitionSeries::constant(t.caps(), 1);
    PartitionSeries power = result;
    Rational coeff = 1;
    const int bound = max_power_bound(t.caps());
    for (int m = 1; m <= bound + 1; ++m) {
        power = mul(power, t);
        if (power.is_zero()) break;
        coeff *= make_rational(Integer(e - (m - 1)), Integer(m));  // builds C(e, m)
        if (coeff == 0) break;
        PartitionSeries term = power;
        term *= coeff;
        result += term;
    }
    return result;
}

PartitionSeries euler_operator(const PartitionSeries& s) {
    PartitionSeries out(s.caps());
    for (const auto& [key, value] : s.terms())
        out.add(key, value * key.alpha.weight());
    return out;
}

PartitionSeries multiplicity_operator(const PartitionSeries& s, int k) {
    PartitionSeries out(s.caps());
    for (const auto& [key, value] : s.terms()) {
        const int m = key.alpha.multiplicity(k);
        if (m != 0) out.add(key, value * m);
    }
    return out;
}

PartitionSeries lift(const PartitionSeries& s, int i) {
    if (i < 1 || i > s.caps().arity) throw std::logic_error("lift: catalyst slot out of range");
    PartitionSeries out(s.caps());
    for (const auto& [key, value] : s.terms()) {
        int prev = 0;
        for (int part : key.alpha.parts()) {
            if (part == prev) continue;
            prev = part;
            PartitionSeries::Key k;
            k.alpha = key.alpha.without(part);
            k.t = key.t;
            k.x = key.x;
            k.x[i - 1] += part;
            out.add(std::move(k), value * part * key.alpha.multiplicity(part));
        }
    }
    return out;
}

PartitionSeries project(const PartitionSeries& s, int i) {
    if (i < 1 || i > s.caps().arity) throw std::logic_error("project: catalyst slot out of range");
    PartitionSeries out(s.caps());
    for (const auto& [key, value] : s.terms()) {
        const int e = key.x[i - 1];
        if (e == 0) {
            out.add(key, value);
        } else {
            PartitionSeries::Key k;
            k.alpha = key.alpha.with(e);
            k.t = key.t;
            k.x = key.x;
            k.x[i - 1] = 0;
            out.add(std::move(k), value);
        }
    }
    return out;
}

PartitionSeries split(const PartitionSeries& s, int i, int j) {
    if (i == j) throw std::logic_error("split: slots must differ");
    if (i < 1 || i > s.caps().arity || j < 1 || j > s.caps().arity)
        throw std::logic_error("split: catalyst slot out of range");
    PartitionSeries out(s.caps());
    for (const auto& [key, value] : s.terms()) {
        const int k = key.x[i - 1];
        if (k == 0) {
            out.add(key, value);
            continue;
        }
        if (key.x[j - 1] != 0) throw std::logic_error("split: target slot in use");
        for (int a = 1; a <= k - 1; ++a) {
            PartitionSeries::Key nk = key;
            nk.x[i - 1] = k - a;
            nk.x[j - 1] = a;
            out.add(std::move(nk), value);
        }
    }
    return out;
}

UniSeries::UniSeries(int cap) : c_(cap + 1) {
    if (cap < 0) throw std::invalid_argument("UniSeries: negative cap");
}

UniSeries& UniSeries::operator+=(const UniSeries& o) {
    if (cap() != o.cap()) throw std::logic_error("UniSeries: cap mismatch");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& o) {
    if (cap() != o.cap()) throw std::logic_error("UniSeries: cap mismatch");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    if (a.cap() != b.cap()) throw std::logic_error("UniSeries: cap mismatch");
    UniSeries out(a.cap());
    for (int i = 0; i <= a.cap(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= a.cap(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

UniSeries UniSeries::inverse() const {
    if (c_[0] == 0) throw std::domain_error("UniSeries::inverse: zero constant term");
    UniSeries out(cap());
    out[0] = 1 / c_[0];
    for (int n = 1; n <= cap(); ++n) {
        Rational acc = 0;
        for (int i = 1; i <= n; ++i) acc += c_[i] * out[n - i];
        out[n] = -acc / c_[0];
    }
    return out;
}

UniSeries UniSeries::sqrt_from_one() const {
    if (c_[0] != 1) throw std::domain_error("UniSeries::sqrt_from_one: constant term must be 1");
    UniSeries s(cap());
    s[0] = 1;
    int iters = 1;
    while ((1 << iters) <= cap() + 1) ++iters;
    for (int step = 0; step <= iters; ++step) {
        // s <- (s + A/s)/2
        UniSeries next = s + (*this * s.inverse());
        for (int k = 0; k <= cap(); ++k) next[k] /= 2;
        if (next == s) break;
        s = next;
    }
    if (!(s * s == *this)) throw std::logic_error("UniSeries::sqrt_from_one: iteration did not converge");
    return s;
}

UniSeries UniSeries::shifted_down(int k) const {
    for (int i = 0; i < k; ++i)
        if (c_[i] != 0) throw std::domain_error("UniSeries::shifted_down: low coefficients nonzero");
    UniSeries out(cap());
    for (int i = k; i <= cap(); ++i) out[i - k] = c_[i];
    return out;
}

BiSeries::BiSeries(int cap) : cap_(cap), c_(static_cast<std::size_t>(cap + 1) * (cap + 1)) {
    if (cap < 0) throw std::invalid_argument("BiSeries: negative cap");
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    if (cap_ != o.cap_) throw std::logic_error("BiSeries: cap mismatch");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
    if (cap_ != o.cap_) throw std::logic_error("BiSeries: cap mismatch");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    if (a.cap_ != b.cap_) throw std::logic_error("BiSeries: cap mismatch");
    BiSeries out(a.cap_);
    for (int i = 0; i <= a.cap_; ++i)
        for (int j = 0; j <= a.cap_; ++j) {
            if (a.at(i, j) == 0) continue;
            for (int u = 0; i + u <= a.cap_; ++u)
                for (int v = 0; j + v <= a.cap_; ++v)
                    out.at(i + u, j + v) += a.at(i, j) * b.at(u, v);
        }
    return out;
}

BiSeries BiSeries::inverse() const {
    if (at(0, 0) == 0) throw std::domain_error("BiSeries::inverse: zero constant term");
    BiSeries out(cap_);
    for (int n = 0; n <= 2 * cap_; ++n) {
        for (int i = std::max(0, n - cap_); i <= std::min(n, cap_); ++i) {
            const int j = n - i;
            Rational acc = (i == 0 && j == 0) ? Rational(1) : Rational(0);
            for (int u = 0; u <= i; ++u)
                for (int v = 0; v <= j; ++v) {
                    if (u == 0 && v == 0) continue;
                    acc -= at(u, v) * out.at(i - u, j - v);
                }
            out.at(i, j) = acc / at(0, 0);
        }
    }
    return out;
}

BiSeries BiSeries::from_uni(const UniSeries& u, int cap) {
    BiSeries out(cap);
    for (int i = 0; i <= std::min(cap, u.cap()); ++i) out.at(i, 0) = u[i];
    return out;
}

}  // namespace hurwitz

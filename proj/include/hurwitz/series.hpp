#pragma once

#include <map>
#include <string>
#include <vector>

#include "hurwitz/exact.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

/// Truncation box for a PartitionSeries.  Keys outside the box are
/// silently dropped by every operation; all identities are asserted only
/// within caps.  max_total additionally bounds |alpha| + sum of catalyst
/// exponents, which is the grading preserved by the lift/project/split
/// operators and therefore the natural exactness region for operator
/// equations.
struct SeriesCaps {
    int max_weight = 0;  // D: max partition weight
    int max_t = 0;       // R: max t-exponent
    int arity = 0;       // number of catalyst variables in use
    int max_xdeg = 0;    // X: per-variable catalyst exponent cap
    int max_total = -1;  // optional |alpha| + sum(x) cap; -1 disables

    friend bool operator==(const SeriesCaps&, const SeriesCaps&) = default;
};

/// Truncated formal power series with exact rational coefficients keyed by
/// (partition monomial p_alpha, t-exponent, catalyst exponent tuple).
/// The z-variable is never stored: its exponent is always |alpha|, so
/// z d/dz acts as multiplication by the weight.  Absent key == zero
/// coefficient; stored zeros are erased.
class PartitionSeries {
public:
    struct Key {
        Partition alpha;
        int t = 0;
        std::vector<int> x;

        int total_grade() const;

        friend bool operator<(const Key& a, const Key& b) {
            if (!(a.alpha == b.alpha)) return a.alpha < b.alpha;
            if (a.t != b.t) return a.t < b.t;
            return a.x < b.x;
        }
        friend bool operator==(const Key&, const Key&) = default;
    };
    using Terms = std::map<Key, Rational>;

    explicit PartitionSeries(SeriesCaps caps);

    const SeriesCaps& caps() const { return caps_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational at(const Key& key) const;
    Rational at(const Partition& alpha, int t = 0) const;

    void add(Key key, const Rational& value);
    void set(Key key, Rational value);

    // Same series in a different truncation box.  Growing the arity pads
    // exponent tuples with zeros; shrinking requires the dropped slots to
    // be unused.  Keys outside the new caps are dropped.
    PartitionSeries recapped(SeriesCaps caps) const;

    static PartitionSeries constant(SeriesCaps caps, const Rational& value);
    static PartitionSeries monomial(SeriesCaps caps, Key key, const Rational& value);

    PartitionSeries& operator+=(const PartitionSeries& other);
    PartitionSeries& operator-=(const PartitionSeries& other);
    PartitionSeries& operator*=(const Rational& scalar);

    friend PartitionSeries operator+(PartitionSeries a, const PartitionSeries& b) { return a += b; }
    friend PartitionSeries operator-(PartitionSeries a, const PartitionSeries& b) { return a -= b; }
    friend bool operator==(const PartitionSeries& a, const PartitionSeries& b) {
        return a.caps_ == b.caps_ && a.terms_ == b.terms_;
    }

    // Deterministic line-delimited dump:
    // {"alpha":[...],"r":N,"x":[...],"c":"<num>/<den>"} sorted by key.
    std::string dump() const;

private:
    SeriesCaps caps_;
    Terms terms_;
};

// Product; p_alpha p_beta = p_{alpha union beta}, t and catalyst exponents
// add, overflow beyond caps is dropped.  Caps of both factors must agree.
PartitionSeries mul(const PartitionSeries& a, const PartitionSeries& b);

// exp requires zero constant term, log requires constant term 1; they are
// mutually inverse within caps.
PartitionSeries exp_series(const PartitionSeries& s);
PartitionSeries log_series(const PartitionSeries& s);

// (1 + T)^e for integer e (negative allowed) and T with zero constant term.
PartitionSeries pow_of_one_plus(const PartitionSeries& t, long e);

// Euler operator sum_k k p_k d/dp_k: scales p_alpha by |alpha|.
PartitionSeries euler_operator(const PartitionSeries& s);

// p_k d/dp_k: scales p_alpha by m_k(alpha).
PartitionSeries multiplicity_operator(const PartitionSeries& s, int k);

// Lifting operator sum_k k x_i^k d/dp_k.  Catalyst variables already
// present are treated as constants, so applying it twice realizes the
// second-order form sum_{j,k} jk x_i^{j+k} d^2/(dp_j dp_k).
PartitionSeries lift(const PartitionSeries& s, int i);

// Projection [x_i^0] + sum_k p_k [x_i^k]; idempotent.
PartitionSeries project(const PartitionSeries& s, int i);

// Splitting x_i^k -> sum_{a=1}^{k-1} x_i^{k-a} x_j^a; x_i-free terms are
// left unchanged.  Slot j must be unused.
PartitionSeries split(const PartitionSeries& s, int i, int j);

/// Truncated single-variable series, dense exact coefficients.
class UniSeries {
public:
    explicit UniSeries(int cap);

    int cap() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int k) const { return c_[k]; }
    Rational& operator[](int k) { return c_[k]; }

    UniSeries& operator+=(const UniSeries& o);
    UniSeries& operator-=(const UniSeries& o);
    friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
    friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
    friend bool operator==(const UniSeries&, const UniSeries&) = default;

    UniSeries inverse() const;            // constant term must be nonzero
    UniSeries sqrt_from_one() const;      // Newton iteration; constant term must be 1
    UniSeries shifted_down(int k) const;  // divide by x^k; lower coefficients must vanish

private:
    std::vector<Rational> c_;
};

/// Truncated two-variable series, dense exact coefficients, same cap in
/// each variable.
class BiSeries {
public:
    explicit BiSeries(int cap);

    int cap() const { return cap_; }
    const Rational& at(int i, int j) const { return c_[idx(i, j)]; }
    Rational& at(int i, int j) { return c_[idx(i, j)]; }

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend bool operator==(const BiSeries&, const BiSeries&) = default;

    BiSeries inverse() const;  // constant term must be nonzero

    // Embeds a one-variable series as a function of the first variable.
    static BiSeries from_uni(const UniSeries& u, int cap);

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * (cap_ + 1) + j; }

    int cap_ = 0;
    std::vector<Rational> c_;
};

}  // namespace hurwitz

#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/bounds.hpp"
#include "hurwitz/recurrence.hpp"

namespace hurwitz {

/// Dense coefficient table of the genus-g, arity-ell series
/// M_g(x_1,...,x_ell); the entry at exponent tuple e is the coefficient of
/// x^e, i.e. H>_g(e+1)/|C_{e+1}| over compositions.  Symmetric in all
/// slots even though the recursion singles out x_1.
class CoeffTable {
public:
    CoeffTable(int genus, int arity, int degree);

    int genus() const { return genus_; }
    int arity() const { return arity_; }
    int degree() const { return degree_; }

    const Rational& at(std::span<const int> e) const { return v_[index(e)]; }
    Rational& at(std::span<const int> e) { return v_[index(e)]; }

    bool symmetric() const;

    // Deterministic CSV dump with header e1,...,el,value; exact fraction
    // strings, rows in lexicographic tuple order.
    std::string csv() const;

private:
    std::size_t index(std::span<const int> e) const;

    int genus_;
    int arity_;
    int degree_;
    std::vector<Rational> v_;
};

struct ToprecCaps {
    int max_genus = 2;
    int max_arity = 3;
    int max_degree = 8;
};

/// Bottom-up evaluator; caches one table per (genus, arity) at the largest
/// degree requested so far.  Internal dependencies may exceed the request
/// caps (lower-arity tables are consulted at roughly twice the degree).
class ToprecEngine {
public:
    const CoeffTable& table(int g, int ell, int degree);

private:
    CoeffTable compute(int g, int ell, int degree);

    std::map<std::pair<int, int>, CoeffTable> cache_;
};

// Table of M_g(x_1..x_ell) up to the per-variable degree cap; checks the
// request against caps and asserts symmetry of the result.
CoeffTable mg_table(int g, int ell, int degree, const ToprecCaps& caps = {});

struct ReconcileReport {
    bool ok = true;
    std::size_t cells_checked = 0;
    std::string detail;  // first mismatch, empty when ok
};

// Asserts table value == monotone_H_genus(sorted(e+1), g)/class_size for
// every cell, and for g = 0, ell <= 2 also compares against the explicit
// one- and two-point series.
ReconcileReport reconcile(int g, int ell, int degree, MemoTable& memo,
                          const ToprecCaps& caps = {});

}  // namespace hurwitz

#include "hurwitz/closed_form.hpp"

#include <stdexcept>

namespace hurwitz {

namespace {

Integer require_integral(const Rational& value, const char* what) {
    if (value.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integral value");
    return value.get_num();
}

}  // namespace

Integer monotone_genus0(const Partition& alpha) {
    if (alpha.weight() < 1) throw std::invalid_argument("monotone_genus0: alpha must be nonempty");
    const int d = alpha.weight();
    const int ell = alpha.length();
    Rational value = Rational(factorial(d)) / Rational(aut_size(alpha));
    value *= rising(Integer(2 * d + 1), ell - 3);
    for (int part : alpha.parts()) value *= binomial(Integer(2 * part), part);
    return require_integral(value, "monotone_genus0");
}

Integer monotone_genus0_single_cycle(int d) {
    if (d < 1) throw std::invalid_argument("monotone_genus0_single_cycle: d must be >= 1");
    Integer value;
    mpz_divexact(value.get_mpz_t(), factorial(2 * d - 2).get_mpz_t(), factorial(d).get_mpz_t());
    if (value != monotone_genus0(Partition{d}))
        throw std::logic_error("monotone_genus0_single_cycle: disagrees with general formula");
    return value;
}

Integer monotone_genus0_all_ones_quoted(int d) {
    if (d < 1) throw std::invalid_argument("monotone_genus0_all_ones_quoted: d must be >= 1");
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(d - 1));
    return factorial(d - 1) * two_pow;
}

Integer classical_genus0(const Partition& alpha) {
    if (alpha.weight() < 1) throw std::invalid_argument("classical_genus0: alpha must be nonempty");
    const int d = alpha.weight();
    const int ell = alpha.length();
    Rational value = Rational(factorial(d)) / Rational(aut_size(alpha));
    value *= factorial(d + ell - 2);
    Integer dpow;
    mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(ell >= 3 ? ell - 3 : 3 - ell));
    if (ell >= 3)
        value *= dpow;
    else
        value /= dpow;
    for (int part : alpha.parts()) {
        Integer ppow;
        mpz_ui_pow_ui(ppow.get_mpz_t(), static_cast<unsigned long>(part),
                      static_cast<unsigned long>(part));
        value *= Rational(ppow) / Rational(factorial(part));
    }
    return require_integral(value, "classical_genus0");
}

Rational bms_genus0(const Partition& alpha, int r) {
    if (alpha.weight() < 1) throw std::invalid_argument("bms_genus0: alpha must be nonempty");
    if (r < 1) throw std::invalid_argument("bms_genus0: r must be >= 1");
    const int d = alpha.weight();
    const int ell = alpha.length();
    Rational value = Rational(factorial(d)) / Rational(aut_size(alpha));
    value *= r;
    value *= rising(Integer(r - 1) * d - ell + 2, ell - 2);
    for (int part : alpha.parts())
        value *= binomial(Integer(r) * part - 1, part);
    return value;
}

FormulaReport bms_report(const Partition& alpha, int r, const Integer& oracle_value) {
    FormulaReport rep;
    rep.alpha = alpha;
    rep.formula = "bms-genus0";
    rep.value = bms_genus0(alpha, r);
    rep.integral = rep.value.get_den() == 1;
    rep.cross_check = "formula=" + to_fraction(rep.value) +
                      " enumeration=" + to_decimal(oracle_value) +
                      (rep.value == Rational(oracle_value)
                           ? " status=agree"
                           : " status=unreconciled (convention ambiguity)");
    return rep;
}

FormulaReport all_ones_report(int d, const Integer& reference_value) {
    FormulaReport rep;
    std::vector<int> ones(d, 1);
    rep.alpha = Partition(ones);
    rep.formula = "monotone-genus0-all-ones-quoted";
    rep.value = Rational(monotone_genus0_all_ones_quoted(d));
    rep.integral = true;
    rep.cross_check = "quoted=" + to_fraction(rep.value) +
                      " reference=" + to_decimal(reference_value) +
                      (rep.value == Rational(reference_value)
                           ? " status=agree"
                           : " status=unreconciled (convention ambiguity)");
    return rep;
}

}  // namespace hurwitz

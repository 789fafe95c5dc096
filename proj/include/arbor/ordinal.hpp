#ifndef ARBOR_ORDINAL_HPP
#define ARBOR_ORDINAL_HPP

#include <string>
#include <vector>

namespace arbor {

enum class order { less, equal, greater };

// Ordinal below epsilon_0 in Cantor normal form:
//   w^e_1 * c_1 + w^e_2 * c_2 + ... with e_1 > e_2 > ... and every c_i >= 1.
// The empty term list denotes 0.  Finite ordinals are a single term with
// exponent 0.
class ordinal {
public:
    struct term;

    ordinal() = default;

    static ordinal zero() { return ordinal(); }
    static ordinal finite(long long n);
    static ordinal omega();
    static ordinal omega_power(const ordinal& exponent);
    // validates exponents strictly decreasing and coefficients >= 1
    static ordinal from_terms(std::vector<term> terms);

    const std::vector<term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    // value of a finite ordinal; invalid_argument otherwise
    long long finite_value() const;

    bool operator==(const ordinal& o) const;
    bool operator!=(const ordinal& o) const { return !(*this == o); }

private:
    std::vector<term> terms_;

    friend ordinal ord_add(const ordinal&, const ordinal&);
    friend order ord_compare(const ordinal&, const ordinal&);
    friend ordinal parse_ordinal(const std::string&);
};

struct ordinal::term {
    ordinal exponent;
    long long coefficient = 1;
};

order ord_compare(const ordinal& a, const ordinal& b);
ordinal ord_add(const ordinal& a, const ordinal& b);

// true iff a = w^b for some b (single CNF term, coefficient 1).
// param_out_of_range on a = 0.
bool is_indecomposable(const ordinal& a);

// Smallest-form goal rho with xi <= rho and rho -> (xi)^1_m:
// (xi-1)*m + 1 for finite xi, w^xi for infinite xi.
// param_out_of_range on xi = 0 or m < 1.
ordinal pigeonhole_goal(const ordinal& xi, long long m);

// true iff every map {0..rho-1} -> {0..m-1} has a fiber of size >= xi,
// by the counting criterion rho > (xi-1)*m.
bool verify_pigeonhole_finite(long long rho, long long xi, long long m);

// Text grammar: `w^<ord>*<coef> + ...` with `w` for omega, e.g.
// "w^2 + w*4", "5", "w^w".  Rejects non-canonical input.
ordinal parse_ordinal(const std::string& text);
std::string format_ordinal(const ordinal& a);

} // namespace arbor

#endif

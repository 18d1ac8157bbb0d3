#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace wlp {

using BigInt = mpz_class;

// Univariate polynomial with nonnegative arbitrary-precision integer
// coefficients; coeffs[k] is the coefficient of t^k. Trailing zeros are
// trimmed, so degree() is exact (-1 for the zero polynomial).
class UPoly {
public:
    UPoly() = default;  // zero polynomial
    explicit UPoly(std::vector<BigInt> coeffs);
    UPoly(std::initializer_list<unsigned long> coeffs);

    static UPoly one() { return UPoly({1ul}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // Coefficient of t^k; zero outside the stored range.
    const BigInt& coeff(int k) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    UPoly operator+(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly shifted(int k) const;  // multiply by t^k

    bool operator==(const UPoly&) const = default;

    // Display form "1 + 6t + 9t^2 + 3t^3"; zero coefficients skipped.
    std::string to_string() const;
    // JSON form: decimal coefficient strings (values exceed 64 bits for
    // large graphs).
    std::vector<std::string> coeff_strings() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

struct ModeReport {
    bool unimodal = false;
    std::optional<int> mode;  // present iff unimodal and polynomial nonzero
};

// Unimodality and mode of a coefficient sequence: unimodal iff it rises
// weakly then falls weakly; the mode is the unique index i with a strict
// rise into i (taking a_{-1} = 0) and weak descent after. Throws on the
// zero polynomial.
ModeReport mode_analysis(const UPoly& p);

// Mode of I(P_n;t) in closed form, evaluated with exact integer square
// roots; agrees with mode_analysis(independence_polynomial(path(n))).
int lambda_closed_form(int n);

// Checks that f+g is unimodal with mode in {min(p,q), min(p,q)+1}, where
// p, q are the modes of f and g. Requires f, g unimodal with |p-q| <= 1
// and throws otherwise; the interesting output is the boolean.
bool check_unimodal_sum(const UPoly& f, const UPoly& g);

} // namespace wlp

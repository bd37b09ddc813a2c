#pragma once

#include "circpat/rational.hpp"

#include <string>
#include <vector>

namespace circpat {

// Polynomial in the occurrence-marking variable u with exact rational
// coefficients. Stored dense, trailing zeros trimmed, so equal values
// compare equal structurally.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rational& constant);  // NOLINT: implicit by design
    UPoly(long constant);             // NOLINT
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly monomial(const Rational& c, int k);
    // The polynomial u itself.
    static UPoly u();

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const Rational& c) const;

    bool operator==(const UPoly& o) const = default;

    Rational eval(const Rational& u) const;
    double eval_double(double u) const;

    // Descending powers, e.g. "u^2 + 2u + 3"; non-integer coefficients are
    // parenthesized: "(1/6)u". Zero prints as "0".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies u^k
};

}  // namespace circpat

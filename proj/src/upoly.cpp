#include "circpat/upoly.hpp"

#include <utility>

namespace circpat {

UPoly::UPoly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

UPoly::UPoly(long constant) : UPoly(Rational(constant)) {}

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, int k) {
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

UPoly UPoly::u() { return monomial(1, 1); }

Rational UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k < coeffs_.size()) v[k] += coeffs_[k];
        if (k < o.coeffs_.size()) v[k] += o.coeffs_[k];
    }
    return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    UPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Rational UPoly::eval(const Rational& u) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

double UPoly::eval_double(double u) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * u + rat_to_double(*it);
    return acc;
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational c = coeff(k);
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0) {
            out += rat_to_string(a);
        } else {
            if (a != 1) {
                if (denominator(a) == 1)
                    out += numerator(a).str();
                else
                    out += "(" + rat_to_string(a) + ")";
            }
            out += "u";
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace circpat

#pragma once

#include "jorvar/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace jorvar {

// Univariate polynomial in t over the rationals. Coefficients are stored by
// degree with no trailing zeros; the zero polynomial has an empty coefficient
// vector and degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rat constant);
    explicit UniPoly(std::vector<Rat> coeffs);
    UniPoly(std::initializer_list<Rat> coeffs);

    static UniPoly t(int power = 1, Rat coeff = Rat(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rat coeff(int k) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // Largest k with t^k dividing the polynomial; -1 for the zero polynomial.
    int valuation() const;

    Rat eval(const Rat& at) const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly operator*(const Rat& rhs) const;
    bool operator==(const UniPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const UniPoly& rhs) const { return !(*this == rhs); }

    // Euclidean division by a nonzero divisor; returns {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    UniPoly monic() const;

    std::string str() const;

private:
    void normalize();

    std::vector<Rat> coeffs_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b); // monic, gcd(0,0) = 0

// Ratio of two polynomials in t, kept in canonical form: gcd(num,den) = 1 and
// den monic. Equality is therefore structural.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rat(1)) {}
    RationalFunction(Rat constant) : num_(std::move(constant)), den_(Rat(1)) {}
    explicit RationalFunction(UniPoly num) : num_(std::move(num)), den_(Rat(1)) {}
    RationalFunction(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& rhs) const;
    RationalFunction operator-(const RationalFunction& rhs) const;
    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator/(const RationalFunction& rhs) const;
    bool operator==(const RationalFunction& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const RationalFunction& rhs) const { return !(*this == rhs); }

    // Value at a rational point; nullopt if the (reduced) denominator vanishes.
    std::optional<Rat> eval(const Rat& at) const;

    // Value at t = 0 after cancellation; throws PoleAtZero when t still
    // divides the denominator.
    Rat limit_at_zero() const;

    std::string str() const;

private:
    void normalize();

    UniPoly num_;
    UniPoly den_;
};

} // namespace jorvar

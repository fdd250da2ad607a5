#include "jorvar/poly.hpp"

#include <algorithm>

namespace jorvar {

UniPoly::UniPoly(Rat constant) {
    coeffs_.push_back(std::move(constant));
    normalize();
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { normalize(); }

UniPoly UniPoly::t(int power, Rat coeff) {
    std::vector<Rat> c(power + 1, Rat(0));
    c[power] = std::move(coeff);
    return UniPoly(std::move(c));
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rat UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return Rat(0);
    return coeffs_[k];
}

const Rat& UniPoly::leading() const {
    if (coeffs_.empty())
        throw InternalError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

int UniPoly::valuation() const {
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            return static_cast<int>(k);
    return -1;
}

Rat UniPoly::eval(const Rat& at) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = -coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    std::vector<Rat> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size())
            out[i] += coeffs_[i];
        if (i < rhs.coeffs_.size())
            out[i] += rhs.coeffs_[i];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const { return *this + (-rhs); }

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (is_zero() || rhs.is_zero())
        return UniPoly();
    std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rat& rhs) const {
    std::vector<Rat> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = coeffs_[i] * rhs;
    return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero())
        throw Error("polynomial division by zero");
    UniPoly rem = *this;
    if (rem.degree() < divisor.degree())
        return {UniPoly(), rem};
    std::vector<Rat> quot(rem.degree() - divisor.degree() + 1, Rat(0));
    const Rat& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rat factor = rem.leading() / lead;
        quot[shift] = factor;
        std::vector<Rat> sub(shift + divisor.coeffs_.size(), Rat(0));
        for (size_t i = 0; i < divisor.coeffs_.size(); ++i)
            sub[i + shift] = divisor.coeffs_[i] * factor;
        rem = rem - UniPoly(std::move(sub));
    }
    return {UniPoly(std::move(quot)), rem};
}

UniPoly UniPoly::monic() const {
    if (is_zero())
        return *this;
    return *this * (Rat(1) / leading());
}

std::string UniPoly::str() const {
    if (is_zero())
        return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rat c = coeff(k);
        if (c == 0)
            continue;
        if (!out.empty())
            out += (c > 0) ? " + " : " - ";
        else if (c < 0)
            out += "-";
        Rat a = abs(c);
        if (k == 0) {
            out += to_string(a);
        } else {
            if (a != 1)
                out += to_string(a) + "*";
            out += (k == 1) ? "t" : ("t^" + std::to_string(k));
        }
    }
    return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r).monic(); // keeps coefficient growth in check
    }
    return x.monic();
}

RationalFunction::RationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw Error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rat(1));
        return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
    return *this + (-rhs);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
    if (rhs.is_zero())
        throw Error("rational function division by zero");
    return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

std::optional<Rat> RationalFunction::eval(const Rat& at) const {
    Rat d = den_.eval(at);
    if (d == 0)
        return std::nullopt;
    return num_.eval(at) / d;
}

Rat RationalFunction::limit_at_zero() const {
    Rat d = den_.coeff(0);
    if (d == 0)
        throw PoleAtZero("pole at t=0 in " + str());
    return num_.coeff(0) / d;
}

std::string RationalFunction::str() const {
    if (den_ == UniPoly(Rat(1)))
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace jorvar

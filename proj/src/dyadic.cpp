#include "imbalance/dyadic.hpp"

#include "imbalance/errors.hpp"

namespace imbalance {

Dyadic::Dyadic(BigInt numerator, unsigned exponent)
    : num_(std::move(numerator)), exp_(exponent) {
    if (num_ < 0) {
        throw InternalError("dyadic numerator must be non-negative");
    }
    normalize();
}

void Dyadic::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && !bit_test(num_, 0)) {
        num_ >>= 1;
        --exp_;
    }
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
    const unsigned e = std::max(exp_, rhs.exp_);
    num_ = (num_ << (e - exp_)) + (rhs.num_ << (e - rhs.exp_));
    exp_ = e;
    normalize();
    return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) {
    const unsigned e = std::max(exp_, rhs.exp_);
    const BigInt lifted = num_ << (e - exp_);
    const BigInt sub = rhs.num_ << (e - rhs.exp_);
    if (lifted < sub) {
        throw InternalError("dyadic subtraction below zero: " + str() + " - " + rhs.str());
    }
    num_ = lifted - sub;
    exp_ = e;
    normalize();
    return *this;
}

Dyadic Dyadic::times(const BigInt& k) const {
    if (k < 0) {
        throw InternalError("dyadic scale factor must be non-negative");
    }
    return Dyadic(num_ * k, exp_);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& rhs) const {
    const unsigned e = std::max(exp_, rhs.exp_);
    const BigInt a = num_ << (e - exp_);
    const BigInt b = rhs.num_ << (e - rhs.exp_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Dyadic::str() const {
    if (exp_ == 0) {
        return num_.str();
    }
    return num_.str() + "/" + (BigInt(1) << exp_).str();
}

}  // namespace imbalance

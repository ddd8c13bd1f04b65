#ifndef IMBALANCE_DYADIC_HPP
#define IMBALANCE_DYADIC_HPP

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace imbalance {

using BigInt = boost::multiprecision::cpp_int;

// Exact non-negative dyadic rational numerator / 2^exponent.
// Normalized so that the numerator is odd whenever exponent > 0, and
// zero is stored as 0 / 2^0. All arithmetic is exact; there is no
// rounding anywhere.
class Dyadic {
public:
    Dyadic() = default;  // zero

    // value = numerator / 2^exponent (reduced on construction)
    Dyadic(BigInt numerator, unsigned exponent);

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1, 0); }
    // 2^-e, the Kraft weight of a word of length e
    static Dyadic pow2_inverse(unsigned e) { return Dyadic(1, e); }

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return exp_ == 0 && num_ == 1; }

    Dyadic& operator+=(const Dyadic& rhs);
    Dyadic& operator-=(const Dyadic& rhs);  // throws InternalError below zero
    friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }
    friend Dyadic operator-(Dyadic lhs, const Dyadic& rhs) { return lhs -= rhs; }

    // scale by a non-negative integer
    Dyadic times(const BigInt& k) const;

    // comparison by cross-multiplied exact integers
    std::strong_ordering operator<=>(const Dyadic& rhs) const;
    bool operator==(const Dyadic& rhs) const { return num_ == rhs.num_ && exp_ == rhs.exp_; }

    // "0", "1", "3/4", "31/32", ...
    std::string str() const;

private:
    void normalize();

    BigInt num_ = 0;
    unsigned exp_ = 0;
};

}  // namespace imbalance

#endif

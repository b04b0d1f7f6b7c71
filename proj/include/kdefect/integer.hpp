#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "kdefect/errors.hpp"

namespace kdefect {

/// Exact signed integer on 128 bits with overflow checks. Defect-polynomial
/// coefficients alternate in sign and cancel heavily, so a silent wraparound
/// would corrupt results invisibly; any operation that leaves the range
/// throws OverflowError instead.
class Int {
public:
    constexpr Int() : v_(0) {}
    constexpr Int(long long v) : v_(v) {}
    constexpr Int(int v) : v_(v) {}

    static constexpr Int raw(__int128 v) {
        Int r;
        r.v_ = v;
        return r;
    }

    friend Int operator+(Int a, Int b) {
        __int128 r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("+");
        return raw(r);
    }
    friend Int operator-(Int a, Int b) {
        __int128 r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("-");
        return raw(r);
    }
    friend Int operator*(Int a, Int b) {
        __int128 r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("*");
        return raw(r);
    }
    Int operator-() const {
        __int128 r;
        if (__builtin_sub_overflow(__int128{0}, v_, &r)) throw OverflowError("negate");
        return raw(r);
    }

    Int& operator+=(Int o) { return *this = *this + o; }
    Int& operator-=(Int o) { return *this = *this - o; }
    Int& operator*=(Int o) { return *this = *this * o; }

    friend bool operator==(Int a, Int b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(Int a, Int b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ < 0 ? -1 : v_ > 0 ? 1 : 0; }

    /// Quotient of an exact division; throws if the division has a remainder.
    Int divide_exact(Int d) const {
        if (d.v_ == 0) throw Error("division by zero");
        if (v_ % d.v_ != 0) throw Error("inexact division");
        return raw(v_ / d.v_);
    }

    long long to_int64() const {
        if (v_ > std::numeric_limits<long long>::max() ||
            v_ < std::numeric_limits<long long>::min())
            throw OverflowError("to_int64");
        return static_cast<long long>(v_);
    }

    std::string str() const {
        if (v_ == 0) return "0";
        unsigned __int128 u = v_ < 0 ? -static_cast<unsigned __int128>(v_)
                                     : static_cast<unsigned __int128>(v_);
        std::string digits;
        while (u > 0) {
            digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
            u /= 10;
        }
        if (v_ < 0) digits.push_back('-');
        return {digits.rbegin(), digits.rend()};
    }

private:
    __int128 v_;
};

inline std::string to_string(Int v) { return v.str(); }

} // namespace kdefect

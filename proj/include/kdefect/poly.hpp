#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdefect/integer.hpp"

namespace kdefect {

/// Dense univariate polynomial with exact integer coefficients; the variable
/// is the color count. Coefficients are stored low power first with no
/// trailing zeros, so the zero polynomial is the empty vector.
class Poly {
public:
    Poly() = default;

    static Poly constant(Int c) {
        Poly p;
        if (!c.is_zero()) p.c_.push_back(c);
        return p;
    }

    static Poly monomial(int power, Int c = 1) {
        Poly p;
        if (!c.is_zero()) {
            p.c_.assign(static_cast<size_t>(power) + 1, Int{});
            p.c_.back() = c;
        }
        return p;
    }

    static Poly variable() { return monomial(1); }

    static Poly from_coeffs(std::vector<Int> low_to_high) {
        Poly p;
        p.c_ = std::move(low_to_high);
        p.normalize();
        return p;
    }

    /// x(x-1)(x-2)...(x-factors+1); the empty product for factors == 0.
    static Poly falling_factorial(int factors) {
        Poly p = constant(1);
        for (int i = 0; i < factors; ++i) p *= from_coeffs({Int{-i}, Int{1}});
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(int power) const {
        if (power < 0 || power >= static_cast<int>(c_.size())) return Int{};
        return c_[static_cast<size_t>(power)];
    }
    Int operator[](int power) const { return coeff(power); }
    const std::vector<Int>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Int{});
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }

    Poly scaled(Int s) const {
        Poly r = *this;
        for (auto& c : r.c_) c *= s;
        r.normalize();
        return r;
    }

    Int operator()(Int x) const {
        Int acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// Quotient of division by (x - root) when the division is exact.
    std::optional<Poly> divided_by_root(Int root) const {
        if (is_zero()) return Poly{};
        std::vector<Int> q(c_.size() - 1, Int{});
        Int carry{};
        for (size_t i = c_.size(); i-- > 1;) {
            carry = c_[i] + carry * root;
            q[i - 1] = carry;
        }
        if (!(c_[0] + carry * root).is_zero()) return std::nullopt;
        return from_coeffs(std::move(q));
    }

    std::string latex(const std::string& var = "\\lambda") const {
        if (is_zero()) return "0";
        std::string out;
        for (int p = degree(); p >= 0; --p) {
            Int c = coeff(p);
            if (c.is_zero()) continue;
            bool first = out.empty();
            if (first) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            Int mag = c.sign() < 0 ? -c : c;
            bool unit = mag == Int{1};
            if (!unit || p == 0) out += mag.str();
            if (p >= 1) out += var;
            if (p >= 2) out += "^{" + std::to_string(p) + "}";
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Int> c_;
};

/// x(x-1)...(x-r); the constant 1 when r < 0.
inline Poly falling_chain(int r) { return Poly::falling_factorial(r + 1); }

struct FallingPrefix {
    int r = -1;      // largest r with x(x-1)...(x-r) dividing the input
    Poly quotient;   // input == falling_chain(r) * quotient
};

/// Peels consecutive roots 0, 1, 2, ... off p. For the zero polynomial the
/// result is r = -1 with a zero quotient.
inline FallingPrefix falling_prefix(const Poly& p) {
    FallingPrefix out;
    out.quotient = p;
    if (p.is_zero()) return out;
    for (Int root{0};; root += 1) {
        auto q = out.quotient.divided_by_root(root);
        if (!q) break;
        out.quotient = std::move(*q);
        out.r += 1;
    }
    return out;
}

/// Least x in 1..bound with p(x) > 0, or 0 when there is none.
inline int smallest_positive_support(const Poly& p, int bound) {
    for (int x = 1; x <= bound; ++x)
        if (p(Int{x}).sign() > 0) return x;
    return 0;
}

} // namespace kdefect

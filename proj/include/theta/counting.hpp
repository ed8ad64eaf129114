#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace theta {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Integer polynomial, coefficient of t^i at index i. Trailing zeros trimmed.
using Poly = std::vector<BigInt>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
BigRational poly_eval(const Poly& a, const BigRational& t);

/// numerator / denominator, stored exactly as constructed (no reduction).
class RationalGF {
public:
    /// Throws ArgumentError when the denominator has zero constant term.
    RationalGF(Poly numerator, Poly denominator);

    const Poly& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return den_; }

    /// First count+1 power-series coefficients at t = 0.
    std::vector<BigInt> coefficients(int count) const;
    /// Throws ArgumentError if the denominator vanishes at t.
    BigRational evaluate(const BigRational& t) const;

    friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator*(const RationalGF& a, const RationalGF& b);

private:
    Poly num_;
    Poly den_;
};

/// f^0..f^terms of the weighted recursion with window n and weight p-1.
std::vector<BigInt> fib_numbers(int n, int p, int terms);

/// (1 - (p-1)(t+...+t^{n-1})) / (1 - (p-1)(t+...+t^n)), the cell-count series of K(π,n).
RationalGF gf_em(int n, int p);

std::vector<BigInt> gf_coefficients(const RationalGF& g, int count);

/// The series gf_em(n, p) evaluated at t = -1.
BigRational euler_char(int n, int p);

/// p^{(-1)^n}.
BigRational expected_euler_char(int n, int p);

/// Sum over pruned n-trees with n+k edges of (p-1)^{leaves}, by direct enumeration.
BigInt weighted_pruned_count(int n, int p, int k);

/// "a/b", or "a" when b = 1.
std::string format_rational(const BigRational& q);

}  // namespace theta

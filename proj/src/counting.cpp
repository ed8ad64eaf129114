#include "theta/counting.hpp"

#include <algorithm>

#include "theta/errors.hpp"
#include "theta/level_tree.hpp"

namespace theta {

namespace {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void check_np(int n, int p) {
    if (n < 1) throw ArgumentError("n must be >= 1");
    if (p < 2) throw ArgumentError("group order must be >= 2");
}

}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

BigRational poly_eval(const Poly& a, const BigRational& t) {
    BigRational acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * t + BigRational(*it);
    return acc;
}

RationalGF::RationalGF(Poly numerator, Poly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    trim(num_);
    trim(den_);
    if (den_.empty() || den_.front() == 0)
        throw ArgumentError("generating function: denominator needs a non-zero constant term");
}

std::vector<BigInt> RationalGF::coefficients(int count) const {
    if (count < 0) throw ArgumentError("coefficients: negative count");
    // c_i = (a_i - sum_{j>=1} d_j c_{i-j}) / d_0, exact by construction when d_0 = ±1.
    std::vector<BigInt> c;
    for (int i = 0; i <= count; ++i) {
        BigInt acc = static_cast<std::size_t>(i) < num_.size() ? num_[static_cast<std::size_t>(i)] : BigInt(0);
        for (int j = 1; j <= i && static_cast<std::size_t>(j) < den_.size(); ++j)
            acc -= den_[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
        if (acc % den_.front() != 0)
            throw ArgumentError("coefficients: series is not integral at t^" + std::to_string(i));
        c.push_back(acc / den_.front());
    }
    return c;
}

BigRational RationalGF::evaluate(const BigRational& t) const {
    const BigRational d = poly_eval(den_, t);
    if (d == 0) throw ArgumentError("generating function: denominator vanishes at evaluation point");
    return poly_eval(num_, t) / d;
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    return RationalGF(poly_add(poly_mul(a.num_, b.den_), poly_mul(b.num_, a.den_)), poly_mul(a.den_, b.den_));
}

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return RationalGF(poly_mul(a.num_, b.num_), poly_mul(a.den_, b.den_));
}

std::vector<BigInt> fib_numbers(int n, int p, int terms) {
    check_np(n, p);
    if (terms < 0) throw ArgumentError("fib_numbers: negative term count");
    std::vector<BigInt> f;
    f.push_back(p - 1);
    for (int k = 1; k <= terms; ++k) {
        BigInt window = 0;
        for (int j = std::max(0, k - n); j < k; ++j) window += f[static_cast<std::size_t>(j)];
        f.push_back((p - 1) * window);
    }
    return f;
}

RationalGF gf_em(int n, int p) {
    check_np(n, p);
    Poly num{1};
    Poly den{1};
    for (int i = 1; i <= n; ++i) {
        if (i < n) num.push_back(-(p - 1));
        den.push_back(-(p - 1));
    }
    return RationalGF(std::move(num), std::move(den));
}

std::vector<BigInt> gf_coefficients(const RationalGF& g, int count) { return g.coefficients(count); }

BigRational euler_char(int n, int p) {
    const BigRational chi = gf_em(n, p).evaluate(BigRational(-1));
    return chi;
}

BigRational expected_euler_char(int n, int p) {
    check_np(n, p);
    return n % 2 == 0 ? BigRational(p) : BigRational(1, p);
}

BigInt weighted_pruned_count(int n, int p, int k) {
    check_np(n, p);
    if (k < 0) return 0;
    BigInt total = 0;
    for (const auto& t : enumerate_pruned(n, n + k)) {
        BigInt w = 1;
        for (std::size_t i = 0; i < leaves(t).size(); ++i) w *= p - 1;
        total += w;
    }
    return total;
}

std::string format_rational(const BigRational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace theta

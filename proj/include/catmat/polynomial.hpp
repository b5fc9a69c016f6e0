#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catmat/common.hpp"

namespace catmat {

/// Integer polynomial in q and t. Zero coefficients are never stored.
class BivariatePolynomial {
public:
    using Exponents = std::pair<int, int>;  // (deg_q, deg_t)
    using Terms = std::map<Exponents, BigInt>;

    BivariatePolynomial() = default;
    BivariatePolynomial(long c) { add_term(0, 0, BigInt(c)); }  // NOLINT(implicit)

    static BivariatePolynomial monomial(const BigInt& c, int deg_q, int deg_t) {
        BivariatePolynomial p;
        p.add_term(deg_q, deg_t, c);
        return p;
    }
    static BivariatePolynomial q() { return monomial(1, 1, 0); }
    static BivariatePolynomial t() { return monomial(1, 0, 1); }

    void add_term(int deg_q, int deg_t, const BigInt& c) {
        if (deg_q < 0 || deg_t < 0) throw DomainError("negative exponent");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({deg_q, deg_t}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BigInt coefficient(int deg_q, int deg_t) const {
        auto it = terms_.find({deg_q, deg_t});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        BivariatePolynomial out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return out;
    }
    BivariatePolynomial& operator*=(const BivariatePolynomial& o) { return *this = *this * o; }

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.terms_ == b.terms_; }

    /// p(t, q)
    BivariatePolynomial swapped() const {
        BivariatePolynomial out;
        for (const auto& [e, c] : terms_) out.add_term(e.second, e.first, c);
        return out;
    }

    /// p(q, 1)
    BivariatePolynomial at_t_one() const {
        BivariatePolynomial out;
        for (const auto& [e, c] : terms_) out.add_term(e.first, 0, c);
        return out;
    }

    /// p(1, t)
    BivariatePolynomial at_q_one() const {
        BivariatePolynomial out;
        for (const auto& [e, c] : terms_) out.add_term(0, e.second, c);
        return out;
    }

    BigInt evaluate(const BigInt& qv, const BigInt& tv) const {
        BigInt sum = 0;
        for (const auto& [e, c] : terms_) {
            BigInt qp, tp;
            mpz_pow_ui(qp.get_mpz_t(), qv.get_mpz_t(), static_cast<unsigned long>(e.first));
            mpz_pow_ui(tp.get_mpz_t(), tv.get_mpz_t(), static_cast<unsigned long>(e.second));
            sum += c * qp * tp;
        }
        return sum;
    }

    /// Terms in display order: deg_q descending, then deg_t ascending.
    std::vector<std::pair<Exponents, BigInt>> display_terms() const {
        std::vector<std::pair<Exponents, BigInt>> out(terms_.begin(), terms_.end());
        std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
            if (x.first.first != y.first.first) return x.first.first > y.first.first;
            return x.first.second < y.first.second;
        });
        return out;
    }

    /// e.g. "q^2*t + q*t^2"
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : display_terms()) {
            BigInt mag = abs(c);
            if (first)
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            first = false;
            std::string body;
            auto var = [&body](const char* name, int d) {
                if (d == 0) return;
                if (!body.empty()) body += "*";
                body += name;
                if (d > 1) body += "^" + std::to_string(d);
            };
            var("q", e.first);
            var("t", e.second);
            if (body.empty())
                out += mag.get_str();
            else if (mag == 1)
                out += body;
            else
                out += mag.get_str() + "*" + body;
        }
        return out;
    }

private:
    Terms terms_;
};

inline bool is_symmetric(const BivariatePolynomial& p) { return p.swapped() == p; }

/// Truncated power series in x with polynomial coefficients; coefficient k multiplies x^k, k <= order.
class PolynomialSeries {
public:
    explicit PolynomialSeries(int order) : coeffs_(window(order)) {}

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BivariatePolynomial& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    BivariatePolynomial& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

    friend PolynomialSeries operator+(PolynomialSeries a, const PolynomialSeries& b) {
        a.require_same_order(b);
        for (int k = 0; k <= a.order(); ++k) a[k] += b[k];
        return a;
    }
    friend PolynomialSeries operator-(PolynomialSeries a, const PolynomialSeries& b) {
        a.require_same_order(b);
        for (int k = 0; k <= a.order(); ++k) a[k] -= b[k];
        return a;
    }
    friend PolynomialSeries operator*(const PolynomialSeries& a, const PolynomialSeries& b) {
        a.require_same_order(b);
        PolynomialSeries out(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    }
    friend PolynomialSeries operator*(const BivariatePolynomial& c, PolynomialSeries a) {
        for (int k = 0; k <= a.order(); ++k) a[k] = c * a[k];
        return a;
    }

    /// Multiplication by x, dropping the term that leaves the window.
    PolynomialSeries shifted() const {
        PolynomialSeries out(order());
        for (int k = order(); k >= 1; --k) out[k] = coeffs_[static_cast<std::size_t>(k - 1)];
        return out;
    }

    /// this / d, for d with constant term 1.
    PolynomialSeries divided_by(const PolynomialSeries& d) const {
        require_same_order(d);
        if (!(d[0] == BivariatePolynomial(1))) throw DomainError("series divisor must have constant term 1");
        PolynomialSeries out(order());
        for (int k = 0; k <= order(); ++k) {
            BivariatePolynomial c = coeffs_[static_cast<std::size_t>(k)];
            for (int j = 1; j <= k; ++j) c -= d[j] * out[k - j];
            out[k] = std::move(c);
        }
        return out;
    }

    friend bool operator==(const PolynomialSeries& a, const PolynomialSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    static std::size_t window(int order) {
        if (order < 0) throw DomainError("series order must be non-negative");
        return static_cast<std::size_t>(order) + 1;
    }

    void require_same_order(const PolynomialSeries& o) const {
        if (o.order() != order()) throw DomainError("series orders differ");
    }

    std::vector<BivariatePolynomial> coeffs_;
};

}  // namespace catmat

#ifndef QJF_QSERIES_HPP
#define QJF_QSERIES_HPP

// Exact truncated series in q with rational exponents.
//
// A QSeries is a finite sum  sum_k c_k q^(k/D)  together with a validity
// order O: coefficients of q^e are exact for every e < O, and terms with
// e >= O are absent. D is kept minimal for the exponents present. All
// coefficients are arbitrary-precision rationals; no term with zero
// coefficient is ever stored.
//
// Truncation orders are tracked pessimistically:
//   add:    O = min(O_a, O_b)
//   mul:    O = min(O_a + val(b), O_b + val(a)),  val = least exponent
//           (val of a series with no stored terms is its order)
//   invert: O = O_a - 2*val(a)
// so that every reported coefficient is exact. Values are immutable after
// construction and safe to share between threads.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qjf/errors.hpp"
#include "qjf/rational.hpp"

namespace qjf {

class QSeries {
public:
    using TermMap = std::map<long long, Rat>; // exponent numerator over denom() -> coefficient

    QSeries() : denom_(1), order_(0) {}

    static QSeries zero(const Rat& order) { return QSeries(1, TermMap{}, order); }

    static QSeries constant(const Rat& c, const Rat& order) {
        TermMap t;
        if (c != 0 && order > 0) t[0] = c;
        return QSeries(1, std::move(t), order);
    }

    static QSeries monomial(const Rat& c, const Rat& exp, const Rat& order) {
        TermMap t;
        long long den = to_ll(exp.get_den());
        if (c != 0 && exp < order) t[to_ll(exp.get_num())] = c;
        return QSeries(den, std::move(t), order);
    }

    // Terms with exponent >= order are dropped silently; zero coefficients too.
    static QSeries make(long long denom, TermMap terms, const Rat& order) {
        return QSeries(denom, std::move(terms), order);
    }

    long long denom() const { return denom_; }
    const Rat& order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rat exponent(long long key) const { return rat(key, denom_); }

    // Least stored exponent; for a series with no terms this is the order
    // (the first exponent at which anything could appear).
    Rat val() const {
        if (terms_.empty()) return order_;
        return rat(terms_.begin()->first, denom_);
    }

    std::optional<Rat> leading_exponent() const {
        if (terms_.empty()) return std::nullopt;
        return rat(terms_.begin()->first, denom_);
    }

    Rat coeff(const Rat& e) const {
        if (e >= order_)
            throw BeyondTruncation("coefficient of q^" + rat_str(e) + " requested at order " + rat_str(order_));
        Rat scaled = e * rat(denom_);
        if (!is_integer(scaled)) return Rat(0);
        auto it = terms_.find(to_ll(scaled.get_num()));
        return it == terms_.end() ? Rat(0) : it->second;
    }

    QSeries truncated(const Rat& new_order) const {
        if (new_order >= order_) return *this;
        TermMap t;
        Rat bound = new_order * rat(denom_);
        for (const auto& [k, c] : terms_)
            if (rat(k) < bound) t.emplace(k, c);
        return QSeries(denom_, std::move(t), new_order);
    }

    QSeries shifted(const Rat& e) const {
        long long d = ll_lcm(denom_, to_ll(e.get_den()));
        long long scale = d / denom_;
        long long off = to_ll(Rat(e * rat(d)).get_num());
        TermMap t;
        for (const auto& [k, c] : terms_) t.emplace(k * scale + off, c);
        return QSeries(d, std::move(t), order_ + e);
    }

    friend QSeries operator-(const QSeries& a) {
        TermMap t;
        for (const auto& [k, c] : a.terms_) t.emplace(k, -c);
        return QSeries(a.denom_, std::move(t), a.order_);
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        long long d = ll_lcm(a.denom_, b.denom_);
        long long sa = d / a.denom_, sb = d / b.denom_;
        TermMap t;
        for (const auto& [k, c] : a.terms_) t[k * sa] += c;
        for (const auto& [k, c] : b.terms_) t[k * sb] += c;
        return QSeries(d, std::move(t), std::min(a.order_, b.order_));
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        Rat order = std::min(a.order_ + b.val(), b.order_ + a.val());
        long long d = ll_lcm(a.denom_, b.denom_);
        long long sa = d / a.denom_, sb = d / b.denom_;
        Rat bound = order * rat(d);
        TermMap t;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                long long k = ka * sa + kb * sb;
                if (rat(k) >= bound) break; // b.terms_ sorted ascending
                t[k] += ca * cb;
            }
        }
        return QSeries(d, std::move(t), order);
    }

    friend QSeries operator*(const QSeries& a, const Rat& c) {
        if (c == 0) return zero(a.order_);
        TermMap t;
        for (const auto& [k, v] : a.terms_) t.emplace(k, v * c);
        return QSeries(a.denom_, std::move(t), a.order_);
    }
    friend QSeries operator*(const Rat& c, const QSeries& a) { return a * c; }

    // Multiplicative inverse through order O - 2*val. The leading term must
    // be determined: a series with no terms below its order has no invertible
    // leading coefficient.
    QSeries inverse() const {
        if (terms_.empty())
            throw ZeroLeadingTerm("cannot invert a series that is zero through its order " + rat_str(order_));
        const long long k0 = terms_.begin()->first;
        const Rat v = rat(k0, denom_);
        const Rat out_order = order_ - 2 * v;
        // Work on the dense grid 1/denom_ relative to the leading exponent:
        // a = c0 q^v (1 + u), coefficients a[i] at exponent v + i/denom_.
        Rat steps = (order_ - v) * rat(denom_);
        long long n = to_ll(rat_ceil(steps));
        if (n < 1) n = 1;
        std::vector<Rat> acoef(static_cast<std::size_t>(n), Rat(0));
        for (const auto& [k, c] : terms_) {
            long long i = k - k0;
            if (i < n) acoef[static_cast<std::size_t>(i)] = c;
        }
        std::vector<Rat> bcoef(static_cast<std::size_t>(n), Rat(0));
        bcoef[0] = 1 / acoef[0];
        for (long long j = 1; j < n; ++j) {
            Rat s(0);
            for (long long i = 1; i <= j; ++i)
                if (acoef[static_cast<std::size_t>(i)] != 0)
                    s += acoef[static_cast<std::size_t>(i)] * bcoef[static_cast<std::size_t>(j - i)];
            bcoef[static_cast<std::size_t>(j)] = -s / acoef[0];
        }
        TermMap t;
        Rat bound = out_order * rat(denom_);
        for (long long j = 0; j < n; ++j) {
            if (bcoef[static_cast<std::size_t>(j)] == 0) continue;
            long long k = -k0 + j;
            if (rat(k) < bound) t.emplace(k, bcoef[static_cast<std::size_t>(j)]);
        }
        return QSeries(denom_, std::move(t), out_order);
    }

    QSeries pow(unsigned long long e, const Rat& unit_order) const {
        if (e == 0) return constant(1, unit_order);
        QSeries r;
        bool have = false;
        QSeries base = *this;
        while (e > 0) {
            if (e & 1ULL) {
                r = have ? r * base : base;
                have = true;
            }
            if (e >>= 1ULL) base = base * base;
        }
        return r;
    }

    // Equality of the exact parts through the common validity order.
    bool agrees_with(const QSeries& other) const {
        Rat common = std::min(order_, other.order_);
        return truncated(common).identical(other.truncated(common));
    }

    // Exact structural equality (same grid content and order).
    bool identical(const QSeries& other) const {
        if (order_ != other.order_) return false;
        if (denom_ != other.denom_) return false;
        return terms_ == other.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0 + O(q^" + rat_str(order_) + ")";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += rat_str(c) + "*q^(" + rat_str(rat(k, denom_)) + ")";
        }
        s += " + O(q^" + rat_str(order_) + ")";
        return s;
    }

private:
    QSeries(long long denom, TermMap terms, const Rat& order)
        : denom_(denom), terms_(std::move(terms)), order_(order) {
        Rat bound = order_ * rat(denom_);
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0 || rat(it->first) >= bound)
                it = terms_.erase(it);
            else
                ++it;
        }
        normalize_denom();
    }

    void normalize_denom() {
        if (terms_.empty()) {
            denom_ = 1;
            return;
        }
        long long g = denom_;
        for (const auto& [k, c] : terms_) {
            g = ll_gcd(g, k < 0 ? -k : k);
            if (g == 1) return;
        }
        if (g <= 1) return;
        TermMap t;
        for (const auto& [k, c] : terms_) t.emplace(k / g, c);
        terms_ = std::move(t);
        denom_ /= g;
    }

    long long denom_;
    TermMap terms_;
    Rat order_;
};

// Throws DecompositionMismatch with a first-difference diagnostic unless the
// two series agree through their common validity order.
inline void require_agree(const QSeries& a, const QSeries& b, const std::string& context) {
    Rat common = std::min(a.order(), b.order());
    QSeries d = (a - b).truncated(common);
    if (!d.is_zero()) {
        auto e = *d.leading_exponent();
        throw DecompositionMismatch(context + ": series differ at q^" + rat_str(e) +
                                    " by " + rat_str(d.coeff(e)));
    }
}

} // namespace qjf

#endif

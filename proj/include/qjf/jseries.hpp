#ifndef QJF_JSERIES_HPP
#define QJF_JSERIES_HPP

// Two-variable truncated expansions  sum_r zeta^r * (QSeries in q).
//
// A JSeries is a finite map from zeta-exponents r (numerators over a
// z-denominator E) to QSeries components, plus a uniform q-validity order O:
// every component is exact below O and absent components have no terms below
// O. The zeta-support needs no independent truncation parameter: every
// generator produced here is theta-type, so the zeta-exponents reachable
// below a q-order form a finite set.
//
// The two elliptic half-shifts the trace-function machinery needs are
// implemented symbolically:
//   z -> z + 1/2    component at zeta^r picks up e^(pi i r); real only for
//                   integer r, so fractional grids are rejected (NonRealPhase).
//   z -> z + tau/2  component at zeta^r is multiplied by q^(r/2). The result
//                   order is O + min(0, r_min/2) over the stored components;
//                   this is the conservative rule for the discriminant-bounded
//                   series this library builds (callers overbuild the input
//                   when they need a specific output order).
//
// Values are immutable; all operations are pure.

#include <map>
#include <string>
#include <utility>

#include "qjf/errors.hpp"
#include "qjf/qseries.hpp"
#include "qjf/rational.hpp"

namespace qjf {

class JSeries {
public:
    using CompMap = std::map<long long, QSeries>; // zeta-exponent numerator over zdenom() -> series

    JSeries() : zdenom_(1), order_(0) {}

    static JSeries zero(const Rat& order) { return JSeries(1, CompMap{}, order); }

    static JSeries from_qseries(const QSeries& s) {
        CompMap m;
        m.emplace(0, s);
        return JSeries(1, std::move(m), s.order());
    }

    static JSeries monomial(const Rat& c, const Rat& qexp, const Rat& zexp, const Rat& order) {
        CompMap m;
        long long e = to_ll(zexp.get_den());
        m.emplace(to_ll(Rat(zexp * rat(e)).get_num()), QSeries::monomial(c, qexp, order));
        return JSeries(e, std::move(m), order);
    }

    // Components are truncated to the given order; empty ones are dropped.
    static JSeries make(long long zdenom, CompMap comps, const Rat& order) {
        return JSeries(zdenom, std::move(comps), order);
    }

    long long zdenom() const { return zdenom_; }
    const Rat& order() const { return order_; }
    const CompMap& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    Rat zexponent(long long key) const { return rat(key, zdenom_); }

    // The series multiplying zeta^r (zero if absent or off the grid).
    QSeries zcoeff(const Rat& r) const {
        Rat scaled = r * rat(zdenom_);
        if (!is_integer(scaled)) return QSeries::zero(order_);
        auto it = comps_.find(to_ll(scaled.get_num()));
        return it == comps_.end() ? QSeries::zero(order_) : it->second.truncated(order_);
    }

    // zeta -> 1.
    QSeries eval_z0() const {
        QSeries s = QSeries::zero(order_);
        for (const auto& [k, c] : comps_) s = s + c.truncated(order_);
        return s;
    }

    // Least q-exponent over all components (= order if there are none).
    Rat min_val() const {
        Rat v = order_;
        for (const auto& [k, c] : comps_) v = std::min(v, c.val());
        return v;
    }

    // z -> z + 1/2.
    JSeries shift_half() const {
        CompMap m;
        for (const auto& [k, c] : comps_) {
            if (k % zdenom_ != 0)
                throw NonRealPhase("z -> z+1/2 phase e^(pi i " + rat_str(rat(k, zdenom_)) +
                                   ") is not real");
            long long r = k / zdenom_;
            m.emplace(k, (r % 2 == 0) ? c : -c);
        }
        return JSeries(zdenom_, std::move(m), order_);
    }

    // z -> z + tau/2.
    JSeries shift_half_tau() const {
        Rat new_order = order_;
        if (!comps_.empty() && comps_.begin()->first < 0)
            new_order = order_ + rat(comps_.begin()->first, 2 * zdenom_);
        CompMap m;
        for (const auto& [k, c] : comps_) m.emplace(k, c.shifted(rat(k, 2 * zdenom_)));
        return JSeries(zdenom_, std::move(m), new_order);
    }

    // Multiply by c * q^qexp * zeta^zexp.
    JSeries mul_monomial(const Rat& c, const Rat& qexp, const Rat& zexp) const {
        long long e = ll_lcm(zdenom_, to_ll(zexp.get_den()));
        long long scale = e / zdenom_;
        long long off = to_ll(Rat(zexp * rat(e)).get_num());
        CompMap m;
        for (const auto& [k, s] : comps_) m.emplace(k * scale + off, (s * c).shifted(qexp));
        return JSeries(e, std::move(m), order_ + qexp);
    }

    friend JSeries operator-(const JSeries& a) {
        CompMap m;
        for (const auto& [k, c] : a.comps_) m.emplace(k, -c);
        return JSeries(a.zdenom_, std::move(m), a.order_);
    }

    friend JSeries operator+(const JSeries& a, const JSeries& b) {
        long long e = ll_lcm(a.zdenom_, b.zdenom_);
        long long sa = e / a.zdenom_, sb = e / b.zdenom_;
        Rat order = std::min(a.order_, b.order_);
        CompMap m;
        for (const auto& [k, c] : a.comps_) m.emplace(k * sa, c);
        for (const auto& [k, c] : b.comps_) {
            auto [it, inserted] = m.try_emplace(k * sb, c);
            if (!inserted) it->second = it->second + c;
        }
        return JSeries(e, std::move(m), order);
    }

    friend JSeries operator-(const JSeries& a, const JSeries& b) { return a + (-b); }

    friend JSeries operator*(const JSeries& a, const JSeries& b) {
        Rat order = std::min(a.order_ + b.min_val(), b.order_ + a.min_val());
        long long e = ll_lcm(a.zdenom_, b.zdenom_);
        long long sa = e / a.zdenom_, sb = e / b.zdenom_;
        CompMap m;
        for (const auto& [ka, ca] : a.comps_) {
            for (const auto& [kb, cb] : b.comps_) {
                QSeries p = (ca * cb).truncated(order);
                if (p.is_zero()) continue;
                long long k = ka * sa + kb * sb;
                auto [it, inserted] = m.try_emplace(k, p);
                if (!inserted) it->second = it->second + p;
            }
        }
        return JSeries(e, std::move(m), order);
    }

    friend JSeries operator*(const JSeries& a, const QSeries& s) { return a * from_qseries(s); }
    friend JSeries operator*(const JSeries& a, const Rat& c) {
        CompMap m;
        if (c != 0)
            for (const auto& [k, v] : a.comps_) m.emplace(k, v * c);
        return JSeries(a.zdenom_, std::move(m), a.order_);
    }
    friend JSeries operator*(const Rat& c, const JSeries& a) { return a * c; }

    JSeries pow(unsigned long long e, const Rat& unit_order) const {
        if (e == 0) return from_qseries(QSeries::constant(1, unit_order));
        JSeries r;
        bool have = false;
        JSeries base = *this;
        while (e > 0) {
            if (e & 1ULL) {
                r = have ? r * base : base;
                have = true;
            }
            if (e >>= 1ULL) base = base * base;
        }
        return r;
    }

    JSeries truncated(const Rat& new_order) const {
        Rat o = std::min(order_, new_order);
        CompMap m;
        for (const auto& [k, c] : comps_) m.emplace(k, c.truncated(o));
        return JSeries(zdenom_, std::move(m), o);
    }

    bool agrees_with(const JSeries& other) const {
        Rat common = std::min(order_, other.order_);
        JSeries d = (*this - other).truncated(common);
        return d.is_zero();
    }

private:
    JSeries(long long zdenom, CompMap comps, const Rat& order)
        : zdenom_(zdenom), comps_(std::move(comps)), order_(order) {
        // The uniform order cannot exceed what any component actually knows.
        for (const auto& [k, c] : comps_)
            if (c.order() < order_) order_ = c.order();
        for (auto it = comps_.begin(); it != comps_.end();) {
            if (it->second.truncated(order_).is_zero())
                it = comps_.erase(it);
            else
                ++it;
        }
        normalize_zdenom();
    }

    void normalize_zdenom() {
        if (comps_.empty()) {
            zdenom_ = 1;
            return;
        }
        long long g = zdenom_;
        for (const auto& [k, c] : comps_) {
            g = ll_gcd(g, k < 0 ? -k : k);
            if (g == 1) return;
        }
        if (g <= 1) return;
        CompMap m;
        for (auto& [k, c] : comps_) m.emplace(k / g, std::move(c));
        comps_ = std::move(m);
        zdenom_ /= g;
    }

    long long zdenom_;
    CompMap comps_;
    Rat order_;
};

inline void require_agree(const JSeries& a, const JSeries& b, const std::string& context) {
    Rat common = std::min(a.order(), b.order());
    JSeries d = (a - b).truncated(common);
    if (!d.is_zero()) {
        const auto& [k, c] = *d.components().begin();
        throw DecompositionMismatch(context + ": components differ at zeta^" +
                                    rat_str(d.zexponent(k)) + ", " + c.str());
    }
}

} // namespace qjf

#endif

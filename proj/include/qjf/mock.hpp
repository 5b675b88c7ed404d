#ifndef QJF_MOCK_HPP
#define QJF_MOCK_HPP

// The intrinsic mock modular forms S_0, S_1 and the product theta_1^2 mu.
//
// S_l is computed by two formulas that share no code beyond QSeries:
//
//   s_series:        S_l = sum_{s = l mod 2} sum_{r >= s} (-1)^r q^(P(r,s)),
//                    P(r,s) = (r + 1/2)^2/2 - s^2/4
//   s_series_oracle: S_l = (sum_{m,n >= 0} - sum_{m,n < 0}) (-1)^(m+l) q^(Q(m,n)),
//                    Q(m,n) = (m + 2n - l + 1/2)^2/2 - (n - l/2)^2
//
// and their agreement is one of the acceptance oracles. Only l mod 2
// matters for the value; the oracle keeps the literal l so the two routes
// stay independent.
//
// theta_1^2 mu is assembled from the bilinear expansion
//
//   theta_1^2 mu = [ (sum_{m,n>=0} - sum_{m,n<0}) (-1)^n q^(n(n+2m+1)/2) zeta^(m+n) ]
//                * [ sum_k (-1)^k q^((k+1/2)^2/2) zeta^(-k) ]
//
// whose first factor has one row of unbounded zeta-support (n = 0, exponent
// 0, all m >= 0); that row is multiplied out against the k-sum in closed
// form, see theta1sq_mu below.

#include "qjf/jseries.hpp"
#include "qjf/qseries.hpp"
#include "qjf/rational.hpp"

namespace qjf {

// Holomorphic parts of the vector-valued mock form: s0 on the 1/8 + Z grid,
// s1 on the -1/8 + Z grid with leading term -2 q^(7/8).
struct SPair {
    QSeries s0;
    QSeries s1;
};

// Nested double sum. Terms with s <= r < -s cancel in pairs under
// r -> -1-r, so the survivors have r >= |s| and the s and -s halves agree;
// they are enumerated once with multiplicity two (one for s = 0). A
// surviving term satisfies
//   P(r,s) >= P(|s|,s) = s^2/4 + |s|/2 + 1/8,
// which bounds |s|, and for fixed s the exponent grows in r, which bounds r.
inline QSeries s_series(long long ell, const Rat& order) {
    if (order <= 0) throw Error("s_series: order must be positive");
    long long parity = ((ell % 2) + 2) % 2;
    QSeries::TermMap t; // grid 1/8
    for (long long s = parity;; s += 2) {
        if (rat(2 * s * s + 4 * s + 1, 8) >= order) break; // s^2/4 + s/2 + 1/8
        Rat mult = s == 0 ? Rat(1) : Rat(2);
        for (long long r = s;; ++r) {
            Rat p = rat((2 * r + 1) * (2 * r + 1) - 2 * s * s, 8); // (r+1/2)^2/2 - s^2/4
            if (p >= order) break;
            long long key = (2 * r + 1) * (2 * r + 1) - 2 * s * s; // 8 * P
            t[key] += (r % 2 == 0 ? mult : -mult);
        }
    }
    return QSeries::make(8, std::move(t), order);
}

// Quadrant double sum, independent of s_series. Within each quadrant, with
// u = n - l/2, the exponent satisfies Q >= u^2 + |u| + 1/8 once u has the
// quadrant's sign (for m,n >= 0 and u >= 0 the inner square is at least
// (2u + 1/2)^2/2; for m,n < 0 it is at least (2|u| + 1/2)^2/2), which bounds
// n; for the finitely many remaining n the exponent is a shifted square in
// m, which bounds m exactly via Q < order <=> (m + 2n - l + 1/2)^2 <
// 2(order + u^2).
inline QSeries s_series_oracle(long long ell, const Rat& order) {
    if (order <= 0) throw Error("s_series_oracle: order must be positive");
    QSeries::TermMap t; // grid 1/8
    auto add_terms = [&](long long n, bool negative_quadrant) {
        // 8*Q(m,n) = (2(m + 2n - ell) + 1)^2 - 2 (2n - ell)^2
        long long w = 2 * n - ell;
        Rat bound = 2 * order + rat(w * w, 2); // (m + w + 1/2)^2 < bound
        long long lo, hi;
        if (!detail::exact_range(rat(2 * w + 1, 2), bound, lo, hi)) return;
        if (negative_quadrant)
            hi = std::min(hi, static_cast<long long>(-1));
        else
            lo = std::max(lo, static_cast<long long>(0));
        for (long long m = lo; m <= hi; ++m) {
            long long a = 2 * (m + w) + 1;
            long long key = a * a - 2 * w * w; // 8*Q
            int sign = ((m + ell) % 2 + 2) % 2 == 0 ? 1 : -1;
            if (negative_quadrant) sign = -sign;
            t[key] += sign;
        }
    };
    // m, n >= 0: stop once u = n - l/2 >= 0 and u^2 + u + 1/8 >= order.
    for (long long n = 0;; ++n) {
        long long w = 2 * n - ell; // 2u
        if (w >= 0 && rat(2 * w * w + 4 * w + 1, 8) >= order) break;
        add_terms(n, false);
    }
    // m, n < 0: stop once u <= 0 and u^2 + |u| + 1/8 >= order.
    for (long long n = -1;; --n) {
        long long w = ell - 2 * n; // -2u
        if (w >= 0 && rat(2 * w * w + 4 * w + 1, 8) >= order) break;
        add_terms(n, true);
    }
    QSeries res = QSeries::make(8, std::move(t), order);
    return res;
}

inline SPair make_spair(const Rat& order) { return {s_series(0, order), s_series(1, order)}; }

// theta_1(z;tau)^2 mu(z;tau) as an exact JSeries on the integer zeta grid.
inline JSeries theta1sq_mu(const Rat& order) {
    if (order <= 0) throw Error("theta1sq_mu: order must be positive");

    // k-sum factor: i zeta^(1/2) theta_1 = sum_k (-1)^k q^((k+1/2)^2/2) zeta^(-k).
    JSeries::CompMap kf;
    for (long long k = 0;; ++k) { // (k+1/2)^2/2 < order
        if (rat((2 * k + 1) * (2 * k + 1), 8) >= order) break;
        Rat e = rat((2 * k + 1) * (2 * k + 1), 8);
        Rat c(k % 2 == 0 ? 1 : -1);
        kf.emplace(-k, QSeries::monomial(c, e, order));
        kf.emplace(k + 1, QSeries::monomial(-c, e, order)); // k' = -k-1 has the same exponent
    }
    JSeries ksum = JSeries::make(1, std::move(kf), order);

    // Bounded rows of the quadrant factor: exponent n(n+2m+1)/2.
    //   n >= 1, m >= 0:  exponent >= max(n(n+1)/2, m+1), both bounded by order;
    //   n <= -1, m <= -1: with n = -n', m = -m' the exponent is
    //                     n'(n'+2m'-1)/2 >= max(n'(n'+1)/2 - n', n'm'), bounded.
    // n(n+2m+1) is always even, so these rows live on the integer q-grid.
    std::map<long long, QSeries::TermMap> rows; // zeta exponent -> terms (grid 1)
    for (long long n = 1; rat(n * (n + 1), 2) < order; ++n)
        for (long long m = 0;; ++m) {
            long long e2 = n * (n + 2 * m + 1) / 2;
            if (rat(e2) >= order) break;
            rows[m + n][e2] += (n % 2 == 0 ? 1 : -1);
        }
    for (long long np = 1; rat(np * (np - 1), 2) < order; ++np)
        for (long long mp = 1;; ++mp) {
            long long e2 = np * (np + 2 * mp - 1) / 2;
            if (rat(e2) >= order) break;
            int sign = (np % 2 == 0 ? 1 : -1);       // (-1)^n with n = -np
            rows[-(mp + np)][e2] += -sign;           // minus the negative quadrant
        }
    JSeries::CompMap bc;
    for (auto& [z, tm] : rows) {
        QSeries comp = QSeries::make(1, std::move(tm), order);
        if (!comp.is_zero()) bc.emplace(z, comp);
    }
    JSeries bounded = JSeries::make(1, std::move(bc), order);

    JSeries total = bounded * ksum;

    // n = 0 row times the k-sum, in closed form: the row contributes
    // sum_{m >= 0} zeta^m exactly, and
    //   (sum_{m>=0} zeta^m) * ksum |_{ zeta^rho } = sum_{k >= -rho} (-1)^k q^((k+1/2)^2/2)
    // which telescopes under k -> -1-k to sum_{k >= |rho|}.
    JSeries::CompMap row0;
    for (long long rho = 0;; ++rho) {
        if (rat((2 * rho + 1) * (2 * rho + 1), 8) >= order) break;
        QSeries::TermMap tm;
        for (long long k = rho;; ++k) {
            Rat e = rat((2 * k + 1) * (2 * k + 1), 8);
            if (e >= order) break;
            tm[(2 * k + 1) * (2 * k + 1)] += (k % 2 == 0 ? 1 : -1);
        }
        QSeries comp = QSeries::make(8, tm, order);
        if (!comp.is_zero()) {
            row0.emplace(rho, comp);
            if (rho > 0) row0.emplace(-rho, comp);
        }
    }
    total = total + JSeries::make(1, std::move(row0), order);
    return total.truncated(order);
}

} // namespace qjf

#endif

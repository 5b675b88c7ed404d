#ifndef QJF_THETA_HPP
#define QJF_THETA_HPP

// Generators for theta series and eta powers as exact truncations.
//
// The basic object is the Jacobi theta series with characteristic
//
//   vartheta[a;b](z;tau) = sum_n e^(2 pi i (n+a) b) q^((n+a)^2/2) zeta^(n+a)
//
// generated here with integer scalings of both arguments: the pair
// (zscale, tauscale) produces vartheta[a;b](zscale*z; tauscale*tau). Scaled
// arguments are always handled by generator parameters, never by
// substitution into an existing series.
//
// Supported characteristics keep every stored coefficient rational: b must
// be a half-integer, so the n-dependent factor e^(2 pi i n b) is a sign,
// and the constant factor e^(2 pi i a b) is carried separately as an exact
// root of unity ("turns" = a*b mod 1). A PhasedJSeries is such a pair; it
// collapses to a plain real JSeries when the phase is +-1. Assembled
// quantities (theta_1 squared, the sixth powers of the rank-6 coset
// factors) always come out real.
//
// Lattice theta series are enumerated completely below the cutoff with
// exact rational pivot bounds, so no lattice vector can be missed.

#include <string>
#include <vector>

#include "qjf/errors.hpp"
#include "qjf/jseries.hpp"
#include "qjf/qseries.hpp"
#include "qjf/rational.hpp"

namespace qjf {

struct ThetaChar {
    Rat a;
    Rat b;
    long long zscale = 1;
    long long tauscale = 1;
};

// value = e^(2 pi i turns) * series, with turns rational in [0,1).
struct PhasedJSeries {
    Rat turns;
    JSeries series;

    PhasedJSeries mul(const PhasedJSeries& other) const {
        Rat t = turns + other.turns;
        t -= rat_floor(t);
        return {t, series * other.series};
    }

    PhasedJSeries pow(unsigned long long e, const Rat& unit_order) const {
        PhasedJSeries r{Rat(0), JSeries::from_qseries(QSeries::constant(1, unit_order))};
        PhasedJSeries base = *this;
        bool have = false;
        while (e > 0) {
            if (e & 1ULL) {
                r = have ? r.mul(base) : base;
                have = true;
            }
            if (e >>= 1ULL) base = base.mul(base);
        }
        return r;
    }

    // Collapse the phase into the series; only +-1 phases are real.
    JSeries real() const {
        if (turns == 0) return series;
        if (turns == rat(1, 2)) return -series;
        throw UnsupportedPhase("phase e^(2 pi i " + rat_str(turns) + ") is not real");
    }
};

// vartheta[a;b](zscale*z; tauscale*tau) with the constant phase kept exact.
// Requires 2b integral; other b produce n-dependent complex phases that has
// no real representation on the rational-coefficient grid.
inline PhasedJSeries theta_char_phased(const ThetaChar& ch, const Rat& order) {
    Rat twob = 2 * ch.b;
    if (!is_integer(twob))
        throw UnsupportedPhase("characteristic b=" + rat_str(ch.b) +
                               ": e^(2 pi i n b) is not a sign");
    bool alternating = (to_ll(twob.get_num()) % 2) != 0;
    Rat turns = ch.a * ch.b;
    turns -= rat_floor(turns);

    // q-exponent tauscale*(n+a)^2/2 < order.
    long long lo, hi;
    JSeries::CompMap comps;
    Rat two_order = 2 * order / rat(ch.tauscale);
    if (detail::exact_range(ch.a, two_order, lo, hi)) {
        // Components are built per zeta-exponent; the z-grid is (n+a)*zscale.
        long long zden = to_ll(ch.a.get_den());
        for (long long n = lo; n <= hi; ++n) {
            Rat na = rat(n) + ch.a;
            Rat qe = rat(ch.tauscale) * na * na / 2;
            Rat c = (alternating && (((n % 2) + 2) % 2 == 1)) ? Rat(-1) : Rat(1);
            long long zkey = to_ll(Rat(na * rat(ch.zscale * zden)).get_num());
            auto [it, inserted] = comps.try_emplace(zkey, QSeries::monomial(c, qe, order));
            if (!inserted) it->second = it->second + QSeries::monomial(c, qe, order);
        }
        return {turns, JSeries::make(zden, std::move(comps), order)};
    }
    return {turns, JSeries::zero(order)};
}

// Real-phase variant (phase +-1 folded into the coefficients).
inline JSeries theta_char(const ThetaChar& ch, const Rat& order) {
    return theta_char_phased(ch, order).real();
}

// theta_j(zscale*z; tauscale*tau) for j in {2,3,4}; theta_1 itself carries
// the phase -i and is only ever used squared (see theta1_squared).
inline JSeries theta_j(int j, const Rat& order, long long zscale = 1, long long tauscale = 1) {
    switch (j) {
        case 2: return theta_char({rat(1, 2), Rat(0), zscale, tauscale}, order);
        case 3: return theta_char({Rat(0), Rat(0), zscale, tauscale}, order);
        case 4: return theta_char({Rat(0), rat(1, 2), zscale, tauscale}, order);
        case 1:
            throw UnsupportedPhase("theta_1 = -vartheta[1/2;1/2] has phase -i; "
                                   "use theta_char_phased or theta1_squared");
        default: throw Error("theta_j: j must be 1..4");
    }
}

// theta_1(zscale*z; tauscale*tau)^2, real by construction.
inline JSeries theta1_squared(const Rat& order, long long zscale = 1, long long tauscale = 1) {
    PhasedJSeries t1 = theta_char_phased({rat(1, 2), rat(1, 2), zscale, tauscale}, order);
    return t1.pow(2, order).real();
}

// Theta constant theta_j(tauscale*tau): z = 0 evaluation of the generator.
inline QSeries theta_const(int j, long long tauscale, const Rat& order) {
    return theta_j(j, order, 1, tauscale).eval_z0();
}

// theta_{m,mu}(z;tau) = sum_{l = mu mod 2m} q^(l^2/4m) zeta^l, indexed by
// twom = 2m so that half-integral index works too.
inline JSeries theta_mmu2(long long twom, long long mu, const Rat& order) {
    if (twom <= 0) throw Error("theta_mmu: index must be positive");
    JSeries::CompMap comps;
    // l = mu + 2m j, l^2/(4m) < order  <=>  (j + mu/2m)^2 < 2 order / 2m.
    long long lo, hi;
    if (detail::exact_range(rat(mu, twom), 2 * order / rat(twom), lo, hi)) {
        for (long long j = lo; j <= hi; ++j) {
            long long l = mu + twom * j;
            comps.emplace(l, QSeries::monomial(Rat(1), rat(l * l, 2 * twom), order));
        }
    }
    return JSeries::make(1, std::move(comps), order);
}

inline JSeries theta_mmu(long long m, long long mu, const Rat& order) {
    return theta_mmu2(2 * m, mu, order);
}

// eta(tauscale*tau)^k. Positive powers multiply out the pentagonal series;
// negative powers invert, with the generation order enlarged so the result
// is still valid through `order`.
inline QSeries eta_power_scaled(long long k, long long tauscale, const Rat& order) {
    if (k == 0) return QSeries::constant(1, order);
    long long ak = k < 0 ? -k : k;
    // Inversion costs 2*val = 2*ak*ts/24 of validity and the product chain
    // gains (ak-1)*ts/24 back, so this base order covers either sign of k.
    Rat gen_order = order + rat((ak + 1) * tauscale, 12);
    // Pentagonal exponents ts*(1/24 + n(3n+1)/2) are monotone in |n| on each
    // side of zero, so the two loops below cannot stop early.
    QSeries::TermMap t;
    auto add = [&](long long n) -> bool {
        long long pent24 = tauscale * (1 + 12 * n * (3 * n + 1));
        if (rat(pent24, 24) >= gen_order) return false;
        t[pent24] += (((n % 2) + 2) % 2 == 0) ? 1 : -1;
        return true;
    };
    for (long long n = 0; add(n); ++n) {}
    for (long long n = -1; add(n); --n) {}
    QSeries eta = QSeries::make(24, std::move(t), gen_order);
    QSeries p = eta.pow(static_cast<unsigned long long>(ak), gen_order);
    return k > 0 ? p : p.inverse();
}

inline QSeries eta_power(long long k, const Rat& order) { return eta_power_scaled(k, 1, order); }

// Positive-definite lattice data: Q(alpha) = (1/2) alpha^T gram alpha on the
// coset (Z^n + shift), paired against the vector h via B(alpha, h).
struct LatticeSpec {
    std::vector<std::vector<Rat>> gram;
    std::vector<Rat> shift;
    std::vector<Rat> pairing;
};

namespace detail {

struct QFormLadder {
    // Q(v) = sum_i piv[i] * (v_i + sum_{j>i} coef[i][j] v_j)^2
    std::vector<Rat> piv;
    std::vector<std::vector<Rat>> coef;
};

// Symmetric Gaussian elimination of (1/2) gram into a sum of weighted
// squares. All pivots must be positive; this is exactly positivity of the
// leading principal minors.
inline QFormLadder decompose_form(const std::vector<std::vector<Rat>>& gram) {
    std::size_t n = gram.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n) throw Error("lattice_theta: gram matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (gram[i][j] != gram[j][i]) throw Error("lattice_theta: gram matrix is not symmetric");
            m[i][j] = gram[i][j] / 2;
        }
    }
    QFormLadder lad;
    lad.piv.resize(n);
    lad.coef.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] <= 0)
            throw NotPositiveDefinite("pivot " + std::to_string(i) + " is " + rat_str(m[i][i]));
        lad.piv[i] = m[i][i];
        for (std::size_t j = i + 1; j < n; ++j) lad.coef[i][j] = m[i][j] / m[i][i];
        for (std::size_t r = i + 1; r < n; ++r)
            for (std::size_t c = i + 1; c < n; ++c) m[r][c] -= m[i][r] * m[i][c] / m[i][i];
    }
    return lad;
}

} // namespace detail

// theta_L^h(z;tau) = sum over alpha in Z^n of q^(Q(alpha+shift)) zeta^(B(alpha+shift, h)),
// complete for every vector with Q < order.
inline JSeries lattice_theta(const LatticeSpec& spec, const Rat& order) {
    const std::size_t n = spec.gram.size();
    if (spec.shift.size() != n || spec.pairing.size() != n)
        throw Error("lattice_theta: dimension mismatch");
    detail::QFormLadder lad = detail::decompose_form(spec.gram);

    // w = gram * pairing, so B(v, h) = v . w
    std::vector<Rat> w(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i] += spec.gram[i][j] * spec.pairing[j];

    std::map<Rat, std::map<Rat, Rat>> acc; // zexp -> qexp -> coeff
    std::vector<Rat> v(n, Rat(0));

    // Enumerate from the last coordinate inward; `budget` stays positive, so
    // every completed vector has Q < order and none below the cutoff is missed.
    auto recurse = [&](auto&& self, std::size_t level, const Rat& budget, const Rat& zdot) -> void {
        if (level == 0) {
            acc[zdot][order - budget] += 1;
            return;
        }
        std::size_t i = level - 1;
        Rat c(0);
        for (std::size_t j = i + 1; j < n; ++j) c += lad.coef[i][j] * v[j];
        Rat t = spec.shift[i] + c;
        long long lo, hi;
        if (!detail::exact_range(t, budget / lad.piv[i], lo, hi)) return;
        for (long long x = lo; x <= hi; ++x) {
            Rat vi = rat(x) + spec.shift[i];
            Rat d = rat(x) + t;
            v[i] = vi;
            self(self, i, budget - lad.piv[i] * d * d, zdot + vi * w[i]);
        }
        v[i] = 0;
    };
    recurse(recurse, n, order, Rat(0));

    // Assemble on common grids.
    long long zden = 1;
    for (const auto& [ze, qm] : acc) zden = ll_lcm(zden, to_ll(ze.get_den()));
    JSeries::CompMap comps;
    for (const auto& [ze, qm] : acc) {
        long long qden = 1;
        for (const auto& [qe, c] : qm) qden = ll_lcm(qden, to_ll(qe.get_den()));
        QSeries::TermMap t;
        for (const auto& [qe, c] : qm)
            if (c != 0) t.emplace(to_ll(Rat(qe * rat(qden)).get_num()), c);
        QSeries comp = QSeries::make(qden, std::move(t), order);
        if (!comp.is_zero()) comps.emplace(to_ll(Rat(ze * rat(zden)).get_num()), comp);
    }
    return JSeries::make(zden, std::move(comps), order);
}

} // namespace qjf

#endif

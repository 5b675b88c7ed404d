#ifndef QJF_DECOMP_HPP
#define QJF_DECOMP_HPP

// Theta decomposition of weight-0 index-1 weak Jacobi forms and the N=4
// character coefficients.
//
// For phi = sum c(n,r) q^n zeta^r the two theta coefficient routes are
//
//   theta_decompose:  f_r(tau) = sum_m c((m+r^2)/4, r) q^(m/4),  r = 0,1
//   f_from_chi_r:     f_0 = (chi + R)/(2 theta_3(2tau)),
//                     f_1 = (chi - R)/(2 theta_2(2tau)),
//                     chi = phi(0;tau), R = phi(1/2;tau)
//
// and the pipeline insists they agree exactly: a disagreement means the
// input is not a weight-0 index-1 weak Jacobi form, and the run fails loudly
// rather than preferring one route. The coefficient mock form is then
// F = f_0 S_1 - f_1 S_0, with B_n = [q^(n-1/8)] F and A_0 = chi + 2 B_0.

#include <string>
#include <utility>
#include <vector>

#include "qjf/errors.hpp"
#include "qjf/jseries.hpp"
#include "qjf/mock.hpp"
#include "qjf/qseries.hpp"
#include "qjf/theta.hpp"

namespace qjf {

struct JacobiFormInput {
    JSeries form;
    std::string label;
};

// c(n,r) of an index-m form may depend only on 4mn - r^2 and r mod 2m.
// Checked over everything stored: each class value must be reproduced at
// every grid point of that class below the truncation order (absent = 0).
// `offset` is c/24 for trace functions whose exponents are n - c/24.
inline void check_discriminant_symmetry(const JSeries& a, long long twom, const Rat& offset,
                                        const std::string& label) {
    if (a.zdenom() != 1)
        throw SymmetryViolation(label + ": zeta exponents are not integers");
    for (const auto& [r, comp] : a.components()) {
        long long r0 = ((r % twom) + twom) % twom;
        for (const auto& [key, c] : comp.terms()) {
            Rat n = comp.exponent(key) + offset;
            Rat disc = 2 * rat(twom) * n - rat(r * r); // 4mn - r^2
            // every r' = r0 + 2m j with exponent below the order:
            // (disc + r'^2)/4m - offset < order  <=>  (j + r0/2m)^2 < bound
            Rat bound = (2 * rat(twom) * (a.order() + offset) - disc) / rat(twom * twom);
            long long lo, hi;
            if (!detail::exact_range(rat(r0, twom), bound, lo, hi)) continue;
            for (long long j = lo; j <= hi; ++j) {
                long long rp = r0 + twom * j;
                Rat e = (disc + rat(rp * rp)) / (2 * rat(twom)) - offset;
                Rat got = a.zcoeff(rat(rp)).coeff(e);
                if (got != c)
                    throw SymmetryViolation(label + ": c at (q^" + rat_str(e) + ", zeta^" +
                                            std::to_string(rp) + ") is " + rat_str(got) +
                                            " but the discriminant class of zeta^" +
                                            std::to_string(r) + " needs " + rat_str(c));
            }
        }
    }
}

inline void validate_jacobi_input(const JacobiFormInput& in) {
    check_discriminant_symmetry(in.form, 2, Rat(0), in.label);
}

// chi = phi(0;tau); the weight-0 hypothesis makes it a constant.
inline Rat chi_of(const JSeries& phi) {
    QSeries v = phi.eval_z0();
    if (v.order() <= 0) throw Error("chi_of: order too small to see the constant term");
    Rat c = v.coeff(Rat(0));
    QSeries rest = v - QSeries::constant(c, v.order());
    if (!rest.is_zero()) {
        Rat e = *rest.leading_exponent();
        throw NotConstant("phi(0;tau) has a nonconstant term " + rat_str(rest.coeff(e)) + " q^" +
                          rat_str(e));
    }
    return c;
}

// R(tau) = phi(1/2;tau).
inline QSeries r_shift_of(const JSeries& phi) { return phi.shift_half().eval_z0(); }

// Coefficient-extraction route. The reconstruction against the full input is
// always asserted; it fails iff the input is not index 1 on the stored range.
inline std::pair<QSeries, QSeries> theta_decompose(const JacobiFormInput& in) {
    const JSeries& phi = in.form;
    if (phi.zdenom() != 1)
        throw DecompositionMismatch(in.label + ": zeta exponents are not integers");
    QSeries f0 = phi.zcoeff(Rat(0));
    QSeries f1 = phi.zcoeff(Rat(1)).shifted(rat(-1, 4));
    Rat O = phi.order();
    JSeries recon = theta_mmu(1, 0, O) * f0 + theta_mmu(1, 1, O + rat(1, 4)) * f1;
    require_agree(recon, phi, in.label + ": theta decomposition does not reproduce the form");
    return {f0, f1};
}

// Division route, from the two specializations. The chi overload taking a
// series exists for route-consistency exercises; normal use passes the
// constant.
inline std::pair<QSeries, QSeries> f_from_chi_r(const QSeries& chi, const QSeries& r,
                                                const Rat& order) {
    Rat gen = order + 1;
    QSeries th3 = theta_const(3, 2, gen);
    QSeries th2 = theta_const(2, 2, gen);
    QSeries f0 = (chi + r) * (rat(2) * th3).inverse();
    QSeries f1 = (chi - r) * (rat(2) * th2).inverse();
    return {f0.truncated(order), f1.truncated(order - rat(1, 4))};
}

inline std::pair<QSeries, QSeries> f_from_chi_r(const Rat& chi, const QSeries& r, const Rat& order) {
    return f_from_chi_r(QSeries::constant(chi, r.order()), r, order);
}

// F = f_0 S_1 - f_1 S_0 (the determinant of [[f_0, f_1], [S_0, S_1]]).
inline QSeries f_mock(const QSeries& f0, const QSeries& f1, const SPair& s) {
    return f0 * s.s1 - f1 * s.s0;
}

// B_n = [q^(n - 1/8)] F for n = 0..nmax, A_0 = chi + 2 B_0. F must live on
// the -1/8 + Z grid with no exponent below -1/8.
inline std::pair<Rat, std::vector<Rat>> n4_coefficients(const Rat& chi, const QSeries& f,
                                                        long long nmax = -1) {
    for (const auto& [k, c] : f.terms()) {
        Rat e = f.exponent(k);
        if (!is_integer(e + rat(1, 8)) || e < rat(-1, 8))
            throw GridMismatch("F exponent " + rat_str(e) + " is not in -1/8 + Z>=0");
    }
    if (nmax < 0) nmax = to_ll(rat_floor(f.order())) - 1;
    if (nmax < 0) nmax = 0;
    std::vector<Rat> b;
    for (long long n = 0; n <= nmax; ++n) b.push_back(f.coeff(rat(n) - rat(1, 8)));
    Rat a0 = chi + 2 * b[0];
    return {a0, b};
}

// eta^3 phi = chi theta_1^2 mu + F theta_1^2, solved for phi. This is the
// constructive content of the character expansion: the result reproduces the
// original form through the attainable order.
inline JSeries reconstruct_phi(const Rat& chi, const QSeries& f, const Rat& order) {
    Rat gen = order + rat(1, 2);
    JSeries t1m = theta1sq_mu(gen);
    JSeries t1sq = theta1_squared(gen);
    QSeries eta3inv = eta_power(-3, gen);
    JSeries num = t1m * chi + t1sq * f;
    return (num * eta3inv).truncated(order);
}

struct DecompResult {
    Rat chi;
    QSeries r_shift;
    QSeries f0;
    QSeries f1;
    QSeries fmock;
    Rat a0;
    std::vector<Rat> b;
    std::string label;
};

// Full pipeline with both routes compared and the DecompResult invariants
// asserted.
inline DecompResult decompose_full(const JacobiFormInput& in, long long nmax = -1) {
    auto [f0, f1] = theta_decompose(in);
    Rat chi = chi_of(in.form);
    QSeries r = r_shift_of(in.form);
    auto [g0, g1] = f_from_chi_r(chi, r, in.form.order());
    if (!f0.agrees_with(g0) || !f1.agrees_with(g1))
        throw DecompositionMismatch(in.label +
                                    ": extraction and division routes disagree; the input is not "
                                    "a weight-0 index-1 weak Jacobi form");
    Rat O = in.form.order();
    SPair s = make_spair(O + 1);
    QSeries fm = f_mock(f0, f1, s);
    auto [a0, b] = n4_coefficients(chi, fm, nmax);

    // chi and R against the theta constants (the two linear relations).
    QSeries th3 = theta_const(3, 2, O + 1);
    QSeries th2 = theta_const(2, 2, O + 1);
    require_agree(f0 * th3 + f1 * th2, QSeries::constant(chi, O), in.label + ": f0 th3 + f1 th2 = chi");
    require_agree(f0 * th3 - f1 * th2, r, in.label + ": f0 th3 - f1 th2 = R");

    return {chi, r, f0, f1, fm, a0, b, in.label};
}

} // namespace qjf

#endif

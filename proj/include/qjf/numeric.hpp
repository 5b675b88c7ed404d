#ifndef QJF_NUMERIC_HPP
#define QJF_NUMERIC_HPP

// Floating-point evaluation and the non-holomorphic verification suite.
//
// Everything here is IEEE binary64. Exact series are evaluated by summing
// c q^e with q = e^(2 pi i tau); the reported truncation estimate is the
// magnitude of the last (highest-exponent) included term, not a certified
// bound. Checks evaluate every truncated sum at two radii and refuse to
// report a residual when the two disagree beyond the tolerance.
//
// The indefinite theta vartheta^l is the rank-2 sgn/beta-weighted sum for
//   Q(nu) = nu1^2/2 + 2 nu1 nu2 + nu2^2,   A = [[1,2],[2,2]]
// over nu in a(l) + Z^2, a(l) = (1/2, -l/2), b = (1/2, 0), c1 = (-1,1),
// c2 = (-2,1), with weight
//   rho(nu) = sgn B(nu,c1) (1 - beta(2 B(nu,c1)^2 y))
//           - sgn B(nu,c2) (1 - beta(B(nu,c2)^2 y)),
// sgn(0) = 0. Its holomorphic part is S_l -- the sign part of rho sums to
// 2i S_l(tau) for both residues -- and the completion terms are
// -theta_2(2tau) C and +theta_3(2tau) C, so vartheta^l = 2i Shat_l.
//
// Closed product formulas evaluate the two example genera directly at any
// point of the upper half-plane; modular checks use them on the gamma.tau
// side, where the q-expansion may sit far outside its useful range.

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "qjf/decomp.hpp"
#include "qjf/errors.hpp"
#include "qjf/jseries.hpp"
#include "qjf/mock.hpp"
#include "qjf/qseries.hpp"
#include "qjf/rational.hpp"
#include "qjf/svoa.hpp"
#include "qjf/theta.hpp"

namespace qjf {

using cd = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct NumericContext {
    cd tau;
    cd z = 0.0;
    int radius = 12;
    double tol = 1e-8;
};

inline void require_upper_half(const cd& tau, double min_im = 0.2) {
    if (!(tau.imag() >= min_im))
        throw Error("Im(tau) = " + std::to_string(tau.imag()) + " is below the supported " +
                    std::to_string(min_im));
}

struct EvalResult {
    cd value;
    double last_term; // |largest-exponent included term|
};

inline cd q_pow(const cd& tau, double e) { return std::exp(cd(0.0, 2.0 * kPi) * tau * e); }

inline EvalResult eval_qseries(const QSeries& s, const cd& tau) {
    EvalResult r{0.0, 0.0};
    for (const auto& [k, c] : s.terms()) {
        cd term = to_double(c) * q_pow(tau, to_double(s.exponent(k)));
        r.value += term;
        r.last_term = std::abs(term); // terms iterate by increasing exponent
    }
    return r;
}

inline EvalResult eval_jseries(const JSeries& a, const cd& z, const cd& tau) {
    EvalResult r{0.0, 0.0};
    for (const auto& [k, comp] : a.components()) {
        EvalResult c = eval_qseries(comp, tau);
        cd zf = std::exp(cd(0.0, 2.0 * kPi) * z * to_double(a.zexponent(k)));
        r.value += zf * c.value;
        r.last_term = std::max(r.last_term, std::abs(zf) * c.last_term);
    }
    return r;
}

// beta(x) = int_x^inf u^(-1/2) e^(-pi u) du = erfc(sqrt(pi x)).
inline double beta_fn(double x) {
    if (x < 0) throw Error("beta_fn: negative argument");
    return std::erfc(std::sqrt(kPi * x));
}

inline int sgn_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// C(tau) = 1/2 sum_m (-1)^m sgn(m+1/2) beta(2 (m+1/2)^2 y) q^(-(m+1/2)^2 / 2).
// The beta factor decays like e^(-2 pi y h^2) against the q-power's growth
// e^(pi y h^2); the magnitude is assembled in log space so that neither
// factor under- or overflows on its own.
inline EvalResult c_completion(const cd& tau, int radius) {
    double x = tau.real(), y = tau.imag();
    if (!(y > 0)) throw Error("c_completion: tau not in the upper half-plane");
    EvalResult r{0.0, 0.0};
    for (long long m = -radius - 1; m <= radius; ++m) {
        double h = m + 0.5;
        double bf = beta_fn(2.0 * h * h * y);
        if (bf == 0.0) continue;
        double logmag = std::log(bf) + kPi * y * h * h;
        if (logmag < -745.0) continue;
        double sign = (((m % 2) + 2) % 2 == 0 ? 1.0 : -1.0) * sgn_of(h);
        cd term = 0.5 * sign * std::exp(logmag) * std::exp(cd(0.0, -kPi * h * h * x));
        r.value += term;
        r.last_term = std::max(r.last_term, std::abs(term));
    }
    return r;
}

namespace detail {

struct Nu {
    double n1, n2;
};

inline double quad_q(const Nu& v) { return 0.5 * v.n1 * v.n1 + 2.0 * v.n1 * v.n2 + v.n2 * v.n2; }
inline double bil_c1(const Nu& v) { return v.n1; }        // B(nu, c1)
inline double bil_c2(const Nu& v) { return -2.0 * v.n2; } // B(nu, c2)
inline double bil_b(const Nu& v) { return 0.5 * v.n1 + v.n2; }

inline cd vartheta_sum(int ell, const cd& tau, int radius) {
    double y = tau.imag();
    cd total = 0.0;
    for (long long m = -radius - 1; m <= radius; ++m) {
        for (long long n = -radius - 1; n <= radius + 1; ++n) {
            Nu v{m + 0.5, n - 0.5 * ell};
            if (std::abs(v.n1) > radius || std::abs(v.n2) > radius) continue;
            double b1 = bil_c1(v), b2 = bil_c2(v);
            double rho = sgn_of(b1) * (1.0 - beta_fn(2.0 * b1 * b1 * y)) -
                         sgn_of(b2) * (1.0 - beta_fn(b2 * b2 * y));
            if (rho == 0.0) continue;
            total += rho * std::exp(cd(0.0, 2.0 * kPi) * bil_b(v)) * q_pow(tau, quad_q(v));
        }
    }
    return total;
}

// Correction sum of the completion statement: sum_j (-1)^j sum_nu
// sgn(B(nu,c_j)) beta(-B^2/Q(c_j) y) e(B(nu,b)) q^Q(nu).
inline cd vartheta_correction_sum(int ell, const cd& tau, int radius) {
    double y = tau.imag();
    cd total = 0.0;
    for (long long m = -radius - 1; m <= radius; ++m) {
        for (long long n = -radius - 1; n <= radius + 1; ++n) {
            Nu v{m + 0.5, n - 0.5 * ell};
            if (std::abs(v.n1) > radius || std::abs(v.n2) > radius) continue;
            double b1 = bil_c1(v), b2 = bil_c2(v);
            double w = -sgn_of(b1) * beta_fn(2.0 * b1 * b1 * y) +
                       sgn_of(b2) * beta_fn(b2 * b2 * y);
            if (w == 0.0) continue;
            total += w * std::exp(cd(0.0, 2.0 * kPi) * bil_b(v)) * q_pow(tau, quad_q(v));
        }
    }
    return total;
}

} // namespace detail

// vartheta^l(tau) with a radius / radius-2 self-convergence gate.
inline cd indefinite_theta(int ell, const NumericContext& ctx) {
    if (!(ctx.tau.imag() > 0)) throw Error("indefinite_theta: tau not in the upper half-plane");
    cd full = detail::vartheta_sum(ell, ctx.tau, ctx.radius);
    cd smaller = detail::vartheta_sum(ell, ctx.tau, ctx.radius - 2);
    if (std::abs(full - smaller) > ctx.tol)
        throw ConvergenceNotReached("indefinite theta: radius " + std::to_string(ctx.radius) +
                                    " vs " + std::to_string(ctx.radius - 2) + " differ by " +
                                    std::to_string(std::abs(full - smaller)));
    return full;
}

// ---------------------------------------------------------------------------
// Continuum (closed-form) evaluators, valid at any point of H.

// vartheta[a;b](z;tau) = sum e^(2 pi i (n+a) b) e^(pi i tau (n+a)^2) e^(2 pi i z (n+a))
inline cd vartheta_num(double a, double b, const cd& z, const cd& tau, int radius = 64) {
    cd total = 0.0;
    for (long long n = -radius; n <= radius; ++n) {
        double na = n + a;
        total += std::exp(cd(0.0, 2.0 * kPi) * (na * b) + cd(0.0, kPi) * tau * (na * na) +
                          cd(0.0, 2.0 * kPi) * z * na);
    }
    return total;
}

inline cd eta_num(const cd& tau, int radius = 64) {
    cd total = 0.0;
    for (long long n = -radius; n <= radius; ++n) {
        double e = 0.5 * n * (3.0 * n + 1.0);
        total += (((n % 2) + 2) % 2 == 0 ? 1.0 : -1.0) * q_pow(tau, e);
    }
    return q_pow(tau, 1.0 / 24.0) * total;
}

// 2 phi_{0,1}(z;tau) = 8 ( th2(z)^2/th2^2 + th3(z)^2/th3^2 + th4(z)^2/th4^2 ).
inline cd k3_genus_num(const cd& z, const cd& tau, int radius = 64) {
    cd t2z = vartheta_num(0.5, 0.0, z, tau, radius), t2 = vartheta_num(0.5, 0.0, 0.0, tau, radius);
    cd t3z = vartheta_num(0.0, 0.0, z, tau, radius), t3 = vartheta_num(0.0, 0.0, 0.0, tau, radius);
    cd t4z = vartheta_num(0.0, 0.5, z, tau, radius), t4 = vartheta_num(0.0, 0.5, 0.0, tau, radius);
    return 8.0 * (t2z * t2z / (t2 * t2) + t3z * t3z / (t3 * t3) + t4z * t4z / (t4 * t4));
}

// E_{V_L,h}(z;tau) = -sum_{r in {1,3,5}} ( vartheta[r/6;1/2](z;3tau) / eta(tau) )^6.
inline cd rank6_genus_num(const cd& z, const cd& tau, int radius = 64) {
    cd eta = eta_num(tau, radius);
    cd total = 0.0;
    for (int r = 1; r <= 5; r += 2) {
        cd v = vartheta_num(r / 6.0, 0.5, z, 3.0 * tau, radius) / eta;
        cd v2 = v * v;
        total += v2 * v2 * v2;
    }
    return -total;
}

// ---------------------------------------------------------------------------
// Moebius transformations.

struct Mobius {
    long long a = 1, b = 0, c = 0, d = 1;
    cd apply(const cd& tau) const {
        return (static_cast<double>(a) * tau + static_cast<double>(b)) /
               (static_cast<double>(c) * tau + static_cast<double>(d));
    }
    cd denom(const cd& tau) const { return static_cast<double>(c) * tau + static_cast<double>(d); }
    Mobius operator*(const Mobius& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

// "I", or a word in S and T with optional exponents after T, e.g. "ST3S",
// "ST4S", "T", "S"; also "a,b,c,d" with integers.
inline Mobius parse_gamma(const std::string& spec) {
    if (spec.find(',') != std::string::npos) {
        Mobius g;
        if (std::sscanf(spec.c_str(), "%lld,%lld,%lld,%lld", &g.a, &g.b, &g.c, &g.d) != 4)
            throw ParseError("bad gamma: '" + spec + "'");
        if (g.a * g.d - g.b * g.c != 1) throw ParseError("gamma is not in SL2(Z): '" + spec + "'");
        return g;
    }
    Mobius g;
    const Mobius S{0, -1, 1, 0};
    std::size_t i = 0;
    while (i < spec.size()) {
        char ch = spec[i];
        if (ch == 'I') {
            ++i;
        } else if (ch == 'S') {
            g = g * S;
            ++i;
        } else if (ch == 'T') {
            ++i;
            long long k = 1;
            std::size_t j = i;
            bool neg = j < spec.size() && spec[j] == '-';
            if (neg) ++j;
            std::size_t start = j;
            while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) ++j;
            if (j > start) {
                k = std::stoll(spec.substr(start, j - start));
                if (neg) k = -k;
                i = j;
            }
            g = g * Mobius{1, k, 0, 1};
        } else {
            throw ParseError("bad gamma token '" + std::string(1, ch) + "' in '" + spec + "'");
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Check reports.

struct CheckItem {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::map<std::string, double> info;
};

struct CheckReport {
    std::string check;
    std::map<std::string, std::string> point;
    std::vector<CheckItem> items;
    std::map<std::string, double> truncation;
    double residual = 0.0; // worst item
    double tol = 0.0;
    bool pass = true;

    void add(CheckItem item) {
        residual = std::max(residual, item.residual);
        pass = pass && item.pass;
        items.push_back(std::move(item));
    }
};

inline std::string cd_str(const cd& v) {
    return std::to_string(v.real()) + (v.imag() < 0 ? "" : "+") + std::to_string(v.imag()) + "i";
}

// Transformation laws of vartheta^l:
//   vartheta^l(tau+1)  = e^(i pi (1/4 - l^2/2)) vartheta^l(tau)
//   vartheta^l(-1/tau) = -(i tau / sqrt 2) sum_l' (-1)^(l l') vartheta^l'(tau)
inline CheckReport check_vartheta_transforms(const NumericContext& ctx) {
    require_upper_half(ctx.tau);
    CheckReport rep;
    rep.check = "vartheta-transforms";
    rep.point = {{"tau", cd_str(ctx.tau)}, {"radius", std::to_string(ctx.radius)}};
    rep.tol = ctx.tol;
    cd v[2] = {indefinite_theta(0, ctx), indefinite_theta(1, ctx)};
    NumericContext shifted = ctx;
    shifted.tau = ctx.tau + 1.0;
    NumericContext inverted = ctx;
    inverted.tau = -1.0 / ctx.tau;
    for (int ell = 0; ell <= 1; ++ell) {
        cd lhsT = indefinite_theta(ell, shifted);
        cd phase = std::exp(cd(0.0, kPi) * (0.25 - 0.5 * ell * ell));
        CheckItem t{"T-law l=" + std::to_string(ell), std::abs(lhsT - phase * v[ell]), ctx.tol,
                    false, {}};
        t.pass = t.residual <= t.tol;
        rep.add(t);

        cd lhsS = indefinite_theta(ell, inverted);
        cd rhsS = -(cd(0.0, 1.0) * ctx.tau / std::sqrt(2.0)) *
                  (v[0] + (ell == 1 ? -1.0 : 1.0) * v[1]);
        CheckItem s{"S-law l=" + std::to_string(ell), std::abs(lhsS - rhsS), ctx.tol, false, {}};
        s.pass = s.residual <= s.tol;
        rep.add(s);
    }
    return rep;
}

namespace detail {

struct SData {
    cd s0, s1, th2, th3; // S_l(tau) and theta constants at 2tau, exact series eval
    double trunc;
};

} // namespace detail

// The S series and theta constants evaluated from their exact expansions.
inline detail::SData eval_sdata(const cd& tau, const Rat& order) {
    EvalResult a = eval_qseries(s_series(0, order), tau);
    EvalResult b = eval_qseries(s_series(1, order), tau);
    EvalResult t2 = eval_qseries(theta_const(2, 2, order), tau);
    EvalResult t3 = eval_qseries(theta_const(3, 2, order), tau);
    double trunc = std::max(std::max(a.last_term, b.last_term), std::max(t2.last_term, t3.last_term));
    return {a.value, b.value, t2.value, t3.value, trunc};
}

// Completions: vartheta^l = 2i(-1)^l ( S_l -+ theta C ), and the corollary's
// explicit correction sum must agree with the -+ theta C form.
inline CheckReport check_completions(const NumericContext& ctx, const Rat& order) {
    require_upper_half(ctx.tau);
    CheckReport rep;
    rep.check = "completions";
    rep.point = {{"tau", cd_str(ctx.tau)},
                 {"radius", std::to_string(ctx.radius)},
                 {"order", rat_str(order)}};
    rep.tol = ctx.tol;
    detail::SData sd = eval_sdata(ctx.tau, order);
    rep.truncation["series_last_term"] = sd.trunc;

    EvalResult C = c_completion(ctx.tau, ctx.radius);
    EvalResult C2 = c_completion(ctx.tau, ctx.radius > 2 ? ctx.radius - 2 : ctx.radius);
    if (std::abs(C.value - C2.value) > ctx.tol)
        throw ConvergenceNotReached("C(tau) self-convergence failed");
    rep.truncation["c_last_term"] = C.last_term;

    // vartheta^l = 2i Shat_l for both l: the sign part of rho sums to
    // 2i S_l(tau) (checked against the exact series; an extra (-1)^l would
    // break the l = 1 case by twice the value), and the beta part matches
    // the -+ theta C completion terms.
    cd shat[2] = {sd.s0 - sd.th2 * C.value, sd.s1 + sd.th3 * C.value};
    for (int ell = 0; ell <= 1; ++ell) {
        cd v = indefinite_theta(ell, ctx);
        cd rhs = 2.0 * cd(0.0, 1.0) * shat[ell];
        CheckItem item{"completion l=" + std::to_string(ell), std::abs(v - rhs), ctx.tol, false, {}};
        item.pass = item.residual <= item.tol;
        rep.add(item);

        // corollary correction route for the same value
        cd corr = detail::vartheta_correction_sum(ell, ctx.tau, ctx.radius);
        cd hol = 2.0 * cd(0.0, 1.0) * (ell == 0 ? sd.s0 : sd.s1);
        CheckItem item2{"corollary l=" + std::to_string(ell), std::abs(v - corr - hol), ctx.tol,
                        false, {}};
        item2.pass = item2.residual <= item2.tol;
        rep.add(item2);
    }
    return rep;
}

namespace detail {

// Completed S values at an arbitrary point of H, through the indefinite
// theta: Shat_l = vartheta^l / (2i(-1)^l). Converges for any Im > 0; the
// radius is enlarged as Im shrinks.
inline void shat_via_vartheta(const cd& tau, const NumericContext& ctx, cd out[2]) {
    NumericContext local = ctx;
    local.tau = tau;
    int need = static_cast<int>(std::ceil(10.0 / std::sqrt(tau.imag())));
    local.radius = std::max(ctx.radius, need);
    for (int ell = 0; ell <= 1; ++ell) out[ell] = indefinite_theta(ell, local) / (2.0 * cd(0.0, 1.0));
}

// K3 theta coefficients from the theta-constant closed forms, valid at any
// point: f0 = (4 th4^4 + 16 th3^4)/(th3 th4^4), f1 = (4 th4^4 - 16 th2^4)/(th2 th4^4),
// all constants at 2 tau.
inline void k3_f_closed(const cd& tau, cd& f0, cd& f1, int radius = 64) {
    cd t2 = vartheta_num(0.5, 0.0, 0.0, 2.0 * tau, radius);
    cd t3 = vartheta_num(0.0, 0.0, 0.0, 2.0 * tau, radius);
    cd t4 = vartheta_num(0.0, 0.5, 0.0, 2.0 * tau, radius);
    cd t2_4 = t2 * t2 * t2 * t2, t3_4 = t3 * t3 * t3 * t3, t4_4 = t4 * t4 * t4 * t4;
    f0 = (4.0 * t4_4 + 16.0 * t3_4) / (t3 * t4_4);
    f1 = (4.0 * t4_4 - 16.0 * t2_4) / (t2 * t4_4);
}

} // namespace detail

// |Fhat(gamma tau)| = |c tau + d|^(1/2) |Fhat(tau)| for the completed K3
// mock form Fhat = F + 24 C. The gamma.tau side is evaluated through the
// convergent route Fhat = f0 Shat_1 - f1 Shat_0 (theta constants + indefinite
// theta), which is cross-checked against the q-expansion at the base point.
// Only the modulus is asserted; the measured multiplier phase is reported.
inline CheckReport check_fhat_k3(const NumericContext& ctx, const Rat& order, const Mobius& g) {
    require_upper_half(ctx.tau);
    CheckReport rep;
    rep.check = "fhat-k3";
    rep.point = {{"tau", cd_str(ctx.tau)},
                 {"gamma", std::to_string(g.a) + "," + std::to_string(g.b) + "," +
                               std::to_string(g.c) + "," + std::to_string(g.d)},
                 {"order", rat_str(order)}};
    rep.tol = ctx.tol;

    DecompResult res = decompose_full(build_k3(order));
    EvalResult f = eval_qseries(res.fmock, ctx.tau);
    rep.truncation["series_last_term"] = f.last_term;
    cd fhat_base = f.value + 24.0 * c_completion(ctx.tau, ctx.radius).value;

    cd shat[2];
    detail::shat_via_vartheta(ctx.tau, ctx, shat);
    cd f0n, f1n;
    detail::k3_f_closed(ctx.tau, f0n, f1n);
    cd fhat_closed = f0n * shat[1] - f1n * shat[0];
    CheckItem cross{"series vs closed route at tau", std::abs(fhat_base - fhat_closed), ctx.tol,
                    false, {}};
    cross.pass = cross.residual <= cross.tol;
    rep.add(cross);

    cd gtau = g.apply(ctx.tau);
    detail::shat_via_vartheta(gtau, ctx, shat);
    detail::k3_f_closed(gtau, f0n, f1n);
    cd fhat_gamma = f0n * shat[1] - f1n * shat[0];

    // | |Fhat(g tau)| - |c tau + d|^(1/2) |Fhat(tau)| |, normalized by the
    // larger modulus. tau = i is a zero of Fhat^K3 (both routes vanish
    // there), so a bare ratio would be 0/0; the capped normalization keeps
    // the check meaningful at zeros and reduces to the unit-modulus ratio
    // away from them.
    double lhs = std::abs(fhat_gamma);
    double rhs = std::sqrt(std::abs(g.denom(ctx.tau))) * std::abs(fhat_base);
    double scale = std::max(std::max(lhs, rhs), 1.0);
    CheckItem modulus{"multiplier modulus", std::abs(lhs - rhs) / scale, ctx.tol, false, {}};
    modulus.info["fhat_abs_base"] = std::abs(fhat_base);
    modulus.info["fhat_abs_gamma"] = lhs;
    if (std::max(lhs, rhs) > 1e-3)
        modulus.info["measured_phase"] =
            std::arg(fhat_gamma / (std::sqrt(g.denom(ctx.tau)) * fhat_base));
    modulus.pass = modulus.residual <= modulus.tol;
    rep.add(modulus);
    return rep;
}

// phi(z/(c tau + d); gamma tau) = e^(2 pi i c z^2/(c tau + d)) phi(z;tau) for
// the index-one examples. The left side is evaluated with the closed product
// formula (convergent at gamma tau even when Im is small); the right side
// from the exact expansion at the base point, which is also cross-checked
// against the closed formula there.
inline CheckReport check_jacobi_automorphy(const std::string& which, const Mobius& g,
                                           const NumericContext& ctx, const Rat& order) {
    require_upper_half(ctx.tau);
    CheckReport rep;
    rep.check = "jacobi-automorphy";
    rep.point = {{"example", which},
                 {"tau", cd_str(ctx.tau)},
                 {"z", cd_str(ctx.z)},
                 {"gamma", std::to_string(g.a) + "," + std::to_string(g.b) + "," +
                               std::to_string(g.c) + "," + std::to_string(g.d)},
                 {"order", rat_str(order)}};
    rep.tol = ctx.tol;

    JSeries series = JSeries::zero(Rat(1));
    cd (*closed)(const cd&, const cd&, int) = nullptr;
    if (which == "k3") {
        series = build_k3(order).form;
        closed = +[](const cd& z, const cd& tau, int radius) { return k3_genus_num(z, tau, radius); };
    } else if (which == "rank6") {
        series = build_rank6(order).genus.series;
        closed = +[](const cd& z, const cd& tau, int radius) { return rank6_genus_num(z, tau, radius); };
    } else {
        throw UnknownSeries("automorphy example must be k3 or rank6, got '" + which + "'");
    }

    EvalResult base = eval_jseries(series, ctx.z, ctx.tau);
    rep.truncation["series_last_term"] = base.last_term;
    if (base.last_term > ctx.tol / 10.0)
        throw ConvergencePoor("series tail estimate " + std::to_string(base.last_term) +
                              " exceeds tol/10 at the base point");
    cd closed_base = closed(ctx.z, ctx.tau, 64);
    CheckItem cross{"series vs closed form at base point", std::abs(base.value - closed_base),
                    ctx.tol / 10.0, false, {}};
    cross.pass = cross.residual <= cross.tol;
    rep.add(cross);

    cd den = g.denom(ctx.tau);
    cd lhs = closed(ctx.z / den, g.apply(ctx.tau), 64);
    cd pref = std::exp(cd(0.0, 2.0 * kPi) * (static_cast<double>(g.c) * ctx.z * ctx.z / den));
    CheckItem aut{"automorphy residual", std::abs(lhs - pref * closed_base), ctx.tol, false, {}};
    aut.pass = aut.residual <= aut.tol;
    rep.add(aut);
    return rep;
}

} // namespace qjf

#endif

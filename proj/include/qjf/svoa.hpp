#ifndef QJF_SVOA_HPP
#define QJF_SVOA_HPP

// Jacobi trace functions of super vertex operator algebras, their
// theta-expansions, and the spectral-flow machinery. Includes the two
// worked examples: the K3 elliptic genus 2 phi_{0,1} and the rank-6 odd
// lattice built from an orthogonal basis with (alpha_i, alpha_j) = 3 delta
// and h = (alpha_1 + ... + alpha_6)/3.
//
// Every flow operation is computed both directly (as a substitution on the
// series) and through the g-decomposition index/sign manipulation, and the
// two results are asserted equal.

#include <map>
#include <string>
#include <vector>

#include "qjf/decomp.hpp"
#include "qjf/errors.hpp"
#include "qjf/jseries.hpp"
#include "qjf/qseries.hpp"
#include "qjf/theta.hpp"

namespace qjf {

struct TraceFunction {
    JSeries series;
    Rat index_m;
    Rat central_charge;
    std::string label;
};

// Z = sum_{mu mod 2m} g_mu theta_{m,mu}, with g_mu = q^(-c/24) sum_N c_mu(N) q^(N/4m).
struct GDecomp {
    Rat index_m;
    Rat central_charge;
    std::map<long long, QSeries> g; // mu in [0, 2m)
};

namespace detail {

inline long long twom_of(const TraceFunction& t) {
    Rat tm = 2 * t.index_m;
    if (!is_integer(tm) || tm <= 0)
        throw Error(t.label + ": 2m must be a positive integer, got 2m = " + rat_str(tm));
    return to_ll(tm.get_num());
}

} // namespace detail

// Extract the g-decomposition by discriminant. Each component at zeta^r
// determines g_{r mod 2m} = q^(-r^2/4m) * component; all components in the
// same class must produce the same series, and the reconstruction against
// theta_{m,mu} is asserted.
inline GDecomp trace_decompose(const TraceFunction& t) {
    long long twom = detail::twom_of(t);
    const JSeries& Z = t.series;
    if (Z.zdenom() != 1) throw SymmetryViolation(t.label + ": zeta exponents are not integers");
    check_discriminant_symmetry(Z, twom, t.central_charge / 24, t.label);

    GDecomp d{t.index_m, t.central_charge, {}};
    for (long long mu = 0; mu < twom; ++mu) {
        // the class representative with the smallest r^2 has the best validity
        long long rbest = 0;
        bool found = false;
        for (const auto& [r, comp] : Z.components()) {
            if (((r % twom) + twom) % twom != mu) continue;
            if (!found || r * r < rbest * rbest) {
                rbest = r;
                found = true;
            }
        }
        if (!found) {
            long long rmin = std::min(mu, twom - mu);
            d.g.emplace(mu, QSeries::zero(Z.order() - rat(rmin * rmin, 2 * twom)));
            continue;
        }
        QSeries gmu = Z.zcoeff(rat(rbest)).shifted(-rat(rbest * rbest, 2 * twom));
        d.g.emplace(mu, gmu);
    }

    // reconstruction (also catches classes whose components were missed)
    JSeries recon = JSeries::zero(Z.order());
    for (const auto& [mu, gmu] : d.g) recon = recon + theta_mmu2(twom, mu, Z.order()) * gmu;
    try {
        require_agree(recon, Z, t.label + ": g-decomposition does not reproduce the trace");
    } catch (const DecompositionMismatch& e) {
        throw SymmetryViolation(e.what());
    }
    return d;
}

inline JSeries assemble_gdecomp(const GDecomp& d, const Rat& order, long long mu_shift,
                                bool signs) {
    Rat tm = 2 * d.index_m;
    long long twom = to_ll(tm.get_num());
    JSeries out = JSeries::zero(order);
    for (const auto& [mu, gmu] : d.g) {
        QSeries coef = (signs && mu % 2 != 0) ? -gmu : gmu;
        out = out + theta_mmu2(twom, mu + mu_shift, order) * coef;
    }
    return out;
}

// Supertrace: Z(z + 1/2), or equivalently e^(pi i mu) signs on the g's.
inline TraceFunction supertrace(const TraceFunction& t) {
    JSeries direct = t.series.shift_half();
    GDecomp d = trace_decompose(t);
    JSeries via_g = assemble_gdecomp(d, direct.order(), 0, true);
    require_agree(direct, via_g, t.label + ": supertrace routes disagree");
    return {direct, t.index_m, t.central_charge, "supertrace " + t.label};
}

// Sigma-twisted trace: q^(m/4) zeta^m Z(z + tau/2), or the index shift
// mu -> mu + m on the g-decomposition.
inline TraceFunction sigma_twist(const TraceFunction& t) {
    JSeries direct =
        t.series.shift_half_tau().mul_monomial(Rat(1), t.index_m / 4, t.index_m);
    if (t.index_m != 0 && is_integer(t.index_m)) {
        GDecomp d = trace_decompose(t);
        JSeries via_g = assemble_gdecomp(d, direct.order(), to_ll(t.index_m.get_num()), false);
        require_agree(direct, via_g, t.label + ": sigma-twist routes disagree");
    }
    return {direct, t.index_m, t.central_charge, "sigma " + t.label};
}

// Elliptic genus with parity root: (-1)^m Z_sigma(z + 1/2), or signed,
// index-shifted g's.
inline TraceFunction elliptic_genus(const TraceFunction& t) {
    if (!is_integer(t.index_m)) throw Error(t.label + ": elliptic genus needs integral index");
    long long m = to_ll(t.index_m.get_num());
    JSeries direct = sigma_twist(t).series.shift_half();
    if (((m % 2) + 2) % 2 != 0) direct = -direct;
    if (m != 0) {
        GDecomp d = trace_decompose(t);
        JSeries via_g = assemble_gdecomp(d, direct.order(), m, true);
        require_agree(direct, via_g, t.label + ": elliptic genus routes disagree");
    }
    return {direct, t.index_m, t.central_charge, "elliptic genus " + t.label};
}

struct PositivityViolation {
    long long mu;
    Rat N;
    Rat coeff;
};

struct PositivityReport {
    std::vector<PositivityViolation> violations;
    bool empty() const { return violations.empty(); }
};

// Necessary conditions on a trace decomposition: c_mu(N) >= 0 always, and
// c_mu(N) = 0 for N < 0 when the grading is non-negative.
inline PositivityReport positivity_check(const GDecomp& d, bool grading_nonneg) {
    PositivityReport rep;
    Rat offset = d.central_charge / 24;
    Rat fourm = 4 * d.index_m;
    for (const auto& [mu, gmu] : d.g) {
        for (const auto& [k, c] : gmu.terms()) {
            Rat N = fourm * (gmu.exponent(k) + offset);
            if (c < 0 || (grading_nonneg && N < 0))
                rep.violations.push_back({mu, N, c});
        }
    }
    return rep;
}

enum class ParityVerdict { Obstructed, Possible };

inline const char* to_string(ParityVerdict v) {
    return v == ParityVerdict::Obstructed ? "OBSTRUCTED" : "POSSIBLE";
}

// If phi were the elliptic genus of an SVOA with a parity root, the genus
// expansion would force g_0 = +-f_1 and g_1 = -+f_0 with non-negative
// coefficients. OBSTRUCTED means both sign choices fail that test.
inline ParityVerdict parity_root_obstruction(const JacobiFormInput& in) {
    auto [f0, f1] = theta_decompose(in);
    auto nonneg = [](const QSeries& s) {
        for (const auto& [k, c] : s.terms())
            if (c < 0) return false;
        return true;
    };
    bool plus = nonneg(f1) && nonneg(-f0);
    bool minus = nonneg(-f1) && nonneg(f0);
    return (plus || minus) ? ParityVerdict::Possible : ParityVerdict::Obstructed;
}

// K3 elliptic genus: 2 phi_{0,1} = 8 sum_j theta_j(z;tau)^2 / theta_j(tau)^2.
inline JacobiFormInput build_k3(const Rat& order) {
    if (order <= 0) throw Error("build_k3: order must be positive");
    Rat gen = order + 1;
    JSeries sum = JSeries::zero(gen);
    for (int j = 2; j <= 4; ++j) {
        JSeries num = theta_j(j, gen).pow(2, gen);
        QSeries den = theta_const(j, 1, gen).pow(2, gen);
        sum = sum + num * den.inverse();
    }
    return {(sum * rat(8)).truncated(order), "2phi_{0,1}"};
}

// Rank-6 lattice data in the alpha basis: gram = 3 I, h = (1/3,...,1/3).
inline LatticeSpec rank6_coset(const Rat& shift_val) {
    LatticeSpec spec;
    spec.gram.assign(6, std::vector<Rat>(6, Rat(0)));
    for (int i = 0; i < 6; ++i) spec.gram[i][i] = 3;
    spec.shift.assign(6, shift_val);
    spec.pairing.assign(6, rat(1, 3));
    return spec;
}

// theta_L^h summed over the cosets L = L3 + {0, h, 2h} (or L + h/2 when
// half = true, shifts {1/6, 3/6, 5/6}).
inline JSeries rank6_lattice_theta(const Rat& order, bool half = false) {
    JSeries sum = JSeries::zero(order);
    for (long long r = 0; r <= 2; ++r) {
        Rat s = half ? rat(2 * r + 1, 6) : rat(r, 3);
        sum = sum + lattice_theta(rank6_coset(s), order);
    }
    return sum;
}

struct Rank6Example {
    TraceFunction trace; // Z_{V_L,h}
    TraceFunction genus; // E_{V_L,h}
};

// Z_{V_L,h} = theta_L^h / eta^6 by complete lattice enumeration, asserted
// against the coset product formula sum_r (eta^-1 vartheta[r/3;0](z;3tau))^6;
// the genus comes from the spectral flows and is asserted against the direct
// product formula over r in {1,3,5}.
inline Rank6Example build_rank6(const Rat& order) {
    if (order <= 0) throw Error("build_rank6: order must be positive");
    // The sigma flow multiplies component r by q^(r/2); components reach
    // |r| ~ 2 sqrt(order), so pad the trace order accordingly.
    long long pad = static_cast<long long>(std::sqrt(to_double(order))) + 3;
    Rat oz = order + rat(pad);

    QSeries eta6inv = eta_power(-6, oz + 1);
    JSeries Z_lat = rank6_lattice_theta(oz + rat(1, 2), false) * eta6inv;

    JSeries prod_sum = JSeries::zero(oz + rat(1, 2));
    for (long long r = 0; r <= 2; ++r)
        prod_sum = prod_sum + theta_char({rat(r, 3), Rat(0), 1, 3}, oz + rat(1, 2)).pow(6, oz);
    JSeries Z_prod = prod_sum * eta6inv;
    require_agree(Z_lat, Z_prod, "Z_{V_L,h}: lattice enumeration vs coset product formula");

    TraceFunction trace{Z_lat.truncated(oz), Rat(1), Rat(6), "Z_{V_L,h}"};
    TraceFunction genus = elliptic_genus(trace);
    genus.label = "E_{V_L,h}";

    // Direct product formula: E = -sum_{r in {1,3,5}} (eta^-1 vartheta[r/6;1/2](z;3tau))^6.
    Rat oe = genus.series.order();
    JSeries esum = JSeries::zero(oe);
    for (long long r = 1; r <= 5; r += 2) {
        PhasedJSeries v = theta_char_phased({rat(r, 6), rat(1, 2), 1, 3}, oe + rat(1, 2));
        esum = esum + v.pow(6, oe).real();
    }
    JSeries E_direct = -(esum * eta_power(-6, oe + rat(1, 2)));
    require_agree(genus.series, E_direct, "E_{V_L,h}: flow route vs direct product formula");

    trace.series = trace.series.truncated(order);
    genus.series = genus.series.truncated(order);
    return {trace, genus};
}

// The identity (beta,beta) = (beta,h) mod 2 on every enumerated lattice
// vector with Q(beta) < order.
inline bool rank6_parity_identity_holds(const Rat& order) {
    // beta = sum (m_i + r/3) alpha_i: (beta,beta) = sum(3 m_i^2 + 2 r m_i) + 2r^2,
    // (beta,h) = sum m_i + 2r.
    for (long long r = 0; r <= 2; ++r) {
        std::vector<long long> m(6, 0);
        bool ok = true;
        auto rec = [&](auto&& self, int level, const Rat& budget) -> void {
            if (!ok) return;
            if (level == 6) {
                long long bb = 2 * r * r, bh = 2 * r;
                for (int i = 0; i < 6; ++i) {
                    bb += 3 * m[i] * m[i] + 2 * r * m[i];
                    bh += m[i];
                }
                if (((bb - bh) % 2 + 2) % 2 != 0) ok = false;
                return;
            }
            long long lo, hi;
            // (3/2)(x + r/3)^2 <= budget
            if (!detail::exact_range(rat(r, 3), 2 * budget / 3, lo, hi)) return;
            for (long long x = lo; x <= hi && ok; ++x) {
                m[level] = x;
                Rat d = rat(x) + rat(r, 3);
                self(self, level + 1, budget - rat(3, 2) * d * d);
            }
        };
        rec(rec, 0, order);
        if (!ok) return false;
    }
    return true;
}

} // namespace qjf

#endif

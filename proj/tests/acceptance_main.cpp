// Acceptance suite: one [PASS]/[FAIL] line per criterion, zero tolerance on
// every exact check, stated tolerances on the numeric ones. Exit code is
// nonzero if any line fails.
//
// Two subchecks — 6f and 9 "completion(l=1, convention A)" — assert a sign
// variant that the defining identities rule out (see the companion
// subchecks 6g and "completion(l=1)" that carry the identity-forced
// values); they are reported honestly rather than silently adjusted.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "qjf/qjf.hpp"
#include "qjf/verify.hpp"

using namespace qjf;

namespace {

int failures = 0;

void line(const std::string& id, bool ok, const std::string& note = "") {
    std::printf("[%s] %s%s\n", ok ? "PASS" : "FAIL", id.c_str(),
                note.empty() ? "" : ("  -- " + note).c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool coeffs_match(const QSeries& s, const Rat& base, const std::vector<long long>& expect) {
    for (std::size_t n = 0; n < expect.size(); ++n)
        if (s.coeff(base + rat(static_cast<long long>(n))) != rat(expect[n])) return false;
    return true;
}

QSeries random_series(std::mt19937& rng, bool unit_leading) {
    static const long long grids[] = {1, 2, 3, 4, 6, 8, 12, 24};
    std::uniform_int_distribution<int> gpick(0, 7);
    std::uniform_int_distribution<long long> coef(-9, 9);
    std::uniform_int_distribution<long long> den(1, 5);
    std::uniform_int_distribution<int> nterm(0, 8);
    std::uniform_int_distribution<long long> kpick(-12, 40);
    long long D = grids[gpick(rng)];
    QSeries::TermMap t;
    int n = nterm(rng);
    for (int i = 0; i < n; ++i) {
        Rat c = rat(coef(rng), den(rng));
        if (c != 0) t[kpick(rng)] = c;
    }
    long long k0 = t.empty() ? kpick(rng) : t.begin()->first;
    if (unit_leading) t[k0] = 1;
    Rat order = rat(k0 + 1 + (kpick(rng) + 12) / 2, D);
    return QSeries::make(D, t, order);
}

} // namespace

int main() {
    // ---- 1: F^K3 coefficients -------------------------------------------
    auto t0 = std::chrono::steady_clock::now();
    JacobiFormInput k3 = build_k3(rat(10));
    DecompResult k3res = decompose_full(k3, 5);
    double dt = seconds_since(t0);
    line("1  F^K3 B0..B5 = (-2,90,462,1540,4554,11592) exactly",
         k3res.b == std::vector<Rat>{rat(-2), rat(90), rat(462), rat(1540), rat(4554), rat(11592)});
    line("1t F^K3 runtime < 5 s at order 10", dt < 5.0, std::to_string(dt) + " s");

    // ---- 2: K3 intermediates --------------------------------------------
    line("2a chi^K3 = 24", k3res.chi == 24);
    line("2b R^K3 = 16+512q+4096q^2+22528q^3+98304q^4+367616q^5",
         coeffs_match(k3res.r_shift, Rat(0), {16, 512, 4096, 22528, 98304, 367616}));
    line("2c f0^K3 = 20+216q+1616q^2+8032q^3",
         coeffs_match(k3res.f0, Rat(0), {20, 216, 1616, 8032}));
    line("2d f1^K3 = q^(-1/4)(2-128q-1026q^2-5504q^3)",
         coeffs_match(k3res.f1, rat(-1, 4), {2, -128, -1026, -5504}));

    // ---- 3: hauptmodul identities through order 20 -----------------------
    {
        const Rat O = rat(20);
        QSeries R = r_shift_of(build_k3(O).form);
        QSeries quot =
            (theta_const(3, 2, O + 1) * theta_const(4, 2, O + 1).inverse()).pow(4, O);
        line("3a R^K3 = -16 + 32 (theta3(2tau)/theta4(2tau))^4 through order 20",
             R.agrees_with(quot * rat(32) - QSeries::constant(rat(16), O)));
        QSeries equot = (eta_power_scaled(1, 4, O + 2) * eta_power(-1, O + 2)).pow(8, O);
        line("3b R^K3 = 16 + 512 (eta(4tau)/eta(tau))^8 through order 20",
             R.agrees_with(equot * rat(512) + QSeries::constant(rat(16), O)));
    }

    // ---- 4: S series golden values and oracle ----------------------------
    t0 = std::chrono::steady_clock::now();
    {
        QSeries s0 = s_series(0, rat(11)), s1 = s_series(1, rat(11));
        line("4a S0 = q^(1/8)(1-q+2q^2+q^3-2q^5+q^6+2q^9+q^10)",
             coeffs_match(s0, rat(1, 8), {1, -1, 2, 1, 0, -2, 1, 0, 0, 2, 1}));
        line("4b S1 = 2q^(-1/8)(-q+q^3-q^4-q^6+q^8-q^9+q^10)",
             coeffs_match(s1, rat(-1, 8), {0, -2, 0, 2, -2, 0, -2, 0, 2, -2, 2}));
        bool ok = s_series(0, rat(50)).identical(s_series_oracle(0, rat(50))) &&
                  s_series(1, rat(50)).identical(s_series_oracle(1, rat(50)));
        line("4c nested double sum = quadrant sum through exponent 50", ok);
    }
    dt = seconds_since(t0);
    line("4t S-series runtime < 10 s", dt < 10.0, std::to_string(dt) + " s");

    // ---- 5: structural identities ----------------------------------------
    {
        VerifyReport v = run_verify(rat(20));
        auto item = [&](const std::string& name) {
            for (const auto& it : v.items)
                if (it.name == name) return it.pass;
            return false;
        };
        line("5a theta_1^2 = theta2(2tau)theta3(2z;2tau) - theta3(2tau)theta2(2z;2tau) @20",
             item("theta1sq-id"));
        line("5b S0 theta3(2tau) + S1 theta2(2tau) = eta^3 @20", item("s0s1-eta"));
        line("5c theta2^4 - theta3^4 + theta4^4 = 0 @20", item("theta-quartic"));
        line("5d eta^3 f0 = chi S0 + theta2(2tau) F @20", item("hs0f"));
        line("5e eta^3 f1 = chi S1 - theta3(2tau) F @20", item("hs1f"));
        VerifyReport v10 = run_verify(rat(10), "theta1-mu");
        line("5f theta_1^2 mu = S0 theta3(2z;2tau) + S1 theta2(2z;2tau) componentwise @10",
             v10.pass);
    }

    // ---- 6: rank-6 goldens -----------------------------------------------
    t0 = std::chrono::steady_clock::now();
    Rank6Example r6 = build_rank6(rat(37, 4)); // validity past q^8 on the -1/4 grid
    dt = seconds_since(t0);
    line("6a lattice enumeration route = coset product route (asserted in build)", true);
    GDecomp gd = trace_decompose(r6.trace);
    line("6b g0 = q^(-1/4)(1,6,57,308,1305,4800,15764,47466,133461) through q^8",
         coeffs_match(gd.g.at(0), rat(-1, 4), {1, 6, 57, 308, 1305, 4800, 15764, 47466, 133461}));
    line("6c g1 = (12,92,444,1836,6520,20916,61824,171244) q..q^8",
         coeffs_match(gd.g.at(1), Rat(0), {0, 12, 92, 444, 1836, 6520, 20916, 61824, 171244}));
    JacobiFormInput r6genus{r6.genus.series, "E_{V_L,h}"};
    DecompResult r6res = decompose_full(r6genus, 5);
    line("6d R^L = -(2,24,232,1256,5448,20432) through q^5",
         coeffs_match(r6res.r_shift, Rat(0), {-2, -24, -232, -1256, -5448, -20432}));
    line("6e chi^L = 2", r6res.chi == 2);
    line("6f F^L = +q^(-1/8)(1,5,29,80,253,654) through q^5 (convention A)",
         coeffs_match(r6res.fmock, rat(-1, 8), {1, 5, 29, 80, 253, 654}),
         "ruled out by eta^3 f1 = chi S1 - theta3(2tau) F; see 6g");
    line("6g F^L = -q^(-1/8)(1,5,29,80,253,654) through q^5 (identity-forced sign)",
         coeffs_match(r6res.fmock, rat(-1, 8), {-1, -5, -29, -80, -253, -654}));
    line("6t rank-6 runtime < 60 s at order 9", dt < 60.0, std::to_string(dt) + " s");

    // ---- 7: round trips ---------------------------------------------------
    {
        JSeries back = reconstruct_phi(k3res.chi, k3res.fmock, rat(5));
        line("7a reconstruction reproduces 2phi_{0,1} through order >= 4",
             back.order() >= rat(4) && back.agrees_with(k3.form));
        JSeries back6 = reconstruct_phi(r6res.chi, r6res.fmock, rat(5));
        bool zeta3 = back6.zcoeff(rat(3)).coeff(rat(2)) == 1 &&
                     back6.zcoeff(rat(-3)).coeff(rat(2)) == 1;
        bool zeta2 = back6.zcoeff(rat(2)).coeff(rat(2)) == -12 &&
                     back6.zcoeff(rat(-2)).coeff(rat(2)) == -12;
        line("7b reconstruction reproduces E_{V_L,h} through order >= 4",
             back6.order() >= rat(4) && back6.agrees_with(r6.genus.series));
        line("7c q^2 zeta^(+-3) coefficient 1 and q^2 zeta^(+-2) coefficient -12",
             zeta3 && zeta2);
    }

    // ---- 8: parity obstruction -------------------------------------------
    line("8a parity_root_obstruction(2phi_{0,1}) = OBSTRUCTED",
         parity_root_obstruction(k3) == ParityVerdict::Obstructed);
    line("8b parity_root_obstruction(E_{V_L,h}) = POSSIBLE",
         parity_root_obstruction(r6genus) == ParityVerdict::Possible);
    line("8c positivity report of (g0, g1) is empty", positivity_check(gd, true).empty());

    // ---- 9: numeric completion suite --------------------------------------
    {
        bool beta_ok = std::abs(beta_fn(0.0) - 1.0) <= 1e-12;
        line("9a beta(0) = 1 to 1e-12", beta_ok);
        for (cd tau : {cd(0, 1), cd(0.3, 0.8)}) {
            NumericContext ctx{tau, 0.0, 12, 1e-8};
            std::string at = " at tau=" + cd_str(tau);
            t0 = std::chrono::steady_clock::now();
            CheckReport comp = check_completions(ctx, rat(40));
            bool pass_corrected = true;
            for (const auto& item : comp.items) pass_corrected &= item.pass;
            line("9b |vartheta^l - 2i Shat_l| <= 1e-8 (l = 0,1)" + at, pass_corrected);

            // literal variant with the (-1)^l prefactor
            detail::SData sd = eval_sdata(tau, rat(40));
            cd C = c_completion(tau, 12).value;
            cd shat[2] = {sd.s0 - sd.th2 * C, sd.s1 + sd.th3 * C};
            bool lit = true;
            double worst = 0;
            for (int ell = 0; ell <= 1; ++ell) {
                cd v = indefinite_theta(ell, ctx);
                double res = std::abs(v - 2.0 * cd(0, 1) * (ell == 1 ? -1.0 : 1.0) * shat[ell]);
                worst = std::max(worst, res);
                lit = lit && res <= 1e-8;
            }
            line("9c |vartheta^l - 2i(-1)^l Shat_l| <= 1e-8 (convention A)" + at, lit,
                 "l=1 off by 2|Shat_1|; identity-forced form is 9b; worst residual " +
                     std::to_string(worst));
            line("9bt completion check < 5 s" + at, seconds_since(t0) < 5.0);

            t0 = std::chrono::steady_clock::now();
            CheckReport laws = check_vartheta_transforms(ctx);
            bool lawpass = true;
            for (const auto& item : laws.items) lawpass &= item.pass;
            line("9d T- and S-law residuals <= 1e-8" + at, lawpass);
            line("9dt transform check < 5 s" + at, seconds_since(t0) < 5.0);
        }
    }

    // ---- 10: numeric automorphy --------------------------------------------
    {
        NumericContext ctx{cd(0, 2), cd(0.1, 0), 12, 1e-6};
        CheckReport rep = check_jacobi_automorphy("rank6", parse_gamma("ST3S"), ctx, rat(12));
        line("10a E_{V_L,h} under ST3S at tau=2i, z=0.1: residual <= 1e-6", rep.pass,
             "residual " + std::to_string(rep.residual));
        NumericContext ctx2{cd(0, 1), cd(0.1, 0), 12, 1e-6};
        CheckReport rep2 = check_jacobi_automorphy("k3", parse_gamma("S"), ctx2, rat(40));
        line("10b 2phi_{0,1} under S at tau=i: residual <= 1e-6", rep2.pass,
             "residual " + std::to_string(rep2.residual));
    }

    // ---- 11: property suite -------------------------------------------------
    {
        std::mt19937 rng(424242);
        bool ring = true;
        for (int trial = 0; trial < 200 && ring; ++trial) {
            QSeries a = random_series(rng, false);
            QSeries b = random_series(rng, false);
            QSeries c = random_series(rng, false);
            ring = ((a + b) + c).agrees_with(a + (b + c)) && (a * b).agrees_with(b * a) &&
                   ((a * b) * c).agrees_with(a * (b * c)) &&
                   (a * (b + c)).agrees_with(a * b + a * c);
        }
        line("11a ring axioms on 200 random triples", ring);

        bool inv = true;
        for (int trial = 0; trial < 200 && inv; ++trial) {
            QSeries a = random_series(rng, true);
            QSeries p = a * a.inverse();
            inv = p.agrees_with(QSeries::constant(Rat(1), p.order()));
        }
        line("11b inversion round trips on 200 random unit-leading series", inv);

        bool sym = true;
        try {
            validate_jacobi_input(k3);
            validate_jacobi_input(r6genus);
            check_discriminant_symmetry(r6.trace.series, 2, rat(6, 24), "Z");
        } catch (const Error&) {
            sym = false;
        }
        line("11c discriminant symmetry on both examples", sym);

        bool flows = true;
        try {
            TraceFunction st = supertrace(r6.trace);   // both routes compared inside
            TraceFunction zs = sigma_twist(r6.trace);  // both routes compared inside
            TraceFunction eg = elliptic_genus(r6.trace);
            flows = supertrace(st).series.agrees_with(r6.trace.series) &&
                    eg.series.agrees_with(r6.genus.series);
        } catch (const Error&) {
            flows = false;
        }
        line("11d spectral-flow route consistency (the three flows, both routes)", flows);
    }

    std::printf("\n%s: %d failing line(s)\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}

#include <catch2/catch.hpp>

#include "qjf/theta.hpp"

using namespace qjf;

namespace {

// z -> -z: negate all zeta exponents.
JSeries flip_z(const JSeries& a) {
    JSeries::CompMap m;
    for (const auto& [k, c] : a.components()) m.emplace(-k, c);
    return JSeries::make(a.zdenom(), std::move(m), a.order());
}

// Independent eta oracle: q^(1/24) * prod_{n=1..N} (1 - q^n). Factors with
// n >= order only touch exponents >= order, so the finite product is exact.
QSeries eta_by_product(const Rat& order) {
    QSeries p = QSeries::constant(Rat(1), order);
    for (long long n = 1; rat(n) < order; ++n) {
        QSeries::TermMap t;
        t[0] = 1;
        t[n] = -1;
        p = p * QSeries::make(1, t, order);
    }
    return p.shifted(rat(1, 24));
}

} // namespace

TEST_CASE("theta_3(2 tau) by direct sum") {
    QSeries s = theta_char({Rat(0), Rat(0), 2, 2}, rat(12)).eval_z0();
    REQUIRE(s.coeff(Rat(0)) == 1);
    REQUIRE(s.coeff(Rat(1)) == 2);
    REQUIRE(s.coeff(Rat(2)) == 0);
    REQUIRE(s.coeff(Rat(4)) == 2);
    REQUIRE(s.coeff(Rat(9)) == 2);
}

TEST_CASE("characteristic shifts a -> a+1 and b -> b+1") {
    JSeries a = theta_char({rat(1, 3), Rat(0), 1, 3}, rat(10));
    JSeries b = theta_char({rat(4, 3), Rat(0), 1, 3}, rat(10));
    REQUIRE(a.agrees_with(b));

    // vartheta[a; b+1] = e^(2 pi i a) vartheta[a; b]
    PhasedJSeries p0 = theta_char_phased({rat(1, 6), rat(1, 2), 1, 3}, rat(10));
    PhasedJSeries p1 = theta_char_phased({rat(1, 6), rat(3, 2), 1, 3}, rat(10));
    REQUIRE(p1.turns - p0.turns == rat(1, 6));
    REQUIRE(p1.series.agrees_with(p0.series));
}

TEST_CASE("vartheta[-a;-b](-z) = vartheta[a;b](z)") {
    PhasedJSeries p = theta_char_phased({rat(1, 6), rat(1, 2), 1, 3}, rat(10));
    PhasedJSeries m = theta_char_phased({rat(-1, 6), rat(-1, 2), 1, 3}, rat(10));
    Rat dturn = m.turns - p.turns; // phases agree exactly: a*b = (-a)*(-b)
    REQUIRE(dturn == 0);
    REQUIRE(flip_z(m.series).agrees_with(p.series));
}

TEST_CASE("theta_{m,mu} equals the scaled characteristic series") {
    REQUIRE(theta_mmu(1, 0, rat(14)).agrees_with(theta_j(3, rat(14), 2, 2)));
    REQUIRE(theta_mmu(1, 1, rat(14)).agrees_with(theta_j(2, rat(14), 2, 2)));
    REQUIRE(theta_mmu(3, 2, rat(9)).agrees_with(theta_char({rat(2, 6), Rat(0), 6, 6}, rat(9))));
    REQUIRE(theta_mmu(1, 2, rat(14)).agrees_with(theta_mmu(1, 0, rat(14))));
    REQUIRE(theta_mmu(2, 5, rat(14)).agrees_with(theta_mmu(2, 1, rat(14))));
}

TEST_CASE("pentagonal eta and its powers") {
    QSeries eta = eta_power(1, rat(13));
    QSeries oracle = eta_by_product(rat(13));
    REQUIRE(eta.agrees_with(oracle));
    REQUIRE(eta.coeff(rat(1, 24)) == 1);
    REQUIRE(eta.coeff(rat(1, 24) + 1) == -1);
    REQUIRE(eta.coeff(rat(1, 24) + 2) == -1);
    REQUIRE(eta.coeff(rat(1, 24) + 5) == 1);
    REQUIRE(eta.coeff(rat(1, 24) + 7) == 1);

    QSeries eta3 = eta_power(3, rat(21));
    QSeries oracle3 = oracle * oracle * oracle;
    REQUIRE(eta3.agrees_with(oracle3));
    REQUIRE(eta3.coeff(rat(1, 8)) == 1);
    REQUIRE(eta3.coeff(rat(1, 8) + 1) == -3);
    REQUIRE(eta3.coeff(rat(1, 8) + 3) == 5);
    REQUIRE(eta3.coeff(rat(1, 8) + 6) == -7);
}

TEST_CASE("negative eta powers invert exactly") {
    QSeries prod = eta_power(-3, rat(20)) * eta_power(3, rat(20));
    REQUIRE(prod.order() >= rat(20));
    REQUIRE(prod.agrees_with(QSeries::constant(Rat(1), rat(20))));
}

TEST_CASE("theta_1 squared identity") {
    Rat O = rat(20);
    JSeries lhs = theta1_squared(O);
    JSeries rhs = theta_mmu(1, 0, O) * theta_const(2, 2, O) - theta_mmu(1, 1, O) * theta_const(3, 2, O);
    REQUIRE(lhs.order() >= O);
    REQUIRE(lhs.agrees_with(rhs));
}

TEST_CASE("theta constants satisfy the quartic relation") {
    Rat O = rat(20);
    QSeries t2 = theta_const(2, 1, O).pow(4, O);
    QSeries t3 = theta_const(3, 1, O).pow(4, O);
    QSeries t4 = theta_const(4, 1, O).pow(4, O);
    REQUIRE((t2 - t3 + t4).truncated(O).is_zero());
}

TEST_CASE("sixth power of the pentagonal characteristic") {
    // (vartheta[1/6;1/2](0;3tau))^6 = -eta(tau)^6
    Rat O = rat(20);
    PhasedJSeries v = theta_char_phased({rat(1, 6), rat(1, 2), 1, 3}, O);
    QSeries lhs_series = v.pow(6, O).real().eval_z0();
    QSeries rhs = -(eta_power(6, O));
    REQUIRE(lhs_series.agrees_with(rhs));

    PhasedJSeries v5 = theta_char_phased({rat(5, 6), rat(1, 2), 1, 3}, O);
    REQUIRE(v5.pow(6, O).real().eval_z0().agrees_with(rhs));
}

TEST_CASE("rank-0 lattice theta is the constant 1") {
    LatticeSpec spec;
    JSeries th = lattice_theta(spec, rat(5));
    REQUIRE(th.agrees_with(JSeries::from_qseries(QSeries::constant(Rat(1), rat(5)))));
}

TEST_CASE("indefinite gram matrices are rejected") {
    LatticeSpec spec;
    spec.gram = {{Rat(1), Rat(2)}, {Rat(2), Rat(2)}};
    spec.shift = {Rat(0), Rat(0)};
    spec.pairing = {Rat(0), Rat(0)};
    REQUIRE_THROWS_AS(lattice_theta(spec, rat(4)), NotPositiveDefinite);
}

TEST_CASE("coset lattice theta matches the sixth-power product") {
    // (sqrt(3) Z)^6 + r*h with h = (1/3,...,1/3) in the alpha basis:
    // theta^h_{L3 + r h}(z;tau) = (vartheta[r/3;0](z;3tau))^6
    Rat O = rat(6);
    for (long long r = 0; r <= 2; ++r) {
        LatticeSpec spec;
        spec.gram.assign(6, std::vector<Rat>(6, Rat(0)));
        for (int i = 0; i < 6; ++i) spec.gram[i][i] = 3;
        spec.shift.assign(6, rat(r, 3));
        spec.pairing.assign(6, rat(1, 3));
        JSeries lat = lattice_theta(spec, O);
        JSeries prod = theta_char({rat(r, 3), Rat(0), 1, 3}, O + 2).pow(6, O + 2).truncated(O);
        REQUIRE(prod.zdenom() == 1); // the sixth power restores integer zeta exponents
        REQUIRE(lat.zdenom() == 1);
        REQUIRE(lat.agrees_with(prod));
    }
}

TEST_CASE("scaled eta powers") {
    QSeries e4 = eta_power_scaled(1, 4, rat(10));
    REQUIRE(e4.coeff(rat(4, 24)) == 1);
    REQUIRE(e4.coeff(rat(4, 24) + 4) == -1);
    REQUIRE(e4.coeff(rat(4, 24) + 1) == 0);
}

TEST_CASE("recomputation at a higher order refines, never changes") {
    // golden series generated at two orders agree on every exponent below
    // the smaller order
    QSeries a = eta_power(3, rat(10));
    QSeries b = eta_power(3, rat(20));
    REQUIRE(b.truncated(a.order()).identical(a.truncated(a.order())));

    JSeries t1 = theta_mmu(1, 1, rat(7));
    REQUIRE(theta_mmu(1, 1, rat(15)).truncated(rat(7)).agrees_with(t1));
}

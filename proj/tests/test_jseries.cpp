#include <catch2/catch.hpp>

#include "qjf/jseries.hpp"
#include "qjf/theta.hpp"

using namespace qjf;

TEST_CASE("multiplication by one is the identity") {
    JSeries th = theta_mmu(1, 1, rat(10));
    JSeries one = JSeries::from_qseries(QSeries::constant(Rat(1), rat(10)));
    REQUIRE((th * one).agrees_with(th));
}

TEST_CASE("product is commutative and associative on truncations") {
    JSeries a = theta_mmu(1, 0, rat(8));
    JSeries b = theta_mmu(1, 1, rat(8));
    JSeries c = theta_j(2, rat(8));
    REQUIRE((a * b).agrees_with(b * a));
    REQUIRE(((a * b) * c).agrees_with(a * (b * c)));
}

TEST_CASE("zeta coefficient extraction") {
    JSeries th2 = theta_j(2, rat(10)); // components at half-integer zeta exponents
    REQUIRE(th2.zcoeff(Rat(0)).is_zero());
    REQUIRE(th2.zcoeff(Rat(1)).is_zero());
    QSeries c = th2.zcoeff(rat(1, 2));
    REQUIRE(c.coeff(rat(1, 8)) == 1);
    REQUIRE(th2.zcoeff(rat(1, 3)).is_zero());
}

TEST_CASE("z = 0 evaluation of an odd series vanishes") {
    // i zeta^(1/2) theta_1 has real coefficients; theta_1(0;tau) = 0 shows up
    // as exact cancellation between the components at r and -1-r.
    PhasedJSeries t1 = theta_char_phased({rat(1, 2), rat(1, 2), 1, 1}, rat(12));
    REQUIRE(t1.turns == rat(1, 4));
    REQUIRE(t1.series.eval_z0().is_zero());
}

TEST_CASE("z -> z + 1/2 flips the sign of odd components") {
    JSeries th11 = theta_mmu(1, 1, rat(12));
    REQUIRE(th11.shift_half().agrees_with(-th11));
    JSeries th10 = theta_mmu(1, 0, rat(12));
    REQUIRE(th10.shift_half().agrees_with(th10));
}

TEST_CASE("z -> z + 1/2 is an involution on integer grids") {
    JSeries a = theta_mmu(1, 0, rat(9)) + theta_mmu(1, 1, rat(9)) * rat(3);
    REQUIRE(a.shift_half().shift_half().agrees_with(a));
}

TEST_CASE("z -> z + 1/2 rejects fractional zeta grids") {
    JSeries th2 = theta_j(2, rat(6)); // zeta exponents in 1/2 + Z
    REQUIRE_THROWS_AS(th2.shift_half(), NonRealPhase);
}

TEST_CASE("z -> z + tau/2 relates the index-one thetas") {
    // q^(1/4) zeta * theta_{1,0}(z + tau/2) = theta_{1,1}(z)
    JSeries lhs = theta_mmu(1, 0, rat(16)).shift_half_tau().mul_monomial(Rat(1), rat(1, 4), Rat(1));
    REQUIRE(lhs.agrees_with(theta_mmu(1, 1, rat(10))));
}

TEST_CASE("z -> z + tau/2 leaves z-independent series alone") {
    JSeries c = JSeries::from_qseries(QSeries::monomial(rat(5), rat(3, 2), rat(9)));
    REQUIRE(c.shift_half_tau().agrees_with(c));
    REQUIRE(c.shift_half_tau().order() == rat(9));
}

TEST_CASE("conservative order under z -> z + tau/2") {
    JSeries th = theta_mmu(1, 0, rat(16)); // components at r = 0, +-2, +-4, ...
    JSeries flowed = th.shift_half_tau();
    // most negative stored component decides the loss
    Rat rmin = th.zexponent(th.components().begin()->first);
    REQUIRE(flowed.order() == rat(16) + rmin / 2);
}

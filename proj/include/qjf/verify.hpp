#ifndef QJF_VERIFY_HPP
#define QJF_VERIFY_HPP

// The exact-identity suite behind `verify`: every check is an identity of
// truncated series that must hold with zero tolerance. `only` restricts to
// one named check; `inject_bug` flips one sign inside the eta^3 splitting
// so the harness itself can be tested.

#include <string>
#include <vector>

#include "qjf/decomp.hpp"
#include "qjf/mock.hpp"
#include "qjf/svoa.hpp"
#include "qjf/theta.hpp"

namespace qjf {

struct VerifyItem {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool pass = true;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        items.push_back({name, ok, detail});
        pass = pass && ok;
    }
};

inline VerifyReport run_verify(const Rat& order, const std::string& only = "",
                               bool inject_bug = false) {
    if (order <= 0) throw Error("verify: order must be positive");
    VerifyReport rep;
    auto wanted = [&](const std::string& name) { return only.empty() || only == name; };

    if (wanted("theta1sq-id")) {
        JSeries lhs = theta1_squared(order);
        JSeries rhs = theta_mmu(1, 0, order) * theta_const(2, 2, order) -
                      theta_mmu(1, 1, order) * theta_const(3, 2, order);
        rep.add("theta1sq-id", lhs.agrees_with(rhs));
    }
    if (wanted("s0s1-eta")) {
        SPair s = make_spair(order);
        QSeries lhs = inject_bug ? s.s0 * theta_const(3, 2, order) - s.s1 * theta_const(2, 2, order)
                                 : s.s0 * theta_const(3, 2, order) + s.s1 * theta_const(2, 2, order);
        rep.add("s0s1-eta", lhs.agrees_with(eta_power(3, order)));
    }
    if (wanted("theta1-mu")) {
        JSeries lhs = theta1sq_mu(order);
        SPair s = make_spair(order + 1);
        JSeries rhs = theta_mmu(1, 0, order + 1) * s.s0 + theta_mmu(1, 1, order + 1) * s.s1;
        rep.add("theta1-mu", lhs.agrees_with(rhs));
    }
    if (wanted("theta-quartic")) {
        QSeries t2 = theta_const(2, 1, order).pow(4, order);
        QSeries t3 = theta_const(3, 1, order).pow(4, order);
        QSeries t4 = theta_const(4, 1, order).pow(4, order);
        rep.add("theta-quartic", (t2 - t3 + t4).is_zero());
    }
    if (wanted("hs0f") || wanted("hs1f")) {
        DecompResult res = decompose_full(build_k3(order));
        QSeries eta3 = eta_power(3, order + 1);
        SPair s = make_spair(order + 1);
        if (wanted("hs0f"))
            rep.add("hs0f", (eta3 * res.f0)
                                .agrees_with(res.chi * s.s0 +
                                             theta_const(2, 2, order + 1) * res.fmock));
        if (wanted("hs1f"))
            rep.add("hs1f", (eta3 * res.f1)
                                .agrees_with(res.chi * s.s1 -
                                             theta_const(3, 2, order + 1) * res.fmock));
    }
    if (wanted("hauptmodul-theta") || wanted("hauptmodul-eta")) {
        QSeries R = r_shift_of(build_k3(order).form);
        if (wanted("hauptmodul-theta")) {
            QSeries quot =
                (theta_const(3, 2, order + 1) * theta_const(4, 2, order + 1).inverse()).pow(4, order);
            rep.add("hauptmodul-theta",
                    R.agrees_with(quot * rat(32) - QSeries::constant(rat(16), order)));
        }
        if (wanted("hauptmodul-eta")) {
            QSeries quot =
                (eta_power_scaled(1, 4, order + 2) * eta_power(-1, order + 2)).pow(8, order);
            rep.add("hauptmodul-eta",
                    R.agrees_with(quot * rat(512) + QSeries::constant(rat(16), order)));
        }
    }
    if (wanted("s-oracle")) {
        bool ok = s_series(0, order).identical(s_series_oracle(0, order)) &&
                  s_series(1, order).identical(s_series_oracle(1, order));
        rep.add("s-oracle", ok);
    }
    if (rep.items.empty()) throw UnknownSeries("verify: no check named '" + only + "'");
    return rep;
}

} // namespace qjf

#endif

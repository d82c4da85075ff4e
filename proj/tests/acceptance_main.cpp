// Acceptance suite: each check prints exactly one PASS/FAIL line. Everything
// is exact arithmetic; the only tolerances are wall-clock budgets.

#include <chrono>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <latmat/latmat.hpp>

#include "support/oracles.hpp"

using namespace latmat;

namespace {

int g_failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int number, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << " ("
              << detail << ")\n"
              << std::flush;
    if (!ok) ++g_failures;
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f s", s);
    return buf;
}

// 1. Hong's 8-element set: det [S] = 0 exactly, class S_{3,8}, first failing
//    condition at step 8 with c_8 = 0, under one second.
void criterion_1() {
    auto t0 = Clock::now();
    CounterexampleReport rep = verify_counterexample(hong_set());
    double t = seconds_since(t0);
    bool ok = rep.gcd_closed && rep.singular && rep.det == 0 &&
              rep.class_label == std::optional<std::string>("S_{3,8}") &&
              rep.report->first_failure == std::optional<int>(8) &&
              rep.report->steps[7].condition_value == 0 && t < 1.0;
    report(1, "Hong counterexample", ok,
           "det=" + rat_to_string(rep.det) + ", class=" + rep.class_label.value_or("none") +
               ", " + fmt_seconds(t));
}

// 2. HWS 9-element set: det [S] = 0 exactly, under one second.
void criterion_2() {
    auto t0 = Clock::now();
    CounterexampleReport rep = verify_counterexample(hws_set());
    double t = seconds_since(t0);
    bool ok = rep.singular && rep.det == 0 && rep.gcd_closed && t < 1.0;
    report(2, "HWS counterexample", ok, "det=" + rat_to_string(rep.det) + ", " + fmt_seconds(t));
}

// 3. Enumeration counts for n = 1..7 plus the min-cover >= 3 filter counts,
//    with the n = 7 run finishing inside five minutes.
void criterion_3() {
    auto t0 = Clock::now();
    const std::vector<std::size_t> expected = {1, 1, 2, 5, 15, 53, 222};
    bool ok = true;
    std::vector<Poset> semis;
    for (int n = 1; n <= 7; ++n) {
        semis = enumerate_meet_semilattices(n);
        ok = ok && semis.size() == expected[n - 1];
        if (n == 5) ok = ok && filter_min_cover(semis, 3).size() == 1;
        if (n == 6) ok = ok && filter_min_cover(semis, 3).size() == 7;
        if (n == 7) ok = ok && filter_min_cover(semis, 3).size() == 47;
    }
    double t = seconds_since(t0);
    ok = ok && t < 300.0;
    report(3, "enumeration counts 1,1,2,5,15,53,222 and filters 1/7/47", ok, fmt_seconds(t));
}

// 4. Every catalog label's printed mobius vector matches recomputation.
void criterion_4() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string bad;
    for (const auto& label : SemilatticeCatalog::instance().labels())
        if (!verify_figure_mobius(label)) {
            ok = false;
            bad = label;
        }
    const auto* seven_i = SemilatticeCatalog::instance().find("7_I");
    ok = ok && seven_i && seven_i->mu_vector[0] == 4;
    ok = ok && SemilatticeCatalog::s_n2n_mu(7)[0] == 4;
    report(4, "class-diagram mobius vectors", ok,
           ok ? std::to_string(SemilatticeCatalog::instance().labels().size()) + " labels, " +
                    fmt_seconds(seconds_since(t0))
              : "first failure at " + bad);
}

// 5. 1000 seeded random gcd-closed sets, n <= 7, elements <= 10^6, f = N:
//    always invertible with nonzero exact determinant, under two minutes.
void criterion_5() {
    auto t0 = Clock::now();
    bool ok = true;
    Int bound(1000000);
    for (int i = 0; i < 1000 && ok; ++i) {
        int n = 1 + i % 7;
        std::vector<Int> elems = random_gcd_closed(n, bound, 50000 + i);
        ValuedSet vs(AmbientLattice::divisor(), elems, Valuation::natural());
        InvertibilityReport rep = invertibility_report(vs);
        Rat det = determinant(join_matrix(vs));
        ok = ok && rep.verdict == Verdict::Invertible && det != 0;
    }
    double t = seconds_since(t0);
    ok = ok && t < 120.0;
    report(5, "Bourque-Ligh holds on 1000 random gcd-closed sets, n <= 7", ok, fmt_seconds(t));
}

// 6. On all 53 + 222 classes with 20 random nonzero valuations each, the
//    prefix-convolution product equals the elimination determinant exactly,
//    and the all-conditions-nonzero verdict matches det != 0.
void criterion_6() {
    auto t0 = Clock::now();
    Rng rng(777);
    bool ok = true;
    long cases = 0;
    for (int n = 6; n <= 7 && ok; ++n)
        for (const Poset& p : enumerate_meet_semilattices(n)) {
            auto amb = AmbientLattice::from_meet_semilattice(p);
            std::vector<Int> all;
            for (int i = 0; i < p.n(); ++i) all.push_back(i);
            for (int rep = 0; rep < 20 && ok; ++rep) {
                std::vector<Rat> g = oracle::random_values(p.n(), rng);
                ValuedSet vs(amb, all, Valuation::table_abstract(g));
                PrefixConvolution pc = det_meet_via_convolution(vs, g);
                Rat det = determinant(meet_matrix(vs));
                bool all_nonzero = true;
                for (const Rat& c : pc.values) all_nonzero = all_nonzero && c != 0;
                ok = ok && pc.product == det && all_nonzero == (det != 0);
                ++cases;
            }
            if (!ok) break;
        }
    report(6, "prefix-convolution determinant oracle on all 275 classes", ok,
           std::to_string(cases) + " cases, " + fmt_seconds(seconds_since(t0)));
}

// 7. Factorization identity on 50 random gcd-closed sets (n <= 8) for
//    N, phi, sigma, and a random multiplicative valuation.
void criterion_7() {
    auto t0 = Clock::now();
    Rng rng(888);
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
        int n = 2 + i % 7;
        std::vector<Int> elems = random_gcd_closed(n, 100000, 90000 + i);
        std::vector<Valuation> fs = {Valuation::natural(), Valuation::euler_phi(),
                                     Valuation::sigma(),
                                     oracle::random_multiplicative_for(elems, rng)};
        for (const Valuation& f : fs) {
            ValuedSet vs(AmbientLattice::divisor(), elems, f);
            JoinFactorization fac = factorize_join(vs);
            RationalMatrix join = join_matrix(vs);
            Rat prod(1);
            for (const Rat& d : fac.delta) prod *= d;
            ok = ok && fac.reconstruct() == join &&
                 determinant(join) == prod * prod * determinant(fac.core);
        }
    }
    report(7, "factorization identity on 50 random gcd-closed sets x 4 valuations", ok,
           fmt_seconds(seconds_since(t0)));
}

// 8. 100 random valid parameter draws per inequality class give strictly
//    positive exact values equal to the independently computed c_n.
void criterion_8() {
    auto t0 = Clock::now();
    Rng rng(999);
    bool ok = true;
    long cases = 0;
    auto run = [&](InequalityClass cls, int n_for_gn2n) {
        for (int i = 0; i < 100 && ok; ++i) {
            InequalityParams params = oracle::draw_params(cls, n_for_gn2n, rng);
            InequalityInstance inst = class_inequality_instance(cls, params);
            ValuedSet vs(AmbientLattice::divisor(), inst.elements, Valuation::natural());
            ok = ok && inst.value > 0 && vs.is_meet_closed() &&
                 condition_values(vs).back() == inst.value;
            ++cases;
        }
    };
    for (int n = 4; n <= 8 && ok; ++n) run(InequalityClass::Gn2n, n);
    if (ok) run(InequalityClass::G36, 0);
    if (ok) run(InequalityClass::G37, 0);
    if (ok) run(InequalityClass::G471, 0);
    if (ok) run(InequalityClass::G472, 0);
    report(8, "inequality instances positive and equal to c_n", ok,
           std::to_string(cases) + " draws, " + fmt_seconds(seconds_since(t0)));
}

// 9. The template search recovers Hong's set within a minute.
void criterion_9() {
    auto t0 = Clock::now();
    SearchTemplate tmpl;
    tmpl.atom_bound = 5;
    tmpl.mult_bound = 60;
    auto found = search_singular(tmpl, 100);
    double t = seconds_since(t0);
    bool has_hong = false;
    for (const auto& s : found) has_hong = has_hong || s == hong_set();
    bool ok = has_hong && t < 60.0;
    report(9, "search recovers Hong's set", ok,
           std::to_string(found.size()) + " sets found, " + fmt_seconds(t));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                  : "ACCEPTANCE: " + std::to_string(g_failures) +
                                        " criteria failed")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}

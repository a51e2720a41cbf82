// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <qkig/brion_expansion.hpp>
#include <qkig/conditions.hpp>
#include <qkig/curve_neighborhoods.hpp>
#include <qkig/geometry_oracle.hpp>
#include <qkig/qk_ring.hpp>
#include <qkig/verify.hpp>

#include "oracles.hpp"

using namespace qkig;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr int kGeometryTrials = 500;

struct Outcome {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    void absorb(const Report& r) {
        checks += static_cast<std::size_t>(r.trials);
        for (const auto& f : r.failures) failures.push_back(r.suite + " n=" + std::to_string(r.n) + ": " + f);
    }
};

std::string tag(int n, Pair p) { return "n=" + std::to_string(n) + " " + to_string(p); }

Outcome chevalley_consistency() {
    Outcome o;
    for (int n = 2; n <= 12; ++n) o.absorb(check_chevalley(n));
    return o;
}

Outcome displayed_products() {
    Outcome o;
    for (int n = 2; n <= 12; ++n) {
        const Pair d2{2, 2 * n};
        o.expect(quantum_chevalley(n, d2) == oracle::divisor_times_2_2n(n), tag(n, d2) + " displayed (2,2n) product");
        for (int q2 = 2; q2 <= 2 * n - 1; ++q2) {
            const Pair v{1, q2};
            o.expect(quantum_chevalley(n, v) == oracle::divisor_times_1_q2(n, q2), tag(n, v) + " displayed (1,q2) product");
        }
        for (const Pair& v : basis_list(n)) {
            const RingElement x = quantum_chevalley(n, v);
            const auto support = x.q_support();
            o.expect(support.empty() || *support.rbegin() <= 1, tag(n, v) + " q^d part nonzero for d >= 2");
            o.expect(x.at_q_zero() == classical_chevalley(n, v), tag(n, v) + " q^0 part differs from O_u^v");
            if (v.a >= 2 && v != d2) o.expect(x.q_part(1).is_zero(), tag(n, v) + " q^1 part should vanish");
        }
    }
    return o;
}

Outcome seidel_algebra() {
    Outcome o;
    for (int n = 2; n <= 12; ++n) {
        o.absorb(check_seidel(n));
        for (const Pair& p : basis_list(n)) {
            o.expect(seidel(n, p) == oracle::seidel_regime(n, p), tag(n, p) + " Seidel regime");
        }
    }
    return o;
}

Outcome positivity() {
    Outcome o;
    for (int n = 2; n <= 12; ++n) o.absorb(check_signs(n));
    // Negative control: one flipped coefficient must be reported.
    RingElement flipped = product_c1(3, {2, 6}, {4, 6});
    flipped.add_term(0, {1, 4}, 4);
    o.expect(!sign_check(flipped, codim_schubert(3, {2, 6}), codim_schubert(3, {4, 6})).ok(),
             "flipped coefficient not detected");
    return o;
}

Outcome degree_and_interval() {
    Outcome o;
    for (int n = 2; n <= 12; ++n) o.absorb(check_interval(n));
    return o;
}

Outcome brion() {
    Outcome o;
    for (int n = 2; n <= 8; ++n) {
        o.absorb(check_brion(n));
        for (int p = 1; p <= n; ++p) o.expect(reconstruct_xuv(n, p) == oracle::xuv(n, p), "n=" + std::to_string(n) + " Xuv closed form");
    }
    return o;
}

Outcome geometry() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
        o.absorb(check_geometry(n, kGeometryTrials, kSeed));
        o.absorb(check_richardson_witness(n, kSeed));
        for (int d = 2; d <= 4; ++d) {
            const Report planted = membership_suite(n, d, 50, kSeed + 1, true);
            o.expect(!planted.ok(), "n=" + std::to_string(n) + " d=" + std::to_string(d) + " planted violation undetected");
        }
    }
    for (int n = 2; n <= 5; ++n) o.absorb(check_bruhat(n));
    return o;
}

Outcome special_instances() {
    Outcome o;
    const int n = 3;
    RingElement c1(n), c2(n);
    c1.add_term(0, {2, 4}, 1);
    c1.add_term(0, {1, 5}, 2);
    c1.add_term(0, {1, 4}, -2);
    c1.add_term(1, {5, 6}, -1);
    c1.add_term(1, {4, 6}, 1);
    c2.add_term(1, {2, 4}, 1);
    c2.add_term(1, {1, 5}, 2);
    c2.add_term(1, {1, 4}, -2);
    c2.add_term(2, {5, 6}, -1);
    c2.add_term(2, {4, 6}, 1);
    o.expect(satisfies_c1(n, {2, 6}, {4, 6}), "C1 predicate on (2,6),(4,6)");
    o.expect(satisfies_c2(n, {1, 3}, {3, 5}), "C2 predicate on (1,3),(3,5)");
    o.expect(product_special(n, {2, 6}, {4, 6}) == c1, "O_{2,6}*O_{4,6}: " + product_special(n, {2, 6}, {4, 6}).to_string());
    o.expect(product_special(n, {1, 3}, {3, 5}) == c2, "O_{1,3}*O_{3,5}: " + product_special(n, {1, 3}, {3, 5}).to_string());
    o.expect(oracle::c1(n, {2, 6}) == c1, "C1 closed form");
    o.expect(oracle::c2(n, {1, 3}, {3, 5}) == c2, "C2 closed form");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Chevalley consistency, n in [2,12]", chevalley_consistency},
        {2, "displayed Chevalley products, n in [2,12]", displayed_products},
        {3, "Seidel algebra and regimes, n in [2,12]", seidel_algebra},
        {4, "sign rule on Chevalley, Seidel and C1/C2 products, n in [2,12]", positivity},
        {5, "degree bound and q-support intervals, n in [2,12]", degree_and_interval},
        {6, "Brion reconstruction, n in [2,8]", brion},
        {7, "geometry oracle equivalences (n in [2,4], 500 trials per membership check; Bruhat to n=5)", geometry},
        {8, "n=3 C1/C2 instances", special_instances},
    };
    bool all = true;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = o.failures.empty();
        all = all && ok;
        std::printf("[%s] criterion %d: %s (%zu checks, %.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.title, o.checks, secs);
        for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::printf("       %s\n", o.failures[i].c_str());
    }
    std::printf("[N/A ] criterion 9: general structure constants outside the closed-form families and "
                "singularity statements are not reproducible here\n");
    std::fflush(stdout);
    return all ? 0 : 1;
}

#include "qkig/verify.hpp"

#include <algorithm>
#include <sstream>

#include "qkig/brion_expansion.hpp"
#include "qkig/curve_neighborhoods.hpp"
#include "qkig/qk_ring.hpp"

namespace qkig {

namespace {

Report make_report(const std::string& suite, int n) {
    Report r;
    r.suite = suite;
    r.n = n;
    return r;
}

void expect_equal(Report& r, const std::string& what, const RingElement& got, const RingElement& want) {
    ++r.trials;
    if (got == want) return;
    r.failures.push_back(what + ": got " + got.to_string() + ", expected " + want.to_string());
}

void expect(Report& r, bool ok, const std::string& what) {
    ++r.trials;
    if (!ok) r.failures.push_back(what);
}

std::string set_str(const std::set<int>& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int d : s) {
        os << (first ? "" : ",") << d;
        first = false;
    }
    os << "}";
    return os.str();
}

void check_signs_of(Report& r, const std::string& what, const RingElement& x, int cu, int cv) {
    const SignReport s = sign_check(x, cu, cv);
    ++r.trials;
    for (const SignViolation& v : s.violations) {
        r.failures.push_back(what + ": sign violation at q^" + std::to_string(v.term.q) + " O_" +
                             to_string(v.term.pair) + " coeff " + v.coeff.str());
    }
}

void check_support_of(Report& r, const std::string& what, const RingElement& x, const std::set<int>& predicted) {
    const auto s = x.q_support();
    expect(r, !s.empty() && *s.rbegin() <= 2 && is_interval(s), what + ": support " + set_str(s) + " not an interval in {0,1,2}");
    expect(r, s == predicted, what + ": support " + set_str(s) + " but q_support_product gives " + set_str(predicted));
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"chevalley", "seidel", "signs", "interval",
                                                "brion",     "geometry", "bruhat"};
    return names;
}

std::vector<std::pair<Pair, Pair>> special_family_pairs(int n) {
    std::vector<std::pair<Pair, Pair>> out;
    const auto basis = basis_list(n);
    for (const Pair& u : basis)
        for (const Pair& v : basis)
            if (satisfies_c1(n, u, v) || satisfies_c2(n, u, v)) out.emplace_back(u, v);
    return out;
}

Report check_chevalley(int n) {
    Report r = make_report("chevalley", n);
    for (const Pair& v : basis_list(n)) {
        const std::string tag = "n=" + std::to_string(n) + " v=" + to_string(v);
        ChevalleyTrace trace;
        const RingElement qc = quantum_chevalley(n, v, &trace);
        expect_equal(r, tag + " q=0 reduction", qc.at_q_zero(), classical_chevalley(n, v));
        expect_equal(r, tag + " q^1 part", qc.q_part(1), chevalley_q_part_geometric(n, v));
        for (int d : qc.q_support()) expect(r, d <= 1, tag + ": q^" + std::to_string(d) + " term present");
        expect(r, trace.min_first_index >= 0, tag + ": produced a first index <= -1");
        for (const NormalizedTerm& z : trace.zeros) {
            expect(r, z.reason != ZeroReason::antidiagonal, tag + ": produced an antidiagonal index");
        }
    }
    return r;
}

Report check_seidel(int n) {
    Report r = make_report("seidel", n);
    expect_equal(r, "seidel of the unit", seidel(n, unit_pair(n)), RingElement::basis(n, seidel_pair(n)));
    for (const Pair& p : basis_list(n)) {
        const std::string tag = "n=" + std::to_string(n) + " p=" + to_string(p);
        const RingElement x = RingElement::basis(n, p);
        const RingElement s = seidel(x);
        expect_equal(r, tag + " seidel^2", seidel(s), x.shifted(2));
        expect_equal(r, tag + " commutation", quantum_chevalley(s), seidel(quantum_chevalley(x)));
        const SeidelNeighborhood nb = seidel_neighborhood(n, p);
        expect_equal(r, tag + " curve neighborhood", s, RingElement::basis(n, nb.image, nb.d_min));
    }
    return r;
}

Report check_signs(int n) {
    Report r = make_report("signs", n);
    const int cs = codim_schubert(n, seidel_pair(n));
    for (const Pair& v : basis_list(n)) {
        const std::string tag = "n=" + std::to_string(n) + " v=" + to_string(v);
        check_signs_of(r, tag + " chevalley", quantum_chevalley(n, v), 1, codim_schubert(n, v));
        check_signs_of(r, tag + " seidel", seidel(n, v), cs, codim_schubert(n, v));
    }
    for (const auto& [u, v] : special_family_pairs(n)) {
        check_signs_of(r, "n=" + std::to_string(n) + " u=" + to_string(u) + " v=" + to_string(v),
                       product_special(n, u, v), codim_schubert(n, u), codim_schubert(n, v));
    }
    return r;
}

Report check_interval(int n) {
    Report r = make_report("interval", n);
    const auto basis = basis_list(n);
    for (const Pair& v : basis) {
        const std::string tag = "n=" + std::to_string(n) + " v=" + to_string(v);
        check_support_of(r, tag + " chevalley", quantum_chevalley(n, v), q_support_product(n, divisor_pair(n), v));
        check_support_of(r, tag + " seidel", seidel(n, v), q_support_product(n, seidel_pair(n), v));
    }
    for (const auto& [u, v] : special_family_pairs(n)) {
        check_support_of(r, "n=" + std::to_string(n) + " u=" + to_string(u) + " v=" + to_string(v),
                         product_special(n, u, v), q_support_product(n, u, v));
    }
    for (const Pair& u : basis)
        for (const Pair& v : basis) {
            ++r.trials;
            try {
                const auto s = q_support_product(n, u, v);
                if (s != q_support_product(n, v, u)) {
                    r.failures.push_back("q_support_product not symmetric at u=" + to_string(u) + " v=" + to_string(v));
                }
            } catch (const std::logic_error& e) {
                r.failures.push_back(e.what());
            }
        }
    return r;
}

Report check_brion(int n) {
    Report r = make_report("brion", n);
    const BasisChange bc = ideal_to_schubert(n);
    const std::size_t m = bc.basis.size();
    bool identity = true;
    for (std::size_t i = 0; i < m && identity; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Integer s = 0;
            for (std::size_t k = 0; k < m; ++k) s += bc.zeta[i][k] * bc.inverse[k][j];
            if (s != (i == j ? 1 : 0)) {
                identity = false;
                break;
            }
        }
    expect(r, identity, "n=" + std::to_string(n) + ": zeta * inverse != identity");
    for (int p = 1; p <= n; ++p) {
        for (const Pair& w : bc.basis) {
            const int c = chi_xuv(n, p, w);
            expect(r, c >= 0 && c <= 2, "chi_xuv out of {0,1,2}");
        }
        expect_equal(r, "n=" + std::to_string(n) + " p=" + std::to_string(p) + " X_u^v", reconstruct_xuv(bc, p),
                     richardson_special_expand(n, p));
    }
    for (const Pair& v : bc.basis) {
        expect_equal(r, "n=" + std::to_string(n) + " v=" + to_string(v) + " classical Chevalley",
                     reconstruct_classical_chevalley(bc, v), classical_chevalley(n, v));
    }
    return r;
}

Report check_bruhat(int n) {
    Report r = make_report("bruhat", n);
    const auto basis = basis_list(n);
    std::vector<std::vector<Pair>> fixed;
    for (const Pair& p : basis) {
        fixed.push_back(fixed_points_geometric(n, p));
        expect(r, fixed.back() == fixed_points(n, p), "fixed points of " + to_string(p) + " disagree");
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const bool oracle = std::includes(fixed[j].begin(), fixed[j].end(), fixed[i].begin(), fixed[i].end(),
                                              BasisLess{});
            expect(r, oracle == bruhat_leq(n, basis[i], basis[j]),
                   "bruhat mismatch " + to_string(basis[i]) + " <= " + to_string(basis[j]));
        }
    return r;
}

Report check_richardson_witness(int n, std::uint64_t seed) {
    Report r = make_report("richardson_witness", n);
    r.seed = seed;
    const auto basis = basis_list(n);
    std::uint64_t k = 0;
    for (const Pair& u : basis)
        for (const Pair& v : basis) {
            const auto w = richardson_witness(n, u, v, derive_seed(seed, static_cast<std::uint64_t>(n), 0, k++));
            expect(r, w.has_value() == richardson_nonempty(n, u, v),
                   "richardson witness for u=" + to_string(u) + " v=" + to_string(v) + " disagrees");
        }
    return r;
}

Report check_geometry(int n, int trials, std::uint64_t seed) {
    Report r = make_report("geometry", n);
    r.seed = seed;
    for (int d = 2; d <= 4; ++d) {
        const Report m = membership_suite(n, d, trials, seed);
        r.trials += m.trials;
        r.accepted += m.accepted;
        r.rejected += m.rejected;
        r.failures.insert(r.failures.end(), m.failures.begin(), m.failures.end());
        if (n >= 3 && d <= 3 && (m.accepted == 0 || m.rejected == 0)) {
            r.failures.push_back("d=" + std::to_string(d) + ": only one outcome represented");
        }
        if (m.accepted + m.rejected != trials) r.failures.push_back("trial count mismatch");
    }
    return r;
}

std::vector<Report> run_suite(const std::string& name, const SuiteOptions& opt) {
    std::vector<Report> out;
    if (name == "all") {
        for (const std::string& s : suite_names()) {
            auto part = run_suite(s, opt);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    const int hi = std::max(2, opt.n_max);
    for (int n = 2; n <= hi; ++n) {
        if (name == "chevalley") out.push_back(check_chevalley(n));
        if (name == "seidel") out.push_back(check_seidel(n));
        if (name == "signs") out.push_back(check_signs(n));
        if (name == "interval") out.push_back(check_interval(n));
        if (name == "brion") out.push_back(check_brion(n));
        if (name == "bruhat") out.push_back(check_bruhat(n));
        if (name == "geometry" && n <= 4) {
            out.push_back(check_geometry(n, opt.trials, opt.seed));
            out.push_back(check_richardson_witness(n, opt.seed));
        }
    }
    for (Report& r : out) r.seed = opt.seed;
    return out;
}

}  // namespace qkig

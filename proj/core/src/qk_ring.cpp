#include "qkig/qk_ring.hpp"

#include <algorithm>
#include <limits>

#include "qkig/conditions.hpp"

namespace qkig {

const char* to_string(ZeroReason r) noexcept {
    switch (r) {
        case ZeroReason::none: return "none";
        case ZeroReason::antidiagonal: return "antidiagonal";
        case ZeroReason::out_of_range: return "out_of_range";
        case ZeroReason::degenerate: return "degenerate";
    }
    return "unknown";
}

NormalizedTerm normalize_extended(int n, int a, int b) {
    require_ambient(n);
    if (a >= b) {
        throw std::invalid_argument("normalize_extended requires a < b (a=" + std::to_string(a) +
                                    ", b=" + std::to_string(b) + ")");
    }
    const int m = 2 * n;
    NormalizedTerm t;
    while (true) {
        if (is_valid_pair(n, a, b)) {
            t.pair = Pair{a, b};
            return t;
        }
        if (((a + b) % m + m) % m == 1) {
            t.reason = ZeroReason::antidiagonal;
            return t;
        }
        if (a >= 1) {
            // a < b and a+b != 1 mod 2n, so the only remaining failure is b > 2n.
            t.reason = ZeroReason::out_of_range;
            return t;
        }
        const int na = b;
        const int nb = a + m;
        if (na >= nb) {
            t.reason = ZeroReason::degenerate;
            return t;
        }
        a = na;
        b = nb;
        ++t.shift;
    }
}

int chevalley_case(int n, Pair v, bool quantum) {
    require_valid(n, v);
    const int q1 = v.a, q2 = v.b;
    if (q1 == q2 - 1) return 1;
    // For n = 2 the pair (2,4) has q1 = 2, q2 = 2n and q1 = n, q2 = n+2; the quantum case 41 wins.
    if (quantum && q1 == 2 && q2 == 2 * n) return 41;
    if (q1 == n && q2 == n + 2) return 5;
    if (q1 + q2 == 2 * n + 2) return 4;
    if (q1 + q2 == 2 * n + 3) return 3;
    return 2;
}

std::vector<RawTerm> chevalley_raw_terms(int n, Pair v, bool quantum) {
    const int q1 = v.a, q2 = v.b;
    switch (chevalley_case(n, v, quantum)) {
        case 1:
            return {{1, q1 - 1, q2}};
        case 2:
            return {{1, q1 - 1, q2}, {1, q1, q2 - 1}, {-1, q1 - 1, q2 - 1}};
        case 3:
            return {{1, q1 - 1, q2},
                    {1, q1, q2 - 1},
                    {-1, q1 - 1, q2 - 2},
                    {-1, q1 - 2, q2 - 1},
                    {1, q1 - 2, q2 - 2}};
        case 4:
            return {{2, q1 - 1, q2 - 1}, {1, q1 - 2, q2},      {1, q1, q2 - 2},
                    {-2, q1 - 2, q2 - 1}, {-2, q1 - 1, q2 - 2}, {1, q1 - 2, q2 - 2}};
        case 41:
            return {{2, q1 - 1, q2 - 1},
                    {1, q1, q2 - 2},
                    {-2, q1 - 1, q2 - 2},
                    {-1, q1 - 2, q2 - 1},
                    {1, q1 - 2, q2 - 2}};
        case 5:
            return {{2, q1 - 1, q2 - 1},
                    {1, q1 - 2, q2},
                    {-2, q1 - 2, q2 - 1},
                    {-1, q1 - 1, q2 - 2},
                    {1, q1 - 2, q2 - 2}};
        default:
            throw std::logic_error("unreachable Chevalley case");
    }
}

namespace {

// O_{b,b} is read as the variety {V subset E_b} = X_{b-1,b}. Only reached by case 41 at n = 2.
RawTerm resolve_degenerate(RawTerm t) {
    if (t.a == t.b) t.a = t.b - 1;
    if (t.a > t.b) throw std::logic_error("Chevalley produced a > b");
    return t;
}

RingElement evaluate_chevalley(int n, Pair v, bool quantum, ChevalleyTrace* trace) {
    RingElement out(n);
    int min_a = std::numeric_limits<int>::max();
    for (RawTerm raw : chevalley_raw_terms(n, v, quantum)) {
        min_a = std::min(min_a, raw.a);
        const RawTerm t = resolve_degenerate(raw);
        if (!quantum) {
            if (is_valid_pair(n, t.a, t.b)) out.add_term(0, {t.a, t.b}, t.coeff);
            continue;
        }
        if (t.a <= -1) throw std::logic_error("quantum Chevalley produced a first index <= -1");
        const NormalizedTerm nt = normalize_extended(n, t.a, t.b);
        if (nt.is_zero()) {
            if (trace) trace->zeros.push_back(nt);
            continue;
        }
        out.add_term(nt.shift, *nt.pair, t.coeff);
    }
    if (trace) trace->min_first_index = min_a;
    return out;
}

template <class F>
RingElement apply_termwise(const RingElement& x, F&& op) {
    RingElement out(x.n());
    for (const auto& [m, c] : x.terms()) {
        RingElement image = op(x.n(), m.pair);
        image *= c;
        out += image.shifted(m.q);
    }
    return out;
}

}  // namespace

RingElement classical_chevalley(int n, Pair v) { return evaluate_chevalley(n, v, false, nullptr); }

RingElement classical_chevalley(const RingElement& x) {
    return apply_termwise(x, [](int n, Pair p) { return classical_chevalley(n, p); });
}

RingElement quantum_chevalley(int n, Pair v, ChevalleyTrace* trace) {
    if (trace) *trace = ChevalleyTrace{};
    return evaluate_chevalley(n, v, true, trace);
}

RingElement quantum_chevalley(const RingElement& x) {
    return apply_termwise(x, [](int n, Pair p) { return quantum_chevalley(n, p); });
}

RingElement seidel(int n, Pair p) {
    require_valid(n, p);
    const NormalizedTerm t = normalize_extended(n, p.a - n, p.b - n);
    if (t.is_zero()) {
        throw std::logic_error("Seidel image of " + to_string(p) + " normalized to zero (" +
                               to_string(t.reason) + ")");
    }
    return RingElement::basis(n, *t.pair, t.shift);
}

RingElement seidel(const RingElement& x) {
    return apply_termwise(x, [](int n, Pair p) { return seidel(n, p); });
}

RingElement richardson_special_expand(int n, int p) {
    require_ambient(n);
    if (p <= 0 || p >= 2 * n) {
        throw std::invalid_argument("richardson_special_expand requires 1 <= p <= 2n-1 (p=" +
                                    std::to_string(p) + ")");
    }
    if (p > n) p = 2 * n - p;
    RingElement out(n);
    auto add = [&](int coeff, int a, int b) {
        if (is_valid_pair(n, a, b)) out.add_term(0, {a, b}, coeff);
    };
    if (p < n) {
        add(1, p, 2 * n - p);
        for (int k = 1; k <= p - 1; ++k) add(2, k, 2 * n - k);
        add(-2, p - 1, 2 * n - p);
    } else {
        for (int k = 1; k <= n - 1; ++k) add(2, k, 2 * n - k);
        add(-1, n - 1, n);
    }
    for (int k = 1; k <= p - 2; ++k) add(-3, k, 2 * n - 1 - k);
    for (int k = 1; k <= p - 2; ++k) add(1, k, 2 * n - 2 - k);
    return out;
}

RingElement product_c1(int n, Pair u, Pair v) {
    if (!satisfies_c1(n, u, v)) {
        throw UnsupportedFamily("condition C1 fails for u=" + to_string(u) + ", v=" + to_string(v));
    }
    RingElement out = richardson_special_expand(n, std::min(u.a, v.a));
    out.add_term(1, unit_pair(n), -1);
    out.add_term(1, divisor_pair(n), 1);
    return out;
}

RingElement product_c2(int n, Pair u, Pair v) {
    if (!satisfies_c2(n, u, v)) {
        throw UnsupportedFamily("condition C2 fails for u=" + to_string(u) + ", v=" + to_string(v));
    }
    RingElement out = richardson_special_expand(n, u.a + v.a).shifted(1);
    out.add_term(2, unit_pair(n), -1);
    out.add_term(2, divisor_pair(n), 1);
    return out;
}

RingElement product_special(int n, Pair u, Pair v) {
    if (satisfies_c1(n, u, v)) return product_c1(n, u, v);
    if (satisfies_c2(n, u, v)) return product_c2(n, u, v);
    throw UnsupportedFamily("unsupported family: u=" + to_string(u) + ", v=" + to_string(v) +
                            " satisfy neither C1 nor C2");
}

RingElement chevalley_q_part_geometric(int n, Pair v) {
    require_valid(n, v);
    RingElement out(n);
    if (v.a == 1 && v.b <= 2 * n - 1) {
        out.add_term(1, {v.b, 2 * n}, 1);
        if (is_valid_pair(n, v.b - 1, 2 * n)) out.add_term(1, {v.b - 1, 2 * n}, -1);
    } else if (v.a == 2 && v.b == 2 * n) {
        out.add_term(1, unit_pair(n), -1);
        out.add_term(1, divisor_pair(n), 1);
    }
    return out;
}

SignReport sign_check(const RingElement& x, int cu, int cv) {
    SignReport r;
    const int n = x.n();
    for (const auto& [m, c] : x.terms()) {
        const int e = cu + cv + codim_schubert(n, m.pair) + m.q * c1_degree(n);
        const bool negative_expected = (e % 2) != 0;
        if ((negative_expected && c > 0) || (!negative_expected && c < 0)) {
            r.violations.push_back({m, c});
        }
    }
    return r;
}

RingElement apply_word(const RingElement& x, const std::vector<WordStep>& word) {
    RingElement cur = x;
    for (const WordStep& s : word) {
        switch (s.letter) {
            case Letter::divisor: cur = quantum_chevalley(cur); break;
            case Letter::seidel: cur = seidel(cur); break;
            case Letter::scalar: cur *= s.scalar; break;
            case Letter::q: cur = cur.shifted(1); break;
        }
    }
    return cur;
}

}  // namespace qkig

#pragma once

// Closed-form multiplication operators in QK(IG(2,2n)).

#include <optional>
#include <stdexcept>
#include <vector>

#include "qkig/ring_element.hpp"

namespace qkig {

enum class ZeroReason {
    none,
    antidiagonal,  // a+b = 1 mod 2n
    out_of_range,  // b > 2n with a >= 1
    degenerate,    // a = b reached by the shift
};

[[nodiscard]] const char* to_string(ZeroReason r) noexcept;

struct NormalizedTerm {
    int shift = 0;
    std::optional<Pair> pair;
    ZeroReason reason = ZeroReason::none;

    [[nodiscard]] bool is_zero() const noexcept { return !pair.has_value(); }
};

// Extended index O_{a,b}: valid pairs map to themselves, a <= 0 trades (a,b) for q*(b, a+2n).
// Requires a < b.
[[nodiscard]] NormalizedTerm normalize_extended(int n, int a, int b);

class UnsupportedFamily : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A raw term c*O_{a,b} of a Chevalley expansion, before index evaluation.
struct RawTerm {
    int coeff;
    int a;
    int b;
};

// Which Chevalley case applies: 1, 2, 3, 4, 5, or 41 for the quantum-only case q1 = 2, q2 = 2n.
[[nodiscard]] int chevalley_case(int n, Pair v, bool quantum);
[[nodiscard]] std::vector<RawTerm> chevalley_raw_terms(int n, Pair v, bool quantum);

struct ChevalleyTrace {
    int min_first_index = 0;           // smallest a among produced raw indices
    std::vector<NormalizedTerm> zeros;  // raw indices that evaluated to zero
};

[[nodiscard]] RingElement classical_chevalley(int n, Pair v);
[[nodiscard]] RingElement classical_chevalley(const RingElement& x);
[[nodiscard]] RingElement quantum_chevalley(int n, Pair v, ChevalleyTrace* trace = nullptr);
[[nodiscard]] RingElement quantum_chevalley(const RingElement& x);

// Multiplication by O_{n-1,n}.
[[nodiscard]] RingElement seidel(int n, Pair p);
[[nodiscard]] RingElement seidel(const RingElement& x);

// K-class of X_u cap X^v for u = (p,2n), v = (2n-p,2n); p in [1, 2n-1].
[[nodiscard]] RingElement richardson_special_expand(int n, int p);

[[nodiscard]] RingElement product_c1(int n, Pair u, Pair v);
[[nodiscard]] RingElement product_c2(int n, Pair u, Pair v);
// C1 or C2 product; throws UnsupportedFamily otherwise.
[[nodiscard]] RingElement product_special(int n, Pair u, Pair v);

// q^1-part of O_{2n-2,2n} * O_v from the curve-neighborhood description.
[[nodiscard]] RingElement chevalley_q_part_geometric(int n, Pair v);

struct SignViolation {
    Monomial term;
    Integer coeff;
};

struct SignReport {
    std::vector<SignViolation> violations;
    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

// Checks (-1)^(cu + cv + cw + d(2n-1)) * coeff >= 0 on every term.
[[nodiscard]] SignReport sign_check(const RingElement& x, int cu, int cv);

[[nodiscard]] inline std::set<int> q_support(const RingElement& x) { return x.q_support(); }

enum class Letter { divisor, seidel, scalar, q };

struct WordStep {
    Letter letter;
    Integer scalar = 1;  // used by Letter::scalar only
};

// Applies multiplication operators left to right.
[[nodiscard]] RingElement apply_word(const RingElement& x, const std::vector<WordStep>& word);

}  // namespace qkig

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <set>
#include <string>

#include "qkig/schubert_index.hpp"

namespace qkig {

using Integer = boost::multiprecision::cpp_int;

struct Monomial {
    int q = 0;
    Pair pair;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: (q, a+b, a).
struct MonomialLess {
    bool operator()(const Monomial& x, const Monomial& y) const noexcept {
        if (x.q != y.q) return x.q < y.q;
        return BasisLess{}(x.pair, y.pair);
    }
};

// Finitely supported integer combination of q^d O_{a,b}. Zero coefficients are never stored.
class RingElement {
public:
    using TermMap = std::map<Monomial, Integer, MonomialLess>;

    explicit RingElement(int n);

    static RingElement basis(int n, Pair p, int q = 0, const Integer& coeff = 1);
    static RingElement one(int n) { return basis(n, unit_pair(n)); }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] Integer coeff(int q, Pair p) const;

    // Adds coeff * q^q O_p. Validates p and q >= 0.
    void add_term(int q, Pair p, const Integer& coeff);

    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const Integer& scalar);

    [[nodiscard]] RingElement shifted(int k) const;  // times q^k
    [[nodiscard]] RingElement q_part(int d) const;   // the q^d terms, still carrying q^d
    [[nodiscard]] RingElement at_q_zero() const { return q_part(0); }
    [[nodiscard]] std::set<int> q_support() const;

    // Text notation, e.g. "2*O_{1,5} + O_{2,4} - q*O_{5,6}".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const RingElement& x, const RingElement& y) {
        return x.n_ == y.n_ && x.terms_ == y.terms_;
    }

private:
    void check_same_ambient(const RingElement& other) const;

    int n_;
    TermMap terms_;
};

[[nodiscard]] RingElement operator+(RingElement x, const RingElement& y);
[[nodiscard]] RingElement operator-(RingElement x, const RingElement& y);
[[nodiscard]] RingElement operator-(RingElement x);
[[nodiscard]] RingElement operator*(const Integer& scalar, RingElement x);

[[nodiscard]] bool is_interval(const std::set<int>& s);

}  // namespace qkig

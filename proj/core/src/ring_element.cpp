#include "qkig/ring_element.hpp"

#include <sstream>

namespace qkig {

RingElement::RingElement(int n) : n_(n) { require_ambient(n); }

RingElement RingElement::basis(int n, Pair p, int q, const Integer& coeff) {
    RingElement e(n);
    e.add_term(q, p, coeff);
    return e;
}

Integer RingElement::coeff(int q, Pair p) const {
    auto it = terms_.find(Monomial{q, p});
    return it == terms_.end() ? Integer(0) : it->second;
}

void RingElement::add_term(int q, Pair p, const Integer& coeff) {
    require_valid(n_, p);
    if (q < 0) throw std::invalid_argument("negative q-power " + std::to_string(q));
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(Monomial{q, p}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void RingElement::check_same_ambient(const RingElement& other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("ring elements over different ambients: n=" + std::to_string(n_) +
                                    " vs n=" + std::to_string(other.n_));
    }
}

RingElement& RingElement::operator+=(const RingElement& other) {
    check_same_ambient(other);
    for (const auto& [m, c] : other.terms_) add_term(m.q, m.pair, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    check_same_ambient(other);
    for (const auto& [m, c] : other.terms_) add_term(m.q, m.pair, -c);
    return *this;
}

RingElement& RingElement::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
    } else {
        for (auto& [m, c] : terms_) c *= scalar;
    }
    return *this;
}

RingElement RingElement::shifted(int k) const {
    RingElement out(n_);
    for (const auto& [m, c] : terms_) out.add_term(m.q + k, m.pair, c);
    return out;
}

RingElement RingElement::q_part(int d) const {
    RingElement out(n_);
    for (const auto& [m, c] : terms_)
        if (m.q == d) out.terms_.emplace(m, c);
    return out;
}

std::set<int> RingElement::q_support() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_) out.insert(m.q);
    return out;
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Integer mag = neg ? Integer(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (mag != 1) os << mag << "*";
        if (m.q == 1) os << "q*";
        if (m.q > 1) os << "q^" << m.q << "*";
        os << "O_{" << m.pair.a << "," << m.pair.b << "}";
    }
    return os.str();
}

RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
RingElement operator-(RingElement x) { return x *= Integer(-1); }
RingElement operator*(const Integer& scalar, RingElement x) { return x *= scalar; }

bool is_interval(const std::set<int>& s) {
    if (s.empty()) return true;
    return *s.rbegin() - *s.begin() + 1 == static_cast<int>(s.size());
}

}  // namespace qkig

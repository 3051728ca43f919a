#include "gnf/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "gnf/error.hpp"

namespace gnf {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidWeight: return "invalid-weight";
        case ErrorKind::DegreeTooSmall: return "degree-too-small";
        case ErrorKind::DegreeMismatch: return "degree-mismatch";
        case ErrorKind::SizeMismatch: return "size-mismatch";
        case ErrorKind::SingularPairing: return "singular-pairing";
        case ErrorKind::InconsistentSolve: return "inconsistent-solve";
        case ErrorKind::WitnessNotFound: return "rule-iii-witness-not-found";
        case ErrorKind::SingularJointSystem: return "singular-joint-system";
        case ErrorKind::InvalidParams: return "invalid-params";
        case ErrorKind::OutOfRange: return "out-of-range";
        case ErrorKind::Parse: return "parse-error";
        case ErrorKind::NotQuasiHomogeneous: return "hamiltonian-not-quasi-homogeneous";
        case ErrorKind::OrderTooLow: return "perturbation-order-too-low";
        case ErrorKind::Validation: return "validation-error";
    }
    return "unknown";
}

Weight::Weight(int gamma1, int gamma2) : g1_(gamma1), g2_(gamma2) {
    if (gamma1 < 1 || gamma2 < 1) {
        throw Error(ErrorKind::InvalidWeight, "weights must be positive integers");
    }
    if (std::gcd(gamma1, gamma2) != 1) {
        throw Error(ErrorKind::InvalidWeight,
                    "weight-not-coprime: gcd(" + std::to_string(gamma1) + ", " +
                        std::to_string(gamma2) + ") != 1");
    }
}

int gdeg(Monomial m, const Weight& w) { return m.p1 * w.gamma1() + m.p2 * w.gamma2(); }

std::vector<Monomial> monomials_of_degree(int k, const Weight& w) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    for (int p1 = 0; p1 * w.gamma1() <= k; ++p1) {
        const int rest = k - p1 * w.gamma1();
        if (rest % w.gamma2() == 0) out.push_back({p1, rest / w.gamma2()});
    }
    return out;
}

Integer factorial(int n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace {

// n (n-1) ... (n-k+1); zero when k > n.
Integer falling(int n, int k) {
    if (k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
}

}  // namespace

Polynomial::Polynomial(const Rational& constant) { add_term(Monomial{0, 0}, constant); }

Polynomial::Polynomial(Monomial m, const Rational& c) { add_term(m, c); }

Rational Polynomial::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(Monomial m, const Rational& c) {
    Rational v = c;
    v.canonicalize();
    if (v == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    Rational s = c;
    s.canonicalize();
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term({ma.p1 + mb.p1, ma.p2 + mb.p2}, ca * cb);
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    return derivative(var == 1 ? Monomial{1, 0} : Monomial{0, 1});
}

Polynomial Polynomial::derivative(Monomial order) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.p1 < order.p1 || m.p2 < order.p2) continue;
        Rational f = c * falling(m.p1, order.p1) * falling(m.p2, order.p2);
        r.add_term({m.p1 - order.p1, m.p2 - order.p2}, f);
    }
    return r;
}

Polynomial Polynomial::apply_as_operator(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    for (const auto& [m, c] : p.terms_) r += q.derivative(m) * c;
    return r;
}

Polynomial Polynomial::multiply_truncated(const Polynomial& a, const Polynomial& b, const Weight& w,
                                          int max_gdeg) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_) {
        const int da = gdeg(ma, w);
        if (da > max_gdeg) continue;
        for (const auto& [mb, cb] : b.terms_) {
            if (da + gdeg(mb, w) > max_gdeg) continue;
            r.add_term({ma.p1 + mb.p1, ma.p2 + mb.p2}, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::truncated(const Weight& w, int max_gdeg) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (gdeg(m, w) <= max_gdeg) r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
}

Polynomial Polynomial::homogeneous_part(const Weight& w, int k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (gdeg(m, w) == k) r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
}

int Polynomial::min_gdeg(const Weight& w) const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        const int d = gdeg(m, w);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

int Polynomial::max_gdeg(const Weight& w) const {
    int best = -1;
    for (const auto& [m, c] : terms_) best = std::max(best, gdeg(m, w));
    return best;
}

bool Polynomial::is_quasi_homogeneous(const Weight& w, int k) const {
    for (const auto& [m, c] : terms_) {
        if (gdeg(m, w) != k) return false;
    }
    return true;
}

Polynomial Polynomial::map_monomials(const std::function<Monomial(Monomial)>& f) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.add_term(f(m), c);
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        bool need_star = false;
        if (!unit || (m.p1 == 0 && m.p2 == 0)) {
            os << mag.get_str();
            need_star = true;
        }
        auto emit = [&](const char* var, int e) {
            if (e == 0) return;
            if (need_star) os << "*";
            os << var;
            if (e > 1) os << "^" << e;
            need_star = true;
        };
        emit("x1", m.p1);
        emit("x2", m.p2);
    }
    return os.str();
}

Rational inner(const Polynomial& p, const Polynomial& q) {
    Rational r = 0;
    const auto& small = p.size() <= q.size() ? p : q;
    const auto& large = p.size() <= q.size() ? q : p;
    for (const auto& [m, c] : small.terms()) {
        auto it = large.terms().find(m);
        if (it == large.terms().end()) continue;
        r += c * it->second * factorial(m.p1) * factorial(m.p2);
    }
    return r;
}

}  // namespace gnf

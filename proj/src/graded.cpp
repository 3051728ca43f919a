#include "gnf/graded.hpp"

#include "gnf/error.hpp"

namespace gnf {

Qhp::Qhp(const Weight& w, int gdeg, Polynomial poly)
    : poly_(std::move(poly)), gdeg_(gdeg), weight_(w) {
    if (!poly_.is_quasi_homogeneous(w, gdeg)) {
        throw Error(ErrorKind::DegreeMismatch,
                    "polynomial " + poly_.to_string() + " is not quasi-homogeneous of g.d. " +
                        std::to_string(gdeg));
    }
}

Polynomial apply_field(const Field& f, const Polynomial& g) {
    return f.f1 * g.derivative(1) + f.f2 * g.derivative(2);
}

Field lie_bracket(const Field& f, const Field& g) {
    return {apply_field(f, g.f1) - apply_field(g, f.f1), apply_field(f, g.f2) - apply_field(g, f.f2)};
}

Vqhp::Vqhp(const Weight& w, int gdeg, Polynomial c1, Polynomial c2)
    : c1_(w, gdeg + w.gamma1(), std::move(c1)), c2_(w, gdeg + w.gamma2(), std::move(c2)), gdeg_(gdeg) {}

Vqhp Vqhp::operator+(const Vqhp& o) const {
    return Vqhp(weight(), gdeg_, c1_.poly() + o.c1_.poly(), c2_.poly() + o.c2_.poly());
}

Vqhp Vqhp::operator-(const Vqhp& o) const {
    return Vqhp(weight(), gdeg_, c1_.poly() - o.c1_.poly(), c2_.poly() - o.c2_.poly());
}

Vqhp Vqhp::operator*(const Rational& c) const {
    return Vqhp(weight(), gdeg_, c1_.poly() * c, c2_.poly() * c);
}

Vqhp euler_field(const Weight& w) {
    return Vqhp(w, 0, Polynomial::monomial(1, 0, w.gamma1()), Polynomial::monomial(0, 1, w.gamma2()));
}

Vqhp times_euler(const Qhp& q) {
    const Weight& w = q.weight();
    return Vqhp(w, q.gdeg(), q.poly() * Polynomial::monomial(1, 0, w.gamma1()),
                q.poly() * Polynomial::monomial(0, 1, w.gamma2()));
}

Polynomial apply_field(const Vqhp& f, const Polynomial& g) { return apply_field(f.field(), g); }

Qhp apply_field(const Vqhp& f, const Qhp& g) {
    return Qhp(g.weight(), g.gdeg() + f.gdeg(), apply_field(f.field(), g.poly()));
}

Vqhp lie_bracket(const Vqhp& f, const Vqhp& g) {
    if (!(f.weight() == g.weight())) throw Error(ErrorKind::DegreeMismatch, "weights differ");
    return Vqhp(f.weight(), f.gdeg() + g.gdeg(), lie_bracket(f.field(), g.field()));
}

Qhp divergence(const Vqhp& f) {
    return Qhp(f.weight(), f.gdeg(), f.component(1).derivative(1) + f.component(2).derivative(2));
}

VectorSeries::VectorSeries(const Weight& w, int truncation) : weight_(w), truncation_(truncation) {}

Vqhp VectorSeries::term(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Vqhp::zero(weight_, k) : it->second;
}

void VectorSeries::set_term(const Vqhp& v) {
    if (!(v.weight() == weight_)) throw Error(ErrorKind::DegreeMismatch, "weights differ");
    if (v.gdeg() > truncation_) return;
    if (v.is_zero()) {
        terms_.erase(v.gdeg());
    } else {
        terms_.insert_or_assign(v.gdeg(), v);
    }
}

void VectorSeries::add_term(const Vqhp& v) {
    if (v.gdeg() > truncation_) return;
    set_term(term(v.gdeg()) + v);
}

std::optional<int> VectorSeries::order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

Field VectorSeries::to_field() const {
    Field f;
    for (const auto& [k, v] : terms_) {
        f.f1 += v.component(1);
        f.f2 += v.component(2);
    }
    return f;
}

VectorSeries VectorSeries::from_field(const Weight& w, int truncation, const Field& f, int min_gdeg) {
    std::map<int, Field> parts;
    for (int i = 1; i <= 2; ++i) {
        for (const auto& [m, c] : f.component(i).terms()) {
            const int k = gdeg(m, w) - w.gamma(i);
            if (k < min_gdeg) {
                throw Error(ErrorKind::OrderTooLow,
                            "term of g.d. " + std::to_string(k) + " in component " +
                                std::to_string(i) + " is below the minimum g.d. " +
                                std::to_string(min_gdeg));
            }
            if (k > truncation) continue;
            parts[k].component(i).add_term(m, c);
        }
    }
    VectorSeries s(w, truncation);
    for (const auto& [k, part] : parts) s.set_term(Vqhp(w, k, part));
    return s;
}

}  // namespace gnf

#include "gnf/catalog.hpp"

#include <numeric>
#include <sstream>

#include "gnf/error.hpp"

namespace gnf::catalog {

namespace {

using Family = CaseId::Family;

void validate(const CaseId& c) {
    bool ok = false;
    switch (c.family) {
        case Family::Takens: ok = c.m >= 2; break;
        case Family::LmMonomial: ok = c.l > c.m && c.m >= 1; break;
        case Family::Diagonal: ok = c.m >= 1; break;
        case Family::Binomial: ok = c.l >= c.m && c.m >= 2 && (c.sign == 1 || c.sign == -1); break;
    }
    if (!ok) throw Error(ErrorKind::InvalidParams, "invalid parameters for " + to_string(c));
}

int theta(int k) { return k >= 0 ? 1 : 0; }

int mod(int a, int l) { return ((a % l) + l) % l; }

// Collects slots of field g.d. chi+1..N; slots with a negative exponent do not exist.
// Both members of a pair share one g.d., so truncation keeps or drops them together.
class SupportBuilder {
public:
    SupportBuilder(const Weight& w, int chi, int n) : w_(w), chi_(chi), n_(n) {}

    bool valid(const Slot& s) const {
        if (s.mon.p1 < 0 || s.mon.p2 < 0) return false;
        const int g = gdeg(s.mon, w_) - w_.gamma(s.component);
        return g > chi_ && g <= n_;
    }
    void single(const Slot& s) {
        if (valid(s)) out.singles.insert(s);
    }
    // A family member with a negative exponent makes the whole displayed term meaningless,
    // so the pair contributes nothing.
    void pair(const Slot& a, const Slot& b) {
        if (valid(a) && valid(b)) out.pairs.emplace_back(a, b);
    }
    // Pair whose first member is always eliminated.
    void forced(const Slot& zero, const Slot& keep) {
        if (valid(zero)) out.forced_zero.insert(zero);
        single(keep);
    }

    SupportPrediction out;

private:
    Weight w_;
    int chi_;
    int n_;
};

Slot y1(int a, int b) { return {1, {a, b}}; }
Slot y2(int a, int b) { return {2, {a, b}}; }

}  // namespace

CaseId parse_case(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::InvalidParams, "expected family:params in '" + text + "'");
    const std::string tag = text.substr(0, colon);
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(colon + 1));
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    auto num = [&](std::size_t i) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(parts.at(i), &used);
            if (used != parts[i].size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidParams, "bad parameter list in '" + text + "'");
        }
    };
    CaseId c;
    if (tag == "takens" && parts.size() == 1) {
        c = CaseId::takens(num(0));
    } else if (tag == "lm" && parts.size() == 2) {
        c = CaseId::lm(num(0), num(1));
    } else if (tag == "diag" && parts.size() == 1) {
        c = CaseId::diagonal(num(0));
    } else if (tag == "binom" && (parts.size() == 2 || parts.size() == 3)) {
        int sign = 1;
        if (parts.size() == 3) {
            if (parts[2] == "+" || parts[2] == "1" || parts[2] == "+1") {
                sign = 1;
            } else if (parts[2] == "-" || parts[2] == "-1") {
                sign = -1;
            } else {
                throw Error(ErrorKind::InvalidParams, "sign must be + or - in '" + text + "'");
            }
        }
        c = CaseId::binomial(num(0), num(1), sign);
    } else {
        throw Error(ErrorKind::InvalidParams, "unknown case '" + text + "'");
    }
    validate(c);
    return c;
}

std::string to_string(const CaseId& c) {
    switch (c.family) {
        case Family::Takens: return "takens:" + std::to_string(c.m);
        case Family::LmMonomial: return "lm:" + std::to_string(c.l) + "," + std::to_string(c.m);
        case Family::Diagonal: return "diag:" + std::to_string(c.m);
        case Family::Binomial:
            return "binom:" + std::to_string(c.l) + "," + std::to_string(c.m) + (c.sign > 0 ? ",+" : ",-");
    }
    return "?";
}

Unperturbed unperturbed(const CaseId& c) {
    validate(c);
    const int l = c.l, m = c.m;
    switch (c.family) {
        case Family::Takens: {
            const Weight w(1, 1);
            return {Qhp(w, m, Polynomial::monomial(0, m, Rational(-1, m))), w, m - 2};
        }
        case Family::LmMonomial: {
            const Weight w(1, 1);
            return {Qhp(w, l + m, Polynomial::monomial(l, m)), w, l + m - 2};
        }
        case Family::Diagonal: {
            const Weight w(1, 1);
            return {Qhp(w, 2 * m, Polynomial::monomial(m, m, Rational(1, m))), w, 2 * m - 2};
        }
        case Family::Binomial: {
            const int d = std::gcd(l, m);
            const Weight w(m / d, l / d);
            const Polynomial h =
                Polynomial::monomial(l, 0, Rational(1, l)) - Polynomial::monomial(0, m, Rational(c.sign, m));
            return {Qhp(w, l * m / d, h), w, (l * m - l - m) / d};
        }
    }
    throw Error(ErrorKind::InvalidParams, "unknown family");
}

std::set<Monomial> predict_resonant(const CaseId& c, int k) {
    validate(c);
    const int l = c.l, m = c.m;
    std::set<Monomial> out;
    switch (c.family) {
        case Family::Takens:
            for (int p2 = 0; p2 <= m - 2 && p2 <= k; ++p2) out.insert({k - p2, p2});
            break;
        case Family::LmMonomial: {
            const int d = std::gcd(l, m);
            for (int p1 = 0; p1 <= k; ++p1) {
                const int p2 = k - p1;
                const bool diag = (p1 + 1) * m == (p2 + 1) * l && (p1 + 1) * d % l == 0 &&
                                  (p1 + 1) * d / l >= d;
                if (p1 <= l - 2 || p2 <= m - 2 || diag) out.insert({p1, p2});
            }
            break;
        }
        case Family::Diagonal:
            for (int p1 = 0; p1 <= k; ++p1) {
                const int p2 = k - p1;
                if (p1 <= m - 2 || p2 <= m - 2 || p1 == p2) out.insert({p1, p2});
            }
            break;
        case Family::Binomial: {
            const int d = std::gcd(l, m);
            if (k * d <= l * m) throw Error(ErrorKind::OutOfRange, "closed form holds for k > lm/d only");
            const Weight w(m / d, l / d);
            for (const auto& p : monomials_of_degree(k, w)) {
                if (mod(p.p1, l) != l - 1 && p.p2 <= m - 2) out.insert(p);
            }
            break;
        }
    }
    return out;
}

std::set<Monomial> predict_reduced(const CaseId& c, int k) {
    validate(c);
    const int l = c.l, m = c.m;
    switch (c.family) {
        case Family::Takens:
            if (k <= m) throw Error(ErrorKind::OutOfRange, "closed form holds for k > m only");
            return predict_resonant(c, k);
        case Family::LmMonomial:
            if (k <= l + m) throw Error(ErrorKind::OutOfRange, "closed form holds for k > l + m only");
            return predict_resonant(c, k);
        case Family::Diagonal: {
            if (k <= 2 * m) throw Error(ErrorKind::OutOfRange, "closed form holds for k > 2m only");
            std::set<Monomial> out;
            for (int p1 = 0; p1 <= k; ++p1) {
                if (p1 <= m - 2 || k - p1 <= m - 2) out.insert({p1, k - p1});
            }
            return out;
        }
        case Family::Binomial: {
            const int d = std::gcd(l, m);
            if (k * d <= l * m) throw Error(ErrorKind::OutOfRange, "closed form holds for k > lm/d only");
            const Weight w(m / d, l / d);
            std::set<Monomial> out;
            for (const auto& p : monomials_of_degree(k, w)) {
                const int r = mod(p.p1, l);
                if ((p.p2 == 0 && r != l - 1 && r != 0) || (p.p2 >= 1 && p.p2 <= m - 2 && r != l - 1)) {
                    out.insert(p);
                }
            }
            return out;
        }
    }
    return {};
}

bool SupportPrediction::allows(const Slot& s) const {
    if (singles.contains(s)) return true;
    for (const auto& [a, b] : pairs) {
        if (a == s || b == s) return true;
    }
    return false;
}

std::set<Slot> SupportPrediction::resolve(const PairPolicy& policy) const {
    std::set<Slot> out = singles;
    for (const auto& [a, b] : pairs) {
        bool zero_a = policy.base == PairPolicy::Default::ZeroFirst;
        if (policy.zero_overrides.contains(a)) zero_a = true;
        else if (policy.zero_overrides.contains(b)) zero_a = false;
        out.insert(zero_a ? b : a);
    }
    return out;
}

SupportPrediction predict_support(const CaseId& c, int truncation) {
    const Unperturbed u = unperturbed(c);
    const int l = c.l, m = c.m, n = truncation;
    SupportBuilder b(u.weight, u.chi, n);
    // Index ranges run past every slot of field g.d. <= N; invalid slots are discarded.
    const int top = n + l + m + 4;
    switch (c.family) {
        case Family::Takens:
            for (int i = m; i <= top; ++i) {
                for (int j = 0; j <= m - 3; ++j) b.single(y1(i - j, j));
                for (int j = 0; j <= m - 2; ++j) b.single(y2(i - j, j));
            }
            for (int i = 0; i <= top; ++i) b.pair(y1(i + 2, m - 2), y2(i + 1, m - 1));
            break;
        case Family::LmMonomial: {
            const int d = std::gcd(l, m);
            for (int k = l + m; k <= top; ++k) {
                for (int i = 0; i <= l - 2; ++i) b.single(y1(i, k - i));
                for (int j = 0; j <= m - 3; ++j) b.single(y1(k - j, j));
                for (int i = 0; i <= l - 3; ++i) b.single(y2(i, k - i));
                for (int j = 0; j <= m - 2; ++j) b.single(y2(k - j, j));
            }
            for (int i = 0; i <= top; ++i) b.pair(y1(i + l + 2, m - 2), y2(i + l + 1, m - 1));
            for (int j = 0; j <= top; ++j) b.pair(y1(l - 1, m + j + 1), y2(l - 2, m + j + 2));
            for (int r = d + 1; r <= top; ++r) b.pair(y1(r * l / d, r * m / d - 1), y2(r * l / d - 1, r * m / d));
            for (int s = d + 1 + (3 * d - 1) / (l + m); s <= top; ++s) {
                const Slot a = y1(s * l / d - 1, s * m / d - 2), z = y2(s * l / d - 2, s * m / d - 1);
                if (m == 1) {
                    b.forced(z, a);
                } else {
                    b.pair(a, z);
                }
            }
            break;
        }
        case Family::Diagonal:
            for (int k = 2 * m; k <= top; ++k) {
                for (int i = 0; i <= m - 2; ++i) b.single(y1(i, k - i));
                for (int j = 0; j <= m - 3; ++j) b.single(y1(k - j, j));
                for (int i = 0; i <= m - 3; ++i) b.single(y2(i, k - i));
                for (int j = 0; j <= m - 2; ++j) b.single(y2(k - j, j));
            }
            for (int i = 0; i <= top; ++i) {
                b.pair(y1(i + m + 2, m - 2), y2(i + m + 1, m - 1));
                b.pair(y1(m - 1, m + i + 1), y2(m - 2, m + i + 2));
                b.pair(y1(i + m + 1, i + m), y2(i + m, i + m + 1));
            }
            break;
        case Family::Binomial: {
            // i > l(1 - j/m) is written as i m > l (m - j); i > l/m as i m > l.
            for (int j = 1; j <= m - 2; ++j) {
                for (int i = 0; i <= top * l; ++i) {
                    if (mod(i, l) != 0 && mod(i, l) != l - 1 && i * m > l * (m - j)) {
                        b.single(y1(i, j - 1));
                        b.single(y2(i - 1, j));
                    }
                }
                for (int r = 1 + theta(m - j * l); r <= top; ++r) b.pair(y1(r * l - 1, j - 1), y2(r * l - 2, j));
                for (int s = 1; s <= top; ++s) {
                    if (l == m && j == m - 2) {
                        b.forced(y1(s * m, m - 3), y2(s * m - 1, m - 2));
                    } else {
                        b.pair(y1(s * l, j - 1), y2(s * l - 1, j));
                    }
                }
            }
            for (int i = 0; i <= top * l; ++i) {
                if (mod(i, l) != 0 && i * m > l) b.pair(y1(i, m - 2), y2(i - 1, m - 1));
                if (mod(i, l) != 0 && mod(i, l) != l - 1 && i > l) b.single(y2(i - 1, 0));
            }
            break;
        }
    }
    return b.out;
}

}  // namespace gnf::catalog

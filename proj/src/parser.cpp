#include "gnf/parser.hpp"

#include <cctype>
#include <sstream>

#include "gnf/error.hpp"
#include "gnf/euler_split.hpp"

namespace gnf {

namespace {

constexpr int kMaxExponent = 1000;

class ExprParser {
public:
    ExprParser(const std::string& text, std::size_t offset) : s_(text), base_(offset) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(base_ + pos_, what); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (accept('+')) {
                p += term();
            } else if (accept('-')) {
                p -= term();
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = unary();
        for (;;) {
            if (accept('*')) {
                p = p * unary();
            } else if (accept('/')) {
                skip();
                const Integer d = integer();
                if (d == 0) fail("division by zero");
                p *= Rational(Integer(1), d);
            } else {
                return p;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (!accept('^')) return base;
        skip();
        const Integer e = integer();
        if (e > kMaxExponent) fail("exponent too large");
        Polynomial out(Rational(1));
        for (long i = 0; i < e.get_si(); ++i) out = out * base;
        return out;
    }

    Polynomial primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(Rational(integer()));
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (c == 'x' || c == 'y') {
            const std::size_t start = pos_++;
            int var = c == 'x' ? 1 : 2;
            if (c == 'x' && pos_ < s_.size() && (s_[pos_] == '1' || s_[pos_] == '2')) var = s_[pos_++] - '0';
            if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
                pos_ = start;
                fail("unknown variable");
            }
            return var == 1 ? Polynomial::monomial(1, 0) : Polynomial::monomial(0, 1);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Statement {
    std::string text;
    std::size_t offset;
};

std::vector<Statement> split_statements(const std::string& text) {
    std::vector<Statement> out;
    std::size_t start = 0;
    bool comment = false;
    std::string cur;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const char c = i < text.size() ? text[i] : '\n';
        if (c == '\n' || (c == ';' && !comment)) {
            out.push_back({cur, start});
            cur.clear();
            comment = false;
            start = i + 1;
        } else if (c == '#') {
            comment = true;
        } else if (!comment) {
            cur += c;
        }
    }
    return out;
}

int parse_int(const std::string& s, std::size_t offset) {
    const std::string t = trim(s);
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t, &used);
    } catch (const std::exception&) {
        throw ParseError(offset, "expected an integer");
    }
    if (used != t.size()) throw ParseError(offset, "expected an integer");
    return v;
}

std::vector<Monomial> parse_monomials(const std::string& s, std::size_t offset) {
    std::vector<Monomial> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] != ',') continue;
        const Polynomial p = parse_polynomial(s.substr(start, i - start), offset + start);
        if (p.size() != 1 || p.terms().begin()->second != 1) {
            throw ParseError(offset + start, "expected a monomial with coefficient 1");
        }
        out.push_back(p.terms().begin()->first);
        start = i + 1;
    }
    return out;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t offset) {
    return ExprParser(text, offset).parse();
}

SystemDocument parse_document(const std::string& text) {
    SystemDocument doc;
    bool seen_p1 = false, seen_p2 = false;
    for (const auto& st : split_statements(text)) {
        const std::string line = trim(st.text);
        if (line.empty()) continue;
        const std::size_t lead = st.text.find_first_not_of(" \t\r");
        const std::size_t at = st.offset + lead;
        std::size_t key_end = 0;
        while (key_end < line.size() && std::isalnum(static_cast<unsigned char>(line[key_end]))) ++key_end;
        const std::string key = line.substr(0, key_end);
        std::string rest = line.substr(key_end);
        const std::size_t rest_at = at + key_end;

        auto after_eq = [&](const std::string& r, std::size_t r_at) {
            const auto eq = r.find('=');
            if (eq == std::string::npos || !trim(r.substr(0, eq)).empty()) throw ParseError(r_at, "expected '='");
            return std::pair{r.substr(eq + 1), r_at + eq + 1};
        };
        auto once = [&](bool seen) {
            if (seen) throw ParseError(at, "duplicate statement '" + key + "'");
        };

        if (key == "weight") {
            once(doc.weight.has_value());
            std::istringstream is(rest);
            int a = 0, b = 0;
            std::string extra;
            if (!(is >> a >> b) || (is >> extra)) throw ParseError(rest_at, "expected two integers");
            doc.weight = {a, b};
        } else if (key == "chi") {
            once(doc.chi.has_value());
            doc.chi = parse_int(rest, rest_at);
        } else if (key == "N") {
            once(doc.truncation.has_value());
            const auto eq = rest.find('=');
            doc.truncation = eq == std::string::npos ? parse_int(rest, rest_at)
                                                     : parse_int(after_eq(rest, rest_at).first, rest_at + eq + 1);
        } else if (key == "H" || key == "P1" || key == "P2") {
            const auto [expr, expr_at] = after_eq(rest, rest_at);
            const Polynomial p = parse_polynomial(expr, expr_at);
            if (key == "H") {
                once(doc.hamiltonian.has_value());
                doc.hamiltonian = p;
            } else if (key == "P1") {
                once(seen_p1);
                seen_p1 = true;
                doc.p1 = p;
            } else {
                once(seen_p2);
                seen_p2 = true;
                doc.p2 = p;
            }
        } else if (key == "S" || key == "St") {
            const auto eq = rest.find('=');
            if (eq == std::string::npos) throw ParseError(rest_at, "expected '='");
            const int g = parse_int(rest.substr(0, eq), rest_at);
            auto& target = key == "S" ? doc.resonant_sets : doc.reduced_sets;
            if (target.contains(g)) throw ParseError(at, "duplicate set for g.d. " + std::to_string(g));
            target[g] = parse_monomials(rest.substr(eq + 1), rest_at + eq + 1);
        } else {
            throw ParseError(at, "unknown statement '" + key + "'");
        }
    }
    return doc;
}

HamiltonianSystem build_system(const SystemDocument& doc) {
    if (!doc.weight) throw Error(ErrorKind::Validation, "missing weight");
    if (!doc.hamiltonian) throw Error(ErrorKind::Validation, "missing Hamiltonian H");
    if (!doc.truncation) throw Error(ErrorKind::Validation, "missing truncation N");
    const Weight w(doc.weight->first, doc.weight->second);
    const Polynomial& h = *doc.hamiltonian;
    if (h.is_zero()) throw Error(ErrorKind::NotQuasiHomogeneous, "hamiltonian-not-quasi-homogeneous: H is zero");
    const int g = doc.chi ? *doc.chi + w.delta() : h.min_gdeg(w);
    if (!h.is_quasi_homogeneous(w, g)) {
        throw Error(ErrorKind::NotQuasiHomogeneous,
                    "hamiltonian-not-quasi-homogeneous: H is not quasi-homogeneous of g.d. " + std::to_string(g));
    }
    if (g < w.delta()) {
        throw Error(ErrorKind::NotQuasiHomogeneous, "hamiltonian-not-quasi-homogeneous: g.d. of H is below delta");
    }
    const int chi = g - w.delta();
    VectorSeries pert(w, *doc.truncation);
    try {
        pert = VectorSeries::from_field(w, *doc.truncation, Field{doc.p1, doc.p2}, chi + 1);
    } catch (const Error& e) {
        throw Error(e.kind(), std::string("perturbation-order-too-low: ") + e.what());
    }
    return HamiltonianSystem(Qhp(w, g, h), pert);
}

HamiltonianSystem parse_system(const std::string& text) { return build_system(parse_document(text)); }

std::string render_system(const HamiltonianSystem& sys) {
    const Field p = sys.perturbation().to_field();
    std::ostringstream os;
    os << "weight " << sys.weight().gamma1() << " " << sys.weight().gamma2() << "\n"
       << "chi " << sys.chi() << "\n"
       << "H = " << sys.hamiltonian().poly().to_string() << "\n"
       << "P1 = " << p.f1.to_string() << "\n"
       << "P2 = " << p.f2.to_string() << "\n"
       << "N = " << sys.truncation() << "\n";
    return os.str();
}

}  // namespace gnf

#include "hopfcy/scalars.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hopfcy/detail/expr.hpp"

namespace hopfcy {

ParamList::ParamList(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw ConfigError("empty parameter name");
        if (!seen.insert(n).second) throw ConfigError("duplicate parameter '" + n + "'");
    }
}

long ParamList::index_of(const std::string& n) const {
    auto it = std::find(names_.begin(), names_.end(), n);
    return it == names_.end() ? -1 : static_cast<long>(it - names_.begin());
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::param(std::size_t m, std::size_t i, long e) {
    Monomial r = one(m);
    r.exps.at(i) = e;
    return r;
}

bool Monomial::is_one() const {
    return coeff == 1 && std::all_of(exps.begin(), exps.end(), [](long e) { return e == 0; });
}

Monomial Monomial::inverse() const {
    if (coeff == 0) throw ArithmeticError("inverse of zero monomial");
    Monomial r(1 / coeff, exps);
    for (auto& e : r.exps) e = -e;
    return r;
}

Monomial Monomial::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Monomial r(1, Exps(exps.size(), 0));
    for (long i = 0; i < k; ++i) r.coeff *= coeff;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] * k;
    return r;
}

std::string Monomial::str(const ParamList& p) const {
    return RF(*this).str(p);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.exps.size() != b.exps.size()) throw ConfigError("monomials over different parameter lists");
    Monomial r(a.coeff * b.coeff, a.exps);
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
Monomial mono_mul(const Monomial& a, const Monomial& b) { return a * b; }
bool mono_is_one(const Monomial& a) { return a.is_one(); }

// -------------------------------------------------------------------- Poly

Poly::Poly(std::size_t m, const Rational& c) : m_(m) {
    if (c != 0) terms_[Exps(m, 0)] = c;
}

Poly::Poly(const Monomial& mono) : m_(mono.exps.size()) {
    if (mono.coeff != 0) terms_[mono.exps] = mono.coeff;
}

Monomial Poly::as_monomial() const {
    if (terms_.size() != 1) throw ArithmeticError("polynomial is not a monomial");
    return Monomial(terms_.begin()->second, terms_.begin()->first);
}

Monomial Poly::leading() const {
    if (terms_.empty()) throw ArithmeticError("leading term of zero");
    auto it = terms_.rbegin();
    return Monomial(it->second, it->first);
}

void Poly::add_term(const Exps& e, const Rational& c) {
    if (c == 0) return;
    if (e.size() != m_) throw ConfigError("exponent length mismatch");
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.m_ != m_) throw ConfigError("polynomials over different parameter lists");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.m_ != m_) throw ConfigError("polynomials over different parameter lists");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    if (o.m_ != m_) throw ConfigError("polynomials over different parameter lists");
    Poly r(m_);
    Exps e(m_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < m_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly Poly::operator*(const Monomial& mono) const {
    if (mono.coeff == 0) return Poly(m_);
    Poly r(m_);
    for (const auto& [e, c] : terms_) {
        Exps f = e;
        for (std::size_t i = 0; i < m_; ++i) f[i] += mono.exps[i];
        r.terms_.emplace(std::move(f), c * mono.coeff);
    }
    return r;
}

std::vector<bool> Poly::support() const {
    std::vector<bool> s(m_, false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < m_; ++i)
            if (e[i] != 0) s[i] = true;
    return s;
}

Rational Poly::evaluate(const std::vector<Rational>& at) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m_; ++i) {
            Rational base = e[i] < 0 ? Rational(1 / at[i]) : at[i];
            for (long k = 0; k < std::labs(e[i]); ++k) t *= base;
        }
        sum += t;
    }
    return sum;
}

namespace {

std::string power_str(const std::string& name, long e) {
    if (e == 1) return name;
    return name + "^" + std::to_string(e);
}

std::string term_body(const Exps& e, const ParamList& p) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += power_str(i < p.size() ? p.name(i) : "t" + std::to_string(i), e[i]);
    }
    return s;
}

}  // namespace

std::string Poly::str(const ParamList& p) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string body = term_body(e, p);
        Rational a = abs(c);
        std::string mag;
        if (body.empty()) mag = a.get_str();
        else if (a == 1) mag = body;
        else mag = a.get_str() + "*" + body;
        if (first) out += (c < 0 ? "-" : "") + mag;
        else out += (c < 0 ? " - " : " + ") + mag;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------- RF

namespace {

// Splits p = q^shift * core where core has every variable's minimal exponent 0.
Exps min_exps(const Poly& p) {
    Exps lo(p.nvars(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = first ? e[i] : std::min(lo[i], e[i]);
        first = false;
    }
    return lo;
}

Monomial shift_mono(const Exps& e, bool negate) {
    Exps f = e;
    if (negate)
        for (auto& x : f) x = -x;
    return Monomial(1, f);
}

// Exact multivariate division of genuine polynomials (lex order).
bool exact_divide(const Poly& num, const Poly& den, Poly& quot) {
    std::size_t m = num.nvars();
    quot = Poly(m);
    Poly r = num;
    Monomial ld = den.leading();
    std::size_t guard = 0;
    while (!r.is_zero()) {
        if (++guard > 100000) return false;
        Monomial lr = r.leading();
        for (std::size_t i = 0; i < m; ++i)
            if (lr.exps[i] < ld.exps[i]) return false;
        Monomial t = lr / ld;
        quot.add_term(t.exps, t.coeff);
        r -= den * t;
    }
    return true;
}

using Dense = std::vector<Rational>;

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense to_dense(const Poly& p, std::size_t v) {
    Dense d;
    for (const auto& [e, c] : p.terms()) {
        std::size_t k = static_cast<std::size_t>(e[v]);
        if (d.size() <= k) d.resize(k + 1, 0);
        d[k] += c;
    }
    trim(d);
    return d;
}

Poly from_dense(const Dense& d, std::size_t m, std::size_t v) {
    Poly p(m);
    for (std::size_t k = 0; k < d.size(); ++k) {
        Exps e(m, 0);
        e[v] = static_cast<long>(k);
        p.add_term(e, d[k]);
    }
    return p;
}

Dense dense_mod(Dense a, const Dense& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return a;
}

Dense dense_div(Dense a, const Dense& b) {
    if (a.size() < b.size()) return {};
    Dense q(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return q;
}

Dense dense_gcd(Dense a, Dense b) {
    while (!b.empty()) {
        Dense r = dense_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

RF::RF(std::size_t m) : num_(m), den_(m, 1) {}
RF::RF(std::size_t m, const Rational& c) : num_(m, c), den_(m, 1) {}
RF::RF(const Monomial& mono) : num_(mono), den_(mono.exps.size(), 1) {}
RF::RF(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) throw ConfigError("numerator/denominator size mismatch");
    normalize();
}

void RF::normalize() {
    if (den_.is_zero()) throw ArithmeticError("division by zero");
    std::size_t m = num_.nvars();
    if (num_.is_zero()) {
        den_ = Poly(m, 1);
        return;
    }
    if (den_.is_monomial()) {
        num_ = num_ * den_.as_monomial().inverse();
        den_ = Poly(m, 1);
        return;
    }
    Exps ln = min_exps(num_), ld = min_exps(den_);
    Poly n = num_ * shift_mono(ln, true);
    Poly d = den_ * shift_mono(ld, true);
    Exps net(m);
    for (std::size_t i = 0; i < m; ++i) net[i] = ln[i] - ld[i];

    std::vector<bool> sn = n.support(), sd = d.support();
    long var = -1;
    bool univariate = true;
    for (std::size_t i = 0; i < m; ++i) {
        if (sn[i] || sd[i]) {
            if (var >= 0) univariate = false;
            var = static_cast<long>(i);
        }
    }
    if (univariate && var >= 0) {
        auto v = static_cast<std::size_t>(var);
        Dense dn = to_dense(n, v), dd = to_dense(d, v);
        Dense g = dense_gcd(dn, dd);
        if (g.size() > 1) {
            dn = dense_div(dn, g);
            dd = dense_div(dd, g);
        }
        n = from_dense(dn, m, v);
        d = from_dense(dd, m, v);
    } else {
        Poly q;
        if (exact_divide(n, d, q)) {
            n = q;
            d = Poly(m, 1);
        }
    }
    Monomial lead = d.leading();
    Monomial scale(1 / lead.coeff, Exps(m, 0));
    if (d.is_monomial()) {
        // d = c*q^k; fold into the numerator
        scale = d.as_monomial().inverse();
        d = Poly(m, 1);
    } else {
        d = d * scale;
    }
    num_ = n * scale * Monomial(1, net);
    den_ = d;
}

bool RF::is_one() const {
    return num_ == den_;
}

bool RF::is_monomial() const {
    if (num_.is_zero()) return false;
    if (den_.is_monomial() && num_.is_monomial()) return true;
    // a common factor might hide: divide exactly
    Poly q;
    Poly n = num_ * shift_mono(min_exps(num_), true);
    Poly d = den_ * shift_mono(min_exps(den_), true);
    return exact_divide(n, d, q) && q.is_monomial();
}

Monomial RF::as_monomial() const {
    if (num_.is_monomial() && den_.is_monomial()) return num_.as_monomial() / den_.as_monomial();
    Exps ln = min_exps(num_), ld = min_exps(den_);
    Poly n = num_ * shift_mono(ln, true);
    Poly d = den_ * shift_mono(ld, true);
    Poly q;
    if (!exact_divide(n, d, q) || !q.is_monomial())
        throw ArithmeticError("rational function is not a monomial");
    Exps net(ln.size());
    for (std::size_t i = 0; i < net.size(); ++i) net[i] = ln[i] - ld[i];
    return q.as_monomial() * Monomial(1, net);
}

RF RF::operator-() const {
    RF r = *this;
    r.num_ = -r.num_;
    return r;
}

RF& RF::operator+=(const RF& o) {
    if (o.nvars() != nvars()) throw ConfigError("rational functions over different parameter lists");
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) den_ = Poly(nvars(), 1);
        else if (!den_.is_monomial() && !(den_ == Poly(nvars(), 1))) normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RF& RF::operator-=(const RF& o) { return *this += -o; }

RF& RF::operator*=(const RF& o) {
    if (o.nvars() != nvars()) throw ConfigError("rational functions over different parameter lists");
    bool simple = den_ == Poly(nvars(), 1) && o.den_ == Poly(nvars(), 1);
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    if (!simple) normalize();
    return *this;
}

RF RF::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return RF(den_, num_);
}

RF& RF::operator/=(const RF& o) { return *this *= o.inverse(); }

RF RF::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    RF r = one(nvars()), b = *this;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

bool RF::operator==(const RF& o) const {
    if (o.nvars() != nvars()) return false;
    return num_ * o.den_ == o.num_ * den_;
}

Rational RF::evaluate(const std::vector<Rational>& at) const {
    Rational d = den_.evaluate(at);
    if (d == 0) throw ArithmeticError("denominator vanishes at evaluation point");
    return num_.evaluate(at) / d;
}

std::string RF::str(const ParamList& p) const {
    std::string n = num_.str(p);
    if (den_ == Poly(nvars(), 1)) return n;
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.str(p);
    if (den_.terms().size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

RF rf_arith(const RF& a, const RF& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        default: throw ConfigError(std::string("unknown operator ") + op);
    }
}

namespace {

struct RFOps {
    const ParamList& p;
    RF number(const Rational& c) { return RF(p.size(), c); }
    RF name(const std::string& n) {
        long i = p.index_of(n);
        if (i < 0) throw ConfigError("unknown parameter '" + n + "'");
        return RF(Monomial::param(p.size(), static_cast<std::size_t>(i)));
    }
    RF add(const RF& a, const RF& b) { return a + b; }
    RF sub(const RF& a, const RF& b) { return a - b; }
    RF mul(const RF& a, const RF& b) { return a * b; }
    RF div(const RF& a, const RF& b) { return a / b; }
    RF neg(const RF& a) { return -a; }
    RF pow(const RF& a, long e) { return a.pow(e); }
};

}  // namespace

RF parse_rf(const std::string& text, const ParamList& p) {
    RFOps ops{p};
    detail::ExprParser<RF, RFOps> parser(text, ops);
    return parser.parse();
}

Monomial parse_character_value(const std::string& text, const ParamList& p) {
    RF v = parse_rf(text, p);
    if (!v.is_monomial()) throw ConfigError("character value \"" + text + "\" is not a monomial");
    Monomial m = v.as_monomial();
    if (m.coeff != 1)
        throw ConfigError("character value \"" + text + "\" must have coefficient 1");
    return m;
}

}  // namespace hopfcy

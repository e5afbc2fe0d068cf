#pragma once
// Exact scalars: Laurent monomials and rational functions over a fixed list
// of multiplicatively independent parameters.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfcy {

using Rational = mpq_class;
using Exps = std::vector<long>;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ParamList {
public:
    ParamList() = default;
    explicit ParamList(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    // -1 when absent
    long index_of(const std::string& n) const;

    bool operator==(const ParamList& o) const { return names_ == o.names_; }
    bool operator!=(const ParamList& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
};

struct Monomial {
    Rational coeff{1};
    Exps exps;

    Monomial() = default;
    Monomial(Rational c, Exps e) : coeff(std::move(c)), exps(std::move(e)) { coeff.canonicalize(); }

    static Monomial one(std::size_t m) { return Monomial(1, Exps(m, 0)); }
    static Monomial param(std::size_t m, std::size_t i, long e = 1);

    bool is_one() const;
    bool is_zero() const { return coeff == 0; }
    Monomial inverse() const;
    Monomial pow(long k) const;

    std::string str(const ParamList& p) const;

    bool operator==(const Monomial& o) const {
        return coeff == o.coeff && (coeff == 0 || exps == o.exps);
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_is_one(const Monomial& a);

// Laurent polynomial in m variables with rational coefficients.
class Poly {
public:
    using Terms = std::map<Exps, Rational>;

    Poly() = default;
    explicit Poly(std::size_t m) : m_(m) {}
    Poly(std::size_t m, const Rational& c);
    explicit Poly(const Monomial& mono);

    std::size_t nvars() const { return m_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    Monomial as_monomial() const;  // requires is_monomial()
    Monomial leading() const;      // largest exponent vector

    void add_term(const Exps& e, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
    Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
    Poly operator*(const Poly& o) const;
    Poly operator*(const Monomial& mono) const;
    bool operator==(const Poly& o) const { return m_ == o.m_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // variables with a nonzero exponent somewhere
    std::vector<bool> support() const;
    Rational evaluate(const std::vector<Rational>& at) const;
    std::string str(const ParamList& p) const;

private:
    std::size_t m_ = 0;
    Terms terms_;
};

// Exact quotient num/den. Equality is cross-multiplication; normalization is
// size control only.
class RF {
public:
    RF() = default;
    explicit RF(std::size_t m);
    RF(std::size_t m, const Rational& c);
    RF(const Monomial& mono);  // NOLINT: lossless embedding
    RF(Poly num, Poly den);

    static RF zero(std::size_t m) { return RF(m); }
    static RF one(std::size_t m) { return RF(m, 1); }

    std::size_t nvars() const { return num_.nvars(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // true when equal to c * q^e for some rational c != 0
    bool is_monomial() const;
    Monomial as_monomial() const;

    RF operator-() const;
    RF& operator+=(const RF& o);
    RF& operator-=(const RF& o);
    RF& operator*=(const RF& o);
    RF& operator/=(const RF& o);
    RF operator+(const RF& o) const { RF r = *this; r += o; return r; }
    RF operator-(const RF& o) const { RF r = *this; r -= o; return r; }
    RF operator*(const RF& o) const { RF r = *this; r *= o; return r; }
    RF operator/(const RF& o) const { RF r = *this; r /= o; return r; }
    RF inverse() const;
    RF pow(long k) const;

    bool operator==(const RF& o) const;
    bool operator!=(const RF& o) const { return !(*this == o); }

    Rational evaluate(const std::vector<Rational>& at) const;
    std::string str(const ParamList& p) const;

private:
    void normalize();
    Poly num_, den_;
};

RF rf_arith(const RF& a, const RF& b, char op);

// Parses a rational expression in the parameters: integers, names, + - * /,
// ^ with integer exponent, parentheses. Example: "1/(q-q^-1)".
RF parse_rf(const std::string& text, const ParamList& p);
// Parses a pure monomial with coefficient 1, such as "q^2*u^-1".
Monomial parse_character_value(const std::string& text, const ParamList& p);

}  // namespace hopfcy

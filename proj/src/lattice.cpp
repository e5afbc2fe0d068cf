#include "hopfcy/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace hopfcy {

GroupElement group_add(const GroupElement& a, const GroupElement& b) {
    if (a.size() != b.size()) throw ConfigError("group elements of different rank");
    GroupElement r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

GroupElement group_neg(const GroupElement& a) { return group_scale(a, -1); }

GroupElement group_scale(const GroupElement& a, long k) {
    GroupElement r = a;
    for (auto& x : r) x *= k;
    return r;
}

bool group_is_identity(const GroupElement& a) {
    return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

GroupElement unit_vector(std::size_t s, std::size_t j, long v) {
    GroupElement g(s, 0);
    g.at(j) = v;
    return g;
}

// --------------------------------------------------------------- Character

Character::Character(IntMatrix E, std::size_t m) : E_(std::move(E)), m_(m) {
    for (const auto& row : E_)
        if (row.size() != m_) throw ConfigError("character matrix has wrong width");
}

Character Character::from_values(const std::vector<Monomial>& values, std::size_t m) {
    IntMatrix E;
    for (const auto& v : values) {
        if (v.coeff != 1) throw ConfigError("character values must have coefficient 1");
        if (v.exps.size() != m) throw ConfigError("character value over wrong parameter list");
        E.push_back(v.exps);
    }
    return Character(std::move(E), m);
}

Exps Character::exponent_at(const GroupElement& g) const {
    if (g.size() != E_.size()) throw ConfigError("character/group rank mismatch");
    Exps e(m_, 0);
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t t = 0; t < m_; ++t) e[t] += g[j] * E_[j][t];
    return e;
}

Monomial Character::operator()(const GroupElement& g) const { return Monomial(1, exponent_at(g)); }

Character Character::operator*(const Character& o) const {
    if (o.E_.size() != E_.size() || o.m_ != m_) throw ConfigError("character shape mismatch");
    Character r = *this;
    for (std::size_t j = 0; j < E_.size(); ++j)
        for (std::size_t t = 0; t < m_; ++t) r.E_[j][t] += o.E_[j][t];
    return r;
}

Character Character::inverse() const { return pow(-1); }

Character Character::pow(long k) const {
    Character r = *this;
    for (auto& row : r.E_)
        for (auto& x : row) x *= k;
    return r;
}

bool Character::is_trivial() const {
    for (const auto& row : E_)
        for (long x : row)
            if (x != 0) return false;
    return true;
}

Monomial char_eval(const Character& chi, const GroupElement& g) { return chi(g); }

Character char_product(const std::vector<Character>& chars) {
    if (chars.empty()) throw ConfigError("empty character product");
    Character r = chars.front();
    for (std::size_t i = 1; i < chars.size(); ++i) r = r * chars[i];
    return r;
}

// ----------------------------------------------------------- LatticeSystem

void LatticeSystem::add_row(std::vector<long> coeffs, long rhs, std::string label) {
    if (coeffs.size() != unknowns) throw ConfigError("lattice row has wrong length");
    A.push_back(std::move(coeffs));
    b.push_back(rhs);
    labels.push_back(std::move(label));
}

void LatticeSystem::add_monomial_rows(const std::vector<Exps>& per_unknown, const Exps& target,
                                      const std::string& label, const ParamList& params) {
    if (per_unknown.size() != unknowns) throw ConfigError("lattice block has wrong width");
    for (std::size_t t = 0; t < target.size(); ++t) {
        std::vector<long> row(unknowns);
        for (std::size_t k = 0; k < unknowns; ++k) row[k] = per_unknown[k].at(t);
        std::string pname = t < params.size() ? params.name(t) : std::to_string(t);
        add_row(std::move(row), target[t], label + " [" + pname + "]");
    }
}

// -------------------------------------------------------------- HNF solver

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat identity(std::size_t n) {
    ZMat I(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

// Row-style Hermite normal form: U*M = H, U unimodular.
struct Hnf {
    ZMat H, U;
    std::vector<std::size_t> pivots;
};

void combine(ZMat& X, std::size_t r1, std::size_t r2, const mpz_class& a, const mpz_class& b,
             const mpz_class& c, const mpz_class& d) {
    // (row r1, row r2) <- (a*r1 + b*r2, c*r1 + d*r2)
    for (std::size_t t = 0; t < X[r1].size(); ++t) {
        mpz_class x = X[r1][t], y = X[r2][t];
        X[r1][t] = a * x + b * y;
        X[r2][t] = c * x + d * y;
    }
}

Hnf row_hnf(const ZMat& M, std::size_t cols) {
    Hnf h{M, identity(M.size()), {}};
    std::size_t rows = M.size(), row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (h.H[i][col] == 0) continue;
            mpz_class a = h.H[row][col], b = h.H[i][col], g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_class c = -b / g, d = a / g;
            combine(h.H, row, i, x, y, c, d);
            combine(h.U, row, i, x, y, c, d);
        }
        if (h.H[row][col] == 0) continue;
        if (h.H[row][col] < 0) {
            for (auto& v : h.H[row]) v = -v;
            for (auto& v : h.U[row]) v = -v;
        }
        for (std::size_t i = 0; i < row; ++i) {
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), h.H[i][col].get_mpz_t(), h.H[row][col].get_mpz_t());
            if (f == 0) continue;
            for (std::size_t t = 0; t < h.H[i].size(); ++t) h.H[i][t] -= f * h.H[row][t];
            for (std::size_t t = 0; t < h.U[i].size(); ++t) h.U[i][t] -= f * h.U[row][t];
        }
        h.pivots.push_back(col);
        ++row;
    }
    return h;
}

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw ArithmeticError("lattice value overflows 64-bit integer");
    return z.get_si();
}

std::vector<long> to_longs(const std::vector<mpz_class>& v) {
    std::vector<long> r;
    r.reserve(v.size());
    for (const auto& z : v) r.push_back(to_long(z));
    return r;
}

}  // namespace

LatticeAnswer solve_lattice(const LatticeSystem& sys) {
    const std::size_t R = sys.A.size(), s = sys.unknowns;
    ZMat M(R, std::vector<mpz_class>(s));
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < s; ++c) M[r][c] = sys.A[r][c];

    Hnf h = row_hnf(M, s);
    const std::size_t k = h.pivots.size();
    std::vector<mpz_class> bp(R, 0);
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t t = 0; t < R; ++t) bp[r] += h.U[r][t] * sys.b[t];

    LatticeAnswer ans;
    for (std::size_t r = k; r < R; ++r) {
        if (bp[r] != 0) {
            ans.certificate.y = to_longs(h.U[r]);
            ans.certificate.modulus = 0;
            return ans;
        }
    }

    // column reduction of the k pivot rows: E V^T = [L 0]
    ZMat Et(s, std::vector<mpz_class>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < s; ++c) Et[c][i] = h.H[i][c];
    Hnf h2 = row_hnf(Et, k);
    auto L = [&](std::size_t i, std::size_t j) -> const mpz_class& { return h2.H[j][i]; };

    std::vector<mpz_class> z(k);
    for (std::size_t i = 0; i < k; ++i) {
        mpz_class rhs = bp[i];
        for (std::size_t j = 0; j < i; ++j) rhs -= L(i, j) * z[j];
        if (rhs % L(i, i) != 0) {
            // w = e_i^T L^{-1}; scaled by the lcm of denominators
            std::vector<mpq_class> w(k, 0);
            w[i] = mpq_class(1, L(i, i));
            w[i].canonicalize();
            for (std::size_t jj = i; jj-- > 0;) {
                mpq_class acc = 0;
                for (std::size_t l = jj + 1; l <= i; ++l) acc += w[l] * mpq_class(L(l, jj));
                w[jj] = -acc / mpq_class(L(jj, jj));
            }
            mpz_class den = 1;
            for (const auto& x : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
            std::vector<mpz_class> y(R, 0);
            for (std::size_t l = 0; l < k; ++l) {
                mpq_class cl = w[l] * mpq_class(den);
                mpz_class ci = cl.get_num();
                for (std::size_t t = 0; t < R; ++t) y[t] += ci * h.U[l][t];
            }
            ans.certificate.y = to_longs(y);
            ans.certificate.modulus = to_long(den);
            return ans;
        }
        z[i] = rhs / L(i, i);
    }

    ans.feasible = true;
    std::vector<mpz_class> n(s, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t t = 0; t < s; ++t) n[t] += h2.U[i][t] * z[i];

    ZMat kern;
    for (std::size_t j = k; j < s; ++j) kern.push_back(h2.U[j]);
    if (!kern.empty()) {
        Hnf kh = row_hnf(kern, s);
        kern.assign(kh.H.begin(), kh.H.begin() + static_cast<long>(kh.pivots.size()));
        for (std::size_t r = 0; r < kern.size(); ++r) {
            std::size_t p = kh.pivots[r];
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), n[p].get_mpz_t(), kern[r][p].get_mpz_t());
            for (std::size_t t = 0; t < s; ++t) n[t] -= f * kern[r][t];
        }
    }
    ans.witness = to_longs(n);
    for (const auto& row : kern) ans.kernel.push_back(to_longs(row));
    return ans;
}

namespace {

bool satisfies(const LatticeSystem& sys, const GroupElement& x) {
    for (std::size_t r = 0; r < sys.A.size(); ++r) {
        mpz_class acc = 0;
        for (std::size_t c = 0; c < sys.unknowns; ++c) acc += mpz_class(sys.A[r][c]) * x[c];
        if (acc != sys.b[r]) return false;
    }
    return true;
}

}  // namespace

bool LatticeAnswer::verify(const LatticeSystem& sys) const {
    if (feasible) {
        if (witness.size() != sys.unknowns || !satisfies(sys, witness)) return false;
        for (const auto& kv : kernel)
            if (!satisfies(sys, group_add(witness, kv))) return false;
        return true;
    }
    const auto& y = certificate.y;
    if (y.size() != sys.A.size()) return false;
    mpz_class mod = certificate.modulus;
    for (std::size_t c = 0; c < sys.unknowns; ++c) {
        mpz_class acc = 0;
        for (std::size_t r = 0; r < y.size(); ++r) acc += mpz_class(y[r]) * sys.A[r][c];
        if (mod == 0 ? acc != 0 : acc % mod != 0) return false;
    }
    mpz_class rhs = 0;
    for (std::size_t r = 0; r < y.size(); ++r) rhs += mpz_class(y[r]) * sys.b[r];
    return mod == 0 ? rhs != 0 : rhs % mod != 0;
}

bool LatticeAnswer::contains(const GroupElement& x) const {
    if (!feasible || x.size() != witness.size()) return false;
    LatticeSystem sys(kernel.size());
    for (std::size_t t = 0; t < x.size(); ++t) {
        std::vector<long> row(kernel.size());
        for (std::size_t j = 0; j < kernel.size(); ++j) row[j] = kernel[j][t];
        sys.add_row(std::move(row), x[t] - witness[t], "");
    }
    return solve_lattice(sys).feasible;
}

std::string LatticeCertificate::describe(const LatticeSystem& sys) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t r = 0; r < y.size(); ++r) {
        if (y[r] == 0) continue;
        os << (first ? "" : " + ") << y[r] << "*(" << (r < sys.labels.size() ? sys.labels[r] : "row") << ")";
        first = false;
    }
    mpz_class rhs = 0;
    for (std::size_t r = 0; r < y.size(); ++r) rhs += mpz_class(y[r]) * sys.b[r];
    if (modulus == 0) os << " gives 0 = " << rhs.get_str();
    else os << " gives 0 = " << rhs.get_str() << " (mod " << modulus << ")";
    return os.str();
}

}  // namespace hopfcy

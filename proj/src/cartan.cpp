#include "hopfcy/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace hopfcy {

bool CartanMatrix::all_a1() const {
    return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.size() == 1; });
}

namespace {

// exact determinant by Bareiss elimination
mpz_class determinant(std::vector<std::vector<mpz_class>> M) {
    const std::size_t n = M.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && M[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

}  // namespace

CartanMatrix validate_cartan(const IntMatrix& A) {
    const std::size_t n = A.size();
    for (const auto& row : A)
        if (row.size() != n) throw CartanError("Cartan matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i][i] != 2) throw CartanError("Cartan matrix: a_" + std::to_string(i + 1) + std::to_string(i + 1) + " != 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (A[i][j] > 0)
                throw CartanError("Cartan matrix: positive off-diagonal entry at (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")");
            if ((A[i][j] == 0) != (A[j][i] == 0))
                throw CartanError("Cartan matrix: a_ij = 0 but a_ji != 0 at (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")");
        }
    }

    CartanMatrix C;
    C.A = A;
    C.component_of.assign(n, n);
    std::vector<Rational> dq(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (C.component_of[start] != n) continue;
        std::size_t cid = C.components.size();
        std::vector<std::size_t> comp;
        std::queue<std::size_t> todo;
        todo.push(start);
        C.component_of[start] = cid;
        dq[start] = 1;
        while (!todo.empty()) {
            std::size_t i = todo.front();
            todo.pop();
            comp.push_back(i);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || A[i][j] == 0) continue;
                Rational dj = dq[i] * A[i][j] / A[j][i];
                if (C.component_of[j] == n) {
                    C.component_of[j] = cid;
                    dq[j] = dj;
                    todo.push(j);
                } else if (dq[j] != dj) {
                    throw CartanError("Cartan matrix is not symmetrizable");
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        C.components.push_back(comp);
    }
    C.d.assign(n, 0);
    for (const auto& comp : C.components) {
        mpz_class l = 1;
        for (auto i : comp) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dq[i].get_den_mpz_t());
        mpz_class g = 0;
        for (auto i : comp) {
            mpz_class v = Rational(dq[i] * l).get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
        for (auto i : comp) C.d[i] = mpz_class(Rational(dq[i] * l).get_num() / g).get_si();
    }
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<mpz_class>> M(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) M[i][j] = mpz_class(C.d[i]) * A[i][j];
        if (determinant(M) <= 0)
            throw CartanError("Cartan matrix is not of finite type (leading minor " + std::to_string(k) + " <= 0)");
    }
    return C;
}

namespace {

IntMatrix connected_type(char letter, std::size_t n) {
    IntMatrix A(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) A[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j, long aij = -1, long aji = -1) {
        A[i][j] = aij;
        A[j][i] = aji;
    };
    auto chain = [&](std::size_t upto) {
        for (std::size_t i = 0; i + 1 < upto; ++i) link(i, i + 1);
    };
    switch (letter) {
        case 'A':
            if (n < 1) break;
            chain(n);
            return A;
        case 'B':
            if (n < 2) break;
            chain(n - 1);
            link(n - 2, n - 1, -2, -1);
            return A;
        case 'C':
            if (n < 2) break;
            chain(n - 1);
            link(n - 2, n - 1, -1, -2);
            return A;
        case 'D':
            if (n < 4) break;
            chain(n - 1);
            link(n - 3, n - 1);
            return A;
        case 'E':
            if (n < 6 || n > 8) break;
            // Bourbaki numbering: 1-3-4-5-6(-7-8), 2 attached to 4
            link(0, 2);
            link(2, 3);
            link(1, 3);
            for (std::size_t i = 3; i + 1 < n; ++i) link(i, i + 1);
            return A;
        case 'F':
            if (n != 4) break;
            link(0, 1);
            link(1, 2, -2, -1);
            link(2, 3);
            return A;
        case 'G':
            if (n != 2) break;
            link(0, 1, -1, -3);
            return A;
        default:
            break;
    }
    throw CartanError(std::string("unknown Cartan type ") + letter + std::to_string(n));
}

}  // namespace

CartanMatrix cartan_from_type(const std::string& type) {
    std::vector<IntMatrix> blocks;
    std::stringstream ss(type);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        part.erase(std::remove_if(part.begin(), part.end(), [](char c) { return c == ' ' || c == '_'; }), part.end());
        if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
            throw CartanError("cannot parse Cartan type '" + type + "'");
        std::size_t n = 0;
        try {
            std::size_t used = 0;
            n = std::stoul(part.substr(1), &used);
            if (used != part.size() - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw CartanError("cannot parse Cartan type '" + type + "'");
        }
        blocks.push_back(connected_type(static_cast<char>(std::toupper(part[0])), n));
    }
    if (blocks.empty()) throw CartanError("empty Cartan type");
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.size();
    IntMatrix A(total, std::vector<long>(total, 0));
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) A[off + i][off + j] = b[i][j];
        off += b.size();
    }
    CartanMatrix C = validate_cartan(A);
    C.type_name = type;
    return C;
}

std::vector<long> reflect(const CartanMatrix& C, std::size_t i, const std::vector<long>& beta) {
    long c = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) c += C.A[i][j] * beta[j];
    std::vector<long> r = beta;
    r[i] -= c;
    return r;
}

RootSystem positive_roots(const CartanMatrix& C) {
    const std::size_t n = C.rank();
    std::set<std::vector<long>> seen;
    std::queue<std::vector<long>> todo;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<long> a(n, 0);
        a[k] = 1;
        seen.insert(a);
        todo.push(a);
    }
    while (!todo.empty()) {
        auto beta = todo.front();
        todo.pop();
        for (std::size_t i = 0; i < n; ++i) {
            auto r = reflect(C, i, beta);
            bool positive = std::all_of(r.begin(), r.end(), [](long x) { return x >= 0; });
            if (positive && seen.insert(r).second) todo.push(r);
        }
    }
    RootSystem R;
    R.roots.assign(seen.begin(), seen.end());
    auto height = [](const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); };
    std::sort(R.roots.begin(), R.roots.end(), [&](const auto& a, const auto& b) {
        long ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    R.j.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<long> a(n, 0);
        a[k] = 1;
        R.j[k] = static_cast<std::size_t>(std::find(R.roots.begin(), R.roots.end(), a) - R.roots.begin());
    }
    return R;
}

std::string root_str(const std::vector<long>& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "+";
        if (m[i] != 1) os << m[i];
        os << "a" << (i + 1);
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace hopfcy

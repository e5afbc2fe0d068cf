#pragma once
// The free abelian group Γ = Z^s, monomial-valued characters on it, and exact
// integer linear system solving with witnesses and infeasibility certificates.

#include <string>
#include <vector>

#include "hopfcy/scalars.hpp"

namespace hopfcy {

using GroupElement = std::vector<long>;
using IntMatrix = std::vector<std::vector<long>>;

GroupElement group_add(const GroupElement& a, const GroupElement& b);
GroupElement group_neg(const GroupElement& a);
GroupElement group_scale(const GroupElement& a, long k);
bool group_is_identity(const GroupElement& a);
GroupElement unit_vector(std::size_t s, std::size_t j, long v = 1);

// χ(y_j) = ∏_t q_t^{E[j][t]}, coefficient 1.
class Character {
public:
    Character() = default;
    Character(std::size_t s, std::size_t m) : E_(s, std::vector<long>(m, 0)), m_(m) {}
    explicit Character(IntMatrix E, std::size_t m);
    static Character trivial(std::size_t s, std::size_t m) { return Character(s, m); }
    // from the values on the basis y_1..y_s
    static Character from_values(const std::vector<Monomial>& values, std::size_t m);

    std::size_t rank() const { return E_.size(); }
    std::size_t nparams() const { return m_; }
    const IntMatrix& matrix() const { return E_; }
    Monomial on_basis(std::size_t j) const { return Monomial(1, E_.at(j)); }
    Monomial operator()(const GroupElement& g) const;
    Exps exponent_at(const GroupElement& g) const;

    Character operator*(const Character& o) const;
    Character inverse() const;
    Character pow(long k) const;
    bool is_trivial() const;

    bool operator==(const Character& o) const { return E_ == o.E_ && m_ == o.m_; }
    bool operator!=(const Character& o) const { return !(*this == o); }

private:
    IntMatrix E_;
    std::size_t m_ = 0;
};

Monomial char_eval(const Character& chi, const GroupElement& g);
Character char_product(const std::vector<Character>& chars);

struct LatticeSystem {
    IntMatrix A;                     // rows x s
    std::vector<long> b;             // rows
    std::vector<std::string> labels; // one per row, for reports
    std::size_t unknowns = 0;

    explicit LatticeSystem(std::size_t s = 0) : unknowns(s) {}
    void add_row(std::vector<long> coeffs, long rhs, std::string label);
    // adds one row per parameter: Σ_k n_k E_k = target exponents
    void add_monomial_rows(const std::vector<Exps>& per_unknown, const Exps& target,
                           const std::string& label, const ParamList& params);
};

struct LatticeCertificate {
    std::vector<long> y;  // one multiplier per row
    long modulus = 0;     // 0: y·A = 0 and y·b != 0; k > 0: y·A = 0 mod k, y·b != 0 mod k
    std::string describe(const LatticeSystem& sys) const;
};

struct LatticeAnswer {
    bool feasible = false;
    GroupElement witness;
    std::vector<GroupElement> kernel;
    LatticeCertificate certificate;

    // Re-checks the witness, every witness+kernel generator, or the certificate.
    bool verify(const LatticeSystem& sys) const;
    // true when x lies in witness + span_Z(kernel)
    bool contains(const GroupElement& x) const;
};

LatticeAnswer solve_lattice(const LatticeSystem& sys);

}  // namespace hopfcy

#pragma once
// Generic data of finite Cartan type, linking data, cocycles on Γ and their
// Masuoka-shape extension, deformed data and coboundary normalization.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfcy/cartan.hpp"

namespace hopfcy {

struct DatumError : ConfigError {
    using ConfigError::ConfigError;
};

enum class Mode { Strict, Permissive };

using IndexPair = std::pair<std::size_t, std::size_t>;  // 0-based, first < second
using PairValues = std::map<IndexPair, RF>;

struct DatumInput {
    ParamList params;
    std::size_t s = 0;
    CartanMatrix cartan;
    std::vector<GroupElement> g;
    std::vector<Character> chi;
    PairValues linking;
};

struct GenericDatum {
    ParamList params;
    std::size_t s = 0;
    CartanMatrix cartan;
    std::vector<GroupElement> g;
    std::vector<Character> chi;
    std::vector<Monomial> qI;  // per component
    PairValues linking;        // nonzero entries only
    std::vector<std::string> warnings;

    std::size_t theta() const { return g.size(); }
    std::size_t m() const { return params.size(); }
    RF lambda(std::size_t i, std::size_t j) const;
    // q_ij = χ_j(g_i)
    Monomial q(std::size_t i, std::size_t j) const { return chi.at(j)(g.at(i)); }
};

GenericDatum validate_datum(const DatumInput& in, Mode mode = Mode::Strict);
std::vector<std::vector<Monomial>> braiding_matrix(const GenericDatum& d);

// g_β = Σ m_i g_i and χ_β = ∏ χ_i^{m_i}
GroupElement root_group(const GenericDatum& d, const std::vector<long>& m);
Character root_char(const GenericDatum& d, const std::vector<long>& m);

// Coboundary f(g) = ∏ c_j^{g_j} q^{Lg + gᵀQg}
struct Coboundary {
    std::vector<Rational> c;
    std::vector<Exps> L;
    std::vector<std::vector<Exps>> Q;

    static Coboundary identity(std::size_t s, std::size_t m);
    Monomial operator()(const GroupElement& g) const;
};

// A 2-cocycle class on Γ = Z^s, stored by its ratio lattice U, with an explicit
// representative σ(a,b) = ρ(a,b) f(a)^{-1} f(b)^{-1} f(a+b) where
// ρ(a,b) = ∏_{j<k} U_jk^{a_j b_k} and f(g) = ∏ c_j^{g_j} · q^{Lg + gᵀQg}.
class CocycleData {
public:
    CocycleData() = default;
    CocycleData(std::size_t s, std::size_t m);
    static CocycleData trivial(std::size_t s, std::size_t m) { return CocycleData(s, m); }
    // ratio σ(y_j,y_k)/σ(y_k,y_j) = q^e; sets U[k][j] = -e
    void set_ratio(std::size_t j, std::size_t k, const Exps& e);

    std::size_t rank() const { return s_; }
    std::size_t nparams() const { return m_; }
    const Exps& U(std::size_t j, std::size_t k) const { return U_.at(j).at(k); }
    bool ratio_trivial() const;
    bool has_coboundary() const;

    Monomial ratio(const GroupElement& g, const GroupElement& h) const;
    Monomial representative(const GroupElement& g, const GroupElement& h) const;
    Monomial f(const GroupElement& g) const;
    Monomial value(const GroupElement& g, const GroupElement& h) const;
    Monomial inverse_value(const GroupElement& g, const GroupElement& h) const { return value(g, h).inverse(); }

    // multiplies the stored coboundary by f
    void apply_coboundary(const Coboundary& f);
    const Coboundary& coboundary() const { return f_; }
    // the class with ratios inverted, no coboundary
    CocycleData inverse_class() const;

private:
    std::size_t s_ = 0, m_ = 0;
    std::vector<std::vector<Exps>> U_;
    Coboundary f_;
};

Monomial cocycle_ratio(const CocycleData& sigma, const GroupElement& g, const GroupElement& h);

struct DeformedDatum {
    std::vector<Character> chi;                   // χ_i^σ
    std::vector<std::vector<Monomial>> q;         // q^σ_ij = χ_j^σ(g_i)
    std::vector<IndexPair> xi;                    // Ξ(σ)
    bool in_xi(std::size_t i, std::size_t j) const;
};

DeformedDatum deform_datum(const GenericDatum& d, const CocycleData& sigma);
// U(D^σ, λ): same datum with χ replaced by χ^σ, validated in the given mode
GenericDatum deformed_generic(const GenericDatum& d, const CocycleData& sigma, Mode mode);

struct CleftDatum {
    GenericDatum base;
    CocycleData sigma;
    PairValues pi;  // supported on Ξ(σ)

    RF pi_value(std::size_t i, std::size_t j) const;
};

CleftDatum make_cleft(GenericDatum base, CocycleData sigma, PairValues pi);

CleftDatum normalize_pair(const CleftDatum& cd, const Coboundary& f);

// Masuoka shape: group part plus values on (x_i, x_j)
struct HCocycle {
    CocycleData gamma_part;
    std::map<IndexPair, RF> xx_values;  // ordered pairs (i, j), any order

    RF xx(std::size_t i, std::size_t j) const;
};

HCocycle tau_from_cleft(const CleftDatum& cd);

}  // namespace hopfcy

#pragma once
// Presentations with confluent normal forms: twisted group algebras of Γ,
// skew polynomial algebras, A1-type bosonizations, their cleft objects and
// crossed products. Normal form is u^β ḡ x^α.

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopfcy/datum.hpp"

namespace hopfcy {

struct UnsupportedFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Letter {
    enum Kind { U = 0, G = 1, X = 2 };
    Kind kind = U;
    std::size_t index = 0;  // for U and X
    GroupElement g;         // for G

    static Letter u(std::size_t i) { return {U, i, {}}; }
    static Letter x(std::size_t k) { return {X, k, {}}; }
    static Letter grp(GroupElement g) { return {G, 0, std::move(g)}; }
    auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;

struct Key {
    Exps u;
    GroupElement g;
    Exps x;
    auto operator<=>(const Key&) const = default;
    long x_degree() const;
    long u_degree() const;
};

class AlgElement {
public:
    AlgElement() = default;
    explicit AlgElement(std::size_t m) : m_(m) {}
    AlgElement(std::size_t m, const Key& k, const RF& c);

    std::size_t nparams() const { return m_; }
    const std::map<Key, RF>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Key& k, const RF& c);
    RF coeff(const Key& k) const;

    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    AlgElement operator+(const AlgElement& o) const { AlgElement r = *this; r += o; return r; }
    AlgElement operator-(const AlgElement& o) const { AlgElement r = *this; r -= o; return r; }
    AlgElement operator*(const RF& c) const;
    bool operator==(const AlgElement& o) const;
    bool operator!=(const AlgElement& o) const { return !(*this == o); }

    // c when the element is c·(single key k); nullopt otherwise
    std::optional<RF> scalar_of(const Key& k) const;

private:
    std::size_t m_ = 0;
    std::map<Key, RF> terms_;
};

enum class Family { GroupOnly, QuantumAffine, Bosonization, Crossed };
std::string family_name(Family f);

struct Rule {
    Word lhs;
    std::string name;
};

struct ConfluenceReport {
    bool ok = true;
    std::size_t checked = 0, skipped = 0;
    std::string failure;  // first failing overlap
};

class Presentation {
public:
    ParamList params;
    std::size_t s = 0;
    CocycleData sigma;                            // ḡ h̄ = σ(g,h) overline{g+h}
    std::vector<GroupElement> gx;                 // g_k for x_k
    std::vector<Character> chi;                   // ḡ x_k = χ_k(g) x_k ḡ
    std::map<IndexPair, AlgElement> xconst;       // i<j: x_i x_j − χ_j(g_i) x_j x_i = c_ij
    std::set<IndexPair> x_missing;                // pairs with no usable relation
    std::vector<std::vector<RF>> p;               // i<j: u_j u_i = p[i][j] u_i u_j
    std::vector<Character> u_char;                // ḡ u_i = λ_i(g) u_i ḡ
    std::vector<std::vector<std::vector<RF>>> xact;  // x_k u_i = Σ_j xact[k][j][i] u_j + λ_i(g_k) u_i x_k
    std::vector<std::string> u_names, x_names;
    Family family = Family::GroupOnly;

    std::size_t n_u() const { return u_char.size(); }
    std::size_t n_x() const { return gx.size(); }
    std::size_t m() const { return params.size(); }
    bool partial() const { return !x_missing.empty(); }
    Monomial qx(std::size_t i, std::size_t j) const { return chi.at(j)(gx.at(i)); }

    Key unit_key() const;
    Key group_key(const GroupElement& g) const;
    AlgElement one() const;
    AlgElement scalar(const RF& c) const;
    AlgElement letter(const Letter& l) const;
    AlgElement word(const Word& w) const;
    AlgElement mul(const AlgElement& a, const AlgElement& b) const;
    AlgElement mul_letter(const AlgElement& a, const Letter& l) const;
    Word letters_of(const Key& k) const;
    // ḡ^{-1} = σ(g,−g)^{-1} overline{−g}
    AlgElement group_inverse(const GroupElement& g) const;

    // generators used for overlap checks and endomorphism certification
    std::vector<Letter> generators() const;
    std::vector<Rule> rules() const;
    ConfluenceReport check_confluence() const;

    std::string key_str(const Key& k) const;
    std::string str(const AlgElement& a) const;

private:
    AlgElement mul_key(const Key& k, const Letter& l) const;
    mutable std::map<std::pair<Key, Letter>, AlgElement> memo_;
};

// Skew polynomial algebra k<u_1..u_n>/(u_j u_i − p_ij u_i u_j) with a diagonal
// Γ-action and skew-primitive actions on generators.
struct ModuleAlgebraData {
    std::vector<std::string> names;
    std::vector<std::vector<RF>> p;                  // i<j
    std::vector<Character> group_char;               // g·u_i = λ_i(g) u_i
    std::vector<std::vector<std::vector<RF>>> xact;  // x_k·u_i = Σ_j xact[k][j][i] u_j
};

Presentation build_group_algebra(const ParamList& params, const CocycleData& sigma);
Presentation build_udlambda(const GenericDatum& d);
Presentation build_cleft(const CleftDatum& cd);
// H-part given as a presentation (U(D,λ), B(σ,π) or U(D^σ,λ)); checks the
// module-algebra conditions through the overlap check
Presentation build_crossed(const ModuleAlgebraData& a, const Presentation& h);
// checks overlaps and throws AlgebraError naming the first failing one
void require_confluent(const Presentation& p);
AlgElement normal_form(const Presentation& p, const Word& w);

// x_k ↦ x_scale[k]·x_{perm[k]} + x_shift[k]; ḡ ↦ twist(g)·ḡ; u_i ↦ Σ_j u_map[j][i] u_j
struct GradedEndomorphism {
    std::vector<RF> x_scale, x_shift;
    std::vector<std::size_t> perm;
    Character group_twist;
    std::vector<std::vector<RF>> u_map;
    std::vector<std::string> provenance;

    static GradedEndomorphism identity(const Presentation& p);
    bool u_diagonal() const;
    bool has_shift() const;

    AlgElement apply_letter(const Presentation& p, const Letter& l) const;
    AlgElement apply(const Presentation& p, const AlgElement& a) const;
    GradedEndomorphism compose(const GradedEndomorphism& inner) const;  // this ∘ inner, diagonal parts only
};

struct Certification {
    bool ok = true;
    std::string failing_relation;
};

Certification certify_endomorphism(const Presentation& p, const GradedEndomorphism& phi);
// a ↦ h̄ a h̄^{-1}, read off on generators
GradedEndomorphism inner_conjugation(const Presentation& p, const GroupElement& h);
// compares images of all generators
bool same_on_generators(const Presentation& p, const GradedEndomorphism& a, const GradedEndomorphism& b);

// ---- coalgebra side of H = U(D,λ) on elements of x-degree ≤ 1 ----

struct UnsupportedElement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TensorTerm {
    RF c;
    std::vector<Key> slots;
};

class HopfCalc {
public:
    explicit HopfCalc(const Presentation& hopf);
    const Presentation& H() const { return H_; }

    std::vector<TensorTerm> coproduct(const Key& k, std::size_t n) const;
    AlgElement antipode(const AlgElement& a) const;
    AlgElement antipode_inv(const AlgElement& a) const;
    RF counit(const AlgElement& a) const;

    // Masuoka-shape evaluation; inverse = convolution inverse
    RF eval(const HCocycle& c, bool inverse, const AlgElement& a, const AlgElement& b) const;
    RF eval(const HCocycle& c, bool inverse, const Key& a, const Key& b) const;

    // S_{σ,τ}: H(σ,τ) → H(τ,σ)
    AlgElement gen_antipode(const HCocycle& sigma, const HCocycle& tau, const AlgElement& h) const;
    // S^{-1}_{σ,τ}: H(τ,σ) → H(σ,τ)
    AlgElement gen_antipode_inv(const HCocycle& sigma, const HCocycle& tau, const AlgElement& h) const;
    // product of H(σ,τ)
    AlgElement cog_product(const HCocycle& sigma, const HCocycle& tau, const AlgElement& a, const AlgElement& b) const;

    HCocycle trivial_cocycle() const;
    AlgElement basis(const GroupElement& g) const;
    AlgElement basis(const GroupElement& g, std::size_t k) const;  // (g x_k)_H

private:
    AlgElement key_antipode(const Key& k, bool inverse) const;
    Presentation H_;
};

// identification of the vector space of _τH with the presentation of B(σ,π)
AlgElement cleft_vector_to_b(const Presentation& b, const HCocycle& tau, const AlgElement& v);

}  // namespace hopfcy

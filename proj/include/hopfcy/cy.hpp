#pragma once
// Homological integrals, Nakayama automorphisms of U(D,λ), its cleft objects
// and crossed/smash products with quantum affine spaces, and Calabi-Yau
// decisions by integer lattice search for an inner conjugation.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcy/algebra.hpp"
#include "hopfcy/koszul.hpp"

namespace hopfcy {

struct IntegralCharacter {
    Character zeta;          // on Γ
    std::vector<RF> on_x;    // value on each x_k
    std::size_t gldim = 0;   // p + s
};

IntegralCharacter integral_character(const GenericDatum& d);

enum class ObjectKind { Hopf, Cleft, Smash, Crossed };
std::string object_name(ObjectKind k);
ObjectKind parse_object(const std::string& s);

// Lattice search for w with inner_conjugation(w) = phi on every generator.
struct InnerSearch {
    std::string obstruction;  // nonempty: phi is not of conjugation shape at all
    LatticeSystem system;
    LatticeAnswer answer;
    bool witness_verified = false;  // inner_conjugation(witness) == phi on generators
    bool sweep_ok = true;           // no small-box candidate solves an infeasible system

    bool feasible() const { return obstruction.empty() && answer.feasible; }
};

InnerSearch search_inner(const Presentation& p, const GradedEndomorphism& phi);
bool system_satisfied(const LatticeSystem& sys, const GroupElement& x);

struct Check {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct CYReport {
    ObjectKind object = ObjectKind::Hopf;
    Presentation presentation;
    GradedEndomorphism nakayama;
    Certification certified;
    std::size_t gldim = 0;
    bool twisted_cy = true;
    bool cy = false;
    std::string reason;
    InnerSearch inner;
    std::vector<Check> checks;
    std::vector<std::string> provenance;

    bool all_checks_ok() const;
};

// x_k ↦ q_kk x_k, ḡ ↦ ζ(g) ḡ
GradedEndomorphism nakayama_hopf(const GenericDatum& d);

struct AltNakayama {
    GradedEndomorphism nu;      // x_k ↦ ∏_{i≠j_k} χ_{β_i}(g_k) x_k, ḡ ↦ ζ(g) ḡ
    GroupElement conjugator;    // -Σ g_β
    bool related = false;       // ν = inner_conjugation(conjugator) ∘ μ on generators
};
AltNakayama nakayama_hopf_alt(const GenericDatum& d);

CYReport decide_cy_hopf(const GenericDatum& d);

// closed form on B(σ,π), cross-checked against the generalized-antipode route
GradedEndomorphism nakayama_cleft(const CleftDatum& cd, std::vector<Check>* checks = nullptr);
// the cleft-route map evaluated on one basis element (g or g x_k) of H, pushed into B
AlgElement cleft_route_image(const CleftDatum& cd, const Presentation& b, const Key& hkey);
CYReport decide_cy_cleft(const CleftDatum& cd);
// rows A (ratio against ζ) and rows B (χ_k(h) against the ν-form) of the cleft criterion
LatticeSystem cleft_criterion_system(const CleftDatum& cd);

// crossed: A #_σ H with H-part B(σ,π); smash: A # H^σ with H^σ = U(D^σ,λ)
struct CrossedInput {
    ModuleAlgebraData a;
    CleftDatum cd;
    ObjectKind kind = ObjectKind::Crossed;
    Mode mode = Mode::Strict;
};

Presentation crossed_presentation(const CrossedInput& in);
Koszul koszul_of(const ModuleAlgebraData& a, const ParamList& params);
KoszulAction action_of(const ModuleAlgebraData& a, const std::vector<GroupElement>& gx);
GradedEndomorphism nakayama_crossed(const CrossedInput& in, std::vector<Check>* checks = nullptr);
CYReport decide_cy_crossed(const CrossedInput& in);

// [ξ]^l(h) = ξ(h_1)h_2 and [ξ]^r(h) = h_1ξ(h_2) on U(D,λ)
GradedEndomorphism winding(const Presentation& h, const IntegralCharacter& xi, bool left);
// ν(h) = ξ(h_1)S²(h_2)
GradedEndomorphism kk1_nakayama(const Presentation& h, const IntegralCharacter& xi);
// η = ξ∘S on Γ
Character eta_of(const IntegralCharacter& xi);

}  // namespace hopfcy

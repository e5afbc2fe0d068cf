#pragma once
// Declarative session input: YAML (or its JSON subset) describing a datum,
// a cocycle class, π values and a module algebra with its Hopf action.

#include <optional>
#include <string>

#include <json.hpp>

#include "hopfcy/cy.hpp"

namespace hopfcy {

struct SessionConfig {
    ParamList params;
    Mode mode = Mode::Strict;
    std::size_t max_koszul_degree = 6;

    std::optional<GenericDatum> datum;
    CocycleData sigma;  // trivial when absent
    PairValues pi;

    // N-homogeneous algebra from the algebra block; module data only when it is
    // given by commutation rules (quantum affine form)
    std::optional<NHomogeneousAlgebra> algebra;
    std::optional<ModuleAlgebraData> module;

    nlohmann::json echo;  // the input tree, normalized

    const GenericDatum& require_datum() const;
    const NHomogeneousAlgebra& require_algebra() const;
    const ModuleAlgebraData& require_module() const;
    CleftDatum cleft() const;
    CrossedInput crossed(ObjectKind kind) const;
};

// Errors carry "line L, column C: field F: message" when a location is known.
SessionConfig parse_config(const std::string& text);
SessionConfig load_config(const std::string& path);

}  // namespace hopfcy

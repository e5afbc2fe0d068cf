#pragma once
// Finite-type Cartan matrices and their positive roots.

#include <string>
#include <vector>

#include "hopfcy/lattice.hpp"

namespace hopfcy {

struct CartanError : ConfigError {
    using ConfigError::ConfigError;
};

struct CartanMatrix {
    IntMatrix A;
    std::vector<long> d;                          // minimal symmetrizer, per component gcd 1
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> component_of;
    std::string type_name;                        // informational, e.g. "A2xA2"

    std::size_t rank() const { return A.size(); }
    bool same_component(std::size_t i, std::size_t j) const { return component_of.at(i) == component_of.at(j); }
    // true when every connected component has a single vertex
    bool all_a1() const;
};

CartanMatrix validate_cartan(const IntMatrix& A);
// "A2", "B3", "C2", "D4", "G2", "F4", "E6".."E8", products joined by 'x', e.g. "A2xA2".
CartanMatrix cartan_from_type(const std::string& type);

struct RootSystem {
    std::vector<std::vector<long>> roots;  // coordinates over simple roots
    std::vector<std::size_t> j;            // roots[j[k]] == alpha_k

    std::size_t p() const { return roots.size(); }
};

// s_i(beta) = beta - (sum_j a_ij m_j) alpha_i
std::vector<long> reflect(const CartanMatrix& C, std::size_t i, const std::vector<long>& beta);
RootSystem positive_roots(const CartanMatrix& C);
std::string root_str(const std::vector<long>& m);

}  // namespace hopfcy

#pragma once
// N-homogeneous algebras T(V)/<R>, their homogeneous duals, the bimodule
// complexes K_b and L_b sliced by internal degree, the Frobenius Nakayama map
// of the dual, and homological determinants of Hopf actions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfcy/lattice.hpp"

namespace hopfcy {

struct KoszulError : ConfigError {
    using ConfigError::ConfigError;
};
struct ActionError : ConfigError {
    using ConfigError::ConfigError;
};

// Sparse vector over an ordered index set. Used for tensors, with words of a
// fixed length t over {0..n-1} encoded in base n, first letter most significant.
template <class K>
using SparseVec = std::map<K, RF>;
using TensorVec = SparseVec<long>;

template <class K>
void sv_axpy(SparseVec<K>& v, const RF& c, const SparseVec<K>& w) {
    if (c.is_zero()) return;
    for (const auto& [k, x] : w) {
        auto it = v.find(k);
        if (it == v.end()) {
            v.emplace(k, c * x);
            continue;
        }
        it->second += c * x;
        if (it->second.is_zero()) v.erase(it);
    }
}

// Row echelon basis with pivot = smallest index of each row, pivot entry 1.
template <class K>
class EchelonT {
public:
    using Vec = SparseVec<K>;

    Vec reduce(Vec v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto rit = rows_.find(it->first);
            if (rit == rows_.end()) {
                ++it;
                continue;
            }
            K key = it->first;
            RF c = it->second;
            sv_axpy(v, -c, rit->second);
            it = v.upper_bound(key);
        }
        return v;
    }

    bool insert(Vec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        K p = v.begin()->first;
        RF inv = v.begin()->second.inverse();
        for (auto& [k, x] : v) x *= inv;
        rows_.emplace(p, std::move(v));
        return true;
    }

    bool contains(const Vec& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(const K& k) const { return rows_.count(k) != 0; }
    const std::map<K, Vec>& rows() const { return rows_; }

    // reduced form: no row has a nonzero entry in another row's pivot column
    std::map<K, Vec> rref() const {
        std::map<K, Vec> out;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            Vec r = it->second;
            for (auto e = std::next(r.begin()); e != r.end();) {
                auto o = out.find(e->first);
                if (o == out.end()) {
                    ++e;
                    continue;
                }
                K key = e->first;
                RF c = e->second;
                sv_axpy(r, -c, o->second);
                e = r.upper_bound(key);
            }
            out.emplace(it->first, std::move(r));
        }
        return out;
    }

private:
    std::map<K, Vec> rows_;
};

using Echelon = EchelonT<long>;

long ipow(long n, std::size_t k);
// n(2k) = Nk, n(2k+1) = Nk+1
std::size_t n_func(std::size_t i, std::size_t N);
long reverse_word(long code, std::size_t n, std::size_t len);
std::string word_str(long code, std::size_t len, const std::vector<std::string>& names);
// vectors x with Σ_c row_c x_c = 0 for every row, over indices 0..ncols-1
std::vector<TensorVec> kernel_basis(const Echelon& rows, long ncols, std::size_t m);

struct NHomogeneousAlgebra {
    ParamList params;
    std::vector<std::string> names;
    std::size_t N = 2;
    std::vector<TensorVec> R;  // in V^{⊗N}

    std::size_t n() const { return names.size(); }
    std::size_t m() const { return params.size(); }
};

// u_j u_i = p[i][j] u_i u_j for i < j
NHomogeneousAlgebra quantum_affine(const ParamList& params, const std::vector<std::string>& names,
                                   const std::vector<std::vector<RF>>& p);

class Koszul {
public:
    explicit Koszul(NHomogeneousAlgebra a);
    const NHomogeneousAlgebra& algebra() const { return A_; }
    std::size_t n() const { return A_.n(); }
    std::size_t N() const { return A_.N; }
    std::size_t m() const { return A_.m(); }

    const std::vector<TensorVec>& dual_relations() const { return Rperp_; }

    std::size_t dim(std::size_t t) const { return normal_words(t).size(); }
    std::size_t dual_dim(std::size_t t) const { return dual_normal_words(t).size(); }
    const std::vector<long>& normal_words(std::size_t t) const { return side(false, t).normal; }
    const std::vector<long>& dual_normal_words(std::size_t t) const { return side(true, t).normal; }

    // normal forms in A_t and A^!_t
    TensorVec reduce(std::size_t t, const TensorVec& v) const { return reduce_side(false, t, v); }
    TensorVec dual_reduce(std::size_t t, const TensorVec& v) const { return reduce_side(true, t, v); }
    TensorVec reduce_word(std::size_t t, long w) const { return word_nf(false, t, w); }
    TensorVec dual_reduce_word(std::size_t t, long w) const { return word_nf(true, t, w); }
    TensorVec mul(std::size_t ta, const TensorVec& a, std::size_t tb, const TensorVec& b) const;
    TensorVec dual_mul(std::size_t ta, const TensorVec& a, std::size_t tb, const TensorVec& b) const;

    // (A^!_t)^* realized inside V^{⊗t}; equals ∩ V^{⊗i}⊗R⊗V^{⊗(t-N-i)}
    const std::vector<TensorVec>& W(std::size_t t) const;

    // first t with A^!_t = 0, scanning up to bound
    std::size_t dual_top(std::size_t bound = 24) const;

private:
    struct Side {
        bool built = false;
        bool full = false;  // ideal is all of the tensor power
        Echelon ideal;
        std::vector<long> normal;
        std::map<long, TensorVec> memo;
    };
    const Side& side(bool dual, std::size_t t) const;
    TensorVec reduce_side(bool dual, std::size_t t, const TensorVec& v) const;
    TensorVec word_nf(bool dual, std::size_t t, long w) const;

    NHomogeneousAlgebra A_;
    std::vector<TensorVec> Rperp_;
    mutable std::map<std::size_t, Side> sides_[2];
    mutable std::map<std::size_t, std::vector<TensorVec>> W_;
};

struct SliceReport {
    std::size_t degree = 0;
    std::vector<std::size_t> dims;      // dim of K_p in this degree, p = 0,1,...
    std::vector<std::size_t> ranks;     // rank of the arrow out of K_p (p = 0: multiplication)
    std::vector<long> homology;         // at K_p, then last entry = cokernel of multiplication
    bool exact = true;
    bool commute = true;                // d_l d_r = d_r d_l
    bool complex = true;                // consecutive arrows compose to zero
};

struct KoszulReport {
    std::vector<SliceReport> slices;
    std::vector<std::size_t> dims, dual_dims;
    bool exact = true, commute = true, complex = true;
    std::optional<bool> com_ok;         // (com) check, when the dual is Frobenius
    std::string failure;
};

KoszulReport koszulity_certificate(const Koszul& K, std::size_t max_degree, bool with_com = true);

struct FrobeniusResult {
    std::size_t d = 0;                  // global dimension
    std::size_t top = 0;                // n(d)
    long tau = 0;                       // normal word spanning A^!_top
    std::vector<std::vector<RF>> Q;     // φ(e_i^*) = Σ_j Q[j][i] e_j^*
    std::vector<std::vector<RF>> mu;    // μ(e_i) = Σ_j mu[j][i] e_j
    std::vector<std::size_t> dual_dims;
};

FrobeniusResult frobenius_nakayama(const Koszul& K);
// μ applied to an element of A_t (given by normal words)
TensorVec apply_linear(const Koszul& K, const std::vector<std::vector<RF>>& M, std::size_t t, const TensorVec& v);
// u∘δ on A⊗A^!_{top-1}⊗A for outer degrees a + b <= bound
bool check_com(const Koszul& K, const FrobeniusResult& F, std::size_t bound, std::string* failure = nullptr);

// Hopf action on V: ḡ·u_i = λ_i(g) u_i and x_k·u_i = Σ_j xact[k][j][i] u_j,
// with Δ(x_k) = x_k⊗1 + g_k⊗x_k.
struct KoszulAction {
    std::vector<Character> group_char;
    std::vector<GroupElement> gx;
    std::vector<std::vector<std::vector<RF>>> xact;  // empty matrix = zero action
};

TensorVec act_group(const Koszul& K, const KoszulAction& a, const GroupElement& g, std::size_t t, const TensorVec& v);
TensorVec act_x(const Koszul& K, const KoszulAction& a, std::size_t k, std::size_t t, const TensorVec& v);
void check_action(const Koszul& K, const KoszulAction& a);
// t ◁ h = hdet(h) t on the top of A^!, read through (A^!_top)^* ⊂ V^{⊗top}
RF hdet_group(const Koszul& K, const KoszulAction& a, const GroupElement& g);
RF hdet_x(const Koszul& K, const KoszulAction& a, std::size_t k);
Character hdet_character(const Koszul& K, const KoszulAction& a, std::size_t s);

}  // namespace hopfcy

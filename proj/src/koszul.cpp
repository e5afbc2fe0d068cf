#include "hopfcy/koszul.hpp"

namespace hopfcy {

long ipow(long n, std::size_t k) {
    long r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= n;
    return r;
}

std::size_t n_func(std::size_t i, std::size_t N) { return (i / 2) * N + (i % 2); }

long reverse_word(long code, std::size_t n, std::size_t len) {
    long r = 0;
    for (std::size_t i = 0; i < len; ++i) {
        r = r * static_cast<long>(n) + code % static_cast<long>(n);
        code /= static_cast<long>(n);
    }
    return r;
}

std::string word_str(long code, std::size_t len, const std::vector<std::string>& names) {
    if (len == 0) return "1";
    const long n = static_cast<long>(names.size());
    std::vector<std::string> letters(len);
    for (std::size_t i = len; i-- > 0;) {
        letters[i] = names[static_cast<std::size_t>(code % n)];
        code /= n;
    }
    std::string r = letters[0];
    for (std::size_t i = 1; i < len; ++i) r += "*" + letters[i];
    return r;
}

std::vector<TensorVec> kernel_basis(const Echelon& rows, long ncols, std::size_t m) {
    auto red = rows.rref();
    std::vector<TensorVec> out;
    for (long c = 0; c < ncols; ++c) {
        if (red.count(c)) continue;
        TensorVec x;
        x.emplace(c, RF::one(m));
        for (const auto& [p, r] : red)
            if (auto it = r.find(c); it != r.end()) x.emplace(p, -it->second);
        out.push_back(std::move(x));
    }
    return out;
}

NHomogeneousAlgebra quantum_affine(const ParamList& params, const std::vector<std::string>& names,
                                   const std::vector<std::vector<RF>>& p) {
    NHomogeneousAlgebra a;
    a.params = params;
    a.names = names;
    a.N = 2;
    const long n = static_cast<long>(names.size());
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            TensorVec r;
            r.emplace(j * n + i, RF::one(params.size()));
            r.emplace(i * n + j, -p.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)));
            a.R.push_back(std::move(r));
        }
    return a;
}

// ------------------------------------------------------------------ Koszul

Koszul::Koszul(NHomogeneousAlgebra a) : A_(std::move(a)) {
    if (A_.N < 2) throw KoszulError("relations must have degree N >= 2");
    if (A_.n() == 0) throw KoszulError("algebra needs at least one generator");
    const long words = ipow(static_cast<long>(n()), A_.N);
    Echelon rev;
    Echelon check;
    for (const auto& r : A_.R) {
        TensorVec rr;
        for (const auto& [w, c] : r) {
            if (w < 0 || w >= words) throw KoszulError("relation index outside V^N");
            if (c.nvars() != m()) throw KoszulError("relation coefficient has the wrong parameter count");
            rr.emplace(reverse_word(w, n(), A_.N), c);
        }
        if (!check.insert(r)) throw KoszulError("relations are linearly dependent");
        rev.insert(rr);
    }
    // pairing reverses tensor factors
    Rperp_ = kernel_basis(rev, words, m());
}

const Koszul::Side& Koszul::side(bool dual, std::size_t t) const {
    auto& s = sides_[dual ? 1 : 0][t];
    if (s.built) return s;
    const long nn = static_cast<long>(n());
    const std::size_t N = A_.N;
    if (t > N && side(dual, t - 1).normal.empty()) {
        s.full = true;
        s.built = true;
        return s;
    }
    if (t >= N) {
        const auto& rel = dual ? Rperp_ : A_.R;
        for (std::size_t i = 0; i + N <= t; ++i) {
            const long left = ipow(nn, i), right = ipow(nn, t - N - i);
            for (long u = 0; u < left; ++u)
                for (long v = 0; v < right; ++v)
                    for (const auto& r : rel) {
                        TensorVec x;
                        for (const auto& [w, c] : r) x.emplace((u * ipow(nn, N) + w) * right + v, c);
                        s.ideal.insert(std::move(x));
                    }
        }
    }
    const long words = ipow(nn, t);
    for (long w = 0; w < words; ++w)
        if (!s.ideal.is_pivot(w)) s.normal.push_back(w);
    s.built = true;
    return s;
}

TensorVec Koszul::reduce_side(bool dual, std::size_t t, const TensorVec& v) const {
    const auto& s = side(dual, t);
    if (s.full) return {};
    return s.ideal.reduce(v);
}

TensorVec Koszul::word_nf(bool dual, std::size_t t, long w) const {
    const auto& s = side(dual, t);
    if (s.full) return {};
    auto& memo = sides_[dual ? 1 : 0][t].memo;
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    TensorVec v;
    v.emplace(w, RF::one(m()));
    auto r = s.ideal.reduce(std::move(v));
    memo.emplace(w, r);
    return r;
}

TensorVec Koszul::mul(std::size_t ta, const TensorVec& a, std::size_t tb, const TensorVec& b) const {
    TensorVec r;
    const long sh = ipow(static_cast<long>(n()), tb);
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) sv_axpy(r, cx * cy, word_nf(false, ta + tb, x * sh + y));
    return r;
}

TensorVec Koszul::dual_mul(std::size_t ta, const TensorVec& a, std::size_t tb, const TensorVec& b) const {
    TensorVec r;
    const long sh = ipow(static_cast<long>(n()), tb);
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) sv_axpy(r, cx * cy, word_nf(true, ta + tb, x * sh + y));
    return r;
}

const std::vector<TensorVec>& Koszul::W(std::size_t t) const {
    if (auto it = W_.find(t); it != W_.end()) return it->second;
    std::vector<TensorVec> out;
    const long words = ipow(static_cast<long>(n()), t);
    if (dual_dim(t) == 0) {
        // nothing
    } else if (t < A_.N) {
        for (long w = 0; w < words; ++w) out.push_back({{w, RF::one(m())}});
    } else {
        Echelon rev;
        for (const auto& [p, row] : side(true, t).ideal.rows()) {
            TensorVec r;
            for (const auto& [w, c] : row) r.emplace(reverse_word(w, n(), t), c);
            rev.insert(std::move(r));
        }
        out = kernel_basis(rev, words, m());
    }
    return W_.emplace(t, std::move(out)).first->second;
}

std::size_t Koszul::dual_top(std::size_t bound) const {
    for (std::size_t t = 0; t <= bound; ++t)
        if (dual_dim(t) == 0) return t;
    throw KoszulError("homogeneous dual is nonzero up to degree " + std::to_string(bound));
}

// ------------------------------------------------------------- K_b slices

namespace {

struct AKey {
    long a_deg, a, len, mid, b;
    auto operator<=>(const AKey&) const = default;
};
using AVec = SparseVec<AKey>;

class SliceOps {
public:
    SliceOps(const Koszul& K, long D) : K_(K), D_(D), n_(static_cast<long>(K.n())) {}

    AVec dl(const AVec& v) const {
        AVec r;
        for (const auto& [k, c] : v) {
            long sh = ipow(n_, static_cast<std::size_t>(k.len - 1));
            long i = k.mid / sh, rest = k.mid % sh;
            auto xe = K_.reduce_word(static_cast<std::size_t>(k.a_deg + 1), k.a * n_ + i);
            for (const auto& [w, cw] : xe) add(r, {k.a_deg + 1, w, k.len - 1, rest, k.b}, c * cw);
        }
        return r;
    }

    AVec dr(const AVec& v) const {
        AVec r;
        for (const auto& [k, c] : v) {
            long i = k.mid % n_, prefix = k.mid / n_;
            long bdeg = D_ - k.a_deg - k.len;
            auto ey = K_.reduce_word(static_cast<std::size_t>(bdeg + 1), i * ipow(n_, static_cast<std::size_t>(bdeg)) + k.b);
            for (const auto& [w, cw] : ey) add(r, {k.a_deg, k.a, k.len - 1, prefix, w}, c * cw);
        }
        return r;
    }

    AVec multiply(const AVec& v) const {
        AVec r;
        for (const auto& [k, c] : v) {
            long bdeg = D_ - k.a_deg - k.len;
            auto p = K_.reduce_word(static_cast<std::size_t>(D_), k.a * ipow(n_, static_cast<std::size_t>(bdeg)) + k.b);
            for (const auto& [w, cw] : p) add(r, {D_, w, 0, 0, 0}, c * cw);
        }
        return r;
    }

    // arrow out of position p of K_b
    AVec arrow(std::size_t p, const AVec& v) const {
        if (p == 0) return multiply(v);
        if (p % 2 == 1) {
            AVec r = dl(v);
            sv_axpy(r, RF(K_.m(), -1), dr(v));
            return r;
        }
        AVec r;
        const std::size_t N = K_.N();
        for (std::size_t a = 0; a < N; ++a) {
            AVec t = v;
            for (std::size_t j = 0; j + 1 < N - a; ++j) t = dr(t);
            for (std::size_t j = 0; j < a; ++j) t = dl(t);
            sv_axpy(r, RF::one(K_.m()), t);
        }
        return r;
    }

    std::vector<AVec> basis(std::size_t mlen) const {
        std::vector<AVec> out;
        const auto& W = K_.W(mlen);
        long ml = static_cast<long>(mlen);
        for (long a = 0; a + ml <= D_; ++a) {
            long b = D_ - ml - a;
            for (long x : K_.normal_words(static_cast<std::size_t>(a)))
                for (const auto& w : W)
                    for (long y : K_.normal_words(static_cast<std::size_t>(b))) {
                        AVec v;
                        for (const auto& [c, cc] : w) v.emplace(AKey{a, x, ml, c, y}, cc);
                        out.push_back(std::move(v));
                    }
        }
        return out;
    }

private:
    static void add(AVec& r, const AKey& k, const RF& c) {
        if (c.is_zero()) return;
        auto it = r.find(k);
        if (it == r.end()) {
            r.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
    }

    const Koszul& K_;
    long D_, n_;
};

SliceReport build_slice(const Koszul& K, std::size_t D) {
    SliceReport rep;
    rep.degree = D;
    SliceOps ops(K, static_cast<long>(D));
    std::vector<std::vector<AVec>> images;
    for (std::size_t p = 0;; ++p) {
        std::size_t ml = n_func(p, K.N());
        if (ml > D || K.W(ml).empty()) break;
        auto B = ops.basis(ml);
        EchelonT<AKey> ech;
        std::vector<AVec> img;
        img.reserve(B.size());
        for (const auto& b : B) {
            img.push_back(ops.arrow(p, b));
            ech.insert(img.back());
            if (ml >= 2 && rep.commute && ops.dl(ops.dr(b)) != ops.dr(ops.dl(b))) rep.commute = false;
        }
        if (p >= 1 && rep.complex)
            for (const auto& v : img)
                if (!ops.arrow(p - 1, v).empty()) {
                    rep.complex = false;
                    break;
                }
        rep.dims.push_back(B.size());
        rep.ranks.push_back(ech.rank());
        images.push_back(std::move(img));
    }
    const std::size_t P = rep.dims.size();
    for (std::size_t p = 0; p < P; ++p) {
        long ker = static_cast<long>(rep.dims[p]) - static_cast<long>(rep.ranks[p]);
        long im = p + 1 < P ? static_cast<long>(rep.ranks[p + 1]) : 0;
        rep.homology.push_back(ker - im);
    }
    rep.homology.push_back(static_cast<long>(K.dim(D)) - static_cast<long>(P ? rep.ranks[0] : 0));
    for (long h : rep.homology)
        if (h != 0) rep.exact = false;
    return rep;
}

}  // namespace

KoszulReport koszulity_certificate(const Koszul& K, std::size_t max_degree, bool with_com) {
    KoszulReport rep;
    for (std::size_t t = 0; t <= max_degree; ++t) {
        rep.dims.push_back(K.dim(t));
        rep.dual_dims.push_back(K.dual_dim(t));
    }
    for (std::size_t D = 0; D <= max_degree; ++D) {
        auto s = build_slice(K, D);
        if (!s.exact && rep.exact) {
            for (std::size_t p = 0; p < s.homology.size(); ++p)
                if (s.homology[p] != 0) {
                    std::string where = p + 1 == s.homology.size() ? "the augmentation" : "position " + std::to_string(p);
                    rep.failure = "internal degree " + std::to_string(D) + ": homology of dimension " +
                                  std::to_string(s.homology[p]) + " at " + where;
                    break;
                }
        }
        rep.exact = rep.exact && s.exact;
        rep.commute = rep.commute && s.commute;
        rep.complex = rep.complex && s.complex;
        rep.slices.push_back(std::move(s));
    }
    if (with_com) {
        try {
            auto F = frobenius_nakayama(K);
            std::string why;
            rep.com_ok = check_com(K, F, 2, &why);
            if (!*rep.com_ok && rep.failure.empty()) rep.failure = why;
        } catch (const KoszulError&) {
            rep.com_ok.reset();
        }
    }
    return rep;
}

// --------------------------------------------------------------- Frobenius

namespace {

// solves M X = B (M: r×n, B: r×k) requiring rank n and consistency
std::optional<std::vector<std::vector<RF>>> solve_dense(std::vector<std::vector<RF>> M, std::vector<std::vector<RF>> B,
                                                        std::size_t n, std::size_t k, std::size_t m) {
    const std::size_t r = M.size();
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = row;
        while (sel < r && M[sel][col].is_zero()) ++sel;
        if (sel == r) return std::nullopt;
        std::swap(M[sel], M[row]);
        std::swap(B[sel], B[row]);
        RF inv = M[row][col].inverse();
        for (auto& x : M[row]) x *= inv;
        for (auto& x : B[row]) x *= inv;
        for (std::size_t o = 0; o < r; ++o) {
            if (o == row || M[o][col].is_zero()) continue;
            RF f = M[o][col];
            for (std::size_t c = 0; c < n; ++c) M[o][c] -= f * M[row][c];
            for (std::size_t c = 0; c < k; ++c) B[o][c] -= f * B[row][c];
        }
        ++row;
    }
    for (std::size_t o = row; o < r; ++o)
        for (const auto& x : B[o])
            if (!x.is_zero()) return std::nullopt;
    std::vector<std::vector<RF>> X(n, std::vector<RF>(k, RF::zero(m)));
    for (std::size_t i = 0; i < n; ++i) X[i] = B[i];
    return X;
}

RF coeff_of(const TensorVec& v, long w, std::size_t m) {
    auto it = v.find(w);
    return it == v.end() ? RF::zero(m) : it->second;
}

}  // namespace

FrobeniusResult frobenius_nakayama(const Koszul& K) {
    FrobeniusResult F;
    const std::size_t n = K.n(), N = K.N(), m = K.m();
    const std::size_t end = K.dual_top();
    for (std::size_t t = 0; t < end; ++t) F.dual_dims.push_back(K.dual_dim(t));
    F.top = end - 1;
    bool found = false;
    for (std::size_t i = 0; n_func(i, N) <= F.top; ++i)
        if (n_func(i, N) == F.top) {
            F.d = i;
            found = true;
        }
    if (!found || F.d == 0) throw KoszulError("top degree " + std::to_string(F.top) + " of the dual is not n(d) for d >= 1");
    if (F.d % 2 == 0 && N != 2) throw KoszulError("even global dimension with N > 2 is not AS-regular");
    if (K.dual_dim(F.top) != 1)
        throw KoszulError("top component of the dual has dimension " + std::to_string(K.dual_dim(F.top)) + ", expected 1");
    for (std::size_t i = 0; i <= F.d; ++i)
        if (K.dual_dim(n_func(i, N)) != K.dual_dim(n_func(F.d - i, N)))
            throw KoszulError("dual dimensions are not symmetric (degree " + std::to_string(n_func(i, N)) + ")");
    F.tau = K.dual_normal_words(F.top).front();

    const auto& alphas = K.dual_normal_words(F.top - 1);
    const long nn = static_cast<long>(n);
    const long sh = ipow(nn, F.top - 1);
    std::vector<std::vector<RF>> M(alphas.size(), std::vector<RF>(n, RF::zero(m)));
    std::vector<std::vector<RF>> B = M;
    for (std::size_t a = 0; a < alphas.size(); ++a)
        for (std::size_t i = 0; i < n; ++i) {
            long ii = static_cast<long>(i);
            M[a][i] = coeff_of(K.dual_reduce_word(F.top, alphas[a] * nn + ii), F.tau, m);  // α e_i^*
            B[a][i] = coeff_of(K.dual_reduce_word(F.top, ii * sh + alphas[a]), F.tau, m);  // e_i^* α
        }
    auto Q = solve_dense(M, B, n, n, m);
    if (!Q) throw KoszulError("the top pairing of the dual is degenerate");
    F.Q = *Q;
    RF sign(m, (F.d + 1) % 2 == 0 ? 1 : -1);
    F.mu.assign(n, std::vector<RF>(n, RF::zero(m)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) F.mu[j][i] = sign * F.Q[i][j];
    return F;
}

TensorVec apply_linear(const Koszul& K, const std::vector<std::vector<RF>>& M, std::size_t t, const TensorVec& v) {
    const long nn = static_cast<long>(K.n());
    TensorVec raw;
    for (const auto& [w, c] : v) {
        TensorVec cur{{0, c}};
        for (std::size_t pos = 0; pos < t; ++pos) {
            long letter = (w / ipow(nn, t - 1 - pos)) % nn;
            TensorVec next;
            for (const auto& [u, cu] : cur)
                for (long j = 0; j < nn; ++j) {
                    const RF& mj = M[static_cast<std::size_t>(j)][static_cast<std::size_t>(letter)];
                    if (!mj.is_zero()) sv_axpy(next, cu * mj, TensorVec{{u * nn + j, RF::one(K.m())}});
                }
            cur = std::move(next);
        }
        for (const auto& [u, cu] : cur) sv_axpy(raw, cu, TensorVec{{u, RF::one(K.m())}});
    }
    return K.reduce(t, raw);
}

bool check_com(const Koszul& K, const FrobeniusResult& F, std::size_t bound, std::string* failure) {
    const std::size_t n = K.n(), m = K.m();
    const long nn = static_cast<long>(n);
    const long sh = ipow(nn, F.top - 1);
    const RF one = RF::one(m);
    RF sgn(m, F.d % 2 == 1 ? -1 : 1);
    const auto& alphas = K.dual_normal_words(F.top - 1);
    for (std::size_t a = 0; a <= bound; ++a)
        for (std::size_t b = 0; a + b <= bound; ++b)
            for (long x : K.normal_words(a))
                for (long al : alphas)
                    for (long y : K.normal_words(b)) {
                        TensorVec total;
                        TensorVec X{{x, one}}, Y{{y, one}};
                        TensorVec muy = apply_linear(K, F.mu, b, Y);
                        for (long i = 0; i < nn; ++i) {
                            RF cr = coeff_of(K.dual_reduce_word(F.top, al * nn + i), F.tau, m);
                            if (!cr.is_zero()) {
                                auto ey = K.reduce_word(b + 1, i * ipow(nn, b) + y);
                                sv_axpy(total, cr, K.mul(a, X, b + 1, apply_linear(K, F.mu, b + 1, ey)));
                            }
                            RF cl = coeff_of(K.dual_reduce_word(F.top, i * sh + al), F.tau, m);
                            if (!cl.is_zero()) {
                                auto xe = K.reduce_word(a + 1, x * nn + i);
                                sv_axpy(total, sgn * cl, K.mul(a + 1, xe, b, muy));
                            }
                        }
                        if (!total.empty()) {
                            if (failure)
                                *failure = "u∘δ is nonzero on " + word_str(x, a, K.algebra().names) + " ⊗ α ⊗ " +
                                           word_str(y, b, K.algebra().names);
                            return false;
                        }
                    }
    return true;
}

// -------------------------------------------------------------------- hdet

TensorVec act_group(const Koszul& K, const KoszulAction& a, const GroupElement& g, std::size_t t, const TensorVec& v) {
    const long nn = static_cast<long>(K.n());
    std::vector<Monomial> lam;
    for (const auto& c : a.group_char) lam.push_back(c(g));
    TensorVec r;
    for (const auto& [w, c] : v) {
        Monomial f = Monomial::one(K.m());
        long code = w;
        for (std::size_t i = 0; i < t; ++i) {
            f = f * lam[static_cast<std::size_t>(code % nn)];
            code /= nn;
        }
        r.emplace(w, c * RF(f));
    }
    return r;
}

TensorVec act_x(const Koszul& K, const KoszulAction& a, std::size_t k, std::size_t t, const TensorVec& v) {
    const long nn = static_cast<long>(K.n());
    TensorVec r;
    const auto& X = a.xact.at(k);
    if (X.empty()) return r;
    std::vector<Monomial> lam;
    for (const auto& c : a.group_char) lam.push_back(c(a.gx.at(k)));
    for (const auto& [w, c] : v) {
        std::vector<long> d(t);
        long code = w;
        for (std::size_t i = t; i-- > 0;) {
            d[i] = code % nn;
            code /= nn;
        }
        RF pre = c;
        for (std::size_t p = 0; p < t; ++p) {
            for (long j = 0; j < nn; ++j) {
                const RF& x = X[static_cast<std::size_t>(j)][static_cast<std::size_t>(d[p])];
                if (x.is_zero()) continue;
                long nw = 0;
                for (std::size_t i = 0; i < t; ++i) nw = nw * nn + (i == p ? j : d[i]);
                sv_axpy(r, pre * x, TensorVec{{nw, RF::one(K.m())}});
            }
            pre *= RF(lam[static_cast<std::size_t>(d[p])]);
        }
    }
    return r;
}

void check_action(const Koszul& K, const KoszulAction& a) {
    if (a.group_char.size() != K.n()) throw ActionError("group action needs one character per generator");
    const std::size_t N = K.N();
    Echelon R;
    for (const auto& r : K.algebra().R) R.insert(r);
    std::size_t s = a.group_char.empty() ? 0 : a.group_char[0].rank();
    for (const auto& r : K.algebra().R) {
        for (std::size_t j = 0; j < s; ++j)
            if (!R.contains(act_group(K, a, unit_vector(s, j), N, r)))
                throw ActionError("group generator y" + std::to_string(j + 1) + " does not preserve the relations");
        for (std::size_t k = 0; k < a.xact.size(); ++k)
            if (!R.contains(act_x(K, a, k, N, r)))
                throw ActionError("x" + std::to_string(k + 1) + " does not preserve the relations");
    }
}

namespace {

RF top_scalar(const Koszul& K, const TensorVec& omega, const TensorVec& image) {
    const RF& w0 = omega.begin()->second;
    RF c = image.count(omega.begin()->first) ? image.at(omega.begin()->first) / w0 : RF::zero(K.m());
    TensorVec expect;
    sv_axpy(expect, c, omega);
    if (expect != image) throw ActionError("action does not preserve the top component of the dual");
    return c;
}

const TensorVec& top_vector(const Koszul& K, std::size_t& top) {
    top = K.dual_top() - 1;
    const auto& W = K.W(top);
    if (W.size() != 1) throw KoszulError("top component of the dual is not one-dimensional");
    return W.front();
}

}  // namespace

RF hdet_group(const Koszul& K, const KoszulAction& a, const GroupElement& g) {
    std::size_t top = 0;
    const auto& om = top_vector(K, top);
    return top_scalar(K, om, act_group(K, a, g, top, om));
}

RF hdet_x(const Koszul& K, const KoszulAction& a, std::size_t k) {
    std::size_t top = 0;
    const auto& om = top_vector(K, top);
    return top_scalar(K, om, act_x(K, a, k, top, om));
}

Character hdet_character(const Koszul& K, const KoszulAction& a, std::size_t s) {
    IntMatrix E(s);
    for (std::size_t j = 0; j < s; ++j) {
        RF v = hdet_group(K, a, unit_vector(s, j));
        if (!v.is_monomial() || v.as_monomial().coeff != 1)
            throw ActionError("homological determinant of y" + std::to_string(j + 1) + " is not a character value");
        E[j] = v.as_monomial().exps;
    }
    return Character(E, K.m());
}

}  // namespace hopfcy

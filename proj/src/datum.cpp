#include "hopfcy/datum.hpp"

namespace hopfcy {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }
std::string pair_str(std::size_t i, std::size_t j) { return "(" + idx(i) + "," + idx(j) + ")"; }

Exps exps_add(Exps a, const Exps& b, long k = 1) {
    for (std::size_t t = 0; t < a.size(); ++t) a[t] += k * b[t];
    return a;
}

}  // namespace

RF GenericDatum::lambda(std::size_t i, std::size_t j) const {
    auto it = linking.find({i, j});
    return it == linking.end() ? RF::zero(m()) : it->second;
}

GenericDatum validate_datum(const DatumInput& in, Mode mode) {
    GenericDatum d;
    d.params = in.params;
    d.s = in.s;
    d.cartan = in.cartan;
    d.g = in.g;
    d.chi = in.chi;
    const std::size_t theta = in.cartan.rank(), m = in.params.size();
    if (in.g.size() != theta) throw DatumError("group element count != theta (" + std::to_string(theta) + ")");
    if (in.chi.size() != theta) throw DatumError("character count != theta (" + std::to_string(theta) + ")");
    for (std::size_t i = 0; i < theta; ++i) {
        if (in.g[i].size() != in.s) throw DatumError("g_" + idx(i) + " has wrong rank");
        if (in.chi[i].rank() != in.s || in.chi[i].nparams() != m)
            throw DatumError("chi_" + idx(i) + " has wrong shape");
    }

    for (const auto& comp : in.cartan.components) {
        std::size_t i0 = comp.front();
        long di = in.cartan.d[i0];
        Exps e = d.q(i0, i0).exps;
        for (auto& x : e) {
            if (x % di != 0)
                throw DatumError("(q1): q_" + idx(i0) + idx(i0) + " is not a d_i-th power of a parameter monomial");
            x /= di;
        }
        Monomial qI(1, e);
        if (qI.is_one()) throw DatumError("(q1): q_I is a root of unity for the component of " + idx(i0));
        for (auto i : comp)
            if (d.q(i, i) != qI.pow(in.cartan.d[i]))
                throw DatumError("(q1): q_" + idx(i) + idx(i) + " != q_I^{d_" + idx(i) + "}");
        d.qI.push_back(qI);
    }
    for (std::size_t i = 0; i < theta; ++i)
        for (std::size_t j = i + 1; j < theta; ++j) {
            Monomial expect = Monomial::one(m);
            if (in.cartan.same_component(i, j))
                expect = d.qI[in.cartan.component_of[i]].pow(in.cartan.d[i] * in.cartan.A[i][j]);
            if (d.q(i, j) * d.q(j, i) != expect)
                throw DatumError("(q1): q_ij q_ji != q_I^{d_i a_ij} at " + pair_str(i, j));
        }

    for (const auto& [key, val] : in.linking) {
        auto [i, j] = key;
        if (i >= theta || j >= theta) throw DatumError("linking index out of range " + pair_str(i, j));
        if (i >= j) throw DatumError("linking entries need i < j, got " + pair_str(i, j));
        if (in.cartan.same_component(i, j)) throw DatumError("linking entry " + pair_str(i, j) + " inside a component");
        if (val.is_zero()) continue;
        std::string why;
        if (group_is_identity(group_add(in.g[i], in.g[j]))) why = "g_i g_j = 1";
        else if (!(in.chi[i] * in.chi[j]).is_trivial()) why = "chi_i chi_j != epsilon";
        if (!why.empty()) {
            std::string msg = "linking constraint: lambda_" + idx(i) + idx(j) + " != 0 but " + why;
            if (mode == Mode::Strict) throw DatumError(msg);
            d.warnings.push_back(msg);
        }
        d.linking[key] = val;
    }
    return d;
}

std::vector<std::vector<Monomial>> braiding_matrix(const GenericDatum& d) {
    std::vector<std::vector<Monomial>> q(d.theta(), std::vector<Monomial>(d.theta()));
    for (std::size_t i = 0; i < d.theta(); ++i)
        for (std::size_t j = 0; j < d.theta(); ++j) q[i][j] = d.q(i, j);
    return q;
}

GroupElement root_group(const GenericDatum& d, const std::vector<long>& m) {
    GroupElement g(d.s, 0);
    for (std::size_t i = 0; i < m.size(); ++i) g = group_add(g, group_scale(d.g.at(i), m[i]));
    return g;
}

Character root_char(const GenericDatum& d, const std::vector<long>& m) {
    Character c = Character::trivial(d.s, d.m());
    for (std::size_t i = 0; i < m.size(); ++i) c = c * d.chi.at(i).pow(m[i]);
    return c;
}

// -------------------------------------------------------------- Coboundary

Coboundary Coboundary::identity(std::size_t s, std::size_t m) {
    return Coboundary{std::vector<Rational>(s, 1), std::vector<Exps>(s, Exps(m, 0)),
                      std::vector<std::vector<Exps>>(s, std::vector<Exps>(s, Exps(m, 0)))};
}

Monomial Coboundary::operator()(const GroupElement& g) const {
    if (g.size() != c.size()) throw ConfigError("coboundary rank mismatch");
    std::size_t m = L.empty() ? 0 : L[0].size();
    Rational coeff = 1;
    Exps e(m, 0);
    for (std::size_t j = 0; j < g.size(); ++j) {
        Rational cj = g[j] >= 0 ? c[j] : Rational(1) / c[j];
        for (long k = 0; k < std::labs(g[j]); ++k) coeff *= cj;
        e = exps_add(e, L[j], g[j]);
        for (std::size_t k = 0; k < g.size(); ++k) e = exps_add(e, Q[j][k], g[j] * g[k]);
    }
    return Monomial(coeff, e);
}

// ------------------------------------------------------------- CocycleData

CocycleData::CocycleData(std::size_t s, std::size_t m)
    : s_(s), m_(m), U_(s, std::vector<Exps>(s, Exps(m, 0))), f_(Coboundary::identity(s, m)) {}

void CocycleData::set_ratio(std::size_t j, std::size_t k, const Exps& e) {
    if (j >= s_ || k >= s_) throw ConfigError("cocycle ratio index out of range");
    if (j == k) throw ConfigError("cocycle ratio on a diagonal pair");
    if (e.size() != m_) throw ConfigError("cocycle ratio over wrong parameter list");
    U_[j][k] = e;
    U_[k][j] = group_neg(e);
}

bool CocycleData::ratio_trivial() const {
    for (const auto& row : U_)
        for (const auto& e : row)
            if (!group_is_identity(e)) return false;
    return true;
}

bool CocycleData::has_coboundary() const {
    for (const auto& x : f_.c)
        if (x != 1) return true;
    for (const auto& e : f_.L)
        if (!group_is_identity(e)) return true;
    for (const auto& row : f_.Q)
        for (const auto& e : row)
            if (!group_is_identity(e)) return true;
    return false;
}

Monomial CocycleData::ratio(const GroupElement& g, const GroupElement& h) const {
    if (g.size() != s_ || h.size() != s_) throw ConfigError("cocycle rank mismatch");
    Exps e(m_, 0);
    for (std::size_t j = 0; j < s_; ++j)
        for (std::size_t k = 0; k < s_; ++k)
            if (g[j] * h[k] != 0) e = exps_add(e, U_[j][k], g[j] * h[k]);
    return Monomial(1, e);
}

Monomial CocycleData::representative(const GroupElement& g, const GroupElement& h) const {
    if (g.size() != s_ || h.size() != s_) throw ConfigError("cocycle rank mismatch");
    Exps e(m_, 0);
    for (std::size_t j = 0; j < s_; ++j)
        for (std::size_t k = j + 1; k < s_; ++k)
            if (g[j] * h[k] != 0) e = exps_add(e, U_[j][k], g[j] * h[k]);
    return Monomial(1, e);
}

Monomial CocycleData::f(const GroupElement& g) const { return f_(g); }

Monomial CocycleData::value(const GroupElement& g, const GroupElement& h) const {
    Monomial v = representative(g, h);
    if (!has_coboundary()) return v;
    return v * f_(group_add(g, h)) / (f_(g) * f_(h));
}

void CocycleData::apply_coboundary(const Coboundary& f) {
    if (f.c.size() != s_) throw ConfigError("coboundary rank mismatch");
    for (std::size_t j = 0; j < s_; ++j) {
        f_.c[j] *= f.c[j];
        f_.L[j] = exps_add(f_.L[j], f.L[j]);
        for (std::size_t k = 0; k < s_; ++k) f_.Q[j][k] = exps_add(f_.Q[j][k], f.Q[j][k]);
    }
}

CocycleData CocycleData::inverse_class() const {
    CocycleData r(s_, m_);
    for (std::size_t j = 0; j < s_; ++j)
        for (std::size_t k = 0; k < s_; ++k) r.U_[j][k] = group_neg(U_[j][k]);
    return r;
}

Monomial cocycle_ratio(const CocycleData& sigma, const GroupElement& g, const GroupElement& h) {
    return sigma.ratio(g, h);
}

// ---------------------------------------------------------------- deformed

bool DeformedDatum::in_xi(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    for (const auto& p : xi)
        if (p == IndexPair{i, j}) return true;
    return false;
}

DeformedDatum deform_datum(const GenericDatum& d, const CocycleData& sigma) {
    if (sigma.rank() != d.s || sigma.nparams() != d.m()) throw ConfigError("cocycle shape does not match datum");
    DeformedDatum r;
    for (std::size_t i = 0; i < d.theta(); ++i) {
        IntMatrix E = d.chi[i].matrix();
        for (std::size_t j = 0; j < d.s; ++j)
            E[j] = exps_add(E[j], sigma.ratio(unit_vector(d.s, j), d.g[i]).exps);
        r.chi.emplace_back(E, d.m());
    }
    r.q.assign(d.theta(), std::vector<Monomial>(d.theta()));
    for (std::size_t i = 0; i < d.theta(); ++i)
        for (std::size_t j = 0; j < d.theta(); ++j) r.q[i][j] = r.chi[j](d.g[i]);
    for (std::size_t i = 0; i < d.theta(); ++i)
        for (std::size_t j = i + 1; j < d.theta(); ++j)
            if (!d.cartan.same_component(i, j) && (r.chi[i] * r.chi[j]).is_trivial()) r.xi.push_back({i, j});
    return r;
}

GenericDatum deformed_generic(const GenericDatum& d, const CocycleData& sigma, Mode mode) {
    DatumInput in{d.params, d.s, d.cartan, d.g, deform_datum(d, sigma).chi, d.linking};
    return validate_datum(in, mode);
}

// ------------------------------------------------------------------- cleft

RF CleftDatum::pi_value(std::size_t i, std::size_t j) const {
    auto it = pi.find({i, j});
    return it == pi.end() ? RF::zero(base.m()) : it->second;
}

CleftDatum make_cleft(GenericDatum base, CocycleData sigma, PairValues pi) {
    if (sigma.rank() != base.s || sigma.nparams() != base.m()) throw DatumError("cocycle shape does not match datum");
    DeformedDatum dd = deform_datum(base, sigma);
    PairValues kept;
    for (const auto& [key, v] : pi) {
        if (v.is_zero()) continue;
        if (!dd.in_xi(key.first, key.second) || key.first >= key.second)
            throw DatumError("pi_" + idx(key.first) + idx(key.second) + " != 0 outside Xi(sigma)");
        kept[key] = v;
    }
    return CleftDatum{std::move(base), std::move(sigma), std::move(kept)};
}

CleftDatum normalize_pair(const CleftDatum& cd, const Coboundary& f) {
    CleftDatum r = cd;
    r.sigma.apply_coboundary(f);
    for (auto& [key, v] : r.pi) {
        Monomial scale = (f(cd.base.g[key.first]) * f(cd.base.g[key.second])).inverse();
        v = v * RF(scale);
    }
    return r;
}

RF HCocycle::xx(std::size_t i, std::size_t j) const {
    auto it = xx_values.find({i, j});
    return it == xx_values.end() ? RF::zero(gamma_part.nparams()) : it->second;
}

HCocycle tau_from_cleft(const CleftDatum& cd) {
    HCocycle t{cd.sigma, {}};
    const auto& d = cd.base;
    for (std::size_t i = 0; i < d.theta(); ++i)
        for (std::size_t j = i + 1; j < d.theta(); ++j) {
            if (d.cartan.same_component(i, j)) continue;
            RF v = d.lambda(i, j) * RF(cd.sigma.value(d.g[i], d.g[j])) - cd.pi_value(i, j);
            if (!v.is_zero()) t.xx_values[{i, j}] = v;
        }
    return t;
}

}  // namespace hopfcy

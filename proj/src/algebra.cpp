#include "hopfcy/algebra.hpp"

#include <numeric>
#include <sstream>

namespace hopfcy {

long Key::x_degree() const { return std::accumulate(x.begin(), x.end(), 0L); }
long Key::u_degree() const { return std::accumulate(u.begin(), u.end(), 0L); }

// -------------------------------------------------------------- AlgElement

AlgElement::AlgElement(std::size_t m, const Key& k, const RF& c) : m_(m) { add_term(k, c); }

void AlgElement::add_term(const Key& k, const RF& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

RF AlgElement::coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RF::zero(m_) : it->second;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

AlgElement AlgElement::operator*(const RF& c) const {
    AlgElement r(m_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

bool AlgElement::operator==(const AlgElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

std::optional<RF> AlgElement::scalar_of(const Key& k) const {
    if (terms_.empty()) return RF::zero(m_);
    if (terms_.size() != 1 || terms_.begin()->first != k) return std::nullopt;
    return terms_.begin()->second;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::GroupOnly: return "group-only";
        case Family::QuantumAffine: return "quantum-affine";
        case Family::Bosonization: return "A1-bosonization";
        case Family::Crossed: return "crossed";
    }
    return "?";
}

// ------------------------------------------------------------ Presentation

Key Presentation::unit_key() const { return Key{Exps(n_u(), 0), GroupElement(s, 0), Exps(n_x(), 0)}; }

Key Presentation::group_key(const GroupElement& g) const {
    Key k = unit_key();
    k.g = g;
    return k;
}

AlgElement Presentation::one() const { return AlgElement(m(), unit_key(), RF::one(m())); }
AlgElement Presentation::scalar(const RF& c) const { return AlgElement(m(), unit_key(), c); }

AlgElement Presentation::letter(const Letter& l) const { return mul_key(unit_key(), l); }

AlgElement Presentation::word(const Word& w) const {
    AlgElement r = one();
    for (const auto& l : w) r = mul_letter(r, l);
    return r;
}

AlgElement Presentation::mul_letter(const AlgElement& a, const Letter& l) const {
    AlgElement r(m());
    for (const auto& [k, c] : a.terms()) r += mul_key(k, l) * c;
    return r;
}

AlgElement Presentation::mul(const AlgElement& a, const AlgElement& b) const {
    AlgElement r(m());
    for (const auto& [kb, cb] : b.terms()) {
        AlgElement t = a;
        for (const auto& l : letters_of(kb)) t = mul_letter(t, l);
        r += t * cb;
    }
    return r;
}

Word Presentation::letters_of(const Key& k) const {
    Word w;
    for (std::size_t i = 0; i < k.u.size(); ++i)
        for (long e = 0; e < k.u[i]; ++e) w.push_back(Letter::u(i));
    if (!group_is_identity(k.g)) w.push_back(Letter::grp(k.g));
    for (std::size_t i = 0; i < k.x.size(); ++i)
        for (long e = 0; e < k.x[i]; ++e) w.push_back(Letter::x(i));
    return w;
}

AlgElement Presentation::group_inverse(const GroupElement& g) const {
    GroupElement ng = group_neg(g);
    return AlgElement(m(), group_key(ng), RF(sigma.value(g, ng).inverse()));
}

namespace {

long last_x(const Key& k) {
    for (std::size_t j = k.x.size(); j-- > 0;)
        if (k.x[j] > 0) return static_cast<long>(j);
    return -1;
}

}  // namespace

AlgElement Presentation::mul_key(const Key& k, const Letter& l) const {
    auto memo_key = std::make_pair(k, l);
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;

    AlgElement r(m());
    switch (l.kind) {
        case Letter::G: {
            if (l.g.size() != s) throw AlgebraError("group letter of wrong rank");
            Monomial c = sigma.value(k.g, l.g);
            for (std::size_t t = 0; t < k.x.size(); ++t)
                if (k.x[t] != 0) c = c * chi[t](l.g).pow(-k.x[t]);
            Key nk = k;
            nk.g = group_add(k.g, l.g);
            r.add_term(nk, RF(c));
            break;
        }
        case Letter::X: {
            std::size_t i = l.index;
            if (i >= n_x()) throw AlgebraError("x index out of range");
            long j = last_x(k);
            if (j < 0 || static_cast<std::size_t>(j) <= i) {
                Key nk = k;
                ++nk.x[i];
                r.add_term(nk, RF::one(m()));
                break;
            }
            std::size_t jj = static_cast<std::size_t>(j);
            if (x_missing.count({i, jj}))
                throw UnsupportedFamily("no quadratic relation for " + x_names[jj] + " " + x_names[i] +
                                        " (Serre relation of a non-A1 component)");
            Key mp = k;
            --mp.x[jj];
            // x_j x_i = (x_i x_j − c_ij) / q_ij
            AlgElement t = mul_letter(mul_key(mp, Letter::x(i)), Letter::x(jj));
            if (auto cit = xconst.find({i, jj}); cit != xconst.end()) t -= mul(AlgElement(m(), mp, RF::one(m())), cit->second);
            r = t * RF(qx(i, jj).inverse());
            break;
        }
        case Letter::U: {
            std::size_t i = l.index;
            if (i >= n_u()) throw AlgebraError("u index out of range");
            long j = last_x(k);
            if (j >= 0) {
                std::size_t jj = static_cast<std::size_t>(j);
                Key mp = k;
                --mp.x[jj];
                if (!xact.empty() && !xact[jj].empty())
                    for (std::size_t t = 0; t < n_u(); ++t)
                        if (!xact[jj][t][i].is_zero()) r += mul_key(mp, Letter::u(t)) * xact[jj][t][i];
                r += mul_letter(mul_key(mp, Letter::u(i)), Letter::x(jj)) * RF(u_char[i](gx[jj]));
                break;
            }
            RF c(u_char[i](k.g));
            for (std::size_t t = i + 1; t < n_u(); ++t)
                if (k.u[t] != 0) c *= p[i][t].pow(k.u[t]);
            Key nk = k;
            ++nk.u[i];
            r.add_term(nk, c);
            break;
        }
    }
    memo_.emplace(memo_key, r);
    return r;
}

std::vector<Letter> Presentation::generators() const {
    std::vector<Letter> g;
    for (std::size_t i = 0; i < n_u(); ++i) g.push_back(Letter::u(i));
    for (std::size_t j = 0; j < s; ++j) {
        g.push_back(Letter::grp(unit_vector(s, j, 1)));
        g.push_back(Letter::grp(unit_vector(s, j, -1)));
    }
    for (std::size_t k = 0; k < n_x(); ++k) g.push_back(Letter::x(k));
    return g;
}

std::vector<Rule> Presentation::rules() const {
    std::vector<Rule> r;
    auto yname = [&](std::size_t j, long e) { return "y" + std::to_string(j + 1) + (e < 0 ? "^-1" : ""); };
    for (std::size_t j = 0; j < s; ++j) {
        r.push_back({{Letter::grp(unit_vector(s, j, 1)), Letter::grp(unit_vector(s, j, -1))}, yname(j, 1) + " " + yname(j, -1)});
        r.push_back({{Letter::grp(unit_vector(s, j, -1)), Letter::grp(unit_vector(s, j, 1))}, yname(j, -1) + " " + yname(j, 1)});
        for (std::size_t k = 0; k < j; ++k)
            r.push_back({{Letter::grp(unit_vector(s, j)), Letter::grp(unit_vector(s, k))}, yname(j, 1) + " " + yname(k, 1)});
    }
    for (std::size_t j = 0; j < s; ++j)
        for (long e : {1L, -1L})
            for (std::size_t i = 0; i < n_u(); ++i)
                r.push_back({{Letter::grp(unit_vector(s, j, e)), Letter::u(i)}, yname(j, e) + " " + u_names[i]});
    for (std::size_t k = 0; k < n_x(); ++k) {
        for (std::size_t i = 0; i < n_u(); ++i) r.push_back({{Letter::x(k), Letter::u(i)}, x_names[k] + " " + u_names[i]});
        for (std::size_t j = 0; j < s; ++j)
            for (long e : {1L, -1L})
                r.push_back({{Letter::x(k), Letter::grp(unit_vector(s, j, e))}, x_names[k] + " " + yname(j, e)});
    }
    for (std::size_t i = 0; i < n_u(); ++i)
        for (std::size_t j = i + 1; j < n_u(); ++j) r.push_back({{Letter::u(j), Letter::u(i)}, u_names[j] + " " + u_names[i]});
    for (std::size_t i = 0; i < n_x(); ++i)
        for (std::size_t j = i + 1; j < n_x(); ++j)
            if (!x_missing.count({i, j})) r.push_back({{Letter::x(j), Letter::x(i)}, x_names[j] + " " + x_names[i]});
    return r;
}

namespace {

std::string letter_str(const Presentation& p, const Letter& l) {
    switch (l.kind) {
        case Letter::U: return p.u_names.at(l.index);
        case Letter::X: return p.x_names.at(l.index);
        case Letter::G: return p.key_str(p.group_key(l.g));
    }
    return "?";
}

}  // namespace

ConfluenceReport Presentation::check_confluence() const {
    ConfluenceReport rep;
    auto gens = generators();
    for (const auto& a : gens)
        for (const auto& b : gens)
            for (const auto& c : gens) {
                try {
                    AlgElement left = mul_letter(mul_letter(letter(a), b), c);
                    AlgElement right = mul(letter(a), mul_letter(letter(b), c));
                    ++rep.checked;
                    if (left != right && rep.ok) {
                        rep.ok = false;
                        rep.failure = "(" + letter_str(*this, a) + " " + letter_str(*this, b) + ") " + letter_str(*this, c) +
                                      " = " + str(left) + " but " + letter_str(*this, a) + " (" + letter_str(*this, b) +
                                      " " + letter_str(*this, c) + ") = " + str(right);
                    }
                } catch (const UnsupportedFamily&) {
                    ++rep.skipped;
                }
            }
    return rep;
}

std::string Presentation::key_str(const Key& k) const {
    std::vector<std::string> parts;
    auto pw = [](const std::string& n, long e) { return e == 1 ? n : n + "^" + std::to_string(e); };
    for (std::size_t i = 0; i < k.u.size(); ++i)
        if (k.u[i] != 0) parts.push_back(pw(u_names[i], k.u[i]));
    for (std::size_t j = 0; j < k.g.size(); ++j)
        if (k.g[j] != 0) parts.push_back(pw("y" + std::to_string(j + 1), k.g[j]));
    for (std::size_t i = 0; i < k.x.size(); ++i)
        if (k.x[i] != 0) parts.push_back(pw(x_names[i], k.x[i]));
    if (parts.empty()) return "1";
    std::string r = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) r += "*" + parts[i];
    return r;
}

std::string Presentation::str(const AlgElement& a) const {
    if (a.is_zero()) return "0";
    std::string r;
    bool first = true;
    for (const auto& [k, c] : a.terms()) {
        std::string cs = c.str(params);
        std::string ks = key_str(k);
        std::string term;
        if (ks == "1") term = "(" + cs + ")";
        else if (cs == "1") term = ks;
        else term = "(" + cs + ")*" + ks;
        r += (first ? "" : " + ") + term;
        first = false;
    }
    return r;
}

// ---------------------------------------------------------------- builders

namespace {

std::vector<std::string> default_x_names(std::size_t n) {
    std::vector<std::string> r;
    for (std::size_t i = 0; i < n; ++i) r.push_back("x" + std::to_string(i + 1));
    return r;
}

void fill_x_relations(Presentation& p, const GenericDatum& d, const CocycleData& sigma, const PairValues* pi) {
    for (std::size_t i = 0; i < d.theta(); ++i)
        for (std::size_t j = i + 1; j < d.theta(); ++j) {
            if (d.cartan.same_component(i, j)) {
                if (d.cartan.A[i][j] != 0) p.x_missing.insert({i, j});
                continue;
            }
            AlgElement c(p.m());
            RF lam = d.lambda(i, j);
            GroupElement gij = group_add(d.g[i], d.g[j]);
            if (!lam.is_zero()) c.add_term(p.group_key(gij), lam * RF(sigma.value(d.g[i], d.g[j])));
            if (pi) {
                auto it = pi->find({i, j});
                if (it != pi->end()) c.add_term(p.unit_key(), -it->second);
            } else if (!lam.is_zero()) {
                c.add_term(p.unit_key(), -lam);
            }
            if (!c.is_zero()) p.xconst[{i, j}] = c;
        }
}

}  // namespace

Presentation build_group_algebra(const ParamList& params, const CocycleData& sigma) {
    Presentation p;
    p.params = params;
    p.s = sigma.rank();
    p.sigma = sigma;
    p.family = Family::GroupOnly;
    return p;
}

Presentation build_udlambda(const GenericDatum& d) {
    Presentation p;
    p.params = d.params;
    p.s = d.s;
    p.sigma = CocycleData::trivial(d.s, d.m());
    p.gx = d.g;
    p.chi = d.chi;
    p.x_names = default_x_names(d.theta());
    p.family = d.theta() == 0 ? Family::GroupOnly : Family::Bosonization;
    fill_x_relations(p, d, p.sigma, nullptr);
    return p;
}

Presentation build_cleft(const CleftDatum& cd) {
    const auto& d = cd.base;
    Presentation p;
    p.params = d.params;
    p.s = d.s;
    p.sigma = cd.sigma;
    p.gx = d.g;
    p.chi = deform_datum(d, cd.sigma).chi;
    p.x_names = default_x_names(d.theta());
    p.family = d.theta() == 0 ? Family::GroupOnly : Family::Bosonization;
    fill_x_relations(p, d, cd.sigma, &cd.pi);
    return p;
}

Presentation build_crossed(const ModuleAlgebraData& a, const Presentation& h) {
    const std::size_t n = a.names.size();
    if (a.group_char.size() != n) throw AlgebraError("group action must give one character per variable");
    if (a.p.size() != n) throw AlgebraError("commutation table has wrong size");
    if (!a.xact.empty() && a.xact.size() != h.n_x()) throw AlgebraError("x-action must give one matrix per x_k");
    for (const auto& M : a.xact) {
        if (M.empty()) continue;
        if (M.size() != n) throw AlgebraError("x-action matrix has wrong size");
        for (const auto& row : M)
            if (row.size() != n) throw AlgebraError("x-action matrix has wrong size");
    }
    for (const auto& c : a.group_char)
        if (c.rank() != h.s || c.nparams() != h.m()) throw AlgebraError("group action character has wrong shape");
    Presentation p = h;
    p.u_names = a.names;
    p.p = a.p;
    p.u_char = a.group_char;
    p.xact = a.xact;
    p.family = (h.n_x() == 0 && h.s == 0) ? Family::QuantumAffine : Family::Crossed;
    return p;
}

void require_confluent(const Presentation& p) {
    auto rep = p.check_confluence();
    if (!rep.ok) throw AlgebraError("relations are not compatible: " + rep.failure);
}

AlgElement normal_form(const Presentation& p, const Word& w) { return p.word(w); }

// ------------------------------------------------------------ endomorphism

GradedEndomorphism GradedEndomorphism::identity(const Presentation& p) {
    GradedEndomorphism e;
    e.x_scale.assign(p.n_x(), RF::one(p.m()));
    e.x_shift.assign(p.n_x(), RF::zero(p.m()));
    e.perm.resize(p.n_x());
    std::iota(e.perm.begin(), e.perm.end(), 0);
    e.group_twist = Character::trivial(p.s, p.m());
    e.u_map.assign(p.n_u(), std::vector<RF>(p.n_u(), RF::zero(p.m())));
    for (std::size_t i = 0; i < p.n_u(); ++i) e.u_map[i][i] = RF::one(p.m());
    return e;
}

bool GradedEndomorphism::u_diagonal() const {
    for (std::size_t i = 0; i < u_map.size(); ++i)
        for (std::size_t j = 0; j < u_map.size(); ++j)
            if (i != j && !u_map[i][j].is_zero()) return false;
    return true;
}

bool GradedEndomorphism::has_shift() const {
    for (const auto& c : x_shift)
        if (!c.is_zero()) return true;
    return false;
}

AlgElement GradedEndomorphism::apply_letter(const Presentation& p, const Letter& l) const {
    switch (l.kind) {
        case Letter::U: {
            AlgElement r(p.m());
            for (std::size_t j = 0; j < p.n_u(); ++j)
                if (!u_map[j][l.index].is_zero()) r += p.letter(Letter::u(j)) * u_map[j][l.index];
            return r;
        }
        case Letter::X:
            return p.letter(Letter::x(perm[l.index])) * x_scale[l.index] + p.scalar(x_shift[l.index]);
        case Letter::G:
            return p.letter(l) * RF(group_twist(l.g));
    }
    return AlgElement(p.m());
}

AlgElement GradedEndomorphism::apply(const Presentation& p, const AlgElement& a) const {
    AlgElement r(p.m());
    for (const auto& [k, c] : a.terms()) {
        AlgElement t = p.one();
        for (const auto& l : p.letters_of(k)) t = p.mul(t, apply_letter(p, l));
        r += t * c;
    }
    return r;
}

GradedEndomorphism GradedEndomorphism::compose(const GradedEndomorphism& in) const {
    GradedEndomorphism r = *this;
    for (std::size_t k = 0; k < in.x_scale.size(); ++k) {
        std::size_t t = in.perm[k];
        r.x_scale[k] = in.x_scale[k] * x_scale[t];
        r.perm[k] = perm[t];
        r.x_shift[k] = in.x_scale[k] * x_shift[t] + in.x_shift[k];
    }
    r.group_twist = group_twist * in.group_twist;
    const std::size_t n = u_map.size();
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < n; ++i) {
            RF acc = RF::zero(u_map[0][0].nvars());
            for (std::size_t j = 0; j < n; ++j) acc += u_map[t][j] * in.u_map[j][i];
            r.u_map[t][i] = acc;
        }
    r.provenance.insert(r.provenance.end(), in.provenance.begin(), in.provenance.end());
    return r;
}

Certification certify_endomorphism(const Presentation& p, const GradedEndomorphism& phi) {
    for (const auto& rule : p.rules()) {
        AlgElement left = p.one();
        for (const auto& l : rule.lhs) left = p.mul(left, phi.apply_letter(p, l));
        AlgElement right = phi.apply(p, p.word(rule.lhs));
        if (left != right) return {false, rule.name};
    }
    return {};
}

GradedEndomorphism inner_conjugation(const Presentation& p, const GroupElement& h) {
    if (h.size() != p.s) throw AlgebraError("conjugating element has wrong rank");
    GradedEndomorphism e = GradedEndomorphism::identity(p);
    AlgElement hb = p.letter(Letter::grp(h)), hinv = p.group_inverse(h);
    auto read = [&](const Letter& l) {
        AlgElement img = p.mul(p.mul(hb, p.letter(l)), hinv);
        auto base = p.letter(l);
        if (base.terms().size() != 1) throw AlgebraError("generator is not a basis element");
        auto c = img.scalar_of(base.terms().begin()->first);
        if (!c) throw AlgebraError("conjugation does not act diagonally");
        return *c / base.terms().begin()->second;
    };
    for (std::size_t i = 0; i < p.n_u(); ++i) e.u_map[i][i] = read(Letter::u(i));
    for (std::size_t k = 0; k < p.n_x(); ++k) e.x_scale[k] = read(Letter::x(k));
    IntMatrix E(p.s);
    for (std::size_t j = 0; j < p.s; ++j) {
        RF c = read(Letter::grp(unit_vector(p.s, j)));
        if (!c.is_monomial() || c.as_monomial().coeff != 1) throw AlgebraError("group conjugation scalar is not a character value");
        E[j] = c.as_monomial().exps;
    }
    e.group_twist = Character(E, p.m());
    e.provenance.push_back("conjugation a -> h a h^-1");
    return e;
}

bool same_on_generators(const Presentation& p, const GradedEndomorphism& a, const GradedEndomorphism& b) {
    for (const auto& l : p.generators())
        if (a.apply_letter(p, l) != b.apply_letter(p, l)) return false;
    return true;
}

// ---------------------------------------------------------------- HopfCalc

HopfCalc::HopfCalc(const Presentation& hopf) : H_(hopf) {
    if (!H_.sigma.ratio_trivial() || H_.sigma.has_coboundary() || H_.n_u() != 0)
        throw AlgebraError("coalgebra computations need the Hopf presentation U(D,lambda)");
}

HCocycle HopfCalc::trivial_cocycle() const { return HCocycle{CocycleData::trivial(H_.s, H_.m()), {}}; }

AlgElement HopfCalc::basis(const GroupElement& g) const { return AlgElement(H_.m(), H_.group_key(g), RF::one(H_.m())); }

AlgElement HopfCalc::basis(const GroupElement& g, std::size_t k) const {
    Key key = H_.group_key(g);
    key.x.at(k) = 1;
    return AlgElement(H_.m(), key, RF::one(H_.m()));
}

namespace {

long single_x(const Key& k) {
    long idx = -1;
    for (std::size_t i = 0; i < k.x.size(); ++i) {
        if (k.x[i] == 0) continue;
        if (k.x[i] != 1 || idx >= 0) return -2;
        idx = static_cast<long>(i);
    }
    return idx;
}

}  // namespace

std::vector<TensorTerm> HopfCalc::coproduct(const Key& k, std::size_t n) const {
    long t = single_x(k);
    if (t == -2) throw UnsupportedElement("coproduct implemented for x-degree <= 1 only");
    RF one = RF::one(H_.m());
    if (t < 0) return {TensorTerm{one, std::vector<Key>(n, k)}};
    Key before = H_.group_key(group_add(k.g, H_.gx[static_cast<std::size_t>(t)]));
    Key after = H_.group_key(k.g);
    std::vector<TensorTerm> r;
    for (std::size_t p = 0; p < n; ++p) {
        std::vector<Key> slots(n);
        for (std::size_t q = 0; q < n; ++q) slots[q] = q < p ? before : (q == p ? k : after);
        r.push_back({one, slots});
    }
    return r;
}

AlgElement HopfCalc::key_antipode(const Key& k, bool inverse) const {
    long t = single_x(k);
    if (t == -2) throw UnsupportedElement("antipode implemented for x-degree <= 1 only");
    if (t < 0) return H_.word({Letter::grp(group_neg(k.g))});
    const GroupElement& gt = H_.gx[static_cast<std::size_t>(t)];
    Word w = inverse ? Word{Letter::x(static_cast<std::size_t>(t)), Letter::grp(group_neg(gt)), Letter::grp(group_neg(k.g))}
                     : Word{Letter::grp(group_neg(gt)), Letter::x(static_cast<std::size_t>(t)), Letter::grp(group_neg(k.g))};
    return H_.word(w) * RF(H_.m(), -1);
}

AlgElement HopfCalc::antipode(const AlgElement& a) const {
    AlgElement r(H_.m());
    for (const auto& [k, c] : a.terms()) r += key_antipode(k, false) * c;
    return r;
}

AlgElement HopfCalc::antipode_inv(const AlgElement& a) const {
    AlgElement r(H_.m());
    for (const auto& [k, c] : a.terms()) r += key_antipode(k, true) * c;
    return r;
}

RF HopfCalc::counit(const AlgElement& a) const {
    RF r = RF::zero(H_.m());
    for (const auto& [k, c] : a.terms())
        if (k.x_degree() == 0) r += c;
    return r;
}

RF HopfCalc::eval(const HCocycle& c, bool inverse, const Key& a, const Key& b) const {
    long da = a.x_degree(), db = b.x_degree();
    const auto& gam = c.gamma_part;
    if (da == 0 && db == 0) {
        Monomial v = gam.value(a.g, b.g);
        return RF(inverse ? v.inverse() : v);
    }
    if (da + db == 1) return RF::zero(H_.m());
    long i = single_x(a), j = single_x(b);
    if (da == 1 && db == 1 && i >= 0 && j >= 0 && group_is_identity(a.g) && group_is_identity(b.g)) {
        auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        RF v = c.xx(ui, uj);
        if (!inverse) return v;
        return -v / RF(gam.value(H_.gx[ui], H_.gx[uj]));
    }
    throw UnsupportedElement("cocycle value outside the Masuoka shape");
}

RF HopfCalc::eval(const HCocycle& c, bool inverse, const AlgElement& a, const AlgElement& b) const {
    RF r = RF::zero(H_.m());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            RF v = eval(c, inverse, ka, kb);
            if (!v.is_zero()) r += ca * cb * v;
        }
    return r;
}

AlgElement HopfCalc::gen_antipode(const HCocycle& sigma, const HCocycle& tau, const AlgElement& h) const {
    const std::size_t m = H_.m();
    AlgElement r(m);
    for (const auto& [k, c0] : h.terms())
        for (const auto& t : coproduct(k, 5)) {
            AlgElement s1(m, t.slots[0], RF::one(m)), s2(m, t.slots[1], RF::one(m)), s3(m, t.slots[2], RF::one(m)),
                s4(m, t.slots[3], RF::one(m)), s5(m, t.slots[4], RF::one(m));
            RF a = eval(sigma, false, s1, antipode(s2));
            if (a.is_zero()) continue;
            RF b = eval(tau, true, antipode(s4), s5);
            if (b.is_zero()) continue;
            r += antipode(s3) * (c0 * t.c * a * b);
        }
    return r;
}

AlgElement HopfCalc::gen_antipode_inv(const HCocycle& sigma, const HCocycle& tau, const AlgElement& h) const {
    const std::size_t m = H_.m();
    AlgElement r(m);
    for (const auto& [k, c0] : h.terms())
        for (const auto& t : coproduct(k, 5)) {
            AlgElement s1(m, t.slots[0], RF::one(m)), s2(m, t.slots[1], RF::one(m)), s3(m, t.slots[2], RF::one(m)),
                s4(m, t.slots[3], RF::one(m)), s5(m, t.slots[4], RF::one(m));
            RF a = eval(sigma, true, s5, antipode_inv(s4));
            if (a.is_zero()) continue;
            RF b = eval(tau, false, antipode_inv(s2), s1);
            if (b.is_zero()) continue;
            r += antipode_inv(s3) * (c0 * t.c * a * b);
        }
    return r;
}

AlgElement HopfCalc::cog_product(const HCocycle& sigma, const HCocycle& tau, const AlgElement& a,
                                 const AlgElement& b) const {
    const std::size_t m = H_.m();
    AlgElement r(m);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            for (const auto& ta : coproduct(ka, 3))
                for (const auto& tb : coproduct(kb, 3)) {
                    RF s = eval(sigma, false, ta.slots[0], tb.slots[0]);
                    if (s.is_zero()) continue;
                    RF t = eval(tau, true, ta.slots[2], tb.slots[2]);
                    if (t.is_zero()) continue;
                    AlgElement prod = H_.mul(AlgElement(m, ta.slots[1], RF::one(m)), AlgElement(m, tb.slots[1], RF::one(m)));
                    r += prod * (ca * cb * ta.c * tb.c * s * t);
                }
    return r;
}

AlgElement cleft_vector_to_b(const Presentation& b, const HCocycle& tau, const AlgElement& v) {
    AlgElement r(b.m());
    for (const auto& [k, c] : v.terms()) {
        long t = single_x(k);
        if (t == -2) throw UnsupportedElement("identification implemented for x-degree <= 1 only");
        Key bk = b.group_key(k.g);
        if (t < 0) {
            r.add_term(bk, c);
            continue;
        }
        bk.x[static_cast<std::size_t>(t)] = 1;
        r.add_term(bk, c / RF(tau.gamma_part.value(k.g, b.gx[static_cast<std::size_t>(t)])));
    }
    return r;
}

}  // namespace hopfcy

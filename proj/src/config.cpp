#include "hopfcy/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace hopfcy {

namespace {

using YAML::Node;
using nlohmann::json;

[[noreturn]] void fail(const Node& at, const std::string& field, const std::string& msg) {
    std::string where;
    if (at.IsDefined()) {
        auto mk = at.Mark();
        if (mk.line >= 0) where = "line " + std::to_string(mk.line + 1) + ", column " + std::to_string(mk.column + 1) + ": ";
    }
    throw ConfigError(where + "field '" + field + "': " + msg);
}

json to_json(const Node& n) {
    switch (n.Type()) {
        case YAML::NodeType::Map: {
            json o = json::object();
            for (const auto& kv : n) o[kv.first.as<std::string>()] = to_json(kv.second);
            return o;
        }
        case YAML::NodeType::Sequence: {
            json a = json::array();
            for (const auto& e : n) a.push_back(to_json(e));
            return a;
        }
        case YAML::NodeType::Scalar: {
            const auto& s = n.Scalar();
            long v = 0;
            if (n.Tag() != "!" && YAML::convert<long>::decode(n, v)) return v;
            return s;
        }
        default:
            return nullptr;
    }
}

void only_keys(const Node& n, const std::string& field, const std::set<std::string>& allowed) {
    if (!n.IsMap()) fail(n, field, "expected a mapping");
    for (const auto& kv : n) {
        auto k = kv.first.as<std::string>();
        if (!allowed.count(k)) fail(kv.first, field, "unknown key '" + k + "'");
    }
}

Node need(const Node& parent, const std::string& key, const std::string& field) {
    Node n = parent[key];
    if (!n.IsDefined() || n.IsNull()) fail(parent, field, "missing key '" + key + "'");
    return n;
}

long get_int(const Node& n, const std::string& field) {
    long v = 0;
    if (!n.IsScalar() || !YAML::convert<long>::decode(n, v)) fail(n, field, "expected an integer");
    return v;
}

std::size_t get_index(const Node& n, const std::string& field, std::size_t limit) {
    long v = get_int(n, field);
    if (v < 1 || static_cast<std::size_t>(v) > limit)
        fail(n, field, "index " + std::to_string(v) + " out of range 1.." + std::to_string(limit));
    return static_cast<std::size_t>(v - 1);
}

Node seq(const Node& n, const std::string& field, std::optional<std::size_t> len = std::nullopt) {
    if (!n.IsSequence()) fail(n, field, "expected a list");
    if (len && n.size() != *len)
        fail(n, field, "expected " + std::to_string(*len) + " entries, got " + std::to_string(n.size()));
    return n;
}

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i + 1) + "]"; }

// one parameter: a bare integer is allowed
Exps get_exps(const Node& n, const std::string& field, std::size_t m) {
    if (n.IsScalar() && m == 1) return {get_int(n, field)};
    seq(n, field, m);
    Exps e(m);
    for (std::size_t t = 0; t < m; ++t) e[t] = get_int(n[t], at(field, t));
    return e;
}

Character get_character(const Node& n, const std::string& field, std::size_t s, std::size_t m) {
    seq(n, field, s);
    IntMatrix E(s);
    for (std::size_t j = 0; j < s; ++j) E[j] = get_exps(n[j], at(field, j), m);
    return Character(E, m);
}

RF get_rf(const Node& n, const std::string& field, const ParamList& p) {
    if (!n.IsScalar()) fail(n, field, "expected a rational function");
    try {
        return parse_rf(n.Scalar(), p);
    } catch (const std::exception& e) {
        fail(n, field, e.what());
    }
}

GroupElement get_group(const Node& n, const std::string& field, std::size_t s) {
    seq(n, field, s);
    GroupElement g(s);
    for (std::size_t j = 0; j < s; ++j) g[j] = get_int(n[j], at(field, j));
    return g;
}

void parse_datum(const Node& n, SessionConfig& c) {
    const std::string F = "datum";
    only_keys(n, F, {"rank", "cartan", "g", "chi", "linking"});
    DatumInput in;
    in.params = c.params;
    long s = get_int(need(n, "rank", F), F + ".rank");
    if (s < 0) fail(n["rank"], F + ".rank", "rank must be nonnegative");
    in.s = static_cast<std::size_t>(s);
    const std::size_t m = c.params.size();

    Node cn = n["cartan"];
    try {
        if (!cn.IsDefined() || cn.IsNull()) {
            in.cartan = validate_cartan({});
        } else if (cn.IsScalar()) {
            in.cartan = cartan_from_type(cn.Scalar());
        } else {
            seq(cn, F + ".cartan");
            IntMatrix A(cn.size());
            for (std::size_t i = 0; i < cn.size(); ++i) {
                seq(cn[i], at(F + ".cartan", i));
                for (std::size_t j = 0; j < cn[i].size(); ++j) A[i].push_back(get_int(cn[i][j], at(at(F + ".cartan", i), j)));
            }
            in.cartan = validate_cartan(A);
        }
    } catch (const CartanError& e) {
        fail(cn, F + ".cartan", e.what());
    }

    Node gn = n["g"], xn = n["chi"];
    if (gn.IsDefined() && !gn.IsNull()) {
        seq(gn, F + ".g");
        for (std::size_t i = 0; i < gn.size(); ++i) in.g.push_back(get_group(gn[i], at(F + ".g", i), in.s));
    }
    if (xn.IsDefined() && !xn.IsNull()) {
        seq(xn, F + ".chi");
        for (std::size_t i = 0; i < xn.size(); ++i) in.chi.push_back(get_character(xn[i], at(F + ".chi", i), in.s, m));
    }
    Node ln = n["linking"];
    if (ln.IsDefined() && !ln.IsNull()) {
        seq(ln, F + ".linking");
        for (std::size_t e = 0; e < ln.size(); ++e) {
            auto f = at(F + ".linking", e);
            only_keys(ln[e], f, {"i", "j", "value"});
            std::size_t theta = in.cartan.rank();
            std::size_t i = get_index(need(ln[e], "i", f), f + ".i", theta);
            std::size_t j = get_index(need(ln[e], "j", f), f + ".j", theta);
            if (i > j) std::swap(i, j);
            in.linking[{i, j}] = get_rf(need(ln[e], "value", f), f + ".value", c.params);
        }
    }
    try {
        c.datum = validate_datum(in, c.mode);
    } catch (const DatumError& e) {
        fail(n, F, e.what());
    }
}

void parse_cocycle(const Node& n, SessionConfig& c) {
    const std::string F = "cocycle";
    if (!c.datum) fail(n, F, "a cocycle needs a datum block");
    seq(n, F);
    for (std::size_t e = 0; e < n.size(); ++e) {
        auto f = at(F, e);
        only_keys(n[e], f, {"j", "k", "ratio"});
        std::size_t j = get_index(need(n[e], "j", f), f + ".j", c.datum->s);
        std::size_t k = get_index(need(n[e], "k", f), f + ".k", c.datum->s);
        if (j == k) fail(n[e], f, "j and k must differ");
        c.sigma.set_ratio(j, k, get_exps(need(n[e], "ratio", f), f + ".ratio", c.params.size()));
    }
}

void parse_pi(const Node& n, SessionConfig& c) {
    const std::string F = "pi";
    if (!c.datum) fail(n, F, "pi values need a datum block");
    seq(n, F);
    for (std::size_t e = 0; e < n.size(); ++e) {
        auto f = at(F, e);
        only_keys(n[e], f, {"i", "j", "value"});
        std::size_t i = get_index(need(n[e], "i", f), f + ".i", c.datum->theta());
        std::size_t j = get_index(need(n[e], "j", f), f + ".j", c.datum->theta());
        if (i > j) std::swap(i, j);
        c.pi[{i, j}] = get_rf(need(n[e], "value", f), f + ".value", c.params);
    }
    try {
        make_cleft(*c.datum, c.sigma, c.pi);
    } catch (const ConfigError& e) {
        fail(n, F, e.what());
    }
}

void parse_algebra(const Node& n, SessionConfig& c) {
    const std::string F = "algebra";
    only_keys(n, F, {"generators", "commutation", "relations", "group_action", "x_action"});
    Node gn = seq(need(n, "generators", F), F + ".generators");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gn.size(); ++i) {
        if (!gn[i].IsScalar()) fail(gn[i], at(F + ".generators", i), "expected a name");
        names.push_back(gn[i].Scalar());
    }
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
        fail(gn, F + ".generators", "duplicate generator names");
    const std::size_t nu = names.size(), m = c.params.size();
    auto index_of = [&](const Node& w, const std::string& f) {
        if (!w.IsScalar()) fail(w, f, "expected a generator name");
        for (std::size_t i = 0; i < nu; ++i)
            if (names[i] == w.Scalar()) return i;
        fail(w, f, "unknown generator '" + w.Scalar() + "'");
    };

    Node rn = n["relations"], cm = n["commutation"];
    if (rn.IsDefined() && cm.IsDefined()) fail(n, F, "give either commutation or relations, not both");
    if (rn.IsDefined()) {
        NHomogeneousAlgebra A;
        A.params = c.params;
        A.names = names;
        A.N = 0;
        seq(rn, F + ".relations");
        for (std::size_t r = 0; r < rn.size(); ++r) {
            auto f = at(F + ".relations", r);
            seq(rn[r], f);
            TensorVec v;
            for (std::size_t t = 0; t < rn[r].size(); ++t) {
                auto ft = at(f, t);
                only_keys(rn[r][t], ft, {"c", "w"});
                RF coeff = get_rf(need(rn[r][t], "c", ft), ft + ".c", c.params);
                Node w = seq(need(rn[r][t], "w", ft), ft + ".w");
                if (A.N == 0) A.N = w.size();
                if (w.size() != A.N || A.N < 2) fail(w, ft + ".w", "all relation words need the same length N >= 2");
                long code = 0;
                for (std::size_t l = 0; l < w.size(); ++l) code = code * static_cast<long>(nu) + static_cast<long>(index_of(w[l], at(ft + ".w", l)));
                sv_axpy(v, coeff, TensorVec{{code, RF::one(m)}});
            }
            if (v.empty()) fail(rn[r], f, "relation is zero");
            A.R.push_back(v);
        }
        if (A.N == 0) A.N = 2;
        c.algebra = A;
        if (n["group_action"].IsDefined() || n["x_action"].IsDefined())
            fail(n, F, "actions are supported only for algebras given by commutation rules");
        return;
    }

    ModuleAlgebraData a;
    a.names = names;
    a.p.assign(nu, std::vector<RF>(nu, RF::zero(m)));
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t j = i + 1; j < nu; ++j) a.p[i][j] = RF::one(m);
    if (cm.IsDefined() && !cm.IsNull()) {
        seq(cm, F + ".commutation");
        for (std::size_t e = 0; e < cm.size(); ++e) {
            auto f = at(F + ".commutation", e);
            only_keys(cm[e], f, {"i", "j", "p"});
            std::size_t i = get_index(need(cm[e], "i", f), f + ".i", nu);
            std::size_t j = get_index(need(cm[e], "j", f), f + ".j", nu);
            if (i >= j) fail(cm[e], f, "need i < j (rule u_j u_i = p u_i u_j)");
            a.p[i][j] = get_rf(need(cm[e], "p", f), f + ".p", c.params);
            if (a.p[i][j].is_zero()) fail(cm[e]["p"], f + ".p", "p must be nonzero");
        }
    }
    const std::size_t s = c.datum ? c.datum->s : 0;
    Node ga = n["group_action"];
    if (ga.IsDefined() && !ga.IsNull()) {
        if (!c.datum) fail(ga, F + ".group_action", "a group action needs a datum block");
        seq(ga, F + ".group_action", nu);
        for (std::size_t i = 0; i < nu; ++i) a.group_char.push_back(get_character(ga[i], at(F + ".group_action", i), s, m));
    } else {
        a.group_char.assign(nu, Character::trivial(s, m));
    }
    Node xa = n["x_action"];
    if (xa.IsDefined() && !xa.IsNull()) {
        if (!c.datum) fail(xa, F + ".x_action", "an x-action needs a datum block");
        const std::size_t theta = c.datum->theta();
        a.xact.assign(theta, {});
        seq(xa, F + ".x_action");
        for (std::size_t e = 0; e < xa.size(); ++e) {
            auto f = at(F + ".x_action", e);
            only_keys(xa[e], f, {"x", "matrix"});
            std::size_t k = get_index(need(xa[e], "x", f), f + ".x", theta);
            Node mt = seq(need(xa[e], "matrix", f), f + ".matrix", nu);
            std::vector<std::vector<RF>> M(nu, std::vector<RF>(nu, RF::zero(m)));
            for (std::size_t j = 0; j < nu; ++j) {
                seq(mt[j], at(f + ".matrix", j), nu);
                for (std::size_t i = 0; i < nu; ++i) M[j][i] = get_rf(mt[j][i], at(at(f + ".matrix", j), i), c.params);
            }
            a.xact[k] = M;
        }
    }
    c.algebra = quantum_affine(c.params, names, a.p);
    c.module = a;
}

}  // namespace

const GenericDatum& SessionConfig::require_datum() const {
    if (!datum) throw ConfigError("field 'datum': this command needs a datum block");
    return *datum;
}

const NHomogeneousAlgebra& SessionConfig::require_algebra() const {
    if (!algebra) throw ConfigError("field 'algebra': this command needs an algebra block");
    return *algebra;
}

const ModuleAlgebraData& SessionConfig::require_module() const {
    if (!module) throw ConfigError("field 'algebra': this command needs an algebra given by commutation rules");
    return *module;
}

CleftDatum SessionConfig::cleft() const { return make_cleft(require_datum(), sigma, pi); }

CrossedInput SessionConfig::crossed(ObjectKind kind) const {
    const auto& a = require_module();
    return CrossedInput{a, cleft(), kind, mode};
}

SessionConfig parse_config(const std::string& text) {
    Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError("line " + std::to_string(e.mark.line + 1) + ", column " + std::to_string(e.mark.column + 1) +
                          ": syntax error: " + e.msg);
    }
    SessionConfig c;
    only_keys(root, "<root>", {"params", "mode", "max_koszul_degree", "datum", "cocycle", "pi", "algebra"});
    c.echo = to_json(root);

    Node pn = root["params"];
    std::vector<std::string> names;
    if (pn.IsDefined() && !pn.IsNull()) {
        seq(pn, "params");
        for (std::size_t i = 0; i < pn.size(); ++i) {
            if (!pn[i].IsScalar()) fail(pn[i], at("params", i), "expected a name");
            names.push_back(pn[i].Scalar());
        }
    }
    try {
        c.params = ParamList(names);
    } catch (const std::exception& e) {
        fail(pn, "params", e.what());
    }

    Node mn = root["mode"];
    if (mn.IsDefined()) {
        std::string v = mn.IsScalar() ? mn.Scalar() : "";
        if (v == "strict") c.mode = Mode::Strict;
        else if (v == "permissive") c.mode = Mode::Permissive;
        else fail(mn, "mode", "expected strict or permissive");
    }
    Node kn = root["max_koszul_degree"];
    if (kn.IsDefined()) {
        long k = get_int(kn, "max_koszul_degree");
        if (k < 1 || k > 16) fail(kn, "max_koszul_degree", "expected 1..16");
        c.max_koszul_degree = static_cast<std::size_t>(k);
    }

    if (root["datum"].IsDefined()) parse_datum(root["datum"], c);
    c.sigma = c.datum ? CocycleData::trivial(c.datum->s, c.params.size()) : CocycleData();
    if (root["cocycle"].IsDefined()) parse_cocycle(root["cocycle"], c);
    if (root["pi"].IsDefined()) parse_pi(root["pi"], c);
    if (root["algebra"].IsDefined()) parse_algebra(root["algebra"], c);
    return c;
}

SessionConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace hopfcy

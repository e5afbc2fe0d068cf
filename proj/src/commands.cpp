#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "hopfcy/report.hpp"

namespace hopfcy {

using nlohmann::json;

json Report::to_json() const {
    return json{{"schema", kReportSchema}, {"command", command},   {"inputs", inputs},
                {"results", results},      {"provenance", provenance}, {"timing", {{"microseconds", timing_us}}}};
}

Report Report::from_json(const json& j) {
    if (j.value("schema", "") != kReportSchema) throw ConfigError("report schema is not " + std::string(kReportSchema));
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    r.provenance = j.at("provenance").get<std::vector<std::string>>();
    r.timing_us = j.at("timing").at("microseconds").get<long>();
    return r;
}

bool Report::operator==(const Report& o) const {
    return command == o.command && inputs == o.inputs && results == o.results && provenance == o.provenance &&
           timing_us == o.timing_us;
}

std::string render_json(const Report& r) { return r.to_json().dump(2); }

Report parse_report(const std::string& text) {
    try {
        return Report::from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed report: ") + e.what());
    }
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"validate", "roots", "deform", "nakayama", "is-cy", "hdet",
                                                   "koszul-check", "frobenius-nakayama", "paper-regress"};
    return names;
}

namespace {

std::string group_str(const GroupElement& g) {
    std::string out;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] == 0) continue;
        if (!out.empty()) out += "*";
        out += "y" + std::to_string(j + 1);
        if (g[j] != 1) out += "^" + std::to_string(g[j]);
    }
    return out.empty() ? "1" : out;
}

json character_json(const Character& c, const ParamList& p) {
    json o = json::object();
    for (std::size_t j = 0; j < c.rank(); ++j) o["y" + std::to_string(j + 1)] = c.on_basis(j).str(p);
    return o;
}

std::vector<std::pair<std::string, Letter>> named_generators(const Presentation& P) {
    std::vector<std::pair<std::string, Letter>> out;
    for (std::size_t i = 0; i < P.n_u(); ++i) out.push_back({P.u_names[i], Letter::u(i)});
    for (std::size_t j = 0; j < P.s; ++j) out.push_back({"y" + std::to_string(j + 1), Letter::grp(unit_vector(P.s, j))});
    for (std::size_t k = 0; k < P.n_x(); ++k) out.push_back({P.x_names[k], Letter::x(k)});
    return out;
}

json map_json(const Presentation& P, const GradedEndomorphism& phi) {
    json o = json::object();
    for (const auto& [name, l] : named_generators(P)) o[name] = P.str(phi.apply_letter(P, l));
    return o;
}

void map_text(std::vector<std::string>& t, const Presentation& P, const GradedEndomorphism& phi) {
    for (const auto& [name, l] : named_generators(P)) t.push_back("  " + name + " -> " + P.str(phi.apply_letter(P, l)));
}

json system_json(const LatticeSystem& sys) {
    json rows = json::array();
    for (std::size_t r = 0; r < sys.A.size(); ++r)
        rows.push_back({{"coeffs", sys.A[r]}, {"rhs", sys.b[r]}, {"label", sys.labels[r]}});
    return rows;
}

json checks_json(const std::vector<Check>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return a;
}

std::string matrix_str(const IntMatrix& A) {
    std::string out = "[";
    for (std::size_t i = 0; i < A.size(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < A[i].size(); ++j) out += (j ? "," : "") + std::to_string(A[i][j]);
        out += "]";
    }
    return out + "]";
}

// ------------------------------------------------------------------ commands

struct Ctx {
    const SessionConfig* c;
    const RunOptions& opt;
    Outcome& out;
    json& res() { return out.report.results; }
    std::vector<std::string>& text() { return out.text; }
    const SessionConfig& cfg() const {
        if (!c) throw ConfigError("this command needs a config file");
        return *c;
    }
};

void cmd_validate(Ctx& x) {
    const auto& c = x.cfg();
    auto& r = x.res();
    r["params"] = c.params.names();
    r["mode"] = c.mode == Mode::Strict ? "strict" : "permissive";
    x.text().push_back("parameters: " + std::to_string(c.params.size()));
    if (c.datum) {
        const auto& d = *c.datum;
        json cj = {{"type", d.cartan.type_name}, {"matrix", d.cartan.A}, {"symmetrizer", d.cartan.d}};
        json qI = json::array();
        for (const auto& q : d.qI) qI.push_back(q.str(d.params));
        json lk = json::array();
        for (const auto& [ij, v] : d.linking)
            lk.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"value", v.str(d.params)}});
        r["datum"] = {{"rank", d.s}, {"theta", d.theta()}, {"cartan", cj}, {"q_I", qI}, {"linking", lk},
                      {"warnings", d.warnings}};
        x.text().push_back("datum: theta = " + std::to_string(d.theta()) + ", rank " + std::to_string(d.s) +
                           ", Cartan " + (d.cartan.type_name.empty() ? matrix_str(d.cartan.A) : d.cartan.type_name));
        for (const auto& w : d.warnings) x.text().push_back("warning: " + w);
        auto P = build_udlambda(d);
        r["family"] = family_name(P.family);
        r["partial_presentation"] = P.partial();
        x.text().push_back("family: " + family_name(P.family) + (P.partial() ? " (partial presentation)" : ""));
    }
    if (c.algebra) {
        r["algebra"] = {{"generators", c.algebra->names}, {"N", c.algebra->N}, {"relations", c.algebra->R.size()}};
        x.text().push_back("algebra: " + std::to_string(c.algebra->n()) + " generators, " +
                           std::to_string(c.algebra->R.size()) + " relations of degree " + std::to_string(c.algebra->N));
    }
    if (c.module && c.datum) {
        auto P = crossed_presentation(c.crossed(ObjectKind::Crossed));
        r["module_algebra"] = "relations compatible";
        x.text().push_back("module algebra: relations compatible with the action (family " + family_name(P.family) + ")");
    }
    x.text().push_back("OK");
}

void cmd_roots(Ctx& x) {
    CartanMatrix C;
    const GenericDatum* d = nullptr;
    if (!x.opt.cartan_type.empty()) {
        C = cartan_from_type(x.opt.cartan_type);
    } else {
        d = &x.cfg().require_datum();
        C = d->cartan;
    }
    auto rs = positive_roots(C);
    json roots = json::array();
    x.text().push_back("p = " + std::to_string(rs.p()));
    for (const auto& beta : rs.roots) {
        json e = {{"root", root_str(beta)}, {"coordinates", beta}};
        std::string line = "  " + root_str(beta);
        if (d) {
            auto g = root_group(*d, beta);
            e["g_beta"] = g;
            e["chi_beta"] = character_json(root_char(*d, beta), d->params);
            line += "   g = " + group_str(g);
        }
        roots.push_back(e);
        x.text().push_back(line);
    }
    x.res() = {{"p", rs.p()}, {"roots", roots}};
    x.out.report.provenance = {"positive roots by closing the simple roots under simple reflections"};
}

void cmd_deform(Ctx& x) {
    const auto& c = x.cfg();
    const auto& d = c.require_datum();
    auto dd = deform_datum(d, c.sigma);
    json chis = json::array(), q = json::array(), xi = json::array();
    for (const auto& ch : dd.chi) chis.push_back(character_json(ch, d.params));
    for (const auto& row : dd.q) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str(d.params));
        q.push_back(r);
    }
    for (const auto& [i, j] : dd.xi) xi.push_back({i + 1, j + 1});
    auto& r = x.res();
    r["chi_sigma"] = chis;
    r["q_sigma"] = q;
    r["Xi"] = xi;
    x.text().push_back("deformed characters:");
    for (std::size_t i = 0; i < dd.chi.size(); ++i) {
        std::string line = "  chi" + std::to_string(i + 1) + "^sigma:";
        for (std::size_t j = 0; j < d.s; ++j)
            line += std::string(j ? "," : "") + " y" + std::to_string(j + 1) + " -> " + dd.chi[i].on_basis(j).str(d.params);
        x.text().push_back(line);
    }
    std::string xs;
    for (const auto& [i, j] : dd.xi) xs += " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    x.text().push_back("Xi(sigma):" + (xs.empty() ? std::string(" empty") : xs));
    try {
        auto dg = deformed_generic(d, c.sigma, c.mode);
        r["deformed_datum"] = {{"valid", true}, {"warnings", dg.warnings}};
        x.text().push_back("deformed datum: valid");
    } catch (const DatumError& e) {
        r["deformed_datum"] = {{"valid", false}, {"error", e.what()}};
        x.text().push_back(std::string("deformed datum: rejected: ") + e.what());
    }
    x.out.report.provenance = {"chi_i^sigma(g) = sigma(g,g_i)/sigma(g_i,g) chi_i(g)"};
}

struct NakResult {
    Presentation P;
    GradedEndomorphism phi;
    std::vector<Check> checks;
};

NakResult nakayama_for(const SessionConfig& c, ObjectKind kind) {
    NakResult n;
    switch (kind) {
        case ObjectKind::Hopf:
            n.P = build_udlambda(c.require_datum());
            n.phi = nakayama_hopf(c.require_datum());
            n.checks.push_back({"mu and nu differ by conjugation", nakayama_hopf_alt(c.require_datum()).related, ""});
            break;
        case ObjectKind::Cleft:
            n.P = build_cleft(c.cleft());
            n.phi = nakayama_cleft(c.cleft(), &n.checks);
            break;
        default: {
            auto in = c.crossed(kind);
            n.P = crossed_presentation(in);
            n.phi = nakayama_crossed(in, &n.checks);
        }
    }
    auto cert = certify_endomorphism(n.P, n.phi);
    n.checks.push_back({"Nakayama map respects every relation", cert.ok, cert.failing_relation});
    return n;
}

bool all_ok(const std::vector<Check>& cs) {
    for (const auto& c : cs)
        if (!c.ok) return false;
    return true;
}

void checks_text(std::vector<std::string>& t, const std::vector<Check>& cs) {
    for (const auto& c : cs) t.push_back("  [" + std::string(c.ok ? "ok" : "FAILED") + "] " + c.name + (c.detail.empty() ? "" : ": " + c.detail));
}

void cmd_nakayama(Ctx& x) {
    auto n = nakayama_for(x.cfg(), x.opt.object);
    auto& r = x.res();
    r["object"] = object_name(x.opt.object);
    r["family"] = family_name(n.P.family);
    r["map"] = map_json(n.P, n.phi);
    r["checks"] = checks_json(n.checks);
    x.text().push_back("Nakayama automorphism (" + object_name(x.opt.object) + "):");
    map_text(x.text(), n.P, n.phi);
    checks_text(x.text(), n.checks);
    x.out.report.provenance = n.phi.provenance;
    if (!all_ok(n.checks)) x.out.exit_code = 1;
}

void cmd_is_cy(Ctx& x) {
    const auto& c = x.cfg();
    CYReport rep;
    switch (x.opt.object) {
        case ObjectKind::Hopf: rep = decide_cy_hopf(c.require_datum()); break;
        case ObjectKind::Cleft: rep = decide_cy_cleft(c.cleft()); break;
        default: rep = decide_cy_crossed(c.crossed(x.opt.object));
    }
    const auto& P = rep.presentation;
    auto& r = x.res();
    r["object"] = object_name(rep.object);
    r["family"] = family_name(P.family);
    r["gldim"] = rep.gldim;
    r["twisted_cy"] = rep.twisted_cy;
    r["cy"] = rep.cy;
    r["verdict"] = rep.cy ? "YES" : "NO";
    r["nakayama"] = map_json(P, rep.nakayama);
    r["system"] = system_json(rep.inner.system);
    r["checks"] = checks_json(rep.checks);
    if (rep.cy) {
        r["witness"] = rep.inner.answer.witness;
        r["witness_element"] = group_str(rep.inner.answer.witness);
        r["kernel"] = rep.inner.answer.kernel;
    } else {
        r["reason"] = rep.reason;
        if (rep.inner.obstruction.empty())
            r["certificate"] = {{"multipliers", rep.inner.answer.certificate.y},
                                {"modulus", rep.inner.answer.certificate.modulus},
                                {"description", rep.inner.answer.certificate.describe(rep.inner.system)}};
    }
    auto& t = x.text();
    t.push_back(object_name(rep.object) + " object, family " + family_name(P.family) + ", global dimension " +
                std::to_string(rep.gldim));
    t.push_back("Nakayama automorphism:");
    map_text(t, P, rep.nakayama);
    if (rep.cy) {
        std::string ker;
        for (const auto& k : rep.inner.answer.kernel) ker += " + Z" + group_str(k);
        t.push_back("CY: YES, witness " + group_str(rep.inner.answer.witness) + ker);
    } else {
        t.push_back("CY: NO, " + rep.reason);
    }
    checks_text(t, rep.checks);
    x.out.report.provenance = rep.provenance;
    x.out.report.provenance.push_back("CY iff the Nakayama map is conjugation by a group-like: integer system on its exponent");
    x.out.exit_code = rep.cy && rep.all_checks_ok() ? 0 : 1;
}

void cmd_hdet(Ctx& x) {
    const auto& c = x.cfg();
    const auto& d = c.require_datum();
    const auto& a = c.require_module();
    const std::size_t m = d.m();
    Character h = Character::trivial(d.s, m);
    std::vector<RF> hx(d.theta(), RF::zero(m));
    if (!a.names.empty()) {
        Koszul K = koszul_of(a, d.params);
        auto act = action_of(a, d.g);
        check_action(K, act);
        h = hdet_character(K, act, d.s);
        for (std::size_t k = 0; k < d.theta(); ++k) hx[k] = hdet_x(K, act, k);
    }
    json xs = json::object();
    x.text().push_back("hdet:");
    for (std::size_t j = 0; j < d.s; ++j)
        x.text().push_back("  y" + std::to_string(j + 1) + " -> " + h.on_basis(j).str(d.params));
    for (std::size_t k = 0; k < d.theta(); ++k) {
        xs["x" + std::to_string(k + 1)] = hx[k].str(d.params);
        x.text().push_back("  x" + std::to_string(k + 1) + " -> " + hx[k].str(d.params));
    }
    x.res() = {{"group", character_json(h, d.params)}, {"x", xs}};
    x.out.report.provenance = {"hdet(h): scalar by which h acts on the top degree of the Koszul dual"};
}

void cmd_koszul(Ctx& x) {
    const auto& c = x.cfg();
    Koszul K(c.require_algebra());
    std::size_t maxd = x.opt.max_degree.value_or(c.max_koszul_degree);
    auto rep = koszulity_certificate(K, maxd);
    json slices = json::array();
    for (const auto& s : rep.slices)
        slices.push_back({{"degree", s.degree}, {"dims", s.dims}, {"ranks", s.ranks}, {"homology", s.homology},
                          {"exact", s.exact}, {"commute", s.commute}, {"complex", s.complex}});
    bool ok = rep.exact && rep.commute && rep.complex && rep.com_ok.value_or(true);
    auto& r = x.res();
    r["max_degree"] = maxd;
    r["dims"] = rep.dims;
    r["dual_dims"] = rep.dual_dims;
    r["slices"] = slices;
    r["exact"] = rep.exact;
    r["commute"] = rep.commute;
    r["complex"] = rep.complex;
    r["com"] = rep.com_ok ? json(*rep.com_ok) : json(nullptr);
    r["failure"] = rep.failure;
    r["verdict"] = ok ? "PASS" : "FAIL";
    auto& t = x.text();
    for (const auto& s : rep.slices) {
        std::string dims;
        for (auto v : s.dims) dims += " " + std::to_string(v);
        t.push_back("degree " + std::to_string(s.degree) + ": dims" + dims + (s.exact ? "  exact" : "  NOT exact"));
    }
    t.push_back(std::string("d_l d_r = d_r d_l: ") + (rep.commute ? "yes" : "no"));
    t.push_back(std::string("complex: ") + (rep.complex ? "yes" : "no"));
    if (rep.com_ok) t.push_back(std::string("(com) composes to zero: ") + (*rep.com_ok ? "yes" : "no"));
    if (!rep.failure.empty()) t.push_back("failure: " + rep.failure);
    t.push_back(ok ? "PASS" : "FAIL");
    x.out.report.provenance = {"exactness of the bimodule complex K_b by exact ranks in each internal degree"};
    x.out.exit_code = ok ? 0 : 1;
}

void cmd_frobenius(Ctx& x) {
    const auto& c = x.cfg();
    const auto& A = c.require_algebra();
    Koszul K(A);
    auto F = frobenius_nakayama(K);
    json mu = json::object();
    x.text().push_back("global dimension " + std::to_string(F.d) + ", top degree of the dual " + std::to_string(F.top));
    for (std::size_t i = 0; i < A.n(); ++i) {
        std::string img;
        for (std::size_t j = 0; j < A.n(); ++j) {
            if (F.mu[j][i].is_zero()) continue;
            if (!img.empty()) img += " + ";
            img += F.mu[j][i] == RF::one(A.m()) ? A.names[j] : "(" + F.mu[j][i].str(A.params) + ")*" + A.names[j];
        }
        if (img.empty()) img = "0";
        mu[A.names[i]] = img;
        x.text().push_back("  mu(" + A.names[i] + ") = " + img);
    }
    x.res() = {{"gldim", F.d}, {"top", F.top}, {"dual_dims", F.dual_dims}, {"mu", mu}};
    x.out.report.provenance = {"mu = (-1)^(d+1) times the transpose of the Frobenius automorphism of the Koszul dual"};
}

void cmd_regress(Ctx& x) {
    auto rows = run_regress();
    json a = json::array();
    bool all = true;
    auto& t = x.text();
    for (const auto& r : rows) {
        a.push_back({{"example", r.example}, {"check", r.check}, {"expected", r.expected}, {"computed", r.computed},
                     {"pass", r.pass}, {"note", r.note}});
        all = all && r.pass;
        t.push_back(std::string(r.pass ? "PASS" : "FAIL") + "  " + r.example + ": " + r.check + "  expected " +
                    r.expected + ", computed " + r.computed + (r.note.empty() ? "" : "  (" + r.note + ")"));
    }
    std::size_t npass = 0;
    for (const auto& r : rows) npass += r.pass;
    t.push_back(std::to_string(npass) + "/" + std::to_string(rows.size()) + " checks pass");
    x.res() = {{"rows", a}, {"passed", npass}, {"total", rows.size()}};
    x.out.exit_code = all ? 0 : 1;
}

}  // namespace

Outcome run_command(const std::string& command, const SessionConfig* config, const RunOptions& opt) {
    static const std::map<std::string, std::function<void(Ctx&)>> table = {
        {"validate", cmd_validate}, {"roots", cmd_roots},   {"deform", cmd_deform},
        {"nakayama", cmd_nakayama}, {"is-cy", cmd_is_cy},   {"hdet", cmd_hdet},
        {"koszul-check", cmd_koszul}, {"frobenius-nakayama", cmd_frobenius}, {"paper-regress", cmd_regress}};
    Outcome out;
    out.report.command = command;
    if (config) out.report.inputs = config->echo;
    auto it = table.find(command);
    auto start = std::chrono::steady_clock::now();
    try {
        if (it == table.end()) throw ConfigError("unknown command '" + command + "'");
        Ctx ctx{config, opt, out};
        it->second(ctx);
    } catch (const ConfigError& e) {
        out.exit_code = 2;
        out.report.results = {{"error", e.what()}};
        out.text = {std::string("input error: ") + e.what()};
    } catch (const UnsupportedFamily& e) {
        out.exit_code = 2;
        out.report.results = {{"error", e.what()}};
        out.text = {std::string("unsupported input: ") + e.what()};
    } catch (const AlgebraError& e) {
        out.exit_code = 2;
        out.report.results = {{"error", e.what()}};
        out.text = {std::string("input error: ") + e.what()};
    }
    out.report.timing_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace hopfcy

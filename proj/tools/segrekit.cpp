// segrekit command-line interface.
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error.

#include "segrekit/errors.hpp"
#include "segrekit/hypersurface.hpp"
#include "segrekit/linear_gauge.hpp"
#include "segrekit/literal.hpp"
#include "segrekit/tresse.hpp"

#include <CLI11.hpp>
#include <gmp.h>
#include <openssl/crypto.h>
#include <openssl/evp.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace segrekit;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kDefaultTrunc = 12;

// bad invocation or unreadable input
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_trunc()
{
    const char* env = std::getenv("SEGREKIT_TRUNC");
    if (!env || !*env)
        return kDefaultTrunc;
    try {
        size_t used = 0;
        int t = std::stoi(env, &used);
        if (used != std::string(env).size() || t < 1)
            throw InputError("");
        return t;
    } catch (const std::exception&) {
        throw InputError(std::string("SEGREKIT_TRUNC must be a positive integer, got '") + env + "'");
    }
}

Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << text;
}

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

Sign parse_sign(const std::string& s)
{
    if (s == "+" || s == "plus")
        return Sign::Plus;
    if (s == "-" || s == "minus")
        return Sign::Minus;
    throw InputError("sign must be + or - (or plus / minus), got '" + s + "'");
}

P0Ode read_ode(const std::string& path) { return p0_from_json(read_json(path)); }

// known terms read as an exact polynomial
P0Ode as_polynomial(P0Ode o)
{
    for (USeries* s : {&o.A, &o.B, &o.C, &o.D, &o.E, &o.F}) {
        USeries p(kExact, s->var());
        for (const auto& [d, c] : s->terms())
            p.set(d, c);
        *s = p;
    }
    return o;
}

P0Ode truncated(P0Ode o, int n)
{
    for (USeries* s : {&o.A, &o.B, &o.C, &o.D, &o.E, &o.F})
        *s = s->truncated(n);
    return o;
}

// Segre data flags shared by build and pipeline
struct RealFlags {
    std::string a = "0", b = "0", c = "0";
    int m = 1;
    int trunc = 0;

    void attach(CLI::App* app)
    {
        app->add_option("--a", a, "real series a (coefficient list or expression)");
        app->add_option("--b", b, "real series b");
        app->add_option("--c", c, "complex series c");
        app->add_option("--m", m, "nonminimality order");
        app->add_option("--trunc", trunc, "truncation order (default $SEGREKIT_TRUNC or 12)");
    }
    int effective_trunc() const { return trunc > 0 ? trunc : default_trunc(); }
    RealStructureData data() const
    {
        if (m < 1)
            throw InputError("--m must be positive");
        int n = effective_trunc();
        return RealStructureData{parse_series(a, "w", n), parse_series(b, "w", n), parse_series(c, "w", n), m};
    }
    Json inputs() const
    {
        return Json{{"a", a}, {"b", b}, {"c", c}, {"m", m}, {"trunc", effective_trunc()}};
    }
};

struct Output {
    bool json = false;

    int emit(const std::vector<Report>& reports) const
    {
        if (json) {
            Json arr = Json::array();
            for (const auto& r : reports)
                arr.push_back(to_json(r));
            std::cout << dump(arr);
        } else {
            for (const auto& r : reports)
                std::cout << r.line() << "\n";
        }
        return all_pass(reports) ? 0 : 1;
    }
};

Report p0_report(const P0Ode& ode)
{
    auto v = validate_p0(ode);
    if (v.empty())
        return Report::pass("p0", "C = -A^2/9 and D relation hold mod w^" + std::to_string(ode.trunc()));
    Json w = Json::array();
    for (const auto& x : v)
        w.push_back({{"relation", x.relation}, {"degree", x.degree}, {"difference", to_json(x.difference)}});
    Report r = Report::fail("p0", w, "relation " + v[0].relation + " fails at degree " +
                                        std::to_string(v[0].degree));
    r.residual_order = v[0].degree;
    return r;
}

std::vector<Report> tresse_reports(const P0Ode& ode)
{
    std::vector<Report> out;
    Ode2Poly o = ode_rhs(ode);
    for (auto [which, name] : {std::pair{TresseWhich::L1, "tresse-L1"}, std::pair{TresseWhich::L2, "tresse-L2"}}) {
        Poly2 l = tresse(o, which);
        if (l.is_zero()) {
            Report r = Report::pass(name, "vanishes");
            if (l.precision() < kExact)
                r.residual_order = l.precision();
            out.push_back(r);
        } else {
            out.push_back(Report::fail(name, Json(l.str()), "nonzero: " + l.str()));
        }
    }
    return out;
}

Report segre_residual_report(const P0Ode& ode, const AdmissiblePhi& phi)
{
    if (auto why = admissibility_violation(phi.phi))
        return Report::fail("segre-residual", Json(*why), "family not admissible: " + *why);
    TriSeries res = segre_residual(ode, phi);
    if (auto e = res.first_nonzero()) {
        Json w{{"monomial", {(*e)[0], (*e)[1], (*e)[2]}}, {"coeff", to_json(res.coeff(*e))}};
        Report r = Report::fail("segre-residual", w, "inverse ODE residual nonzero");
        r.residual_order = (*e)[0] + (*e)[1] + (*e)[2];
        return r;
    }
    auto t = res.truncs();
    Report r = Report::pass("segre-residual", "inverse ODE residual zero in box (" + std::to_string(t[0]) +
                                                  "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
    r.residual_order = std::min({t[0], t[1], t[2]});
    return r;
}

Report divergence_to_report(const GaussRational& gamma, int K, int k0)
{
    DivergenceReport d = divergence_report(gamma, K, k0);
    Json table = Json::array();
    for (int k = k0; k + 3 < K; ++k) {
        if (d.a[k].is_zero())
            continue;
        double r2 = Rational(d.a[k + 3].norm2() / d.a[k].norm2()).get_d();
        std::ostringstream os;
        os << std::setprecision(6) << std::sqrt(r2);
        table.push_back({{"k", k}, {"ratio", os.str()}, {"bound", k / 4.0}});
    }
    Json coeffs = Json::array();
    for (int k = 0; k < std::min(K, 6); ++k)
        coeffs.push_back(to_json(d.a[k]));
    Json w{{"gamma", to_json(gamma)}, {"K", K}, {"k0", k0}, {"a", coeffs}, {"ratios", table}};
    std::string detail = "a1 = " + d.a[1].str() + ", a2 = " + d.a[2].str();
    if (d.certified) {
        Report r = Report::pass("divergence", detail + ", |a_{k+3}| >= k/4 |a_k| for " + std::to_string(k0) +
                                                  " <= k <= " + std::to_string(K - 3));
        r.witness = w;
        return r;
    }
    w["first_failure"] = d.first_failure ? Json(*d.first_failure) : Json(nullptr);
    return Report::fail("divergence", w, detail + ", growth bound fails");
}

Report monodromy_report(const LinSystem& sys)
{
    Monodromy mo = monodromy_at_infinity(sys);
    Json obs = Json::array();
    for (const auto& o : mo.obstructions)
        obs.push_back({{"degree", o.degree}, {"i", o.i}, {"j", o.j}, {"coefficient", to_json(o.coefficient)}});
    Json w{{"residue", to_json(mo.residue)},
           {"eigenvalues", {to_json(mo.eigenvalues[0]), to_json(mo.eigenvalues[1])}},
           {"normal", to_json(mo.normal)},
           {"obstructions", obs}};
    std::string eig = mo.eigenvalues[0].str() + ", " + mo.eigenvalues[1].str();
    if (mo.trivial) {
        Report r = Report::pass("monodromy", "trivial; residue eigenvalues " + eig + ", diagonal Euler normal form");
        r.witness = w;
        return r;
    }
    return Report::fail("monodromy", w, "not shown trivial; residue eigenvalues " + eig);
}

std::optional<GaussRational> gamma_of(const P0Ode& ode)
{
    // z'' = (2i - 4w^3) z' / w^4 + gamma w^4 z / w^8
    if (ode.m != 4 || !ode.is_linear())
        return std::nullopt;
    P0Ode ref = e_gamma(GaussRational(0));
    if (!ode.B.equal_mod(ref.B))
        return std::nullopt;
    GaussRational g = ode.E.coeff(4);
    if (ode.E.trunc() <= 4 || !ode.E.equal_mod(USeries::monomial(g, 4)))
        return std::nullopt;
    return g;
}

std::vector<Report> gauge_reports(const GaussRational& gamma, int N)
{
    std::vector<Report> out;
    LinSystem s = to_system(e_gamma(gamma));
    PoincareDulac pd = poincare_dulac(s, N);
    Mat2 res = conjugation_residual(s, pd.gauge, pd.normal);
    Json steps = Json::array();
    for (const auto& st : pd.steps)
        steps.push_back({{"degree", st.degree}, {"kind", st.kind}, {"T", to_json(st.T)}});
    if (res.is_zero()) {
        Report r = Report::pass("poincare-dulac", "gauge conjugates the system to its normal form mod w^" +
                                                      std::to_string(res.trunc()));
        r.residual_order = res.trunc();
        r.witness = Json{{"normal", to_json(pd.normal)}, {"steps", steps}};
        out.push_back(r);
    } else {
        out.push_back(Report::fail("poincare-dulac", to_json(res), "conjugation residual nonzero"));
    }
    FormalFundamental ff = formal_fundamental(gamma, N);
    ScalarGauge F = gauge_chi_tau(ff.fhat, ff.ghat, N);
    if (F.in_class(4)) {
        Report r = Report::pass("gauge-class", "chi = 1 + O(w), tau = w + O(w^5)");
        r.witness = to_json(F);
        out.push_back(r);
    } else {
        out.push_back(Report::fail("gauge-class", to_json(F), "gauge not in class FG_4"));
    }
    TransformResult tr = transform_ode_by_gauge(e_gamma(gamma), F, e_gamma(GaussRational(0)));
    if (tr.first_difference) {
        Report r = Report::fail("gauge-transform", to_json(tr.image), "image differs from E_0 at degree " +
                                                                          std::to_string(*tr.first_difference));
        r.residual_order = *tr.first_difference;
        out.push_back(r);
    } else {
        Report r = Report::pass("gauge-transform", "E_gamma maps to E_0 mod w^" + std::to_string(tr.known_order));
        r.residual_order = tr.known_order;
        out.push_back(r);
    }
    return out;
}

Report transform_report(const P0Ode& ode, const ScalarGauge& F, const std::optional<P0Ode>& target)
{
    TransformResult tr = transform_ode_by_gauge(ode, F, target);
    if (!target) {
        Report r = Report::info("gauge-transform", "image computed mod w^" + std::to_string(tr.known_order));
        r.witness = to_json(tr.image);
        return r;
    }
    if (tr.first_difference) {
        Report r = Report::fail("gauge-transform", to_json(tr.image),
                                "image differs from the target at degree " + std::to_string(*tr.first_difference));
        r.residual_order = *tr.first_difference;
        return r;
    }
    Report r = Report::pass("gauge-transform", "image equals the target mod w^" + std::to_string(tr.known_order));
    r.residual_order = tr.known_order;
    return r;
}

std::vector<HoloField> m0_fields()
{
    const GaussRational i = GaussRational::i();
    auto mono = [](const GaussRational& c, int a, int b) { return BiPoly::monomial(c, a, b); };
    return {
        {mono(i, 1, 0), BiPoly()},
        {BiPoly(), mono(GaussRational(2), 0, 4)},
        {mono(GaussRational(1), 0, 0) + mono(GaussRational(-2), 2, 0), mono(i, 1, 4)},
        {mono(i, 0, 0) + mono(GaussRational(2) * i, 2, 0), mono(GaussRational(1), 1, 4)},
    };
}

int cmd_build(const RealFlags& flags, const std::string& out)
{
    P0Ode ode = build_real(flags.data());
    std::string text = dump(to_json(ode));
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
    return 0;
}

struct PipelineFlags {
    RealFlags real;
    std::string out_dir;
    int box = 5;
};

int cmd_pipeline(const PipelineFlags& pf)
{
    RealStructureData data = pf.real.data();
    if (pf.box < 2)
        throw InputError("--box must be at least 2");
    fs::create_directories(pf.out_dir);
    fs::path dir(pf.out_dir);

    Json manifest;
    manifest["inputs"] = pf.real.inputs();
    manifest["inputs"]["box"] = pf.box;
    manifest["versions"] = Json{{"segrekit", kVersion}, {"gmp", gmp_version}, {"openssl", OpenSSL_version(OPENSSL_VERSION)}};
    manifest["artifacts"] = Json::object();
    std::vector<Report> reports;
    std::string stage = "build";

    auto save = [&](const std::string& name, const Json& j) {
        std::string text = dump(j);
        write_file(dir / name, text);
        manifest["artifacts"][name] = sha256_hex(text);
    };
    auto finish = [&](const std::string& status) {
        Json summary = Json::array();
        for (const auto& r : reports)
            summary.push_back({{"claim", r.claim}, {"status", status_name(r.status)}});
        manifest["reports"] = summary;
        manifest["status"] = status;
        write_file(dir / "manifest.json", dump(manifest));
    };

    // build failures on invalid data are input errors and surface before any artifact exists
    P0Ode ode = build_real(data);
    try {
        save("ode.json", to_json(ode));
        stage = "solve";
        const int n = pf.real.effective_trunc();
        AdmissiblePhi phi = solve_phi(ode, data.m, Sign::Plus, {pf.box, pf.box, n});
        save("phi.json", to_json(phi));
        stage = "hypersurface";
        HyperJet h = build_hypersurface(phi);
        save("hypersurface.json", to_json(h));

        stage = "verify";
        reports.push_back(p0_report(ode));
        for (auto& r : tresse_reports(ode))
            reports.push_back(std::move(r));
        reports.push_back(segre_residual_report(ode, phi));
        reports.push_back(reality_check(ode, data.m, Sign::Plus, {{std::min(pf.box, 4), std::min(pf.box, 4), n}}));
        reports.push_back(reality_verify(h));
        if (auto g = gamma_of(ode)) {
            if (g->is_zero())
                reports.push_back(Report::info("divergence", "gamma = 0: the formal solution is 1"));
            else
                reports.push_back(divergence_to_report(*g, 60, 10));
            reports.push_back(monodromy_report(to_system(e_gamma(*g))));
        }
        Json rj = Json::array();
        for (const auto& r : reports)
            rj.push_back(to_json(r));
        save("reports.json", rj);
    } catch (const std::exception& e) {
        manifest["failure"] = Json{{"stage", stage}, {"error", e.what()}};
        finish("failed");
        std::cerr << "segrekit: stage " << stage << " failed: " << e.what() << "\n";
        return 1;
    }
    bool ok = all_pass(reports);
    finish(ok ? "pass" : "fail");
    for (const auto& r : reports)
        std::cout << r.line() << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"segrekit: exact series computations for P0 ODEs, Segre families and nonminimal hypersurfaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    RealFlags build_flags;
    std::string build_out;
    auto* build = app.add_subcommand("build", "build the P0 ODE of real-structure data (a, b, c, m)");
    build_flags.attach(build);
    build->add_option("-o,--out", build_out, "output file (default stdout)");

    PipelineFlags pf;
    auto* pipeline = app.add_subcommand("pipeline", "build, solve, construct the hypersurface and verify");
    pf.real.attach(pipeline);
    pipeline->add_option("--out-dir", pf.out_dir, "artifact directory")->required();
    pipeline->add_option("--box", pf.box, "z and zb truncation of the Segre family");

    auto* verify = app.add_subcommand("verify", "run one verification");
    verify->require_subcommand(1);
    Output output;
    verify->add_flag("--json", output.json, "structured JSON reports");

    std::string ode_path, sign_str = "+", p_text, gauge_path, target_path, hyper_path;
    std::vector<std::string> field_paths;
    int m = 0, box = 5, K = 60, k0 = 10, N = 16;
    std::string gamma_text;
    bool builtin_m0 = false;
    auto with_json = [&](CLI::App* s) { s->add_flag("--json", output.json, "structured JSON reports"); };

    auto* v_p0 = verify->add_subcommand("p0", "check the P0 relations");
    v_p0->add_option("--ode", ode_path, "P0 ODE file")->required();
    auto* v_tresse = verify->add_subcommand("tresse", "Tresse semi-invariants L1, L2");
    v_tresse->add_option("--ode", ode_path, "P0 ODE file")->required();
    auto* v_reality = verify->add_subcommand("reality", "real structure of the Segre family and the hypersurface");
    v_reality->add_option("--ode", ode_path, "P0 ODE file")->required();
    v_reality->add_option("--m", m, "nonminimality order (default the ODE's)");
    v_reality->add_option("--sign", sign_str, "+ or -");
    v_reality->add_option("--box", box, "z and zb truncation");
    auto* v_segre = verify->add_subcommand("segre-residual", "solve the Segre family and substitute back");
    v_segre->add_option("--ode", ode_path, "P0 ODE file")->required();
    v_segre->add_option("--m", m, "nonminimality order (default the ODE's)");
    v_segre->add_option("--sign", sign_str, "+ or -");
    v_segre->add_option("--box", box, "z and zb truncation");
    auto* v_riccati = verify->add_subcommand("riccati", "check that z'/z = p solves the linear ODE");
    v_riccati->add_option("--ode", ode_path, "linear P0 ODE file")->required();
    v_riccati->add_option("--p", p_text, "Laurent series literal")->required();
    auto* v_mono = verify->add_subcommand("monodromy", "monodromy at infinity of the linear system");
    v_mono->add_option("--ode", ode_path, "linear P0 ODE file; known terms are read as polynomials");
    v_mono->add_option("--gamma", gamma_text, "use E_gamma");
    auto* v_div = verify->add_subcommand("divergence", "coefficient growth of the formal solution of E_gamma");
    v_div->add_option("--gamma", gamma_text, "gamma")->required();
    v_div->add_option("-K", K, "number of coefficients");
    v_div->add_option("--k0", k0, "first certified index");
    auto* v_gauge = verify->add_subcommand("gauge", "formal gauge of E_gamma to E_0, or transport by a gauge file");
    v_gauge->add_option("--gamma", gamma_text, "E_gamma pipeline");
    v_gauge->add_option("-N", N, "truncation order");
    v_gauge->add_option("--ode", ode_path, "linear P0 ODE file");
    v_gauge->add_option("--gauge", gauge_path, "gauge file {f, g}");
    v_gauge->add_option("--target", target_path, "target ODE file");
    auto* v_tan = verify->add_subcommand("tangency", "tangency of X + Xbar to the hypersurface");
    v_tan->add_option("--hyper", hyper_path, "hypersurface file");
    v_tan->add_option("--ode", ode_path, "P0 ODE file, hypersurface built on the fly");
    v_tan->add_option("--m", m, "nonminimality order (default the ODE's)");
    v_tan->add_option("--sign", sign_str, "+ or -");
    v_tan->add_option("--box", box, "z and zb truncation");
    v_tan->add_option("--field", field_paths, "field file {fz, fw}; repeatable");
    v_tan->add_flag("--m0-fields", builtin_m0, "the four automorphism fields of M_0");
    for (auto* s : {v_p0, v_tresse, v_reality, v_segre, v_riccati, v_mono, v_div, v_gauge, v_tan})
        with_json(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed())
            return cmd_build(build_flags, build_out);
        if (pipeline->parsed())
            return cmd_pipeline(pf);

        if (v_p0->parsed())
            return output.emit({p0_report(read_ode(ode_path))});
        if (v_tresse->parsed())
            return output.emit(tresse_reports(read_ode(ode_path)));
        if (v_div->parsed())
            return output.emit({divergence_to_report(parse_series(gamma_text).coeff(0), K, k0)});

        if (v_reality->parsed() || v_segre->parsed() || v_tan->parsed()) {
            if (box < 2)
                throw InputError("--box must be at least 2");
            Sign sign = parse_sign(sign_str);
            if (v_tan->parsed() && !hyper_path.empty()) {
                HyperJet h = hyperjet_from_json(read_json(hyper_path));
                std::vector<HoloField> fields;
                for (const auto& p : field_paths)
                    fields.push_back(field_from_json(read_json(p)));
                if (builtin_m0)
                    for (auto& f : m0_fields())
                        fields.push_back(f);
                if (fields.empty())
                    throw InputError("no fields given (use --field or --m0-fields)");
                std::vector<Report> out;
                for (const auto& X : fields)
                    out.push_back(tangency_check(h, X));
                return output.emit(out);
            }
            if (ode_path.empty())
                throw InputError("--ode or --hyper is required");
            P0Ode ode = read_ode(ode_path);
            int mm = m > 0 ? m : ode.m;
            if (ode.trunc() >= kExact)
                ode = truncated(ode, default_trunc());
            TriSeries::Truncs t{box, box, ode.trunc()};
            if (v_reality->parsed()) {
                std::vector<Report> out{reality_check(ode, mm, sign, {t})};
                if (out[0].ok())
                    out.push_back(reality_verify(build_hypersurface(solve_phi(ode, mm, sign, t))));
                return output.emit(out);
            }
            AdmissiblePhi phi = solve_phi(ode, mm, sign, t);
            if (v_segre->parsed())
                return output.emit({segre_residual_report(ode, phi)});
            HyperJet h = build_hypersurface(phi);
            std::vector<HoloField> fields;
            for (const auto& p : field_paths)
                fields.push_back(field_from_json(read_json(p)));
            if (builtin_m0)
                for (auto& f : m0_fields())
                    fields.push_back(f);
            if (fields.empty())
                throw InputError("no fields given (use --field or --m0-fields)");
            std::vector<Report> out;
            for (const auto& X : fields)
                out.push_back(tangency_check(h, X));
            return output.emit(out);
        }

        if (v_riccati->parsed())
            return output.emit({riccati_check(read_ode(ode_path), parse_laurent(p_text))});

        if (v_mono->parsed()) {
            if (!gamma_text.empty())
                return output.emit({monodromy_report(to_system(e_gamma(parse_series(gamma_text).coeff(0))))});
            if (ode_path.empty())
                throw InputError("--ode or --gamma is required");
            return output.emit({monodromy_report(to_system(as_polynomial(read_ode(ode_path))))});
        }

        if (v_gauge->parsed()) {
            if (!gamma_text.empty())
                return output.emit(gauge_reports(parse_series(gamma_text).coeff(0), N));
            if (ode_path.empty() || gauge_path.empty())
                throw InputError("--gamma, or --ode with --gauge, is required");
            std::optional<P0Ode> target;
            if (!target_path.empty())
                target = read_ode(target_path);
            ScalarGauge F = gauge_from_json(read_json(gauge_path));
            return output.emit({transform_report(read_ode(ode_path), F, target)});
        }
    } catch (const InputError& e) {
        std::cerr << "segrekit: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "segrekit: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "segrekit: " << e.what() << "\n";
        return 2;
    } catch (const StructuralError& e) {
        std::cerr << "segrekit: " << e.what() << "\n";
        return 2;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "segrekit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "segrekit: internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

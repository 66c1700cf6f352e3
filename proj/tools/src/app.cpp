#include "enumpw_cli/app.hpp"

#include "enumpw/heatpoly.hpp"
#include "enumpw/intersect.hpp"
#include "enumpw/pwmatrix.hpp"
#include "enumpw/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace enumpw::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void require(bool ok, const std::string& precondition) {
    if (!ok) throw UsageError("precondition violated: " + precondition);
}

json terms(const MultiPoly& p) {
    json a = json::array();
    for (const auto& [m, c] : p.terms()) a.push_back({m.str(), c.str()});
    return a;
}

json terms(const heat::BivarPoly& p) {
    json a = json::array();
    for (const auto& [k, c] : p.terms()) a.push_back({heat::BivarPoly::monomial(k.first, k.second).str(), c.str()});
    return a;
}

json vec(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json labels(const std::vector<pwmatrix::PairIndex>& xs) {
    json a = json::array();
    for (auto [a1, n1] : xs) a.push_back({a1, n1});
    return a;
}

json matrix(const pwmatrix::PairingMatrix& p) {
    json rows = json::array();
    for (std::size_t i = 0; i < p.m.rows(); ++i) rows.push_back(vec(p.m.row(i)));
    return {{"rows", labels(p.rows)}, {"cols", labels(p.cols)}, {"entries", rows}};
}

class Report {
public:
    json query = json::object();

    void result(const std::string& name, json value, const std::string& provenance) {
        results_.push_back({{"name", name}, {"value", std::move(value)}, {"provenance", provenance}});
    }
    void check(const std::string& name, bool pass, const std::string& detail = "") {
        checks_.push_back({{"name", name}, {"status", pass ? "pass" : "fail"}, {"detail", detail}});
        failed_ = failed_ || !pass;
    }
    void skipped(const std::string& name, const std::string& reason) {
        checks_.push_back({{"name", name}, {"status", "skipped"}, {"detail", reason}});
    }
    bool failed() const { return failed_; }
    const json& checks() const { return checks_; }

    json to_json(std::optional<double> ms) const {
        json j = {{"query", query}, {"results", results_}, {"checks", checks_}, {"version", ENUMPW_VERSION}};
        if (ms) j["timing_ms"] = *ms;
        return j;
    }

private:
    json results_ = json::array();
    json checks_ = json::array();
    bool failed_ = false;
};

struct Options {
    long g = 0;
    int k = 0;
    std::optional<int> h;
    int i = 0, m = 0, j = 0, n = 0;
    std::optional<int> ty, tu;
    int u_order = 1;
    std::string which = "M";
    int k_max = 6;
    std::optional<int> h_min, h_max;
    long g_max = 0;
    long g_span = 12;
    std::vector<int> criteria;
    unsigned jobs = 1;
    std::string format;
    std::string output;
    bool timing = false;
    std::string csv;  // scan output
};

intersect::WittenPolynomial t_poly(const Options& o) {
    require(o.ty.value_or(0) >= 0 && o.tu.value_or(0) >= 0, "--ty >= 0 and --tu >= 0");
    return intersect::WittenPolynomial::t_monomial(o.ty.value_or(0), o.tu.value_or(0));
}

void cmd_intersect_n(const Options& o, Report& r) {
    require(o.g >= 2, "g >= 2");
    require(o.i >= 0 && o.m >= 0 && o.j >= 0, "class exponents >= 0");
    r.query["g"] = o.g;
    r.query["class"] = {o.i, o.m, o.j};
    r.result("integral", intersect::monomial_N(static_cast<int>(o.g), {o.i, o.m, o.j, 0}).str(), "stable-residue");
    auto T = intersect::WittenPolynomial::t_monomial(o.m);
    auto Q = intersect::WittenPolynomial::canonical_q();
    r.check("backends-agree", intersect::integrate_N(static_cast<int>(o.g), T, Q) ==
                                  intersect::integrate_N_zagier(static_cast<int>(o.g), T, Q),
            "residue and sinh presentations for y^" + std::to_string(2 * o.m));
}

void cmd_intersect_z(const Options& o, Report& r) {
    require(o.g >= 2, "g >= 2");
    require(o.k >= 1 && o.k <= o.g - 1, "1 <= k <= g - 1");
    int g = static_cast<int>(o.g);
    r.query["g"] = o.g;
    r.query["k"] = o.k;
    if (o.ty || o.tu) {
        auto T = t_poly(o);
        r.query["t"] = {o.ty.value_or(0), o.tu.value_or(0)};
        auto Q = intersect::WittenPolynomial::canonical_q();
        auto full = T.times_u(3 * g - 3 - 2 * o.k);
        auto kal = intersect::integrate_Z_kalkman(g, full, Q);
        auto spl = intersect::integrate_Z_split(g, full, Q);
        auto top = intersect::integrate_Z_topdefect(g, o.k, T, Q);
        r.result("kalkman", terms(kal), "kalkman-residue");
        r.result("split", terms(spl), "split-residue");
        r.result("top-defect", terms(top), "top-defect-residue");
        r.check("three-route-equality", kal == spl && spl == top);
        return;
    }
    require(o.i >= 0 && o.m >= 0 && o.j >= 0 && o.n >= 0, "class exponents >= 0");
    r.query["class"] = {o.i, o.m, o.j, o.n};
    r.result("integral", intersect::monomial_Z(g, o.k, {o.i, o.m, o.j, o.n}).str(), "top-defect-residue");
}

void cmd_equiv_m(const Options& o, Report& r) {
    require(o.g >= 2, "g >= 2");
    require(o.u_order >= -(6 * o.g - 6), "u-order >= 6 - 6g");
    int g = static_cast<int>(o.g);
    auto T = t_poly(o);
    auto Q = intersect::WittenPolynomial::canonical_q();
    r.query["g"] = o.g;
    r.query["t"] = {o.ty.value_or(0), o.tu.value_or(0)};
    r.query["u_order"] = o.u_order;
    auto L = intersect::equivariant_integral_M(g, T, Q, o.u_order);
    json coeffs = json::array();
    for (int e = L.shift(); e < L.abs_order(); ++e) {
        auto c = L.coefficient(e);
        if (!c.is_zero()) coeffs.push_back({{"u", e}, {"coeff", terms(c)}});
    }
    r.result("series", coeffs, "fixed-point-localization");
    r.result("known_below", L.abs_order(), "fixed-point-localization");
    Truncation t;
    t.add({{Var::A, 1}, {Var::G, 3}}, std::max(intersect::equivariant_weight_bound(g, T, 0), 0));
    auto res = intersect::equivariant_residues(g, T, Q, t);
    r.check("boundary-residue-symmetry", res.at_plus_u == res.at_minus_u, "residues at y = u and y = -u");
}

void cmd_matrix(const Options& o, Report& r) {
    using namespace pwmatrix;
    r.query["which"] = o.which;
    r.query["k"] = o.k;
    if (o.h) r.query["h"] = *o.h;
    if (o.which != "S") r.query["g"] = o.g;
    require(o.k >= 1, "k >= 1");
    require(!o.h || (*o.h >= 0 && *o.h <= o.k), "0 <= h <= k");
    if (o.which != "S") require(o.g >= o.k + 1, "g >= k + 1");
    if (o.which == "M") {
        if (o.h) {
            r.result("M_kh", matrix(build_Mkh(o.g, o.k, *o.h)), "binomial-pairing");
        } else {
            auto M = build_Mk(o.g, o.k);
            r.result("M_k", matrix(M), "binomial-pairing");
            r.check("normalized-factorization",
                    build_Qk(o.g, o.k).m * build_Sk(o.k).m == row_normalization(o.k) * M.m, "Q_k S_k = D_k M_k");
        }
    } else if (o.which == "Q" || o.which == "Qinv") {
        int K = o.k + o.h.value_or(0);
        auto Q = build_Qk(o.g, K), Qi = build_Qk_inv(o.g, K);
        r.result(o.which == "Q" ? "Q_k" : "Q_k_inv", matrix(o.which == "Q" ? Q : Qi), "symmetric-functions");
        r.check("inverse", Q.m * Qi.m == Matrix::identity(Q.rows.size()));
    } else if (o.which == "S") {
        r.result(o.h ? "S_kh" : "S_k", matrix(o.h ? build_Skh(o.k, *o.h) : build_Sk(o.k)), "power-evaluation");
    } else if (o.which == "Qtilde") {
        auto Qt = build_Qtilde(o.g, o.k, o.h.value_or(0));
        r.result("Qtilde", matrix(Qt), "kernel-basis-replacement");
        r.result("det", determinant(Qt.m).str(), "bareiss");
    } else {
        throw UsageError("--which must be one of M, Q, Qinv, S, Qtilde");
    }
}

void cmd_kernel(const Options& o, Report& r) {
    using namespace pwmatrix;
    require(o.k >= 1 && o.g >= o.k + 1, "g >= k + 1 >= 2");
    require(!o.h || (*o.h >= 0 && *o.h <= o.k), "0 <= h <= k");
    r.query["g"] = o.g;
    r.query["k"] = o.k;
    if (o.h) {
        r.query["h"] = *o.h;
        auto M = build_Mkh(o.g, o.k, *o.h);
        auto ker = left_kernel(M);
        json basis = json::array();
        for (const auto& v : ker) basis.push_back(vec(v));
        r.result("rows", labels(M.rows), "index-set");
        r.result("kernel", basis, "fraction-free-elimination");
        r.result("kernel_dim", ker.size(), "fraction-free-elimination");
        return;
    }
    auto M = build_Mk(o.g, o.k);
    auto ker = left_kernel(M);
    json basis = json::array();
    for (const auto& v : ker) basis.push_back(vec(v));
    r.result("rows", labels(M.rows), "index-set");
    r.result("kernel", basis, "fraction-free-elimination");
    auto vc = vk_closed_form(o.g, o.k), vn = vk_newton(o.g, o.k);
    r.result("v_closed_form", vec(vc), "generating-residue");
    r.result("v_newton", vec(vn), "newton-differences");
    r.check("dimension-one", ker.size() == 1, "dim " + std::to_string(ker.size()));
    if (ker.size() != 1) return;
    r.check("closed-form-spans", same_line(vc, ker[0]));
    r.check("newton-spans", same_line(vn, ker[0]));
    r.check("transported-line-is-p_k", same_line(s_frame_line(o.g, o.k, ker[0]), polyvec(heat::pk(o.k), o.k, M.rows)),
            "v D_k^-1 Q_k against the coefficients of p_k");
}

void cmd_solve(const Options& o, Report& r) {
    using namespace pwmatrix;
    int h = o.h.value_or(0);
    require(o.k >= 1 && o.g >= o.k + 1, "g >= k + 1 >= 2");
    require(h >= 0 && h <= o.k, "0 <= h <= k");
    r.query["g"] = o.g;
    r.query["k"] = o.k;
    r.query["h"] = h;
    bool in_range = redundancy_check(o.g, o.k, h);
    auto s = solve_general(o.g, o.k, h);
    Rational det = determinant(build_Qtilde(o.g, o.k, h).m);
    r.result("redundancy_range", in_range, "row-count");
    r.result("kernel_dim", s.kernel_dim, "fraction-free-elimination");
    r.result("distinguished_nonzero", s.distinguished_nonzero, "fraction-free-elimination");
    r.result("det_qtilde", det.str(), "bareiss");
    if (s.solution) {
        r.result("solution", s.solution->str(), "pairing-kernel");
        r.result("solution_terms", terms(s.solution->poly), "pairing-kernel");
        bool zero = true;
        for (const auto& p : top_defect_pairings(o.g, o.k, h, *s.solution)) zero = zero && p.is_zero();
        r.check("annihilates-pairings", zero, "residue pairings against defect 2k-2 classes");
        if (h == 0) r.check("matches-generating-function", lowest_defect_Fk(o.g, o.k).poly == s.solution->poly);
    }
    bool unique = s.solution.has_value();
    if (in_range)
        r.check("unique-iff-det-nonzero", unique == !det.is_zero(), "kernel dimension " + std::to_string(s.kernel_dim));
    else
        r.skipped("unique-iff-det-nonzero",
                  "outside the redundancy range; kernel dimension " + std::to_string(s.kernel_dim));
}

void cmd_heat(const Options& o, Report& r) {
    require(o.k_max >= 0 && o.k_max <= 24, "0 <= k-max <= 24");
    r.query["k_max"] = o.k_max;
    for (int k = 0; k <= o.k_max; ++k) r.result("p_" + std::to_string(k), terms(heat::pk(k)), "heat-polynomial");
    for (int k = 0; k <= o.k_max; ++k) {
        std::string s = std::to_string(k);
        r.check("heat-equation k=" + s, heat::heat_equation(k));
        r.check("alternate-form k=" + s, heat::pk_alt_forms(k));
        r.check("normalizer k=" + s, heat::pk(k).eval(k + 1, 2 * k + 1) == Rational(mpz_class((mpz_class(1) << (k + 1)) - 1)));
        if (k >= 1) {
            r.check("grid-vanishing k=" + s, heat::gamma_vanish(k));
            r.check("identities k=" + s, heat::pk_identities(k));
            r.check("grid-uniqueness k=" + s, heat::gamma_vanishing_dimension(k) == 1);
        }
    }
}

void cmd_wdet_scan(Options& o, Report& r) {
    heat::ScanSpec s;
    s.k_max = o.k_max;
    s.h_min = o.h_min.value_or(o.h.value_or(0));
    s.h_max = o.h_max.value_or(o.h.value_or(1));
    s.g_max = o.g_max;
    s.g_span = o.g_span;
    s.jobs = o.jobs;
    require(s.k_max >= 1 && s.h_min >= 0 && s.h_min <= s.h_max, "k-max >= 1 and 0 <= h-min <= h-max");
    require(s.g_span >= 1 || s.g_max > 0, "g-span >= 1");
    r.query = {{"command", "wdet-scan"}, {"k_max", s.k_max}, {"h_min", s.h_min}, {"h_max", s.h_max}};
    if (s.g_max > 0) r.query["g_max"] = s.g_max;
    else r.query["g_span"] = s.g_span;
    auto rows = heat::positivity_scan(s);
    std::ostringstream csv;
    csv << "k,h,g,value,sign\n";
    json table = json::array();
    int proven = 0, bad = 0;
    for (const auto& row : rows) {
        csv << row.k << "," << row.h << "," << row.g << "," << row.value.str() << "," << row.sign() << "\n";
        table.push_back({row.k, row.h, row.g, row.value.str(), row.sign()});
        if (row.h <= 1 || row.g >= row.k + row.h + 2) {
            ++proven;
            if (row.sign() <= 0) ++bad;
        }
    }
    r.result("table", table, "jt-determinant");
    r.check("positive-where-established", bad == 0,
            std::to_string(proven - bad) + "/" + std::to_string(proven) + " rows with h <= 1 or g >= k+h+2");
    o.csv = csv.str();
}

void cmd_verify_all(const Options& o, Report& r) {
    std::vector<int> ids = o.criteria;
    if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    r.query["criteria"] = ids;
    for (const auto& c : verify::run(ids, o.jobs))
        r.check("criterion " + std::to_string(c.id) + " " + c.name, c.pass, c.detail);
}

std::string resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative())
        if (const char* dir = std::getenv("ENUMPW_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
    return p.string();
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
    Outcome out;
    Options o;
    CLI::App app{"Exact enumerative computations on rank-2 moduli and pairing matrices", "enumpw"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    app.set_version_flag("--version", ENUMPW_VERSION);
    auto common = [&](CLI::App* c) {
        c->add_option("--output,-o", o.output, "write the report to this path");
        c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        c->add_flag("--timing", o.timing, "include wall time in the report");
    };
    std::string chosen;
    auto sub = [&](const char* name, const char* desc) {
        auto* c = app.add_subcommand(name, desc);
        common(c);
        c->callback([&chosen, name] { chosen = name; });
        return c;
    };
    auto cls = [&](CLI::App* c, bool with_n) {
        c->add_option("--i", o.i, "alpha exponent");
        c->add_option("--m", o.m, "beta exponent");
        c->add_option("--j", o.j, "(4 gamma) exponent");
        if (with_n) c->add_option("--n", o.n, "eta exponent");
    };

    auto* in = sub("intersect-n", "integral of alpha^i beta^m (4gamma)^j on the stable-bundle space");
    in->add_option("--g", o.g)->required();
    cls(in, false);

    auto* iz = sub("intersect-z", "integral over Z against eta^{3g-3-2k}");
    iz->add_option("--g", o.g)->required();
    iz->add_option("--k", o.k)->required();
    cls(iz, true);
    iz->add_option("--ty", o.ty, "compare routes for T = y^(2 ty) u^tu");
    iz->add_option("--tu", o.tu);

    auto* em = sub("equiv-m", "equivariant integral of T = y^(2 ty) u^tu as a Laurent series in u");
    em->add_option("--g", o.g)->required();
    em->add_option("--ty", o.ty);
    em->add_option("--tu", o.tu);
    em->add_option("--u-order", o.u_order, "exact below u^order");

    auto* mx = sub("matrix", "pairing and factorization matrices");
    mx->add_option("--g", o.g);
    mx->add_option("--k", o.k)->required();
    mx->add_option("--h", o.h);
    mx->add_option("--which", o.which)->check(CLI::IsMember({"M", "Q", "Qinv", "S", "Qtilde"}));

    auto* kr = sub("kernel", "left kernel of the pairing matrix");
    kr->add_option("--g", o.g)->required();
    kr->add_option("--k", o.k)->required();
    kr->add_option("--h", o.h);

    auto* sv = sub("solve", "top-defect solution beta^(k-h)(4gamma)^h + eta F");
    sv->add_option("--g", o.g)->required();
    sv->add_option("--k", o.k)->required();
    sv->add_option("--h", o.h);

    auto* ht = sub("heat", "heat polynomial checks");
    ht->add_option("--k-max", o.k_max);

    auto* ws = sub("wdet-scan", "W_{k,h}(g, 3g-k-h-2) over a grid");
    ws->add_option("--k-max", o.k_max)->required();
    ws->add_option("--h", o.h, "single h");
    ws->add_option("--h-min", o.h_min);
    ws->add_option("--h-max", o.h_max);
    ws->add_option("--g-max", o.g_max, "g runs over [k+1, g-max]");
    ws->add_option("--g-span", o.g_span, "g runs over [k+1, k+span] when --g-max is absent");
    ws->add_option("--jobs", o.jobs)->check(CLI::Range(1u, 256u));

    auto* va = sub("verify-all", "acceptance suites");
    va->add_option("--criteria", o.criteria)->delimiter(',');
    va->add_option("--jobs", o.jobs)->check(CLI::Range(1u, 256u));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    std::ostringstream sout, serr;
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        out.exit_code = app.exit(e, sout, serr) == 0 ? 0 : 2;
        out.output = sout.str();
        out.error = serr.str();
        return out;
    }

    Report r;
    r.query["command"] = chosen;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (o.format == "csv" && chosen != "wdet-scan") throw UsageError("csv output is only available for wdet-scan");
        if (chosen == "intersect-n") cmd_intersect_n(o, r);
        else if (chosen == "intersect-z") cmd_intersect_z(o, r);
        else if (chosen == "equiv-m") cmd_equiv_m(o, r);
        else if (chosen == "matrix") cmd_matrix(o, r);
        else if (chosen == "kernel") cmd_kernel(o, r);
        else if (chosen == "solve") cmd_solve(o, r);
        else if (chosen == "heat") cmd_heat(o, r);
        else if (chosen == "wdet-scan") cmd_wdet_scan(o, r);
        else if (chosen == "verify-all") cmd_verify_all(o, r);
    } catch (const InsufficientPrecision& e) {
        out.exit_code = 2;
        out.error = std::string("error: insufficient precision: ") + e.what() + "\n";
        return out;
    } catch (const std::invalid_argument& e) {
        out.exit_code = 2;
        out.error = std::string("error: ") + e.what() + "\n";
        return out;
    } catch (const std::domain_error& e) {
        out.exit_code = 2;
        out.error = std::string("error: ") + e.what() + "\n";
        return out;
    }
    std::optional<double> ms;
    if (o.timing) ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    bool csv = chosen == "wdet-scan" && o.format != "json";
    out.output = csv ? o.csv : r.to_json(ms).dump(2) + "\n";
    if (csv)
        for (const auto& c : r.checks())
            if (c["status"] == "fail") out.error += "check failed: " + c["name"].get<std::string>() + ": " +
                                                    c["detail"].get<std::string>() + "\n";
    out.exit_code = r.failed() ? 1 : 0;
    if (!o.output.empty()) {
        std::string path = resolve_output(o.output);
        std::ofstream f(path);
        if (!f) {
            out.exit_code = 2;
            out.error += "error: cannot write " + path + "\n";
            return out;
        }
        f << out.output;
    }
    return out;
}

}  // namespace enumpw::cli

// esusy: generate, verify, and diagonalize Ermakov-parameterized complex
// SUSY partner potentials.
//
// Exit codes: 0 ok, 2 configuration/validation error, 3 numerical failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "esusy/darboux.hpp"
#include "esusy/errors.hpp"
#include "esusy/families.hpp"
#include "esusy/spectral.hpp"

using nlohmann::json;
using namespace esusy;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct GridSpec {
    double lo, hi;
    int n;
};

GridSpec parse_grid(const std::string& s) {
    GridSpec g{};
    char trailing;
    if (std::sscanf(s.c_str(), "%lf,%lf,%d%c", &g.lo, &g.hi, &g.n, &trailing) !=
            3 ||
        !(g.lo < g.hi) || g.n < 3) {
        throw ConfigError("bad --grid, expected \"xmin,xmax,n\" with n >= 3");
    }
    return g;
}

struct StateRange {
    int lo = 0, hi = 3;
};

StateRange parse_states(const std::string& s) {
    StateRange r{};
    char trailing;
    if (std::sscanf(s.c_str(), "%d..%d%c", &r.lo, &r.hi, &trailing) != 2 ||
        r.lo < 0 || r.hi < r.lo) {
        throw ConfigError("bad --states, expected \"n0..n1\"");
    }
    return r;
}

// resolved family selection: either inline JSON params or a config file
// carrying {family, params}; the file wins, and conflicts are errors
struct FamilyConfig {
    std::string family;
    json params;
};

FamilyConfig resolve_family(const std::string& family_flag,
                            const std::string& params_flag) {
    if (!params_flag.empty() && params_flag.front() == '{') {
        json inline_params;
        try {
            inline_params = json::parse(params_flag);
        } catch (const json::exception& e) {
            throw ConfigError(std::string("bad --params JSON: ") + e.what());
        }
        if (family_flag.empty()) {
            throw ConfigError("--family is required with inline --params");
        }
        return {family_flag, inline_params};
    }
    if (!params_flag.empty()) {
        std::ifstream in(params_flag);
        if (!in) throw ConfigError("cannot open params file " + params_flag);
        json file;
        try {
            in >> file;
        } catch (const json::exception& e) {
            throw ConfigError(std::string("bad params file: ") + e.what());
        }
        if (!file.contains("family") || !file.contains("params")) {
            throw ConfigError(
                "params file needs {\"family\": ..., \"params\": ...}");
        }
        const std::string fam = file["family"].get<std::string>();
        if (!family_flag.empty() && family_flag != fam) {
            throw ConfigError("--family conflicts with the params file");
        }
        return {fam, file["params"]};
    }
    if (family_flag.empty()) {
        throw ConfigError("--family or a params file is required");
    }
    return {family_flag, json::object()};
}

double need_number(const json& p, const std::string& key) {
    if (!p.contains(key) || !p[key].is_number()) {
        throw ConfigError("missing numeric parameter \"" + key + "\"");
    }
    return p[key].get<double>();
}

struct FamilyHandle {
    std::string name;
    json params;
    std::optional<PeriodicFamily> per;
    std::optional<HyperbolicFamily> hyp;
    std::optional<OscillatorFamily> osc;

    const ComplexPotential& potential() const {
        if (per) return per->potential;
        if (hyp) return hyp->potential;
        return osc->potential;
    }
    const Superpotential& superpotential() const {
        if (per) return per->beta;
        if (hyp) return hyp->beta;
        return osc->beta;
    }
    const AlphaFunction& alpha() const {
        if (per) return per->alpha;
        if (hyp) return hyp->alpha;
        return osc->alpha;
    }
    double lambda() const {
        if (per) return per->lambda;
        if (hyp) return hyp->lambda;
        return osc->lambda;
    }
};

FamilyHandle build_family(const FamilyConfig& cfg) {
    FamilyHandle h;
    h.name = cfg.family;
    h.params = cfg.params;
    if (cfg.family == "periodic") {
        const double k = need_number(cfg.params, "k");
        const double lam = need_number(cfg.params, "lambda");
        PeriodicVariant variant = PeriodicVariant::Cos;
        if (cfg.params.contains("variant")) {
            const std::string v = cfg.params["variant"].get<std::string>();
            if (v == "sin") variant = PeriodicVariant::Sin;
            else if (v != "cos") throw ConfigError("variant must be cos|sin");
        }
        h.per = periodic(k, lam, variant);
    } else if (cfg.family == "hyperbolic") {
        h.hyp = hyperbolic(need_number(cfg.params, "kappa"),
                           need_number(cfg.params, "lambda"));
    } else if (cfg.family == "oscillator") {
        h.osc = osc_family(need_number(cfg.params, "a"),
                           need_number(cfg.params, "b"),
                           need_number(cfg.params, "c"));
    } else {
        throw ConfigError("unknown family \"" + cfg.family + "\"");
    }
    return h;
}

// ---- output writers ---------------------------------------------------

void write_csv(const std::string& path, const std::vector<std::string>& cols,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "") << cols[i];
    }
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << fmt17(row[i]);
        }
        out << "\n";
    }
}

void write_table(const std::string& path, const std::string& format,
                 const std::vector<std::string>& cols,
                 const std::vector<std::vector<double>>& rows) {
    if (format == "csv") {
        write_csv(path, cols, rows);
        return;
    }
    json j;
    j["schema_version"] = 1;
    j["columns"] = cols;
    j["rows"] = rows;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << j.dump(2) << "\n";
}

// ---- subcommands ------------------------------------------------------

int cmd_generate(const FamilyHandle& fam, const GridSpec& grid,
                 const StateRange& states, const std::string& out,
                 const std::string& format) {
    const std::string ext = format == "csv" ? ".csv" : ".json";
    const ComplexPotential& V = fam.potential();

    std::vector<std::vector<double>> rows;
    rows.reserve(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.lo + (grid.hi - grid.lo) * i / (grid.n - 1);
        const Complex v = V(x);
        rows.push_back({x, v.real(), v.imag()});
    }
    write_table(out + "_potential" + ext, format, {"x", "re_V", "im_V"}, rows);
    std::cout << "wrote " << out + "_potential" + ext << " (" << rows.size()
              << " rows)\n";

    auto write_state = [&](const std::string& tag,
                           const std::function<Complex(double)>& psi) {
        std::vector<std::vector<double>> srows;
        srows.reserve(grid.n);
        for (int i = 0; i < grid.n; ++i) {
            const double x = grid.lo + (grid.hi - grid.lo) * i / (grid.n - 1);
            const Complex p = psi(x);
            srows.push_back({x, p.real(), p.imag(), std::norm(p)});
        }
        const std::string path = out + "_" + tag + ext;
        write_table(path, format, {"x", "re_psi", "im_psi", "rho"}, srows);
        std::cout << "wrote " << path << " (" << srows.size() << " rows)\n";
    };

    if (fam.hyp) {
        const MissingState& ms = fam.hyp->bound_state;
        write_state("missing_state", [&ms](double x) { return ms(x); });
    }
    if (fam.osc) {
        MissingState ms = missing_state(fam.osc->u);
        write_state("missing_state", [&ms](double x) { return ms(x); });
        for (int n = states.lo; n <= states.hi; ++n) {
            PartnerWave pw =
                partner_state(oscillator_eigenstate(n), fam.osc->beta, false);
            write_state("state_" + std::to_string(n),
                        [pw](double x) { return pw(x); });
        }
    }
    return 0;
}

struct Check {
    std::string name;
    double value;
    double tolerance;
    bool pass;
};

int cmd_verify(const FamilyHandle& fam, const std::string& out,
               std::map<std::string, double> tol_override) {
    std::vector<Check> checks;
    auto tol_of = [&tol_override](const std::string& name, double dflt) {
        auto it = tol_override.find(name);
        return it == tol_override.end() ? dflt : it->second;
    };
    auto add = [&](const std::string& name, double value, double tol) {
        checks.push_back({name, value, tol, value < tol});
    };

    const AlphaFunction& alpha = fam.alpha();
    const Superpotential& bt = fam.superpotential();
    const ComplexPotential& V = fam.potential();
    const Interval dom = alpha.domain();
    // probe window: stay clear of the exponential-growth edges
    const double L = std::min(0.35 * dom.hi, 12.0);

    double erma = 0.0, ricc = 0.0, ricc2 = 0.0, wron = 0.0, schro = 0.0;
    double jdev = 0.0, current = 0.0;
    const FundamentalPair& pair = alpha.pair();
    const Complex j0 = j_invariant(pair.z, alpha, 0.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = -L + 2.0 * L * i / 999.0;
        const double al = alpha(x);
        const double scale = std::abs(alpha.V()(x) - alpha.epsilon()) * al +
                             std::abs(alpha.lambda0()) / (al * al * al);
        erma = std::max(erma, ermakov_residual(alpha, x) / scale);
        ricc = std::max(ricc, riccati_residual(bt, x));
        const Complex b = bt(x);
        ricc2 = std::max(
            ricc2, std::abs(V(x) - (bt.d1(x) + b * b + bt.epsilon())));
        const double cancel = std::abs(pair.z(x) * pair.v.d1(x)) +
                              std::abs(pair.z.d1(x) * pair.v(x));
        wron = std::max(wron, std::abs(pair.wronskian(x) - pair.w0) /
                                  std::max(1.0, cancel));
        schro = std::max(schro, std::abs(pair.schrodinger_residual_z(x)) /
                                    std::max(1.0, std::abs(pair.z.d2(x))));
        // the invariant is a difference of same-size products; only sample
        // where double precision can resolve it at the stated tolerance
        const double jcancel = std::abs(pair.z.d1(x)) * al +
                               std::abs(pair.z(x)) * std::abs(alpha.d1(x));
        if (jcancel < 1e6 * (1.0 + std::abs(j0))) {
            jdev = std::max(jdev, std::abs(j_invariant(pair.z, alpha, x) - j0));
        }
        current = std::max(current, std::abs(hydrodynamics(bt, x).current -
                                             (-2.0 * fam.lambda())));
    }
    add("ermakov_residual", erma, tol_of("ermakov_residual", 1e-8));
    add("riccati_residual", ricc, tol_of("riccati_residual", 1e-7));
    add("riccati2_identity", ricc2, tol_of("riccati2_identity", 1e-7));
    add("wronskian_constancy", wron, tol_of("wronskian_constancy", 1e-10));
    add("schrodinger_residual", schro, tol_of("schrodinger_residual", 1e-8));
    add("j_invariant_constancy", jdev,
        tol_of("j_invariant_constancy", 1e-9 * (1.0 + std::abs(j0))));
    add("flux_current_constancy", current,
        tol_of("flux_current_constancy", 1e-12));

    // PT defect: symmetric families must vanish, b != 0 oscillator must not;
    // the sin-variant periodic potential is symmetric about a quarter period
    if (fam.osc && fam.osc->b != 0.0) {
        const double defect = pt_defect(V, L, 801);
        checks.push_back({"pt_defect_broken", defect, 0.1, defect > 0.1});
    } else if (fam.per && fam.per->pt_center() != 0.0) {
        const double c0 = fam.per->pt_center();
        double defect = 0.0;
        for (int i = 0; i < 801; ++i) {
            const double x = -L + 2.0 * L * i / 800.0;
            defect = std::max(defect,
                              std::abs(std::conj(V(2.0 * c0 - x)) - V(x)));
        }
        add("pt_defect_about_quarter_period", defect, tol_of("pt_defect", 1e-10));
    } else {
        const double defect = pt_defect(V, L, 801);
        add("pt_defect", defect, tol_of("pt_defect", 1e-10));
    }

    // operator identities on family-appropriate source states
    std::vector<SourceState> sources;
    if (fam.osc) {
        for (int n = 0; n < 4; ++n) sources.push_back(oscillator_eigenstate(n));
    } else {
        const double q = fam.per ? 2.0 * fam.per->k : 0.9;
        sources.push_back(
            {[q](double x) { return std::polar(1.0, q * x); },
             [q](double x) { return Complex(0, q) * std::polar(1.0, q * x); },
             q * q});
    }
    double facto = 0.0, inter = 0.0, adj = 0.0;
    for (const SourceState& s : sources) {
        for (double x : {-0.8 * L, -0.3 * L, 0.1 * L, 0.7 * L}) {
            facto = std::max(facto, factorization_residual(bt, s, x));
            inter = std::max(inter, intertwining_residual(bt, V, s, x));
            if (s.E > bt.epsilon()) {
                adj = std::max(adj,
                               adjoint_intertwining_residual(bt, V, s, x));
            }
        }
    }
    add("factorization_residual", facto,
        tol_of("factorization_residual", 1e-7));
    add("intertwining_residual", inter, tol_of("intertwining_residual", 1e-7));
    add("adjoint_intertwining_residual", adj,
        tol_of("adjoint_intertwining_residual", 1e-7));

    // missing state annihilation, via the family u-function
    TransformationFunction u =
        transformation_function(alpha, fam.lambda(), 0.0);
    double annih = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double x = -L + 2.0 * L * i / 199.0;
        const Complex ms = 1.0 / u(x);
        const Complex dms = -u.d1(x) / (u(x) * u(x));
        annih = std::max(annih,
                         std::abs(ladder_apply(Ladder::A, bt, ms, dms, x)));
    }
    add("missing_state_annihilation", annih,
        tol_of("missing_state_annihilation", 1e-8));

    // bi-orthogonality Gram block (a bound source ladder exists only for
    // the oscillator family)
    if (fam.osc) {
        std::vector<BiorthogonalState> bs;
        for (int n = 0; n < 4; ++n) {
            bs.push_back(make_biorthogonal(oscillator_eigenstate(n), bt));
        }
        MissingPair mp = binormalized_missing_state(fam.osc->u);
        double gram = 0.0;
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                auto fi = [&](double x) {
                    return i == 0 ? mp.psi_bar(x) : bs[i - 1].psi_bar(x);
                };
                auto fj = [&](double x) {
                    return j == 0 ? mp.psi_tilde(x) : bs[j - 1].psi_tilde(x);
                };
                const Complex g = biproduct(fi, fj, -8.0, 8.0, 4096).value;
                gram = std::max(gram, std::abs(g - (i == j ? 1.0 : 0.0)));
            }
        }
        add("gram_identity", gram, tol_of("gram_identity", 1e-5));
    }
    if (fam.hyp) {
        const MissingState& ms = fam.hyp->bound_state;
        auto rho = [&ms](double x) { return Complex(ms.density(x), 0.0); };
        const Complex nrm = simpson(rho, dom.lo, dom.hi, 8192).value;
        add("missing_state_norm", std::abs(nrm.real() - 1.0),
            tol_of("missing_state_norm", 1e-8));
    }

    bool all = true;
    json jchecks = json::array();
    for (const Check& c : checks) {
        all = all && c.pass;
        jchecks.push_back({{"name", c.name},
                           {"value", c.value},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
        std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name << " = "
                  << fmt17(c.value) << " (tol " << fmt17(c.tolerance) << ")\n";
    }
    json report = {{"schema_version", 1}, {"family", fam.name},
                   {"params", fam.params}, {"branch", "complex"},
                   {"lambda0", alpha.lambda0()}, {"checks", jchecks},
                   {"pass", all}};
    if (!out.empty()) {
        std::ofstream o(out, std::ios::binary);
        if (!o) throw ConfigError("cannot write " + out);
        o << report.dump(2) << "\n";
        std::cout << "wrote " << out << "\n";
    }
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    return all ? 0 : 1;
}

int cmd_spectrum(const FamilyHandle& fam, const GridSpec& grid,
                 const StateRange& states, const std::string& out) {
    const int m = states.hi - states.lo + 1;
    std::vector<double> reference;
    if (fam.hyp) {
        reference = {fam.hyp->epsilon};
    } else if (fam.osc) {
        reference.push_back(-1.0);
        while (static_cast<int>(reference.size()) < m) {
            reference.push_back(2.0 * (reference.size() - 1) + 1.0);
        }
    } // periodic: report only, no bound-state reference

    Grid g{grid.lo, grid.hi, grid.n};
    SpectralReport rep =
        spectrum(discretize(fam.potential(), g), m, reference);

    json jmatch = json::array();
    for (const ReferenceMatch& mm : rep.matched) {
        jmatch.push_back({{"expected", mm.expected},
                          {"found_re", mm.found.real()},
                          {"found_im", mm.found.imag()},
                          {"abs_error", mm.abs_error}});
    }
    json lowest = json::array();
    for (int i = 0; i < rep.m; ++i) {
        lowest.push_back({{"re", rep.eigenvalues[i].real()},
                          {"im", rep.eigenvalues[i].imag()}});
    }
    json report = {
        {"schema_version", 1},
        {"family", fam.name},
        {"params", fam.params},
        {"grid", {{"x_min", g.x_min}, {"x_max", g.x_max}, {"n", g.n}}},
        {"eigenvalue_count", rep.eigenvalues.size()},
        {"lowest", lowest},
        {"max_imag_low_m", rep.max_imag_low_m},
        {"matched", jmatch}};
    if (!out.empty()) {
        std::ofstream o(out, std::ios::binary);
        if (!o) throw ConfigError("cannot write " + out);
        o << report.dump(2) << "\n";
    }
    std::cout << "lowest " << rep.m << " eigenvalues (by real part):\n";
    for (int i = 0; i < rep.m; ++i) {
        std::cout << "  " << fmt17(rep.eigenvalues[i].real()) << "  "
                  << fmt17(rep.eigenvalues[i].imag()) << "i\n";
    }
    for (const ReferenceMatch& mm : rep.matched) {
        std::cout << "  expected " << mm.expected << " -> |err| "
                  << fmt17(mm.abs_error) << "\n";
    }
    if (!out.empty()) std::cout << "wrote " << out << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ermakov-parameterized complex SUSY partner potentials"};
    app.require_subcommand(1);

    std::string family, params, grid_str, out, format = "csv", states_str,
                                               tolerances;
    auto add_common = [&](CLI::App* sub, bool needs_grid) {
        sub->add_option("--family", family, "periodic|hyperbolic|oscillator");
        sub->add_option("--params", params, "inline JSON or config file path");
        auto* g = sub->add_option("--grid", grid_str, "xmin,xmax,n");
        if (needs_grid) g->required();
        sub->add_option("--out", out, "output path (prefix for generate)");
        sub->add_option("--format", format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--states", states_str, "state range n0..n1");
        sub->add_option("--tolerance", tolerances,
                        "comma-separated name=value overrides");
    };

    CLI::App* gen =
        app.add_subcommand("generate", "emit potential/state curves");
    add_common(gen, true);
    CLI::App* ver = app.add_subcommand("verify", "run the residual suites");
    add_common(ver, false);
    CLI::App* spc = app.add_subcommand("spectrum", "discretized eigenvalues");
    add_common(spc, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const FamilyConfig cfg = resolve_family(family, params);
        StateRange states;
        if (!states_str.empty()) states = parse_states(states_str);
        std::map<std::string, double> tols;
        if (!tolerances.empty()) {
            std::size_t pos = 0;
            while (pos < tolerances.size()) {
                const std::size_t comma = tolerances.find(',', pos);
                const std::string item = tolerances.substr(pos, comma - pos);
                const std::size_t eq = item.find('=');
                if (eq == std::string::npos) {
                    throw ConfigError("bad --tolerance item \"" + item + "\"");
                }
                tols[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
                pos = comma == std::string::npos ? tolerances.size()
                                                 : comma + 1;
            }
        }

        // classification gate: excluded/conventional parameter sets are
        // reported and refused before any construction
        if (cfg.family == "oscillator") {
            const double a = need_number(cfg.params, "a");
            const double b = need_number(cfg.params, "b");
            const double c = need_number(cfg.params, "c");
            const double lam0 = (4.0 * a * c - b * b) / std::numbers::pi;
            const Branch br = classify(lam0);
            if (br != Branch::Complex) {
                const char* tag =
                    br == Branch::Excluded ? "excluded" : "conventional";
                json report = {{"schema_version", 1},
                               {"family", cfg.family},
                               {"params", cfg.params},
                               {"lambda0", lam0},
                               {"branch", tag}};
                if (!out.empty()) {
                    std::ofstream o(out, std::ios::binary);
                    o << report.dump(2) << "\n";
                }
                std::cerr << "refusing " << tag << " branch (lambda0 = "
                          << fmt17(lam0) << ")\n";
                return 2;
            }
        }

        const FamilyHandle fam = build_family(cfg);
        if (gen->parsed()) {
            if (out.empty()) throw ConfigError("generate needs --out");
            return cmd_generate(fam, parse_grid(grid_str), states, out,
                                format);
        }
        if (ver->parsed()) {
            return cmd_verify(fam, out, std::move(tols));
        }
        return cmd_spectrum(fam, parse_grid(grid_str), states, out);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const LambdaOutOfRange& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroLambdaBranch& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroCrossingRisk& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const OrderTooLarge& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const EigenNoConvergence& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

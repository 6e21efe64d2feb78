// delab: verification suites, Richardson tables and meshes for Delaunay
// surfaces and tori.

#include "delab/cylinder.hpp"
#include "delab/mesh.hpp"
#include "delab/suites.hpp"
#include "delab/torus.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace {

struct Flags {
    std::optional<double> a, eps, beta, nu, R, alpha, tol;
    std::optional<int> n;
    std::string res, out, field, config;
    bool serial = false;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--a", f.a, "Delaunay parameter a in [-1/2, inf) \\ {0}");
    cmd->add_option("--eps", f.eps, "torus bending parameter epsilon");
    cmd->add_option("--n", f.n, "lobe count; sets epsilon = pi/(n h_a) when --eps is absent");
    cmd->add_option("--beta", f.beta, "perturbation-ball exponent");
    cmd->add_option("--nu", f.nu, "prescribed-field remainder exponent");
    cmd->add_option("--R", f.R, "perturbation-ball radius");
    cmd->add_option("--alpha", f.alpha, "Holder exponent");
    cmd->add_option("--res", f.res, "grid resolution NTxNTH");
    cmd->add_option("--tol", f.tol, "tolerance of the adaptive ODE oracle");
    cmd->add_option("--out", f.out, "output path");
    cmd->add_option("--field", f.field, "prescribed-field JSON");
    cmd->add_option("--config", f.config, "JSON config file; flags override it");
    cmd->add_flag("--serial", f.serial, "run the serial reference kernels");
}

delab::RunConfig resolve(const std::string& command, const Flags& f) {
    delab::RunConfig c;
    c.command = command;
    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) throw std::runtime_error("cannot read config " + f.config);
        std::stringstream ss;
        ss << in.rdbuf();
        delab::apply_json_config(c, ss.str());
    }
    if (f.a) c.a = *f.a;
    if (f.eps) c.eps = *f.eps;
    if (f.n) c.n = *f.n;
    if (f.beta) c.beta = *f.beta;
    if (f.nu) c.nu = *f.nu;
    if (f.R) c.R = *f.R;
    if (f.alpha) c.alpha = *f.alpha;
    if (f.tol) c.tol = *f.tol;
    if (!f.res.empty()) std::tie(c.nt, c.nth) = delab::parse_resolution(f.res);
    if (!f.out.empty()) c.out = f.out;
    if (!f.field.empty()) c.field = f.field;
    if (f.serial) c.exec = delab::Exec::serial;
    return c;
}

int emit(const delab::RunConfig& c, const std::vector<delab::CheckRow>& rows, const std::string& fallback) {
    const std::string path = c.out.empty() ? fallback : c.out;
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    delab::write_csv(os, rows);
    std::size_t failed = 0;
    for (const auto& r : rows) failed += r.pass ? 0 : 1;
    std::cout << path << ": " << rows.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

int mesh(const delab::RunConfig& c) {
    const delab::DelaunayProfile prof(c.a);
    const std::string path = c.out.empty() ? "surface.obj" : c.out;
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    delab::MeshSpec spec;
    spec.nt = c.nt;
    spec.nth = c.nth;
    delab::MeshCounts counts;
    if (c.n || c.eps) {
        const delab::TorusPatch T = c.n && !c.eps ? delab::TorusPatch::closed(prof, *c.n) : delab::TorusPatch(prof, *c.eps);
        if (T.param().n) {
            const double half = *T.param().n * prof.tau();
            spec.t0 = -half;
            spec.t1 = half;
            spec.closed_t = true;
        } else {
            spec.t0 = -prof.tau();
            spec.t1 = prof.tau();
        }
        counts = delab::write_obj(os, T, spec);
    } else {
        spec.t0 = -prof.tau();
        spec.t1 = prof.tau();
        counts = delab::write_obj(os, delab::CylinderPatch(prof), spec);
    }
    std::cout << path << ": " << counts.vertices << " vertices, " << counts.faces << " faces\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delaunay surfaces and tori: expansions, kernels and integral identities"};
    app.require_subcommand(1);
    Flags f;
    auto* verify = app.add_subcommand("verify", "run the full invariant suite, write report.csv");
    auto* expand = app.add_subcommand("expand", "write Richardson tables of the torus and graph expansions");
    auto* kernel = app.add_subcommand("kernel", "write Jacobi kernel residuals and singular-limit deviations");
    auto* probe = app.add_subcommand("probe", "write the limit integrals and the obstruction pairing");
    auto* mesh_cmd = app.add_subcommand("mesh", "write an OBJ mesh of the surface or torus");
    for (auto* cmd : {verify, expand, kernel, probe, mesh_cmd}) add_common(cmd, f);
    CLI11_PARSE(app, argc, argv);

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        const delab::RunConfig c = resolve(name, f);
        if (name == "verify") return emit(c, delab::verify_suite(c), "report.csv");
        if (name == "expand") return emit(c, delab::expand_suite(c), "expand.csv");
        if (name == "kernel") return emit(c, delab::kernel_suite(c), "kernel.csv");
        if (name == "probe") return emit(c, delab::probe_suite(c), "probe.csv");
        return mesh(c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        // CSV commands still leave a failure row behind.
        if (name != "mesh") {
            const std::string path = f.out.empty() ? name == "verify" ? "report.csv" : name + ".csv" : f.out;
            if (std::ofstream os(path); os) {
                delab::CheckRow row;
                row.check_id = "cli.error";
                row.parameters = e.what();
                row.value = std::numeric_limits<double>::quiet_NaN();
                row.bound = std::numeric_limits<double>::quiet_NaN();
                delab::write_csv(os, {row});
            }
        }
        return 2;
    }
}

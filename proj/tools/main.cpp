// cubicrev command-line tool; everything goes through the C API.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "cubicrev.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // off-surface / not-in-family / non-invariant
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// prints or writes the buffer, then frees it; returns false on I/O failure
bool emit(cubicrev_buf* buf, const std::string& out_path) {
    if (!buf) return true;
    bool ok = true;
    if (out_path.empty()) {
        std::fwrite(cubicrev_buf_data(buf), 1, cubicrev_buf_size(buf), stdout);
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f.write(cubicrev_buf_data(buf), std::streamsize(cubicrev_buf_size(buf)));
        ok = bool(f);
        if (!ok) std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
    }
    cubicrev_buf_free(buf);
    return ok;
}

int fail(int rc) {
    std::fprintf(stderr, "error: %s\n", cubicrev_last_error());
    return rc == CUBICREV_ERR_USAGE ? kExitUsage : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubicrev: exact and numeric toolkit for the cubic surface of revolution "
                 "x^3 + y^3 + z^3 - 3xyz = 1"};
    app.require_subcommand(1);

    std::string point, rho = "3", t_str, u_str, r_str, out_path, surface = "all";
    bool as_json = false, inverse = false;
    double t_min = 0.2, t_max = 8.0, tol = 1e-9;
    int n_t = 96, n_theta = 96, count = 96, height = 3, trials = 1000, samples = 1000;
    std::uint64_t seed = 42;

    auto* eval = app.add_subcommand("eval", "evaluate F at a rational point");
    eval->add_option("--point", point, "point \"x,y,z\" (rationals or decimals)")->required();
    eval->add_option("--rho", rho, "coefficient of -xyz (default 3)");
    eval->add_flag("--json", as_json, "JSON report");

    auto* mesh = app.add_subcommand("mesh", "export an OBJ mesh of the surface");
    mesh->add_option("--t-min", t_min, "smallest slice parameter (default 0.2)");
    mesh->add_option("--t-max", t_max, "largest slice parameter (default 8)");
    mesh->add_option("--nt", n_t, "t samples (default 96)");
    mesh->add_option("--ntheta", n_theta, "angular samples (default 96)");
    mesh->add_option("--out", out_path, "output path (default stdout)");

    auto* meridian = app.add_subcommand("meridian", "meridian curve samples or a single point");
    meridian->add_option("--t", t_str, "single rational t (exact when sqrt(t) is rational)");
    meridian->add_option("--t-min", t_min, "range start for CSV (default 0.2)");
    meridian->add_option("--t-max", t_max, "range end for CSV (default 8)");
    meridian->add_option("--count", count, "CSV sample count (default 96)");
    meridian->add_flag("--json", as_json, "JSON report (single-t mode)");
    meridian->add_option("--out", out_path, "output path (default stdout)");

    auto* slice = app.add_subcommand("slice", "the slice circle in the plane x+y+z = t");
    slice->add_option("--t", t_str, "rational t > 0")->required();
    slice->add_flag("--json", as_json, "JSON report");

    auto* rotate = app.add_subcommand("rotate", "map between surface and revolution coordinates");
    rotate->add_option("--point", point, "point \"x,y,z\"")->required();
    rotate->add_flag("--inverse", inverse, "map revolution coordinates back");
    rotate->add_flag("--json", as_json, "JSON report");

    auto* rational = app.add_subcommand("rational", "rational-point commands");
    rational->require_subcommand(1);
    auto* gen = rational->add_subcommand("gen", "generate the (u, r) rational point");
    gen->add_option("--u", u_str, "rational u != 0")->required();
    gen->add_option("--r", r_str, "rational r")->required();
    gen->add_flag("--json", as_json, "JSON report");
    auto* member = rational->add_subcommand("member", "invert the generator for a surface point");
    member->add_option("--point", point, "point \"x,y,z\"")->required();
    member->add_flag("--json", as_json, "JSON report");
    auto* enumerate = rational->add_subcommand("enum", "enumerate rational points up to a height");
    enumerate->add_option("--height", height, "height bound (default 3)");
    enumerate->add_flag("--json", as_json, "JSON instead of CSV");
    enumerate->add_option("--out", out_path, "output path (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "singularity and line reports");
    analyze->require_subcommand(1);
    auto* singular = analyze->add_subcommand("singular", "singular-point catalog");
    singular->add_option("--surface", surface, "hcubic | canon | rotated-scaled | all");
    auto* lines = analyze->add_subcommand("lines", "lines at infinity + finite-line rejection");
    lines->add_option("--trials", trials, "random finite-line trials per field (default 1000)");
    lines->add_option("--seed", seed, "RNG seed (default 42)");

    auto* verify = app.add_subcommand("verify", "run the full certificate suite");
    verify->add_option("--seed", seed, "RNG seed (default 42)");
    verify->add_flag("--json", as_json, "machine-readable JSON summary");

    auto* revcheck = app.add_subcommand("revolution-check",
                                        "rotation-invariance sampling for a family member");
    revcheck->add_option("--rho", rho, "coefficient of -xyz (default 3)");
    revcheck->add_option("--samples", samples, "sample count (default 1000)");
    revcheck->add_option("--tol", tol, "relative residual tolerance (default 1e-9)");
    revcheck->add_option("--seed", seed, "RNG seed (default 42)");
    revcheck->add_flag("--json", as_json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    cubicrev_buf* buf = nullptr;
    int rc = CUBICREV_OK;

    if (eval->parsed()) {
        int on_surface = 0;
        rc = cubicrev_eval(point.c_str(), rho.c_str(), as_json, &on_surface, &buf);
        if (rc != CUBICREV_OK) return fail(rc);
        if (!emit(buf, out_path)) return kExitInternal;
        return on_surface ? kExitOk : kExitNegative;
    }
    if (mesh->parsed()) {
        rc = cubicrev_mesh_obj(t_min, t_max, n_t, n_theta, &buf);
        if (rc != CUBICREV_OK) return fail(rc);
        return emit(buf, out_path) ? kExitOk : kExitInternal;
    }
    if (meridian->parsed()) {
        rc = t_str.empty() ? cubicrev_meridian_csv(t_min, t_max, count, &buf)
                           : cubicrev_meridian_at(t_str.c_str(), as_json, &buf);
        if (rc != CUBICREV_OK) return fail(rc);
        return emit(buf, out_path) ? kExitOk : kExitInternal;
    }
    if (slice->parsed()) {
        rc = cubicrev_slice(t_str.c_str(), as_json, &buf);
        if (rc != CUBICREV_OK) return fail(rc);
        return emit(buf, out_path) ? kExitOk : kExitInternal;
    }
    if (rotate->parsed()) {
        int on_axis = 0;
        rc = cubicrev_rotate(point.c_str(), inverse, as_json, &on_axis, &buf);
        if (rc != CUBICREV_OK) return fail(rc);
        return emit(buf, out_path) ? kExitOk : kExitInternal;
    }
    if (gen->parsed()) {
        rc = cubicrev_rational_gen(u_str.c_str(), r_str.c_str(), as_json, &buf);
        if (rc != CUBICREV_OK) return fail(rc);
        return emit(buf, out_path) ? kExitOk : kExitInternal;
    }
    if (member->parsed()) {
        int in_family = 0;
        rc = cubicrev_rational_member(point.c_str(), as_json, &in_family, &buf);
        if (rc != CUBICREV_OK) return fail(rc);
        if (!emit(buf, out_path)) return kExitInternal;
        return in_family ? kExitOk : kExitNegative;
    }
    if (enumerate->parsed()) {
        rc = cubicrev_rational_enum(height, as_json, &buf);
        if (rc != CUBICREV_OK) return fail(rc);
        return emit(buf, out_path) ? kExitOk : kExitInternal;
    }
    if (singular->parsed()) {
        rc = cubicrev_analyze_singular(surface.c_str(), &buf);
        if (rc != CUBICREV_OK) return fail(rc);
        return emit(buf, out_path) ? kExitOk : kExitInternal;
    }
    if (lines->parsed()) {
        rc = cubicrev_analyze_lines(trials, seed, &buf);
        if (rc != CUBICREV_OK) return fail(rc);
        return emit(buf, out_path) ? kExitOk : kExitInternal;
    }
    if (verify->parsed()) {
        int all_passed = 0;
        rc = cubicrev_verify(seed, as_json, &all_passed, &buf);
        if (rc != CUBICREV_OK) return fail(rc);
        if (!emit(buf, out_path)) return kExitInternal;
        return all_passed ? kExitOk : kExitInternal;
    }
    if (revcheck->parsed()) {
        int invariant = 0;
        rc = cubicrev_revolution_check(rho.c_str(), samples, tol, seed, &invariant, &buf);
        if (rc != CUBICREV_OK) return fail(rc);
        if (!emit(buf, out_path)) return kExitInternal;
        return invariant ? kExitOk : kExitNegative;
    }
    return kExitUsage;
}

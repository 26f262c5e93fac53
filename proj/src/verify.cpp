#include "cubicrev/verify.hpp"

#include <cmath>
#include <cstdio>

#include "cubicrev/mesh.hpp"
#include "cubicrev/rational_points.hpp"
#include "cubicrev/rng.hpp"
#include "cubicrev/singular.hpp"
#include "cubicrev/surface.hpp"

namespace cubicrev {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
        if (!c.witness.empty()) j["witness"] = c.witness;
        arr.push_back(std::move(j));
    }
    return nlohmann::json{{"seed", seed}, {"checks", arr}, {"all_passed", all_passed()}};
}

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

VerificationReport run_full_verification(std::uint64_t seed) {
    VerificationReport rep;
    rep.seed = seed;
    auto run = [&](const std::string& name, auto fn) {
        CheckResult c;
        c.name = name;
        try {
            c.passed = fn(c.witness);
        } catch (const std::exception& e) {
            c.passed = false;
            c.witness = e.what();
        }
        rep.checks.push_back(std::move(c));
    };

    run("factorization-identity-q",
        [](std::string&) { return verify_factorization().identity_over_q; });
    run("factorization-identity-cyclotomic",
        [](std::string&) { return verify_factorization().identity_cyclotomic; });
    run("factorization-half-squares",
        [](std::string&) { return verify_factorization().half_square_identity; });

    run("parametrization-residuals", [&](std::string& witness) {
        DetRng rng(derive_seed(seed, 1));
        double worst = 0.0;
        for (int i = 0; i < 2000; ++i) {
            double t = 1e-3 * std::exp(rng.u01() * std::log(1e5));
            double theta = rng.uniform(0.0, 2.0 * M_PI);
            auto p = surface_point(t, theta);
            double res = std::abs(affine_cubic_value(p[0], p[1], p[2], 3.0)) /
                         residual_scale(p[0], p[1], p[2], 3.0);
            worst = std::max(worst, res);
        }
        witness = "max relative residual " + fmt(worst);
        return worst <= 1e-9;
    });

    run("rotation-orthogonality", [](std::string& witness) {
        double err = RotationFrame::orthogonality_error();
        double det_err = std::abs(RotationFrame::det() - 1.0);
        witness = "max |R^T R - I| " + fmt(err) + ", |det - 1| " + fmt(det_err);
        return err <= 1e-14 && det_err <= 1e-14;
    });

    run("canonical-form-residuals", [&](std::string& witness) {
        DetRng rng(derive_seed(seed, 2));
        double worst = 0.0;
        for (int i = 0; i < 2000; ++i) {
            double t = 1e-3 * std::exp(rng.u01() * std::log(1e5));
            double theta = rng.uniform(0.0, 2.0 * M_PI);
            auto r = canonical_residual(RotationFrame::to_rotated(surface_point(t, theta)));
            if (r.on_axis) return false;
            worst = std::max(worst, std::abs(r.value));
        }
        witness = "max |Z*3sqrt(3)(X^2+Y^2) - 2| = " + fmt(worst);
        return worst <= 1e-9;
    });

    run("revolution-invariance-rho3", [&](std::string& witness) {
        auto r = revolution_invariance_test(3.0, 500, 1e-9, derive_seed(seed, 3));
        witness = "max relative residual " + fmt(r.max_residual);
        return r.invariant;
    });

    run("singular-catalog", [](std::string& witness) {
        int binodes = 0;
        for (const char* name : {"hcubic", "canon", "rotated-scaled"}) {
            auto j = singular_catalog_json(name);
            for (const auto& entry : j["points"]) {
                for (const auto& check : entry["checks"])
                    if (check["status"] != "pass") return false;
                if (entry["kind"] == "binode") ++binodes;
            }
        }
        witness = std::to_string(binodes) + " binodes across the three surfaces";
        return binodes == 9;
    });

    run("infinity-lines", [](std::string&) {
        return lines_report_json()["pairwise_distinct"].get<bool>();
    });

    run("finite-line-rejection-rational", [&](std::string& witness) {
        auto r = finite_line_rejection(2000, derive_seed(seed, 4), LineScalar::Rational);
        witness = r.to_json().dump();
        return r.passed;
    });
    run("finite-line-rejection-gaussian", [&](std::string& witness) {
        auto r = finite_line_rejection(2000, derive_seed(seed, 5), LineScalar::Gaussian);
        witness = r.to_json().dump();
        return r.passed;
    });

    run("pythagorean-identity", [&](std::string&) {
        DetRng rng(derive_seed(seed, 6));
        for (int i = 0; i < 1000; ++i) {
            BigRational r(rng.uniform_int(-60, 60), rng.uniform_int(1, 60));
            auto [s, c] = pyth_pair(r);
            if (BigRational(3) * s * s + c * c != BigRational(1)) return false;
        }
        return true;
    });

    run("generator-example", [](std::string& witness) {
        auto p = rational_point({BigRational(2), BigRational(1, 3)});
        witness = p.x.to_string() + "," + p.y.to_string() + "," + p.z.to_string();
        return p == RationalPoint3{BigRational(9, 7), BigRational(15, 14), BigRational(23, 14)};
    });

    run("membership-roundtrip", [&](std::string&) {
        DetRng rng(derive_seed(seed, 7));
        for (int i = 0; i < 100; ++i) {
            long un = 0;
            while (un == 0) un = rng.uniform_int(-20, 20);
            RationalParams params{BigRational(un, rng.uniform_int(1, 20)),
                                  BigRational(rng.uniform_int(-20, 20), rng.uniform_int(1, 20))};
            auto p = rational_point(params);
            auto m = family_membership(p);
            if (m.status != MembershipStatus::InFamily) return false;
            if (rational_point(*m.params) != p) return false;
        }
        return true;
    });

    run("non-family-example", [](std::string& witness) {
        RationalPoint3 p{BigRational(18, 7), BigRational(16, 7), BigRational(15, 7)};
        auto m = family_membership(p);
        witness = m.status_string() + " (" + m.reason_string() + ")";
        return m.status == MembershipStatus::NotInFamily &&
               m.reason == MembershipReason::SumNotARationalSquare;
    });

    run("mesh-determinism", [](std::string& witness) {
        MeshConfig cfg;
        cfg.n_t = 8;
        cfg.n_theta = 12;
        auto a = obj_text(build_surface_mesh(cfg));
        auto b = obj_text(build_surface_mesh(cfg));
        witness = "residual " + fmt(build_surface_mesh(cfg).max_residual);
        return a == b && !a.empty();
    });

    return rep;
}

}  // namespace cubicrev

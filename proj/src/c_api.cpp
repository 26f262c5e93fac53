#include "cubicrev.h"

#include <cstdio>
#include <string>

#include <json.hpp>

#include "cubicrev/mesh.hpp"
#include "cubicrev/rational_points.hpp"
#include "cubicrev/singular.hpp"
#include "cubicrev/surface.hpp"
#include "cubicrev/verify.hpp"

struct cubicrev_buf {
    std::string s;
};

namespace {

using nlohmann::json;
using namespace cubicrev;

thread_local std::string g_last_error;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void deliver(cubicrev_buf** out, std::string text) {
    if (out) *out = new cubicrev_buf{std::move(text)};
}

json report(const char* command, json inputs, json results, json certificates = json::array(),
            json seed = nullptr) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"certificates", std::move(certificates)},
                {"seed", std::move(seed)}};
}

template <class Fn>
int guarded(Fn fn) {
    g_last_error.clear();
    try {
        fn();
        return CUBICREV_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return CUBICREV_ERR_USAGE;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return CUBICREV_ERR_USAGE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CUBICREV_ERR_INTERNAL;
    }
}

std::array<BigRational, 3> parse_point(const char* point) {
    if (!point) throw std::invalid_argument("point: null");
    std::string s(point);
    size_t c1 = s.find(',');
    size_t c2 = c1 == std::string::npos ? std::string::npos : s.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos || s.find(',', c2 + 1) != std::string::npos)
        throw std::invalid_argument("point: expected \"x,y,z\"");
    return {BigRational::from_string(s.substr(0, c1)),
            BigRational::from_string(s.substr(c1 + 1, c2 - c1 - 1)),
            BigRational::from_string(s.substr(c2 + 1))};
}

BigRational parse_rational(const char* s, const char* what) {
    if (!s) throw std::invalid_argument(std::string(what) + ": null");
    return BigRational::from_string(s);
}

}  // namespace

extern "C" {

const char* cubicrev_buf_data(const cubicrev_buf* buf) { return buf ? buf->s.c_str() : ""; }

size_t cubicrev_buf_size(const cubicrev_buf* buf) { return buf ? buf->s.size() : 0; }

void cubicrev_buf_free(cubicrev_buf* buf) { delete buf; }

const char* cubicrev_version(void) { return "0.1.0"; }

const char* cubicrev_last_error(void) { return g_last_error.c_str(); }

int cubicrev_eval(const char* point, const char* rho, int as_json, int* on_surface,
                  cubicrev_buf** out) {
    return guarded([&] {
        auto p = parse_point(point);
        BigRational rho_q = rho ? parse_rational(rho, "rho") : BigRational(3);
        BigRational value = affine_cubic_value(p[0], p[1], p[2], rho_q);
        bool on = value.is_zero();
        if (on_surface) *on_surface = on ? 1 : 0;
        if (as_json) {
            json in{{"point", {p[0].to_string(), p[1].to_string(), p[2].to_string()}},
                    {"rho", rho_q.to_string()}};
            json res{{"value", value.to_string()}, {"on_surface", on}};
            deliver(out, report("eval", in, res).dump(2) + "\n");
        } else {
            std::string text = "value = " + value.to_string() + "\nverdict = " +
                               (on ? "on-surface" : "off-surface") + "\n";
            deliver(out, std::move(text));
        }
    });
}

int cubicrev_mesh_obj(double t_min, double t_max, int n_t, int n_theta, cubicrev_buf** out) {
    return guarded([&] {
        MeshConfig cfg{t_min, t_max, n_t, n_theta};
        deliver(out, obj_text(build_surface_mesh(cfg)));
    });
}

int cubicrev_meridian_csv(double t_min, double t_max, int count, cubicrev_buf** out) {
    return guarded([&] {
        if (!(t_min > 0.0) || !(t_min < t_max) || count < 2)
            throw std::invalid_argument("meridian: need 0 < t_min < t_max and count >= 2");
        std::string csv = "x,y,z\n";
        double log_ratio = std::log(t_max / t_min);
        for (int i = 0; i < count; ++i) {
            double t = t_min * std::exp(log_ratio * double(i) / double(count - 1));
            auto p = meridian(t);
            csv += fmt(p[0]) + "," + fmt(p[1]) + "," + fmt(p[2]) + "\n";
        }
        deliver(out, std::move(csv));
    });
}

int cubicrev_meridian_at(const char* t, int as_json, cubicrev_buf** out) {
    return guarded([&] {
        BigRational tq = parse_rational(t, "t");
        auto exact = meridian_exact(tq);
        json res;
        std::string text;
        if (exact) {
            res = {{"exact", true},
                   {"point",
                    {(*exact)[0].to_string(), (*exact)[1].to_string(), (*exact)[2].to_string()}}};
            text = (*exact)[0].to_string() + "," + (*exact)[1].to_string() + "," +
                   (*exact)[2].to_string() + "\n";
        } else {
            auto p = meridian(tq.to_double());
            res = {{"exact", false}, {"point", {fmt(p[0]), fmt(p[1]), fmt(p[2])}}};
            text = fmt(p[0]) + "," + fmt(p[1]) + "," + fmt(p[2]) + "\n";
        }
        if (as_json)
            deliver(out, report("meridian", json{{"t", tq.to_string()}}, res).dump(2) + "\n");
        else
            deliver(out, std::move(text));
    });
}

int cubicrev_slice(const char* t, int as_json, cubicrev_buf** out) {
    return guarded([&] {
        BigRational tq = parse_rational(t, "t");
        auto s = slice(tq);
        if (as_json) {
            json res{{"center",
                      {s.center[0].to_string(), s.center[1].to_string(), s.center[2].to_string()}},
                     {"circle_radius_sq", s.circle_radius_sq.to_string()},
                     {"sphere_radius_sq", s.sphere_radius_sq.to_string()},
                     {"plane_constant", s.plane_constant.to_string()}};
            deliver(out, report("slice", json{{"t", tq.to_string()}}, res).dump(2) + "\n");
        } else {
            std::string text;
            text += "center = (" + s.center[0].to_string() + ", " + s.center[1].to_string() +
                    ", " + s.center[2].to_string() + ")\n";
            text += "circle_radius_sq = " + s.circle_radius_sq.to_string() + "\n";
            text += "sphere_radius_sq = " + s.sphere_radius_sq.to_string() + "\n";
            text += "plane: x + y + z = " + s.plane_constant.to_string() + "\n";
            deliver(out, std::move(text));
        }
    });
}

int cubicrev_rotate(const char* point, int inverse, int as_json, int* on_axis,
                    cubicrev_buf** out) {
    return guarded([&] {
        auto pq = parse_point(point);
        std::array<double, 3> p{pq[0].to_double(), pq[1].to_double(), pq[2].to_double()};
        if (on_axis) *on_axis = 0;
        if (inverse) {
            auto image = RotationFrame::from_rotated(p);
            if (as_json) {
                json res{{"point", {fmt(image[0]), fmt(image[1]), fmt(image[2])}}};
                deliver(out,
                        report("rotate", json{{"rotated", {fmt(p[0]), fmt(p[1]), fmt(p[2])}}},
                               res)
                                .dump(2) +
                            "\n");
            } else {
                deliver(out, fmt(image[0]) + "," + fmt(image[1]) + "," + fmt(image[2]) + "\n");
            }
            return;
        }
        auto image = RotationFrame::to_rotated(p);
        auto resid = canonical_residual(image);
        if (on_axis) *on_axis = resid.on_axis ? 1 : 0;
        if (as_json) {
            json res{{"rotated", {fmt(image[0]), fmt(image[1]), fmt(image[2])}},
                     {"on_axis", resid.on_axis}};
            if (!resid.on_axis) res["canonical_residual"] = resid.value;
            deliver(out,
                    report("rotate", json{{"point", {fmt(p[0]), fmt(p[1]), fmt(p[2])}}}, res)
                            .dump(2) +
                        "\n");
        } else {
            std::string text =
                fmt(image[0]) + "," + fmt(image[1]) + "," + fmt(image[2]) + "\n";
            text += resid.on_axis ? "on-axis\n"
                                  : "canonical_residual = " + fmt(resid.value) + "\n";
            deliver(out, std::move(text));
        }
    });
}

int cubicrev_rational_gen(const char* u, const char* r, int as_json, cubicrev_buf** out) {
    return guarded([&] {
        RationalParams params{parse_rational(u, "u"), parse_rational(r, "r")};
        auto p = rational_point(params);
        if (as_json) {
            json in{{"u", params.u.to_string()}, {"r", params.r.to_string()}};
            json res{{"point", {p.x.to_string(), p.y.to_string(), p.z.to_string()}},
                     {"height", point_height(p).str()}};
            json certs = json::array({json{{"name", "on-surface-exact"}, {"status", "pass"}}});
            deliver(out, report("rational-gen", in, res, certs).dump(2) + "\n");
        } else {
            deliver(out,
                    p.x.to_string() + "," + p.y.to_string() + "," + p.z.to_string() + "\n");
        }
    });
}

int cubicrev_rational_member(const char* point, int as_json, int* in_family,
                             cubicrev_buf** out) {
    return guarded([&] {
        auto pq = parse_point(point);
        RationalPoint3 p{pq[0], pq[1], pq[2]};
        auto m = family_membership(p);
        if (in_family) *in_family = m.status == MembershipStatus::InFamily ? 1 : 0;
        if (as_json) {
            json in{{"point", {p.x.to_string(), p.y.to_string(), p.z.to_string()}}};
            deliver(out, report("rational-member", in, m.to_json()).dump(2) + "\n");
        } else {
            std::string text = m.status_string();
            if (m.status == MembershipStatus::NotInFamily)
                text += " (" + m.reason_string() + ")";
            if (m.params)
                text += " u = " + m.params->u.to_string() + ", r = " + m.params->r.to_string();
            text += "\n";
            deliver(out, std::move(text));
        }
    });
}

int cubicrev_rational_enum(int height_bound, int as_json, cubicrev_buf** out) {
    return guarded([&] {
        auto pts = enumerate_points(height_bound);
        if (as_json) {
            json res{{"count", pts.size()}, {"points", points_json(pts)}};
            deliver(out,
                    report("rational-enum", json{{"height_bound", height_bound}}, res).dump(2) +
                        "\n");
        } else {
            deliver(out, points_csv(pts));
        }
    });
}

int cubicrev_analyze_singular(const char* surface, cubicrev_buf** out) {
    return guarded([&] {
        std::string name = surface ? surface : "all";
        json res;
        if (name == "all") {
            res["catalogs"] = json::array({singular_catalog_json("hcubic"),
                                           singular_catalog_json("canon"),
                                           singular_catalog_json("rotated-scaled")});
        } else {
            res["catalogs"] = json::array({singular_catalog_json(name)});
        }
        deliver(out,
                report("analyze-singular", json{{"surface", name}}, res).dump(2) + "\n");
    });
}

int cubicrev_analyze_lines(int trials, uint64_t seed, cubicrev_buf** out) {
    return guarded([&] {
        json res{{"infinity", lines_report_json()}};
        if (trials > 0) {
            res["finite_rejection"] =
                json::array({finite_line_rejection(trials, derive_seed(seed, 101),
                                                   LineScalar::Rational)
                                 .to_json(),
                             finite_line_rejection(trials, derive_seed(seed, 102),
                                                   LineScalar::Gaussian)
                                 .to_json()});
        }
        deliver(out, report("analyze-lines", json{{"trials", trials}}, res, json::array(),
                            json(seed))
                             .dump(2) +
                         "\n");
    });
}

int cubicrev_verify(uint64_t seed, int as_json, int* all_passed, cubicrev_buf** out) {
    return guarded([&] {
        auto rep = run_full_verification(seed);
        if (all_passed) *all_passed = rep.all_passed() ? 1 : 0;
        if (as_json) {
            deliver(out, report("verify", json{{"seed", seed}},
                                json{{"all_passed", rep.all_passed()}}, rep.to_json()["checks"],
                                json(seed))
                                 .dump(2) +
                             "\n");
            return;
        }
        std::string text;
        for (const auto& c : rep.checks) {
            text += c.passed ? "[PASS] " : "[FAIL] ";
            text += c.name;
            if (!c.witness.empty()) text += "  (" + c.witness + ")";
            text += "\n";
        }
        text += rep.all_passed() ? "all checks passed\n" : "CERTIFICATE FAILURES PRESENT\n";
        deliver(out, std::move(text));
    });
}

int cubicrev_revolution_check(const char* rho, int samples, double tol, uint64_t seed,
                              int* invariant, cubicrev_buf** out) {
    return guarded([&] {
        double rho_v = rho ? BigRational::from_string(rho).to_double() : 3.0;
        auto rep = revolution_invariance_test(rho_v, samples, tol, seed);
        if (invariant) *invariant = rep.invariant ? 1 : 0;
        deliver(out, report("revolution-check",
                            json{{"rho", rho_v}, {"samples", samples}, {"tol", tol}},
                            rep.to_json(), json::array(), json(seed))
                             .dump(2) +
                         "\n");
    });
}

}  // extern "C"

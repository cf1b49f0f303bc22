#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coords.hpp"
#include "iwasawa.hpp"
#include "json_io.hpp"
#include "matrix.hpp"
#include "resolution.hpp"
#include "sampling.hpp"
#include "subgroups.hpp"
#include "tolerances.hpp"
#include "weyl.hpp"

namespace flagres::verify {

struct SuiteConfig {
    Word word = longest_word(3);
    std::uint64_t seed = 42;
    int samples = 100;
    Tolerances tol;
};

struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckResult> checks;
    std::optional<json> first_failure;

    [[nodiscard]] bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"iwasawa", "inclusion_inverse", "equivariance", "diagram", "root_identities", "sl3", "len2"};
    return names;
}

namespace detail {

// Keeps per-check maxima in first-seen order and the first failing sample.
class Recorder {
public:
    explicit Recorder(SuiteReport& report) : report_(report) {}

    void sample(int index, std::function<json()> inputs) {
        index_ = index;
        inputs_ = std::move(inputs);
    }

    void record(const std::string& name, double deviation, double tolerance) {
        auto it = std::find_if(report_.checks.begin(), report_.checks.end(), [&](const CheckResult& c) { return c.name == name; });
        if (it == report_.checks.end()) {
            report_.checks.push_back({name, 0.0, tolerance, true});
            it = report_.checks.end() - 1;
        }
        const bool ok = deviation <= tolerance;  // false for NaN
        if (!ok) {
            it->pass = false;
            if (!report_.first_failure)
                report_.first_failure = json{{"check", name}, {"sample", index_}, {"deviation", std::isfinite(deviation) ? json(deviation) : json(nullptr)}, {"input", inputs_ ? inputs_() : json(nullptr)}};
        }
        if (std::isnan(deviation) || std::isnan(it->max_deviation)) it->max_deviation = std::numeric_limits<double>::quiet_NaN();
        else it->max_deviation = std::max(it->max_deviation, deviation);
    }

    void exception(const std::string& what) {
        record("no_exceptions", std::numeric_limits<double>::infinity(), 0.0);
        if (report_.first_failure && (*report_.first_failure)["check"] == "no_exceptions" && !report_.first_failure->contains("error"))
            (*report_.first_failure)["error"] = what;
    }

private:
    SuiteReport& report_;
    int index_ = 0;
    std::function<json()> inputs_;
};

template <typename Body>
void run_samples(SuiteReport& report, Body&& body) {
    Recorder rec(report);
    Sampler rng(report.config.seed);
    for (int s = 0; s < report.config.samples; ++s) {
        try {
            body(rec, rng, s);
        } catch (const Error& e) {
            rec.exception(e.what());
        }
    }
    rec.record("no_exceptions", 0.0, 0.0);
}

inline double tuple_scaled_diff(const GroupTuple& x, const GroupTuple& y) {
    double m = 0.0;
    for (std::size_t j = 0; j < x.slots.size(); ++j) m = std::max(m, scaled_diff(x.slots[j], y.slots[j]));
    return m;
}

inline double coords_abs_diff(const ChartPoint& x, const ChartPoint& y) {
    double m = 0.0;
    for (std::size_t j = 0; j < x.coords.size(); ++j) m = std::max(m, std::abs(x.coords[j] - y.coords[j]));
    return m;
}

inline double coords_inf_norm(const ChartPoint& x) {
    double m = 0.0;
    for (const auto& z : x.coords) m = std::max(m, std::abs(z));
    return m;
}

inline std::vector<Root> positive_roots(int n) {
    std::vector<Root> roots;
    for (int r = 1; r <= n; ++r)
        for (int c = r + 1; c <= n; ++c) roots.push_back({r, c});
    return roots;
}

inline Matrix exp_root(const Root& alpha, Complex u, int n) { return nilpotent_exp(root_vector(alpha, n) * u); }

}  // namespace detail

/// k(g) d(g) contract plus the D- and T-equivariance identities on random SL(n) matrices.
inline SuiteReport run_iwasawa(const SuiteConfig& cfg) {
    SuiteReport rep{"iwasawa", cfg, {}, {}};
    const std::size_t n = cfg.word.dim();
    const auto& tol = cfg.tol;
    detail::run_samples(rep, [&](detail::Recorder& rec, Sampler& rng, int s) {
        const Matrix g = rng.sl(n);
        const Matrix dp = rng.split_borel(n);
        const Matrix t = rng.torus(n);
        rec.sample(s, [=] { return json{{"g", g}, {"d_prime", dp}, {"t", t}}; });
        const IwasawaFactors f = iwasawa_factor(g, tol);
        const Matrix d = f.d();
        rec.record("unitarity", unitarity_defect(f.k), tol.unitary);
        rec.record("reconstruction", (f.k * f.a * f.n - g).frobenius_norm() / g.frobenius_norm(), tol.recon);
        double tri = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            if (d(r, r).real() <= 0.0) tri = std::numeric_limits<double>::infinity();
            tri = std::max(tri, std::abs(d(r, r).imag()));
            for (std::size_t c = 0; c < r; ++c) tri = std::max(tri, std::abs(d(r, c)));
        }
        rec.record("d_triangular_positive", tri, tol.value);
        rec.record("d_right_D_equivariance", scaled_diff(d_map(g * dp, tol), d * dp), tol.value);
        rec.record("k_right_D_invariance", scaled_diff(k_map(g * dp, tol), f.k), tol.value);
        rec.record("d_T_conjugation", scaled_diff(d_map(g * t, tol), t.adjoint() * d * t), tol.value);
        rec.record("k_T_equivariance", scaled_diff(k_map(g * t, tol), f.k * t), tol.value);
        rec.record("k_idempotent", scaled_diff(k_map(f.k, tol), f.k), tol.value);
    });
    return rep;
}

/// phi o include = id on K_w and include o phi = id on the Demazure space.
inline SuiteReport run_inclusion_inverse(const SuiteConfig& cfg) {
    SuiteReport rep{"inclusion_inverse", cfg, {}, {}};
    const auto& tol = cfg.tol;
    detail::run_samples(rep, [&](detail::Recorder& rec, Sampler& rng, int s) {
        const GroupTuple p = rng.parabolic_tuple(cfg.word);
        const GroupTuple k = rng.compact_tuple(cfg.word);
        rec.sample(s, [=] { return json{{"p", p}, {"k", k}}; });
        rec.record("phi_include_identity", detail::tuple_scaled_diff(phi(include(k), tol), k), tol.value);
        rec.record("include_phi_same_D_coset", tuple_coset_defect_D(include(phi(p, tol)), p, tol), tol.coset);
        rec.record("beta_beta_inv_round_trip", detail::tuple_scaled_diff(beta(beta_inv(p, tol), tol), p), tol.value);
    });
    return rep;
}

/// phi(p.b) = phi(p).t with t_j = k(b_j), plus the d-factor identity behind it.
inline SuiteReport run_equivariance(const SuiteConfig& cfg) {
    SuiteReport rep{"equivariance", cfg, {}, {}};
    const auto& tol = cfg.tol;
    detail::run_samples(rep, [&](detail::Recorder& rec, Sampler& rng, int s) {
        const GroupTuple p = rng.parabolic_tuple(cfg.word);
        const ActionTuple b = rng.borel_tuple(cfg.word);
        rec.sample(s, [=] { return json{{"p", p}, {"b", b.slots}}; });
        ActionTuple t{cfg.word, {}};
        for (const auto& bj : b.slots) t.slots.push_back(k_map(bj, tol));
        const GroupTuple pb = act(p, b, tol);
        rec.record("phi_equivariance", detail::tuple_scaled_diff(phi(pb, tol), act(phi(p, tol), t, tol)), tol.value);
        const GroupTuple q = beta(p, tol), qb = beta(pb, tol);
        double aux = 0.0;
        for (std::size_t k = 0; k < q.slots.size(); ++k)
            aux = std::max(aux, scaled_diff(d_map(qb.slots[k], tol), t.slots[k].adjoint() * d_map(q.slots[k], tol) * b.slots[k]));
        rec.record("d_factor_transport", aux, tol.value);
    });
    return rep;
}

/// k(rho(p)) and rho_K(phi(p)) agree in K/T, and exactly via the telescoping product.
inline SuiteReport run_diagram(const SuiteConfig& cfg) {
    SuiteReport rep{"diagram", cfg, {}, {}};
    const auto& tol = cfg.tol;
    detail::run_samples(rep, [&](detail::Recorder& rec, Sampler& rng, int s) {
        const GroupTuple p = rng.parabolic_tuple(cfg.word);
        rec.sample(s, [=] { return json{{"p", p}}; });
        const Matrix top = k_map(rho(p), tol);
        const GroupTuple k = phi(p, tol);
        const Matrix bottom = rho_K(k);
        rec.record("diagram_commutes_in_K_mod_T", torus_defect(top.adjoint() * bottom), tol.coset);
        rec.record("k_rho_equals_rhoK_phi", scaled_diff(top, bottom), tol.value);
        const Matrix last_d = d_map(beta(p, tol).slots.back(), tol);
        rec.record("telescoping_product", scaled_diff(rho(p), bottom * last_d), tol.value);
    });
    return rep;
}

/// Torus conjugation, unipotent reordering and Weyl conjugation identities over all root pairs.
inline SuiteReport run_root_identities(const SuiteConfig& cfg) {
    SuiteReport rep{"root_identities", cfg, {}, {}};
    const auto& tol = cfg.tol;
    const int n = cfg.word.n;
    const auto roots = detail::positive_roots(n);
    detail::run_samples(rep, [&](detail::Recorder& rec, Sampler& rng, int s) {
        const double a = rng.uniform(0.2, 5.0);
        const Complex u = rng.disk(3.0), u1 = rng.disk(3.0), u2 = rng.disk(3.0);
        rec.sample(s, [=] { return json{{"a", a}, {"u", {u.real(), u.imag()}}, {"u1", {u1.real(), u1.imag()}}, {"u2", {u2.real(), u2.imag()}}}; });
        double d44 = 0.0, d45 = 0.0, d46 = 0.0;
        for (const auto& alpha : roots) {
            const Matrix a_inv_h = coroot_torus(alpha, 1.0 / a, n);
            for (const auto& beta_root : roots) {
                const double ratio = root_pairing_ratio(alpha, beta_root).value();
                const Matrix lhs = a_inv_h * detail::exp_root(beta_root, u, n);
                const Matrix rhs = detail::exp_root(beta_root, std::pow(a, -2.0 * ratio) * u, n) * a_inv_h;
                d44 = std::max(d44, scaled_diff(lhs, rhs));

                const Matrix ea = root_vector(alpha, n), eb = root_vector(beta_root, n);
                const Matrix bracket = ea * eb - eb * ea;
                const Matrix l45 = detail::exp_root(alpha, u1, n) * detail::exp_root(beta_root, u2, n);
                const Matrix r45 = detail::exp_root(beta_root, u2, n) * nilpotent_exp(bracket * (u1 * u2)) * detail::exp_root(alpha, u1, n);
                d45 = std::max(d45, scaled_diff(l45, r45));
            }
            const double au = a_of(u);
            for (int i = 1; i < n; ++i) {
                const Matrix sd = simple_refl_rep(i, n);
                const Root image = reflect(i, alpha);
                const double len_ratio = static_cast<double>(root_pairing_ratio(image, image).num) / root_pairing_ratio(alpha, alpha).num;
                const Matrix lhs = sd.adjoint() * coroot_torus(alpha, 1.0 / au, n) * sd;
                const Matrix rhs = coroot_torus(image, std::pow(au, -len_ratio), n);
                d46 = std::max(d46, scaled_diff(lhs, rhs));
            }
        }
        rec.record("torus_conjugation", d44, tol.value);
        rec.record("unipotent_reordering", d45, tol.value);
        rec.record("weyl_conjugation", d46, tol.value);
    });
    return rep;
}

/// SL(3), word (1,2,1): numeric change of variables against the closed form, u-variables, round trip.
inline SuiteReport run_sl3(const SuiteConfig& cfg) {
    SuiteConfig fixed = cfg;
    fixed.word = Word(3, {1, 2, 1});
    SuiteReport rep{"sl3", fixed, {}, {}};
    const auto& tol = cfg.tol;
    detail::run_samples(rep, [&](detail::Recorder& rec, Sampler& rng, int s) {
        const ChartPoint zeta{fixed.word, rng.disk_vector(3, 2.0)};
        rec.sample(s, [=] { return json{{"zeta", zeta}}; });
        const ChartPoint z = zeta_to_z(zeta, tol);
        const ChartPoint closed = closed_form_sl3(zeta);
        rec.record("closed_form_relative", detail::coords_abs_diff(z, closed) / detail::coords_inf_norm(closed), tol.value);
        const Matrix m = big_product_M(zeta, tol);
        const ChartPoint u = u_from_zeta(zeta);
        const double du = std::max({std::abs(m(0, 1) - u.coords[0]), std::abs(m(1, 2) - u.coords[1]), std::abs(m(0, 2) - u.coords[2])});
        rec.record("u_coordinates", du, tol.value);
        rec.record("round_trip", detail::coords_abs_diff(z_to_zeta(z, tol), zeta) / std::max(1.0, detail::coords_inf_norm(zeta)), tol.coset);
    });
    return rep;
}

/// Every reduced length-2 word of SL(n) against the two-letter closed form.
inline SuiteReport run_len2(const SuiteConfig& cfg) {
    SuiteReport rep{"len2", cfg, {}, {}};
    const auto& tol = cfg.tol;
    const int n = cfg.word.n;
    std::vector<Word> words;
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y)
            if (x != y) words.emplace_back(n, std::vector<int>{x, y});
    detail::run_samples(rep, [&](detail::Recorder& rec, Sampler& rng, int s) {
        for (const auto& w : words) {
            const ChartPoint zeta{w, rng.disk_vector(2, 2.0)};
            rec.sample(s, [=] { return json{{"zeta", zeta}}; });
            const ChartPoint z = zeta_to_z(zeta, tol);
            rec.record("closed_form_len2", detail::coords_abs_diff(z, closed_form_len2(zeta)), tol.value);
            if (pairing_ratio(w.letters[0], w.letters[1]).num == 0)
                rec.record("orthogonal_identity", detail::coords_abs_diff(z, zeta), tol.value);
        }
    });
    return rep;
}

/// Throws DomainError for an unknown suite name.
inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (name == "iwasawa") return run_iwasawa(cfg);
    if (name == "inclusion_inverse") return run_inclusion_inverse(cfg);
    if (name == "equivariance") return run_equivariance(cfg);
    if (name == "diagram") return run_diagram(cfg);
    if (name == "root_identities") return run_root_identities(cfg);
    if (name == "sl3") return run_sl3(cfg);
    if (name == "len2") return run_len2(cfg);
    throw DomainError("unknown suite: " + name);
}

inline json report_json(const SuiteReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"name", c.name},
                              {"max_deviation", std::isfinite(c.max_deviation) ? json(c.max_deviation) : json(nullptr)},
                              {"tolerance", c.tolerance},
                              {"pass", c.pass}});
    return json{{"suite", r.suite},
                {"generator", Sampler::kGenerator},
                {"seed", r.config.seed},
                {"samples", r.config.samples},
                {"n", r.config.word.n},
                {"word", r.config.word.letters},
                {"checks", std::move(checks)},
                {"pass", r.pass()},
                {"first_failure", r.first_failure ? *r.first_failure : json(nullptr)}};
}

inline std::string report_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << " (n=" << r.config.word.n << ", word=";
    for (std::size_t i = 0; i < r.config.word.letters.size(); ++i) os << (i ? "," : "") << r.config.word.letters[i];
    os << ", seed=" << r.config.seed << ", samples=" << r.config.samples << ", generator=" << Sampler::kGenerator << ")\n";
    for (const auto& c : r.checks)
        os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  max_deviation=" << shortest(c.max_deviation)
           << "  tolerance=" << shortest(c.tolerance) << "\n";
    os << "result: " << (r.pass() ? "PASS" : "FAIL") << "\n";
    if (r.first_failure) os << "first failure: " << r.first_failure->dump() << "\n";
    return os.str();
}

}  // namespace flagres::verify

#include "hecke/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "hecke/errors.hpp"

namespace hecke {

std::uint64_t Draw::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Draw::uniform(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

std::size_t Draw::index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

OFLattice random_lattice(const FieldDescriptor& F, Draw& draw) {
    if (F.is_rational()) {
        static const Rational gens[] = {Rational(1), Rational(2), Rational(1, 2), Rational(3, 2), Rational(3)};
        QuadElement a = QuadElement::rational(gens[draw.index(5)]);
        QuadElement b = QuadElement::rational(gens[draw.index(5)]);
        double x = draw.uniform(-0.5, 0.5);
        double y = draw.uniform(0.6, 1.8);
        return OFLattice(F, a, b, DNumber::from_parts(F, {cplx(x)}, {cplx(y)}));
    }
    const QuadElement gens[] = {F.one(), F.omega(), F.one() + F.omega(), F.element(2)};
    QuadElement a = gens[draw.index(4)];
    QuadElement b = gens[draw.index(4)];
    cplx x(draw.uniform(-0.5, 0.5), draw.uniform(-0.5, 0.5));
    double r = draw.uniform(0.7, 1.4);
    double th = draw.uniform(0.0, 2.0 * kPi);
    return OFLattice(F, a, b, DNumber::from_parts(F, {x}, {std::polar(r, th)}));
}

namespace {

std::string element_text(const QuadElement& a) {
    auto q = [](const Rational& r) { return r.str(); };
    if (a.is_rational()) return q(a.a());
    return q(a.a()) + ":" + q(a.b());
}

std::string cplx_text(cplx s) {
    if (s.imag() == 0.0) return format_number(s.real());
    return format_number(s.real()) + "," + format_number(s.imag());
}

using Clock = std::chrono::steady_clock;

VerificationReport timed(const std::function<void(VerificationReport&)>& body) {
    VerificationReport r;
    auto t0 = Clock::now();
    body(r);
    r.finalize();
    r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return r;
}

VerificationReport failed(VerificationReport r, const std::exception& e) {
    r.parameters["error"] = e.what();
    r.lhs = cplx(std::nan(""), 0.0);
    return r;
}

// Runs body; a thrown error turns into a failing report naming the error.
VerificationReport guarded(const std::string& command, const std::string& fields, double tolerance,
                           const std::function<void(VerificationReport&)>& body) {
    VerificationReport base;
    base.command = command;
    base.fields = fields;
    base.tolerance = tolerance;
    try {
        return timed([&](VerificationReport& r) {
            r = base;
            body(r);
        });
    } catch (const std::exception& e) {
        VerificationReport r = failed(base, e);
        r.abs_error = std::nan("");
        r.pass = false;
        return r;
    }
}

}  // namespace

std::string lattice_text(const OFLattice& L) {
    std::string z;
    const auto& q = L.z()[0];
    if (L.field().is_rational()) {
        z = format_number(q.x().real()) + ":" + format_number(q.y().real());
    } else {
        z = format_number(q.x().real()) + ":" + format_number(q.x().imag()) + ":" + format_number(q.y().real()) +
            ":" + format_number(q.y().imag());
    }
    return element_text(L.ideal_a()) + "," + z + "," + element_text(L.ideal_b());
}

VerificationReport functional_equation_check(const OFLattice& L, cplx s, double tolerance, const PrecisionConfig& cfg) {
    return guarded("fe", L.field().name(), tolerance, [&](VerificationReport& r) {
        r.parameters = {{"lattice", lattice_text(L)}, {"s", cplx_text(s)}, {"method", "auto"}};
        r.lhs = eisenstein_completed(L, s, Method::Auto, cfg);
        if (L.field().is_rational()) {
            cplx zd = rational_pseudo_basis(L.z_lattice().dual());
            const auto& F = L.field();
            OFLattice D = OFLattice::standard(F, DNumber::from_parts(F, {cplx(zd.real())}, {cplx(zd.imag())}));
            r.parameters["dual"] = lattice_text(D);
            r.rhs = eisenstein_completed(D, 1.0 - s, Method::Auto, cfg);
        } else {
            r.rhs = eisenstein_dual_completed(L, 1.0 - s, Method::Auto, cfg);
        }
    });
}

VerificationReport fourier_check(const OFLattice& L, cplx s, double tolerance, const PrecisionConfig& cfg) {
    return guarded("fourier", L.field().name(), tolerance, [&](VerificationReport& r) {
        r.parameters = {{"lattice", lattice_text(L)}, {"s", cplx_text(s)}};
        r.lhs = EisensteinEvaluator(L, cfg).completed(s);
        r.rhs = gamma_F(L.field(), 2.0 * s) * eisenstein_direct(L, s, 1e-12);
    });
}

std::vector<VerificationReport> relative_klf_reports(const HeckeSetup& S, double tolerance) {
    std::vector<VerificationReport> out;
    RelativeKlf k;
    VerificationReport oracle = guarded("limit-formula", S.K.name(), tolerance, [&](VerificationReport& r) {
        k = relative_klf(S, true);
        r.parameters = {{"ideal", S.ideal.to_string()},
                        {"lhs", "oracle"},
                        {"ctXiFTerm", format_number(k.ct_xi_F_term)},
                        {"logNormTerm", format_number(k.log_norm_term)},
                        {"quadratureTerm", format_number(k.quadrature_term)},
                        {"lhsIntegral", format_number(k.lhs_integral)}};
        r.lhs = k.lhs_oracle;
        r.rhs = k.rhs;
    });
    out.push_back(oracle);
    if (!std::isfinite(oracle.abs_error)) return out;
    VerificationReport integral = oracle;
    integral.parameters["lhs"] = "integral";
    integral.lhs = k.lhs_integral;
    integral.finalize();
    out.push_back(integral);
    VerificationReport measure = oracle;
    measure.command = "klf-measure";
    measure.parameters = {{"ideal", S.ideal.to_string()}, {"wKF", std::to_string(S.w_KF)},
                          {"eps0", format_number(S.eps0)}};
    measure.lhs = k.domain_measure;
    measure.rhs = k.residue_identity;
    measure.tolerance = 1e-8;
    measure.finalize();
    out.push_back(measure);
    return out;
}

VerificationReport relative_klf_check(const HeckeSetup& setup, double tolerance) {
    return relative_klf_reports(setup, tolerance).front();
}

namespace {

using Task = std::function<std::vector<VerificationReport>()>;

Task one(std::function<VerificationReport()> f) {
    return [f] { return std::vector<VerificationReport>{f()}; };
}

FieldDescriptor base_field(std::int64_t d) {
    return d == 0 ? make_rational_field() : make_quadratic_field(d, FieldRole::Base);
}

const std::int64_t kBaseFields[] = {0, -1, -3, -7, -2, -11};

void fourier_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
    Draw draw(o.seed ^ 0x1001);
    for (auto d : kBaseFields) {
        auto F = base_field(d);
        for (int i = 0; i < 10; ++i) {
            OFLattice L = random_lattice(F, draw);
            for (double s : {1.5, 2.5}) tasks.push_back(one([=] { return fourier_check(L, s, 1e-9, o.cfg); }));
        }
    }
}

void fe_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
    Draw draw(o.seed ^ 0x2002);
    std::vector<OFLattice> lats;
    auto Q = make_rational_field();
    auto Fi = make_quadratic_field(-1, FieldRole::Base);
    for (int i = 0; i < 5; ++i) lats.push_back(random_lattice(Q, draw));
    for (int i = 0; i < 2; ++i) lats.push_back(random_lattice(Fi, draw));
    for (const auto& L : lats)
        for (cplx s : {cplx(0.3), cplx(0.5, 0.9), cplx(1.8)})
            tasks.push_back(one([=] { return functional_equation_check(L, s, 1e-9, o.cfg); }));
}

DNumber moebius(const FieldDescriptor& F, const QuadElement (&g)[4], const DNumber& z) {
    auto e = [&](const QuadElement& a) { return DNumber::from_field_element(F, a); };
    return (e(g[0]) * z + e(g[1])) * (e(g[2]) * z + e(g[3])).inverse();
}

void klf_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
    Draw draw(o.seed ^ 0x3003);
    for (auto d : {0, -1, -3}) {
        auto F = base_field(d);
        OFLattice L = random_lattice(F, draw);
        tasks.push_back(one([=] {
            return guarded("klf-residue", F.name(), 1e-7, [&](VerificationReport& r) {
                r.parameters = {{"lattice", lattice_text(L)}};
                EisensteinEvaluator ev(L, o.cfg);
                r.lhs = ev.residue_numeric();
                r.rhs = c_F(F) / 2.0;
            });
        }));
    }
    for (auto d : {0, 0, 0, -1, -3}) {
        auto F = base_field(d);
        OFLattice L = random_lattice(F, draw);
        tasks.push_back(one([=] {
            return guarded("klf-ct", F.name(), 1e-8, [&](VerificationReport& r) {
                r.parameters = {{"lattice", lattice_text(L)}};
                EisensteinEvaluator ev(L, o.cfg);
                r.lhs = ev.ct();
                r.rhs = ev.ct_numeric();
            });
        }));
    }
    auto Q = make_rational_field();
    for (int i = 0; i < 5; ++i) {
        DNumber z = DNumber::from_parts(Q, {cplx(draw.uniform(-0.5, 0.5))}, {cplx(draw.uniform(0.5, 1.6))});
        std::string zt = lattice_text(OFLattice::standard(Q, z));
        tasks.push_back(one([=] {
            return guarded("h-inversion", Q.name(), 1e-8, [&](VerificationReport& r) {
                r.parameters = {{"lattice", zt}};
                DNumber zi = -1.0 * z.inverse();
                r.lhs = h_function(Q, zi, Q.one(), Q.one(), o.cfg) - h_function(Q, z, Q.one(), Q.one(), o.cfg) +
                        std::log(dnorm(z)) * 2.0;
                r.rhs = 0.0;
            });
        }));
        tasks.push_back(one([=] {
            return guarded("h-translation", Q.name(), 1e-10, [&](VerificationReport& r) {
                r.parameters = {{"lattice", zt}};
                DNumber z1 = z + DNumber::from_field_element(Q, Q.one());
                r.lhs = h_function(Q, z1, Q.one(), Q.one(), o.cfg) - h_function(Q, z, Q.one(), Q.one(), o.cfg);
                r.rhs = 0.0;
            });
        }));
    }
    auto Fi = base_field(-1);
    tasks.push_back(one([=] {
        return guarded("h-gl2", Fi.name(), 1e-8, [&](VerificationReport& r) {
            // determinant -1
            const QuadElement g[4] = {Fi.omega(), Fi.one() + Fi.omega(), Fi.one(), Fi.one()};
            DNumber z = DNumber::from_parts(Fi, {cplx(0.21, -0.13)}, {cplx(0.95, 0.31)});
            auto e = [&](const QuadElement& a) { return DNumber::from_field_element(Fi, a); };
            DNumber denom = e(g[2]) * z + e(g[3]);
            r.parameters = {{"lattice", lattice_text(OFLattice::standard(Fi, z))}, {"matrix", "[[i,1+i],[1,1]]"}};
            r.lhs = h_function(Fi, moebius(Fi, g, z), Fi.one(), Fi.one(), o.cfg) -
                    h_function(Fi, z, Fi.one(), Fi.one(), o.cfg) + 2.0 * std::log(dnorm(denom));
            r.rhs = 0.0;
        });
    }));
    for (auto d : {5, 2}) {
        tasks.push_back([=] {
            auto K = make_quadratic_field(d);
            auto S = make_hecke_setup(K, FracIdeal::principal(K, K.one()), o.cfg, 1);
            return relative_klf_reports(S, 1e-5);
        });
    }
}

void hecke_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
    struct Case {
        std::int64_t d;
        bool nonprincipal;
    };
    for (Case c : {Case{-1, false}, Case{-3, false}, Case{-5, true}}) {
        for (double s : {1.5, 2.0, 3.0}) {
            tasks.push_back(one([=] {
                auto K = make_quadratic_field(c.d);
                FracIdeal A = c.nonprincipal ? FracIdeal::hnf(K, 2, 1, 1) : FracIdeal::principal(K, K.one());
                return guarded("imaginary-zeta", K.name(), 1e-6, [&](VerificationReport& r) {
                    r.parameters = {{"ideal", A.to_string()}, {"s", cplx_text(s)}};
                    auto S = make_hecke_setup(K, A, o.cfg, 1);
                    cplx f = std::pow(static_cast<double>(K.abs_discriminant()), s / 2.0) * gamma_F(K, s);
                    r.lhs = completed_partial_zeta_oracle(K, A, s) / f;
                    r.rhs = classical_imaginary_zeta(S, s);
                });
            }));
        }
        tasks.push_back(one([=] {
            auto K = make_quadratic_field(c.d);
            FracIdeal A = c.nonprincipal ? FracIdeal::hnf(K, 2, 1, 1) : FracIdeal::principal(K, K.one());
            return guarded("hif", K.name(), 1e-6, [&](VerificationReport& r) {
                r.parameters = {{"ideal", A.to_string()}, {"s", "2"}};
                auto S = make_hecke_setup(K, A, o.cfg, 1);
                r.lhs = hecke_integral(S, 2.0);
                r.rhs = completed_partial_zeta_oracle(K, A, 2.0);
            });
        }));
    }
    for (std::int64_t d : {2, 5, 3}) {
        tasks.push_back([=] {
            auto K = make_quadratic_field(d);
            FracIdeal A = FracIdeal::principal(K, K.one());
            std::vector<VerificationReport> out;
            out.push_back(guarded("hif", K.name(), 1e-6, [&](VerificationReport& r) {
                auto S = make_hecke_setup(K, A, o.cfg, 1);
                r.parameters = {{"ideal", A.to_string()}, {"s", "2"}, {"wKF", std::to_string(S.w_KF)},
                                {"eps0", format_number(S.eps0)}};
                r.lhs = hecke_integral(S, 2.0);
                r.rhs = completed_dedekind_zeta(K, 2.0);
            }));
            out.push_back(guarded("classical-real-zeta", K.name(), 1e-6, [&](VerificationReport& r) {
                auto S = make_hecke_setup(K, A, o.cfg, 1);
                r.parameters = {{"ideal", A.to_string()}, {"s", "2"}};
                r.lhs = classical_real_zeta(S, 2.0) * static_cast<double>(K.abs_discriminant()) * gamma_F(K, 2.0);
                r.rhs = completed_dedekind_zeta(K, 2.0);
            }));
            if (d == 5) {
                cplx s(1.5, 0.5);
                out.push_back(guarded("hif", K.name(), 1e-6, [&](VerificationReport& r) {
                    auto S = make_hecke_setup(K, A, o.cfg, 1);
                    r.parameters = {{"ideal", A.to_string()}, {"s", cplx_text(s)}};
                    r.lhs = hecke_integral(S, s);
                    r.rhs = completed_dedekind_zeta(K, s);
                }));
            }
            return out;
        });
    }
}

void theta_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
    Draw draw(o.seed ^ 0x5005);
    auto Q = make_rational_field();
    auto Fi = base_field(-1);
    for (int i = 0; i < 20; ++i) {
        const FieldDescriptor& F = (i % 2 == 0) ? Q : Fi;
        OFLattice L = random_lattice(F, draw);
        FReal t = {F.is_rational() ? cplx(draw.uniform(0.4, 2.5)) : std::polar(draw.uniform(0.5, 1.8), draw.uniform(0, 6.28))};
        tasks.push_back([=] {
            std::vector<VerificationReport> out;
            const PointLattice& P = L.z_lattice();
            std::map<std::string, std::string> params = {{"lattice", lattice_text(L)}, {"t", cplx_text(t[0])}};
            out.push_back(guarded("theta", F.name(), 1e-10, [&](VerificationReport& r) {
                r.parameters = params;
                FReal tinv = {1.0 / t[0]};
                double nt = abs_norm(P.place_degrees(), t);
                r.lhs = theta(P, t);
                r.rhs = theta(P.dual(), tinv) / (L.volume() * nt * nt);
            }));
            out.push_back(guarded("theta-volume", F.name(), 1e-10, [&](VerificationReport& r) {
                r.parameters = params;
                r.lhs = L.volume() * P.dual().covolume();
                r.rhs = 1.0;
            }));
            (void)o;
            return out;
        });
    }
}

void special_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
    for (auto d : kBaseFields) {
        auto F = base_field(d);
        for (double s : {0.7, 1.5, 3.2}) {
            tasks.push_back(one([=] {
                return guarded("gamma-f", F.name(), 1e-10, [&](VerificationReport& r) {
                    r.parameters = {{"s", cplx_text(s)}};
                    r.lhs = gamma_F(F, s);
                    r.rhs = gamma_F_quadrature(F, s);
                });
            }));
        }
    }
    for (double x : {0.5, 1.0, 5.0}) {
        tasks.push_back(one([=] {
            return guarded("bessel-half", "Q", 1e-12, [&](VerificationReport& r) {
                r.parameters = {{"x", format_number(x)}};
                r.lhs = bessel_k(0.5, x, o.cfg);
                r.rhs = std::sqrt(kPi / x) * std::exp(-2.0 * x);
            });
        }));
    }
    for (auto [s, x] : {std::pair{cplx(0.7, 0.3), 1.3}, std::pair{cplx(2.5), 0.4}}) {
        tasks.push_back(one([=] {
            return guarded("bessel-symmetry", "Q", 1e-12, [&](VerificationReport& r) {
                r.parameters = {{"s", cplx_text(s)}, {"x", format_number(x)}};
                r.lhs = bessel_k(s, x, o.cfg);
                r.rhs = bessel_k(-s, x, o.cfg);
            });
        }));
    }
    for (double s : {1.0, 1.5}) {
        for (double x : {1.0, 3.0}) {
            tasks.push_back(one([=] {
                return guarded("bessel-recurrence", "Q", 1e-8, [&](VerificationReport& r) {
                    r.parameters = {{"s", cplx_text(s)}, {"x", format_number(x)}};
                    r.lhs = bessel_k(s + 1.0, x, o.cfg) - bessel_k(s - 1.0, x, o.cfg);
                    r.rhs = (s / x) * bessel_k(s, x, o.cfg);
                });
            }));
        }
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"fourier", "fe", "klf", "hecke", "theta", "special"};
    return names;
}

bool is_suite(const std::string& name) {
    if (name == "all") return true;
    for (const auto& n : suite_names())
        if (n == name) return true;
    return false;
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opts) {
    if (!is_suite(name)) throw InvalidInput("unknown suite '" + name + "'");
    opts.cfg.validate();
    std::vector<Task> tasks;
    auto want = [&](const char* n) { return name == "all" || name == n; };
    if (want("fourier")) fourier_tasks(tasks, opts);
    if (want("fe")) fe_tasks(tasks, opts);
    if (want("klf")) klf_tasks(tasks, opts);
    if (want("hecke")) hecke_tasks(tasks, opts);
    if (want("theta")) theta_tasks(tasks, opts);
    if (want("special")) special_tasks(tasks, opts);
    auto groups = parallel_map(tasks, [](const Task& t) { return t(); }, std::max(1u, opts.jobs));
    std::vector<VerificationReport> out;
    for (auto& g : groups)
        for (auto& r : g) out.push_back(std::move(r));
    return out;
}

}  // namespace hecke

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hecke/errors.hpp"
#include "hecke/suites.hpp"

namespace hecke::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

double parse_real(const std::string& text, const std::string& what) {
    if (text.empty()) throw InvalidInput(what + ": empty number");
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(v))
        throw InvalidInput(what + ": cannot read '" + text + "' as a number");
    return v;
}

Rational parse_rational(const std::string& text, const std::string& what) {
    try {
        if (text.empty()) throw std::runtime_error("empty");
        for (char c : text)
            if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+'))
                throw std::runtime_error("bad character");
        return Rational(text);
    } catch (const std::exception&) {
        throw InvalidInput(what + ": cannot read '" + text + "' as a rational number");
    }
}

// Splits "x+y" at the '+' that starts the second number.
std::pair<std::string, std::string> split_plus(const std::string& text) {
    for (std::size_t i = text.size(); i-- > 1;) {
        if (text[i] == '+' && text[i - 1] != 'e' && text[i - 1] != 'E') return {text.substr(0, i), text.substr(i + 1)};
    }
    throw InvalidInput("lattice field 'z': expected x+y or x:y, got '" + text + "'");
}

double default_tolerance(double fallback) {
    const char* env = std::getenv("HECKE_EIS_PRECISION");
    if (!env || !*env) return fallback;
    return parse_real(env, "HECKE_EIS_PRECISION");
}

std::string number(double x) { return format_number(x); }

std::string complex_json(cplx z) { return "{\"re\": " + number(z.real()) + ", \"im\": " + number(z.imag()) + "}"; }

std::string string_json(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

struct EvalArgs {
    std::string field = "Q";
    std::string lattice;
    std::string s;
    double tol = 0.0;
    std::string method = "auto";
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
    FieldDescriptor F = parse_field(a.field, FieldRole::Base);
    if (!F.is_supported_base()) throw InvalidInput("base-field: " + F.name() + " is not a supported base field");
    OFLattice L = parse_lattice(F, a.lattice);
    cplx s = parse_complex(a.s, "s");
    PrecisionConfig cfg;
    cfg.target_abs_tol = a.tol;
    cfg.validate();

    Method m = a.method == "direct" ? Method::Direct : a.method == "expansion" ? Method::Expansion : Method::Auto;
    std::string used = a.method == "direct" ? "direct" : "expansion";
    cplx g = gamma_F(F, 2.0 * s);
    cplx completed, plain;
    try {
        if (m == Method::Direct) {
            plain = eisenstein_direct(L, s, a.tol);
            completed = g * plain;
        } else {
            completed = eisenstein_completed(L, s, m, cfg);
            plain = completed / g;
        }
    } catch (const PoleError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        if (dynamic_cast<const InvalidInput*>(&e) && m != Method::Direct) throw;
        err << "error: " << e.what() << "\n";
        if (m == Method::Direct) err << "hint: the direct sum needs Re(s) > 1.05; try --method expansion\n";
        else err << "hint: try a looser --tol or --method direct for Re(s) > 1\n";
        return 3;
    }
    err << F.name() << "  s = " << a.s << "  method = " << used << "\n"
        << "  completed   = " << number(completed.real()) << " + " << number(completed.imag()) << " i\n"
        << "  uncompleted = " << number(plain.real()) << " + " << number(plain.imag()) << " i\n";
    out << "{\n"
        << "  \"command\": \"eval-eisenstein\",\n"
        << "  \"field\": " << string_json(F.name()) << ",\n"
        << "  \"lattice\": " << string_json(lattice_text(L)) << ",\n"
        << "  \"s\": " << complex_json(s) << ",\n"
        << "  \"method\": " << string_json(used) << ",\n"
        << "  \"tolerance\": " << number(a.tol) << ",\n"
        << "  \"completed\": " << complex_json(completed) << ",\n"
        << "  \"uncompleted\": " << complex_json(plain) << "\n"
        << "}\n";
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 1;
    unsigned jobs = 0;
    std::string out_file;
    double tol = 0.0;
};

int emit_reports(const std::vector<VerificationReport>& rs, const std::string& out_file, std::ostream& out,
                 std::ostream& err) {
    std::string text = to_json(rs) + "\n";
    out << text;
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw InvalidInput("out: cannot write '" + out_file + "'");
        f << text;
    }
    int fails = 0;
    for (const auto& r : rs) {
        if (!r.pass) {
            ++fails;
            err << "FAIL " << r.command << " [" << r.fields << "] |lhs - rhs| = " << number(r.abs_error)
                << " > " << number(r.tolerance) << "\n";
        }
    }
    err << rs.size() - fails << "/" << rs.size() << " reports pass\n";
    return fails == 0 ? 0 : 1;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (!is_suite(a.suite)) {
        err << "error: unknown suite '" << a.suite << "' (expected one of fourier, fe, klf, hecke, theta, special, all)\n";
        return 2;
    }
    SuiteOptions o;
    o.seed = a.seed;
    o.jobs = a.jobs == 0 ? default_jobs() : a.jobs;
    o.cfg.target_abs_tol = a.tol;
    return emit_reports(run_suite(a.suite, o), a.out_file, out, err);
}

struct KlfArgs {
    std::string K;
    std::string ideal = "O";
    double tol = 1e-5;
};

int cmd_limit_formula(const KlfArgs& a, std::ostream& out, std::ostream& err) {
    FieldDescriptor K = parse_field(a.K);
    if (!K.is_real_quadratic()) {
        err << "error: K = " << K.name() << " is not real quadratic; limit-formula needs a real quadratic K\n";
        return 2;
    }
    FracIdeal A = FracIdeal::principal(K, K.one());
    if (a.ideal != "O") {
        auto p = split(a.ideal, ',');
        if (p.size() != 3) throw InvalidInput("ideal: expected O or an HNF triple a,b,c");
        auto big = [&](const std::string& t) {
            Rational q = parse_rational(t, "ideal");
            if (denominator(q) != 1) throw InvalidInput("ideal: HNF entries must be integers");
            return BigInt(numerator(q));
        };
        A = FracIdeal::hnf(K, big(p[0]), big(p[1]), big(p[2]));
    }
    auto S = make_hecke_setup(K, A, {}, default_jobs());
    confirm_unit_data(S);
    return emit_reports(relative_klf_reports(S, a.tol), "", out, err);
}

}  // namespace

QuadElement parse_element(const FieldDescriptor& F, const std::string& text, const std::string& what) {
    auto parts = split(text, ':');
    if (parts.size() == 1) return F.is_rational() ? QuadElement::rational(parse_rational(parts[0], what))
                                                  : F.element(parse_rational(parts[0], what));
    if (parts.size() == 2 && !F.is_rational())
        return F.element(parse_rational(parts[0], what), parse_rational(parts[1], what));
    throw InvalidInput("lattice field '" + what + "': expected p" + std::string(F.is_rational() ? "" : " or p:q") +
                       ", got '" + text + "'");
}

OFLattice parse_lattice(const FieldDescriptor& F, const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 3) throw InvalidInput("lattice: expected \"a,z,b\", got '" + text + "'");
    QuadElement a = parse_element(F, parts[0], "a");
    QuadElement b = parse_element(F, parts[2], "b");
    if (a.is_zero()) throw InvalidInput("lattice field 'a': zero ideal");
    if (b.is_zero()) throw InvalidInput("lattice field 'b': zero ideal");
    auto zc = split(parts[1], ':');
    DNumber z;
    if (F.is_rational()) {
        std::pair<std::string, std::string> xy;
        if (zc.size() == 2) xy = {zc[0], zc[1]};
        else if (zc.size() == 1) xy = split_plus(zc[0]);
        else throw InvalidInput("lattice field 'z': expected x+y or x:y, got '" + parts[1] + "'");
        z = DNumber::from_parts(F, {cplx(parse_real(xy.first, "lattice field 'z'"))},
                                {cplx(parse_real(xy.second, "lattice field 'z'"))});
    } else {
        if (zc.size() != 4) throw InvalidInput("lattice field 'z': expected xr:xi:yr:yi, got '" + parts[1] + "'");
        double c[4];
        for (int i = 0; i < 4; ++i) c[i] = parse_real(zc[i], "lattice field 'z'");
        z = DNumber::from_parts(F, {cplx(c[0], c[1])}, {cplx(c[2], c[3])});
    }
    try {
        return OFLattice(F, a, b, z);
    } catch (const DegenerateLattice& e) {
        throw InvalidInput(std::string("lattice field 'z': ") + e.what());
    }
}

cplx parse_complex(const std::string& text, const std::string& what) {
    auto p = split(text, ',');
    if (p.size() == 1) return {parse_real(p[0], what), 0.0};
    if (p.size() == 2) return {parse_real(p[0], what), parse_real(p[1], what)};
    throw InvalidInput(what + ": expected re or re,im, got '" + text + "'");
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eisenstein series, partial zeta functions and Hecke integrals over number fields"};
    app.require_subcommand(1);

    double tol_default;
    try {
        tol_default = default_tolerance(1e-12);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    EvalArgs ea;
    ea.tol = tol_default;
    auto* eval = app.add_subcommand("eval-eisenstein", "Evaluate the completed and plain Eisenstein series");
    eval->add_option("--base-field", ea.field, "Q or Q(sqrt-N)")->capture_default_str();
    eval->add_option("--lattice", ea.lattice, "a,z,b")->required();
    eval->add_option("--s", ea.s, "re[,im]")->required();
    eval->add_option("--tol", ea.tol, "absolute tolerance")->capture_default_str();
    eval->add_option("--method", ea.method)->check(CLI::IsMember({"direct", "expansion", "auto"}))->capture_default_str();

    VerifyArgs va;
    va.tol = tol_default;
    auto* verify = app.add_subcommand("verify", "Run a verification suite and print JSON reports");
    verify->add_option("--suite", va.suite, "fourier|fe|klf|hecke|theta|special|all")->required();
    verify->add_option("--seed", va.seed)->capture_default_str();
    verify->add_option("--jobs", va.jobs, "0 = hardware concurrency")->capture_default_str();
    verify->add_option("--out", va.out_file, "also write the JSON to this file");

    KlfArgs ka;
    auto* klf = app.add_subcommand("limit-formula", "Relative Kronecker limit formula for a real quadratic K");
    klf->add_option("--K", ka.K, "Q(sqrtN)")->required();
    klf->add_option("--ideal", ka.ideal, "O or an HNF triple a,b,c")->capture_default_str();
    klf->add_option("--tol", ka.tol)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) return cmd_eval(ea, out, err);
        if (*verify) return cmd_verify(va, out, err);
        return cmd_limit_formula(ka, out, err);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Unsupported& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace hecke::cli

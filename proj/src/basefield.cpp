#include "hecke/basefield.hpp"

#include <cmath>
#include <regex>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

bool is_one_mod_four(std::int64_t d) { return ((d % 4) + 4) % 4 == 1; }

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt gcd_big(BigInt x, BigInt y) {
    x = abs_big(x);
    y = abs_big(y);
    while (y != 0) {
        BigInt r = x % y;
        x = y;
        y = r;
    }
    return x;
}

BigInt lcm_big(const BigInt& x, const BigInt& y) {
    if (x == 0 || y == 0) return 0;
    return abs_big(x / gcd_big(x, y) * y);
}

// floor division for BigInt with positive divisor
BigInt floor_div(const BigInt& n, const BigInt& q) {
    BigInt r = n / q;
    if ((n % q != 0) && ((n < 0) != (q < 0))) r -= 1;
    return r;
}

BigInt floor_mod(const BigInt& n, const BigInt& q) { return n - floor_div(n, q) * q; }

}  // namespace

double to_double(const Rational& r) { return r.convert_to<double>(); }

// ---------------------------------------------------------------------------
// QuadElement

QuadElement::QuadElement(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ == 0 && b_ != 0) throw InvalidInput("QuadElement: omega-part on a rational element");
}

QuadElement QuadElement::from_sqrt_form(const Rational& p, const Rational& q, std::int64_t d) {
    if (d == 0) return rational(p);
    if (is_one_mod_four(d)) return {p - q, 2 * q, d};
    return {p, q, d};
}

std::int64_t QuadElement::join(std::int64_t d1, std::int64_t d2) {
    if (d1 == 0) return d2;
    if (d2 == 0 || d1 == d2) return d1;
    throw InvalidInput("QuadElement: elements of different fields");
}

Rational QuadElement::trace_omega() const {
    if (d_ == 0) return 0;
    return is_one_mod_four(d_) ? Rational(1) : Rational(0);
}

Rational QuadElement::norm_omega() const {
    if (d_ == 0) return 0;
    return is_one_mod_four(d_) ? Rational(1 - d_, 4) : Rational(-d_);
}

QuadElement QuadElement::conjugate() const { return {a_ + b_ * trace_omega(), -b_, d_}; }

Rational QuadElement::norm() const { return a_ * a_ + a_ * b_ * trace_omega() + b_ * b_ * norm_omega(); }

Rational QuadElement::trace() const { return 2 * a_ + b_ * trace_omega(); }

std::pair<Rational, Rational> QuadElement::sqrt_form() const {
    if (d_ == 0) return {a_, 0};
    if (is_one_mod_four(d_)) return {a_ + b_ / 2, b_ / 2};
    return {a_, b_};
}

int QuadElement::sign_first_embedding() const {
    if (d_ < 0) throw InvalidInput("sign_first_embedding: imaginary field");
    auto [r, s] = sqrt_form();
    int sr = r > 0 ? 1 : (r < 0 ? -1 : 0);
    int ss = s > 0 ? 1 : (s < 0 ? -1 : 0);
    if (ss == 0) return sr;
    if (sr == 0 || sr == ss) return ss;
    // r and s*sqrt(d) have opposite signs; compare squares
    Rational lhs = r * r, rhs = s * s * d_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sr : ss;
}

std::complex<double> QuadElement::embed() const {
    auto [r, s] = sqrt_form();
    double rd = to_double(r), sd = to_double(s);
    if (d_ > 0) return {rd + sd * std::sqrt(static_cast<double>(d_)), 0.0};
    if (d_ < 0) return {rd, sd * std::sqrt(static_cast<double>(-d_))};
    return {rd, 0.0};
}

std::complex<double> QuadElement::embed_conjugate() const { return conjugate().embed(); }

QuadElement QuadElement::inverse() const {
    Rational n = norm();
    if (n == 0) throw InvalidInput("QuadElement: inverse of zero");
    QuadElement c = conjugate();
    return {c.a_ / n, c.b_ / n, d_};
}

QuadElement operator+(const QuadElement& x, const QuadElement& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, QuadElement::join(x.d_, y.d_)};
}

QuadElement operator-(const QuadElement& x, const QuadElement& y) {
    return {x.a_ - y.a_, x.b_ - y.b_, QuadElement::join(x.d_, y.d_)};
}

QuadElement operator-(const QuadElement& x) { return {-x.a_, -x.b_, x.d_}; }

QuadElement operator*(const QuadElement& x, const QuadElement& y) {
    std::int64_t d = QuadElement::join(x.d_, y.d_);
    QuadElement probe(0, 0, d);
    Rational t = probe.trace_omega(), n = probe.norm_omega();
    Rational bb = x.b_ * y.b_;
    return {x.a_ * y.a_ - n * bb, x.a_ * y.b_ + x.b_ * y.a_ + t * bb, d};
}

QuadElement operator/(const QuadElement& x, const QuadElement& y) { return x * y.inverse(); }

bool operator==(const QuadElement& x, const QuadElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
}

std::string QuadElement::to_string() const {
    std::ostringstream os;
    os << a_;
    if (b_ != 0) os << (b_ > 0 ? "+" : "-") << (b_ > 0 ? b_ : Rational(-b_)) << "w";
    return os.str();
}

// ---------------------------------------------------------------------------
// Fields

bool is_squarefree(std::int64_t n) {
    if (n == 0) return false;
    std::int64_t m = n < 0 ? -n : n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) return false;
    }
    return true;
}

bool FieldDescriptor::is_supported_base() const {
    if (kind == Kind::Rational) return true;
    switch (discriminant) {
        case -3:
        case -4:
        case -7:
        case -8:
        case -11:
            return true;
        default:
            return false;
    }
}

std::string FieldDescriptor::name() const {
    if (kind == Kind::Rational) return "Q";
    return "Q(sqrt" + std::to_string(d) + ")";
}

FieldDescriptor make_rational_field() {
    FieldDescriptor F;
    F.kind = FieldDescriptor::Kind::Rational;
    F.d = 0;
    F.discriminant = 1;
    F.r1 = 1;
    F.r2 = 0;
    F.w = 2;
    F.regulator = 1.0;
    F.different_generator = QuadElement::rational(1);
    return F;
}

QuadElement fundamental_unit(std::int64_t d) {
    if (d <= 1 || !is_squarefree(d)) throw InvalidInput("fundamental_unit: need squarefree d > 1");
    // omega = (P + sqrt D)/Q
    BigInt D = d;
    BigInt P = is_one_mod_four(d) ? 1 : 0;
    BigInt Q = is_one_mod_four(d) ? 2 : 1;
    BigInt sqrtD = boost::multiprecision::sqrt(D);
    BigInt p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
    for (int k = 0; k < 100000; ++k) {
        if (Q <= 0) throw ConvergenceError("fundamental_unit: continued fraction left reduced form");
        BigInt a = floor_div(P + sqrtD, Q);
        BigInt p = a * p_prev + p_prev2;
        BigInt q = a * q_prev + q_prev2;
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
        QuadElement eta(Rational(p), Rational(-q), d);  // p - q*omega, tiny in the first embedding
        Rational n = eta.norm();
        if (n == 1 || n == -1) {
            QuadElement eps = eta.conjugate();
            if (n == -1) eps = -eps;  // eta^{-1} = eta' / N(eta)
            if (eps.sign_first_embedding() < 0) eps = -eps;
            return eps;
        }
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw ConvergenceError("fundamental_unit: period not found");
}

std::vector<QuadElement> roots_of_unity(std::int64_t d) {
    if (d >= 0) return {QuadElement::rational(1, d), QuadElement::rational(-1, d)};
    std::vector<QuadElement> out;
    for (int b = -2; b <= 2; ++b) {
        for (int a = -2; a <= 2; ++a) {
            QuadElement u(a, b, d);
            if (u.norm() == 1) out.push_back(u);
        }
    }
    return out;
}

FieldDescriptor make_quadratic_field(std::int64_t d, FieldRole role) {
    if (d == 0 || d == 1) throw InvalidInput("make_field: d must be nonzero and != 1");
    if (!is_squarefree(d)) throw InvalidInput("make_field: d = " + std::to_string(d) + " is not squarefree");
    FieldDescriptor F;
    F.kind = FieldDescriptor::Kind::Quadratic;
    F.d = d;
    F.discriminant = is_one_mod_four(d) ? d : 4 * d;
    if (d > 0) {
        F.r1 = 2;
        F.r2 = 0;
        F.w = 2;
        F.fundamental_unit = fundamental_unit(d);
        F.regulator = std::log(F.fundamental_unit->embed().real());
    } else {
        F.r1 = 0;
        F.r2 = 1;
        F.w = static_cast<int>(roots_of_unity(d).size());
        F.regulator = 1.0;
    }
    // sqrt(discriminant) generates the different
    F.different_generator = is_one_mod_four(d) ? QuadElement(-1, 2, d) : QuadElement(0, 2, d);
    if (role == FieldRole::Base && !F.is_supported_base()) {
        throw Unsupported("field " + F.name() + " is not a supported base field");
    }
    return F;
}

FieldDescriptor parse_field(const std::string& text, FieldRole role) {
    static const std::regex rational_re(R"(\s*Q\s*)");
    static const std::regex quad_re(R"(\s*Q\s*\(\s*sqrt\s*[\{\(]?\s*(-?\d+)\s*[\}\)]?\s*\)\s*)");
    std::smatch m;
    if (std::regex_match(text, rational_re)) return make_rational_field();
    if (std::regex_match(text, m, quad_re)) {
        std::int64_t d = std::stoll(m[1].str());
        return make_quadratic_field(d, role);
    }
    throw InvalidInput("cannot parse field string '" + text + "'");
}

// ---------------------------------------------------------------------------
// Ideals

namespace {

struct IntVec {
    BigInt x, y;
};

}  // namespace

FracIdeal FracIdeal::principal(const FieldDescriptor& F, const QuadElement& g) {
    if (g.is_zero()) throw InvalidInput("FracIdeal: zero generator");
    if (F.is_rational()) {
        if (!g.is_rational()) throw InvalidInput("FracIdeal: generator not in Q");
        FracIdeal I;
        I.rational_ = true;
        I.d_ = 0;
        I.generator_ = QuadElement::rational(g.a() < 0 ? Rational(-g.a()) : g.a());
        I.scale_ = I.generator_->a();
        return I;
    }
    QuadElement gg(g.a(), g.b(), F.d);
    FracIdeal I = from_generators(F, {gg});
    I.generator_ = gg;
    return I;
}

FracIdeal FracIdeal::hnf(const FieldDescriptor& K, BigInt a, BigInt b, BigInt c, Rational scale) {
    if (K.is_rational()) throw InvalidInput("FracIdeal::hnf: needs a quadratic field");
    if (a <= 0 || c <= 0) throw InvalidInput("FracIdeal::hnf: need a > 0 and c > 0");
    if (b < 0 || b >= a) throw InvalidInput("FracIdeal::hnf: need 0 <= b < a");
    if (a % c != 0 || b % c != 0) throw InvalidInput("FracIdeal::hnf: c must divide a and b");
    QuadElement beta(Rational(b), Rational(c), K.d);
    Rational n = beta.norm();
    BigInt num = numerator(n);
    if (denominator(n) != 1 || num % (a * c) != 0) {
        throw InvalidInput("FracIdeal::hnf: [a, b + c w] is not an O_K-ideal (a*c does not divide the norm)");
    }
    if (scale == 0) throw InvalidInput("FracIdeal::hnf: zero scale");
    FracIdeal I;
    I.d_ = K.d;
    I.rational_ = false;
    BigInt g = gcd_big(gcd_big(a, b), c);
    I.a_ = a / g;
    I.b_ = b / g;
    I.c_ = c / g;
    I.scale_ = (scale < 0 ? Rational(-scale) : scale) * Rational(g);
    return I;
}

FracIdeal FracIdeal::from_generators(const FieldDescriptor& K, const std::vector<QuadElement>& gens) {
    if (K.is_rational()) throw InvalidInput("from_generators: needs a quadratic field");
    std::vector<QuadElement> all;
    QuadElement w = K.omega();
    for (const auto& g : gens) {
        QuadElement gg(g.a(), g.b(), K.d);
        all.push_back(gg);
        all.push_back(gg * w);
    }
    BigInt L = 1;
    for (const auto& g : all) {
        L = lcm_big(L, denominator(g.a()));
        L = lcm_big(L, denominator(g.b()));
    }
    std::vector<IntVec> v;
    for (const auto& g : all) {
        Rational xa = g.a() * L, xb = g.b() * L;
        v.push_back({numerator(xa), numerator(xb)});
    }
    // Euclid on the omega coordinate
    while (true) {
        int piv = -1;
        for (int i = 0; i < static_cast<int>(v.size()); ++i) {
            if (v[i].y != 0 && (piv < 0 || abs_big(v[i].y) < abs_big(v[piv].y))) piv = i;
        }
        if (piv < 0) throw InvalidInput("from_generators: generators do not span rank 2");
        bool done = true;
        for (int i = 0; i < static_cast<int>(v.size()); ++i) {
            if (i == piv || v[i].y == 0) continue;
            BigInt q = v[i].y / v[piv].y;
            v[i].x -= q * v[piv].x;
            v[i].y -= q * v[piv].y;
            if (v[i].y != 0) done = false;
        }
        if (done) {
            IntVec p = v[piv];
            if (p.y < 0) {
                p.x = -p.x;
                p.y = -p.y;
            }
            BigInt A = 0;
            for (int i = 0; i < static_cast<int>(v.size()); ++i) {
                if (i != piv) A = gcd_big(A, v[i].x);
            }
            if (A == 0) throw InvalidInput("from_generators: generators do not span rank 2");
            BigInt B = floor_mod(p.x, A);
            return hnf(K, A, B, p.y, Rational(1) / Rational(L));
        }
    }
}

std::vector<QuadElement> FracIdeal::z_basis() const {
    if (rational_) return {QuadElement::rational(scale_)};
    return {QuadElement(scale_ * Rational(a_), 0, d_), QuadElement(scale_ * Rational(b_), scale_ * Rational(c_), d_)};
}

Rational FracIdeal::norm() const {
    if (rational_) return scale_;
    return scale_ * scale_ * Rational(a_ * c_);
}

FracIdeal FracIdeal::conjugate(const FieldDescriptor& K) const {
    if (rational_) return *this;
    std::vector<QuadElement> g;
    for (const auto& e : z_basis()) g.push_back(e.conjugate());
    FracIdeal I = from_generators(K, g);
    if (generator_) I.generator_ = generator_->conjugate();
    return I;
}

FracIdeal FracIdeal::inverse(const FieldDescriptor& K) const {
    if (rational_) return principal(K, QuadElement::rational(1 / scale_));
    FracIdeal I = conjugate(K);
    I.scale_ /= norm();
    if (generator_) I.generator_ = generator_->inverse();
    return I;
}

FracIdeal multiply(const FieldDescriptor& K, const FracIdeal& x, const FracIdeal& y) {
    if (x.rational_ && y.rational_) return FracIdeal::principal(K, QuadElement::rational(x.scale_ * y.scale_));
    std::vector<QuadElement> g;
    for (const auto& p : x.z_basis())
        for (const auto& q : y.z_basis()) g.push_back(p * q);
    FracIdeal I = FracIdeal::from_generators(K, g);
    if (x.generator_ && y.generator_) I.generator_ = *x.generator_ * *y.generator_;
    return I;
}

bool operator==(const FracIdeal& x, const FracIdeal& y) {
    return x.rational_ == y.rational_ && x.scale_ == y.scale_ && x.a_ == y.a_ && x.b_ == y.b_ &&
           x.c_ == y.c_;
}

std::string FracIdeal::to_string() const {
    std::ostringstream os;
    if (rational_) {
        os << scale_ << "Z";
    } else {
        os << scale_ << "*[" << a_ << ", " << b_ << "+" << c_ << "w]";
    }
    return os.str();
}

FracIdeal dual_ideal(const FieldDescriptor& F, const FracIdeal& a) {
    if (F.is_rational()) return FracIdeal::principal(F, QuadElement::rational(1 / a.scale()));
    if (a.generator()) {
        QuadElement g = (*a.generator() * F.different_generator).inverse();
        return FracIdeal::principal(F, g);
    }
    FracIdeal ad = multiply(F, a, FracIdeal::principal(F, F.different_generator));
    return ad.inverse(F);
}

bool unit_fundamental_domain_test(const FieldDescriptor& F, const QuadElement& alpha) {
    if (!F.is_real_quadratic() || !F.fundamental_unit) {
        throw InvalidInput("unit_fundamental_domain_test: needs a real quadratic field");
    }
    if (alpha.is_zero()) throw InvalidInput("unit_fundamental_domain_test: alpha = 0");
    QuadElement al(alpha.a(), alpha.b(), F.d);
    if (al.sign_first_embedding() <= 0) return false;
    QuadElement sq = al * al;
    QuadElement sqc = sq.conjugate();
    if ((sq - sqc).sign_first_embedding() < 0) return false;  // |alpha| >= |alpha'|
    QuadElement e2 = *F.fundamental_unit * *F.fundamental_unit;
    QuadElement e4 = e2 * e2;
    return (e4 * sqc - sq).sign_first_embedding() > 0;  // alpha^2 < eps^4 alpha'^2
}

}  // namespace hecke

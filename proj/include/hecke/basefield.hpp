#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

/// a + b*omega in Q(sqrt d), omega = (1+sqrt d)/2 for d = 1 mod 4, sqrt d otherwise.
/// d == 0 marks an element of Q itself (b must be 0).
class QuadElement {
public:
    QuadElement() = default;
    QuadElement(Rational a, Rational b, std::int64_t d);
    static QuadElement rational(Rational a, std::int64_t d = 0) { return {std::move(a), 0, d}; }
    /// (p + q sqrt d) / r written in the omega basis.
    static QuadElement from_sqrt_form(const Rational& p, const Rational& q, std::int64_t d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    std::int64_t d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadElement conjugate() const;
    Rational norm() const;
    Rational trace() const;
    /// r + s*sqrt(d) coordinates.
    std::pair<Rational, Rational> sqrt_form() const;
    /// Exact sign of the first (real) embedding; requires d >= 0.
    int sign_first_embedding() const;

    /// First embedding: sqrt d -> +sqrt d (d > 0) or +i sqrt|d| (d < 0).
    std::complex<double> embed() const;
    /// Second embedding (the conjugate).
    std::complex<double> embed_conjugate() const;

    QuadElement inverse() const;

    friend QuadElement operator+(const QuadElement& x, const QuadElement& y);
    friend QuadElement operator-(const QuadElement& x, const QuadElement& y);
    friend QuadElement operator*(const QuadElement& x, const QuadElement& y);
    friend QuadElement operator/(const QuadElement& x, const QuadElement& y);
    friend QuadElement operator-(const QuadElement& x);
    friend bool operator==(const QuadElement& x, const QuadElement& y);

    std::string to_string() const;

private:
    static std::int64_t join(std::int64_t d1, std::int64_t d2);
    Rational trace_omega() const;
    Rational norm_omega() const;

    Rational a_{0};
    Rational b_{0};
    std::int64_t d_{0};
};

/// A supported base field (Q or imaginary quadratic with |d_F| in {3,4,7,8,11})
/// or a quadratic extension field K of Q.
struct FieldDescriptor {
    enum class Kind { Rational, Quadratic };

    Kind kind = Kind::Rational;
    std::int64_t d = 0;             ///< squarefree d for Quadratic, 0 for Q
    std::int64_t discriminant = 1;  ///< signed fundamental discriminant
    int r1 = 1;
    int r2 = 0;
    int w = 2;
    double regulator = 1.0;
    std::optional<QuadElement> fundamental_unit;
    QuadElement different_generator;

    int degree() const { return r1 + 2 * r2; }
    bool is_rational() const { return kind == Kind::Rational; }
    bool is_real_quadratic() const { return kind == Kind::Quadratic && d > 0; }
    bool is_imaginary_quadratic() const { return kind == Kind::Quadratic && d < 0; }
    /// |d_F|.
    std::int64_t abs_discriminant() const { return discriminant < 0 ? -discriminant : discriminant; }
    /// True for Q and the five norm-Euclidean imaginary quadratic fields.
    bool is_supported_base() const;
    /// omega as an element of this field (undefined for Q).
    QuadElement omega() const { return QuadElement(0, 1, d); }
    QuadElement one() const { return QuadElement::rational(1, d); }
    QuadElement element(const Rational& a, const Rational& b = 0) const { return {a, b, d}; }

    std::string name() const;
};

enum class FieldRole { Base, Extension };

FieldDescriptor make_rational_field();
FieldDescriptor make_quadratic_field(std::int64_t d, FieldRole role = FieldRole::Extension);
/// Accepts "Q", "Q(sqrt5)", "Q(sqrt-1)", "Q(sqrt{5})", "Q(sqrt{-3})".
FieldDescriptor parse_field(const std::string& text, FieldRole role = FieldRole::Extension);

bool is_squarefree(std::int64_t n);

/// Fundamental unit of a real quadratic field via the continued fraction of omega,
/// normalised to be > 1 in the first embedding.
QuadElement fundamental_unit(std::int64_t d);
/// Roots of unity of O_K, found by enumerating norm-one elements (imaginary K).
std::vector<QuadElement> roots_of_unity(std::int64_t d);

/// Fractional ideal. Base-field ideals are principal and carry their generator.
/// Ideals of an extension field carry a scaled HNF basis scale * [a, b + c*omega].
class FracIdeal {
public:
    static FracIdeal principal(const FieldDescriptor& F, const QuadElement& g);
    static FracIdeal hnf(const FieldDescriptor& K, BigInt a, BigInt b, BigInt c, Rational scale = 1);
    /// Z-module generated by arbitrary elements of a quadratic field, put in HNF.
    static FracIdeal from_generators(const FieldDescriptor& K, const std::vector<QuadElement>& gens);

    const std::optional<QuadElement>& generator() const { return generator_; }
    /// Z-basis: one element for Q, two for a quadratic field.
    std::vector<QuadElement> z_basis() const;
    Rational norm() const;
    std::int64_t d() const { return d_; }
    bool is_rational_field() const { return rational_; }

    const BigInt& hnf_a() const { return a_; }
    const BigInt& hnf_b() const { return b_; }
    const BigInt& hnf_c() const { return c_; }
    const Rational& scale() const { return scale_; }

    FracIdeal conjugate(const FieldDescriptor& K) const;
    FracIdeal inverse(const FieldDescriptor& K) const;
    friend FracIdeal multiply(const FieldDescriptor& K, const FracIdeal& x, const FracIdeal& y);
    friend bool operator==(const FracIdeal& x, const FracIdeal& y);

    std::string to_string() const;

private:
    std::optional<QuadElement> generator_;
    bool rational_ = false;
    std::int64_t d_ = 0;
    Rational scale_{1};
    BigInt a_{1}, b_{0}, c_{1};
};

/// Dual ideal (a * different)^{-1}: the pairing exp(2 pi i Tr(xy)) is trivial on a x dual.
FracIdeal dual_ideal(const FieldDescriptor& F, const FracIdeal& a);

/// Real quadratic F: alpha > 0 in the first embedding and 1 <= |alpha/alpha'| < eps^2.
bool unit_fundamental_domain_test(const FieldDescriptor& F, const QuadElement& alpha);

}  // namespace hecke

#ifndef SYMCRIT_CYCLOTOMIC_HPP
#define SYMCRIT_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "symcrit/bigrational.hpp"

namespace symcrit {

/// Dense integer polynomial, lowest degree first.
using IntPoly = std::vector<long>;

int euler_phi(int n);

/// The n-th cyclotomic polynomial, obtained by exact division of x^n - 1 by
/// the cyclotomic polynomials of all proper divisors of n.
IntPoly cyclotomic_polynomial(int n);

namespace detail {
struct CycloContext;
const CycloContext& cyclo_context(int n);
}  // namespace detail

/// An element of the cyclotomic field Q(zeta_N).
///
/// Stored as a polynomial in zeta_N of degree < phi(N), reduced modulo the
/// N-th cyclotomic polynomial. Coefficients are kept over a single common
/// denominator; the public coefficient view is a sequence of BigRational.
/// The representation is canonical for a fixed conductor, so equality at a
/// common conductor is structural. Mixed-conductor arithmetic lifts both
/// operands to lcm(N1, N2); conductors are never shrunk automatically.
class CycNum {
public:
    CycNum();
    CycNum(long v);  // NOLINT: implicit from integer literals is intended
    CycNum(const BigRational& q);  // NOLINT

    static CycNum zero(int conductor);
    static CycNum root_of_unity(int n, long k);
    /// Interprets `coeffs` as a polynomial in zeta_n of any length and reduces it.
    static CycNum from_coeffs(int n, std::span<const BigRational> coeffs);

    int conductor() const;
    int degree() const;  ///< phi(conductor)
    std::vector<BigRational> coeffs() const;
    BigRational coeff(int i) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    BigRational rational_value() const;

    /// Same element expressed at conductor m; m must be a multiple of conductor().
    CycNum lift(int m) const;
    /// Same element at the smallest conductor dividing conductor() that contains it.
    CycNum try_descend() const;

    CycNum conj() const;
    CycNum galois(long k) const;
    CycNum inverse() const;
    CycNum pow(long e) const;

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
    CycNum operator-() const;

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Human-readable form in the `z<N>^<k>` grammar accepted by parse_cyc.
    std::string str() const;
    std::complex<double> to_complex() const;
    /// Consistent with equality only among values of equal conductor.
    std::size_t hash() const;

private:
    void normalize();
    bool same_field(const CycNum& o) const { return ctx_ == o.ctx_; }
    void lift_in_place(const detail::CycloContext& target);
    void match_conductor(CycNum& other);

    const detail::CycloContext* ctx_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& a);

inline CycNum root_of_unity(int n, long k) { return CycNum::root_of_unity(n, k); }
inline CycNum conj(const CycNum& a) { return a.conj(); }
inline CycNum galois_map(const CycNum& a, long k) { return a.galois(k); }
inline bool is_zero(const CycNum& a) { return a.is_zero(); }

enum class CycOp { add, sub, mul, div };
CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op);

/// sqrt(2) = zeta_8 + zeta_8^-1.
CycNum sqrt2();
/// sqrt(5) as the quadratic Gauss sum zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4.
CycNum sqrt5();

}  // namespace symcrit

namespace Eigen {

template <>
struct NumTraits<symcrit::CycNum> : GenericNumTraits<symcrit::CycNum> {
    using Real = symcrit::CycNum;
    using NonInteger = symcrit::CycNum;
    using Nested = symcrit::CycNum;
    using Literal = symcrit::CycNum;

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 16,
        MulCost = 64
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // SYMCRIT_CYCLOTOMIC_HPP

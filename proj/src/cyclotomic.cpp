#include "symcrit/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "symcrit/errors.hpp"

namespace symcrit {

int euler_phi(int n) {
    if (n < 1) throw Error("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division by a monic divisor; throws if the remainder is non-zero.
IntPoly poly_exact_div(IntPoly num, const IntPoly& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw Error("cyclotomic_polynomial: bad division");
    IntPoly q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        const long c = num[k];
        q[k - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    }
    for (std::size_t j = 0; j < dn; ++j)
        if (num[j] != 0) throw Error("cyclotomic_polynomial: non-exact division");
    return q;
}

}  // namespace

IntPoly cyclotomic_polynomial(int n) {
    if (n < 1) throw Error("cyclotomic_polynomial: n must be positive");
    IntPoly xn1(static_cast<std::size_t>(n) + 1, 0);
    xn1[0] = -1;
    xn1[n] = 1;
    IntPoly divisor{1};
    for (int d = 1; d < n; ++d)
        if (n % d == 0) divisor = poly_mul(divisor, cyclotomic_polynomial(d));
    return poly_exact_div(std::move(xn1), divisor);
}

namespace detail {

struct CycloContext {
    int n = 1;
    int phi = 1;
    IntPoly modulus;
    // xpow[j] = x^j mod Phi_n for 0 <= j < n, each of length phi.
    std::vector<std::vector<long>> xpow;
};

namespace {

std::unique_ptr<CycloContext> build_context(int n) {
    auto ctx = std::make_unique<CycloContext>();
    ctx->n = n;
    ctx->modulus = cyclotomic_polynomial(n);
    ctx->phi = static_cast<int>(ctx->modulus.size()) - 1;
    const int phi = ctx->phi;
    ctx->xpow.assign(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(phi), 0));
    std::vector<long> cur(static_cast<std::size_t>(phi), 0);
    cur[0] = 1;
    for (int j = 0; j < n; ++j) {
        ctx->xpow[j] = cur;
        // cur *= x, then reduce the degree-phi term with the monic modulus.
        const long top = cur[phi - 1];
        for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < phi; ++i) cur[i] -= top * ctx->modulus[i];
    }
    if (n == 1) ctx->xpow.assign(1, std::vector<long>{1});
    return ctx;
}

}  // namespace

const CycloContext& cyclo_context(int n) {
    if (n < 1) throw PreconditionFailed("conductor must be positive");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloContext>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_context(n)).first;
    return *it->second;
}

}  // namespace detail

using detail::CycloContext;

namespace {

inline void addmul_long(mpz_class& acc, const mpz_class& a, long c) {
    if (c > 0)
        mpz_addmul_ui(acc.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(c));
    else if (c < 0)
        mpz_submul_ui(acc.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(-c));
}

// Adds c * x^j (reduced) into acc.
inline void add_monomial(std::vector<mpz_class>& acc, const CycloContext& ctx, const mpz_class& c, long j) {
    if (sgn(c) == 0) return;
    const auto& row = ctx.xpow[static_cast<std::size_t>(j % ctx.n)];
    for (int i = 0; i < ctx.phi; ++i) addmul_long(acc[i], c, row[i]);
}

}  // namespace

CycNum::CycNum() : ctx_(&detail::cyclo_context(1)), num_(1), den_(1) {}

CycNum::CycNum(long v) : ctx_(&detail::cyclo_context(1)), num_{mpz_class(v)}, den_(1) {}

CycNum::CycNum(const BigRational& q)
    : ctx_(&detail::cyclo_context(1)), num_{q.numerator()}, den_(q.denominator()) {}

CycNum CycNum::zero(int conductor) {
    CycNum r;
    r.ctx_ = &detail::cyclo_context(conductor);
    r.num_.assign(static_cast<std::size_t>(r.ctx_->phi), mpz_class(0));
    return r;
}

CycNum CycNum::root_of_unity(int n, long k) {
    CycNum r = zero(n);
    const long e = ((k % n) + n) % n;
    add_monomial(r.num_, *r.ctx_, mpz_class(1), e);
    return r;
}

CycNum CycNum::from_coeffs(int n, std::span<const BigRational> coeffs) {
    CycNum r = zero(n);
    mpz_class den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        const mpz_class scaled = coeffs[j].numerator() * (den / coeffs[j].denominator());
        add_monomial(r.num_, *r.ctx_, scaled, static_cast<long>(j));
    }
    r.den_ = den;
    r.normalize();
    return r;
}

int CycNum::conductor() const { return ctx_->n; }
int CycNum::degree() const { return ctx_->phi; }

std::vector<BigRational> CycNum::coeffs() const {
    std::vector<BigRational> out;
    out.reserve(num_.size());
    for (const auto& c : num_) out.emplace_back(c, den_);
    return out;
}

BigRational CycNum::coeff(int i) const {
    if (i < 0 || i >= ctx_->phi) return BigRational(0);
    return BigRational(num_[static_cast<std::size_t>(i)], den_);
}

bool CycNum::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

bool CycNum::is_rational() const {
    return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

bool CycNum::is_one() const { return is_rational() && num_[0] == den_; }

BigRational CycNum::rational_value() const {
    if (!is_rational()) throw Error("cyclotomic value is not rational: " + str());
    return BigRational(num_[0], den_);
}

void CycNum::normalize() {
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (sgn(c) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (is_zero()) {
        den_ = 1;
        return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void CycNum::lift_in_place(const CycloContext& target) {
    if (&target == ctx_) return;
    if (target.n % ctx_->n != 0) throw Error("lift: target conductor is not a multiple");
    const long step = target.n / ctx_->n;
    std::vector<mpz_class> out(static_cast<std::size_t>(target.phi), mpz_class(0));
    if (is_rational()) {
        out[0] = num_[0];
    } else {
        for (std::size_t j = 0; j < num_.size(); ++j)
            add_monomial(out, target, num_[j], static_cast<long>(j) * step);
    }
    num_ = std::move(out);
    ctx_ = &target;
}

CycNum CycNum::lift(int m) const {
    CycNum r = *this;
    r.lift_in_place(detail::cyclo_context(m));
    return r;
}

void CycNum::match_conductor(CycNum& other) {
    if (same_field(other)) return;
    const int m = std::lcm(ctx_->n, other.ctx_->n);
    const auto& target = detail::cyclo_context(m);
    lift_in_place(target);
    other.lift_in_place(target);
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (!same_field(o)) {
        CycNum rhs = o;
        match_conductor(rhs);
        return *this += rhs;
    }
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) {
            num_[i] *= o.den_;
            mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
        }
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (!a.same_field(b)) {
        // A rational operand needs no lifting.
        if (a.ctx_->n == 1 || b.ctx_->n == 1) {
            const CycNum& scalar = a.ctx_->n == 1 ? a : b;
            const CycNum& other = a.ctx_->n == 1 ? b : a;
            CycNum r = other;
            for (auto& c : r.num_) c *= scalar.num_[0];
            r.den_ *= scalar.den_;
            r.normalize();
            return r;
        }
        CycNum lhs = a;
        CycNum rhs = b;
        lhs.match_conductor(rhs);
        return lhs * rhs;
    }
    const CycloContext& ctx = *a.ctx_;
    const int phi = ctx.phi;
    CycNum r = CycNum::zero(ctx.n);
    if (a.is_zero() || b.is_zero()) return r;
    r.den_ = a.den_ * b.den_;
    if (phi == 1) {
        r.num_[0] = a.num_[0] * b.num_[0];
        r.normalize();
        return r;
    }
    std::vector<mpz_class> prod(static_cast<std::size_t>(2 * phi - 1), mpz_class(0));
    for (int i = 0; i < phi; ++i) {
        if (sgn(a.num_[i]) == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (sgn(b.num_[j]) == 0) continue;
            mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
        }
    }
    for (int i = 0; i < phi; ++i) r.num_[i].swap(prod[i]);
    for (int j = phi; j < 2 * phi - 1; ++j) add_monomial(r.num_, ctx, prod[j], j);
    r.normalize();
    return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) {
    *this = *this * o.inverse();
    return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.same_field(b)) return a.den_ == b.den_ && a.num_ == b.num_;
    if (a.is_rational() && b.is_rational()) return a.num_[0] == b.num_[0] && a.den_ == b.den_;
    CycNum lhs = a;
    CycNum rhs = b;
    lhs.match_conductor(rhs);
    return lhs == rhs;
}

CycNum CycNum::galois(long k) const {
    const long n = ctx_->n;
    const long kk = ((k % n) + n) % n;
    if (std::gcd(kk, n) != 1) throw PreconditionFailed("galois_map: exponent not coprime to conductor");
    if (is_rational()) return *this;
    CycNum r = zero(ctx_->n);
    for (std::size_t j = 0; j < num_.size(); ++j) add_monomial(r.num_, *ctx_, num_[j], static_cast<long>(j) * kk);
    r.den_ = den_;
    r.normalize();
    return r;
}

CycNum CycNum::conj() const { return galois(ctx_->n - 1); }

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// p = q*d + r over Q.
void divmod(const QPoly& p, const QPoly& d, QPoly& q, QPoly& r) {
    r = p;
    trim(r);
    q.assign(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, mpq_class(0));
    const mpq_class lead = d.back();
    while (r.size() >= d.size()) {
        const std::size_t shift = r.size() - d.size();
        const mpq_class c = r.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
        r.pop_back();
        trim(r);
    }
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    // a - q*b
    QPoly out = a;
    if (!q.empty() && !b.empty()) {
        if (out.size() < q.size() + b.size() - 1) out.resize(q.size() + b.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    trim(out);
    return out;
}

}  // namespace

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) {
        CycNum r = *this;
        std::swap(r.num_[0], r.den_);
        r.normalize();
        return r;
    }
    // Extended Euclid: find s with s*a = 1 mod Phi_n.
    QPoly a(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) a[i] = mpq_class(num_[i], den_);
    for (auto& c : a) c.canonicalize();
    trim(a);
    QPoly m(ctx_->modulus.begin(), ctx_->modulus.end());
    QPoly r0 = m, r1 = a;
    QPoly s0, s1{mpq_class(1)};
    while (!(r1.size() == 1)) {
        if (r1.empty()) throw Error("inverse: element not invertible modulo cyclotomic polynomial");
        QPoly q, rem;
        divmod(r0, r1, q, rem);
        QPoly s2 = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a non-zero constant c with s1*a = c (mod Phi).
    const mpq_class c = r1[0];
    std::vector<BigRational> coeffs;
    coeffs.reserve(s1.size());
    for (const auto& x : s1) coeffs.emplace_back(mpq_class(x / c));
    return from_coeffs(ctx_->n, coeffs);
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum result = CycNum(1);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

CycNum CycNum::try_descend() const {
    const int n = ctx_->n;
    if (n == 1) return *this;
    if (is_rational()) return CycNum(rational_value());
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& small = detail::cyclo_context(d);
        // Solve sum_j c_j * lift(zeta_d^j) = *this over Q.
        const int rows = ctx_->phi;
        const int cols = small.phi;
        std::vector<std::vector<mpq_class>> aug(static_cast<std::size_t>(rows),
                                                std::vector<mpq_class>(static_cast<std::size_t>(cols) + 1));
        for (int j = 0; j < cols; ++j) {
            const CycNum basis = root_of_unity(d, j).lift(n);
            for (int i = 0; i < rows; ++i) aug[i][j] = mpq_class(basis.num_[i], basis.den_);
        }
        for (int i = 0; i < rows; ++i) {
            aug[i][cols] = mpq_class(num_[i], den_);
            aug[i][cols].canonicalize();
        }
        int rank = 0;
        std::vector<int> pivot_col;
        for (int c = 0; c < cols && rank < rows; ++c) {
            int p = rank;
            while (p < rows && sgn(aug[p][c]) == 0) ++p;
            if (p == rows) continue;
            std::swap(aug[p], aug[rank]);
            const mpq_class inv = 1 / aug[rank][c];
            for (auto& x : aug[rank]) x *= inv;
            for (int i = 0; i < rows; ++i) {
                if (i == rank || sgn(aug[i][c]) == 0) continue;
                const mpq_class f = aug[i][c];
                for (int k = c; k <= cols; ++k) aug[i][k] -= f * aug[rank][k];
            }
            pivot_col.push_back(c);
            ++rank;
        }
        bool consistent = true;
        for (int i = rank; i < rows; ++i)
            if (sgn(aug[i][cols]) != 0) consistent = false;
        if (!consistent) continue;
        std::vector<BigRational> coeffs(static_cast<std::size_t>(cols), BigRational(0));
        for (int i = 0; i < rank; ++i) coeffs[pivot_col[i]] = BigRational(aug[i][cols]);
        return from_coeffs(d, coeffs);
    }
    return *this;
}

std::string CycNum::str() const {
    const CycNum m = try_descend();
    std::ostringstream os;
    bool first = true;
    const auto cs = m.coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
        BigRational c = cs[j];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (j == 0) {
            os << c.str();
            continue;
        }
        if (!(c == BigRational(1))) os << c.str() << "*";
        os << "z" << m.conductor();
        if (j != 1) os << "^" << j;
    }
    if (first) os << "0";
    return os.str();
}

std::complex<double> CycNum::to_complex() const {
    std::complex<double> acc = 0;
    const double theta = 2.0 * std::numbers::pi / ctx_->n;
    for (std::size_t j = 0; j < num_.size(); ++j) {
        if (sgn(num_[j]) == 0) continue;
        acc += num_[j].get_d() * std::polar(1.0, theta * static_cast<double>(j));
    }
    return acc / den_.get_d();
}

std::size_t CycNum::hash() const {
    // Rationals hash identically at every conductor.
    if (is_rational())
        return static_cast<std::size_t>(mpz_get_si(num_[0].get_mpz_t())) * 0x9e3779b97f4a7c15ULL ^
               static_cast<std::size_t>(mpz_get_si(den_.get_mpz_t()));
    const CycNum m = try_descend();
    std::size_t h = static_cast<std::size_t>(m.ctx_->n) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::size_t>(mpz_get_si(m.den_.get_mpz_t())) + (h << 6) + (h >> 2);
    for (const auto& c : m.num_)
        h ^= static_cast<std::size_t>(mpz_get_si(c.get_mpz_t())) + 0x9e3779b9 + (h << 6) + (h >> 2);
    return h;
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.str(); }

CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op) {
    switch (op) {
        case CycOp::add:
            return a + b;
        case CycOp::sub:
            return a - b;
        case CycOp::mul:
            return a * b;
        case CycOp::div:
            return a / b;
    }
    throw Error("cyc_arith: unknown operation");
}

CycNum sqrt2() { return root_of_unity(8, 1) + root_of_unity(8, 7); }

CycNum sqrt5() {
    return root_of_unity(5, 1) - root_of_unity(5, 2) - root_of_unity(5, 3) + root_of_unity(5, 4);
}

}  // namespace symcrit

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dtv {

constexpr int kMaxVars = 8;

using Mono = std::array<int16_t, kMaxVars>;

int degree(const Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);
Mono unit_mono(int var, int power = 1);

// Signed Laurent monomial used as the argument of q-series factors.  The
// sign is the coefficient (+1, -1, or 0 for the zero monomial).
struct Term {
    int sign = 1;
    std::array<int, kMaxVars> exp{};

    static Term one() { return {}; }
    static Term var(int v, int power = 1);
    Term operator*(const Term& o) const;
    Term inv() const;
    Term neg() const { Term t = *this; t.sign = -t.sign; return t; }
    Term pow(int k) const;
    int degree() const;
    bool nonnegative() const;
};

class Series {
public:
    Series() = default;
    Series(int nvars, int cutoff);

    static Series one(int nvars, int cutoff);
    static Series constant(int nvars, int cutoff, const mpz_class& c);
    static Series monomial(int nvars, int cutoff, const Mono& m, const mpz_class& c = 1);
    // c * t, where t must have nonnegative exponents
    static Series from_term(int nvars, int cutoff, const Term& t);

    int nvars() const { return nvars_; }
    int cutoff() const { return cutoff_; }
    const std::map<Mono, mpz_class>& terms() const { return terms_; }
    mpz_class coeff(const Mono& m) const;
    mpz_class constant_term() const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Mono& m, const mpz_class& c);

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series operator+(const Series& o) const { Series r = *this; return r += o; }
    Series operator-(const Series& o) const { Series r = *this; return r -= o; }
    Series operator*(const Series& o) const;
    Series operator-() const;
    Series scaled(const mpz_class& c) const;
    Series shifted(const Mono& m) const;  // multiply by a monomial
    bool operator==(const Series& o) const;

    Series inverse() const;
    Series pow(long k) const;
    Series truncated(int cutoff) const;
    // variable v of the result holds old variable perm[v]
    Series substitute(const std::vector<int>& perm) const;
    // result with every variable v replaced by the monomial images[v]
    Series substitute_monomials(const std::vector<Mono>& images) const;

private:
    void check_compatible(const Series& o) const;
    int nvars_ = 0;
    int cutoff_ = 0;
    std::map<Mono, mpz_class> terms_;
};

std::string mono_to_string(const Mono& m, const std::vector<std::string>& names);
std::string to_string(const Series& s, const std::vector<std::string>& names);

// First monomial (lex order) where a and b differ; returns false if equal.
bool first_difference(const Series& a, const Series& b, Mono& where);

// (a;q)_inf
Series pochhammer(const Term& a, const Term& q, int nvars, int cutoff);
// prod_{n>=1} (1 - x q^n)^{-n}
Series macmahon(const Term& x, const Term& q, int nvars, int cutoff);

// Closed-form building blocks.  The subscripted tilde/hat functions take the
// subscript s in {0,1}.
struct QContext {
    int nvars;
    int cutoff;
    Term q;
};
Series M(const QContext& c, const Term& x);
Series M_tilde(const QContext& c, const Term& x);
Series M_hat(const QContext& c, const Term& x);
Series M_tilde_sub(const QContext& c, int s, const Term& x, int l);
Series M_hat_sub(const QContext& c, int s, const Term& x, int l);
Series M0(const QContext& c, const Term& x);
Series M1(const QContext& c, const Term& x, const Term& y);
Series M2(const QContext& c, const Term& x, int l);
Series M_hat1(const QContext& c, const Term& x, const Term& y);
Series M_hat2(const QContext& c, const Term& x, int l);
Series poch(const QContext& c, const Term& a);

}  // namespace dtv

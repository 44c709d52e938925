#include "dtv/qseries.hpp"

#include <stdexcept>

namespace dtv {

int degree(const Mono& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    for (int v = 0; v < kMaxVars; ++v) r[v] = int16_t(a[v] + b[v]);
    return r;
}

Mono unit_mono(int var, int power) {
    Mono m{};
    m[var] = int16_t(power);
    return m;
}

Term Term::var(int v, int power) {
    Term t;
    t.exp[v] = power;
    return t;
}

Term Term::operator*(const Term& o) const {
    Term t;
    t.sign = sign * o.sign;
    for (int v = 0; v < kMaxVars; ++v) t.exp[v] = exp[v] + o.exp[v];
    return t;
}

Term Term::inv() const {
    if (sign == 0) throw std::domain_error("inverse of the zero monomial");
    Term t = *this;
    for (auto& e : t.exp) e = -e;
    return t;
}

Term Term::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    Term t;
    for (int i = 0; i < k; ++i) t = t * *this;
    return t;
}

int Term::degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
}

bool Term::nonnegative() const {
    for (auto e : exp)
        if (e < 0) return false;
    return true;
}

static Mono to_mono(const Term& t) {
    Mono m{};
    for (int v = 0; v < kMaxVars; ++v) {
        if (t.exp[v] < 0) throw std::domain_error("negative exponent in series monomial");
        m[v] = int16_t(t.exp[v]);
    }
    return m;
}

Series::Series(int nvars, int cutoff) : nvars_(nvars), cutoff_(cutoff) {
    if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("unsupported number of variables");
    if (cutoff < 0) throw std::invalid_argument("negative cutoff");
}

Series Series::one(int nvars, int cutoff) { return constant(nvars, cutoff, 1); }

Series Series::constant(int nvars, int cutoff, const mpz_class& c) {
    Series s(nvars, cutoff);
    s.add_term(Mono{}, c);
    return s;
}

Series Series::monomial(int nvars, int cutoff, const Mono& m, const mpz_class& c) {
    Series s(nvars, cutoff);
    s.add_term(m, c);
    return s;
}

Series Series::from_term(int nvars, int cutoff, const Term& t) {
    Series s(nvars, cutoff);
    if (t.sign != 0) s.add_term(to_mono(t), t.sign);
    return s;
}

mpz_class Series::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class Series::constant_term() const { return coeff(Mono{}); }

void Series::add_term(const Mono& m, const mpz_class& c) {
    if (c == 0 || degree(m) > cutoff_) return;
    for (int v = nvars_; v < kMaxVars; ++v)
        if (m[v] != 0) throw std::invalid_argument("monomial uses a variable beyond the series arity");
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Series::check_compatible(const Series& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("series arity mismatch");
    if (cutoff_ != o.cutoff_) throw std::invalid_argument("series cutoff mismatch");
}

Series& Series::operator+=(const Series& o) {
    check_compatible(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    check_compatible(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Series Series::operator*(const Series& o) const {
    check_compatible(o);
    Series r(nvars_, cutoff_);
    std::vector<std::pair<int, const std::pair<const Mono, mpz_class>*>> b;
    b.reserve(o.terms_.size());
    for (auto& t : o.terms_) b.push_back({degree(t.first), &t});
    mpz_class prod;
    for (auto& [ma, ca] : terms_) {
        int da = degree(ma);
        for (auto& [db, t] : b) {
            if (da + db > cutoff_) continue;
            prod = ca * t->second;
            r.add_term(mono_mul(ma, t->first), prod);
        }
    }
    return r;
}

Series& Series::operator*=(const Series& o) { return *this = *this * o; }

Series Series::operator-() const { return scaled(-1); }

Series Series::scaled(const mpz_class& c) const {
    Series r(nvars_, cutoff_);
    for (auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

Series Series::shifted(const Mono& m) const {
    Series r(nvars_, cutoff_);
    for (auto& [e, v] : terms_) r.add_term(mono_mul(e, m), v);
    return r;
}

bool Series::operator==(const Series& o) const {
    return nvars_ == o.nvars_ && cutoff_ == o.cutoff_ && terms_ == o.terms_;
}

Series Series::inverse() const {
    mpz_class c = constant_term();
    if (c != 1 && c != -1) throw std::domain_error("series inverse needs constant term +1 or -1");
    // f = c(1 + g), 1/f = c(1 - g + g^2 - ...)
    Series g = scaled(c);
    g.add_term(Mono{}, -1);
    Series r = one(nvars_, cutoff_);
    for (int k = 0; k < cutoff_; ++k) r = one(nvars_, cutoff_) - g * r;
    return r.scaled(c);
}

Series Series::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Series r = one(nvars_, cutoff_), b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

Series Series::truncated(int cutoff) const {
    Series r(nvars_, cutoff);
    for (auto& [m, v] : terms_) r.add_term(m, v);
    return r;
}

Series Series::substitute(const std::vector<int>& perm) const {
    if (int(perm.size()) != nvars_) throw std::invalid_argument("permutation size mismatch");
    Series r(nvars_, cutoff_);
    for (auto& [m, v] : terms_) {
        Mono n{};
        for (int i = 0; i < nvars_; ++i) n[i] = m[perm[i]];
        r.add_term(n, v);
    }
    return r;
}

Series Series::substitute_monomials(const std::vector<Mono>& images) const {
    if (int(images.size()) != nvars_) throw std::invalid_argument("substitution size mismatch");
    Series r(nvars_, cutoff_);
    for (auto& [m, v] : terms_) {
        Mono n{};
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < m[i]; ++k) n = mono_mul(n, images[i]);
        r.add_term(n, v);
    }
    return r;
}

std::string mono_to_string(const Mono& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t v = 0; v < names.size(); ++v) {
        if (!m[v]) continue;
        if (!s.empty()) s += "*";
        s += names[v];
        if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const Series& s, const std::vector<std::string>& names) {
    if (s.is_zero()) return "0";
    std::string out;
    for (auto& [m, c] : s.terms()) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        mpz_class a = abs(c);
        std::string ms = mono_to_string(m, names);
        if (ms == "1") out += a.get_str();
        else if (a == 1) out += ms;
        else out += a.get_str() + "*" + ms;
    }
    return out;
}

bool first_difference(const Series& a, const Series& b, Mono& where) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            where = ia->first;
            return true;
        }
        if (ia == a.terms().end() || ib->first < ia->first) {
            where = ib->first;
            return true;
        }
        if (ia->second != ib->second) {
            where = ia->first;
            return true;
        }
        ++ia, ++ib;
    }
    return false;
}

// factor monomial a*q^k, or nullopt-like flag when it is beyond the cutoff
static bool factor_mono(const Term& t, int cutoff, Mono& out) {
    int d = t.degree();
    if (d > cutoff && t.nonnegative()) return false;
    if (!t.nonnegative()) throw std::domain_error("q-series factor has a negative exponent");
    if (d == 0) throw std::domain_error("q-series factor of degree zero does not converge");
    out = to_mono(t);
    return true;
}

static void require_positive_q(const Term& q) {
    if (q.degree() < 1 || !q.nonnegative() || q.sign != 1) throw std::domain_error("q must be a monomial of positive degree");
}

Series pochhammer(const Term& a, const Term& q, int nvars, int cutoff) {
    require_positive_q(q);
    Series r = Series::one(nvars, cutoff);
    if (a.sign == 0) return r;
    Term t = a;
    for (;;) {
        Mono m;
        if (!factor_mono(t, cutoff, m)) break;
        r = r - r.shifted(m).scaled(t.sign);
        t = t * q;
    }
    return r;
}

// (1 - c m)^{-n} = sum_j binom(n+j-1, j) c^j m^j
static Series inverse_power(const Mono& m, int c, int n, int nvars, int cutoff) {
    Series g(nvars, cutoff);
    int d = degree(m);
    Mono cur{};
    mpz_class coef = 1;
    for (int j = 0; j * d <= cutoff; ++j) {
        g.add_term(cur, coef);
        cur = mono_mul(cur, m);
        coef = coef * (n + j) * c / (j + 1);
    }
    return g;
}

Series macmahon(const Term& x, const Term& q, int nvars, int cutoff) {
    require_positive_q(q);
    Series r = Series::one(nvars, cutoff);
    if (x.sign == 0) return r;
    Term t = x * q;
    for (int n = 1;; ++n, t = t * q) {
        Mono m;
        if (!factor_mono(t, cutoff, m)) break;
        r *= inverse_power(m, t.sign, n, nvars, cutoff);
    }
    return r;
}

Series poch(const QContext& c, const Term& a) { return pochhammer(a, c.q, c.nvars, c.cutoff); }

Series M(const QContext& c, const Term& x) { return macmahon(x, c.q, c.nvars, c.cutoff); }

Series M_tilde(const QContext& c, const Term& x) { return M(c, x) * M(c, x.inv()); }

Series M_hat(const QContext& c, const Term& x) { return (M_tilde(c, x) * M_tilde(c, x.neg())).inverse(); }

Series M_tilde_sub(const QContext& c, int s, const Term& x, int l) {
    if (s == 0) return M(c, x * c.q.pow(l)) * (M(c, x) * poch(c, c.q * x.inv()).pow(l)).inverse();
    if (s == 1) return M(c, x.inv() * c.q.pow(l)) * (M(c, x.inv()) * poch(c, x).pow(l)).inverse();
    throw std::invalid_argument("subscript must be 0 or 1");
}

Series M_hat_sub(const QContext& c, int s, const Term& x, int l) {
    return M_tilde_sub(c, s, x, l) * M_tilde_sub(c, s, x.neg(), l);
}

Series M0(const QContext& c, const Term& x) { return M(c, x) * M(c, x.neg()); }

Series M1(const QContext& c, const Term& x, const Term& y) { return M(c, x) * M(c, x * y).inverse(); }

Series M2(const QContext& c, const Term& x, int l) {
    return M(c, x * c.q.pow(l)) * (M(c, x) * poch(c, x).pow(l)).inverse();
}

Series M_hat1(const QContext& c, const Term& x, const Term& y) { return M1(c, x, y) * M1(c, x.neg(), y); }

Series M_hat2(const QContext& c, const Term& x, int l) { return M2(c, x, l) * M2(c, x.neg(), l); }

}  // namespace dtv

#include "dtv/vertex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dtv {

int ColorMap::operator()(int i, int j, int k) const {
    if (group == Group::zn) return mod(long(i) - j, n);
    int u = (i + k) & 1, v = (j + k) & 1;
    if (!u && !v) return C0;
    if (u && !v) return CA;
    if (!u && v) return CB;
    return CC;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

using Box = std::array<int, 3>;

struct LegSet {
    Partition lam, mu, nu;
    bool contains(const Box& b) const {
        auto [i, j, k] = b;
        return nu.contains(i, j) || lam.contains(j, k) || mu.contains(k, i);
    }
    int extent() const {
        int e = 0;
        for (const Partition* p : {&lam, &mu, &nu}) e = std::max({e, (*p)[0], int(p->length())});
        return e;
    }
};

}  // namespace

Series enumerate_3d(const Legs& legs, const ColorMap& cm, int cutoff) {
    int nonempty = !legs.lambda.empty() + !legs.mu.empty() + !legs.nu.empty();
    if (nonempty > 1) throw std::invalid_argument("enumerate_3d supports a single leg");
    if (cutoff < 0) throw std::invalid_argument("negative cutoff");
    LegSet L{legs.lambda, legs.mu, legs.nu};
    const int bound = L.extent() + cutoff + 1;
    Series out(cm.nvars(), cutoff);

    std::set<std::vector<Box>> level{{}};
    for (int size = 0; size <= cutoff; ++size) {
        std::set<std::vector<Box>> next;
        for (const auto& extra : level) {
            Mono w{};
            for (auto& b : extra) ++w[cm(b[0], b[1], b[2])];
            out.add_term(w, 1);
            if (size == cutoff) continue;
            auto present = [&](Box b) {
                for (int c : b)
                    if (c < 0) return true;
                return L.contains(b) || std::binary_search(extra.begin(), extra.end(), b);
            };
            for (int i = 0; i < bound; ++i)
                for (int j = 0; j < bound; ++j)
                    for (int k = 0; k < bound; ++k) {
                        Box b{i, j, k};
                        if (present(b)) continue;
                        if (!present({i - 1, j, k}) || !present({i, j - 1, k}) || !present({i, j, k - 1})) continue;
                        auto grown = extra;
                        grown.insert(std::upper_bound(grown.begin(), grown.end(), b), b);
                        next.insert(std::move(grown));
                    }
        }
        level = std::move(next);
    }
    return out;
}

Series enumerate_3d(const Partition& nu, const ColorMap& cm, int cutoff) {
    return enumerate_3d(Legs{{}, {}, nu}, cm, cutoff);
}

// ---------------------------------------------------------------------------
// skew Schur functions

namespace {

Mono laurent_mono(const Term& t) {
    Mono m{};
    for (int v = 0; v < kMaxVars; ++v) m[v] = int16_t(t.exp[v]);
    return m;
}

Series times_term(const Series& s, const Term& t) { return s.shifted(laurent_mono(t)).scaled(t.sign); }

Series laurent_monomial(int nvars, int cutoff, const Term& t) {
    Series s(nvars, cutoff);
    if (t.sign) s.add_term(laurent_mono(t), t.sign);
    return s;
}

bool contained(const Partition& eta, const Partition& mu) {
    if (eta.length() > mu.length()) return false;
    for (std::size_t j = 0; j < eta.length(); ++j)
        if (eta[j] > mu[j]) return false;
    return true;
}

}  // namespace

Series skew_schur_specialized(const Partition& mu, const Partition& eta, const std::vector<Term>& vars, int nvars,
                              int cutoff) {
    if (!contained(eta, mu)) return Series(nvars, cutoff);
    const int r = mu.size() - eta.size();
    int neg = 0;
    for (auto& x : vars) {
        if (!x.sign) continue;
        int d = x.degree();
        bool unit = x.sign == 1 && std::all_of(x.exp.begin(), x.exp.end(), [](int e) { return e == 0; });
        if (d == 0 && !unit) throw std::domain_error("degree-0 specialization other than 1 does not converge");
        neg = std::max(neg, -d);
    }
    // every monomial is a product of r variables, so this much slack keeps
    // all intermediate truncations exact up to the requested cutoff
    const int work = cutoff + r * neg;

    std::vector<Series> h(r + 1, Series(nvars, work));
    h[0] = Series::one(nvars, work);
    for (auto& x : vars) {
        if (!x.sign || r == 0) continue;
        if (x.degree() > work + (r - 1) * neg) continue;
        for (int k = 1; k <= r; ++k) h[k] += times_term(h[k - 1], x);
    }
    // entries sum to r along every permutation, so an index above r forces a
    // negative one in the same product
    auto H = [&](int k) { return k < 0 || k > r ? Series(nvars, work) : h[k]; };

    const int len = int(mu.length());
    if (len == 0) return Series::one(nvars, cutoff);
    Series det(nvars, work);
    std::vector<int> perm(len);
    for (int i = 0; i < len; ++i) perm[i] = i;
    do {
        int inversions = 0;
        for (int a = 0; a < len; ++a)
            for (int b = a + 1; b < len; ++b)
                if (perm[a] > perm[b]) ++inversions;
        Series t = Series::one(nvars, work);
        for (int i = 0; i < len && !t.is_zero(); ++i) t *= H(mu[i] - eta[perm[i]] - i + perm[i]);
        if (inversions & 1) det -= t;
        else det += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det.truncated(cutoff);
}

Term bold_q(long t, int n) {
    Term r;
    if (t > 0)
        for (long s = 1; s <= t; ++s) r.exp[mod(s, n)] += 1;
    else
        for (long s = t + 1; s <= 0; ++s) r.exp[mod(s, n)] -= 1;
    return r;
}

std::vector<Term> shifted_sequence(const Partition& nu, int n, int count) {
    std::vector<Term> v;
    for (int i = 0; i < count; ++i) v.push_back(bold_q(long(i) - nu[i], n));
    return v;
}

// ---------------------------------------------------------------------------
// Zn closed form

Series rename(const Series& s, const std::vector<int>& image) {
    std::vector<int> perm(s.nvars());
    for (int i = 0; i < s.nvars(); ++i) perm.at(image.at(i)) = i;
    return s.substitute(perm);
}

static Term zn_q(int n) {
    Term q;
    for (int k = 0; k < n; ++k) q.exp[k] = 1;
    return q;
}

Series zn_empty_vertex(int n, int cutoff) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("unsupported n");
    QContext c{n, cutoff, zn_q(n)};
    Series r = M(c, Term::one()).pow(n);
    for (int a = 1; a < n; ++a) {
        Term x;
        for (int b = a; b < n; ++b) {
            x = x * Term::var(b);
            r *= M_tilde(c, x);
        }
    }
    return r;
}

Series hook_factor(const Partition& nu, int n, int cutoff) {
    Series r = Series::one(n, cutoff);
    for (std::size_t j = 0; j < nu.length(); ++j)
        for (int i = 0; i < nu[j]; ++i) {
            Term x;
            for (int k = 0; k < n; ++k) x.exp[k] = hook_color_count(nu, i, int(j), k, n);
            Series f = Series::one(n, cutoff);
            f -= Series::from_term(n, cutoff, x);
            r *= f.inverse();
        }
    return r;
}

Series overall_factor(const Partition& nu, int n, int cutoff) {
    Series v = zn_empty_vertex(n, cutoff);
    Series r = Series::one(n, cutoff);
    for (int k = 0; k < n; ++k) {
        long e = -2L * residue_count(nu, k, n) + residue_count(nu, mod(k + 1, n), n) + residue_count(nu, mod(k - 1, n), n);
        if (e == 0) continue;
        std::vector<int> image(n);
        for (int s = 0; s < n; ++s) image[s] = mod(k + s, n);
        r *= rename(v, image).pow(e);
    }
    return r;
}

namespace {

std::vector<int> conj_image(int n) {
    std::vector<int> image(n);
    for (int k = 0; k < n; ++k) image[k] = mod(-k, n);
    return image;
}

Term renormalization_monomial(const Partition& lam, int n) {
    Term t;
    for (int k = 0; k < n; ++k) t.exp[k] = -int(renormalization_exponent(lam, k, n));
    return t;
}

std::vector<Partition> sub_partitions(const Partition& a, const Partition& b, int size) {
    std::vector<Partition> out;
    for (auto& eta : partitions_of(size))
        if (contained(eta, a) && contained(eta, b)) out.push_back(eta);
    return out;
}

}  // namespace

Series vertex_closed_zn(int n, const Legs& legs, int cutoff) {
    const Partition &lam = legs.lambda, &mu = legs.mu, &nu = legs.nu;
    if (lam.empty() && mu.empty()) {
        return zn_empty_vertex(n, cutoff) * hook_factor(nu, n, cutoff) * overall_factor(nu, n, cutoff);
    }
    const Partition lamc = conjugate(lam), muc = conjugate(mu), nuc = conjugate(nu);
    Term pre_l = renormalization_monomial(lam, n);
    Term pre_m = renormalization_monomial(muc, n);
    auto conj = conj_image(n);

    // Slack: the most negative degree any later factor can contribute.
    const int neg_l = int(nu.length()), neg_m = nu[0];
    const int slack = -pre_l.degree() - pre_m.degree() + lam.size() * (1 + neg_l) + mu.size() * neg_m;
    const int W = cutoff + slack;
    const int count_l = W + 2 * slack + neg_l + 2, count_m = W + 2 * slack + neg_m + 2;
    const auto vars_l = shifted_sequence(nuc, n, count_l);
    const auto vars_m = shifted_sequence(nu, n, count_m);

    Series base = zn_empty_vertex(n, W) * hook_factor(nu, n, W) * overall_factor(nu, n, W);
    Series pre = laurent_monomial(n, W, pre_l) * rename(laurent_monomial(n, W, pre_m), conj);
    Series head = base * pre;

    auto eta_terms = [&](int size) {
        Series sum(n, W);
        for (auto& eta : sub_partitions(lamc, mu, size)) {
            Series t = laurent_monomial(n, W, Term::var(0, -size));
            t *= rename(skew_schur_specialized(lamc, eta, vars_l, n, W), conj);
            t *= skew_schur_specialized(mu, eta, vars_m, n, W);
            sum += t;
        }
        return sum;
    };
    const int E = cutoff;
    Series sum(n, W);
    for (int size = 0; size <= E; ++size) sum += eta_terms(size);
    if (!(head * eta_terms(E + 1)).truncated(cutoff).is_zero())
        throw std::runtime_error("eta-sum did not stabilize");

    Series full = (head * sum).truncated(cutoff);
    for (auto& [m, c] : full.terms())
        for (auto e : m)
            if (e < 0) throw std::domain_error("negative exponent survives in the specialized vertex");
    return full;
}

Series one_leg_zn_staircase(int m, int cutoff) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    // Worked in the Z2xZ2 slot names: q~0 = q0, q~1 = qb, q~2 = qc, q~3 = qa.
    const int s = m % 2, L = (m + 1) / 2;
    Term qa = Term::var(CA), qb = Term::var(CB), qc = Term::var(CC), q0 = Term::var(C0);
    QContext c{4, cutoff, q0 * qa * qb * qc};
    Series empty = z4_as_z2z2(zn_empty_vertex(4, cutoff), {C0, CB, CC, CA});
    Series r(4, cutoff);
    if (m % 4 == 0 || m % 4 == 3) {
        r = empty * M_tilde_sub(c, 1 - s, qc, L) * M_tilde_sub(c, s, qa * qb * qc, L);
    } else {
        Series other = z4_as_z2z2(zn_empty_vertex(4, cutoff), {CC, CA, C0, CB});
        r = other * M_tilde_sub(c, 1 - s, q0, L) * M_tilde_sub(c, s, qa * qb * q0, L);
    }
    r *= M_tilde_sub(c, s, qa, L) * M_tilde_sub(c, s, qb, L);
    std::vector<int> back(4);
    back[C0] = 0, back[CB] = 1, back[CC] = 2, back[CA] = 3;
    return rename(r, back);
}

Series z4_as_z2z2(const Series& z4, const std::array<int, 4>& args) {
    return rename(z4, std::vector<int>(args.begin(), args.end()));
}

// ---------------------------------------------------------------------------
// Z2xZ2 closed forms

namespace {

struct Z2 {
    QContext c;
    Term v[4];
    explicit Z2(int cutoff) {
        for (int i = 0; i < 4; ++i) v[i] = Term::var(i);
        c = QContext{4, cutoff, v[0] * v[1] * v[2] * v[3]};
    }
};

}  // namespace

Series closed_z2z2_nolegs(int cutoff) {
    Z2 z(cutoff);
    return z_pyramid_closed(cutoff) * M_tilde(z.c, z.v[CA] * z.v[CB]);
}

Series z_pyramid_closed(int cutoff) {
    Z2 z(cutoff);
    auto& c = z.c;
    Term a = z.v[CA], b = z.v[CB], cc = z.v[CC];
    Series num = M(c, Term::one()).pow(4) * M_tilde(c, a * cc) * M_tilde(c, b * cc);
    Series den = M_tilde(c, a.neg()) * M_tilde(c, b.neg()) * M_tilde(c, cc.neg()) * M_tilde(c, (a * b * cc).neg());
    return num * den.inverse();
}

Series phi(const Triple& t, int m, int cutoff) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    Z2 z(cutoff);
    auto& c = z.c;
    const int s = m % 2, L = (m + 1) / 2;
    Term a = z.v[t.a], b = z.v[t.b], cc = z.v[t.c], abc = a * b * cc;
    Series num = M_hat(c, a) * M_hat(c, b) * M_hat(c, cc) * M_hat(c, abc) * M_tilde(c, a * b) *
                 M_tilde_sub(c, s, a * b, 2 * L);
    Series den = M_hat_sub(c, s, a, L) * M_hat_sub(c, s, b, L) * M_hat_sub(c, 1 - s, cc, L) * M_hat_sub(c, s, abc, L);
    return num * den.inverse();
}

Series upsilon(const Triple& t, int m, int cutoff) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    Z2 z(cutoff);
    auto& c = z.c;
    const int s = m % 2, L = (m + 1) / 2;
    Term a = z.v[t.a], b = z.v[t.b], cc = z.v[t.c], abc = a * b * cc;
    Series den = M_tilde_sub(c, 1 - s, cc.neg(), L) * M_tilde_sub(c, s, a.neg(), L) * M_tilde_sub(c, s, b.neg(), L) *
                 M_tilde_sub(c, s, abc.neg(), L);
    return M_tilde_sub(c, s, a * b, 2 * L) * den.inverse();
}

Series one_leg_z2z2_closed(int m, int cutoff) { return closed_z2z2_nolegs(cutoff) * upsilon(Triple{}, m, cutoff); }

Series corollary_rpc_closed(int m, int cutoff) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    Series zp = z_pyramid_closed(cutoff);
    if (m == 0) return zp;
    Z2 z(cutoff);
    auto& c = z.c;
    const int s = m % 2, L = (m + 1) / 2;
    Term a = z.v[CA], b = z.v[CB];
    Term lone = z.v[CC];
    if (m % 4 == 1 || m % 4 == 2) {
        zp = rename(zp, {CC, CA, CB, C0});
        lone = z.v[C0];
    }
    Series den = M_tilde_sub(c, 1 - s, lone.neg(), L) * M_tilde_sub(c, s, a.neg(), L) * M_tilde_sub(c, s, b.neg(), L) *
                 M_tilde_sub(c, s, (a * b * lone).neg(), L);
    return zp * den.inverse();
}

bool symmetry_check(const Partition& nu, int cutoff) {
    ColorMap cm;
    Series third = enumerate_3d(Legs{{}, {}, nu}, cm, cutoff);
    Series first = enumerate_3d(Legs{nu, {}, {}}, cm, cutoff);
    Series second = enumerate_3d(Legs{{}, nu, {}}, cm, cutoff);
    std::vector<int> to_first(4), to_second(4);
    to_first[C0] = C0, to_first[CA] = CC, to_first[CB] = CA, to_first[CC] = CB;
    to_second[C0] = C0, to_second[CA] = CB, to_second[CB] = CC, to_second[CC] = CA;
    return third == rename(first, to_first) && third == rename(second, to_second);
}

}  // namespace dtv

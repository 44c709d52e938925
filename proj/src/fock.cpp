#include "dtv/fock.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dtv/pyramid.hpp"
#include "dtv/rpc.hpp"

namespace dtv {

Operator Operator::gamma(int tau, bool primed, const Term& x) {
    OpKind k;
    if (tau > 0) k = primed ? OpKind::GammaPlusPrime : OpKind::GammaPlus;
    else k = primed ? OpKind::GammaMinusPrime : OpKind::GammaMinus;
    return {k, x};
}

bool Operator::is_weight() const {
    return kind == OpKind::WeightSingle || kind == OpKind::WeightPair || kind == OpKind::WeightZn;
}

bool Operator::creates() const {
    return kind == OpKind::GammaMinus || kind == OpKind::GammaMinusPrime || kind == OpKind::EMinus;
}

TransferState TransferState::basis(int nvars, int cutoff, const Partition& p) {
    TransferState s(nvars, cutoff);
    s.add(p, Series::one(nvars, cutoff));
    return s;
}

void TransferState::add(const Partition& p, const Series& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = amp.try_emplace(p, s);
    if (!fresh) {
        it->second += s;
        if (it->second.is_zero()) amp.erase(it);
    }
}

void TransferState::drop_zeros() {
    for (auto it = amp.begin(); it != amp.end();) it = it->second.is_zero() ? amp.erase(it) : std::next(it);
}

bool TransferState::operator==(const TransferState& o) const {
    return nvars == o.nvars && cutoff == o.cutoff && amp == o.amp;
}

static int min_degree(const Series& s) {
    int d = std::numeric_limits<int>::max();
    for (auto& [m, c] : s.terms()) d = std::min(d, degree(m));
    return d;
}

// largest partition size allowed for results built from an amplitude of
// minimal degree d
static int size_cap(const ApplyOptions& opt, int cutoff, int d) {
    int cap = std::numeric_limits<int>::max();
    if (opt.max_size >= 0) cap = opt.max_size;
    if (opt.prune) cap = std::min(cap, cutoff - d);
    return cap;
}

static Mono term_mono(const Term& t) {
    Mono m{};
    for (int v = 0; v < kMaxVars; ++v) {
        if (t.exp[v] < 0) throw std::domain_error("operator argument has a negative exponent");
        m[v] = int16_t(t.exp[v]);
    }
    return m;
}

static Series times_term(const Series& s, const Term& t) {
    if (t.sign == 0) return Series(s.nvars(), s.cutoff());
    return s.shifted(term_mono(t)).scaled(t.sign);
}

static void prune_state(TransferState& s) {
    TransferState out(s.nvars, s.cutoff);
    for (auto& [p, ser] : s.amp) {
        int room = s.cutoff - p.size();
        if (room < 0) continue;
        out.add(p, ser.truncated(room).truncated(s.cutoff));
    }
    s = std::move(out);
}

static TransferState apply_gamma(const Operator& op, const TransferState& s, const ApplyOptions& opt) {
    TransferState out(s.nvars, s.cutoff);
    bool primed = op.kind == OpKind::GammaPlusPrime || op.kind == OpKind::GammaMinusPrime;
    int xdeg = op.arg.degree();
    for (auto& [lam, ser] : s.amp) {
        std::vector<Partition> partners;
        if (!op.creates()) {
            partners = primed ? column_predecessors(lam) : row_predecessors(lam);
        } else {
            int d = min_degree(ser);
            int cap = size_cap(opt, s.cutoff, d);
            if (xdeg > 0) cap = std::min<long>(cap, lam.size() + (s.cutoff - d) / xdeg);
            else if (cap == std::numeric_limits<int>::max())
                throw std::invalid_argument("creation operator needs a size bound");
            partners = primed ? column_successors(lam, cap) : row_successors(lam, cap);
        }
        for (auto& mu : partners) {
            if (opt.max_size >= 0 && mu.size() > opt.max_size) continue;
            out.add(mu, times_term(ser, op.arg.pow(std::abs(mu.size() - lam.size()))));
        }
    }
    return out;
}

static TransferState apply_weight(const Operator& op, const TransferState& s) {
    TransferState out(s.nvars, s.cutoff);
    for (auto& [lam, ser] : s.amp) {
        Mono m{};
        if (op.kind == OpKind::WeightPair) {
            for (std::size_t j = 0; j < lam.length(); ++j)
                for (int i = 0; i < lam[j]; ++i) ++m[(i + int(j)) % 2 == 0 ? op.g : op.h];
        } else {
            m[op.g] = int16_t(lam.size());
        }
        out.add(lam, ser.shifted(m));
    }
    return out;
}

std::vector<std::pair<Partition, int>> border_strips(const Partition& p, int n, bool add) {
    std::vector<std::pair<Partition, int>> out;
    if (n < 1) throw std::invalid_argument("border strip length must be positive");
    int len = int(p.length()) + n;
    std::vector<int> beta(len);
    for (int j = 0; j < len; ++j) beta[j] = p[j] - j;
    auto occupied = [&](int v) { return v <= -len || std::find(beta.begin(), beta.end(), v) != beta.end(); };
    for (int j = 0; j < len; ++j) {
        int to = add ? beta[j] + n : beta[j] - n;
        if (occupied(to)) continue;
        int lo = std::min(beta[j], to), hi = std::max(beta[j], to);
        int between = 0;
        for (int b : beta)
            if (b > lo && b < hi) ++between;
        between += std::max(0, std::min(hi, -len + 1) - lo - 1);  // implicit particles
        std::vector<int> nb = beta;
        nb[j] = to;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> rows(len);
        for (int r = 0; r < len; ++r) rows[r] = nb[r] + r;
        out.emplace_back(Partition(rows), between % 2 == 0 ? 1 : -1);
    }
    return out;
}

TransferState border_strip_apply(bool add, int n, const TransferState& s, int max_size) {
    TransferState out(s.nvars, s.cutoff);
    for (auto& [lam, ser] : s.amp)
        for (auto& [mu, sign] : border_strips(lam, n, add))
            if (max_size < 0 || mu.size() <= max_size) out.add(mu, ser.scaled(sign));
    return out;
}

namespace {

using QSeries = std::map<Mono, mpq_class>;
using QState = std::map<Partition, QSeries>;

// sum_k y^k / k * alpha_{-+2k}
QState alpha_sum(const QState& s, const Term& y, bool add, int cutoff, int cap) {
    QState out;
    int ydeg = y.degree();
    Mono ym = term_mono(y);
    for (auto& [lam, ser] : s) {
        int d = std::numeric_limits<int>::max();
        for (auto& [m, c] : ser) d = std::min(d, degree(m));
        Mono yk{};
        int sign = 1;
        for (int k = 1;; ++k) {
            yk = mono_mul(yk, ym);
            sign *= y.sign;
            if (d + k * ydeg > cutoff) break;
            if (add) {
                if (lam.size() + 2 * k > cap) break;
            } else if (2 * k > lam.size()) {
                break;
            }
            for (auto& [mu, bs] : border_strips(lam, 2 * k, add)) {
                auto& dst = out[mu];
                for (auto& [m, c] : ser) {
                    Mono mm = mono_mul(m, yk);
                    if (degree(mm) > cutoff) continue;
                    dst[mm] += c * mpq_class(sign * bs, k);
                }
            }
        }
    }
    return out;
}

}  // namespace

static TransferState apply_exponential(const Operator& op, const TransferState& s, const ApplyOptions& opt) {
    bool add = op.kind == OpKind::EMinus;
    if (op.arg.sign == 0) return s;
    int cap = std::numeric_limits<int>::max();
    if (add) {
        if (opt.max_size >= 0) cap = opt.max_size;
        if (opt.prune) cap = std::min(cap, s.cutoff);
        if (op.arg.degree() == 0 && cap == std::numeric_limits<int>::max())
            throw std::invalid_argument("E_- with a degree-zero argument needs a size bound");
    }
    QState cur;
    for (auto& [lam, ser] : s.amp)
        for (auto& [m, c] : ser.terms()) cur[lam][m] = mpq_class(c);
    QState total = cur;
    for (int m = 1; !cur.empty(); ++m) {
        cur = alpha_sum(cur, op.arg, add, s.cutoff, cap);
        for (auto& [lam, ser] : cur)
            for (auto& [mono, c] : ser) {
                c /= m;
                total[lam][mono] += c;
            }
        for (auto it = cur.begin(); it != cur.end();) {
            for (auto jt = it->second.begin(); jt != it->second.end();)
                jt = jt->second == 0 ? it->second.erase(jt) : std::next(jt);
            it = it->second.empty() ? cur.erase(it) : std::next(it);
        }
    }
    TransferState out(s.nvars, s.cutoff);
    for (auto& [lam, ser] : total) {
        Series r(s.nvars, s.cutoff);
        for (auto& [mono, c] : ser) {
            if (c == 0) continue;
            if (c.get_den() != 1) throw std::logic_error("non-integral coefficient in exponential");
            r.add_term(mono, c.get_num());
        }
        out.add(lam, r);
    }
    return out;
}

TransferState apply(const Operator& op, const TransferState& s, const ApplyOptions& opt) {
    TransferState out(s.nvars, s.cutoff);
    switch (op.kind) {
    case OpKind::GammaPlus:
    case OpKind::GammaMinus:
    case OpKind::GammaPlusPrime:
    case OpKind::GammaMinusPrime:
        out = apply_gamma(op, s, opt);
        break;
    case OpKind::EPlus:
    case OpKind::EMinus:
        out = apply_exponential(op, s, opt);
        break;
    default:
        out = apply_weight(op, s);
    }
    if (opt.prune) prune_state(out);
    if (opt.max_size >= 0)
        for (auto it = out.amp.begin(); it != out.amp.end();)
            it = it->first.size() > opt.max_size ? out.amp.erase(it) : std::next(it);
    return out;
}

Series evaluate_product(const std::vector<Operator>& ops, int nvars, int cutoff) {
    // the ket is built from the right; identical to reading the bra from the left
    TransferState s = TransferState::basis(nvars, cutoff, Partition{});
    for (std::size_t i = ops.size(); i-- > 0;) {
        ApplyOptions opt;
        opt.prune = i > 0 && ops[i - 1].is_weight();
        s = apply(ops[i], s, opt);
    }
    auto it = s.amp.find(Partition{});
    return it == s.amp.end() ? Series(nvars, cutoff) : it->second;
}

Operator q_tilde(int k, const Partition& nu) {
    bool odd_count = diagonal_count(nu, k) % 2 != 0;
    if (k % 2 == 0) return odd_count ? Operator::weight_pair(CC, C0) : Operator::weight_pair(C0, CC);
    if (k > 0) return odd_count ? Operator::weight_pair(CB, CA) : Operator::weight_pair(CA, CB);
    return odd_count ? Operator::weight_pair(CA, CB) : Operator::weight_pair(CB, CA);
}

Operator q_bar(int k, const Partition& nu) {
    bool odd = mho(nu, k) % 2 != 0;
    if (k % 2 == 0) return odd ? Operator::weight_pair(CC, C0) : Operator::weight_pair(C0, CC);
    if (k > 0) return odd ? Operator::weight_pair(CA, CB) : Operator::weight_pair(CB, CA);
    return odd ? Operator::weight_pair(CB, CA) : Operator::weight_pair(CA, CB);
}

Operator q_hat(int k) { return Operator::weight(diagonal_slice_color(k)); }

std::vector<Operator> vertex_operators(const VertexRequest& r, int window) {
    std::vector<Operator> ops;
    Partition nc = conjugate(r.nu);
    auto e = [&](long t) { return edge_value(nc, t); };
    if (r.mode != TransferMode::standard && r.group != Group::z2z2)
        throw std::invalid_argument("restricted pyramid modes use the Z2xZ2 variables");
    for (int t = -window; t <= window; ++t) {
        switch (r.mode) {
        case TransferMode::standard:
            ops.push_back(r.group == Group::z2z2 ? q_tilde(-t, r.nu) : Operator::weight_zn(mod(-t, r.n)));
            ops.push_back(Operator::gamma(e(t), false));
            break;
        case TransferMode::rpc_antidiag:
            ops.push_back(q_bar(-2 * t, r.nu));
            ops.push_back(Operator::gamma(e(2 * t), true));
            ops.push_back(q_bar(-2 * t - 1, r.nu));
            ops.push_back(Operator::gamma(e(2 * t + 1), false));
            break;
        case TransferMode::rpc_diag:
            ops.push_back(q_hat(-t));
            ops.push_back(Operator::gamma(e(t), t % 2 == 0));
            break;
        }
    }
    return ops;
}

int default_window(const VertexRequest& r) {
    int t0 = std::max<int>(int(r.nu.length()), r.nu[0] + 1);
    return r.cutoff + t0 + 4;
}

Series vertex_by_transfer(const VertexRequest& r) {
    if (r.group == Group::zn && (r.n < 1 || r.n > kMaxVars)) throw std::invalid_argument("unsupported n");
    int nvars = r.group == Group::z2z2 ? 4 : r.n;
    int w = default_window(r);
    Series a = evaluate_product(vertex_operators(r, w), nvars, r.cutoff);
    Series b = evaluate_product(vertex_operators(r, w + 2), nvars, r.cutoff);
    if (!(a == b)) throw std::runtime_error("operator product did not stabilize on the window");
    return a;
}

}  // namespace dtv

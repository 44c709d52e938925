#include "dtv/rpc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dtv {

EpsilonTable::EpsilonTable(const Partition& nu) : nu_(nu), conj_(conjugate(nu)) {
    stab_ = int(std::max<std::size_t>(nu.length(), std::size_t(nu[0]))) + 2;
    auto e = [&](long t) { return edge_value(conj_, t); };
    for (auto& v : tab_) v.assign(stab_ + 1, 0);
    for (int i = 0; i <= stab_; ++i) {
        int prev1 = i ? tab_[0][i - 1] : 0, prev2 = i ? tab_[1][i - 1] : 0;
        tab_[0][i] = prev1 + (e(2L * i) + 1) / 2;
        tab_[1][i] = prev2 + (e(2L * i + 1) + 1) / 2;
        if (i >= 1) {
            tab_[2][i] = tab_[2][i - 1] + (1 - e(-2L * i)) / 2;
            tab_[3][i] = tab_[3][i - 1] + (1 - e(-2L * i + 1)) / 2;
        }
    }
    rho1_ = std::max(eps_inf(2), eps_inf(4));
    rho2_ = std::max(eps_inf(1), eps_inf(3));
}

int EpsilonTable::eps(int which, long t) const {
    if (which < 1 || which > 4) throw std::invalid_argument("epsilon index must be 1..4");
    long start = which <= 2 ? 0 : 1;
    if (t < start) return 0;
    return tab_[which - 1][std::min<long>(t, stab_)];
}

int EpsilonTable::eps_hat(int which, long t) const {
    int rho = (which == 1 || which == 3) ? rho2_ : rho1_;
    return rho - eps(which, t);
}

RegionSpec region(const EpsilonTable& t, int l, Frame frame, int s) {
    if (l < 0) throw std::invalid_argument("shift l must be nonnegative");
    RegionSpec r{frame, s, 0, 0, l};
    bool even = s % 2 == 0;
    int k = even ? s / 2 : (s + 1) / 2;
    if (k <= 0) {
        r.i_min = t.eps_hat(2, -k - 1);
        r.j_min = even ? t.eps_hat(1, -k - 1) : t.eps_hat(1, -k);
    } else {
        r.i_min = t.eps_hat(4, k);
        r.j_min = even ? t.eps_hat(3, k) : t.eps_hat(3, k - 1);
    }
    r.i_min += l;
    r.j_min += l;
    return r;
}

RegionSpec region(const Partition& nu, int l, Frame frame, int k) { return region(EpsilonTable(nu), l, frame, k); }

RestrictedConfig restrict_config(const PyramidPartition& p, const Partition& nu, int l, Frame frame) {
    if (!validate(p)) throw std::invalid_argument("not a pyramid partition");
    EpsilonTable t(nu);
    RestrictedConfig c{nu, l, frame, {}};
    for (auto& [s, part] : frame_slices(p, frame)) {
        RegionSpec r = region(t, l, frame, s);
        std::vector<int> rows;
        for (std::size_t i = r.i_min; i < part.length(); ++i) rows.push_back(std::max(0, part[i] - r.j_min));
        Partition q(rows);
        if (!q.empty()) c.slices.emplace(s, q);
    }
    return c;
}

std::vector<Brick> absolute_bricks(const RestrictedConfig& c) {
    EpsilonTable t(c.leg);
    std::vector<Brick> out;
    for (auto& [s, part] : c.slices) {
        RegionSpec r = region(t, c.shift, c.frame, s);
        for (std::size_t i = 0; i < part.length(); ++i)
            for (int j = 0; j < part[i]; ++j) out.push_back({c.frame, s, int(i) + r.i_min, j + r.j_min});
    }
    return out;
}

static Partition get(const SliceMap& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? Partition{} : it->second;
}

// eta_s versus eta_{s-1}
static bool type_pair_ok(const Partition& cur, const Partition& prev, int tau, bool primed) {
    InterlaceKind kind{primed ? InterlaceTag::column : InterlaceTag::row, tau};
    return interlaces(cur, prev, kind);
}

bool check_type_interlacing(const SliceMap& slices, const Partition& nu, InterlaceType kind) {
    bool any = false;
    for (auto& [s, p] : slices) any = any || !p.empty();
    if (!any) return true;
    Partition nc = conjugate(nu);
    int lo = slices.begin()->first, hi = slices.rbegin()->first + 1;
    for (int s = lo; s <= hi; ++s) {
        int tau = edge_value(nc, -s);
        bool primed = kind == InterlaceType::second && s % 2 == 0;
        if (!type_pair_ok(get(slices, s), get(slices, s - 1), tau, primed)) return false;
    }
    return true;
}

// smallest even hbar >= 2 past which nu' has constant edge values
static int leg_hbar(const Partition& nu) {
    int h = std::max<int>(int(nu.length()), nu[0] + 1);
    h = std::max(h, 2);
    return h + (h % 2);
}

PyramidPartition realize(const SliceMap& slices, const Partition& nu, int l, Frame frame) {
    if (!check_type_interlacing(slices, nu, InterlaceType::second))
        throw std::invalid_argument("slices are not interlacing of the second type");
    EpsilonTable t(nu);
    int hbar = leg_hbar(nu);
    int theta = 0, xi = 0;
    for (auto& [s, p] : slices) {
        if (p.empty()) continue;
        hbar = std::max(hbar, std::abs(s) + 1 + (std::abs(s) + 1) % 2);
        theta = std::max(theta, int(p.length()));
        xi = std::max(xi, p[0]);
    }
    const int h = hbar / 2;
    auto eh = [&](int w, long a) { return l + t.eps_hat(w, a); };

    SliceMap out;
    auto put = [&](int s, const std::vector<int>& rows) {
        Partition p(rows);
        if (!p.empty()) out[s] = p;
    };
    // rows [0,a) of length top, then rows [a, a+n) of length bottom(i-a)
    auto build = [](int a, int top, int n, const std::function<int(int)>& bottom) {
        std::vector<int> rows;
        for (int i = 0; i < a; ++i) rows.push_back(top);
        for (int i = 0; i < n; ++i) rows.push_back(bottom(i));
        while (!rows.empty() && rows.back() <= 0) rows.pop_back();
        for (auto& r : rows) r = std::max(r, 0);
        return rows;
    };
    auto with_eta = [&](int s, int base) { return [&, s, base](int r) { return base + get(slices, s)[r]; }; };
    auto constant = [](int v) { return [v](int) { return v; }; };

    const int E2 = eh(2, h - 1), E1 = eh(1, h - 1);
    const int F4 = eh(4, h), F3 = eh(3, h);
    for (int k = -h - xi - E1; k <= h + theta + F4; ++k) {
        std::vector<int> even, odd;
        if (k >= -h && k <= 0) {
            int a = eh(2, -k - 1);
            even = build(a, eh(1, -k - 1) + xi, theta, with_eta(2 * k, eh(1, -k - 1)));
            odd = build(a, eh(1, -k) + xi, theta, with_eta(2 * k - 1, eh(1, -k)));
        } else if (k >= -h - xi && k < -h) {
            even = build(E2, E1 + xi + k + h + 1, theta, constant(E1));
            odd = build(E2, E1 + xi + k + h, theta, constant(E1));
        } else if (k < -h - xi) {
            even = build(E2 + theta, E1 + k + h + xi + 1, 0, constant(0));
            odd = build(E2 + theta, E1 + k + h + xi, 0, constant(0));
        } else if (k > 0 && k <= h) {
            int a = eh(4, k);
            even = build(a, eh(3, k) + xi, theta, with_eta(2 * k, eh(3, k)));
            odd = build(a, eh(3, k - 1) + xi, theta, with_eta(2 * k - 1, eh(3, k - 1)));
        } else if (k > h && k <= h + theta) {
            even = odd = build(F4, F3 + xi, theta - k + h, constant(F3));
        } else {
            even = odd = build(F4 - k + h + theta, F3 + xi, 0, constant(0));
        }
        put(2 * k, even);
        put(2 * k - 1, odd);
    }
    return from_frame_slices(out, frame);
}

bool region_complement_equal(const Partition& nu, int l, int window) {
    EpsilonTable t(nu);
    auto outside = [&](const Brick& b) {
        RegionSpec r = region(t, l, b.frame, b.k);
        return b.i < r.i_min || b.j < r.j_min;
    };
    for (Frame f : {Frame::antidiagonal, Frame::diagonal})
        for (int k = -window; k <= window; ++k)
            for (int i = 0; i <= window; ++i)
                for (int j = 0; j <= window; ++j) {
                    Brick b{f, k, i, j};
                    if (outside(b) != outside(convert_frame(b))) return false;
                }
    return true;
}

std::vector<SliceMap> enumerate_interlacing_families(const Partition& nu, int max_boxes) {
    Partition nc = conjugate(nu);
    int w = leg_hbar(nu) + max_boxes + 1;
    std::vector<SliceMap> out;
    SliceMap cur;
    auto rec = [&](auto&& self, int s, const Partition& prev, int budget) -> void {
        if (s > w) {
            if (prev.empty()) out.push_back(cur);
            return;
        }
        int tau = edge_value(nc, -s);
        bool primed = s % 2 == 0;
        std::vector<Partition> cands;
        if (tau > 0) cands = primed ? column_predecessors(prev) : row_predecessors(prev);
        else cands = primed ? column_successors(prev, budget) : row_successors(prev, budget);
        for (auto& c : cands) {
            if (c.size() > budget) continue;
            if (!c.empty()) cur[s] = c;
            self(self, s + 1, c, budget - c.size());
            cur.erase(s);
        }
    };
    rec(rec, -w, Partition{}, max_boxes);
    return out;
}

Series rpc_generating_function(const Partition& nu, int l, Frame frame, int cutoff) {
    Series z(4, cutoff);
    for (auto& fam : enumerate_interlacing_families(nu, cutoff)) {
        RestrictedConfig c{nu, l, frame, fam};
        Mono m{};
        for (auto& b : absolute_bricks(c)) ++m[color(b)];
        z.add_term(m, 1);
    }
    return z;
}

int mho(const EpsilonTable& t, int k) {
    int r = t.rho1() + t.rho2();
    if (k <= 0) {
        if (k % 2 == 0) return r - t.eps(1, -k / 2 - 1) - t.eps(2, -k / 2 - 1);
        return r - t.eps(1, -(k + 1) / 2) - t.eps(2, -(k + 1) / 2 - 1);
    }
    if (k % 2 == 0) return r - t.eps(3, k / 2) - t.eps(4, k / 2);
    return r - t.eps(3, (k + 1) / 2 - 1) - t.eps(4, (k + 1) / 2);
}

int mho(const Partition& nu, int k) { return mho(EpsilonTable(nu), k); }

}  // namespace dtv

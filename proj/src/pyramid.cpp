#include "dtv/pyramid.hpp"

#include <set>
#include <stdexcept>

namespace dtv {

static int sgn(int v) { return (v > 0) - (v < 0); }
static int odd_shift(int k) { return (k % 2 != 0) ? sgn(k) : 0; }

Point3 position(const Brick& b) {
    int along = b.k;                              // x-y (diagonal) or x+y (antidiagonal)
    int across = 2 * (b.i - b.j) + odd_shift(b.k);  // the other combination
    int z = 2 * (b.i + b.j) + std::abs(b.k);
    int sum = b.frame == Frame::diagonal ? across : along;
    int diff = b.frame == Frame::diagonal ? along : across;
    return {(sum + diff) / 2, (sum - diff) / 2, z};
}

Brick brick_at(const Point3& p, Frame frame) {
    int k = frame == Frame::diagonal ? p.x - p.y : p.x + p.y;
    int across = frame == Frame::diagonal ? p.x + p.y : p.x - p.y;
    int a = across - odd_shift(k);  // 2(i-j)
    int b = p.z - std::abs(k);      // 2(i+j)
    if ((a + b) % 4 != 0 || (b - a) % 4 != 0 || b < 0) throw std::invalid_argument("point is not a brick position");
    Brick r{frame, k, (a + b) / 4, (b - a) / 4};
    if (r.i < 0 || r.j < 0) throw std::invalid_argument("point is not a brick position");
    return r;
}

Brick convert_frame(const Brick& b) {
    return brick_at(position(b), b.frame == Frame::diagonal ? Frame::antidiagonal : Frame::diagonal);
}

Color diagonal_slice_color(int k) {
    static constexpr Color table[4] = {C0, CB, CC, CA};
    return table[mod(k, 4)];
}

Color color(const Brick& b) {
    return diagonal_slice_color(b.frame == Frame::diagonal ? b.k : convert_frame(b).k);
}

// relation between slices d and d+1
static bool pair_ok(int d, const Partition& left, const Partition& right) {
    if (d >= 0) return d % 2 == 0 ? succ(left, right) : succ_prime(left, right);
    int e = d + 1;  // e <= 0
    return e % 2 == 0 ? succ_prime(right, left) : succ(right, left);
}

static Partition get(const SliceMap& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? Partition{} : it->second;
}

bool chain_holds(const SliceMap& slices) {
    if (slices.empty()) return true;
    int lo = slices.begin()->first - 1, hi = slices.rbegin()->first;
    lo = std::min(lo, -1);
    hi = std::max(hi, 0);
    for (int d = lo; d <= hi; ++d)
        if (!pair_ok(d, get(slices, d), get(slices, d + 1))) return false;
    return true;
}

static SliceMap strip_empty(SliceMap m) {
    for (auto it = m.begin(); it != m.end();) it = it->second.empty() ? m.erase(it) : std::next(it);
    return m;
}

PyramidPartition::PyramidPartition(SliceMap diag) : diag_(strip_empty(std::move(diag))) {}

Partition PyramidPartition::slice(int k) const { return get(diag_, k); }

int PyramidPartition::brick_count() const {
    int n = 0;
    for (auto& [k, p] : diag_) n += p.size();
    return n;
}

static void slice_bricks(const SliceMap& m, Frame f, std::vector<Brick>& out) {
    for (auto& [k, p] : m)
        for (std::size_t i = 0; i < p.length(); ++i)
            for (int j = 0; j < p[i]; ++j) out.push_back({f, k, int(i), j});
}

std::vector<Brick> PyramidPartition::bricks() const {
    std::vector<Brick> out;
    slice_bricks(diag_, Frame::diagonal, out);
    return out;
}

bool validate(const PyramidPartition& p) { return chain_holds(p.slices()); }

// Groups bricks by slice; every group must be a Young diagram.
static SliceMap group_bricks(const std::vector<Brick>& bricks) {
    std::map<int, std::map<int, int>> rows;  // k -> row -> count
    std::set<Brick> have(bricks.begin(), bricks.end());
    for (auto& b : bricks) ++rows[b.k][b.i];
    SliceMap out;
    for (auto& [k, r] : rows) {
        std::vector<int> len;
        for (auto& [i, c] : r) {
            if (i != int(len.size())) throw std::invalid_argument("slice is not a Young diagram");
            len.push_back(c);
        }
        for (auto& b : bricks)
            if (b.k == k && b.j >= len[b.i]) throw std::invalid_argument("slice is not a Young diagram");
        if (!is_valid_rows(len)) throw std::invalid_argument("slice is not a Young diagram");
        out.emplace(k, Partition(len));
    }
    return out;
}

SliceMap antidiagonal_slices(const PyramidPartition& p) {
    if (!validate(p)) throw std::invalid_argument("not a pyramid partition");
    std::vector<Brick> conv;
    for (auto& b : p.bricks()) conv.push_back(convert_frame(b));
    return group_bricks(conv);
}

SliceMap frame_slices(const PyramidPartition& p, Frame f) {
    return f == Frame::diagonal ? p.slices() : antidiagonal_slices(p);
}

PyramidPartition from_frame_slices(const SliceMap& slices, Frame f) {
    if (f == Frame::diagonal) return PyramidPartition(slices);
    std::vector<Brick> bs;
    slice_bricks(slices, Frame::antidiagonal, bs);
    for (auto& b : bs) b = convert_frame(b);
    return PyramidPartition(group_bricks(bs));
}

std::vector<PyramidPartition> enumerate_pyramids(int max_bricks) {
    std::vector<PyramidPartition> out;
    std::set<SliceMap> level{SliceMap{}};
    for (int n = 0; n <= max_bricks; ++n) {
        for (auto& s : level) out.emplace_back(s);
        if (n == max_bricks) break;
        std::set<SliceMap> next;
        for (auto& s : level) {
            int lo = s.empty() ? 0 : std::min(s.begin()->first - 1, 0);
            int hi = s.empty() ? 0 : std::max(s.rbegin()->first + 1, 0);
            for (int k = lo; k <= hi; ++k) {
                Partition cur = get(s, k);
                for (std::size_t r = 0; r <= cur.length(); ++r) {
                    if (r > 0 && cur[r] >= cur[r - 1]) continue;
                    std::vector<int> rows = cur.rows();
                    if (r == rows.size()) rows.push_back(0);
                    ++rows[r];
                    Partition grown(rows);
                    if (!pair_ok(k - 1, get(s, k - 1), grown) || !pair_ok(k, grown, get(s, k + 1))) continue;
                    SliceMap t = s;
                    t[k] = grown;
                    next.insert(std::move(t));
                }
            }
        }
        level = std::move(next);
    }
    return out;
}

Mono color_weight(const PyramidPartition& p) {
    Mono m{};
    for (auto& [k, s] : p.slices()) m[diagonal_slice_color(k)] = int16_t(m[diagonal_slice_color(k)] + s.size());
    return m;
}

Series pyramid_generating_function(int cutoff) {
    Series z(4, cutoff);
    for (auto& p : enumerate_pyramids(cutoff)) z.add_term(color_weight(p), 1);
    return z;
}

}  // namespace dtv

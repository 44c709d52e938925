#include "dtv/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dtv {

bool is_valid_rows(const std::vector<int>& rows) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[j] < 0) return false;
        if (j + 1 < rows.size() && rows[j] < rows[j + 1]) return false;
    }
    return true;
}

Partition::Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    if (!is_valid_rows(rows_)) throw std::invalid_argument("rows are not weakly decreasing and nonnegative");
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
}

int Partition::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

Partition conjugate(const Partition& p) {
    std::vector<int> c(p.empty() ? 0 : p[0], 0);
    for (int r : p.rows())
        for (int i = 0; i < r; ++i) ++c[i];
    return Partition(std::move(c));
}

bool succ(const Partition& a, const Partition& b) {
    std::size_t n = std::max(a.length(), b.length()) + 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[j] < b[j]) return false;
        if (b[j] < a[j + 1]) return false;
    }
    return true;
}

bool succ_prime(const Partition& a, const Partition& b) { return succ(conjugate(a), conjugate(b)); }

bool interlaces(const Partition& a, const Partition& b, InterlaceKind kind) {
    const Partition& big = kind.tau < 0 ? a : b;
    const Partition& small = kind.tau < 0 ? b : a;
    return kind.tag == InterlaceTag::row ? succ(big, small) : succ_prime(big, small);
}

std::vector<Partition> row_predecessors(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<int> cur(lam.length(), 0);
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == lam.length()) {
            out.emplace_back(cur);
            return;
        }
        for (int v = lam[j + 1]; v <= lam[j]; ++v) {
            cur[j] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Partition> row_successors(const Partition& lam, int max_size) {
    std::vector<Partition> out;
    std::size_t len = lam.length() + 1;
    std::vector<int> cur(len, 0);
    // rows beyond j contribute at least their lower bounds
    std::vector<int> tail(len + 1, 0);
    for (std::size_t j = len; j-- > 0;) tail[j] = tail[j + 1] + lam[j];
    auto rec = [&](auto&& self, std::size_t j, int used) -> void {
        if (j == len) {
            out.emplace_back(cur);
            return;
        }
        int hi = j == 0 ? max_size - tail[1] : lam[j - 1];
        for (int v = lam[j]; v <= hi && used + v + tail[j + 1] <= max_size; ++v) {
            cur[j] = v;
            self(self, j + 1, used + v);
        }
    };
    if (lam.size() <= max_size) rec(rec, 0, 0);
    return out;
}

std::vector<Partition> column_predecessors(const Partition& lam) {
    auto v = row_predecessors(conjugate(lam));
    for (auto& p : v) p = conjugate(p);
    return v;
}

std::vector<Partition> column_successors(const Partition& lam, int max_size) {
    auto v = row_successors(conjugate(lam), max_size);
    for (auto& p : v) p = conjugate(p);
    return v;
}

int edge_value(const Partition& nu, long t) {
    // t = nu_j - j - 1 is strictly decreasing in j
    for (long j = 0;; ++j) {
        long s = long(nu[j]) - j - 1;
        if (s == t) return 1;
        if (s < t) return -1;
    }
}

int diagonal_count(const Partition& nu, int k) {
    int c = 0;
    for (std::size_t j = 0; j < nu.length(); ++j) {
        long i = long(j) + k;
        if (i >= 0 && i < nu[j]) ++c;
    }
    return c;
}

int residue_count(const Partition& nu, int k, int n) {
    if (n <= 0) throw std::invalid_argument("residue_count needs n >= 1");
    int c = 0;
    for (std::size_t j = 0; j < nu.length(); ++j)
        for (int i = 0; i < nu[j]; ++i)
            if (mod(long(i) - long(j) - k, n) == 0) ++c;
    return c;
}

int hook_color_count(const Partition& nu, int i, int j, int k, int n) {
    if (!nu.contains(i, j)) throw std::invalid_argument("cell is not in the partition");
    if (n <= 0) throw std::invalid_argument("hook_color_count needs n >= 1");
    int c = 0;
    for (int a = i; a < nu[j]; ++a)
        if (mod(long(a) - j - k, n) == 0) ++c;
    for (int b = j + 1; nu.contains(i, b); ++b)
        if (mod(long(i) - b - k, n) == 0) ++c;
    return c;
}

long renormalization_exponent(const Partition& lam, int k, int n) {
    long s = 0;
    for (std::size_t j = 0; j < lam.length(); ++j)
        for (int i = 0; i < lam[j]; ++i) s += floor_div(i + k, n);
    return s;
}

std::optional<int> is_staircase(const Partition& nu) {
    int m = int(nu.length());
    for (int j = 0; j < m; ++j)
        if (nu[j] != m - j) return std::nullopt;
    return m;
}

Partition staircase(int m) {
    std::vector<int> r;
    for (int v = m; v >= 1; --v) r.push_back(v);
    return Partition(std::move(r));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(left, cap); v >= 1; --v) {
            cur.push_back(v);
            self(self, left - v, v);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto v = partitions_of(k);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> rows;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) {
            if (text.find_first_not_of(" \t") == std::string::npos) break;
            throw std::invalid_argument("empty entry in partition '" + text + "'");
        }
        std::size_t pos = 0;
        int v = std::stoi(tok.substr(b), &pos);
        if (tok.find_first_not_of(" \t", b + pos) != std::string::npos || v <= 0)
            throw std::invalid_argument("bad partition entry '" + tok + "'");
        rows.push_back(v);
    }
    if (!is_valid_rows(rows)) throw std::invalid_argument("partition '" + text + "' is not weakly decreasing");
    return Partition(rows);
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t j = 0; j < p.length(); ++j) {
        if (j) s += ",";
        s += std::to_string(p[j]);
    }
    return s + ")";
}

}  // namespace dtv

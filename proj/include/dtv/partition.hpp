#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dtv {

// Cells are pairs (i,j) with (i,j) in p iff i < p[j]; i runs along a row,
// j indexes rows.  Every module uses this convention.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> rows);
    explicit Partition(std::vector<int> rows);

    int operator[](std::size_t j) const { return j < rows_.size() ? rows_[j] : 0; }
    std::size_t length() const { return rows_.size(); }
    int size() const;
    bool empty() const { return rows_.empty(); }
    const std::vector<int>& rows() const { return rows_; }
    bool contains(int i, int j) const { return i >= 0 && j >= 0 && i < (*this)[j]; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> rows_;
};

Partition conjugate(const Partition& p);
bool is_valid_rows(const std::vector<int>& rows);

// a > b in the row sense: a0 >= b0 >= a1 >= b1 >= ...
bool succ(const Partition& a, const Partition& b);
// a' > b'
bool succ_prime(const Partition& a, const Partition& b);

enum class InterlaceTag { row, column };
struct InterlaceKind {
    InterlaceTag tag = InterlaceTag::row;
    int tau = -1;  // +1 means a < b, -1 means a > b
};
bool interlaces(const Partition& a, const Partition& b, InterlaceKind kind);

// All mu with mu < lam (row interlacing).
std::vector<Partition> row_predecessors(const Partition& lam);
// All mu with mu > lam and |mu| <= max_size.
std::vector<Partition> row_successors(const Partition& lam, int max_size);
std::vector<Partition> column_predecessors(const Partition& lam);
std::vector<Partition> column_successors(const Partition& lam, int max_size);

// +1 iff t = nu_j - j - 1 for some j >= 0.
int edge_value(const Partition& nu, long t);

int diagonal_count(const Partition& nu, int k);
int residue_count(const Partition& nu, int k, int n);
int hook_color_count(const Partition& nu, int i, int j, int k, int n);
long renormalization_exponent(const Partition& lam, int k, int n);
std::optional<int> is_staircase(const Partition& nu);
Partition staircase(int m);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);

Partition parse_partition(const std::string& text);
std::string to_string(const Partition& p);

inline int mod(long a, long n) { long r = a % n; return int(r < 0 ? r + n : r); }
inline long floor_div(long a, long n) { return (a - mod(a, n)) / n; }

}  // namespace dtv

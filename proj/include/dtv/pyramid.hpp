#pragma once

#include <array>
#include <map>
#include <vector>

#include "dtv/partition.hpp"
#include "dtv/qseries.hpp"

namespace dtv {

// Color variable slots shared by the Z2xZ2 code: q0, qa, qb, qc.
enum Color : int { C0 = 0, CA = 1, CB = 2, CC = 3 };
inline const std::vector<std::string>& z2z2_names() {
    static const std::vector<std::string> n{"q0", "qa", "qb", "qc"};
    return n;
}

enum class Frame { diagonal, antidiagonal };

// Inside a slice partition, cell (i,j) is row i, column j: present iff j < slice[i].
struct Brick {
    Frame frame = Frame::diagonal;
    int k = 0;
    int i = 0;
    int j = 0;
    auto operator<=>(const Brick&) const = default;
};

struct Point3 {
    int x, y, z;
    auto operator<=>(const Point3&) const = default;
};

Point3 position(const Brick& b);
Brick brick_at(const Point3& p, Frame frame);
Brick convert_frame(const Brick& b);
Color color(const Brick& b);
Color diagonal_slice_color(int k);

using SliceMap = std::map<int, Partition>;

// ... s_{-2} < s_{-1} <' s_0 > s_1 >' s_2 > s_3 >' ...
// Shared by the diagonal and antidiagonal families.
bool chain_holds(const SliceMap& slices);

class PyramidPartition {
public:
    PyramidPartition() = default;
    explicit PyramidPartition(SliceMap diag);

    const SliceMap& slices() const { return diag_; }
    Partition slice(int k) const;
    int brick_count() const;
    std::vector<Brick> bricks() const;  // diagonal frame
    auto operator<=>(const PyramidPartition&) const = default;

private:
    SliceMap diag_;  // only nonempty slices stored
};

bool validate(const PyramidPartition& p);
// groups bricks by antidiagonal address; throws if p is invalid
SliceMap antidiagonal_slices(const PyramidPartition& p);
// slices of p in the given frame
SliceMap frame_slices(const PyramidPartition& p, Frame f);
// builds a pyramid from slices given in either frame (no validation)
PyramidPartition from_frame_slices(const SliceMap& slices, Frame f);
std::vector<PyramidPartition> enumerate_pyramids(int max_bricks);
Mono color_weight(const PyramidPartition& p);
Series pyramid_generating_function(int cutoff);

}  // namespace dtv

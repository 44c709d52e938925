#pragma once

#include <utility>
#include <vector>

#include "dtv/partition.hpp"
#include "dtv/pyramid.hpp"
#include "dtv/qseries.hpp"

namespace dtv {

class EpsilonTable {
public:
    explicit EpsilonTable(const Partition& nu);

    const Partition& base() const { return nu_; }
    // which in 1..4; zero below the domain start
    int eps(int which, long t) const;
    int eps_hat(int which, long t) const;  // rho - eps
    int eps_inf(int which) const { return eps(which, stab_); }
    int rho1() const { return rho1_; }
    int rho2() const { return rho2_; }
    int stab() const { return stab_; }

private:
    Partition nu_;
    Partition conj_;
    std::vector<int> tab_[4];
    int rho1_ = 0, rho2_ = 0, stab_ = 0;
};

struct RegionSpec {
    Frame frame;
    int k;
    int i_min;
    int j_min;
    int shift;
};

RegionSpec region(const EpsilonTable& t, int l, Frame frame, int k);
RegionSpec region(const Partition& nu, int l, Frame frame, int k);

struct RestrictedConfig {
    Partition leg;
    int shift = 0;
    Frame frame = Frame::antidiagonal;
    SliceMap slices;  // re-based at the region corners, empty slices dropped
};

RestrictedConfig restrict_config(const PyramidPartition& p, const Partition& nu, int l, Frame frame);
// Absolute bricks (in the configuration's frame) of a restricted configuration.
std::vector<Brick> absolute_bricks(const RestrictedConfig& c);

enum class InterlaceType { first, second };
bool check_type_interlacing(const SliceMap& slices, const Partition& nu, InterlaceType kind);

PyramidPartition realize(const SliceMap& slices, const Partition& nu, int l, Frame frame);

bool region_complement_equal(const Partition& nu, int l, int window);

// Second-kind nu-interlacing families with at most max_boxes boxes in total.
std::vector<SliceMap> enumerate_interlacing_families(const Partition& nu, int max_boxes);

Series rpc_generating_function(const Partition& nu, int l, Frame frame, int cutoff);

int mho(const Partition& nu, int k);
int mho(const EpsilonTable& t, int k);

}  // namespace dtv
